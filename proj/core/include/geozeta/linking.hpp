#pragma once

#include <map>

#include "geozeta/complex.hpp"
#include "geozeta/dual.hpp"

namespace geozeta {

/// η(z) = Σ_c ε_c m_c z^{|c|} for knots κ₁ (base) and κ₂ (dual), n = 3.
struct EtaEvaluation {
  enum class Method { partial_sum, exact_solve };

  Rational z;
  Rational value;
  Method method = Method::exact_solve;
  int terms = 0;  // L for partial sums
  std::map<int, Rational> per_length;  // partial sums only
};

/// Solves (1/z - T) x = ∂⋆κ₁ and returns ⟨x, ⋆κ₂⟩. At z = 1/(N+2) the
/// system is singular and the pseudo-inverse of Δ_{n-1} = (N+2) - T is used.
/// Throws SingularSystemError when 1/z is an eigenvalue of T elsewhere.
EtaEvaluation eta_exact(const DualComplex& d, const Chain& k1, const Chain& k2, const Rational& z);

/// ⟨T^{k-1} ∂⋆κ₁, ⋆κ₂⟩ for k = 1..max_len, by matrix powers.
std::map<int, Rational> eta_coefficients(const DualComplex& d, const Chain& k1, const Chain& k2, int max_len);

/// Σ_{k<=L} z^k a_k, with the coefficients a_k computed both by orthogeodesic
/// enumeration and by matrix powers. Throws InternalMismatchError if they differ.
EtaEvaluation eta_partial_sum(const DualComplex& d, const Chain& k1, const Chain& k2, const Rational& z, int L);

/// Upper bound for |η(z) - partial(L)|: C (|z|B)^{L+1} / (1 - |z|B) with
/// B the row-sum bound of T and C = ‖∂⋆κ₁‖_∞ ‖⋆κ₂‖_1 / B. Requires |z|B < 1.
Rational eta_tail_bound(const DualComplex& d, const Chain& k1, const Chain& k2, const Rational& z, int L);

}  // namespace geozeta

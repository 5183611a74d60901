#pragma once

#include <vector>

#include "geozeta/complex.hpp"
#include "geozeta/dual.hpp"
#include "geozeta/exact_linalg.hpp"

namespace geozeta {

/// b_k = c_k - rank ∂_k - rank ∂_{k+1}, over Q.
int betti(const PolyComplex& x, int k);
std::vector<int> betti_numbers(const PolyComplex& x);

/// A chain split as exact + coexact + harmonic (im ∂ ⊕ im ∂⋆ ⊕ ker Δ).
struct HodgeParts {
  Chain exact;
  Chain coexact;
  Chain harmonic;
};

/// Exact Hodge theory in one degree: the Laplacian, the projector onto its
/// kernel and the pseudo-inverse K.
class HodgeSolver {
 public:
  HodgeSolver(const PolyComplex& x, int k);

  int degree() const noexcept { return k_; }
  std::size_t harmonic_dimension() const noexcept { return inverse_.kernel_dimension(); }

  Chain harmonic(const Chain& v) const;
  /// K v: the unique x ⊥ ker Δ with Δ x = v - harmonic(v).
  Chain pseudo_inverse(const Chain& v) const;
  HodgeParts decompose(const Chain& v) const;

 private:
  void check_degree(const Chain& v) const;

  const PolyComplex* x_;
  int k_;
  SymmetricPseudoInverse inverse_;
};

Chain pseudo_inverse_apply(const PolyComplex& x, int k, const Chain& v);

/// Some σ with ∂σ = κ over Q. Throws NotNullHomologousError.
Chain bounding_chain(const PolyComplex& x, const Chain& kappa);
bool is_null_homologous(const PolyComplex& x, const Chain& kappa);

/// lk(κ₁, κ₂) = ⟨σ₁, ⋆κ₂⟩ with ∂σ₁ = κ₁: the algebraic intersection number of
/// a rational bounding chain with the dual knot. κ₁ is a base 1-chain and κ₂
/// a dual 1-chain; both must bound over Q. Requires n = 3.
Rational linking_oracle(const DualComplex& d, const Chain& k1, const Chain& k2);

/// The same number through the Hodge decomposition: ⟨∂⋆ K κ₁, ⋆κ₂⟩.
Rational linking_hodge(const DualComplex& d, const Chain& k1, const Chain& k2);

/// Throws unless n = 3, κ₁ bounds in the base and κ₂ bounds in the dual.
void require_linking_input(const DualComplex& d, const Chain& k1, const Chain& k2);

}  // namespace geozeta

#pragma once

#include <vector>

#include "geozeta/arith.hpp"
#include "geozeta/complex.hpp"
#include "geozeta/spectral.hpp"

namespace geozeta {

/// det(Id - zT) as an integer polynomial, constant term first.
class ZetaPolynomial {
 public:
  ZetaPolynomial() = default;
  explicit ZetaPolynomial(std::vector<Integer> coefficients);

  const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }
  /// True degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  Integer coefficient(int k) const;
  Rational operator()(const Rational& z) const;

  friend bool operator==(const ZetaPolynomial&, const ZetaPolynomial&) = default;

 private:
  std::vector<Integer> coefficients_;  // no trailing zeros
};

/// Exact reversed characteristic polynomial by Faddeev-LeVerrier; every
/// division in the recursion is exact over the integers.
ZetaPolynomial zeta_polynomial(const TransferOperator& t);
ZetaPolynomial zeta_polynomial(const IntMatrix& t);

/// Multiplicity of z0 as a root. Throws for the zero polynomial.
int vanishing_order(const ZetaPolynomial& p, const Rational& z0);

/// Largest truncation order accepted by zeta_from_geodesics.
inline constexpr int kMaxEulerProductOrder = 12;

/// ∏_{primitive γ, |γ| <= max_order} (1 - ε_γ z^{|γ|}) truncated after
/// z^{max_order}; coefficients 0..max_order. Uses geodesic enumeration only.
std::vector<Integer> zeta_from_geodesics(const PolyComplex& x, int max_order);

/// Coefficients 0..order of -z ζ'(z)/ζ(z) as a power series.
std::vector<Integer> log_derivative_series(const ZetaPolynomial& p, int order);

}  // namespace geozeta

#include "geozeta/zeta.hpp"

#include "geozeta/error.hpp"
#include "geozeta/geodesics.hpp"

namespace geozeta {

ZetaPolynomial::ZetaPolynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
}

Integer ZetaPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[k];
}

Rational ZetaPolynomial::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + Rational(*it);
  return acc;
}

ZetaPolynomial zeta_polynomial(const IntMatrix& t) {
  if (!t.square()) throw Error("zeta_polynomial: matrix must be square");
  const std::size_t n = t.rows();
  // det(λ - T) = Σ a_k λ^{n-k}, hence det(Id - zT) = Σ a_k z^k.
  std::vector<Integer> a(n + 1);
  a[0] = 1;
  // M_1 = Id, a_k = -tr(T M_k)/k, M_{k+1} = T M_k + a_k Id.
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix tm = t * m;
    a[k] = -tm.trace() / Integer(static_cast<long>(k));
    for (std::size_t i = 0; i < n; ++i) tm(i, i) += a[k];
    m = std::move(tm);
  }
  return ZetaPolynomial(std::move(a));
}

ZetaPolynomial zeta_polynomial(const TransferOperator& t) { return zeta_polynomial(t.matrix()); }

int vanishing_order(const ZetaPolynomial& p, const Rational& z0) {
  if (p.degree() < 0) throw Error("vanishing_order: zero polynomial");
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  int order = 0;
  while (c.size() > 1) {
    // Synthetic division by (z - z0), highest degree first.
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = carry * z0 + c[i];
      q[i - 1] = carry;
    }
    const Rational remainder = carry * z0 + c[0];
    if (sgn(remainder) != 0) break;
    c = std::move(q);
    ++order;
  }
  return order;
}

namespace {

using Series = std::vector<Integer>;

Series truncated_product(const Series& a, const Series& b, int order) {
  Series out(order + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::vector<Integer> zeta_from_geodesics(const PolyComplex& x, int max_order) {
  if (max_order < 0 || max_order > kMaxEulerProductOrder)
    throw Error("zeta_from_geodesics: order must lie in 0.." + std::to_string(kMaxEulerProductOrder));
  Series product(max_order + 1);
  product[0] = 1;
  for (const auto& g : closed_geodesics(x, max_order)) {
    if (!g.primitive()) continue;
    Series factor(g.length() + 1);
    factor[0] = 1;
    factor[g.length()] = -g.sign();
    product = truncated_product(product, factor, max_order);
  }
  return product;
}

std::vector<Integer> log_derivative_series(const ZetaPolynomial& p, int order) {
  if (p.coefficient(0) != 1) throw Error("log_derivative_series: constant term must be 1");
  // 1/ζ as a power series; integral because ζ(0) = 1.
  Series inverse(order + 1);
  inverse[0] = 1;
  for (int k = 1; k <= order; ++k) {
    Integer acc = 0;
    for (int j = 1; j <= k; ++j) acc += p.coefficient(j) * inverse[k - j];
    inverse[k] = -acc;
  }
  Series z_derivative(order + 1);
  for (int k = 0; k <= order; ++k) z_derivative[k] = -Integer(k) * p.coefficient(k);
  return truncated_product(z_derivative, inverse, order);
}

}  // namespace geozeta

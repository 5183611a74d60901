#include "geozeta/dual.hpp"

#include "geozeta/error.hpp"

namespace geozeta {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

int DualComplex::star_sign(int k) const {
  if (k < 0 || k > dim()) throw std::out_of_range("star: degree out of range");
  return 1;
}

int DualComplex::star_back_sign(int j) const {
  if (j < 0 || j > dim()) throw std::out_of_range("star: degree out of range");
  const int k = dim() - j;
  return parity_sign(static_cast<long>(k) * (dim() - k));
}

IntMatrix DualComplex::star_matrix(int k) const {
  const int n = base_->cell_count(k);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = star_sign(k);
  return m;
}

IntMatrix DualComplex::star_back_matrix(int j) const {
  const int n = dual_->cell_count(j);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = star_back_sign(j);
  return m;
}

IntMatrix adjoint_boundary(const PolyComplex& x, int k) {
  if (k < 1 || k > x.dim()) throw std::out_of_range("adjoint_boundary: degree out of range");
  return x.boundary_matrix(k).transpose();
}

bool check_star_identities(const DualComplex& d) {
  const int n = d.dim();
  for (int k = 0; k <= n; ++k) {
    // ⋆⋆ on base degree k and on dual degree n-k.
    const Integer expected = parity_sign(static_cast<long>(k) * (n - k));
    const IntMatrix there_and_back = d.star_back_matrix(n - k) * d.star_matrix(k);
    if (!(there_and_back == IntMatrix::identity(d.base().cell_count(k)) * expected)) return false;
  }
  for (int k = 0; k < n; ++k) {
    // ∂⋆ on C_k(base) versus (-1)^{n(k+1)} ⋆ ∂^∨ ⋆, where ∂^∨ acts on dual degree n-k.
    const IntMatrix lhs = adjoint_boundary(d.base(), k + 1);
    IntMatrix rhs = d.star_back_matrix(n - k - 1) * d.dual().boundary_matrix(n - k) * d.star_matrix(k);
    rhs *= Integer(parity_sign(static_cast<long>(n) * (k + 1)));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

DualComplex build_dual(const PolyComplex& base) {
  require_valid(base);
  const int n = base.dim();
  std::vector<int> counts(n + 1);
  for (int j = 0; j <= n; ++j) counts[j] = base.cell_count(n - j);

  std::vector<std::vector<PolyComplex::BoundaryList>> bd(n + 1);
  for (int j = 1; j <= n; ++j) {
    const int k = n - j;  // dual j-cells are base k-cells
    const int sign = parity_sign(k + 1);
    bd[j].resize(counts[j]);
    for (int c = 0; c < counts[j]; ++c)
      for (const auto& inc : base.coboundary(k, c)) bd[j][c].push_back({inc.face, sign * inc.sign});
  }

  auto dual = std::make_shared<const PolyComplex>(n, std::move(counts), std::move(bd));
  const auto report = validate(*dual);
  if (!report.passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) throw Error("dual complex fails validation (" + c.name + ")");
  }
  DualComplex d(std::make_shared<const PolyComplex>(base), std::move(dual));
  if (!check_star_identities(d)) {
    throw Error("no consistent star sign assignment exists for this complex");
  }
  return d;
}

Chain star(const DualComplex& d, const Chain& base_chain) {
  const int k = base_chain.degree();
  if (k < 0 || k > d.dim()) throw std::out_of_range("star: degree out of range");
  for (const auto& [cell, c] : base_chain.terms()) {
    if (cell >= d.base().cell_count(k)) throw std::out_of_range("star: chain does not live on this complex");
  }
  Chain out = base_chain * Rational(d.star_sign(k));
  Chain relabelled(d.dim() - k);
  for (const auto& [cell, c] : out.terms()) relabelled.add(cell, c);
  return relabelled;
}

Chain star_back(const DualComplex& d, const Chain& dual_chain) {
  const int j = dual_chain.degree();
  if (j < 0 || j > d.dim()) throw std::out_of_range("star: degree out of range");
  for (const auto& [cell, c] : dual_chain.terms()) {
    if (cell >= d.dual().cell_count(j)) throw std::out_of_range("star: chain does not live on the dual complex");
  }
  Chain out(d.dim() - j);
  for (const auto& [cell, c] : dual_chain.terms()) out.add(cell, c * d.star_back_sign(j));
  return out;
}

std::string emit_dual(const DualComplex& d) {
  return emit_complex(d.dual(), {"dual-of " + complex_fingerprint(d.base())});
}

}  // namespace geozeta

#include "geozeta/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace geozeta {

IntMatrix laplacian(const PolyComplex& x, int k) {
  if (k < 0 || k > x.dim()) throw std::out_of_range("laplacian: degree out of range");
  const IntMatrix up = x.boundary_matrix(k + 1);  // c_k x c_{k+1}
  const IntMatrix down = x.boundary_matrix(k);    // c_{k-1} x c_k
  return up * up.transpose() + down.transpose() * down;
}

TransferOperator::TransferOperator(IntMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.square()) throw std::invalid_argument("transfer operator must be square");
  steps_.resize(matrix_.rows());
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      if (sgn(matrix_(i, j)) != 0) steps_[i].push_back({static_cast<int>(j), static_cast<int>(matrix_(i, j).get_si())});
}

int TransferOperator::entry(int from, int to) const {
  return static_cast<int>(matrix_(from, to).get_si());
}

TransferOperator transfer_operator(const PolyComplex& x) {
  require_valid(x);
  const int k = x.dim() - 1;
  const int c = x.cell_count(k);
  IntMatrix m(c, c);
  auto share_top = [&](int s, int t) {
    for (const auto& a : x.coboundary(k, s))
      for (const auto& b : x.coboundary(k, t))
        if (a.face == b.face) return true;
    return false;
  };
  for (int s = 0; s < c; ++s) {
    for (const auto& nu : x.boundary(k, s)) {
      for (const auto& other : x.coboundary(k - 1, nu.face)) {
        const int t = other.face;
        if (t == s || share_top(s, t)) continue;
        m(s, t) = (nu.sign != other.sign) ? 1 : -1;
      }
    }
  }
  return TransferOperator(std::move(m));
}

std::vector<std::pair<int, int>> laplacian_identity_mismatches(const PolyComplex& x) {
  const int n_reg = require_valid(x);
  const int k = x.dim() - 1;
  const IntMatrix sum = laplacian(x, k) + transfer_operator(x).matrix();
  std::vector<std::pair<int, int>> bad;
  for (std::size_t i = 0; i < sum.rows(); ++i) {
    for (std::size_t j = i; j < sum.cols(); ++j) {
      const Integer expected = (i == j) ? n_reg + 2 : 0;
      if (sum(i, j) != expected || sum(j, i) != expected) bad.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return bad;
}

bool check_laplacian_identity(const PolyComplex& x) { return laplacian_identity_mismatches(x).empty(); }

Rational spectral_radius_bound(const TransferOperator& t) {
  Integer best = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Integer row = 0;
    for (const auto& v : t.matrix().row(i)) row += abs(v);
    best = std::max(best, row);
  }
  return Rational(best);
}

}  // namespace geozeta

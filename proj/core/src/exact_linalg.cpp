#include "geozeta/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

#include "geozeta/error.hpp"

namespace geozeta {

namespace {

// Bareiss elimination in place. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss(IntMatrix& m, int& sign) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  int sign = 1;
  return bareiss(m, sign);
}

Integer determinant(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  if (bareiss(m, sign) < a.rows()) return 0;
  Integer det = m(a.rows() - 1, a.cols() - 1);
  return sign < 0 ? Integer(-det) : det;
}

RowEchelon row_reduce(const RatMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  RowEchelon out{a, RatMatrix::identity(rows), {}};
  RatMatrix& m = out.reduced;
  RatMatrix& t = out.transform;
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
      for (std::size_t j = 0; j < rows; ++j) std::swap(t(pivot, j), t(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t j = 0; j < rows; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
      for (std::size_t j = 0; j < rows; ++j)
        if (sgn(t(r, j)) != 0) t(i, j) -= factor * t(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::optional<RatVector> back_substitute(const RowEchelon& e, const RatVector& b, std::size_t cols) {
  const RatVector y = e.transform * b;
  for (std::size_t i = e.rank(); i < y.size(); ++i)
    if (sgn(y[i]) != 0) return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivot_columns[i]] = y[i];
  return x;
}

}  // namespace

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong size");
  return back_substitute(row_reduce(a), b, a.cols());
}

RatVector solve_regular(const RatMatrix& a, const RatVector& b) {
  if (!a.square()) throw std::invalid_argument("solve_regular: matrix is not square");
  const RowEchelon e = row_reduce(a);
  if (e.rank() < a.rows()) throw SingularSystemError("linear system is singular");
  return *back_substitute(e, b, a.cols());
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

SymmetricPseudoInverse::SymmetricPseudoInverse(const RatMatrix& a) : echelon_(row_reduce(a)) {
  if (!a.is_symmetric()) throw std::invalid_argument("pseudo-inverse: matrix is not symmetric");
  // Gram-Schmidt without normalisation keeps everything rational.
  for (auto v : nullspace(a)) {
    for (std::size_t i = 0; i < kernel_.size(); ++i) {
      const Rational c = dot(v, kernel_[i]) / kernel_norms_[i];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * kernel_[i][j];
    }
    kernel_norms_.push_back(dot(v, v));
    kernel_.push_back(std::move(v));
  }
}

RatVector SymmetricPseudoInverse::project_kernel(const RatVector& v) const {
  RatVector p(v.size());
  for (std::size_t i = 0; i < kernel_.size(); ++i) {
    const Rational c = dot(v, kernel_[i]) / kernel_norms_[i];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) p[j] += c * kernel_[i][j];
  }
  return p;
}

bool SymmetricPseudoInverse::in_range(const RatVector& v) const {
  for (const auto& k : kernel_)
    if (sgn(dot(v, k)) != 0) return false;
  return true;
}

RatVector SymmetricPseudoInverse::apply(const RatVector& v) const {
  if (v.size() != size()) throw std::invalid_argument("pseudo-inverse: vector has wrong size");
  RatVector rhs = v;
  const RatVector h = project_kernel(v);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= h[i];
  auto x = back_substitute(echelon_, rhs, size());
  if (!x) throw InternalMismatchError("pseudo-inverse: range component is not solvable");
  const RatVector hx = project_kernel(*x);
  for (std::size_t i = 0; i < x->size(); ++i) (*x)[i] -= hx[i];
  return *x;
}

}  // namespace geozeta

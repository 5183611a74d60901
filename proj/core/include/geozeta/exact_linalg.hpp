#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "geozeta/arith.hpp"
#include "geozeta/matrix.hpp"

namespace geozeta {

using RatVector = std::vector<Rational>;

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& a);

/// Determinant by Bareiss elimination; every intermediate stays integral.
Integer determinant(const IntMatrix& a);

/// Reduced row echelon form together with the invertible transform that
/// produced it: `transform * input == reduced`.
struct RowEchelon {
  RatMatrix reduced;
  RatMatrix transform;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

RowEchelon row_reduce(const RatMatrix& a);

/// Basis of {x : a x = 0}, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& a);

/// Some solution of a x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

RatVector solve_regular(const RatMatrix& a, const RatVector& b);

Rational dot(const RatVector& a, const RatVector& b);

/// Moore-Penrose pseudo-inverse of a symmetric rational matrix, applied
/// exactly. The kernel is spanned by an exact orthogonal basis, so the
/// projector onto it does not depend on how that basis was picked.
class SymmetricPseudoInverse {
 public:
  explicit SymmetricPseudoInverse(const RatMatrix& a);

  std::size_t size() const noexcept { return echelon_.reduced.rows(); }
  std::size_t kernel_dimension() const noexcept { return kernel_.size(); }
  const std::vector<RatVector>& kernel_basis() const noexcept { return kernel_; }

  /// Orthogonal projection onto ker a.
  RatVector project_kernel(const RatVector& v) const;

  /// The unique x orthogonal to ker a with a x = v - project_kernel(v).
  RatVector apply(const RatVector& v) const;

  /// True when v is orthogonal to ker a, i.e. a x = v is solvable.
  bool in_range(const RatVector& v) const;

 private:
  RowEchelon echelon_;
  std::vector<RatVector> kernel_;       // mutually orthogonal
  std::vector<Rational> kernel_norms_;  // squared norms of kernel_
};

}  // namespace geozeta

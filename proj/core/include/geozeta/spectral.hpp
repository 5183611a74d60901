#pragma once

#include <utility>
#include <vector>

#include "geozeta/complex.hpp"
#include "geozeta/matrix.hpp"

namespace geozeta {

/// Δ_k = ∂∂⋆ + ∂⋆∂ on degree k, as a symmetric integer matrix.
IntMatrix laplacian(const PolyComplex& x, int k);

/// One admissible neighbour of a codimension-1 cell: the signed step of the
/// geodesic random walk.
struct Step {
  int to = 0;
  int sign = 1;  // +1 iff the two cells have compatible orientations
};

/// Signed transfer operator on the (n-1)-cells.
///
/// Built directly from admissibility (a shared (n-2)-face, no shared n-cell)
/// and compatibility (the shared face carries opposite signs), never from the
/// Laplacian.
class TransferOperator {
 public:
  TransferOperator() = default;
  explicit TransferOperator(IntMatrix m);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return matrix_.rows(); }
  /// Nonzero entries of row i in column order.
  const std::vector<Step>& steps(int cell) const { return steps_.at(cell); }
  int entry(int from, int to) const;

 private:
  IntMatrix matrix_;
  std::vector<std::vector<Step>> steps_;
};

/// Requires a validated complex.
TransferOperator transfer_operator(const PolyComplex& x);

/// True iff Δ_{n-1} + T = (N+2) Id entrywise.
bool check_laplacian_identity(const PolyComplex& x);

/// Entries (i, j), i <= j, where Δ_{n-1} + T differs from (N+2) Id.
std::vector<std::pair<int, int>> laplacian_identity_mismatches(const PolyComplex& x);

/// Maximum absolute row sum; an upper bound for the spectral radius.
Rational spectral_radius_bound(const TransferOperator& t);

}  // namespace geozeta

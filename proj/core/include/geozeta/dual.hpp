#pragma once

#include <memory>
#include <string>
#include <vector>

#include "geozeta/complex.hpp"
#include "geozeta/matrix.hpp"

namespace geozeta {

/// Combinatorial dual of a validated complex together with the Hodge star.
///
/// The dual (n-k)-cell of a base k-cell σ has index σ, and its faces are the
/// duals of the (k+1)-cells containing σ. Signs:
///   base -> dual star:  ⋆σ = σ^∨                       (all +1)
///   dual -> base star:  ⋆σ^∨ = (-1)^{k(n-k)} σ
///   dual boundary:      ∂^∨ σ^∨ = (-1)^{k+1} Σ_τ ⟨∂τ, σ⟩ τ^∨
/// With these choices ⋆⋆ = (-1)^{k(n-k)} and ∂⋆ = (-1)^{n(k+1)} ⋆ ∂^∨ ⋆ hold
/// as exact matrix identities; build_dual() re-checks both.
class DualComplex {
 public:
  const PolyComplex& base() const noexcept { return *base_; }
  const PolyComplex& dual() const noexcept { return *dual_; }
  int dim() const noexcept { return base_->dim(); }

  /// Sign applied by the base -> dual star on base degree k.
  int star_sign(int k) const;
  /// Sign applied by the dual -> base star on dual degree j.
  int star_back_sign(int j) const;

  /// Diagonal matrix of ⋆ : C_k(base) -> C_{n-k}(dual).
  IntMatrix star_matrix(int k) const;
  /// Diagonal matrix of ⋆ : C_j(dual) -> C_{n-j}(base).
  IntMatrix star_back_matrix(int j) const;

 private:
  friend DualComplex build_dual(const PolyComplex& base);
  DualComplex(std::shared_ptr<const PolyComplex> base, std::shared_ptr<const PolyComplex> dual)
      : base_(std::move(base)), dual_(std::move(dual)) {}

  std::shared_ptr<const PolyComplex> base_;
  std::shared_ptr<const PolyComplex> dual_;
};

/// Throws geozeta::Error if `base` is not valid, if the dual fails
/// validation, or if the sign identities fail (non-manifold input).
DualComplex build_dual(const PolyComplex& base);

/// Base k-chain -> dual (n-k)-chain.
Chain star(const DualComplex& d, const Chain& base_chain);
/// Dual j-chain -> base (n-j)-chain.
Chain star_back(const DualComplex& d, const Chain& dual_chain);

/// ∂⋆ : C_{k-1} -> C_k as a c_k x c_{k-1} matrix (the transpose of ∂_k).
IntMatrix adjoint_boundary(const PolyComplex& x, int k);

/// Both star identities checked entrywise for every degree.
bool check_star_identities(const DualComplex& d);

/// Dual complex text with a `# dual-of <fingerprint>` header line.
std::string emit_dual(const DualComplex& d);

}  // namespace geozeta

#pragma once

#include <map>
#include <vector>

#include "geozeta/complex.hpp"
#include "geozeta/dual.hpp"
#include "geozeta/spectral.hpp"

namespace geozeta {

/// A cyclic class of closed geodesic paths of (n-1)-cells, stored by its
/// lexicographically minimal rotation.
struct ClosedGeodesic {
  std::vector<int> cells;
  int reversing_number = 0;  // non-compatible consecutive pairs, wrap-around included
  int primitive_length = 0;

  int length() const noexcept { return static_cast<int>(cells.size()); }
  int sign() const noexcept { return reversing_number % 2 == 0 ? 1 : -1; }
  bool primitive() const noexcept { return primitive_length == length(); }

  friend bool operator==(const ClosedGeodesic&, const ClosedGeodesic&) = default;
};

/// Smallest p such that the cyclic sequence is invariant under rotation by p.
int smallest_period(const std::vector<int>& cyclic);
/// True iff `cells` is its own lexicographically minimal rotation.
bool is_minimal_rotation(const std::vector<int>& cells);
std::vector<int> minimal_rotation(std::vector<int> cells);

/// Every cyclic class of length 1..max_len, sorted by (length, cells).
/// Reversed traversals are distinct classes.
std::vector<ClosedGeodesic> closed_geodesics(const PolyComplex& x, int max_len);
std::vector<ClosedGeodesic> closed_geodesics(const TransferOperator& t, int max_len);

/// k -> Σ_{|γ|=k} ε_γ |γ♯| for k = 1..max_k, from enumeration alone.
std::map<int, Integer> signed_length_spectrum(const PolyComplex& x, int max_k);
std::map<int, Integer> signed_length_spectrum(const std::vector<ClosedGeodesic>& geodesics, int max_k);

/// Geodesic path of 2-cells in a 3-complex running from the coboundary
/// support of κ₁ to the support of ⋆κ₂.
struct OrthoGeodesic {
  std::vector<int> cells;
  int sign = 1;
  Rational incidence;  // ⟨∂τ₁, κ₁⟩ ⟨τ_q, ⋆κ₂⟩

  int length() const noexcept { return static_cast<int>(cells.size()); }
};

/// All orthogeodesics of length 1..max_len. Throws for n != 3 and for
/// non-integral chains.
std::vector<OrthoGeodesic> orthogeodesics(const PolyComplex& x, const DualComplex& d, const Chain& k1,
                                          const Chain& k2, int max_len);

/// k -> Σ_{|c|=k} ε_c m_c.
std::map<int, Rational> orthogeodesic_sums(const std::vector<OrthoGeodesic>& paths, int max_len);

}  // namespace geozeta

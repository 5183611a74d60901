#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geozeta/arith.hpp"
#include "geozeta/exact_linalg.hpp"
#include "geozeta/matrix.hpp"

namespace geozeta {

/// One signed entry of a boundary list: `sign * face`.
struct Incidence {
  int face = 0;
  int sign = 1;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct CellRef {
  int dim = 0;
  int index = 0;

  friend bool operator==(const CellRef&, const CellRef&) = default;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

/// An oriented polyhedral complex of dimension n >= 2, stored as signed
/// boundary lists. The order of cells within each dimension is the basis
/// order used by every matrix in the library. Coefficients are +1/-1 and a
/// face appears at most once per boundary list.
///
/// Construction checks only structural well-formedness (index ranges,
/// signs, duplicates). The geometric invariants are checked by validate().
class PolyComplex {
 public:
  using BoundaryList = std::vector<Incidence>;

  /// `boundaries[k][cell]` lists the faces of a k-cell for k = 1..dim;
  /// `boundaries[0]` is ignored and may be empty.
  PolyComplex(int dim, std::vector<int> counts, std::vector<std::vector<BoundaryList>> boundaries);

  int dim() const noexcept { return dim_; }
  int cell_count(int k) const;
  const std::vector<int>& cell_counts() const noexcept { return counts_; }

  std::span<const Incidence> boundary(int k, int cell) const;
  /// The (k+1)-cells having `cell` as a face, with the sign it carries there.
  std::span<const Incidence> coboundary(int k, int cell) const;

  /// Common number of (n-2)-faces of the (n-1)-cells, if there is one.
  std::optional<int> regularity_degree() const noexcept { return regularity_; }

  long euler_characteristic() const;

  /// The degree-k boundary as a c_{k-1} x c_k integer matrix. k = 0 and
  /// k = dim+1 give the (empty-sided) zero maps.
  IntMatrix boundary_matrix(int k) const;

  friend bool operator==(const PolyComplex& a, const PolyComplex& b) {
    return a.dim_ == b.dim_ && a.counts_ == b.counts_ && a.boundaries_ == b.boundaries_;
  }

 private:
  int dim_;
  std::vector<int> counts_;
  std::vector<std::vector<BoundaryList>> boundaries_;
  std::vector<std::vector<BoundaryList>> coboundaries_;
  std::optional<int> regularity_;
};

/// Parses the line-based `pcomplex` text format. Throws ParseError.
PolyComplex parse_complex(std::string_view text);
PolyComplex read_complex_file(const std::string& path);

/// Emits the canonical text form; `header` lines are written as `# ...`
/// comments before the body.
std::string emit_complex(const PolyComplex& complex, const std::vector<std::string>& header = {});

/// 64-bit FNV-1a of the canonical text, printed as 16 hex digits.
std::string complex_fingerprint(const PolyComplex& complex);

// -- validation ------------------------------------------------------------

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::vector<CellRef> offenders;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::optional<int> regularity_degree;

  bool passed() const;
  const ValidationCheck& check(std::string_view name) const;
};

inline constexpr std::string_view kCheckBoundarySquared = "boundary_squared_zero";
inline constexpr std::string_view kCheckRegular = "regular_codim1_cells";
inline constexpr std::string_view kCheckTwoCofaces = "two_cofaces";
inline constexpr std::string_view kCheckPairUniqueness = "pair_uniqueness";

ValidationReport validate(const PolyComplex& complex);

/// Throws geozeta::Error naming the first failing check. Returns N.
int require_valid(const PolyComplex& complex);

// -- chains ----------------------------------------------------------------

/// Sparse exact chain of a fixed degree. Zero coefficients are never stored.
class Chain {
 public:
  explicit Chain(int degree = 0) : degree_(degree) {}

  static Chain cell(int degree, int index, const Rational& coefficient = 1);
  static Chain from_dense(int degree, const RatVector& values);

  int degree() const noexcept { return degree_; }
  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_integral() const;

  Rational coefficient(int cell) const;
  void add(int cell, const Rational& coefficient);

  /// Dense coefficient vector of length `size`; throws if an index is out of range.
  RatVector dense(int size) const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Rational& s);

  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(Chain a, const Rational& s) { return a *= s; }
  friend Chain operator*(const Rational& s, Chain a) { return a *= s; }
  friend Chain operator-(Chain a) { return a *= Rational(-1); }
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int degree_;
  std::map<int, Rational> terms_;
};

/// Inner product for which the cells form an orthonormal basis.
Rational inner_product(const Chain& a, const Chain& b);

/// ∂ applied to a chain.
Chain boundary(const PolyComplex& complex, const Chain& chain);
/// The adjoint ∂⋆ (degree k -> k+1) applied to a chain.
Chain coboundary(const PolyComplex& complex, const Chain& chain);

/// Parses `chain <k>` followed by `<rational> <cell-index>` lines.
Chain parse_chain(std::string_view text);
Chain read_chain_file(const std::string& path);
std::string emit_chain(const Chain& chain);

}  // namespace geozeta

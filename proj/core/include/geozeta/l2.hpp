#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "geozeta/complex.hpp"
#include "geozeta/geodesics.hpp"
#include "geozeta/matrix.hpp"

namespace geozeta {

/// A free action of the cyclic group Z/m on a complex, given by one
/// generating cell permutation per dimension, with the quotient complex
/// and a fundamental domain (the smallest cell index of every orbit).
class CoverData {
 public:
  /// Checks that every permutation is a bijection, that the action commutes
  /// with ∂ including signs, and that it is free with all orbits of size m.
  CoverData(PolyComplex cover, std::vector<std::vector<int>> generator);

  const PolyComplex& cover() const noexcept { return cover_; }
  /// The quotient complex; its k-cell i is the orbit of fundamental_domain(k)[i].
  const PolyComplex& base() const noexcept { return base_; }
  int order() const noexcept { return order_; }
  int dim() const noexcept { return cover_.dim(); }

  const std::vector<int>& generator(int k) const { return generator_.at(k); }
  const std::vector<int>& fundamental_domain(int k) const { return domain_.at(k); }
  /// Index of the orbit (= base cell) containing a cover cell.
  int orbit(int k, int cell) const { return orbit_.at(k).at(cell); }

  /// True iff p(g i, g j) = p(i, j) for the generator g.
  bool is_equivariant(int k, const RatMatrix& p) const;

 private:
  PolyComplex cover_;
  std::vector<std::vector<int>> generator_;
  int order_ = 1;
  std::vector<std::vector<int>> orbit_;
  std::vector<std::vector<int>> domain_;
  PolyComplex base_;
};

/// grid_torus(a*m, b) (kind "grid") or tri_torus(a*m, b) (kind "tri") with
/// the shift by a columns as generator. a, b >= 3 and m >= 1.
CoverData build_cyclic_cover(std::string_view kind, int a, int b, int m);

/// Permutation file: `perm <k> : <image of cell 0> <image of cell 1> ...`,
/// one line per dimension.
std::vector<std::vector<int>> parse_permutation(std::string_view text);
std::vector<std::vector<int>> read_permutation_file(const std::string& path);
std::string emit_permutation(const std::vector<std::vector<int>>& generator);

/// tr_vN P = Σ_{i ∈ F} P(σ̂_i, σ̂_i). Throws for non-equivariant P and raises
/// InternalMismatchError unless the result equals tr(P)/m.
Rational vn_trace(const CoverData& c, int k, const RatMatrix& p);
Rational vn_trace(const CoverData& c, int k, const IntMatrix& p);

/// b_k(cover) / m.
Rational l2_betti(const CoverData& c, int k);

/// Spectrum of the cover Laplacian in one degree, weighted by 1/m. The
/// kernel dimension comes from exact rank; the positive part is numerical.
struct SpectralDensity {
  int order = 1;
  int kernel_dimension = 0;
  std::vector<double> positive;  // ascending, with multiplicity

  double mass_at_zero() const { return static_cast<double>(kernel_dimension) / order; }
  double total_mass() const { return static_cast<double>(kernel_dimension + positive.size()) / order; }
  /// D(λ) = (1/m) #{eigenvalues <= λ}.
  double distribution(double lambda) const;
};

SpectralDensity spectral_density(const CoverData& c, int k);

/// Eigenvalues of a symmetric exact matrix, ascending (floating point).
std::vector<double> symmetric_eigenvalues(const RatMatrix& a);

/// (1/m) Σ log λ over the nonzero eigenvalues of an equivariant PSD matrix;
/// the number of zero eigenvalues is taken from the exact rank.
double fk_log_det(const CoverData& c, int k, const RatMatrix& a);
double fk_det(const CoverData& c, int k, const RatMatrix& a);

struct FkZetaSample {
  Rational s;
  double z = 0;                // 1 / (N+2+s)
  double log_zeta = 0;         // log of z^c det_FK(1/z - T̂)
  double log_chi = 0;          // log det_FK(s + Δ̂_{n-1})
  double normalized = 0;       // s^{-b} det_FK(s + Δ̂_{n-1})
};

struct FkZetaReport {
  Rational l2_betti;            // b = b^{(2)}_{n-1}
  int cells = 0;                // c = c_{n-1}(base)
  double fk_det_laplacian = 0;  // det_FK(Δ̂_{n-1})
  std::vector<FkZetaSample> samples;
  double slope_transfer = 0;    // least-squares slope of log ζ_FK against log s
  double slope_laplacian = 0;   // the same for log χ
};

/// Evaluates the zeta asymptotic at the given s values (positive, decreasing),
/// both through T̂ and through P(s) = s + Δ̂_{n-1}.
FkZetaReport fk_zeta_asymptotic_check(const CoverData& c, const std::vector<Rational>& s_values);

/// (-1)^{k-1}/k tr_vN(Δ̂_{n-1}^k) for k = 1..K, exact. K <= 20.
std::vector<Rational> psi_series(const CoverData& c, int K);
/// Ψ(s) = log χ(1/s) - c log(1/s), numerically from the spectrum.
double psi_value(const CoverData& c, double s);

/// (1/m) Σ exp(-tλ) over the numerical spectrum of Δ̂_{n-1}.
double heat_trace(const CoverData& c, double t);
/// Σ_{k<=K} (-t)^k/k! tr_vN(Δ̂_{n-1}^k), exact.
Rational heat_trace_series(const CoverData& c, const Rational& t, int K);

/// k -> Σ ε_γ |γ♯| over the closed geodesics of the base whose lift to the
/// cover is closed, found by lifting each base geodesic step by step.
std::map<int, Integer> trivial_holonomy_spectrum(const CoverData& c, int max_k);

}  // namespace geozeta

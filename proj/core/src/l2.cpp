#include "geozeta/l2.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geozeta/error.hpp"
#include "geozeta/exact_linalg.hpp"
#include "geozeta/generators.hpp"
#include "geozeta/homology.hpp"
#include "geozeta/spectral.hpp"
#include "text.hpp"

namespace geozeta {

namespace {

int check_action(const PolyComplex& x, const std::vector<std::vector<int>>& g) {
  if (g.size() != static_cast<std::size_t>(x.dim() + 1))
    throw Error("cover: expected one permutation per dimension 0.." + std::to_string(x.dim()));
  for (int k = 0; k <= x.dim(); ++k) {
    const int c = x.cell_count(k);
    if (static_cast<int>(g[k].size()) != c)
      throw Error("cover: permutation in dimension " + std::to_string(k) + " has " + std::to_string(g[k].size()) +
                  " entries, expected " + std::to_string(c));
    std::vector<bool> hit(c, false);
    for (int image : g[k]) {
      if (image < 0 || image >= c || hit[image])
        throw Error("cover: map in dimension " + std::to_string(k) + " is not a permutation");
      hit[image] = true;
    }
  }
  for (int k = 1; k <= x.dim(); ++k) {
    for (int cell = 0; cell < x.cell_count(k); ++cell) {
      std::vector<Incidence> moved;
      for (const auto& inc : x.boundary(k, cell)) moved.push_back({g[k - 1][inc.face], inc.sign});
      std::vector<Incidence> target(x.boundary(k, g[k][cell]).begin(), x.boundary(k, g[k][cell]).end());
      auto by_face = [](const Incidence& a, const Incidence& b) { return a.face < b.face; };
      std::sort(moved.begin(), moved.end(), by_face);
      std::sort(target.begin(), target.end(), by_face);
      if (moved != target)
        throw Error("cover: the action does not commute with the boundary at " + std::to_string(k) + "-cell " +
                    std::to_string(cell));
    }
  }
  int order = 0;
  for (int k = 0; k <= x.dim(); ++k) {
    std::vector<bool> seen(x.cell_count(k), false);
    for (int start = 0; start < x.cell_count(k); ++start) {
      if (seen[start]) continue;
      int len = 0;
      for (int c = start; !seen[c]; c = g[k][c]) {
        seen[c] = true;
        ++len;
      }
      if (order == 0) order = len;
      if (len != order)
        throw Error("cover: the action is not free (orbit of " + std::to_string(k) + "-cell " +
                    std::to_string(start) + " has size " + std::to_string(len) + ", expected " +
                    std::to_string(order) + ")");
    }
  }
  return std::max(order, 1);
}

std::vector<std::vector<int>> orbit_labels(const std::vector<std::vector<int>>& g) {
  std::vector<std::vector<int>> out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    out[k].assign(g[k].size(), -1);
    int next = 0;
    for (std::size_t start = 0; start < g[k].size(); ++start) {
      if (out[k][start] >= 0) continue;
      for (int c = static_cast<int>(start); out[k][c] < 0; c = g[k][c]) out[k][c] = next;
      ++next;
    }
  }
  return out;
}

std::vector<std::vector<int>> domain_from_orbits(const std::vector<std::vector<int>>& orbit) {
  std::vector<std::vector<int>> out(orbit.size());
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (std::size_t c = 0; c < orbit[k].size(); ++c)
      if (orbit[k][c] == static_cast<int>(out[k].size())) out[k].push_back(static_cast<int>(c));
  return out;
}

PolyComplex quotient(const PolyComplex& x, const std::vector<std::vector<int>>& orbit,
                     const std::vector<std::vector<int>>& domain) {
  const int n = x.dim();
  std::vector<int> counts(n + 1);
  for (int k = 0; k <= n; ++k) counts[k] = static_cast<int>(domain[k].size());
  std::vector<std::vector<PolyComplex::BoundaryList>> bd(n + 1);
  for (int k = 1; k <= n; ++k) {
    bd[k].resize(counts[k]);
    for (int i = 0; i < counts[k]; ++i) {
      for (const auto& inc : x.boundary(k, domain[k][i])) {
        const int face = orbit[k - 1][inc.face];
        for (const auto& seen : bd[k][i])
          if (seen.face == face)
            throw Error("cover: the quotient is not a polyhedral complex (the group is too large for the cover)");
        bd[k][i].push_back({face, inc.sign});
      }
    }
  }
  return PolyComplex(n, std::move(counts), std::move(bd));
}

double log_sum(const std::vector<double>& values, double shift) {
  double acc = 0;
  for (double v : values) acc += std::log(v + shift);
  return acc;
}

double slope_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  return denom == 0 ? std::nan("") : (n * sxy - sx * sy) / denom;
}

int top_degree(const CoverData& c) { return c.dim() - 1; }

}  // namespace

CoverData::CoverData(PolyComplex cover, std::vector<std::vector<int>> generator)
    : cover_(std::move(cover)),
      generator_(std::move(generator)),
      order_(check_action(cover_, generator_)),
      orbit_(orbit_labels(generator_)),
      domain_(domain_from_orbits(orbit_)),
      base_(quotient(cover_, orbit_, domain_)) {}

bool CoverData::is_equivariant(int k, const RatMatrix& p) const {
  const auto& g = generator(k);
  if (p.rows() != g.size() || p.cols() != g.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (p(g[i], g[j]) != p(i, j)) return false;
  return true;
}

CoverData build_cyclic_cover(std::string_view kind, int a, int b, int m) {
  if (a < 3 || b < 3) throw Error("cover: base torus needs a, b >= 3");
  if (m < 1) throw Error("cover: group order must be at least 1");
  PolyComplex cover = [&] {
    if (kind == "grid") return build_grid_torus(a * m, b);
    if (kind == "tri") return build_tri_torus(a * m, b);
    throw Error("cover: unknown torus kind '" + std::string(kind) + "' (expected grid or tri)");
  }();
  const int width = a * m;
  const int block = width * b;
  std::vector<std::vector<int>> g(3);
  for (int k = 0; k <= 2; ++k) {
    const int c = cover.cell_count(k);
    g[k].resize(c);
    for (int cell = 0; cell < c; ++cell) {
      const int base = cell - cell % block;
      const int offset = cell % block;
      const int i = offset % width;
      const int j = offset / width;
      g[k][cell] = base + (i + a) % width + width * j;
    }
  }
  return CoverData(std::move(cover), std::move(g));
}

std::vector<std::vector<int>> parse_permutation(std::string_view text) {
  std::map<int, std::vector<int>> perms;
  std::map<int, std::size_t> first_line;
  detail::for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (tok.size() < 3 || tok[0] != "perm" || tok[2] != ":")
      throw ParseError(line, "expected 'perm <k> : <images...>'");
    const int k = detail::parse_nonnegative(tok[1], line, "dimension");
    if (perms.count(k)) throw ParseError(line, "duplicate permutation for dimension " + std::to_string(k));
    std::vector<int> images;
    for (std::size_t i = 3; i < tok.size(); ++i) images.push_back(detail::parse_nonnegative(tok[i], line, "cell index"));
    perms[k] = std::move(images);
    first_line[k] = line;
  });
  if (perms.empty()) throw ParseError(0, "no 'perm' lines");
  std::vector<std::vector<int>> out;
  for (const auto& [k, images] : perms) {
    if (k != static_cast<int>(out.size()))
      throw ParseError(first_line[k], "missing permutation for dimension " + std::to_string(out.size()));
    out.push_back(images);
  }
  return out;
}

std::vector<std::vector<int>> read_permutation_file(const std::string& path) {
  return parse_permutation(detail::slurp(path));
}

std::string emit_permutation(const std::vector<std::vector<int>>& generator) {
  std::ostringstream out;
  for (std::size_t k = 0; k < generator.size(); ++k) {
    out << "perm " << k << " :";
    for (int image : generator[k]) out << ' ' << image;
    out << '\n';
  }
  return out.str();
}

Rational vn_trace(const CoverData& c, int k, const RatMatrix& p) {
  if (!c.is_equivariant(k, p)) throw Error("vn_trace: matrix does not commute with the deck group");
  Rational sum = 0;
  for (int cell : c.fundamental_domain(k)) sum += p(cell, cell);
  if (sum != p.trace() / Rational(c.order()))
    throw InternalMismatchError("vn_trace: fundamental-domain trace " + to_string(sum) + " differs from tr/m");
  return sum;
}

Rational vn_trace(const CoverData& c, int k, const IntMatrix& p) { return vn_trace(c, k, p.cast<Rational>()); }

Rational l2_betti(const CoverData& c, int k) { return ratio(betti(c.cover(), k), c.order()); }

double SpectralDensity::distribution(double lambda) const {
  if (lambda < 0) return 0;
  const auto below = std::upper_bound(positive.begin(), positive.end(), lambda) - positive.begin();
  return static_cast<double>(kernel_dimension + below) / order;
}

std::vector<double> symmetric_eigenvalues(const RatMatrix& a) {
  if (!a.is_symmetric()) throw Error("symmetric_eigenvalues: matrix is not symmetric");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = to_double(a(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("symmetric_eigenvalues: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

namespace {

// Splits the spectrum of a PSD matrix into an exact kernel count and the
// positive eigenvalues. Throws when a non-kernel eigenvalue is not positive.
SpectralDensity split_spectrum(const CoverData& c, const RatMatrix& a) {
  SpectralDensity d;
  d.order = c.order();
  d.kernel_dimension = static_cast<int>(a.rows() - row_reduce(a).rank());
  const auto ev = symmetric_eigenvalues(a);
  const double scale = std::max(1.0, ev.empty() ? 0.0 : std::abs(ev.back()));
  if (!ev.empty() && ev.front() < -1e-9 * scale) throw Error("matrix is not positive semidefinite");
  d.positive.assign(ev.begin() + d.kernel_dimension, ev.end());
  if (!d.positive.empty() && d.positive.front() <= 0) throw Error("matrix is not positive semidefinite");
  return d;
}

}  // namespace

SpectralDensity spectral_density(const CoverData& c, int k) {
  return split_spectrum(c, laplacian(c.cover(), k).cast<Rational>());
}

double fk_log_det(const CoverData& c, int k, const RatMatrix& a) {
  if (!c.is_equivariant(k, a)) throw Error("fk_det: matrix does not commute with the deck group");
  const SpectralDensity d = split_spectrum(c, a);
  return log_sum(d.positive, 0) / c.order();
}

double fk_det(const CoverData& c, int k, const RatMatrix& a) { return std::exp(fk_log_det(c, k, a)); }

FkZetaReport fk_zeta_asymptotic_check(const CoverData& c, const std::vector<Rational>& s_values) {
  const int k = top_degree(c);
  const int n_reg = require_valid(c.cover());
  const double m = c.order();
  const SpectralDensity lap = spectral_density(c, k);
  const auto transfer = symmetric_eigenvalues(transfer_operator(c.cover()).matrix().cast<Rational>());

  FkZetaReport report;
  report.l2_betti = l2_betti(c, k);
  report.cells = c.base().cell_count(k);
  report.fk_det_laplacian = std::exp(log_sum(lap.positive, 0) / m);
  const double b = to_double(report.l2_betti);

  std::vector<double> xs, ys_transfer, ys_laplacian;
  for (const Rational& s_exact : s_values) {
    if (sgn(s_exact) <= 0) throw Error("fk_zeta_asymptotic_check: s must be positive");
    const double s = to_double(s_exact);
    FkZetaSample sample;
    sample.s = s_exact;
    sample.z = 1.0 / (n_reg + 2 + s);
    // 1/z - μ = (N+2-μ) + s; the subtraction is done first to keep the kernel accurate.
    double acc = 0;
    for (double mu : transfer) acc += std::log((n_reg + 2 - mu) + s);
    sample.log_zeta = report.cells * std::log(sample.z) + acc / m;
    sample.log_chi = (lap.kernel_dimension * std::log(s) + log_sum(lap.positive, s)) / m;
    sample.normalized = std::exp(sample.log_chi - b * std::log(s));
    xs.push_back(std::log(s));
    ys_transfer.push_back(sample.log_zeta);
    ys_laplacian.push_back(sample.log_chi);
    report.samples.push_back(sample);
  }
  report.slope_transfer = slope_fit(xs, ys_transfer);
  report.slope_laplacian = slope_fit(xs, ys_laplacian);
  return report;
}

std::vector<Rational> psi_series(const CoverData& c, int K) {
  if (K < 0 || K > 20) throw Error("psi_series: K must lie in 0..20");
  const int k = top_degree(c);
  const IntMatrix lap = laplacian(c.cover(), k);
  std::vector<Rational> out;
  IntMatrix power = IntMatrix::identity(lap.rows());
  for (int j = 1; j <= K; ++j) {
    power = power * lap;
    const Rational coeff = vn_trace(c, k, power) / Rational(j);
    out.push_back(j % 2 == 1 ? coeff : Rational(-coeff));
  }
  return out;
}

double psi_value(const CoverData& c, double s) {
  const SpectralDensity d = spectral_density(c, top_degree(c));
  // log χ(1/s) - c log(1/s) = (1/m) Σ log(1 + sλ); kernel terms vanish.
  double acc = 0;
  for (double lambda : d.positive) acc += std::log1p(s * lambda);
  return acc / d.order;
}

double heat_trace(const CoverData& c, double t) {
  const auto ev = symmetric_eigenvalues(laplacian(c.cover(), top_degree(c)).cast<Rational>());
  double acc = 0;
  for (double lambda : ev) acc += std::exp(-t * lambda);
  return acc / c.order();
}

Rational heat_trace_series(const CoverData& c, const Rational& t, int K) {
  const int k = top_degree(c);
  const IntMatrix lap = laplacian(c.cover(), k);
  IntMatrix power = IntMatrix::identity(lap.rows());
  Rational sum = 0;
  Rational weight = 1;  // (-t)^j / j!
  for (int j = 0; j <= K; ++j) {
    if (j > 0) {
      power = power * lap;
      weight *= -t / Rational(j);
    }
    sum += weight * vn_trace(c, k, power);
  }
  return sum;
}

std::map<int, Integer> trivial_holonomy_spectrum(const CoverData& c, int max_k) {
  const int k = top_degree(c);
  const TransferOperator base_t = transfer_operator(c.base());
  const TransferOperator cover_t = transfer_operator(c.cover());
  std::map<int, Integer> out;
  for (int len = 1; len <= max_k; ++len) out[len] = 0;
  for (const auto& g : closed_geodesics(base_t, max_k)) {
    const int start = c.fundamental_domain(k)[g.cells.front()];
    int here = start;
    for (int i = 1; i <= g.length(); ++i) {
      const int target = g.cells[i % g.length()];
      const int from = g.cells[i - 1];
      int found = -1;
      for (const Step& step : cover_t.steps(here)) {
        if (c.orbit(k, step.to) != target) continue;
        if (found >= 0 || step.sign != base_t.entry(from, target))
          throw InternalMismatchError("geodesic step does not lift uniquely to the cover");
        found = step.to;
      }
      if (found < 0) throw InternalMismatchError("geodesic step has no lift to the cover");
      here = found;
    }
    if (here == start) out[g.length()] += g.sign() * g.primitive_length;
  }
  return out;
}

}  // namespace geozeta

// Acceptance run: one PASS/FAIL line per criterion, each computed against a
// reference that does not go through the routine under test. Tolerances and
// time limits are fixed here and nowhere else.
//
//   geozeta_acceptance [--expect-fail 1,3,7]
//
// Without arguments the exit status is 0 only if every criterion passes. With
// --expect-fail it is 0 only if exactly the listed criteria fail and every
// supplementary check passes, so a known failure that starts passing, or a new
// failure, both turn the run red.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "geozeta/dual.hpp"
#include "geozeta/error.hpp"
#include "geozeta/generators.hpp"
#include "geozeta/geodesics.hpp"
#include "geozeta/homology.hpp"
#include "geozeta/l2.hpp"
#include "geozeta/linking.hpp"
#include "geozeta/spectral.hpp"
#include "geozeta/zeta.hpp"
#include "oracles.hpp"

using namespace geozeta;

namespace {

// Pinned limits.
constexpr double kIdentitySeconds = 1.0;
constexpr double kTraceSeconds = 60.0;
constexpr double kZetaSeconds = 10.0;
constexpr double kLinkingSeconds = 60.0;
constexpr double kCoverSeconds = 120.0;
constexpr double kSlopeRelTol = 0.05;
constexpr double kDetRelTol = 1e-3;
constexpr double kHeatAbsTol = 1e-6;
constexpr double kFkDetOracleRelTol = 1e-9;
constexpr int kRandomPairs = 20;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok " : "FAILED ") + what);
  }
  void info(const std::string& what) { notes.push_back("   " + what); }
};

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// N from the first codimension-1 cell, read off the boundary list directly.
int face_count(const PolyComplex& x) { return static_cast<int>(x.boundary(x.dim() - 1, 0).size()); }

IntMatrix oracle_transfer(const PolyComplex& x) { return oracle::transfer_by_pairs(x); }

// -- criterion bodies ----------------------------------------------------------

Outcome identity_on(const std::vector<std::pair<std::string, PolyComplex>>& fixtures, double limit) {
  Outcome o;
  Timer timer;
  for (const auto& [name, x] : fixtures) {
    const int top = x.dim() - 1;
    const IntMatrix lap = oracle::laplacian_from_boundaries(x, top);
    const IntMatrix t = oracle_transfer(x);
    const IntMatrix target = IntMatrix::identity(t.rows()) * Integer(face_count(x) + 2);
    const IntMatrix sum = lap + t;
    long bad = 0;
    for (std::size_t i = 0; i < sum.rows(); ++i)
      for (std::size_t j = 0; j < sum.cols(); ++j) bad += sum(i, j) != target(i, j);
    o.require(bad == 0, name + ": " + std::to_string(bad) + " mismatched entries of " +
                            std::to_string(sum.rows() * sum.cols()));
    // The library must agree with the reference on both operators.
    o.require(laplacian(x, top) == lap && transfer_operator(x).matrix() == t,
              name + ": library Laplacian and transfer match the reference");
    o.require(check_laplacian_identity(x) == (bad == 0), name + ": library identity check agrees");
  }
  o.require(timer.seconds() < limit, "runtime " + fixed(timer.seconds(), 3) + " s < " + fixed(limit) + " s");
  return o;
}

Outcome trace_formula() {
  Outcome o;
  Timer timer;
  const std::vector<std::tuple<std::string, PolyComplex, int>> cases{
      {"octahedron", octahedron(), 8}, {"grid_torus(3,3)", grid_torus(3, 3), 8}, {"simplex_boundary(4)", simplex_boundary(4), 6}};
  for (const auto& [name, x, kmax] : cases) {
    const auto spectrum = signed_length_spectrum(x, kmax);
    const IntMatrix t = oracle_transfer(x);
    IntMatrix p = IntMatrix::identity(t.rows());
    bool ok = true;
    std::string values;
    for (int k = 1; k <= kmax; ++k) {
      p = p * t;
      ok = ok && spectrum.at(k) == p.trace();
      values += " " + to_string(spectrum.at(k));
    }
    o.require(ok, name + ": signed geodesic sums equal tr T^k for k <= " + std::to_string(kmax) + " (" + values + " )");
  }
  o.require(timer.seconds() < kTraceSeconds, "runtime " + fixed(timer.seconds(), 3) + " s");
  return o;
}

Outcome zeta_order(const std::vector<std::tuple<std::string, PolyComplex, int>>& cases, double limit) {
  Outcome o;
  Timer timer;
  for (const auto& [name, x, expected] : cases) {
    const int top = x.dim() - 1;
    const int c = x.cell_count(top);
    const auto p = zeta_polynomial(transfer_operator(x));
    const Rational z0(1, face_count(x) + 2);
    const int order = vanishing_order(p, z0);
    const IntMatrix lap = oracle::laplacian_from_boundaries(x, top);
    const int kernel = c - oracle::rank(lap);
    const int b = oracle::betti(x, top);

    // det(1 - zT) at two sample points by plain elimination.
    const RatMatrix t = oracle_transfer(x).cast<Rational>();
    bool det_ok = true;
    for (const Rational z : {Rational(1, 7), Rational(-2, 3)}) {
      det_ok = det_ok && p(z) == oracle::determinant(RatMatrix::identity(c) - t * z);
    }
    o.require(p.degree() <= c && p.coefficient(0) == 1 && det_ok,
              name + ": polynomial of degree " + std::to_string(p.degree()) + " <= " + std::to_string(c) +
                  ", constant term 1, equals det(1 - zT)");
    o.require(order == expected, name + ": order at " + to_string(z0) + " is " + std::to_string(order) +
                                     ", expected " + std::to_string(expected));
    o.require(order == kernel, name + ": order equals dim ker Δ = " + std::to_string(kernel) +
                                   " (b = " + std::to_string(b) + ")");
  }
  o.require(timer.seconds() < limit, "runtime " + fixed(timer.seconds(), 3) + " s");
  return o;
}

Outcome euler_product() {
  Outcome o;
  for (const auto& [name, x] : std::vector<std::pair<std::string, PolyComplex>>{{"octahedron", octahedron()},
                                                                                 {"grid_torus(3,3)", grid_torus(3, 3)}}) {
    const auto from_geodesics = zeta_from_geodesics(x, 8);
    const auto p = zeta_polynomial(transfer_operator(x));
    bool ok = from_geodesics.size() == 9;
    for (int k = 0; ok && k <= 8; ++k) ok = from_geodesics[k] == p.coefficient(k);
    o.require(ok, name + ": product over primitive geodesics matches det(1 - zT) through z^8");
  }
  return o;
}

std::pair<Chain, Chain> random_knots(std::mt19937& rng, const DualComplex& d) {
  return {boundary(d.base(), oracle::random_chain(rng, 2, d.base().cell_count(2))),
          boundary(d.dual(), oracle::random_chain(rng, 2, d.dual().cell_count(2)))};
}

Chain abc_knot(const PolyComplex& x) { return boundary(x, Chain::cell(2, oracle::find_cell(x, 2, {0, 1, 2}))); }

Chain abc_dual_knot(const DualComplex& d) {
  const auto& x = d.base();
  return oracle::dual_loop(d, {oracle::find_cell(x, 3, {0, 1, 2, 3}), oracle::find_cell(x, 3, {0, 1, 2, 4}),
                               oracle::find_cell(x, 3, {0, 1, 3, 4})});
}

Outcome linking() {
  Outcome o;
  Timer timer;
  const auto x = simplex_boundary(4);
  const auto d = build_dual(x);
  const Chain k1 = abc_knot(x);
  const Chain k2 = abc_dual_knot(d);
  const Rational reference = oracle::intersection_linking(d, k1, k2);
  const auto eta = eta_exact(d, k1, k2, Rational(1, 5));
  o.require(eta.value == reference && linking_oracle(d, k1, k2) == reference && abs(reference) == 1,
            "simplex_boundary(4), triangle knot: eta(1/5) = " + to_string(eta.value) + " = linking number " +
                to_string(reference));

  std::mt19937 rng(20241016);
  for (const auto& [name, y] : std::vector<std::pair<std::string, PolyComplex>>{
           {"simplex_boundary(4)", simplex_boundary(4)}, {"cross_polytope(4)", cross_polytope(4)}}) {
    const auto dy = build_dual(y);
    const Rational z0(1, face_count(y) + 2);
    int agree = 0, nonzero = 0;
    for (int trial = 0; trial < kRandomPairs; ++trial) {
      const auto [a, b] = random_knots(rng, dy);
      const Rational ref = oracle::intersection_linking(dy, a, b);
      agree += eta_exact(dy, a, b, z0).value == ref && linking_oracle(dy, a, b) == ref;
      nonzero += ref != 0;
    }
    o.require(agree == kRandomPairs, name + ": " + std::to_string(agree) + "/" + std::to_string(kRandomPairs) +
                                         " random null-homologous pairs agree (" + std::to_string(nonzero) +
                                         " with nonzero linking)");
  }
  o.require(timer.seconds() < kLinkingSeconds, "runtime " + fixed(timer.seconds(), 3) + " s");
  return o;
}

Outcome series(const std::string& name, const PolyComplex& x, const std::vector<std::pair<Chain, Chain>>& knots) {
  Outcome o;
  const auto d = build_dual(x);
  const IntMatrix t = oracle_transfer(x);
  const Rational bound = [&] {
    Integer best = 0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      Integer row = 0;
      for (std::size_t j = 0; j < t.cols(); ++j) row += abs(t(i, j));
      if (row > best) best = row;
    }
    return Rational(best);
  }();
  const Rational z = bound == 0 ? Rational(1, 2) : Rational(1) / (2 * bound);
  const IntMatrix cob = x.boundary_matrix(2).transpose();
  const RatMatrix tq = t.cast<Rational>();

  int pair = 0;
  for (const auto& [k1, k2] : knots) {
    ++pair;
    RatVector v = cob.cast<Rational>() * k1.dense(x.cell_count(1));
    const RatVector w = star_back(d, k2).dense(x.cell_count(2));
    const auto sums = orthogeodesic_sums(orthogeodesics(x, d, k1, k2, 6), 6);
    bool ok = true;
    for (int k = 1; k <= 6; ++k) {
      Rational expected = 0;
      for (std::size_t i = 0; i < v.size(); ++i) expected += v[i] * w[i];
      ok = ok && sums.at(k) == expected;
      v = tq * v;
    }
    o.require(ok, name + " pair " + std::to_string(pair) + ": orthogeodesic sums equal <T^(k-1) d*k1, *k2> for k <= 6");

    const Rational exact = eta_exact(d, k1, k2, z).value;
    bool within = true;
    std::string worst;
    for (int L = 1; L <= 6; ++L) {
      const Rational partial = eta_partial_sum(d, k1, k2, z, L).value;
      const Rational tail = eta_tail_bound(d, k1, k2, z, L);
      within = within && abs(exact - partial) <= tail;
      if (L == 6) worst = "L = 6: error " + fixed(to_double(abs(exact - partial))) + " <= bound " + fixed(to_double(tail));
    }
    o.require(within, name + " pair " + std::to_string(pair) + ": partial sums at z = " + to_string(z) +
                          " stay within the tail bound (" + worst + ")");
  }
  return o;
}

Outcome series_consistency() {
  Outcome o;
  std::mt19937 rng(7);
  {
    const auto x = simplex_boundary(4);
    const auto d = build_dual(x);
    std::vector<std::pair<Chain, Chain>> knots{{abc_knot(x), abc_dual_knot(d)}};
    for (int i = 0; i < 3; ++i) knots.push_back(random_knots(rng, d));
    const auto part = series("simplex_boundary(4)", x, knots);
    o.pass = o.pass && part.pass;
    o.notes.insert(o.notes.end(), part.notes.begin(), part.notes.end());
  }
  {
    const auto x = cross_polytope(4);
    const auto d = build_dual(x);
    std::vector<std::pair<Chain, Chain>> knots;
    for (int i = 0; i < 3; ++i) knots.push_back(random_knots(rng, d));
    const auto part = series("cross_polytope(4)", x, knots);
    o.pass = o.pass && part.pass;
    o.notes.insert(o.notes.end(), part.notes.begin(), part.notes.end());
  }
  return o;
}

// det_FK(Δ̂) from the exact pseudo-determinant of the cover Laplacian.
double fk_det_reference(const CoverData& c, int k) {
  const Integer pdet = oracle::pseudo_determinant(oracle::laplacian_from_boundaries(c.cover(), k));
  return std::exp(std::log(pdet.get_d()) / c.order());
}

Outcome fk_zeta(const std::string& name, const CoverData& c, bool laplacian_slope_too) {
  Outcome o;
  Timer timer;
  const int top = c.dim() - 1;
  const Rational b = l2_betti(c, top);
  const Rational b_ref = ratio(oracle::betti(c.cover(), top), c.order());
  o.require(b == b_ref && b == Rational(2, 3), name + ": l2 Betti number " + to_string(b) + " (reference " +
                                                    to_string(b_ref) + ")");

  const auto report = fk_zeta_asymptotic_check(c, {Rational(1, 100), Rational(1, 1000), Rational(1, 10000)});
  const double bd = to_double(b);
  const double slope_err = std::abs(report.slope_transfer - bd) / bd;
  o.require(slope_err <= kSlopeRelTol, name + ": log-log slope of zeta_FK " + fixed(report.slope_transfer) +
                                           " vs " + fixed(bd) + " (relative error " + fixed(slope_err, 3) + ")");
  const double lap_err = std::abs(report.slope_laplacian - bd) / bd;
  if (laplacian_slope_too) {
    o.require(lap_err <= kSlopeRelTol, name + ": slope of log det_FK(s + Laplacian) " + fixed(report.slope_laplacian));
  } else {
    o.info(name + ": slope of log det_FK(s + Laplacian) is " + fixed(report.slope_laplacian) +
           " (relative error " + fixed(lap_err, 3) + ")");
  }

  const double reference = fk_det_reference(c, top);
  o.require(std::abs(report.fk_det_laplacian / reference - 1) <= kFkDetOracleRelTol,
            name + ": det_FK(Laplacian) " + fixed(report.fk_det_laplacian, 10) + " matches the exact pseudo-determinant");
  const auto at = fk_zeta_asymptotic_check(c, {Rational(1, 1000000)}).samples.front();
  const double det_err = std::abs(at.normalized / reference - 1);
  o.require(det_err <= kDetRelTol, name + ": s^-b det_FK(s + Laplacian) at s = 1e-6 within " + fixed(det_err, 3) +
                                       " of det_FK(Laplacian)");
  o.require(timer.seconds() < kCoverSeconds, "runtime " + fixed(timer.seconds(), 3) + " s");
  return o;
}

Outcome psi_heat() {
  Outcome o;
  const auto c = build_cyclic_cover("grid", 3, 3, 3);
  const int top = c.dim() - 1;
  const auto coeffs = psi_series(c, 10);
  const IntMatrix lap = oracle::laplacian_from_boundaries(c.cover(), top);
  IntMatrix p = IntMatrix::identity(lap.rows());
  bool ok = coeffs.size() == 10;
  for (int k = 1; ok && k <= 10; ++k) {
    p = p * lap;
    // (−1)^{k−1}/k · (full trace)/m
    Rational expected = ratio(p.trace(), Integer(k * c.order()));
    if (k % 2 == 0) expected = -expected;
    ok = coeffs[k - 1] == expected;
  }
  o.require(ok, "Psi coefficients equal (-1)^(k-1)/k * tr(Laplacian^k)/m for k <= 10");
  const double h = heat_trace(c, 1000.0);
  const double b = to_double(ratio(oracle::betti(c.cover(), top), c.order()));
  o.require(std::abs(h - b) <= kHeatAbsTol, "heat trace at t = 1000 is " + fixed(h, 12) + ", l2 Betti " + fixed(b, 12));
  return o;
}

// Lifts each closed base geodesic step by step through the cover's own
// adjacency and keeps the ones that close up.
std::map<int, Integer> lifted_counts(const CoverData& c, int kmax) {
  const IntMatrix cover_t = oracle_transfer(c.cover());
  const int top = c.dim() - 1;
  std::map<int, Integer> out;
  for (int k = 1; k <= kmax; ++k) out[k] = 0;
  for (const auto& g : closed_geodesics(c.base(), kmax)) {
    const int start = c.fundamental_domain(top)[g.cells.front()];
    int here = start;
    for (int i = 1; i <= g.length(); ++i) {
      const int want = g.cells[i % g.length()];
      int next = -1;
      for (std::size_t j = 0; j < cover_t.cols(); ++j) {
        if (cover_t(here, j) != 0 && c.orbit(top, static_cast<int>(j)) == want) {
          if (next >= 0) throw Error("covering step is not unique");
          next = static_cast<int>(j);
        }
      }
      if (next < 0) throw Error("base step has no lift");
      here = next;
    }
    if (here == start) out[g.length()] += g.sign() * g.primitive_length;
  }
  return out;
}

Outcome holonomy(const std::string& name, const CoverData& c) {
  Outcome o;
  const auto library = trivial_holonomy_spectrum(c, 8);
  const auto lifted = lifted_counts(c, 8);
  const IntMatrix t = oracle_transfer(c.cover());
  IntMatrix p = IntMatrix::identity(t.rows());
  bool ok = true;
  std::string values;
  for (int k = 1; k <= 8; ++k) {
    p = p * t;
    const Rational vn = ratio(p.trace(), c.order());
    ok = ok && Rational(library.at(k)) == vn && Rational(lifted.at(k)) == vn;
    values += " " + to_string(vn);
  }
  o.require(ok, name + ": base geodesics with trivial holonomy equal tr_vN(T^k) for k <= 8 (" + values + " )");
  return o;
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> body;
  bool supplementary = false;
};

std::set<std::string> parse_list(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expected_failures;
  bool expect_mode = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected_failures = parse_list(argv[++i]);
      expect_mode = true;
    } else {
      std::cerr << "usage: geozeta_acceptance [--expect-fail ID,ID,...]\n";
      return 1;
    }
  }

  const std::vector<Criterion> criteria{
      {"1", "Laplacian identity on the six reference complexes",
       [] {
         return identity_on({{"octahedron", octahedron()},
                             {"grid_torus(3,3)", grid_torus(3, 3)},
                             {"grid_torus(4,5)", grid_torus(4, 5)},
                             {"simplex_boundary(3)", simplex_boundary(3)},
                             {"simplex_boundary(4)", simplex_boundary(4)},
                             {"simplex_boundary(5)", simplex_boundary(5)}},
                            kIdentitySeconds);
       }},
      {"1s", "Laplacian identity on triangulated tori and the 16-cell",
       [] {
         return identity_on({{"tri_torus(3,3)", tri_torus(3, 3)},
                             {"tri_torus(4,5)", tri_torus(4, 5)},
                             {"cross_polytope(4)", cross_polytope(4)}},
                            kIdentitySeconds);
       },
       true},
      {"2", "signed closed geodesic counts equal tr T^k", trace_formula},
      {"3", "zeta polynomial and its vanishing order at 1/(N+2)",
       [] {
         return zeta_order({{"grid_torus(3,3)", grid_torus(3, 3), 2},
                            {"octahedron", octahedron(), 0},
                            {"simplex_boundary(4)", simplex_boundary(4), 0}},
                           kZetaSeconds);
       }},
      {"3s", "vanishing order on triangulated tori and the 16-cell",
       [] {
         return zeta_order({{"tri_torus(3,3)", tri_torus(3, 3), 2},
                            {"tri_torus(4,5)", tri_torus(4, 5), 2},
                            {"cross_polytope(4)", cross_polytope(4), 0}},
                           kZetaSeconds);
       },
       true},
      {"4", "Euler product over primitive geodesics through order 8", euler_product},
      {"5", "eta at 1/(N+2) equals the linking number", linking},
      {"6", "orthogeodesic series and its partial sums", series_consistency},
      {"7", "finite-cover Fuglede-Kadison zeta asymptotics, grid 3x3, m = 3",
       [] { return fk_zeta("grid cover", build_cyclic_cover("grid", 3, 3, 3), false); }},
      {"7s", "the same on the triangulated 3x3 torus, m = 3",
       [] { return fk_zeta("tri cover", build_cyclic_cover("tri", 3, 3, 3), true); }, true},
      {"8", "Psi series and heat trace on the m = 3 cover", psi_heat},
      {"9", "geodesics with trivial holonomy on the m = 3 cover",
       [] { return holonomy("grid cover", build_cyclic_cover("grid", 3, 3, 3)); }},
      {"9s", "the same on the triangulated cover",
       [] { return holonomy("tri cover", build_cyclic_cover("tri", 3, 3, 3)); }, true},
  };

  std::set<std::string> failed_primary;
  bool supplementary_ok = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << (c.id.size() == 1 ? " " : "") << "  " << c.title
              << '\n';
    for (const auto& n : o.notes) std::cout << "        " << n << '\n';
    if (!o.pass) {
      if (c.supplementary) {
        supplementary_ok = false;
      } else {
        failed_primary.insert(c.id);
      }
    }
  }

  int primary = 0;
  for (const auto& c : criteria) primary += !c.supplementary;
  std::cout << "\nprimary criteria passed: " << primary - static_cast<int>(failed_primary.size()) << "/" << primary
            << '\n';
  if (!expect_mode) return failed_primary.empty() && supplementary_ok ? 0 : 1;

  std::cout << "expected failures:";
  for (const auto& id : expected_failures) std::cout << ' ' << id;
  std::cout << "\nobserved failures:";
  for (const auto& id : failed_primary) std::cout << ' ' << id;
  std::cout << '\n';
  const bool as_expected = failed_primary == expected_failures && supplementary_ok;
  std::cout << (as_expected ? "outcome matches the expected failure list\n"
                            : "outcome differs from the expected failure list\n");
  return as_expected ? 0 : 1;
}

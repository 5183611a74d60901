#include <doctest.h>

#include <set>

#include "geozeta/geodesics.hpp"
#include "geozeta/generators.hpp"
#include "oracles.hpp"

using namespace geozeta;

TEST_CASE("rotation helpers") {
  CHECK(smallest_period({1, 2, 1, 2}) == 2);
  CHECK(smallest_period({1, 2, 3}) == 3);
  CHECK(smallest_period({4, 4, 4}) == 1);
  CHECK(is_minimal_rotation({0, 2, 1}));
  CHECK_FALSE(is_minimal_rotation({2, 1, 0}));
  CHECK(is_minimal_rotation({0, 1, 0, 1}));
  CHECK(minimal_rotation({3, 1, 2, 1, 0}) == std::vector<int>{0, 3, 1, 2, 1});
}

TEST_CASE("closed geodesics are admissible cyclic classes") {
  for (const auto& x : {octahedron(), grid_torus(3, 3), cross_polytope(4)}) {
    const auto t = transfer_operator(x);
    const auto gs = closed_geodesics(x, 6);
    std::set<std::vector<int>> seen;
    for (const auto& g : gs) {
      CHECK(seen.insert(g.cells).second);
      CHECK(g.cells == minimal_rotation(g.cells));
      int reversals = 0;
      for (int i = 0; i < g.length(); ++i) {
        const int e = t.entry(g.cells[i], g.cells[(i + 1) % g.length()]);
        CHECK(e != 0);
        reversals += e < 0;
      }
      CHECK(reversals == g.reversing_number);
      CHECK(g.length() % g.primitive_length == 0);
      // The class is the repetition of its primitive root.
      for (int i = 0; i < g.length(); ++i) CHECK(g.cells[i] == g.cells[i % g.primitive_length]);
    }
  }
}

TEST_CASE("small cases") {
  CHECK(closed_geodesics(octahedron(), 1).empty());
  CHECK(signed_length_spectrum(grid_torus(3, 3), 1).at(1) == 0);

  // The grid has six straight lines of length 3, each in two directions.
  // Length 2 classes are back-and-forth steps along a line.
  const auto g3 = closed_geodesics(grid_torus(3, 3), 3);
  CHECK(std::count_if(g3.begin(), g3.end(), [](const ClosedGeodesic& g) { return g.length() == 3; }) == 12);
  CHECK(std::count_if(g3.begin(), g3.end(), [](const ClosedGeodesic& g) { return g.length() == 2; }) == 18);

  // On the octahedron every length-4 class stays on one equator (it misses an
  // antipodal pair); the ones without backtracking go once around it.
  const auto x = octahedron();
  int loops = 0;
  for (const auto& g : closed_geodesics(x, 4)) {
    if (g.length() != 4) continue;
    std::set<int> verts;
    for (int e : g.cells) {
      const auto v = oracle::cell_vertices(x, 1, e);
      verts.insert(v.begin(), v.end());
    }
    bool on_equator = false;
    for (int axis = 0; axis < 3; ++axis) on_equator = on_equator || (!verts.count(2 * axis) && !verts.count(2 * axis + 1));
    CHECK(on_equator);
    if (std::set<int>(g.cells.begin(), g.cells.end()).size() == 4) ++loops;
  }
  CHECK(loops == 6);  // three equators, two directions
}

TEST_CASE("powers and reversal") {
  const auto gs = closed_geodesics(grid_torus(3, 3), 6);
  int powers = 0;
  for (const auto& g : gs) {
    if (g.primitive()) continue;
    ++powers;
    const auto root_it = std::find_if(gs.begin(), gs.end(), [&](const ClosedGeodesic& h) {
      return h.cells == std::vector<int>(g.cells.begin(), g.cells.begin() + g.primitive_length);
    });
    REQUIRE(root_it != gs.end());
    CHECK(g.sign() == (g.length() / g.primitive_length % 2 == 0 ? 1 : root_it->sign()));
  }
  CHECK(powers > 0);
  // Reversal of a class is a different class.
  for (const auto& g : gs) {
    std::vector<int> rev(g.cells.rbegin(), g.cells.rend());
    rev = minimal_rotation(rev);
    CHECK(std::any_of(gs.begin(), gs.end(), [&](const ClosedGeodesic& h) { return h.cells == rev; }));
  }
}

TEST_CASE("signed length spectrum equals traces of powers") {
  for (const auto& x : {octahedron(), grid_torus(3, 3), tri_torus(3, 3)}) {
    const auto t = transfer_operator(x).matrix();
    const auto spectrum = signed_length_spectrum(x, 8);
    for (int k = 1; k <= 8; ++k) {
      CHECK(spectrum.at(k) == matrix_power(t, k).trace());
      if (k <= 5) CHECK(spectrum.at(k) == oracle::closed_walk_sum(t, k));
    }
  }
}

TEST_CASE("orthogeodesics") {
  const auto x = simplex_boundary(4);
  const auto d = build_dual(x);
  const int abc = oracle::find_cell(x, 2, {0, 1, 2});
  const Chain k1 = boundary(x, Chain::cell(2, abc));
  const Chain k2 = oracle::dual_loop(
      d, {oracle::find_cell(x, 3, {0, 1, 2, 3}), oracle::find_cell(x, 3, {0, 1, 2, 4}), oracle::find_cell(x, 3, {0, 1, 3, 4})});

  const auto paths = orthogeodesics(x, d, k1, k2, 4);
  const auto single = std::find_if(paths.begin(), paths.end(),
                                   [&](const OrthoGeodesic& c) { return c.cells == std::vector<int>{abc}; });
  REQUIRE(single != paths.end());
  // (∂⋆κ₁)_abc = |∂abc|² = 3 and the dual loop crosses abc once.
  CHECK(abs(single->incidence) == inner_product(k1, k1));
  CHECK(abs(star_back(d, k2).coefficient(abc)) == 1);
  for (const auto& c : paths) CHECK(c.length() == 1);  // T = 0 here

  // A knot whose coboundary misses every cell crossed by κ₂.
  const Chain far = boundary(x, Chain::cell(2, oracle::find_cell(x, 2, {2, 3, 4})));
  CHECK(orthogeodesics(x, d, far, k2, 3).empty());

  CHECK_THROWS(orthogeodesics(octahedron(), build_dual(octahedron()), Chain(1), Chain(1), 3));
  CHECK_THROWS(orthogeodesics(x, d, Rational(1, 2) * k1, k2, 3));
}

TEST_CASE("orthogeodesic sums match matrix powers on the 16-cell") {
  const auto x = cross_polytope(4);
  const auto d = build_dual(x);
  const auto t = transfer_operator(x).matrix().cast<Rational>();
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    const Chain k1 = boundary(x, oracle::random_chain(rng, 2, x.cell_count(2), 1));
    const Chain k2 = boundary(d.dual(), oracle::random_chain(rng, 2, d.dual().cell_count(2), 1));
    const auto sums = orthogeodesic_sums(orthogeodesics(x, d, k1, k2, 5), 5);
    auto v = coboundary(x, k1).dense(x.cell_count(2));
    const auto w = star_back(d, k2).dense(x.cell_count(2));
    for (int k = 1; k <= 5; ++k) {
      Rational expected = 0;
      for (std::size_t i = 0; i < v.size(); ++i) expected += v[i] * w[i];
      CHECK(sums.at(k) == expected);
      v = t * v;
    }
  }
}

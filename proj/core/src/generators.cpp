#include "geozeta/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "geozeta/error.hpp"

namespace geozeta {

PolyComplex simplicial_complex(int vertex_count, const std::vector<std::vector<int>>& facets) {
  if (facets.empty()) throw Error("simplicial complex needs at least one facet");
  const int dim = static_cast<int>(facets.front().size()) - 1;
  std::vector<std::set<std::vector<int>>> faces(dim + 1);
  std::map<std::vector<int>, int> orientation;
  for (auto f : facets) {
    if (static_cast<int>(f.size()) != dim + 1) throw Error("facets must all have the same dimension");
    // Parity of the sorting permutation, by counting inversions.
    int inversions = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) inversions += f[i] > f[j];
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw Error("facet with a repeated vertex");
    if (!orientation.emplace(f, inversions % 2 == 0 ? 1 : -1).second) throw Error("facet listed twice");
    for (int v : f)
      if (v < 0 || v >= vertex_count) throw Error("facet vertex out of range");
    // Every nonempty subset of a facet is a face.
    const unsigned subsets = 1u << f.size();
    for (unsigned mask = 1; mask < subsets; ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      faces[s.size() - 1].insert(s);
    }
  }
  std::vector<std::map<std::vector<int>, int>> index(dim + 1);
  std::vector<int> counts(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    int i = 0;
    for (const auto& s : faces[k]) index[k][s] = i++;
    counts[k] = i;
  }
  std::vector<std::vector<PolyComplex::BoundaryList>> bd(dim + 1);
  for (int k = 1; k <= dim; ++k) {
    bd[k].resize(counts[k]);
    for (const auto& [s, c] : index[k]) {
      for (int i = 0; i <= k; ++i) {
        std::vector<int> face = s;
        face.erase(face.begin() + i);
        const int sign = (i % 2 == 0 ? 1 : -1) * (k == dim ? orientation.at(s) : 1);
        bd[k][c].push_back({index[k - 1].at(face), sign});
      }
    }
  }
  return PolyComplex(dim, std::move(counts), std::move(bd));
}

PolyComplex simplex_boundary(int d) {
  if (d < 3 || d > 5) throw Error("simplex_boundary: d must be 3, 4 or 5");
  std::vector<std::vector<int>> facets;
  // Facet i (omitting vertex i) enters ∂[0..d] with sign (-1)^i.
  for (int omit = 0; omit <= d; ++omit) {
    std::vector<int> f;
    for (int v = 0; v <= d; ++v)
      if (v != omit) f.push_back(v);
    if (omit % 2 == 1) std::swap(f[0], f[1]);
    facets.push_back(std::move(f));
  }
  return simplicial_complex(d + 1, facets);
}

PolyComplex cross_polytope(int d) {
  if (d < 3 || d > 4) throw Error("cross_polytope: d must be 3 or 4");
  // Vertex 2i is +e_i and 2i+1 is -e_i; a facet picks one sign per axis.
  std::vector<std::vector<int>> facets;
  for (unsigned signs = 0; signs < (1u << d); ++signs) {
    std::vector<int> f;
    for (int i = 0; i < d; ++i) f.push_back(2 * i + ((signs >> i) & 1u));
    // Outward orientation: the sign of det(±e_0, ..., ±e_{d-1}).
    if (std::popcount(signs) % 2 == 1) std::swap(f[0], f[1]);
    facets.push_back(std::move(f));
  }
  return simplicial_complex(2 * d, facets);
}

PolyComplex octahedron() { return cross_polytope(3); }

PolyComplex build_grid_torus(int a, int b) {
  if (a < 1 || b < 1) throw Error("grid_torus: a and b must be positive");
  const int ab = a * b;
  auto vert = [&](int i, int j) { return ((i % a + a) % a) + a * ((j % b + b) % b); };
  auto horiz = [&](int i, int j) { return vert(i, j); };
  auto vertical = [&](int i, int j) { return ab + vert(i, j); };

  std::vector<std::vector<PolyComplex::BoundaryList>> bd(3);
  bd[1].resize(2 * ab);
  bd[2].resize(ab);
  for (int j = 0; j < b; ++j) {
    for (int i = 0; i < a; ++i) {
      bd[1][horiz(i, j)] = {{vert(i, j), -1}, {vert(i + 1, j), 1}};
      bd[1][vertical(i, j)] = {{vert(i, j), -1}, {vert(i, j + 1), 1}};
      bd[2][vert(i, j)] = {{horiz(i, j), 1}, {vertical(i + 1, j), 1}, {horiz(i, j + 1), -1}, {vertical(i, j), -1}};
    }
  }
  return PolyComplex(2, {ab, 2 * ab, ab}, std::move(bd));
}

PolyComplex build_tri_torus(int a, int b) {
  if (a < 1 || b < 1) throw Error("tri_torus: a and b must be positive");
  const int ab = a * b;
  auto vert = [&](int i, int j) { return ((i % a + a) % a) + a * ((j % b + b) % b); };
  auto horiz = [&](int i, int j) { return vert(i, j); };
  auto vertical = [&](int i, int j) { return ab + vert(i, j); };
  auto diag = [&](int i, int j) { return 2 * ab + vert(i, j); };

  std::vector<std::vector<PolyComplex::BoundaryList>> bd(3);
  bd[1].resize(3 * ab);
  bd[2].resize(2 * ab);
  for (int j = 0; j < b; ++j) {
    for (int i = 0; i < a; ++i) {
      bd[1][horiz(i, j)] = {{vert(i, j), -1}, {vert(i + 1, j), 1}};
      bd[1][vertical(i, j)] = {{vert(i, j), -1}, {vert(i, j + 1), 1}};
      bd[1][diag(i, j)] = {{vert(i, j), -1}, {vert(i + 1, j + 1), 1}};
      // lower triangle (i,j) -> (i+1,j) -> (i+1,j+1), upper (i,j) -> (i+1,j+1) -> (i,j+1)
      bd[2][vert(i, j)] = {{horiz(i, j), 1}, {vertical(i + 1, j), 1}, {diag(i, j), -1}};
      bd[2][ab + vert(i, j)] = {{diag(i, j), 1}, {horiz(i, j + 1), -1}, {vertical(i, j), -1}};
    }
  }
  return PolyComplex(2, {ab, 3 * ab, 2 * ab}, std::move(bd));
}

PolyComplex grid_torus(int a, int b) {
  if (a < 3 || b < 3) throw Error("grid_torus: a and b must be at least 3");
  return build_grid_torus(a, b);
}

PolyComplex tri_torus(int a, int b) {
  if (a < 3 || b < 3) throw Error("tri_torus: a and b must be at least 3");
  return build_tri_torus(a, b);
}

PolyComplex generate(std::string_view name, const std::vector<int>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw Error(std::string(name) + " takes " + std::to_string(n) + " parameter(s), got " +
                  std::to_string(params.size()));
    }
  };
  if (name == "simplex_boundary") {
    need(1);
    return simplex_boundary(params[0]);
  }
  if (name == "octahedron") {
    need(0);
    return octahedron();
  }
  if (name == "cross_polytope") {
    need(1);
    return cross_polytope(params[0]);
  }
  if (name == "grid_torus") {
    need(2);
    return grid_torus(params[0], params[1]);
  }
  if (name == "tri_torus") {
    need(2);
    return tri_torus(params[0], params[1]);
  }
  throw Error("unsupported generator '" + std::string(name) + "'");
}

PolyComplex generate_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string rest(spec.substr(colon + 1));
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream in(rest);
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error("bad generator parameter '" + tok + "'");
      }
    }
  }
  return generate(name, params);
}

}  // namespace geozeta

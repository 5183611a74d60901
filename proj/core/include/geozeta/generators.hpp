#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geozeta/complex.hpp"

namespace geozeta {

/// Fixture complexes. Every generator is deterministic: the same parameters
/// give the same cell order and signs.
///
/// Supported names and parameters:
///   simplex_boundary d      boundary of the d-simplex, d in {3,4,5}
///   octahedron              boundary of the 3-dimensional cross-polytope
///   cross_polytope d        boundary of the d-dimensional cross-polytope, d in {3,4}
///   grid_torus a b          a x b square grid on the 2-torus, a,b >= 3
///   tri_torus a b           the same grid with every square cut along its diagonal
PolyComplex generate(std::string_view name, const std::vector<int>& params);

/// Parses `name` or `name:p1,p2,...` and forwards to generate().
PolyComplex generate_from_spec(std::string_view spec);

PolyComplex simplex_boundary(int d);
PolyComplex octahedron();
PolyComplex cross_polytope(int d);
PolyComplex grid_torus(int a, int b);
PolyComplex tri_torus(int a, int b);

/// Builds a complex from its maximal simplices, given as vertex lists. Faces
/// are ordered lexicographically within each dimension and carry the
/// standard alternating boundary signs; a maximal simplex is oriented by the
/// order in which its vertices are listed.
PolyComplex simplicial_complex(int vertex_count, const std::vector<std::vector<int>>& facets);

/// Torus layouts without the a,b >= 3 check, for building degenerate
/// examples (e.g. the 2 x 2 grid, which fails validation).
///
/// Cells of each kind form blocks of a*b entries; the cell at grid position
/// (i, j) within a block has offset i + a*j. Vertices: one block. Edges:
/// horizontal, vertical, then (tri only) diagonal. Faces: squares, or lower
/// then upper triangles.
PolyComplex build_grid_torus(int a, int b);
PolyComplex build_tri_torus(int a, int b);

}  // namespace geozeta

#include "geozeta/homology.hpp"

#include "geozeta/error.hpp"
#include "geozeta/spectral.hpp"

namespace geozeta {

int betti(const PolyComplex& x, int k) {
  if (k < 0 || k > x.dim()) throw std::out_of_range("betti: degree out of range");
  const std::size_t r_in = rank(x.boundary_matrix(k));
  const std::size_t r_out = rank(x.boundary_matrix(k + 1));
  return x.cell_count(k) - static_cast<int>(r_in + r_out);
}

std::vector<int> betti_numbers(const PolyComplex& x) {
  std::vector<int> out;
  for (int k = 0; k <= x.dim(); ++k) out.push_back(betti(x, k));
  return out;
}

HodgeSolver::HodgeSolver(const PolyComplex& x, int k)
    : x_(&x), k_(k), inverse_(laplacian(x, k).cast<Rational>()) {}

void HodgeSolver::check_degree(const Chain& v) const {
  if (v.degree() != k_) throw Error("Hodge solver: chain has degree " + std::to_string(v.degree()) +
                                    ", expected " + std::to_string(k_));
}

Chain HodgeSolver::harmonic(const Chain& v) const {
  check_degree(v);
  return Chain::from_dense(k_, inverse_.project_kernel(v.dense(x_->cell_count(k_))));
}

Chain HodgeSolver::pseudo_inverse(const Chain& v) const {
  check_degree(v);
  return Chain::from_dense(k_, inverse_.apply(v.dense(x_->cell_count(k_))));
}

HodgeParts HodgeSolver::decompose(const Chain& v) const {
  const Chain kv = pseudo_inverse(v);
  // Δ K v = ∂∂⋆Kv + ∂⋆∂Kv, and Δ K v = v - harmonic(v).
  return {boundary(*x_, coboundary(*x_, kv)), coboundary(*x_, boundary(*x_, kv)), harmonic(v)};
}

Chain pseudo_inverse_apply(const PolyComplex& x, int k, const Chain& v) {
  return HodgeSolver(x, k).pseudo_inverse(v);
}

Chain bounding_chain(const PolyComplex& x, const Chain& kappa) {
  const int k = kappa.degree();
  if (k < 0 || k >= x.dim()) throw NotNullHomologousError("chain degree has no bounding chains");
  const auto solution = solve(x.boundary_matrix(k + 1).cast<Rational>(), kappa.dense(x.cell_count(k)));
  if (!solution) throw NotNullHomologousError("chain of degree " + std::to_string(k) + " does not bound over Q");
  return Chain::from_dense(k + 1, *solution);
}

bool is_null_homologous(const PolyComplex& x, const Chain& kappa) {
  try {
    bounding_chain(x, kappa);
    return true;
  } catch (const NotNullHomologousError&) {
    return false;
  }
}

void require_linking_input(const DualComplex& d, const Chain& k1, const Chain& k2) {
  if (d.dim() != 3) throw Error("linking numbers need a 3-dimensional complex");
  if (k1.degree() != 1 || k2.degree() != 1) throw Error("knots must be 1-chains");
  if (!is_null_homologous(d.base(), k1)) throw NotNullHomologousError("κ₁ does not bound in the complex");
  if (!is_null_homologous(d.dual(), k2)) throw NotNullHomologousError("κ₂ does not bound in the dual complex");
}

Rational linking_oracle(const DualComplex& d, const Chain& k1, const Chain& k2) {
  require_linking_input(d, k1, k2);
  const Chain sigma = bounding_chain(d.base(), k1);
  return inner_product(sigma, star_back(d, k2));
}

Rational linking_hodge(const DualComplex& d, const Chain& k1, const Chain& k2) {
  require_linking_input(d, k1, k2);
  const Chain kk1 = pseudo_inverse_apply(d.base(), 1, k1);
  return inner_product(coboundary(d.base(), kk1), star_back(d, k2));
}

}  // namespace geozeta

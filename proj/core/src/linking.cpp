#include "geozeta/linking.hpp"

#include "geozeta/error.hpp"
#include "geozeta/exact_linalg.hpp"
#include "geozeta/geodesics.hpp"
#include "geozeta/homology.hpp"
#include "geozeta/spectral.hpp"

namespace geozeta {

namespace {

struct EtaData {
  TransferOperator t;
  int regularity = 0;
  Chain start;  // ∂⋆κ₁
  Chain end;    // ⋆κ₂
};

EtaData prepare(const DualComplex& d, const Chain& k1, const Chain& k2) {
  require_linking_input(d, k1, k2);
  const PolyComplex& x = d.base();
  return {transfer_operator(x), require_valid(x), coboundary(x, k1), star_back(d, k2)};
}

Rational sup_norm(const Chain& c) {
  Rational best = 0;
  for (const auto& [cell, v] : c.terms()) best = std::max(best, abs(v));
  return best;
}

Rational l1_norm(const Chain& c) {
  Rational sum = 0;
  for (const auto& [cell, v] : c.terms()) sum += abs(v);
  return sum;
}

}  // namespace

EtaEvaluation eta_exact(const DualComplex& d, const Chain& k1, const Chain& k2, const Rational& z) {
  const EtaData data = prepare(d, k1, k2);
  const int n = static_cast<int>(data.t.size());
  EtaEvaluation out{z, 0, EtaEvaluation::Method::exact_solve, 0, {}};
  if (sgn(z) == 0) return out;

  const RatVector rhs = data.start.dense(n);
  const RatVector w = data.end.dense(n);
  RatMatrix a = data.t.matrix().cast<Rational>() * Rational(-1);
  const Rational inv = 1 / z;
  for (int i = 0; i < n; ++i) a(i, i) += inv;

  if (inv == data.regularity + 2) {
    const SymmetricPseudoInverse k(a);
    if (!k.in_range(rhs)) throw InternalMismatchError("∂⋆κ₁ is not orthogonal to the harmonic chains");
    out.value = dot(k.apply(rhs), w);
  } else {
    out.value = dot(solve_regular(a, rhs), w);
  }
  return out;
}

std::map<int, Rational> eta_coefficients(const DualComplex& d, const Chain& k1, const Chain& k2, int max_len) {
  const EtaData data = prepare(d, k1, k2);
  const int n = static_cast<int>(data.t.size());
  const RatMatrix t = data.t.matrix().cast<Rational>();
  const RatVector w = data.end.dense(n);
  RatVector v = data.start.dense(n);
  std::map<int, Rational> out;
  for (int k = 1; k <= max_len; ++k) {
    out[k] = dot(v, w);
    v = t * v;
  }
  return out;
}

EtaEvaluation eta_partial_sum(const DualComplex& d, const Chain& k1, const Chain& k2, const Rational& z, int L) {
  EtaEvaluation out{z, 0, EtaEvaluation::Method::partial_sum, L, {}};
  if (L <= 0) return out;
  const auto matrix_side = eta_coefficients(d, k1, k2, L);
  const auto paths = orthogeodesics(d.base(), d, k1, k2, L);
  const auto path_side = orthogeodesic_sums(paths, L);
  if (matrix_side != path_side) {
    for (int k = 1; k <= L; ++k)
      if (matrix_side.at(k) != path_side.at(k))
        throw InternalMismatchError("orthogeodesic sum at length " + std::to_string(k) + " is " +
                                    to_string(path_side.at(k)) + " but the matrix side gives " +
                                    to_string(matrix_side.at(k)));
  }
  Rational zk = 1;
  for (int k = 1; k <= L; ++k) {
    zk *= z;
    out.value += zk * matrix_side.at(k);
  }
  out.per_length = matrix_side;
  return out;
}

Rational eta_tail_bound(const DualComplex& d, const Chain& k1, const Chain& k2, const Rational& z, int L) {
  const EtaData data = prepare(d, k1, k2);
  const Rational b = spectral_radius_bound(data.t);
  const Rational scale = sup_norm(data.start) * l1_norm(data.end);
  if (sgn(b) == 0) {
    // T = 0: only the k = 1 term is nonzero.
    return L >= 1 ? Rational(0) : abs(z) * scale;
  }
  const Rational q = abs(z) * b;
  if (q >= 1) throw Error("eta_tail_bound: |z| must be below 1/B = " + to_string(1 / b));
  return scale / b * pow(q, static_cast<unsigned>(L + 1)) / (1 - q);
}

}  // namespace geozeta

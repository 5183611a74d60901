#include "geozeta/geodesics.hpp"

#include <algorithm>

#include "geozeta/error.hpp"

namespace geozeta {

int smallest_period(const std::vector<int>& cyclic) {
  const int q = static_cast<int>(cyclic.size());
  for (int p = 1; p < q; ++p) {
    if (q % p != 0) continue;
    bool same = true;
    for (int i = 0; i < q && same; ++i) same = cyclic[i] == cyclic[(i + p) % q];
    if (same) return p;
  }
  return q;
}

bool is_minimal_rotation(const std::vector<int>& cells) {
  const std::size_t q = cells.size();
  for (std::size_t r = 1; r < q; ++r) {
    for (std::size_t i = 0; i < q; ++i) {
      const int a = cells[(i + r) % q];
      if (a < cells[i]) return false;
      if (a > cells[i]) break;
    }
  }
  return true;
}

std::vector<int> minimal_rotation(std::vector<int> cells) {
  std::vector<int> best = cells;
  for (std::size_t r = 1; r < cells.size(); ++r) {
    std::rotate(cells.begin(), cells.begin() + 1, cells.end());
    best = std::min(best, cells);
  }
  return best;
}

namespace {

// Depth-first walk from `start` through cells >= start. A closed path is
// kept only in its minimal rotation, so every class is emitted once.
class ClosedWalker {
 public:
  ClosedWalker(const TransferOperator& t, int max_len, std::vector<ClosedGeodesic>& out)
      : t_(t), max_len_(max_len), out_(out) {}

  void run(int start) {
    start_ = start;
    path_.assign(1, start);
    extend(0);
  }

 private:
  void extend(int reversals) {
    const int last = path_.back();
    for (const Step& step : t_.steps(last)) {
      if (step.to == start_ && static_cast<int>(path_.size()) >= 2 && is_minimal_rotation(path_)) {
        ClosedGeodesic g;
        g.cells = path_;
        g.reversing_number = reversals + (step.sign < 0);
        g.primitive_length = smallest_period(path_);
        out_.push_back(std::move(g));
      }
      if (step.to < start_ || static_cast<int>(path_.size()) >= max_len_) continue;
      path_.push_back(step.to);
      extend(reversals + (step.sign < 0));
      path_.pop_back();
    }
  }

  const TransferOperator& t_;
  int max_len_;
  std::vector<ClosedGeodesic>& out_;
  int start_ = 0;
  std::vector<int> path_;
};

}  // namespace

std::vector<ClosedGeodesic> closed_geodesics(const TransferOperator& t, int max_len) {
  std::vector<ClosedGeodesic> out;
  if (max_len < 2) return out;
  ClosedWalker walker(t, max_len, out);
  for (int s = 0; s < static_cast<int>(t.size()); ++s) walker.run(s);
  std::sort(out.begin(), out.end(), [](const ClosedGeodesic& a, const ClosedGeodesic& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.cells < b.cells;
  });
  return out;
}

std::vector<ClosedGeodesic> closed_geodesics(const PolyComplex& x, int max_len) {
  return closed_geodesics(transfer_operator(x), max_len);
}

std::map<int, Integer> signed_length_spectrum(const std::vector<ClosedGeodesic>& geodesics, int max_k) {
  std::map<int, Integer> out;
  for (int k = 1; k <= max_k; ++k) out[k] = 0;
  for (const auto& g : geodesics)
    if (g.length() <= max_k) out[g.length()] += g.sign() * g.primitive_length;
  return out;
}

std::map<int, Integer> signed_length_spectrum(const PolyComplex& x, int max_k) {
  return signed_length_spectrum(closed_geodesics(x, max_k), max_k);
}

std::vector<OrthoGeodesic> orthogeodesics(const PolyComplex& x, const DualComplex& d, const Chain& k1,
                                          const Chain& k2, int max_len) {
  if (x.dim() != 3) throw Error("orthogeodesics: the complex must have dimension 3");
  if (!(d.base() == x)) throw Error("orthogeodesics: dual complex belongs to another complex");
  if (k1.degree() != 1 || k2.degree() != 1) throw Error("orthogeodesics: knots must be 1-chains");
  if (!k1.is_integral() || !k2.is_integral()) throw Error("orthogeodesics: knots must be integral chains");

  const TransferOperator t = transfer_operator(x);
  const Chain start_weights = coboundary(x, k1);  // ⟨∂τ, κ₁⟩ = ⟨τ, ∂⋆κ₁⟩
  const Chain end_weights = star_back(d, k2);

  std::vector<OrthoGeodesic> out;
  std::vector<int> path;
  auto walk = [&](auto&& self, int sign, const Rational& first) -> void {
    const int last = path.back();
    const Rational w = end_weights.coefficient(last);
    if (sgn(w) != 0) out.push_back({path, sign, first * w});
    if (static_cast<int>(path.size()) >= max_len) return;
    for (const Step& step : t.steps(last)) {
      path.push_back(step.to);
      self(self, sign * step.sign, first);
      path.pop_back();
    }
  };
  if (max_len < 1) return out;
  for (const auto& [cell, weight] : start_weights.terms()) {
    path.assign(1, cell);
    walk(walk, 1, weight);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const OrthoGeodesic& a, const OrthoGeodesic& b) { return a.length() < b.length(); });
  return out;
}

std::map<int, Rational> orthogeodesic_sums(const std::vector<OrthoGeodesic>& paths, int max_len) {
  std::map<int, Rational> out;
  for (int k = 1; k <= max_len; ++k) out[k] = 0;
  for (const auto& c : paths)
    if (c.length() <= max_len) out[c.length()] += c.sign * c.incidence;
  return out;
}

}  // namespace geozeta

#include "geozeta/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "geozeta/error.hpp"
#include "text.hpp"

namespace geozeta {

using detail::for_each_line;
using detail::parse_nonnegative;
using detail::slurp;

// -- PolyComplex -------------------------------------------------------------

PolyComplex::PolyComplex(int dim, std::vector<int> counts,
                         std::vector<std::vector<BoundaryList>> boundaries)
    : dim_(dim), counts_(std::move(counts)), boundaries_(std::move(boundaries)) {
  if (dim_ < 2) throw Error("complex dimension must be at least 2, got " + std::to_string(dim_));
  if (counts_.size() != static_cast<std::size_t>(dim_ + 1)) {
    throw Error("expected " + std::to_string(dim_ + 1) + " cell counts");
  }
  for (int k = 0; k <= dim_; ++k) {
    if (counts_[k] < 0) throw Error("negative cell count in dimension " + std::to_string(k));
  }
  boundaries_.resize(dim_ + 1);
  boundaries_[0].assign(counts_[0], {});
  for (int k = 1; k <= dim_; ++k) {
    auto& lists = boundaries_[k];
    if (lists.size() != static_cast<std::size_t>(counts_[k])) {
      throw Error("dimension " + std::to_string(k) + ": expected " + std::to_string(counts_[k]) +
                  " boundary lists, got " + std::to_string(lists.size()));
    }
    for (int c = 0; c < counts_[k]; ++c) {
      std::set<int> seen;
      for (const auto& inc : lists[c]) {
        if (inc.face < 0 || inc.face >= counts_[k - 1]) {
          throw Error("cell " + std::to_string(k) + ":" + std::to_string(c) +
                      " references nonexistent face " + std::to_string(inc.face));
        }
        if (inc.sign != 1 && inc.sign != -1) {
          throw Error("cell " + std::to_string(k) + ":" + std::to_string(c) + " has a coefficient other than +1/-1");
        }
        if (!seen.insert(inc.face).second) {
          throw Error("cell " + std::to_string(k) + ":" + std::to_string(c) + " lists face " +
                      std::to_string(inc.face) + " twice");
        }
      }
    }
  }

  coboundaries_.resize(dim_ + 1);
  for (int k = 0; k <= dim_; ++k) coboundaries_[k].assign(counts_[k], {});
  for (int k = 1; k <= dim_; ++k)
    for (int c = 0; c < counts_[k]; ++c)
      for (const auto& inc : boundaries_[k][c]) coboundaries_[k - 1][inc.face].push_back({c, inc.sign});

  const auto& codim1 = boundaries_[dim_ - 1];
  if (!codim1.empty()) {
    const auto first = codim1.front().size();
    if (std::all_of(codim1.begin(), codim1.end(), [&](const auto& l) { return l.size() == first; })) {
      regularity_ = static_cast<int>(first);
    }
  }
}

int PolyComplex::cell_count(int k) const {
  if (k < 0 || k > dim_) return 0;
  return counts_[k];
}

std::span<const Incidence> PolyComplex::boundary(int k, int cell) const {
  if (k < 1 || k > dim_ || cell < 0 || cell >= counts_[k]) throw std::out_of_range("boundary: no such cell");
  return boundaries_[k][cell];
}

std::span<const Incidence> PolyComplex::coboundary(int k, int cell) const {
  if (k < 0 || k > dim_ || cell < 0 || cell >= counts_[k]) throw std::out_of_range("coboundary: no such cell");
  return coboundaries_[k][cell];
}

long PolyComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dim_; ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(counts_[k]);
  return chi;
}

IntMatrix PolyComplex::boundary_matrix(int k) const {
  IntMatrix m(cell_count(k - 1), cell_count(k));
  if (k < 1 || k > dim_) return m;
  for (int c = 0; c < counts_[k]; ++c)
    for (const auto& inc : boundaries_[k][c]) m(inc.face, c) = inc.sign;
  return m;
}

// -- text format -------------------------------------------------------------

namespace {

Incidence parse_signed_face(const std::string& token, std::size_t line) {
  if (token.size() < 2 || (token[0] != '+' && token[0] != '-')) {
    throw ParseError(line, "face entry '" + token + "' must carry an explicit sign, e.g. +3 or -7");
  }
  return {parse_nonnegative(token.substr(1), line, "face index"), token[0] == '+' ? 1 : -1};
}

}  // namespace

PolyComplex parse_complex(std::string_view text) {
  int dim = -1;
  std::vector<int> counts;
  std::vector<bool> counted;
  std::vector<std::vector<PolyComplex::BoundaryList>> lists;
  std::vector<std::vector<bool>> listed;
  bool seen_boundary = false;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    const auto& kw = tok[0];
    if (kw == "pcomplex") {
      if (dim >= 0) throw ParseError(line, "duplicate 'pcomplex' header");
      if (tok.size() != 2) throw ParseError(line, "expected 'pcomplex <n>'");
      dim = parse_nonnegative(tok[1], line, "dimension");
      if (dim < 2) throw ParseError(line, "dimension must be at least 2, got " + tok[1]);
      counts.assign(dim + 1, 0);
      counted.assign(dim + 1, false);
      lists.resize(dim + 1);
      listed.resize(dim + 1);
      return;
    }
    if (dim < 0) throw ParseError(line, "expected 'pcomplex <n>' header before '" + kw + "'");
    if (kw == "cells") {
      if (tok.size() != 3) throw ParseError(line, "expected 'cells <k> <count>'");
      const int k = parse_nonnegative(tok[1], line, "dimension");
      if (k > dim) throw ParseError(line, "cell dimension " + tok[1] + " exceeds complex dimension");
      if (counted[k]) throw ParseError(line, "duplicate 'cells " + tok[1] + "' line");
      if (seen_boundary) throw ParseError(line, "'cells' lines must precede all 'boundary' lines");
      counts[k] = parse_nonnegative(tok[2], line, "cell count");
      counted[k] = true;
      lists[k].assign(counts[k], {});
      listed[k].assign(counts[k], false);
      return;
    }
    if (kw == "boundary") {
      if (tok.size() < 4 || tok[3] != ":") throw ParseError(line, "expected 'boundary <k> <cell> : <±face> ...'");
      seen_boundary = true;
      const int k = parse_nonnegative(tok[1], line, "dimension");
      if (k < 1 || k > dim) throw ParseError(line, "boundary dimension must be in 1.." + std::to_string(dim));
      if (!counted[k] || !counted[k - 1]) {
        throw ParseError(line, "boundary of dimension " + tok[1] + " given before its 'cells' lines");
      }
      const int cell = parse_nonnegative(tok[2], line, "cell index");
      if (cell >= counts[k]) throw ParseError(line, "cell index " + tok[2] + " out of range");
      if (listed[k][cell]) throw ParseError(line, "duplicate boundary line for cell " + tok[1] + ":" + tok[2]);
      listed[k][cell] = true;
      auto& out = lists[k][cell];
      std::set<int> seen;
      for (std::size_t i = 4; i < tok.size(); ++i) {
        const auto inc = parse_signed_face(tok[i], line);
        if (inc.face >= counts[k - 1]) {
          throw ParseError(line, "dangling face index " + std::to_string(inc.face) + " (only " +
                                     std::to_string(counts[k - 1]) + " cells of dimension " +
                                     std::to_string(k - 1) + ")");
        }
        if (!seen.insert(inc.face).second) {
          throw ParseError(line, "face " + std::to_string(inc.face) + " listed twice in one boundary");
        }
        out.push_back(inc);
      }
      return;
    }
    throw ParseError(line, "unknown keyword '" + kw + "'");
  });

  if (dim < 0) throw ParseError(0, "missing 'pcomplex <n>' header");
  for (int k = 0; k <= dim; ++k) {
    if (!counted[k]) throw ParseError(0, "missing 'cells " + std::to_string(k) + " <count>' line");
  }
  for (int k = 1; k <= dim; ++k) {
    for (int c = 0; c < counts[k]; ++c) {
      if (!listed[k][c]) {
        throw ParseError(0, "missing boundary line for cell " + std::to_string(k) + ":" + std::to_string(c));
      }
    }
  }
  return PolyComplex(dim, std::move(counts), std::move(lists));
}

PolyComplex read_complex_file(const std::string& path) { return parse_complex(slurp(path)); }

std::string emit_complex(const PolyComplex& complex, const std::vector<std::string>& header) {
  std::ostringstream out;
  for (const auto& h : header) out << "# " << h << '\n';
  out << "pcomplex " << complex.dim() << '\n';
  for (int k = 0; k <= complex.dim(); ++k) out << "cells " << k << ' ' << complex.cell_count(k) << '\n';
  for (int k = 1; k <= complex.dim(); ++k) {
    for (int c = 0; c < complex.cell_count(k); ++c) {
      out << "boundary " << k << ' ' << c << " :";
      for (const auto& inc : complex.boundary(k, c)) out << ' ' << (inc.sign > 0 ? '+' : '-') << inc.face;
      out << '\n';
    }
  }
  return out.str();
}

std::string complex_fingerprint(const PolyComplex& complex) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : emit_complex(complex)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

// -- validation --------------------------------------------------------------

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck& ValidationReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no validation check named '" + std::string(name) + "'");
}

namespace {

ValidationCheck check_boundary_squared(const PolyComplex& x) {
  ValidationCheck out{std::string(kCheckBoundarySquared), true, {}, {}};
  for (int k = 2; k <= x.dim(); ++k) {
    for (int c = 0; c < x.cell_count(k); ++c) {
      std::map<int, int> acc;
      for (const auto& f : x.boundary(k, c))
        for (const auto& g : x.boundary(k - 1, f.face)) acc[g.face] += f.sign * g.sign;
      if (std::any_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second != 0; })) {
        out.passed = false;
        out.offenders.push_back({k, c});
      }
    }
  }
  if (!out.passed) out.detail = "boundary of boundary is nonzero";
  return out;
}

ValidationCheck check_regular(const PolyComplex& x) {
  ValidationCheck out{std::string(kCheckRegular), true, {}, {}};
  const int k = x.dim() - 1;
  std::map<std::size_t, int> histogram;
  for (int c = 0; c < x.cell_count(k); ++c) ++histogram[x.boundary(k, c).size()];
  if (histogram.size() <= 1) return out;
  // The most common face count is taken as N; everything else is an offender.
  std::size_t mode = histogram.begin()->first;
  for (const auto& [size, n] : histogram)
    if (n > histogram[mode]) mode = size;
  out.passed = false;
  for (int c = 0; c < x.cell_count(k); ++c)
    if (x.boundary(k, c).size() != mode) out.offenders.push_back({k, c});
  out.detail = "codimension-1 cells do not all have the same number of faces";
  return out;
}

ValidationCheck check_two_cofaces(const PolyComplex& x) {
  ValidationCheck out{std::string(kCheckTwoCofaces), true, {}, {}};
  const int k = x.dim() - 1;
  for (int c = 0; c < x.cell_count(k); ++c) {
    if (x.coboundary(k, c).size() != 2) {
      out.passed = false;
      out.offenders.push_back({k, c});
    }
  }
  if (!out.passed) out.detail = "codimension-1 cells must lie in exactly two top cells";
  return out;
}

ValidationCheck check_pair_uniqueness(const PolyComplex& x) {
  ValidationCheck out{std::string(kCheckPairUniqueness), true, {}, {}};
  const int k = x.dim() - 1;
  std::map<std::pair<int, int>, int> shared_faces;
  for (int f = 0; f < x.cell_count(k - 1); ++f) {
    const auto cof = x.coboundary(k - 1, f);
    for (std::size_t i = 0; i < cof.size(); ++i)
      for (std::size_t j = i + 1; j < cof.size(); ++j)
        ++shared_faces[std::minmax(cof[i].face, cof[j].face)];
  }
  std::map<std::pair<int, int>, int> shared_tops;
  for (int t = 0; t < x.cell_count(k + 1); ++t) {
    const auto bd = x.boundary(k + 1, t);
    for (std::size_t i = 0; i < bd.size(); ++i)
      for (std::size_t j = i + 1; j < bd.size(); ++j)
        ++shared_tops[std::minmax(bd[i].face, bd[j].face)];
  }
  std::set<int> bad;
  for (const auto* counts : {&shared_faces, &shared_tops}) {
    for (const auto& [pair, n] : *counts) {
      if (n > 1) {
        bad.insert(pair.first);
        bad.insert(pair.second);
      }
    }
  }
  for (int c : bad) out.offenders.push_back({k, c});
  if (!bad.empty()) {
    out.passed = false;
    out.detail = "some codimension-1 cells share more than one face or more than one top cell";
  }
  return out;
}

}  // namespace

ValidationReport validate(const PolyComplex& complex) {
  ValidationReport report;
  report.checks.push_back(check_boundary_squared(complex));
  report.checks.push_back(check_regular(complex));
  report.checks.push_back(check_two_cofaces(complex));
  report.checks.push_back(check_pair_uniqueness(complex));
  if (report.check(kCheckRegular).passed) report.regularity_degree = complex.regularity_degree();
  return report;
}

int require_valid(const PolyComplex& complex) {
  const auto report = validate(complex);
  for (const auto& c : report.checks) {
    if (!c.passed) {
      std::string msg = "complex failed validation (" + c.name + ")";
      if (!c.offenders.empty()) {
        msg += ", first offending cell " + std::to_string(c.offenders.front().dim) + ":" +
               std::to_string(c.offenders.front().index);
      }
      throw Error(msg);
    }
  }
  if (!complex.regularity_degree()) throw Error("complex has no codimension-1 cells");
  return *complex.regularity_degree();
}

// -- chains ------------------------------------------------------------------

Chain Chain::cell(int degree, int index, const Rational& coefficient) {
  Chain c(degree);
  c.add(index, coefficient);
  return c;
}

Chain Chain::from_dense(int degree, const RatVector& values) {
  Chain c(degree);
  for (std::size_t i = 0; i < values.size(); ++i) c.add(static_cast<int>(i), values[i]);
  return c;
}

bool Chain::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

Rational Chain::coefficient(int cell) const {
  const auto it = terms_.find(cell);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add(int cell, const Rational& coefficient) {
  if (cell < 0) throw std::out_of_range("chain: negative cell index");
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(cell, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

RatVector Chain::dense(int size) const {
  RatVector v(size);
  for (const auto& [cell, coeff] : terms_) {
    if (cell >= size) throw std::out_of_range("chain references cell " + std::to_string(cell) + " beyond basis size");
    v[cell] = coeff;
  }
  return v;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("chain degree mismatch");
  for (const auto& [cell, coeff] : other.terms_) add(cell, coeff);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("chain degree mismatch");
  for (const auto& [cell, coeff] : other.terms_) add(cell, -coeff);
  return *this;
}

Chain& Chain::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [cell, coeff] : terms_) coeff *= s;
  return *this;
}

Rational inner_product(const Chain& a, const Chain& b) {
  if (a.degree() != b.degree()) {
    throw Error("inner product of chains of degree " + std::to_string(a.degree()) + " and " +
                                std::to_string(b.degree()));
  }
  Rational s = 0;
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = &small == &a ? b : a;
  for (const auto& [cell, coeff] : small.terms()) {
    const auto it = large.terms().find(cell);
    if (it != large.terms().end()) s += coeff * it->second;
  }
  return s;
}

Chain boundary(const PolyComplex& complex, const Chain& chain) {
  const int k = chain.degree();
  Chain out(k - 1);
  if (k < 1 || k > complex.dim()) return out;
  for (const auto& [cell, coeff] : chain.terms()) {
    if (cell >= complex.cell_count(k)) throw std::out_of_range("chain cell out of range");
    for (const auto& inc : complex.boundary(k, cell)) out.add(inc.face, coeff * inc.sign);
  }
  return out;
}

Chain coboundary(const PolyComplex& complex, const Chain& chain) {
  const int k = chain.degree();
  Chain out(k + 1);
  if (k < 0 || k >= complex.dim()) return out;
  for (const auto& [cell, coeff] : chain.terms()) {
    if (cell >= complex.cell_count(k)) throw std::out_of_range("chain cell out of range");
    for (const auto& inc : complex.coboundary(k, cell)) out.add(inc.face, coeff * inc.sign);
  }
  return out;
}

Chain parse_chain(std::string_view text) {
  std::optional<Chain> chain;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (tok[0] == "chain") {
      if (chain) throw ParseError(line, "duplicate 'chain' header");
      if (tok.size() != 2) throw ParseError(line, "expected 'chain <k>'");
      chain.emplace(parse_nonnegative(tok[1], line, "degree"));
      return;
    }
    if (!chain) throw ParseError(line, "expected 'chain <k>' header");
    if (tok.size() != 2) throw ParseError(line, "expected '<rational> <cell-index>'");
    Rational coeff;
    try {
      coeff = parse_rational(tok[0]);
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
    chain->add(parse_nonnegative(tok[1], line, "cell index"), coeff);
  });
  if (!chain) throw ParseError(0, "missing 'chain <k>' header");
  return *chain;
}

Chain read_chain_file(const std::string& path) { return parse_chain(slurp(path)); }

std::string emit_chain(const Chain& chain) {
  std::ostringstream out;
  out << "chain " << chain.degree() << '\n';
  for (const auto& [cell, coeff] : chain.terms()) out << to_string(coeff) << ' ' << cell << '\n';
  return out.str();
}

}  // namespace geozeta

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "geozeta/complex.hpp"
#include "geozeta/dual.hpp"
#include "geozeta/error.hpp"
#include "geozeta/generators.hpp"
#include "geozeta/geodesics.hpp"
#include "geozeta/homology.hpp"
#include "geozeta/l2.hpp"
#include "geozeta/linking.hpp"
#include "geozeta/spectral.hpp"
#include "geozeta/zeta.hpp"

namespace geozeta::cli {
namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string real(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

template <typename T>
std::string joined(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ' ';
    if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, Integer>) {
      os << to_string(values[i]);
    } else {
      os << values[i];
    }
  }
  return os.str();
}

// Fields are `key: value` in both modes. Tables are aligned columns for people
// and `name: v1 v2 ...` lines (after a `name_columns:` line) for scripts.
class Report {
 public:
  Report(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  void field(const std::string& key, const std::string& value) { out_ << key << ": " << value << '\n'; }
  void field(const std::string& key, long value) { field(key, std::to_string(value)); }
  void field(const std::string& key, const Rational& value) { field(key, to_string(value)); }

  void note(const std::string& text) {
    if (!machine_) out_ << text << '\n';
  }

  void table(const std::string& name, const std::vector<std::string>& columns,
             const std::vector<std::vector<std::string>>& rows) {
    if (machine_) {
      out_ << name << "_columns: " << joined(columns) << '\n';
      for (const auto& r : rows) out_ << name << ": " << joined(r) << '\n';
      return;
    }
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      width[c] = columns[c].size();
      for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out_ << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cells[c];
      }
      out_ << '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
  }

  int verdict(bool pass) {
    if (machine_) {
      field("result", pass ? "PASS" : "FAIL");
    } else {
      out_ << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kExitOk : kExitCheckFailed;
  }

 private:
  std::ostream& out_;
  bool machine_;
};

// -- inputs ------------------------------------------------------------------

struct ComplexSource {
  std::string path;
  std::string gen;

  void attach(CLI::App* sub) {
    auto* p = sub->add_option("-c,--complex", path, "complex file in pcomplex format");
    auto* g = sub->add_option("-g,--gen", gen, "generated fixture, e.g. grid_torus:3,3");
    p->excludes(g);
  }

  PolyComplex load() const {
    if (!gen.empty()) return generate_from_spec(gen);
    if (path.empty()) throw UsageError("one of --complex or --gen is required");
    try {
      return read_complex_file(path);
    } catch (const Error& e) {
      throw Error(path + ": " + e.what());
    }
  }
};

struct CoverSource {
  std::string path;
  std::string perm;
  std::string gen;

  void attach(CLI::App* sub) {
    auto* c = sub->add_option("--cover", path, "cover complex file");
    auto* p = sub->add_option("--perm", perm, "permutation file for the generator of the deck group");
    auto* g = sub->add_option("--gen-cover", gen, "built cyclic cover KIND:a,b,m with KIND grid or tri");
    c->needs(p);
    p->needs(c);
    g->excludes(c);
    g->excludes(p);
  }

  CoverData load() const {
    if (!gen.empty()) {
      const auto colon = gen.find(':');
      std::vector<int> params;
      if (colon != std::string::npos) {
        std::stringstream ss(gen.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            std::size_t used = 0;
            params.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
          } catch (const std::logic_error&) {
            throw UsageError("bad --gen-cover parameter '" + item + "'");
          }
        }
      }
      if (params.size() != 3) throw UsageError("--gen-cover expects KIND:a,b,m");
      return build_cyclic_cover(gen.substr(0, colon), params[0], params[1], params[2]);
    }
    if (path.empty()) throw UsageError("either --gen-cover or both --cover and --perm are required");
    PolyComplex cover = [&] {
      try {
        return read_complex_file(path);
      } catch (const Error& e) {
        throw Error(path + ": " + e.what());
      }
    }();
    auto generator = [&] {
      try {
        return read_permutation_file(perm);
      } catch (const Error& e) {
        throw Error(perm + ": " + e.what());
      }
    }();
    return CoverData(std::move(cover), std::move(generator));
  }
};

Rational exact_argument(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what() + " (use p/q, decimals are not accepted)");
  }
}

Chain chain_file(const std::string& path) {
  try {
    return read_chain_file(path);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("error writing " + path);
}

// -- commands ----------------------------------------------------------------

int cmd_validate(const ComplexSource& src, Report& r, std::ostream& err) {
  const auto x = src.load();
  const auto report = validate(x);
  for (const auto& c : report.checks) {
    if (c.passed) {
      r.field(c.name, "ok");
      continue;
    }
    std::string what = "FAIL (" + std::to_string(c.offenders.size()) + " offending cells";
    for (std::size_t i = 0; i < std::min<std::size_t>(c.offenders.size(), 5); ++i) {
      what += (i ? ", " : ": ") + std::to_string(c.offenders[i].dim) + ":" + std::to_string(c.offenders[i].index);
    }
    if (c.offenders.size() > 5) what += ", ...";
    r.field(c.name, what + ")");
  }
  r.field("regularity", report.regularity_degree ? std::to_string(*report.regularity_degree) : "none");
  r.field("valid", report.passed() ? "yes" : "no");
  if (!report.passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) err << "error: " << c.name << ": " << c.detail << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

IntMatrix named_matrix(const PolyComplex& x, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  int k = -1;
  if (colon != std::string::npos) {
    try {
      k = std::stoi(spec.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UsageError("bad degree in --matrix " + spec);
    }
  }
  auto need_degree = [&](int lo, int hi) {
    if (k < lo || k > hi) {
      throw UsageError("--matrix " + name + " needs a degree in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
  };
  if (name == "transfer") return transfer_operator(x).matrix();
  if (name == "boundary") {
    need_degree(1, x.dim());
    return x.boundary_matrix(k);
  }
  if (name == "laplacian") {
    need_degree(0, x.dim());
    return laplacian(x, k);
  }
  if (name == "star" || name == "star-back") {
    need_degree(0, x.dim());
    const auto d = build_dual(x);
    return name == "star" ? d.star_matrix(k) : d.star_back_matrix(k);
  }
  throw UsageError("unknown matrix '" + name + "' (boundary:K, laplacian:K, transfer, star:K, star-back:K)");
}

int cmd_info(const ComplexSource& src, const std::string& matrix, Report& r, std::ostream& out) {
  const auto x = src.load();
  r.field("dim", x.dim());
  r.field("cells", joined(x.cell_counts()));
  r.field("euler_characteristic", x.euler_characteristic());
  r.field("fingerprint", complex_fingerprint(x));
  const auto report = validate(x);
  r.field("valid", report.passed() ? "yes" : "no");
  if (report.passed()) {
    const int n_reg = *report.regularity_degree;
    const auto t = transfer_operator(x);
    r.field("regularity", n_reg);
    r.field("transfer_size", static_cast<long>(t.size()));
    long nonzero = 0;
    for (std::size_t i = 0; i < t.size(); ++i) nonzero += static_cast<long>(t.steps(static_cast<int>(i)).size());
    r.field("transfer_nonzeros", nonzero);
    r.field("spectral_radius_bound", spectral_radius_bound(t));
    const auto mismatches = laplacian_identity_mismatches(x);
    r.field("laplacian_identity",
            mismatches.empty() ? "holds" : "fails (" + std::to_string(mismatches.size()) + " mismatched entries)");
  }
  if (!matrix.empty()) {
    const auto m = named_matrix(x, matrix);
    r.field("matrix", matrix + " " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    write_triplets(out, m);
  }
  return kExitOk;
}

int cmd_betti(const ComplexSource& src, Report& r) {
  const auto x = src.load();
  const auto b = betti_numbers(x);
  for (std::size_t k = 0; k < b.size(); ++k) r.field("b" + std::to_string(k), b[k]);
  return kExitOk;
}

int cmd_zeta(const ComplexSource& src, const std::string& at, Report& r) {
  const auto x = src.load();
  const int n_reg = require_valid(x);
  const int top = x.dim() - 1;
  const auto p = zeta_polynomial(transfer_operator(x));
  const Rational z0(1, n_reg + 2);
  const int order = vanishing_order(p, z0);
  const int b = betti(x, top);

  r.field("cells_" + std::to_string(top), x.cell_count(top));
  r.field("degree", p.degree());
  r.field("coefficients", joined(p.coefficients()));
  r.field("N", n_reg);
  r.field("zeta(1/(N+2))", p(z0));
  r.field("order_at_1/(N+2)", order);
  r.field("b" + std::to_string(top), b);
  if (!at.empty()) {
    const Rational z = exact_argument(at, "--at");
    r.field("zeta(" + to_string(z) + ")", p(z));
    r.field("order_at_" + to_string(z), vanishing_order(p, z));
  }
  const bool shape = p.degree() <= x.cell_count(top) && p.coefficient(0) == 1;
  if (!shape) r.note("zeta is not a polynomial of degree <= c with constant term 1");
  if (order != b) r.note("vanishing order differs from b" + std::to_string(top));
  return r.verdict(shape && order == b);
}

int cmd_geodesics(const ComplexSource& src, int max_len, bool list, Report& r) {
  const auto x = src.load();
  require_valid(x);
  const auto all = closed_geodesics(x, max_len);
  const auto spectrum = signed_length_spectrum(all, max_len);
  std::vector<std::vector<std::string>> rows;
  for (int k = 1; k <= max_len; ++k) {
    const auto count = std::count_if(all.begin(), all.end(), [&](const auto& g) { return g.length() == k; });
    rows.push_back({std::to_string(k), std::to_string(count), to_string(spectrum.at(k))});
  }
  r.table("geodesics", {"k", "count", "signed_sum"}, rows);
  if (list) {
    for (const auto& g : all) {
      r.field("geodesic", std::to_string(g.length()) + " " + (g.sign() > 0 ? "+" : "-") + " " +
                              std::to_string(g.primitive_length) + " : " + joined(g.cells));
    }
  }
  return kExitOk;
}

int cmd_trace_check(const ComplexSource& src, int max_k, Report& r) {
  const auto x = src.load();
  require_valid(x);
  const auto t = transfer_operator(x).matrix();
  const auto spectrum = signed_length_spectrum(x, max_k);
  bool pass = true;
  std::vector<std::vector<std::string>> rows;
  IntMatrix power = IntMatrix::identity(t.rows());
  for (int k = 1; k <= max_k; ++k) {
    power = power * t;
    const Integer trace = power.trace();
    const bool ok = spectrum.at(k) == trace;
    pass = pass && ok;
    rows.push_back({std::to_string(k), to_string(spectrum.at(k)), to_string(trace), ok ? "yes" : "no"});
  }
  r.table("trace", {"k", "signed_sum", "trace", "match"}, rows);
  return r.verdict(pass);
}

struct LinkingArgs {
  std::string k1, k2, at;
  int max_len = 0;
};

int cmd_linking(const ComplexSource& src, const LinkingArgs& a, Report& r) {
  const auto x = src.load();
  const int n_reg = require_valid(x);
  const auto d = build_dual(x);
  const Chain k1 = chain_file(a.k1);
  const Chain k2 = chain_file(a.k2);
  require_linking_input(d, k1, k2);

  const Rational z0(1, n_reg + 2);
  const Rational z = a.at.empty() ? z0 : exact_argument(a.at, "--at");
  const Rational lk = linking_oracle(d, k1, k2);
  const auto eta = eta_exact(d, k1, k2, z);
  r.field("linking_number", lk);
  r.field("z", z);
  r.field("eta", eta.value);
  bool pass = true;
  if (z == z0) {
    pass = eta.value == lk;
    if (!pass) r.note("eta(1/(N+2)) differs from the linking number");
  }

  if (a.max_len > 0) {
    const Rational q = abs(z) * spectral_radius_bound(transfer_operator(x));
    const auto partial = eta_partial_sum(d, k1, k2, q < 1 ? z : Rational(0), a.max_len);
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : partial.per_length) rows.push_back({std::to_string(k), to_string(v)});
    r.table("orthogeodesics", {"k", "signed_sum"}, rows);
    if (q < 1) {
      const Rational bound = eta_tail_bound(d, k1, k2, z, a.max_len);
      const bool within = abs(eta.value - partial.value) <= bound;
      r.field("partial_sum", partial.value);
      r.field("tail_bound", bound);
      r.field("within_bound", within ? "yes" : "no");
      pass = pass && within;
    } else {
      r.field("partial_sum", "skipped (|z| times the row-sum bound is >= 1)");
    }
  }
  return r.verdict(pass);
}

struct CoverBuildArgs {
  std::string kind = "grid";
  int a = 3, b = 3, m = 3;
  std::string prefix;
};

int cmd_cover_build(const CoverBuildArgs& a, Report& r, std::ostream& out) {
  const auto c = build_cyclic_cover(a.kind, a.a, a.b, a.m);
  std::vector<std::string> header{"cyclic cover " + a.kind + " " + std::to_string(a.a) + "x" + std::to_string(a.b) +
                                  ", order " + std::to_string(a.m)};
  const std::string complex_text = emit_complex(c.cover(), header);
  std::vector<std::vector<int>> generator;
  for (int k = 0; k <= c.dim(); ++k) generator.push_back(c.generator(k));
  const std::string perm_text = emit_permutation(generator);
  if (a.prefix.empty()) {
    out << complex_text << perm_text;
    return kExitOk;
  }
  write_text(a.prefix + ".pcx", complex_text, out);
  write_text(a.prefix + ".perm", perm_text, out);
  r.field("order", c.order());
  r.field("cover_cells", joined(c.cover().cell_counts()));
  r.field("base_cells", joined(c.base().cell_counts()));
  r.field("complex", a.prefix + ".pcx");
  r.field("permutation", a.prefix + ".perm");
  return kExitOk;
}

int cmd_l2_betti(const CoverSource& src, Report& r) {
  const auto c = src.load();
  r.field("order", c.order());
  for (int k = 0; k <= c.dim(); ++k) r.field("l2_b" + std::to_string(k), l2_betti(c, k));
  return kExitOk;
}

struct ZetaCheckArgs {
  std::vector<std::string> s = {"1/100", "1/1000", "1/10000"};
  std::string s_normalized = "1/1000000";
  std::string slope_tol = "5/100";
  std::string det_tol = "1/1000";
};

int cmd_l2_zeta_check(const CoverSource& src, const ZetaCheckArgs& a, Report& r) {
  const auto c = src.load();
  std::vector<Rational> s_values;
  for (const auto& s : a.s) s_values.push_back(exact_argument(s, "--s"));
  const Rational s_norm = exact_argument(a.s_normalized, "--s-normalized");
  const double slope_tol = to_double(exact_argument(a.slope_tol, "--slope-tol"));
  const double det_tol = to_double(exact_argument(a.det_tol, "--det-tol"));

  const auto report = fk_zeta_asymptotic_check(c, s_values);
  const auto at_norm = fk_zeta_asymptotic_check(c, {s_norm}).samples.front();
  const double b = to_double(report.l2_betti);

  r.field("order", c.order());
  r.field("l2_betti", report.l2_betti);
  r.field("cells", report.cells);
  r.field("fk_det_laplacian", real(report.fk_det_laplacian));
  std::vector<std::vector<std::string>> rows;
  for (const auto& smp : report.samples) {
    rows.push_back({to_string(smp.s), real(smp.log_zeta), real(smp.log_chi), real(smp.normalized)});
  }
  r.table("samples", {"s", "log_zeta", "log_chi", "normalized"}, rows);
  r.field("slope_transfer", real(report.slope_transfer));
  r.field("slope_laplacian", real(report.slope_laplacian));
  r.field("normalized_at_" + to_string(s_norm), real(at_norm.normalized));

  // With b = 0 a relative slope tolerance is meaningless; fall back to absolute.
  const double slope_err = std::abs(report.slope_transfer - b) / (b > 0 ? b : 1.0);
  const double det_err = std::abs(at_norm.normalized / report.fk_det_laplacian - 1.0);
  r.field("slope_error", real(slope_err));
  r.field("det_error", real(det_err));
  return r.verdict(slope_err <= slope_tol && det_err <= det_tol);
}

struct PsiArgs {
  int terms = 10;
  std::string t = "1000";
  std::string tol = "1/1000000";
};

int cmd_psi(const CoverSource& src, const PsiArgs& a, Report& r) {
  const auto c = src.load();
  const auto coeffs = psi_series(c, a.terms);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < coeffs.size(); ++k) rows.push_back({std::to_string(k + 1), to_string(coeffs[k])});
  r.table("psi", {"k", "coefficient"}, rows);
  const Rational b = l2_betti(c, c.dim() - 1);
  const double t = to_double(exact_argument(a.t, "--t"));
  const double tol = to_double(exact_argument(a.tol, "--tol"));
  const double h = heat_trace(c, t);
  r.field("l2_betti", b);
  r.field("heat_trace", real(h));
  r.field("heat_error", real(std::abs(h - to_double(b))));
  return r.verdict(std::abs(h - to_double(b)) <= tol);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact transfer operators, zeta polynomials and linking numbers on polyhedral complexes", "geozeta"};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  app.add_flag("--machine", machine, "line-oriented key: value output");

  std::string output;
  ComplexSource src;

  auto* validate_cmd = app.add_subcommand("validate", "check the structural invariants of a complex");
  src.attach(validate_cmd);

  std::string matrix;
  auto* info_cmd = app.add_subcommand("info", "cell counts, regularity and the Laplacian identity");
  src.attach(info_cmd);
  info_cmd->add_option("--matrix", matrix, "also print boundary:K, laplacian:K, transfer, star:K or star-back:K as triplets");

  std::string gen_spec;
  auto* generate_cmd = app.add_subcommand("generate", "emit a fixture complex");
  generate_cmd->add_option("spec", gen_spec, "fixture, e.g. octahedron or grid_torus:3,3")->required();
  generate_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* dual_cmd = app.add_subcommand("dual", "emit the dual complex");
  src.attach(dual_cmd);
  dual_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* betti_cmd = app.add_subcommand("betti", "rational Betti numbers");
  src.attach(betti_cmd);

  std::string at;
  auto* zeta_cmd = app.add_subcommand("zeta", "zeta polynomial and its vanishing order at 1/(N+2)");
  src.attach(zeta_cmd);
  zeta_cmd->add_option("--at", at, "also evaluate at this exact rational p/q");

  int max_len = 6;
  bool list = false;
  auto* geodesics_cmd = app.add_subcommand("geodesics", "closed geodesic counts by length");
  src.attach(geodesics_cmd);
  geodesics_cmd->add_option("--max-len", max_len, "longest class to enumerate")->check(CLI::Range(1, 12));
  geodesics_cmd->add_flag("--list", list, "list every class");

  int max_k = 6;
  auto* trace_cmd = app.add_subcommand("trace-check", "signed closed geodesic sums against tr T^k");
  src.attach(trace_cmd);
  trace_cmd->add_option("--max-k", max_k, "largest k")->check(CLI::Range(1, 12));

  LinkingArgs link;
  auto* linking_cmd = app.add_subcommand("linking", "linking number of a base knot and a dual knot (n = 3)");
  src.attach(linking_cmd);
  linking_cmd->add_option("--k1", link.k1, "1-chain in the complex")->required();
  linking_cmd->add_option("--k2", link.k2, "1-chain in the dual complex")->required();
  linking_cmd->add_option("--max-len", link.max_len, "print orthogeodesic sums up to this length")->check(CLI::Range(1, 12));
  linking_cmd->add_option("--at", link.at, "evaluation point p/q (default 1/(N+2))");

  CoverBuildArgs cover_args;
  auto* cover_cmd = app.add_subcommand("cover-build", "build a cyclic cover of a torus fixture");
  cover_cmd->add_option("--kind", cover_args.kind, "grid or tri")->check(CLI::IsMember({"grid", "tri"}));
  cover_cmd->add_option("--a", cover_args.a, "base width");
  cover_cmd->add_option("--b", cover_args.b, "base height");
  cover_cmd->add_option("--m", cover_args.m, "order of the deck group");
  cover_cmd->add_option("--prefix", cover_args.prefix, "write PREFIX.pcx and PREFIX.perm (default: both to stdout)");

  CoverSource cover_src;
  auto* l2_betti_cmd = app.add_subcommand("l2-betti", "L2 Betti numbers of a finite cover");
  cover_src.attach(l2_betti_cmd);

  ZetaCheckArgs zc;
  auto* l2_zeta_cmd = app.add_subcommand("l2-zeta-check", "Fuglede-Kadison zeta asymptotics as s -> 0");
  cover_src.attach(l2_zeta_cmd);
  l2_zeta_cmd->add_option("--s", zc.s, "sample points p/q for the slope fit");
  l2_zeta_cmd->add_option("--s-normalized", zc.s_normalized, "point for the normalized determinant");
  l2_zeta_cmd->add_option("--slope-tol", zc.slope_tol, "relative slope tolerance");
  l2_zeta_cmd->add_option("--det-tol", zc.det_tol, "relative determinant tolerance");

  PsiArgs psi;
  auto* psi_cmd = app.add_subcommand("psi", "Psi-series coefficients and the heat trace");
  cover_src.attach(psi_cmd);
  psi_cmd->add_option("--terms", psi.terms, "number of coefficients")->check(CLI::Range(0, 20));
  psi_cmd->add_option("--t", psi.t, "heat trace time p/q");
  psi_cmd->add_option("--tol", psi.tol, "allowed distance of the heat trace from the L2 Betti number");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report r(out, machine);
  try {
    if (*validate_cmd) return cmd_validate(src, r, err);
    if (*info_cmd) return cmd_info(src, matrix, r, out);
    if (*generate_cmd) {
      write_text(output, emit_complex(generate_from_spec(gen_spec), {"generated: " + gen_spec}), out);
      return kExitOk;
    }
    if (*dual_cmd) {
      write_text(output, emit_dual(build_dual(src.load())), out);
      return kExitOk;
    }
    if (*betti_cmd) return cmd_betti(src, r);
    if (*zeta_cmd) return cmd_zeta(src, at, r);
    if (*geodesics_cmd) return cmd_geodesics(src, max_len, list, r);
    if (*trace_cmd) return cmd_trace_check(src, max_k, r);
    if (*linking_cmd) return cmd_linking(src, link, r);
    if (*cover_cmd) return cmd_cover_build(cover_args, r, out);
    if (*l2_betti_cmd) return cmd_l2_betti(cover_src, r);
    if (*l2_zeta_cmd) return cmd_l2_zeta_check(cover_src, zc, r);
    if (*psi_cmd) return cmd_psi(cover_src, psi, r);
  } catch (const InternalMismatchError& e) {
    // Two independent computations disagreed: that is a failed check, not bad input.
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace geozeta::cli

#include <doctest.h>

#include <filesystem>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "geozeta/dual.hpp"
#include "geozeta/generators.hpp"
#include "geozeta/l2.hpp"
#include "geozeta/spectral.hpp"
#include "oracles.hpp"

using namespace geozeta;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;

  // Every `key: value` line; later duplicates are kept as extra entries.
  std::multimap<std::string, std::string> fields() const {
    std::multimap<std::string, std::string> f;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
      const auto sep = line.find(": ");
      if (sep != std::string::npos) f.emplace(line.substr(0, sep), line.substr(sep + 2));
    }
    return f;
  }
  std::string field(const std::string& key) const {
    const auto f = fields();
    const auto it = f.find(key);
    return it == f.end() ? "<missing>" : it->second;
  }
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string data(const std::string& name) { return std::string(GEOZETA_TEST_DATA) + "/" + name; }

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "geozeta_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit 1, help exits 0") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"zeta", "--bogus"}).code == cli::kExitUsage);
  CHECK(run_cli({"zeta"}).code == cli::kExitUsage);  // no complex given
  CHECK(run_cli({"zeta", "-g", "octahedron", "-c", data("grid_2x2.pcx")}).code == cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
  CHECK(run_cli({"geodesics", "-g", "octahedron", "--max-len", "0"}).code == cli::kExitUsage);
}

TEST_CASE("generate round-trips through the file format") {
  const auto path = scratch_dir() / "oct.pcx";
  REQUIRE(run_cli({"generate", "octahedron", "-o", path.string()}).code == 0);
  CHECK(read_complex_file(path.string()) == octahedron());

  const auto o = run_cli({"generate", "grid_torus:3,4"});
  CHECK(o.code == 0);
  CHECK(parse_complex(o.out) == grid_torus(3, 4));
  CHECK(run_cli({"generate", "grid_torus:2,2"}).code == cli::kExitUsage);
}

TEST_CASE("validate") {
  const auto ok = run_cli({"validate", "-g", "simplex_boundary:4"});
  CHECK(ok.code == 0);
  CHECK(ok.field("valid") == "yes");
  CHECK(ok.field("regularity") == "3");

  const auto corrupted = run_cli({"validate", "-c", data("corrupted.pcx")});
  CHECK(corrupted.code == cli::kExitUsage);
  CHECK(corrupted.err.find("line 15") != std::string::npos);
  CHECK(corrupted.err.find("corrupted.pcx") != std::string::npos);

  // Parses, but the 2x2 grid has edge pairs sharing two vertices.
  const auto small = run_cli({"validate", "-c", data("grid_2x2.pcx")});
  CHECK(small.code == cli::kExitUsage);
  CHECK(small.field("pair_uniqueness").rfind("FAIL", 0) == 0);
  CHECK(small.field("valid") == "no");

  CHECK(run_cli({"validate", "-c", data("no_such_file.pcx")}).code == cli::kExitUsage);
}

TEST_CASE("info and matrix triplets") {
  const auto o = run_cli({"info", "-g", "octahedron", "--matrix", "transfer"});
  REQUIRE(o.code == 0);
  CHECK(o.field("cells") == "6 12 8");
  CHECK(o.field("euler_characteristic") == "2");
  CHECK(o.field("laplacian_identity") == "holds");
  CHECK(o.field("matrix") == "transfer 12x12");

  const auto expected = oracle::transfer_by_pairs(octahedron());
  IntMatrix got(12, 12);
  std::istringstream in(o.out);
  std::string line;
  int entries = 0;
  while (std::getline(in, line)) {
    if (line.find(':') != std::string::npos) continue;
    std::istringstream row(line);
    int r, c, v;
    REQUIRE(static_cast<bool>(row >> r >> c >> v));
    got(r, c) = v;
    ++entries;
  }
  CHECK(entries == 24);
  CHECK(got == expected);

  const auto grid = run_cli({"info", "-g", "grid_torus:3,3"});
  CHECK(grid.field("laplacian_identity") == "fails (18 mismatched entries)");  // two per square

  CHECK(run_cli({"info", "-g", "octahedron", "--matrix", "boundary:9"}).code == cli::kExitUsage);
  CHECK(run_cli({"info", "-g", "octahedron", "--matrix", "nonsense"}).code == cli::kExitUsage);
}

TEST_CASE("dual and betti") {
  const auto o = run_cli({"dual", "-g", "simplex_boundary:4"});
  REQUIRE(o.code == 0);
  CHECK(parse_complex(o.out) == build_dual(simplex_boundary(4)).dual());

  const auto b = run_cli({"betti", "-g", "tri_torus:3,3"});
  CHECK(b.code == 0);
  for (int k = 0; k <= 2; ++k) CHECK(b.field("b" + std::to_string(k)) == std::to_string(oracle::betti(tri_torus(3, 3), k)));
}

TEST_CASE("zeta reports the order at 1/(N+2)") {
  const auto oct = run_cli({"zeta", "-g", "octahedron"});
  CHECK(oct.code == 0);
  CHECK(oct.field("order_at_1/(N+2)") == "0");
  CHECK(oct.field("N") == "2");

  const auto tri = run_cli({"zeta", "-g", "tri_torus:3,3", "--machine"});
  CHECK(tri.code == 0);
  CHECK(tri.field("order_at_1/(N+2)") == std::to_string(oracle::betti(tri_torus(3, 3), 1)));
  CHECK(tri.field("result") == "PASS");
  CHECK(tri.field("zeta(1/(N+2))") == "0");

  // The square grid has opposite edges of a square that are not admissible
  // but are coupled by the Laplacian, so the order is not b1 there and the
  // command says so through its exit status.
  const auto grid = run_cli({"zeta", "-g", "grid_torus:3,3", "--machine"});
  CHECK(grid.code == cli::kExitCheckFailed);
  CHECK(grid.field("b1") == std::to_string(oracle::betti(grid_torus(3, 3), 1)));
  CHECK(grid.field("result") == "FAIL");

  const auto at = run_cli({"zeta", "-g", "tri_torus:3,3", "--at", "1/4"});
  CHECK(at.field("order_at_1/4") == "2");
  CHECK(run_cli({"zeta", "-g", "octahedron", "--at", "0.25"}).code == cli::kExitUsage);
}

TEST_CASE("geodesics table and trace-check") {
  const auto g = run_cli({"geodesics", "-g", "octahedron", "--max-len", "5", "--machine"});
  REQUIRE(g.code == 0);
  const auto t = oracle::transfer_by_pairs(octahedron());
  int rows = 0;
  for (const auto& [key, value] : g.fields()) {
    if (key != "geodesics") continue;
    std::istringstream row(value);
    int k;
    long count;
    std::string sum;
    row >> k >> count >> sum;
    CHECK(sum == oracle::closed_walk_sum(t, k).get_str());
    ++rows;
  }
  CHECK(rows == 5);
  CHECK(g.field("geodesics_columns") == "k count signed_sum");

  const auto pass = run_cli({"trace-check", "-g", "octahedron", "--max-k", "6"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);

  const auto machine = run_cli({"trace-check", "-g", "grid_torus:3,3", "--max-k", "4", "--machine"});
  CHECK(machine.code == 0);
  CHECK(machine.field("result") == "PASS");
}

TEST_CASE("linking") {
  const auto x = simplex_boundary(4);
  const auto d = build_dual(x);
  const auto k1 = read_chain_file(data("abc_knot.chain"));
  const auto k2 = read_chain_file(data("abc_dual_knot.chain"));
  const Rational lk = oracle::intersection_linking(d, k1, k2);
  CHECK(abs(lk) == 1);

  const auto o = run_cli({"linking", "-g", "simplex_boundary:4", "--k1", data("abc_knot.chain"), "--k2",
                      data("abc_dual_knot.chain"), "--max-len", "3", "--machine"});
  REQUIRE(o.code == 0);
  CHECK(o.field("linking_number") == to_string(lk));
  CHECK(o.field("eta") == to_string(lk));
  CHECK(o.field("z") == "1/5");
  CHECK(o.field("within_bound") == "yes");

  const auto half = run_cli({"linking", "-g", "simplex_boundary:4", "--k1", data("abc_knot.chain"), "--k2",
                         data("abc_dual_knot.chain"), "--at", "1/2"});
  CHECK(half.code == 0);

  // A cycle in the wrong complex, or one that does not bound, is bad input.
  CHECK(run_cli({"linking", "-g", "octahedron", "--k1", data("abc_knot.chain"), "--k2", data("abc_dual_knot.chain")})
            .code == cli::kExitUsage);
  CHECK(run_cli({"linking", "-g", "simplex_boundary:4", "--k1", data("abc_knot.chain")}).code == cli::kExitUsage);
}

TEST_CASE("cover-build feeds the L2 commands") {
  const auto prefix = (scratch_dir() / "cover").string();
  const auto built = run_cli({"cover-build", "--kind", "grid", "--a", "3", "--b", "3", "--m", "3", "--prefix", prefix});
  REQUIRE(built.code == 0);
  CHECK(read_complex_file(prefix + ".pcx") == grid_torus(9, 3));

  const auto from_files = run_cli({"l2-betti", "--cover", prefix + ".pcx", "--perm", prefix + ".perm"});
  const auto built_in = run_cli({"l2-betti", "--gen-cover", "grid:3,3,3"});
  REQUIRE(from_files.code == 0);
  CHECK(from_files.out == built_in.out);
  // b_k of the 9x3 torus over the order of the group.
  for (int k = 0; k <= 2; ++k) {
    CHECK(from_files.field("l2_b" + std::to_string(k)) == to_string(ratio(oracle::betti(grid_torus(9, 3), k), 3)));
  }

  CHECK(run_cli({"l2-betti", "--cover", prefix + ".pcx"}).code == cli::kExitUsage);
  CHECK(run_cli({"l2-betti", "--gen-cover", "grid:3,3"}).code == cli::kExitUsage);
  CHECK(run_cli({"cover-build", "--kind", "klein"}).code == cli::kExitUsage);
}

TEST_CASE("psi and the heat trace") {
  const auto o = run_cli({"psi", "--gen-cover", "grid:3,3,3", "--terms", "3", "--machine"});
  REQUIRE(o.code == 0);
  // The first coefficient is tr_vN Δ = (N+2) c₁(base) since T has zero diagonal.
  const auto f = o.fields();
  const auto first = f.find("psi");
  REQUIRE(first != f.end());
  CHECK(first->second == "1 " + std::to_string(4 * 18));
  CHECK(o.field("l2_betti") == "2/3");
  CHECK(o.field("result") == "PASS");

  // Too early for the heat trace to have settled.
  CHECK(run_cli({"psi", "--gen-cover", "grid:3,3,3", "--t", "1/10"}).code == cli::kExitCheckFailed);
  CHECK(run_cli({"psi", "--gen-cover", "grid:3,3,3", "--t", "1e3"}).code == cli::kExitUsage);
}

TEST_CASE("l2-zeta-check") {
  const auto tri = run_cli({"l2-zeta-check", "--gen-cover", "tri:3,3,3", "--machine"});
  CHECK(tri.code == 0);
  CHECK(tri.field("l2_betti") == "2/3");

  // Same defect as the compact zeta check on the square grid.
  const auto grid = run_cli({"l2-zeta-check", "--gen-cover", "grid:3,3,3", "--machine"});
  CHECK(grid.code == cli::kExitCheckFailed);
  CHECK(std::abs(std::stod(grid.field("slope_laplacian")) - 2.0 / 3) < 0.05 * 2 / 3);
}

TEST_CASE("machine output is deterministic") {
  const std::vector<std::string> args{"zeta", "-g", "grid_torus:4,5", "--machine"};
  CHECK(run_cli(args).out == run_cli(args).out);
  const auto o = run_cli(args);
  std::istringstream in(o.out);
  std::string line;
  while (std::getline(in, line)) CHECK(line.find(": ") != std::string::npos);
}

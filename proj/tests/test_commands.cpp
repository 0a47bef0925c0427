#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tfpack/commands.hpp"
#include "tfpack/packing.hpp"

using namespace tfpack;
namespace fs = std::filesystem;

namespace {

struct Output {
  std::ostringstream out, err;
};

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "tfpack_test_commands";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

int build(int k, int n, const fs::path& path, FileFormat fmt = FileFormat::kJson) {
  Output o;
  cli::BuildOptions opts;
  opts.k = k;
  opts.n = n;
  opts.out_path = path.string();
  opts.format = fmt;
  return cli::cmd_build(opts, o.out, o.err);
}

}  // namespace

TEST_CASE("build") {
  const fs::path dir = scratch_dir();
  CHECK(build(1, 3, dir / "a.json") == cli::kOk);
  CHECK(build(1, 3, dir / "b.json") == cli::kOk);
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  CHECK(slurp(dir / "a.json").find("\"alpha\":7") != std::string::npos);

  CHECK(build(2, 3, dir / "c.json") == cli::kInputError);
  CHECK(build(1, 4, dir / "c.json") == cli::kInputError);
  CHECK(build(1, 3, dir / "no_such_dir" / "x.json") == cli::kIoError);
}

TEST_CASE("verify") {
  const fs::path dir = scratch_dir();
  REQUIRE(build(1, 3, dir / "p.json") == cli::kOk);
  REQUIRE(build(1, 3, dir / "p.csv", FileFormat::kCsv) == cli::kOk);

  {
    Output o;
    CHECK(cli::cmd_verify((dir / "p.json").string(), std::nullopt, o.out, o.err) == cli::kOk);
    CHECK(o.out.str().find("t=1") != std::string::npos);
  }
  {
    Output o;
    CHECK(cli::cmd_verify((dir / "p.csv").string(), 1, o.out, o.err) == cli::kOk);
  }
  {
    Output o;
    CHECK(cli::cmd_verify((dir / "p.json").string(), 2, o.out, o.err) == cli::kVerificationFailure);
  }

  const std::string text = slurp(dir / "p.json");
  {
    // Drop the first line of the spread B_1.
    std::string broken = text;
    const std::string first = "[[[0,1],[1,0],[1,1]],";
    broken.replace(broken.find(first), first.size(), "[");
    spit(dir / "missing_line.json", broken);
    Output o;
    CHECK(cli::cmd_verify((dir / "missing_line.json").string(), std::nullopt, o.out, o.err) ==
          cli::kVerificationFailure);
    CHECK(o.err.str().find("uncovered-point") != std::string::npos);
  }
  {
    std::string broken = text;
    broken.replace(broken.find("\"modulus\": 11"), 13, "\"modulus\": 13");
    spit(dir / "bad_modulus.json", broken);
    Output o;
    CHECK(cli::cmd_verify((dir / "bad_modulus.json").string(), std::nullopt, o.out, o.err) ==
          cli::kInputError);
  }
  {
    Output o;
    CHECK(cli::cmd_verify((dir / "does_not_exist.json").string(), std::nullopt, o.out, o.err) ==
          cli::kIoError);
  }
}

TEST_CASE("classify") {
  auto run = [](const std::string& spec, int k = 1, int n = 3) {
    Output o;
    const int rc = cli::cmd_classify(k, n, spec, o.out, o.err);
    return std::pair{rc, o.out.str()};
  };
  CHECK(run("1,1;1,0").second.find("alpha_set: {1}") != std::string::npos);
  CHECK(run("2,0;4,0").second.find("alpha_set: {1}") != std::string::npos);
  // Both points in U: the w-determinant vanishes and only x*y^q + x^q*y remains.
  const auto [rc, out] = run("1,0;2,0");
  CHECK(rc == cli::kOk);
  CHECK(out.find("alpha_set: {6}") != std::string::npos);
  CHECK(out.find("spread_indices: {5}") != std::string::npos);

  CHECK(run("1,0;1,0").first == cli::kInputError);
  CHECK(run("9,0;1,0").first == cli::kInputError);
  CHECK(run("1,2;1,0").first == cli::kInputError);
  CHECK(run("1,0").first == cli::kInputError);
  CHECK(run("1,0;2,0", 2, 3).first == cli::kInputError);

  const auto [rc8, out8] = run("1,0;2,0", 3, 3);
  CHECK(rc8 == cli::kOk);
  CHECK(std::count(out8.begin(), out8.end(), ',') >= 6);
}

TEST_CASE("orbit") {
  Output o;
  CHECK(cli::cmd_orbit(1, 3, 2, o.out, o.err) == cli::kOk);
  CHECK(o.out.str().find("gamma=beta^(q+1)=3") != std::string::npos);
  CHECK(cli::cmd_orbit(3, 3, 300, o.out, o.err) == cli::kOk);
  CHECK(cli::cmd_orbit(1, 3, 0, o.out, o.err) == cli::kInputError);
  CHECK(cli::cmd_orbit(1, 3, 8, o.out, o.err) == cli::kInputError);
}

TEST_CASE("oracle") {
  {
    Output o;
    cli::OracleOptions opts;
    CHECK(cli::cmd_oracle(opts, o.out, o.err) == cli::kOk);
    CHECK(o.out.str().find("35 lines agree") != std::string::npos);
    CHECK(o.out.str().find("49 (u, alpha) pairs") != std::string::npos);
  }
  {
    Output o;
    cli::OracleOptions opts;
    opts.k = 3;
    opts.n = 3;
    opts.sample = 100;
    CHECK(cli::cmd_oracle(opts, o.out, o.err) == cli::kOk);
  }
  {
    // Injected fault: report the alpha set shifted by one.
    Output o;
    cli::OracleOptions opts;
    opts.classifier = [](const FieldContext& ctx, const Line& l) {
      auto s = alpha_set(ctx, l);
      for (FieldElem& a : s) a = ctx.add(a, ctx.one());
      return s;
    };
    CHECK(cli::cmd_oracle(opts, o.out, o.err) == cli::kVerificationFailure);
    CHECK(o.err.str().find("disagrees") != std::string::npos);
  }
  {
    Output o;
    cli::OracleOptions opts;
    opts.k = 2;
    CHECK(cli::cmd_oracle(opts, o.out, o.err) == cli::kInputError);
  }
}

TEST_CASE("selftest") {
  Output o;
  CHECK(cli::cmd_selftest(o.out, o.err) == cli::kOk);
  CHECK(o.out.str().find("selftest: ok") != std::string::npos);
}

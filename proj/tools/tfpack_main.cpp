#include <iostream>

#include "CLI11.hpp"
#include "tfpack/commands.hpp"

int main(int argc, char** argv) {
  using namespace tfpack;
  CLI::App app{"Construct and verify transitive (q-1)-fold packings of PG(n, 2^k)"};
  app.require_subcommand(1);

  cli::BuildOptions build;
  std::string format = "json";
  auto* build_cmd = app.add_subcommand("build", "Build, verify and write the packing");
  build_cmd->add_option("-k", build.k, "q = 2^k, k odd")->required();
  build_cmd->add_option("-n", build.n, "projective dimension, odd, >= 3")->required();
  build_cmd->add_option("-o", build.out_path, "output file")->required();
  build_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  build_cmd->add_option("--threads", build.threads, "worker threads (0 = all cores)");

  std::string in_path;
  std::optional<std::int64_t> t;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a packing file");
  verify_cmd->add_option("-i", in_path, "input file")->required();
  verify_cmd->add_option("--t", t, "expected multiplicity (inferred if omitted)");

  int k = 1, n = 3;
  std::string line_spec;
  auto* classify_cmd = app.add_subcommand("classify", "Print the spreads containing a line");
  classify_cmd->add_option("-k", k)->required();
  classify_cmd->add_option("-n", n)->required();
  classify_cmd->add_option("--line", line_spec, "\"x1,x01;x2,x02\"")->required();

  std::int64_t beta = 1;
  auto* orbit_cmd = app.add_subcommand("orbit", "Check that beta maps B_1 onto B_(beta^(q+1))");
  orbit_cmd->add_option("-k", k)->required();
  orbit_cmd->add_option("-n", n)->required();
  orbit_cmd->add_option("--beta", beta)->required();

  std::optional<std::size_t> sample;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare fast paths with brute-force oracles");
  oracle_cmd->add_option("-k", k)->required();
  oracle_cmd->add_option("-n", n)->required();
  oracle_cmd->add_option("--sample", sample, "sampled lines and (u, alpha) pairs");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  if (*build_cmd) {
    build.format = format == "csv" ? FileFormat::kCsv : FileFormat::kJson;
    return cli::cmd_build(build, std::cout, std::cerr);
  }
  if (*verify_cmd) return cli::cmd_verify(in_path, t, std::cout, std::cerr);
  if (*classify_cmd) return cli::cmd_classify(k, n, line_spec, std::cout, std::cerr);
  if (*orbit_cmd) return cli::cmd_orbit(k, n, beta, std::cout, std::cerr);
  if (*oracle_cmd) {
    cli::OracleOptions opts;
    opts.k = k;
    opts.n = n;
    opts.sample = sample;
    return cli::cmd_oracle(opts, std::cout, std::cerr);
  }
  if (*selftest_cmd) return cli::cmd_selftest(std::cout, std::cerr);
  return cli::kInputError;
}

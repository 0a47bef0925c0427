#pragma once

// Subcommands of the tfpack tool. Each returns the process exit code and
// writes only to the streams it is given.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tfpack/field.hpp"
#include "tfpack/geometry.hpp"
#include "tfpack/packing_io.hpp"

namespace tfpack::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kVerificationFailure = 3,
  kIoError = 4,
};

struct BuildOptions {
  int k = 1;
  int n = 3;
  std::string out_path;
  FileFormat format = FileFormat::kJson;
  unsigned threads = 0;
};

/// Builds, verifies (spreads, (q-1)-fold multiplicity, transitivity) and
/// only then writes the packing file.
int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err);

/// Verifies a packing file. Without t, the multiplicity is inferred.
int cmd_verify(const std::string& in_path, std::optional<std::int64_t> t, std::ostream& out,
               std::ostream& err);

/// `line_spec` is "x1,x01;x2,x02" in integer encoding.
int cmd_classify(int k, int n, const std::string& line_spec, std::ostream& out, std::ostream& err);

/// Checks that beta maps B_1 onto B_(beta^(q+1)).
int cmd_orbit(int k, int n, std::int64_t beta, std::ostream& out, std::ostream& err);

using Classifier = std::function<std::vector<FieldElem>(const FieldContext&, const Line&)>;

struct OracleOptions {
  int k = 1;
  int n = 3;
  /// Number of sampled lines and (u, alpha) pairs; all of them when unset.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 20240101;
  /// Fast classifier under test.
  Classifier classifier;
};

/// Compares every fast path against its brute-force oracle; prints the
/// first counterexample on disagreement.
int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);

/// Context self-checks and a small end-to-end run.
int cmd_selftest(std::ostream& out, std::ostream& err);

/// Parses "x1,x01;x2,x02". Throws PreconditionError.
std::pair<ProjVector, ProjVector> parse_line_spec(const FieldContext& ctx, const std::string& spec);

}  // namespace tfpack::cli

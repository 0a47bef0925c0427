#include "tfpack/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "tfpack/errors.hpp"
#include "tfpack/oracle.hpp"
#include "tfpack/packing.hpp"

namespace tfpack::cli {

namespace {

constexpr std::size_t kMaxReportedViolations = 10;

void print_context(const FieldContext& ctx, std::ostream& out) {
  out << "context: k=" << ctx.k() << " n=" << ctx.n() << " q=" << ctx.q() << " m=" << ctx.m()
      << " modulus=" << ctx.modulus() << "\n";
}

void print_violations(const VerificationReport& r, std::ostream& os) {
  for (std::size_t i = 0; i < r.violations.size() && i < kMaxReportedViolations; ++i) {
    os << "  " << r.violations[i].describe() << "\n";
  }
  if (r.violations.size() > kMaxReportedViolations)
    os << "  ... " << r.violations.size() - kMaxReportedViolations << " more\n";
}

std::string set_str(const std::vector<FieldElem>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].enc());
  return s + "}";
}

std::string line_str(const Line& l) {
  std::string s = "{";
  for (std::size_t i = 0; i < l.points.size(); ++i) {
    s += (i ? ",(" : "(") + std::to_string(l.points[i].rep.x.enc()) + "," +
         std::to_string(l.points[i].rep.x0.enc()) + ")";
  }
  return s + "}";
}

std::int64_t parse_int(const std::string& token) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size())
    throw PreconditionError("expected an integer, got \"" + token + "\"");
  return value;
}

// Checks every spread and the multiplicity; appends diagnostics to err.
// Without t (not inferable) the multiplicity check fails outright.
bool verify_all(const FieldContext& ctx, const Packing& p, const std::vector<Line>& lines,
                std::optional<std::int64_t> t, std::ostream& out, std::ostream& err) {
  const auto points = enumerate_points(ctx);
  std::size_t failed_spreads = 0;
  for (const Spread& s : p.spreads) {
    const auto report = verify_spread(ctx, s, points);
    if (!report.passed()) {
      if (failed_spreads == 0) {
        err << "spread check failed (each point on exactly one line of a spread):\n";
        print_violations(report, err);
      }
      ++failed_spreads;
    }
  }
  out << "spreads: " << p.spreads.size() - failed_spreads << "/" << p.spreads.size()
      << " are spreads\n";

  if (!t) {
    err << "multiplicity check failed: total incidences are not a multiple of the "
        << lines.size() << " lines\n";
    out << "multiplicity: not uniform over " << lines.size() << " lines FAILED\n";
    return false;
  }
  const auto packing_report = verify_packing(lines, p, *t);
  if (!packing_report.passed()) {
    err << "multiplicity check failed (every line in exactly t=" << *t << " spreads):\n";
    print_violations(packing_report, err);
  }
  out << "multiplicity: t=" << *t << " over " << lines.size() << " lines "
      << (packing_report.passed() ? "ok" : "FAILED") << "\n";
  return failed_spreads == 0 && packing_report.passed();
}

}  // namespace

std::pair<ProjVector, ProjVector> parse_line_spec(const FieldContext& ctx, const std::string& spec) {
  const auto semi = spec.find(';');
  if (semi == std::string::npos || spec.find(';', semi + 1) != std::string::npos)
    throw PreconditionError("line spec must look like \"x1,x01;x2,x02\"");
  auto parse_vec = [&](const std::string& part) {
    const auto comma = part.find(',');
    if (comma == std::string::npos) throw PreconditionError("point must look like \"x,x0\"");
    const std::int64_t x = parse_int(part.substr(0, comma));
    const std::int64_t x0 = parse_int(part.substr(comma + 1));
    const auto order = static_cast<std::int64_t>(ctx.order());
    if (x < 0 || x >= order || x0 < 0 || x0 >= order)
      throw PreconditionError("encoding out of range [0, " + std::to_string(order) + ")");
    const ProjVector v{FieldElem{static_cast<std::uint32_t>(x)}, FieldElem{static_cast<std::uint32_t>(x0)}};
    if (!ctx.in_subfield(v.x0))
      throw PreconditionError("w-coordinate " + std::to_string(x0) + " is not in F_q");
    if (v.is_zero()) throw PreconditionError("zero vector");
    return v;
  };
  return {parse_vec(spec.substr(0, semi)), parse_vec(spec.substr(semi + 1))};
}

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<FieldContext> ctx;
  try {
    ctx.emplace(FieldContext::make(opts.k, opts.n));
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  print_context(*ctx, out);

  Packing p;
  try {
    p = build_packing(*ctx, opts.threads);
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kVerificationFailure;
  }

  const auto lines = enumerate_lines(*ctx);
  bool ok = verify_all(*ctx, p, lines, static_cast<std::int64_t>(ctx->q() - 1), out, err);
  const auto transitivity = verify_transitivity(*ctx, p);
  if (!transitivity.passed()) {
    err << "transitivity check failed (beta maps B_1 onto B_(beta^(q+1))):\n";
    print_violations(transitivity.report, err);
    ok = false;
  }
  out << "transitivity: orbit of B_1 has " << transitivity.orbit_size << " spreads\n";
  if (!ok) return kVerificationFailure;

  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << opts.out_path << " for writing\n";
    return kIoError;
  }
  file << write_packing(*ctx, p, opts.format);
  file.close();
  if (!file) {
    err << "error: failed writing " << opts.out_path << "\n";
    return kIoError;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  out << "wrote " << p.spreads.size() << " spreads to " << opts.out_path << " ("
      << elapsed.count() << " s)\n";
  return kOk;
}

int cmd_verify(const std::string& in_path, std::optional<std::int64_t> t, std::ostream& out,
               std::ostream& err) {
  std::ifstream file(in_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << in_path << "\n";
    return kIoError;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) {
    err << "error: failed reading " << in_path << "\n";
    return kIoError;
  }

  std::optional<LoadedPacking> loaded;
  try {
    loaded.emplace(read_packing(buffer.str()));
  } catch (const FormatError& e) {
    err << "malformed packing file: " << e.what() << "\n";
    return kInputError;
  }
  const FieldContext& ctx = loaded->ctx;
  print_context(ctx, out);

  const auto lines = enumerate_lines(ctx);
  if (!t) t = infer_multiplicity(lines, loaded->packing);
  const bool ok = verify_all(ctx, loaded->packing, lines, t, out, err);
  out << "result: " << (ok ? "ok" : "FAILED") << "\n";
  return ok ? kOk : kVerificationFailure;
}

int cmd_classify(int k, int n, const std::string& line_spec, std::ostream& out, std::ostream& err) {
  try {
    const FieldContext ctx = FieldContext::make(k, n);
    const auto [v1, v2] = parse_line_spec(ctx, line_spec);
    const Line l = line_through(ctx, canonical_point(ctx, v1), canonical_point(ctx, v2));
    const auto alphas = alpha_set(ctx, l);
    std::vector<FieldElem> indices;
    for (FieldElem a : alphas) indices.emplace_back(a.enc() - 1);
    out << "line: " << line_str(l) << "\n";
    out << "alpha_set: " << set_str(alphas) << "\n";
    out << "spread_indices: " << set_str(indices) << "\n";
    return kOk;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConstructionError& e) {
    err << "classification failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

int cmd_orbit(int k, int n, std::int64_t beta_enc, std::ostream& out, std::ostream& err) {
  try {
    const FieldContext ctx = FieldContext::make(k, n);
    if (beta_enc <= 0 || beta_enc >= static_cast<std::int64_t>(ctx.order()))
      throw PreconditionError("beta must be a nonzero element encoding below " +
                              std::to_string(ctx.order()));
    const FieldElem beta{static_cast<std::uint32_t>(beta_enc)};
    const FieldElem gamma = ctx.qplus1_power(beta);
    const Spread base = build_spread(ctx, ctx.one());
    const Spread target = build_spread(ctx, gamma);
    std::vector<Line> image;
    for (const Line& l : base.lines) image.push_back(apply_beta(ctx, l, beta));
    std::sort(image.begin(), image.end());
    const bool match = image == target.lines;
    out << "beta=" << beta.enc() << " gamma=beta^(q+1)=" << gamma.enc() << "\n";
    out << "image of B_1: " << image.size() << " lines, "
        << (match ? "equals" : "DIFFERS FROM") << " B_" << gamma.enc() << "\n";
    return match ? kOk : kVerificationFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<FieldContext> maybe_ctx;
  try {
    maybe_ctx.emplace(FieldContext::make(opts.k, opts.n));
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const FieldContext& ctx = *maybe_ctx;
  print_context(ctx, out);
  const Classifier classify = opts.classifier ? opts.classifier : Classifier(alpha_set);
  std::mt19937_64 rng(opts.seed);

  try {
    // Fast classifier against the all-bases oracle.
    const auto lines = enumerate_lines(ctx);
    std::vector<std::size_t> chosen(lines.size());
    std::iota(chosen.begin(), chosen.end(), 0);
    if (opts.sample && *opts.sample < chosen.size()) {
      std::shuffle(chosen.begin(), chosen.end(), rng);
      chosen.resize(*opts.sample);
      std::sort(chosen.begin(), chosen.end());
    }
    for (std::size_t i : chosen) {
      const auto fast = classify(ctx, lines[i]);
      const auto slow = oracle::classify_bruteforce(ctx, lines[i]);
      if (fast != slow) {
        err << "classifier disagrees with oracle on line " << line_str(lines[i]) << ": fast "
            << set_str(fast) << " vs brute force " << set_str(slow) << "\n";
        return kVerificationFailure;
      }
    }
    out << "classifier: " << chosen.size() << " lines agree\n";

    // unique_lambda against scanning every x.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    const auto nonzero = static_cast<std::uint32_t>(ctx.order() - 1);
    if (opts.sample) {
      std::uniform_int_distribution<std::uint32_t> dist(1, nonzero);
      for (std::size_t i = 0; i < *opts.sample; ++i) pairs.emplace_back(dist(rng), dist(rng));
    } else {
      for (std::uint32_t u = 1; u <= nonzero; ++u)
        for (std::uint32_t a = 1; a <= nonzero; ++a) pairs.emplace_back(u, a);
    }
    for (auto [u, a] : pairs) {
      const auto slow = oracle::lambda_bruteforce(ctx, FieldElem{u}, FieldElem{a});
      const FieldElem fast = unique_lambda(ctx, FieldElem{u}, FieldElem{a});
      if (slow.size() != 1 || slow.front() != fast) {
        err << "lambda disagreement at u=" << u << " alpha=" << a << ": fast " << fast.enc()
            << " vs brute force " << set_str(slow) << "\n";
        return kVerificationFailure;
      }
    }
    out << "lambda: " << pairs.size() << " (u, alpha) pairs have exactly one lambda\n";

    // Sorted-merge multiplicity check against hash counting.
    const Packing p = build_packing(ctx);
    const auto t = static_cast<std::int64_t>(ctx.q() - 1);
    const auto counts = oracle::packing_count_naive(p);
    const bool fast_ok = verify_packing(lines, p, t).passed();
    bool naive_ok = counts.size() == lines.size();
    for (const Line& l : lines) {
      auto it = counts.find(l);
      naive_ok = naive_ok && it != counts.end() && it->second == t;
    }
    if (fast_ok != naive_ok || !fast_ok) {
      err << "multiplicity disagreement: verifier " << (fast_ok ? "passes" : "fails")
          << ", naive recount " << (naive_ok ? "passes" : "fails") << "\n";
      return kVerificationFailure;
    }
    out << "multiplicity: naive recount agrees, t=" << t << "\n";
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
  out << "oracle: all checks agree\n";
  return kOk;
}

int cmd_selftest(std::ostream& out, std::ostream& err) {
  try {
    for (auto [k, n] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{3, 3}}) {
      const FieldContext ctx = FieldContext::make(k, n);
      std::mt19937_64 rng(static_cast<std::uint64_t>(k * 100 + n));
      std::uniform_int_distribution<std::uint32_t> dist(1, static_cast<std::uint32_t>(ctx.order() - 1));
      for (int i = 0; i < 1000; ++i) {
        const FieldElem a{dist(rng)}, b{dist(rng)}, c{dist(rng)};
        if (ctx.mul(a, ctx.add(b, c)) != ctx.add(ctx.mul(a, b), ctx.mul(a, c)) ||
            ctx.mul(a, ctx.inv(a)) != ctx.one() ||
            ctx.pow(ctx.qplus1_root(a), ctx.q() + 1) != a) {
          err << "field self-test failed for k=" << k << " n=" << n << "\n";
          return kVerificationFailure;
        }
      }
      out << "field k=" << k << " n=" << n << ": ok (modulus " << ctx.modulus() << ")\n";
    }
  } catch (const std::logic_error& e) {
    err << "self-test failed: " << e.what() << "\n";
    return kVerificationFailure;
  }

  std::ostringstream sink;
  OracleOptions oracle_opts;
  if (const int rc = cmd_oracle(oracle_opts, sink, err); rc != kOk) return rc;
  out << "oracle k=1 n=3: ok\n";

  const FieldContext ctx = FieldContext::make(1, 3);
  const Packing p = build_packing(ctx, 1);
  if (!verify_all(ctx, p, enumerate_lines(ctx), 1, sink, err) ||
      !verify_transitivity(ctx, p).passed()) {
    return kVerificationFailure;
  }
  out << "packing k=1 n=3: ok\nselftest: ok\n";
  return kOk;
}

}  // namespace tfpack::cli

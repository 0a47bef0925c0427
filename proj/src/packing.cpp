#include "tfpack/packing.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "tfpack/errors.hpp"

namespace tfpack {

namespace {

std::string point_str(const ProjPoint& p) {
  return "(" + std::to_string(p.rep.x.enc()) + "," + std::to_string(p.rep.x0.enc()) + ")";
}

std::string line_str(const Line& l) {
  std::string s = "{";
  for (std::size_t i = 0; i < l.points.size(); ++i) {
    if (i != 0) s += ",";
    s += point_str(l.points[i]);
  }
  return s + "}";
}

struct FormParts {
  FieldElem d1;          // x*y^q + x^q*y
  FieldElem d2_qplus1;   // (x*y0 + x0*y)^(q+1)
};

FormParts form_parts(const FieldContext& ctx, const ProjVector& v1, const ProjVector& v2) {
  const FieldElem x = v1.x, x0 = v1.x0, y = v2.x, y0 = v2.x0;
  const FieldElem d1 =
      ctx.add(ctx.mul(x, ctx.frobenius_q(y)), ctx.mul(ctx.frobenius_q(x), y));
  const FieldElem d2 = ctx.add(ctx.mul(x, y0), ctx.mul(x0, y));
  return {d1, ctx.qplus1_power(d2)};
}

}  // namespace

const Spread* Packing::find(FieldElem alpha) const {
  auto it = std::lower_bound(spreads.begin(), spreads.end(), alpha,
                             [](const Spread& s, FieldElem a) { return s.alpha < a; });
  return it != spreads.end() && it->alpha == alpha ? &*it : nullptr;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUncoveredPoint: return "uncovered-point";
    case ViolationKind::kMultiplyCoveredPoint: return "multiply-covered-point";
    case ViolationKind::kInvalidPoint: return "invalid-point";
    case ViolationKind::kNotALine: return "not-a-line";
    case ViolationKind::kSpreadSize: return "spread-size";
    case ViolationKind::kLineMultiplicity: return "line-multiplicity";
    case ViolationKind::kUnknownLine: return "unknown-line";
    case ViolationKind::kMissingSpread: return "missing-spread";
    case ViolationKind::kOrbitMismatch: return "orbit-mismatch";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (alpha) os << " alpha=" << alpha->enc();
  if (point) os << " point=" << point_str(*point);
  if (line) os << " line=" << line_str(*line);
  if (count) os << " count=" << *count;
  return os.str();
}

void VerificationReport::merge(VerificationReport other) {
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
}

FieldElem eval_form(const FieldContext& ctx, const ProjVector& v1, const ProjVector& v2) {
  if (v1.x.is_zero() || v2.x.is_zero())
    throw PreconditionError("eval_form requires basis vectors with nonzero U-component");
  if (canonical_point(ctx, v1) == canonical_point(ctx, v2))
    throw PreconditionError("eval_form requires F_q-independent basis vectors");
  const auto [d1, d2q1] = form_parts(ctx, v1, v2);
  const FieldElem value = ctx.add(d1, d2q1);
  if (value.is_zero()) throw ConstructionError("form vanished on a basis of a line");
  return value;
}

std::vector<FieldElem> alpha_set(const FieldContext& ctx, const Line& l) {
  const auto [v1, v2] = basis_nonzero_U(l);
  const auto [d1, d2q1] = form_parts(ctx, v1, v2);
  std::vector<FieldElem> out;
  out.reserve(ctx.q() - 1);
  for (FieldElem lambda : ctx.subfield()) {
    if (lambda.is_zero()) continue;
    out.push_back(ctx.add(ctx.mul(lambda, d1), ctx.mul(ctx.square(lambda), d2q1)));
  }
  std::sort(out.begin(), out.end());
  const bool distinct = std::adjacent_find(out.begin(), out.end()) == out.end();
  if (!distinct || out.front().is_zero())
    throw ConstructionError("alpha set of line " + line_str(l) +
                            " is not q-1 distinct nonzero values");
  return out;
}

FieldElem unique_lambda(const FieldContext& ctx, FieldElem u, FieldElem alpha) {
  if (u.is_zero() || alpha.is_zero())
    throw PreconditionError("unique_lambda requires u != 0 and alpha != 0");
  const FieldElem u_q1 = ctx.qplus1_power(u);
  const FieldElem lambda = ctx.rel_trace(ctx.mul(alpha, ctx.inv(u_q1)));
  if (!ctx.in_subfield(lambda)) throw ConstructionError("relative trace left F_q");

  if (ctx.solve_semilinear(u, ctx.add(alpha, ctx.mul(lambda, u_q1))).empty())
    throw ConstructionError("no root for the trace-selected lambda at u=" +
                            std::to_string(u.enc()) + " alpha=" + std::to_string(alpha.enc()));
  const FieldElem other = ctx.add(lambda, ctx.one());
  if (!ctx.solve_semilinear(u, ctx.add(alpha, ctx.mul(other, u_q1))).empty())
    throw ConstructionError("a second lambda admits roots at u=" + std::to_string(u.enc()) +
                            " alpha=" + std::to_string(alpha.enc()));
  return lambda;
}

Line line_through_U_point(const FieldContext& ctx, FieldElem u, FieldElem alpha,
                          std::size_t solution_index) {
  if (u.is_zero() || alpha.is_zero())
    throw PreconditionError("line_through_U_point requires u != 0 and alpha != 0");
  const FieldElem y0 = ctx.subfield_sqrt(unique_lambda(ctx, u, alpha));
  const FieldElem rhs = ctx.add(alpha, ctx.mul(ctx.qplus1_power(u), ctx.square(y0)));
  const auto solutions = ctx.solve_semilinear(u, rhs);
  if (solutions.empty())
    throw ConstructionError("no line of B_alpha through U-point " + std::to_string(u.enc()));
  if (solution_index >= solutions.size())
    throw PreconditionError("solution index out of range");
  const ProjPoint p1 = canonical_point(ctx, {u, ctx.zero()});
  const ProjPoint p2 = canonical_point(ctx, {solutions[solution_index], y0});
  if (p1 == p2) throw ConstructionError("degenerate span through U-point " + std::to_string(u.enc()));
  return line_through(ctx, p1, p2);
}

Line line_through_affine_point(const FieldContext& ctx, FieldElem u, FieldElem alpha) {
  if (alpha.is_zero()) throw PreconditionError("line_through_affine_point requires alpha != 0");
  const FieldElem y = ctx.add(ctx.qplus1_root(ctx.add(ctx.qplus1_power(u), alpha)), u);
  if (y.is_zero())
    throw ConstructionError("zero partner for affine point " + std::to_string(u.enc()));
  return line_through(ctx, canonical_point(ctx, {u, ctx.one()}), canonical_point(ctx, {y, ctx.zero()}));
}

namespace {

VerificationReport check_partition(const FieldContext& ctx, const Spread& s,
                                   const std::vector<ProjPoint>& points) {
  VerificationReport report;
  std::vector<std::int64_t> hits(points.size(), 0);
  for (const Line& l : s.lines) {
    bool genuine = l.points.size() == ctx.q() + 1;
    if (genuine) {
      try {
        genuine = line_through(ctx, l.points[0], l.points[1]) == l;
      } catch (const std::exception&) {
        genuine = false;
      }
    }
    if (!genuine) report.violations.push_back({ViolationKind::kNotALine, s.alpha, l, {}, {}});
    for (const ProjPoint& p : l.points) {
      auto it = std::lower_bound(points.begin(), points.end(), p);
      if (it == points.end() || *it != p) {
        report.violations.push_back({ViolationKind::kInvalidPoint, s.alpha, l, p, {}});
        continue;
      }
      ++hits[it - points.begin()];
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (hits[i] == 0) {
      report.violations.push_back({ViolationKind::kUncoveredPoint, s.alpha, {}, points[i], 0});
    } else if (hits[i] > 1) {
      report.violations.push_back(
          {ViolationKind::kMultiplyCoveredPoint, s.alpha, {}, points[i], hits[i]});
    }
  }
  const std::uint64_t q = ctx.q();
  const std::uint64_t expected = point_count(ctx) / (q + 1);
  if (s.lines.size() != expected) {
    report.violations.push_back({ViolationKind::kSpreadSize, s.alpha, {}, {},
                                 static_cast<std::int64_t>(s.lines.size())});
  }
  return report;
}

Spread build_spread_with(const FieldContext& ctx, FieldElem alpha,
                         const std::vector<ProjPoint>& points) {
  if (alpha.is_zero()) throw PreconditionError("build_spread requires alpha != 0");
  Spread s{alpha, {}};
  for (std::uint32_t u = 0; u < ctx.order(); ++u) {
    s.lines.push_back(line_through_affine_point(ctx, FieldElem{u}, alpha));
  }
  for (const ProjPoint& p : points) {
    if (!p.rep.x0.is_zero()) continue;
    s.lines.push_back(line_through_U_point(ctx, p.rep.x, alpha));
  }
  std::sort(s.lines.begin(), s.lines.end());
  s.lines.erase(std::unique(s.lines.begin(), s.lines.end()), s.lines.end());

  const auto report = check_partition(ctx, s, points);
  if (!report.passed())
    throw ConstructionError("B_" + std::to_string(alpha.enc()) +
                            " is not a spread: " + report.violations.front().describe());
  return s;
}

}  // namespace

Spread build_spread(const FieldContext& ctx, FieldElem alpha) {
  return build_spread_with(ctx, alpha, enumerate_points(ctx));
}

Packing build_packing(const FieldContext& ctx, unsigned threads) {
  const auto points = enumerate_points(ctx);
  const std::size_t count = ctx.order() - 1;
  std::vector<Spread> spreads(count);
  std::vector<std::exception_ptr> errors(count);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        spreads[i] = build_spread_with(ctx, FieldElem{static_cast<std::uint32_t>(i + 1)}, points);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return Packing{std::move(spreads)};
}

Line apply_beta(const FieldContext& ctx, const Line& l, FieldElem beta) {
  if (beta.is_zero()) throw PreconditionError("apply_beta requires beta != 0");
  Line image;
  image.points.reserve(l.points.size());
  for (const ProjPoint& p : l.points) {
    image.points.push_back(canonical_point(ctx, {ctx.mul(beta, p.rep.x), p.rep.x0}));
  }
  std::sort(image.points.begin(), image.points.end());
  return image;
}

VerificationReport verify_spread(const FieldContext& ctx, const Spread& s) {
  return check_partition(ctx, s, enumerate_points(ctx));
}

VerificationReport verify_spread(const FieldContext& ctx, const Spread& s,
                                 const std::vector<ProjPoint>& points) {
  return check_partition(ctx, s, points);
}

VerificationReport verify_packing(const std::vector<Line>& lines, const Packing& p,
                                  std::int64_t t) {
  std::vector<const Line*> sorted_lines;
  sorted_lines.reserve(lines.size());
  for (const Line& l : lines) sorted_lines.push_back(&l);
  auto by_value = [](const Line* a, const Line* b) { return *a < *b; };
  std::sort(sorted_lines.begin(), sorted_lines.end(), by_value);

  std::vector<const Line*> occurrences;
  for (const Spread& s : p.spreads) {
    for (const Line& l : s.lines) occurrences.push_back(&l);
  }
  std::sort(occurrences.begin(), occurrences.end(), by_value);

  VerificationReport report;
  std::vector<std::int64_t> counts(sorted_lines.size(), 0);
  for (std::size_t i = 0; i < occurrences.size();) {
    std::size_t j = i;
    while (j < occurrences.size() && *occurrences[j] == *occurrences[i]) ++j;
    auto it = std::lower_bound(sorted_lines.begin(), sorted_lines.end(), occurrences[i], by_value);
    if (it == sorted_lines.end() || **it != *occurrences[i]) {
      report.violations.push_back({ViolationKind::kUnknownLine, {}, *occurrences[i], {},
                                   static_cast<std::int64_t>(j - i)});
    } else {
      counts[it - sorted_lines.begin()] += static_cast<std::int64_t>(j - i);
    }
    i = j;
  }
  for (std::size_t i = 0; i < sorted_lines.size(); ++i) {
    if (counts[i] != t) {
      report.violations.push_back(
          {ViolationKind::kLineMultiplicity, {}, *sorted_lines[i], {}, counts[i]});
    }
  }
  return report;
}

std::optional<std::int64_t> infer_multiplicity(const std::vector<Line>& lines, const Packing& p) {
  if (lines.empty()) return std::nullopt;
  std::size_t total = 0;
  for (const Spread& s : p.spreads) total += s.lines.size();
  if (total % lines.size() != 0) return std::nullopt;
  return static_cast<std::int64_t>(total / lines.size());
}

TransitivityReport verify_transitivity(const FieldContext& ctx, const Packing& p) {
  TransitivityReport out;
  const Spread* base = p.find(ctx.one());
  if (base == nullptr) {
    out.report.violations.push_back({ViolationKind::kMissingSpread, ctx.one(), {}, {}, {}});
    return out;
  }

  std::vector<bool> reached(ctx.order(), false);
  for (std::uint32_t b = 1; b < ctx.order(); ++b) {
    const FieldElem beta{b};
    const FieldElem gamma = ctx.qplus1_power(beta);
    const Spread* target = p.find(gamma);
    if (target == nullptr) {
      out.report.violations.push_back({ViolationKind::kMissingSpread, gamma, {}, {}, {}});
      continue;
    }
    std::vector<Line> image;
    image.reserve(base->lines.size());
    for (const Line& l : base->lines) image.push_back(apply_beta(ctx, l, beta));
    std::sort(image.begin(), image.end());
    if (image != target->lines) {
      std::vector<Line> diff;
      std::set_symmetric_difference(image.begin(), image.end(), target->lines.begin(),
                                    target->lines.end(), std::back_inserter(diff));
      std::optional<Line> witness;
      if (!diff.empty()) witness = diff.front();
      out.report.violations.push_back({ViolationKind::kOrbitMismatch, gamma, witness, {}, {}});
      continue;
    }
    if (!reached[gamma.enc()]) {
      reached[gamma.enc()] = true;
      ++out.orbit_size;
    }
  }

  for (const Spread& s : p.spreads) {
    if (s.alpha.enc() >= ctx.order() || !reached[s.alpha.enc()]) {
      out.report.violations.push_back({ViolationKind::kOrbitMismatch, s.alpha, {}, {}, {}});
    }
  }
  if (out.orbit_size != ctx.order() - 1 || p.spreads.size() != ctx.order() - 1) {
    out.report.violations.push_back({ViolationKind::kSpreadSize, {}, {}, {},
                                     static_cast<std::int64_t>(out.orbit_size)});
  }
  return out;
}

}  // namespace tfpack

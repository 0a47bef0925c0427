#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfpack/field.hpp"
#include "tfpack/geometry.hpp"

namespace tfpack {

/// B_alpha: the lines admitting a basis x + x0*w, y + y0*w (x, y != 0) with
///
///   (x*y^q + x^q*y) + (x*y0 + x0*y)^(q+1) = alpha.
struct Spread {
  FieldElem alpha;
  std::vector<Line> lines;  // sorted
};

/// Spreads keyed by alpha, sorted by enc(alpha). Packings read from a file
/// may carry arbitrary distinct positive labels in place of alpha.
struct Packing {
  std::vector<Spread> spreads;

  const Spread* find(FieldElem alpha) const;
};

enum class ViolationKind {
  kUncoveredPoint,
  kMultiplyCoveredPoint,
  kInvalidPoint,
  kNotALine,
  kSpreadSize,
  kLineMultiplicity,
  kUnknownLine,
  kMissingSpread,
  kOrbitMismatch,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<FieldElem> alpha;
  std::optional<Line> line;
  std::optional<ProjPoint> point;
  /// Observed count where one applies (incidences, multiplicity, size).
  std::optional<std::int64_t> count;

  std::string describe() const;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  void merge(VerificationReport other);
};

struct TransitivityReport {
  VerificationReport report;
  /// Number of distinct spreads reached from B_1 under the beta-action.
  std::size_t orbit_size = 0;

  bool passed() const { return report.passed(); }
};

/// Left-hand side of the defining equation on the basis (v1, v2).
/// Throws PreconditionError unless both U-components are nonzero and the
/// vectors are F_q-independent. Throws ConstructionError on a zero value.
FieldElem eval_form(const FieldContext& ctx, const ProjVector& v1, const ProjVector& v2);

/// The q-1 values of the form over all bases of l, sorted. Every basis
/// change factors as SL_2(q) times diag(lambda, 1); the form is
/// SL_2-invariant, and diag(lambda, 1) sends (D1, D2^(q+1)) to
/// (lambda*D1, lambda^2*D2^(q+1)). So the value set is
/// { lambda*D1 + lambda^2*D2^(q+1) : lambda in F_q^x }.
std::vector<FieldElem> alpha_set(const FieldContext& ctx, const Line& l);

/// The unique lambda in F_q for which u*x^q + u^q*x + lambda*u^(q+1) + alpha
/// has a root in U: lambda = rel_trace(alpha / u^(q+1)).
FieldElem unique_lambda(const FieldContext& ctx, FieldElem u, FieldElem alpha);

/// The line of B_alpha through the point u (u != 0, x0 = 0).
/// `solution_index` picks a member of the solution coset for y; every
/// choice gives the same line.
Line line_through_U_point(const FieldContext& ctx, FieldElem u, FieldElem alpha,
                          std::size_t solution_index = 0);

/// The line of B_alpha through u + w, joining it to y with
/// y = (u^(q+1) + alpha)^(1/(q+1)) + u.
Line line_through_affine_point(const FieldContext& ctx, FieldElem u, FieldElem alpha);

/// Builds B_alpha from the point-coverage constructions and checks that it
/// partitions the points. Throws ConstructionError otherwise.
Spread build_spread(const FieldContext& ctx, FieldElem alpha);

/// B_alpha for every alpha != 0. Spreads are built on `threads` workers
/// (0 = hardware concurrency); the result does not depend on scheduling.
Packing build_packing(const FieldContext& ctx, unsigned threads = 0);

/// Image of l under (x, x0) -> (beta*x, x0).
Line apply_beta(const FieldContext& ctx, const Line& l, FieldElem beta);

/// Every point on exactly one line, every line a genuine line, and
/// (q^(n+1)-1)/(q^2-1) lines.
VerificationReport verify_spread(const FieldContext& ctx, const Spread& s);
/// As above with the sorted point list of the context supplied by the caller.
VerificationReport verify_spread(const FieldContext& ctx, const Spread& s,
                                 const std::vector<ProjPoint>& points);

/// Every line in `lines` occurs in exactly t spreads and no spread holds a
/// line outside `lines`.
VerificationReport verify_packing(const std::vector<Line>& lines, const Packing& p, std::int64_t t);

/// Total incidences divided by the number of lines, or nullopt when the
/// division is inexact.
std::optional<std::int64_t> infer_multiplicity(const std::vector<Line>& lines, const Packing& p);

/// B_1 mapped by beta equals B_(beta^(q+1)) for every beta != 0, and the
/// orbit of B_1 reaches all q^n-1 spreads.
TransitivityReport verify_transitivity(const FieldContext& ctx, const Packing& p);

}  // namespace tfpack

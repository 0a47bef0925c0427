#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "tfpack/field.hpp"

namespace tfpack {

/// Vector x + x0*w of V = U + W, where x lies in U = F_{q^n} and x0 in the
/// subfield copy of F_q. The vector w itself is (0, 1).
struct ProjVector {
  FieldElem x;
  FieldElem x0;

  bool is_zero() const { return x.is_zero() && x0.is_zero(); }
  friend constexpr bool operator==(const ProjVector&, const ProjVector&) = default;
  friend constexpr auto operator<=>(const ProjVector&, const ProjVector&) = default;
};

/// A point of PG(n, q). `rep` is the member of the F_q^x-scaling class
/// with the lexicographically smallest (enc(x), enc(x0)); obtain one from
/// canonical_point().
struct ProjPoint {
  ProjVector rep;

  friend constexpr bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// A line of PG(n, q) as its q+1 points, sorted and duplicate-free.
struct Line {
  std::vector<ProjPoint> points;

  bool contains(const ProjPoint& p) const;
  friend bool operator==(const Line&, const Line&) = default;
  friend auto operator<=>(const Line&, const Line&) = default;
};

/// Throws PreconditionError for the zero vector.
ProjPoint canonical_point(const FieldContext& ctx, const ProjVector& v);

/// a*v for a in the subfield.
ProjVector scale(const FieldContext& ctx, FieldElem a, const ProjVector& v);
ProjVector add(const ProjVector& a, const ProjVector& b);

/// All (q^(n+1)-1)/(q-1) points, sorted.
std::vector<ProjPoint> enumerate_points(const FieldContext& ctx);

/// The line spanned by two distinct points. Throws PreconditionError if
/// the points coincide or are not canonical representatives of distinct
/// points.
Line line_through(const FieldContext& ctx, const ProjPoint& p1, const ProjPoint& p2);

/// Every line exactly once, sorted. A line is emitted from the pair formed
/// by its two smallest points.
std::vector<Line> enumerate_lines(const FieldContext& ctx);
/// Same set, built by spanning every pair of points and deduplicating.
/// Quadratic in the number of points times the line size; meant for
/// cross-checking enumerate_lines on small geometries.
std::vector<Line> enumerate_lines_by_dedupe(const FieldContext& ctx);

/// Number of points, (q^(n+1)-1)/(q-1).
std::uint64_t point_count(const FieldContext& ctx);
/// Gaussian binomial [n+1 choose 2]_q.
std::uint64_t line_count(const FieldContext& ctx);

/// Two points of the line with nonzero U-component, taken in sorted order.
/// At most one point of a line (w) has x = 0, so two always exist.
std::pair<ProjVector, ProjVector> basis_nonzero_U(const Line& l);

}  // namespace tfpack

#include "tfpack/geometry.hpp"

#include <algorithm>

#include "tfpack/errors.hpp"

namespace tfpack {

bool Line::contains(const ProjPoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

ProjVector scale(const FieldContext& ctx, FieldElem a, const ProjVector& v) {
  return {ctx.mul(a, v.x), ctx.mul(a, v.x0)};
}

ProjVector add(const ProjVector& a, const ProjVector& b) {
  return {FieldElem{a.x.enc() ^ b.x.enc()}, FieldElem{a.x0.enc() ^ b.x0.enc()}};
}

ProjPoint canonical_point(const FieldContext& ctx, const ProjVector& v) {
  if (v.is_zero()) throw PreconditionError("zero vector has no projective point");
  ProjVector best = v;
  for (FieldElem lambda : ctx.subfield()) {
    if (lambda.is_zero()) continue;
    best = std::min(best, scale(ctx, lambda, v));
  }
  return ProjPoint{best};
}

std::vector<ProjPoint> enumerate_points(const FieldContext& ctx) {
  std::vector<ProjPoint> out;
  out.reserve(point_count(ctx));
  for (FieldElem x0 : ctx.subfield()) {
    for (std::uint32_t x = 0; x < ctx.order(); ++x) {
      const ProjVector v{FieldElem{x}, x0};
      if (v.is_zero()) continue;
      if (canonical_point(ctx, v).rep == v) out.push_back(ProjPoint{v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Line line_through(const FieldContext& ctx, const ProjPoint& p1, const ProjPoint& p2) {
  if (p1 == p2) throw PreconditionError("line_through requires two distinct points");
  // The span is p1 together with a*p1 + p2 for every a in F_q.
  Line l;
  l.points.reserve(ctx.q() + 1);
  l.points.push_back(p1);
  for (FieldElem a : ctx.subfield()) {
    const ProjVector v = add(scale(ctx, a, p1.rep), p2.rep);
    if (v.is_zero()) throw PreconditionError("line_through requires independent points");
    l.points.push_back(canonical_point(ctx, v));
  }
  std::sort(l.points.begin(), l.points.end());
  l.points.erase(std::unique(l.points.begin(), l.points.end()), l.points.end());
  if (l.points.size() != ctx.q() + 1)
    throw PreconditionError("line_through requires independent points");
  return l;
}

std::vector<Line> enumerate_lines(const FieldContext& ctx) {
  const auto points = enumerate_points(ctx);
  std::vector<Line> out;
  out.reserve(line_count(ctx));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Line l = line_through(ctx, points[i], points[j]);
      if (l.points[0] == points[i] && l.points[1] == points[j]) out.push_back(std::move(l));
    }
  }
  // Emission order is already sorted: lexicographic in (first, second) point.
  return out;
}

std::vector<Line> enumerate_lines_by_dedupe(const FieldContext& ctx) {
  const auto points = enumerate_points(ctx);
  std::vector<Line> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      out.push_back(line_through(ctx, points[i], points[j]));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t point_count(const FieldContext& ctx) {
  const std::uint64_t q = ctx.q();
  return (ctx.order() * q - 1) / (q - 1);
}

std::uint64_t line_count(const FieldContext& ctx) {
  // [n+1 choose 2]_q = (q^(n+1)-1)(q^n-1) / ((q^2-1)(q-1))
  const std::uint64_t q = ctx.q();
  const std::uint64_t qn = ctx.order();
  const std::uint64_t a = (qn * q - 1) / (q - 1);
  const std::uint64_t b = (qn - 1) / (q - 1);
  return a * b / (q + 1);
}

std::pair<ProjVector, ProjVector> basis_nonzero_U(const Line& l) {
  const ProjVector* first = nullptr;
  for (const ProjPoint& p : l.points) {
    if (p.rep.x.is_zero()) continue;
    if (first == nullptr) {
      first = &p.rep;
    } else {
      return {*first, p.rep};
    }
  }
  throw PreconditionError("line has fewer than two points outside W");
}

}  // namespace tfpack

#include "tfpack/oracle.hpp"

#include <algorithm>

namespace tfpack::oracle {

namespace {

FieldElem naive_pow(const FieldContext& ctx, FieldElem a, std::uint64_t e) {
  FieldElem r = ctx.one();
  for (std::uint64_t i = 0; i < e; ++i) r = ctx.mul(r, a);
  return r;
}

FieldElem naive_form(const FieldContext& ctx, const ProjVector& v1, const ProjVector& v2) {
  const std::uint64_t q = ctx.q();
  const FieldElem x = v1.x, x0 = v1.x0, y = v2.x, y0 = v2.x0;
  const FieldElem d1 = ctx.add(ctx.mul(x, naive_pow(ctx, y, q)), ctx.mul(naive_pow(ctx, x, q), y));
  const FieldElem d2 = ctx.add(ctx.mul(x, y0), ctx.mul(x0, y));
  return ctx.add(d1, naive_pow(ctx, d2, q + 1));
}

}  // namespace

std::vector<FieldElem> classify_bruteforce(const FieldContext& ctx, const Line& l) {
  // Every nonzero vector of the 2-space, tagged with the point it spans.
  struct Tagged {
    ProjVector v;
    std::size_t point;
  };
  std::vector<Tagged> vectors;
  for (std::size_t i = 0; i < l.points.size(); ++i) {
    for (FieldElem lambda : ctx.subfield()) {
      if (lambda.is_zero()) continue;
      const ProjVector& r = l.points[i].rep;
      vectors.push_back({{ctx.mul(lambda, r.x), ctx.mul(lambda, r.x0)}, i});
    }
  }

  std::vector<FieldElem> values;
  for (const Tagged& a : vectors) {
    if (a.v.x.is_zero()) continue;
    for (const Tagged& b : vectors) {
      if (b.point == a.point || b.v.x.is_zero()) continue;
      values.push_back(naive_form(ctx, a.v, b.v));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<FieldElem> lambda_bruteforce(const FieldContext& ctx, FieldElem u, FieldElem alpha) {
  const std::uint64_t q = ctx.q();
  const FieldElem u_q = naive_pow(ctx, u, q);
  const FieldElem u_q1 = ctx.mul(u_q, u);
  std::vector<FieldElem> out;
  for (FieldElem lambda : ctx.subfield()) {
    const FieldElem constant = ctx.add(ctx.mul(lambda, u_q1), alpha);
    for (std::uint32_t xe = 0; xe < ctx.order(); ++xe) {
      const FieldElem x{xe};
      const FieldElem value =
          ctx.add(ctx.add(ctx.mul(u, naive_pow(ctx, x, q)), ctx.mul(u_q, x)), constant);
      if (value.is_zero()) {
        out.push_back(lambda);
        break;
      }
    }
  }
  return out;
}

std::size_t LineHash::operator()(const Line& l) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const ProjPoint& p : l.points) {
    for (std::uint32_t v : {p.rep.x.enc(), p.rep.x0.enc()}) {
      h ^= v;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

LineCounts packing_count_naive(const Packing& p) {
  LineCounts counts;
  for (const Spread& s : p.spreads) {
    for (const Line& l : s.lines) ++counts[l];
  }
  return counts;
}

}  // namespace tfpack::oracle

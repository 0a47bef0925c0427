#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "support/reference_gf2.hpp"
#include "tfpack/errors.hpp"
#include "tfpack/geometry.hpp"

using namespace tfpack;

namespace {

ProjPoint pt(std::uint32_t x, std::uint32_t x0) { return ProjPoint{{FieldElem{x}, FieldElem{x0}}}; }

Line line_of(std::initializer_list<ProjPoint> pts) { return Line{std::vector<ProjPoint>(pts)}; }

// Exhaustive lambda-scan with the reference multiplication.
ProjVector min_scaling(const FieldContext& ctx, const ProjVector& v) {
  const testing::ReferenceField ref{ctx.m(), ctx.modulus()};
  ProjVector best{FieldElem{UINT32_MAX}, FieldElem{UINT32_MAX}};
  for (std::uint32_t lam = 1; lam < ctx.order(); ++lam) {
    if (ref.pow(lam, ctx.q()) != lam) continue;
    const ProjVector s{FieldElem{ref.mul(lam, v.x.enc())}, FieldElem{ref.mul(lam, v.x0.enc())}};
    best = std::min(best, s);
  }
  return best;
}

}  // namespace

TEST_CASE("canonical_point") {
  const auto c13 = FieldContext::make(1, 3);
  for (std::uint32_t x = 0; x < 8; ++x) {
    for (std::uint32_t x0 = 0; x0 < 2; ++x0) {
      if (x == 0 && x0 == 0) continue;
      const ProjVector v{FieldElem{x}, FieldElem{x0}};
      CHECK(canonical_point(c13, v).rep == v);
    }
  }
  CHECK_THROWS_AS((void)canonical_point(c13, ProjVector{}), PreconditionError);

  const auto c33 = FieldContext::make(3, 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> dx(0, 511);
  std::uniform_int_distribution<std::size_t> ds(0, 7);
  for (int i = 0; i < 500; ++i) {
    const ProjVector v{FieldElem{dx(rng)}, c33.subfield()[ds(rng)]};
    if (v.is_zero()) continue;
    const ProjPoint p = canonical_point(c33, v);
    CHECK(p.rep == min_scaling(c33, v));
    CHECK(canonical_point(c33, p.rep) == p);
    for (FieldElem lam : c33.subfield()) {
      if (!lam.is_zero()) CHECK(canonical_point(c33, scale(c33, lam, v)) == p);
    }
  }
}

TEST_CASE("enumerate_points counts") {
  for (auto [k, n, expected] : {std::tuple{1, 3, 15}, std::tuple{1, 5, 63}, std::tuple{3, 3, 585}}) {
    const auto ctx = FieldContext::make(k, n);
    const auto points = enumerate_points(ctx);
    CHECK(points.size() == static_cast<std::size_t>(expected));
    CHECK(points.size() == testing::reference_point_count(ctx.q(), n));
    CHECK(point_count(ctx) == points.size());
    CHECK(std::is_sorted(points.begin(), points.end()));
    CHECK(std::adjacent_find(points.begin(), points.end()) == points.end());
    for (const ProjPoint& p : points) CHECK(canonical_point(ctx, p.rep) == p);
  }
}

TEST_CASE("line_through") {
  const auto ctx = FieldContext::make(1, 3);
  CHECK(line_through(ctx, pt(1, 0), pt(0, 1)) == line_of({pt(0, 1), pt(1, 0), pt(1, 1)}));
  CHECK(line_through(ctx, pt(2, 0), pt(4, 0)) == line_of({pt(2, 0), pt(4, 0), pt(6, 0)}));
  CHECK_THROWS_AS((void)line_through(ctx, pt(2, 0), pt(2, 0)), PreconditionError);

  const auto c33 = FieldContext::make(3, 3);
  const auto points = enumerate_points(c33);
  // (1,0) and a non-canonical multiple of it describe the same point.
  const ProjPoint fake{scale(c33, c33.subfield()[3], pt(1, 0).rep)};
  REQUIRE(fake != pt(1, 0));
  CHECK_THROWS_AS((void)line_through(c33, pt(1, 0), fake), PreconditionError);
  for (std::size_t i = 0; i + 1 < points.size(); i += 41) {
    const Line l = line_through(c33, points[i], points[i + 1]);
    CHECK(l.points.size() == 9);
    CHECK(l.contains(points[i]));
    CHECK(l.contains(points[i + 1]));
  }
}

TEST_CASE("enumerate_lines counts and generation paths") {
  for (auto [k, n, expected] : {std::tuple{1, 3, 35}, std::tuple{1, 5, 651}, std::tuple{3, 3, 4745}}) {
    const auto ctx = FieldContext::make(k, n);
    const auto lines = enumerate_lines(ctx);
    CHECK(lines.size() == static_cast<std::size_t>(expected));
    CHECK(lines.size() == testing::reference_line_count(ctx.q(), n));
    CHECK(line_count(ctx) == lines.size());
    CHECK(std::is_sorted(lines.begin(), lines.end()));
    for (const Line& l : lines) REQUIRE(l.points.size() == ctx.q() + 1);
  }
  for (auto [k, n] : {std::pair{1, 3}, std::pair{1, 5}}) {
    const auto ctx = FieldContext::make(k, n);
    CHECK(enumerate_lines(ctx) == enumerate_lines_by_dedupe(ctx));
  }
}

TEST_CASE("two distinct points lie on exactly one line") {
  {
    const auto ctx = FieldContext::make(1, 3);
    const auto points = enumerate_points(ctx);
    const auto lines = enumerate_lines(ctx);
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        const auto n = std::count_if(lines.begin(), lines.end(), [&](const Line& l) {
          return l.contains(points[i]) && l.contains(points[j]);
        });
        REQUIRE(n == 1);
      }
    }
  }
  {
    const auto ctx = FieldContext::make(3, 3);
    const auto points = enumerate_points(ctx);
    const auto lines = enumerate_lines(ctx);
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> d(0, points.size() - 1);
    for (int s = 0; s < 1000; ++s) {
      const std::size_t i = d(rng), j = d(rng);
      if (i == j) continue;
      const auto n = std::count_if(lines.begin(), lines.end(), [&](const Line& l) {
        return l.contains(points[i]) && l.contains(points[j]);
      });
      REQUIRE(n == 1);
    }
  }
}

TEST_CASE("basis_nonzero_U") {
  const auto ctx = FieldContext::make(1, 3);
  {
    const auto [a, b] = basis_nonzero_U(line_of({pt(0, 1), pt(1, 0), pt(1, 1)}));
    CHECK(a == pt(1, 0).rep);
    CHECK(b == pt(1, 1).rep);
  }
  {
    const auto [a, b] = basis_nonzero_U(line_of({pt(2, 0), pt(4, 0), pt(6, 0)}));
    CHECK(a == pt(2, 0).rep);
    CHECK(b == pt(4, 0).rep);
  }
  for (auto [k, n] : {std::pair{1, 3}, std::pair{3, 3}}) {
    const auto c = FieldContext::make(k, n);
    for (const Line& l : enumerate_lines(c)) {
      const auto [a, b] = basis_nonzero_U(l);
      REQUIRE_FALSE(a.x.is_zero());
      REQUIRE_FALSE(b.x.is_zero());
      REQUIRE(line_through(c, canonical_point(c, a), canonical_point(c, b)) == l);
    }
  }
}

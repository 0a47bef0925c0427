#include <set>
#include <string>

#include "doctest.h"
#include "support/reference_gf2.hpp"
#include "tfpack/errors.hpp"
#include "tfpack/field.hpp"

using namespace tfpack;
using tfpack::testing::ReferenceField;

namespace {

FieldElem e(std::uint32_t v) { return FieldElem{v}; }

}  // namespace

TEST_CASE("make_context picks the smallest irreducible modulus") {
  const auto c13 = FieldContext::make(1, 3);
  CHECK(c13.m() == 3);
  CHECK(c13.modulus() == 11);
  CHECK(c13.modulus() == testing::smallest_irreducible_by_sieve(3));

  const auto c15 = FieldContext::make(1, 5);
  CHECK(c15.m() == 5);
  CHECK(c15.modulus() == testing::smallest_irreducible_by_sieve(5));
  CHECK(c15.modulus() == 37);

  const auto c33 = FieldContext::make(3, 3);
  CHECK(c33.q() == 8);
  CHECK(c33.modulus() == testing::smallest_irreducible_by_sieve(9));
  CHECK(c33.modulus() == 515);
}

TEST_CASE("is_irreducible agrees with trial division on all polynomials up to degree 12") {
  for (std::uint64_t f = 2; f < (1U << 13); ++f) {
    CHECK_MESSAGE(is_irreducible(f) == testing::irreducible_by_trial_division(f), f);
  }
}

TEST_CASE("make_context rejects even k, even n and n < 3") {
  auto message = [](int k, int n) {
    try {
      (void)FieldContext::make(k, n);
    } catch (const PreconditionError& err) {
      return std::string(err.what());
    }
    return std::string();
  };
  CHECK(message(2, 3).find("k must be") != std::string::npos);
  CHECK(message(0, 3).find("k must be") != std::string::npos);
  CHECK(message(1, 4).find("n must be") != std::string::npos);
  CHECK(message(1, 1).find("n must be") != std::string::npos);
  CHECK(message(3, 11).find("k*n") != std::string::npos);
}

TEST_CASE("add is XOR") {
  const auto ctx = FieldContext::make(1, 3);
  CHECK(ctx.add(e(3), e(3)) == e(0));
  CHECK(ctx.add(e(2), e(1)) == e(3));
  CHECK(ctx.add(e(5), e(6)) == e(3));
}

TEST_CASE("mul in F_8") {
  const auto ctx = FieldContext::make(1, 3);
  CHECK(ctx.mul(e(2), e(4)) == e(3));
  for (std::uint32_t a = 0; a < 8; ++a) {
    CHECK(ctx.mul(e(a), e(1)) == e(a));
    CHECK(ctx.mul(e(a), e(0)) == e(0));
  }
}

TEST_CASE("mul matches the schoolbook reference exhaustively for m <= 9") {
  for (auto [k, n] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{3, 3}}) {
    const auto ctx = FieldContext::make(k, n);
    const ReferenceField ref{ctx.m(), ctx.modulus()};
    for (std::uint32_t a = 0; a < ctx.order(); ++a) {
      for (std::uint32_t b = 0; b < ctx.order(); ++b) {
        REQUIRE(ctx.mul(e(a), e(b)).enc() == ref.mul(a, b));
      }
    }
  }
}

TEST_CASE("inv") {
  const auto ctx = FieldContext::make(1, 3);
  CHECK(ctx.inv(e(2)) == e(5));
  CHECK(ctx.inv(e(1)) == e(1));
  CHECK_THROWS_AS((void)ctx.inv(e(0)), PreconditionError);
}

TEST_CASE("frobenius_q") {
  const auto ctx = FieldContext::make(1, 3);
  CHECK(ctx.frobenius_q(e(2)) == e(4));
  CHECK(ctx.frobenius_q(e(1)) == e(1));
  for (FieldElem s : ctx.subfield()) CHECK(ctx.frobenius_q(s) == s);

  const auto c33 = FieldContext::make(3, 3);
  const ReferenceField ref{c33.m(), c33.modulus()};
  for (std::uint32_t a = 0; a < c33.order(); ++a) {
    REQUIRE(c33.frobenius_q(e(a)).enc() == ref.pow(a, 8));
    REQUIRE(c33.frobenius_q_by_matrix(e(a)) == c33.frobenius_q(e(a)));
  }
}

TEST_CASE("qplus1_root") {
  const auto ctx = FieldContext::make(1, 3);
  CHECK(ctx.qplus1_root_exponent() == 5);
  CHECK(ctx.qplus1_root(e(3)) == e(2));
  CHECK(ctx.qplus1_root(e(1)) == e(1));
  CHECK(ctx.qplus1_root(e(0)) == e(0));
}

TEST_CASE("abs_trace") {
  const auto ctx = FieldContext::make(1, 3);
  CHECK(ctx.abs_trace(e(1)) == 1);
  CHECK(ctx.abs_trace(e(2)) == 0);
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      CHECK(ctx.abs_trace(ctx.add(e(a), e(b))) == (ctx.abs_trace(e(a)) ^ ctx.abs_trace(e(b))));
    }
  }
  for (auto [k, n] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{3, 3}, std::pair{1, 7}, std::pair{3, 5}}) {
    CHECK(FieldContext::make(k, n).abs_trace(FieldContext::one()) == 1);
  }
}

TEST_CASE("rel_trace lands in F_q") {
  const auto ctx = FieldContext::make(1, 3);
  CHECK(ctx.rel_trace(e(1)) == e(1));
  CHECK(ctx.rel_trace(e(2)) == e(0));
  for (std::uint32_t a = 0; a < 8; ++a) CHECK(ctx.rel_trace(e(a)).enc() == static_cast<std::uint32_t>(ctx.abs_trace(e(a))));

  const auto c33 = FieldContext::make(3, 3);
  for (std::uint32_t a = 0; a < c33.order(); ++a) {
    const FieldElem t = c33.rel_trace(e(a));
    REQUIRE(c33.frobenius_q(t) == t);
    REQUIRE(c33.in_subfield(t));
  }
}

TEST_CASE("subfield_sqrt") {
  const auto ctx = FieldContext::make(3, 3);
  for (FieldElem s : ctx.subfield()) {
    const FieldElem r = ctx.subfield_sqrt(s);
    CHECK(ctx.in_subfield(r));
    CHECK(ctx.square(r) == s);
  }
  FieldElem outside{2};
  REQUIRE_FALSE(ctx.in_subfield(outside));
  CHECK_THROWS_AS((void)ctx.subfield_sqrt(outside), PreconditionError);
}

TEST_CASE("solve_semilinear in F_8") {
  const auto ctx = FieldContext::make(1, 3);
  CHECK(ctx.solve_semilinear(e(1), e(0)) == std::vector<FieldElem>{e(0), e(1)});
  // With u = 1, q = 2 the image of y -> y^2 + y is the trace-zero hyperplane.
  for (std::uint32_t c = 0; c < 8; ++c) {
    CHECK(ctx.solve_semilinear(e(1), e(c)).empty() == (ctx.abs_trace(e(c)) == 1));
  }
  CHECK_THROWS_AS((void)ctx.solve_semilinear(e(0), e(1)), PreconditionError);
}

TEST_CASE("solve_semilinear returns exactly the brute-force solution set") {
  for (auto [k, n] : {std::pair{1, 3}, std::pair{3, 3}}) {
    const auto ctx = FieldContext::make(k, n);
    const ReferenceField ref{ctx.m(), ctx.modulus()};
    const std::uint32_t step = ctx.m() > 3 ? 37 : 1;
    for (std::uint32_t u = 1; u < ctx.order(); u += step) {
      const std::uint32_t uq = ref.pow(u, ctx.q());
      // Tabulate L(y) once per u, then read off every preimage set.
      std::vector<std::vector<FieldElem>> preimages(ctx.order());
      for (std::uint32_t y = 0; y < ctx.order(); ++y) {
        const std::uint32_t value = ref.mul(u, ref.pow(y, ctx.q())) ^ ref.mul(uq, y);
        preimages[value].push_back(e(y));
      }
      for (std::uint32_t c = 0; c < ctx.order(); ++c) {
        const auto got = ctx.solve_semilinear(e(u), e(c));
        REQUIRE(got == preimages[c]);
        REQUIRE((got.empty() || got.size() == ctx.q()));
      }
    }
  }
}

TEST_CASE("field axioms exhaustive for m = 3 and m = 5") {
  for (auto [k, n] : {std::pair{1, 3}, std::pair{1, 5}}) {
    const auto ctx = FieldContext::make(k, n);
    const auto N = static_cast<std::uint32_t>(ctx.order());
    for (std::uint32_t a = 0; a < N; ++a) {
      REQUIRE(ctx.add(e(a), e(a)) == e(0));
      if (a != 0) REQUIRE(ctx.mul(e(a), ctx.inv(e(a))) == e(1));
      for (std::uint32_t b = 0; b < N; ++b) {
        REQUIRE(ctx.mul(e(a), e(b)) == ctx.mul(e(b), e(a)));
        REQUIRE(ctx.add(e(a), e(b)) == ctx.add(e(b), e(a)));
        for (std::uint32_t c = 0; c < N; ++c) {
          REQUIRE(ctx.mul(ctx.mul(e(a), e(b)), e(c)) == ctx.mul(e(a), ctx.mul(e(b), e(c))));
          REQUIRE(ctx.mul(e(a), ctx.add(e(b), e(c))) ==
                  ctx.add(ctx.mul(e(a), e(b)), ctx.mul(e(a), e(c))));
        }
      }
    }
  }
}

TEST_CASE("Frobenius is a ring endomorphism of order n, and (q+1)-st roots round-trip") {
  for (auto [k, n] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{3, 3}}) {
    const auto ctx = FieldContext::make(k, n);
    const auto N = static_cast<std::uint32_t>(ctx.order());
    for (std::uint32_t a = 0; a < N; ++a) {
      FieldElem it = e(a);
      for (int i = 0; i < n; ++i) it = ctx.frobenius_q(it);
      REQUIRE(it == e(a));
      REQUIRE(ctx.qplus1_power(ctx.qplus1_root(e(a))) == e(a));
      REQUIRE(ctx.qplus1_root(ctx.qplus1_power(e(a))) == e(a));
      for (std::uint32_t b = 0; b < N; ++b) {
        REQUIRE(ctx.frobenius_q(ctx.mul(e(a), e(b))) ==
                ctx.mul(ctx.frobenius_q(e(a)), ctx.frobenius_q(e(b))));
        REQUIRE(ctx.frobenius_q(ctx.add(e(a), e(b))) ==
                ctx.add(ctx.frobenius_q(e(a)), ctx.frobenius_q(e(b))));
      }
    }
  }
}

TEST_CASE("subfield is a field of 2^k elements") {
  for (auto [k, n] : {std::pair{1, 3}, std::pair{3, 3}, std::pair{5, 3}}) {
    const auto ctx = FieldContext::make(k, n);
    const auto sub = ctx.subfield();
    REQUIRE(sub.size() == (std::size_t{1} << k));
    CHECK(std::is_sorted(sub.begin(), sub.end()));
    for (FieldElem a : sub) {
      for (FieldElem b : sub) {
        CHECK(ctx.in_subfield(ctx.add(a, b)));
        CHECK(ctx.in_subfield(ctx.mul(a, b)));
      }
    }
  }
}

TEST_CASE("additive Hilbert 90: c = y^q + y is solvable iff rel_trace(c) = 0") {
  for (auto [k, n] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{3, 3}}) {
    const auto ctx = FieldContext::make(k, n);
    const ReferenceField ref{ctx.m(), ctx.modulus()};
    std::set<std::uint32_t> image;
    for (std::uint32_t y = 0; y < ctx.order(); ++y) image.insert(ref.pow(y, ctx.q()) ^ y);
    for (std::uint32_t c = 0; c < ctx.order(); ++c) {
      REQUIRE((image.count(c) == 1) == ctx.rel_trace(e(c)).is_zero());
    }
  }
}

#include "tfpack/field.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "gf2_linear.hpp"
#include "tfpack/errors.hpp"

namespace tfpack {

namespace {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = degree(f);
  for (int d = degree(a); d >= df; d = degree(a)) a ^= f << (d - df);
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Carry-less product of two polynomials of degree < 32.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t modulus) {
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(modulus), new_r = static_cast<std::int64_t>(a % modulus);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw ConstructionError("q+1 is not invertible modulo q^n-1");
  if (t < 0) t += static_cast<std::int64_t>(modulus);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_irreducible(std::uint64_t poly) {
  const int d = degree(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  // x^(2^i) mod poly, starting at x.
  std::uint64_t x_pow = poly_mod(2, poly);
  for (int i = 1; i <= d / 2; ++i) {
    x_pow = poly_mod(clmul(x_pow, x_pow), poly);
    if (poly_gcd(poly, x_pow ^ 2U) != 1) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible(int deg) {
  if (deg < 1 || deg > FieldContext::kMaxDegree)
    throw PreconditionError("unsupported field degree " + std::to_string(deg));
  const std::uint64_t lo = std::uint64_t{1} << deg;
  for (std::uint64_t f = lo; f < 2 * lo; ++f) {
    if (is_irreducible(f)) return f;
  }
  throw ConstructionError("no irreducible polynomial of degree " + std::to_string(deg));
}

FieldContext FieldContext::make(int k, int n) {
  if (k < 1 || k % 2 == 0)
    throw PreconditionError("k must be a positive odd integer (q = 2^k with k odd), got k=" +
                            std::to_string(k));
  if (n < 3 || n % 2 == 0)
    throw PreconditionError("n must be an odd integer with n >= 3, got n=" + std::to_string(n));
  if (k * n > kMaxDegree)
    throw PreconditionError("k*n must not exceed " + std::to_string(kMaxDegree) + ", got " +
                            std::to_string(k * n));
  FieldContext ctx(k, n, smallest_irreducible(k * n));
  ctx.self_check();
  return ctx;
}

FieldContext::FieldContext(int k, int n, std::uint64_t modulus)
    : k_(k), n_(n), m_(k * n), modulus_(modulus) {
  root_exponent_ = mod_inverse(q() + 1, order() - 1);

  frob_columns_.resize(m_);
  for (int j = 0; j < m_; ++j) frob_columns_[j] = frobenius_q(FieldElem{1U << j}).enc();

  std::vector<std::uint32_t> fixed_columns(m_);
  for (int j = 0; j < m_; ++j) fixed_columns[j] = frob_columns_[j] ^ (1U << j);
  const auto sol = detail::solve_gf2(fixed_columns, 0);
  for (std::uint32_t s : detail::span_coset(0, sol.kernel)) subfield_.emplace_back(s);
  std::sort(subfield_.begin(), subfield_.end());
}

void FieldContext::self_check() const {
  if (!is_irreducible(modulus_)) throw ConstructionError("modulus is reducible");

  if (subfield_.size() != q())
    throw ConstructionError("fixed field of x -> x^q has " + std::to_string(subfield_.size()) +
                            " elements, expected " + std::to_string(q()));
  for (FieldElem s : subfield_) {
    if (frobenius_q(s) != s) throw ConstructionError("subfield element not fixed by x -> x^q");
  }

  if (abs_trace(one()) != 1) throw ConstructionError("absolute trace of 1 is not 1");
  if (std::gcd(q() + 1, order() - 1) != 1)
    throw ConstructionError("gcd(q+1, q^n-1) != 1");

  auto check_frobenius = [this](FieldElem a) {
    if (frobenius_q(a) != frobenius_q_by_matrix(a))
      throw ConstructionError("Frobenius matrix disagrees with repeated squaring at " +
                              std::to_string(a.enc()));
  };
  if (m_ <= 16) {
    for (std::uint32_t a = 0; a < order(); ++a) check_frobenius(FieldElem{a});
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(order() - 1));
    for (int i = 0; i < 4096; ++i) check_frobenius(FieldElem{dist(rng)});
  }
}

bool FieldContext::in_subfield(FieldElem a) const {
  return std::binary_search(subfield_.begin(), subfield_.end(), a);
}

FieldElem FieldContext::mul(FieldElem a, FieldElem b) const {
  std::uint64_t r = clmul(a.enc(), b.enc());
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    if ((r >> d) & 1U) r ^= modulus_ << (d - m_);
  }
  return FieldElem{static_cast<std::uint32_t>(r)};
}

FieldElem FieldContext::pow(FieldElem a, std::uint64_t e) const {
  FieldElem result = one();
  FieldElem base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = square(base);
    e >>= 1;
  }
  return result;
}

FieldElem FieldContext::inv(FieldElem a) const {
  if (a.is_zero()) throw PreconditionError("inverse of zero");
  return pow(a, order() - 2);
}

FieldElem FieldContext::frobenius_q(FieldElem a) const {
  for (int i = 0; i < k_; ++i) a = square(a);
  return a;
}

FieldElem FieldContext::frobenius_q_by_matrix(FieldElem a) const {
  std::uint32_t r = 0;
  for (std::uint32_t bits = a.enc(); bits != 0; bits &= bits - 1) {
    r ^= frob_columns_[__builtin_ctz(bits)];
  }
  return FieldElem{r};
}

FieldElem FieldContext::qplus1_power(FieldElem a) const { return mul(frobenius_q(a), a); }

FieldElem FieldContext::qplus1_root(FieldElem a) const { return pow(a, root_exponent_); }

int FieldContext::abs_trace(FieldElem a) const {
  FieldElem sum = zero();
  for (int i = 0; i < m_; ++i) {
    sum = add(sum, a);
    a = square(a);
  }
  if (sum.enc() > 1) throw ConstructionError("absolute trace left F_2");
  return static_cast<int>(sum.enc());
}

FieldElem FieldContext::rel_trace(FieldElem a) const {
  FieldElem sum = zero();
  for (int i = 0; i < n_; ++i) {
    sum = add(sum, a);
    a = frobenius_q_by_matrix(a);
  }
  return sum;
}

FieldElem FieldContext::subfield_sqrt(FieldElem a) const {
  if (!in_subfield(a))
    throw PreconditionError("square root requested for non-subfield element " +
                            std::to_string(a.enc()));
  for (int i = 0; i + 1 < k_; ++i) a = square(a);
  return a;
}

std::vector<FieldElem> FieldContext::solve_semilinear(FieldElem u, FieldElem c) const {
  if (u.is_zero()) throw PreconditionError("solve_semilinear requires u != 0");
  const FieldElem u_q = frobenius_q_by_matrix(u);
  std::vector<std::uint32_t> columns(m_);
  for (int j = 0; j < m_; ++j) {
    const FieldElem basis{1U << j};
    columns[j] = add(mul(u, FieldElem{frob_columns_[j]}), mul(u_q, basis)).enc();
  }
  const auto sol = detail::solve_gf2(columns, c.enc());
  std::vector<FieldElem> out;
  if (!sol.particular) return out;
  for (std::uint32_t y : detail::span_coset(*sol.particular, sol.kernel)) out.emplace_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tfpack

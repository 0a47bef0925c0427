#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace tfpack {

/// Element of F_{2^m} in the polynomial basis. Bit i of enc() is the
/// coefficient of z^i. The value carries no context; range checks happen
/// where untrusted encodings enter (file and command-line parsing).
class FieldElem {
 public:
  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint32_t enc) : enc_(enc) {}

  constexpr std::uint32_t enc() const { return enc_; }
  constexpr bool is_zero() const { return enc_ == 0; }

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

 private:
  std::uint32_t enc_ = 0;
};

/// Arithmetic in F_{2^m}, m = k*n, viewed as U = F_{q^n} with q = 2^k.
///
/// The modulus is the monic irreducible polynomial of degree m with the
/// smallest integer encoding, so every context built from the same (k, n)
/// is bit-identical. The copy of F_q is the fixed field of x -> x^q,
/// computed as the kernel of (Frobenius - identity).
///
/// Immutable after construction; all member functions are const and safe
/// to call concurrently.
class FieldContext {
 public:
  /// Largest supported extension degree k*n.
  static constexpr int kMaxDegree = 31;

  /// Throws PreconditionError for even k, even n, n < 3, k < 1 or k*n too
  /// large. Throws ConstructionError if a context self-check fails.
  static FieldContext make(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int m() const { return m_; }
  /// q = 2^k
  std::uint64_t q() const { return std::uint64_t{1} << k_; }
  /// Number of field elements, 2^m = q^n.
  std::uint64_t order() const { return std::uint64_t{1} << m_; }
  /// Modulus including the leading z^m term.
  std::uint64_t modulus() const { return modulus_; }

  bool contains(FieldElem a) const { return a.enc() < order(); }
  bool in_subfield(FieldElem a) const;

  static constexpr FieldElem zero() { return FieldElem{0}; }
  static constexpr FieldElem one() { return FieldElem{1}; }

  FieldElem add(FieldElem a, FieldElem b) const { return FieldElem{a.enc() ^ b.enc()}; }
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem square(FieldElem a) const { return mul(a, a); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  /// Throws PreconditionError on zero.
  FieldElem inv(FieldElem a) const;

  /// a^q by k successive squarings.
  FieldElem frobenius_q(FieldElem a) const;
  /// a^q through the precomputed F_2-linear matrix.
  FieldElem frobenius_q_by_matrix(FieldElem a) const;
  /// Column j is (z^j)^q.
  std::span<const std::uint32_t> frobenius_q_columns() const { return frob_columns_; }

  /// a^(q+1); lands in F_q exactly when a does, but is generally in U.
  FieldElem qplus1_power(FieldElem a) const;
  /// The unique b with b^(q+1) = a. Exists because gcd(q+1, q^n-1) = 1.
  FieldElem qplus1_root(FieldElem a) const;
  std::uint64_t qplus1_root_exponent() const { return root_exponent_; }

  /// Sum of a^(2^i) over i < m, as 0 or 1.
  int abs_trace(FieldElem a) const;
  /// Sum of a^(q^i) over i < n; always an element of the subfield.
  FieldElem rel_trace(FieldElem a) const;

  /// Square root of a subfield element, a^(2^(k-1)).
  /// Throws PreconditionError if a is not in F_q.
  FieldElem subfield_sqrt(FieldElem a) const;

  /// All y with u*y^q + u^q*y = c. The map is F_q-linear with kernel F_q*u,
  /// so the result is empty or a coset of size q, sorted by encoding.
  /// Throws PreconditionError for u = 0.
  std::vector<FieldElem> solve_semilinear(FieldElem u, FieldElem c) const;

  /// The q elements fixed by x -> x^q, in increasing encoding order.
  std::span<const FieldElem> subfield() const { return subfield_; }

 private:
  FieldContext(int k, int n, std::uint64_t modulus);
  void self_check() const;

  int k_ = 0;
  int n_ = 0;
  int m_ = 0;
  std::uint64_t modulus_ = 0;
  std::uint64_t root_exponent_ = 0;
  std::vector<std::uint32_t> frob_columns_;
  std::vector<FieldElem> subfield_;
};

/// Encoding of the smallest monic irreducible polynomial of degree m over F_2.
std::uint64_t smallest_irreducible(int degree);

/// Irreducibility over F_2 via gcd(x^(2^i) - x, f) = 1 for all i <= deg/2.
bool is_irreducible(std::uint64_t poly);

}  // namespace tfpack

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tfpack::detail {

// Solution set of A*y = b over F_2 for a square map given by its columns.
struct Gf2Solution {
  std::optional<std::uint32_t> particular;
  std::vector<std::uint32_t> kernel;
};

inline Gf2Solution solve_gf2(std::span<const std::uint32_t> columns, std::uint32_t rhs) {
  const int dim = static_cast<int>(columns.size());
  // Row i holds the coefficients of equation i (bit j = unknown j).
  std::vector<std::uint32_t> rows(dim, 0);
  std::vector<std::uint8_t> rhs_bits(dim, 0);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if ((columns[j] >> i) & 1U) rows[i] |= 1U << j;
    }
    rhs_bits[i] = (rhs >> i) & 1U;
  }

  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < dim && rank < dim; ++col) {
    int pivot = -1;
    for (int r = rank; r < dim; ++r) {
      if ((rows[r] >> col) & 1U) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    std::swap(rhs_bits[pivot], rhs_bits[rank]);
    for (int r = 0; r < dim; ++r) {
      if (r != rank && ((rows[r] >> col) & 1U)) {
        rows[r] ^= rows[rank];
        rhs_bits[r] ^= rhs_bits[rank];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }

  Gf2Solution out;
  std::uint32_t pivot_mask = 0;
  for (int c : pivot_col) pivot_mask |= 1U << c;

  for (int col = 0; col < dim; ++col) {
    if ((pivot_mask >> col) & 1U) continue;
    std::uint32_t v = 1U << col;
    for (int r = 0; r < rank; ++r) {
      if ((rows[r] >> col) & 1U) v |= 1U << pivot_col[r];
    }
    out.kernel.push_back(v);
  }

  for (int r = rank; r < dim; ++r) {
    if (rhs_bits[r]) return out;
  }
  std::uint32_t y = 0;
  for (int r = 0; r < rank; ++r) {
    if (rhs_bits[r]) y |= 1U << pivot_col[r];
  }
  out.particular = y;
  return out;
}

// All 2^|basis| combinations of the basis vectors, shifted by offset.
inline std::vector<std::uint32_t> span_coset(std::uint32_t offset,
                                             std::span<const std::uint32_t> basis) {
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << basis.size());
  out.push_back(offset);
  for (std::uint32_t b : basis) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

}  // namespace tfpack::detail

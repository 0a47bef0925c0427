#pragma once

// Brute-force reference paths. They use only add/mul from FieldContext and
// the subfield element list; no Frobenius matrix, trace, root or linear
// solver. Slow by construction.

#include <cstddef>
#include <functional>
#include <unordered_map>
#include <vector>

#include "tfpack/field.hpp"
#include "tfpack/geometry.hpp"
#include "tfpack/packing.hpp"

namespace tfpack::oracle {

/// Values of the defining form over every ordered basis of l whose two
/// vectors both have nonzero U-component. Sorted, duplicate-free.
std::vector<FieldElem> classify_bruteforce(const FieldContext& ctx, const Line& l);

/// Every lambda in F_q for which u*x^q + u^q*x + lambda*u^(q+1) + alpha has
/// a root, found by scanning all x in U.
std::vector<FieldElem> lambda_bruteforce(const FieldContext& ctx, FieldElem u, FieldElem alpha);

struct LineHash {
  std::size_t operator()(const Line& l) const noexcept;
};

using LineCounts = std::unordered_map<Line, std::int64_t, LineHash>;

/// Occurrences of every line across all spreads.
LineCounts packing_count_naive(const Packing& p);

}  // namespace tfpack::oracle

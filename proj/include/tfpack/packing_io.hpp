#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "tfpack/field.hpp"
#include "tfpack/packing.hpp"

namespace tfpack {

enum class FileFormat { kJson, kCsv };

inline constexpr int kPackingFormatVersion = 1;

/// Packing file contents after validation against make_context(k, n).
struct LoadedPacking {
  FieldContext ctx;
  Packing packing;
};

/// Serializes with every list sorted ascending; output depends only on the
/// packing, so equal packings give byte-identical files.
///
/// JSON: header keys format, version, k, n, q, m, modulus followed by
/// "spreads": [{"alpha": a, "lines": [[[x, x0], ...], ...]}, ...], one
/// spread per text line.
///
/// CSV: a "# tfpack-packing version=.. k=.. n=.. q=.. m=.. modulus=.." line,
/// a column header, then one row per line: alpha, line index within the
/// spread, and the q+1 point pairs.
std::string write_packing(const FieldContext& ctx, const Packing& p, FileFormat format);

/// Parses either format (detected from the first non-blank character).
/// Point encodings are range-checked, x0 must lie in the subfield, points
/// are canonicalized and lists re-sorted. Throws FormatError.
LoadedPacking read_packing(std::string_view text);

}  // namespace tfpack

#include "tfpack/packing_io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "tfpack/errors.hpp"

namespace tfpack {

namespace {

using nlohmann::json;

constexpr std::string_view kFormatTag = "tfpack-packing";

json line_to_json(const Line& l) {
  json out = json::array();
  for (const ProjPoint& p : l.points) out.push_back({p.rep.x.enc(), p.rep.x0.enc()});
  return out;
}

std::string write_json(const FieldContext& ctx, const Packing& p) {
  std::ostringstream os;
  os << "{\n"
     << "  \"format\": \"" << kFormatTag << "\",\n"
     << "  \"version\": " << kPackingFormatVersion << ",\n"
     << "  \"k\": " << ctx.k() << ",\n"
     << "  \"n\": " << ctx.n() << ",\n"
     << "  \"q\": " << ctx.q() << ",\n"
     << "  \"m\": " << ctx.m() << ",\n"
     << "  \"modulus\": " << ctx.modulus() << ",\n"
     << "  \"spreads\": [";
  for (std::size_t i = 0; i < p.spreads.size(); ++i) {
    const Spread& s = p.spreads[i];
    json lines = json::array();
    for (const Line& l : s.lines) lines.push_back(line_to_json(l));
    os << (i == 0 ? "\n" : ",\n") << "    {\"alpha\":" << s.alpha.enc()
       << ",\"lines\":" << lines.dump() << "}";
  }
  os << (p.spreads.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

std::string write_csv(const FieldContext& ctx, const Packing& p) {
  std::ostringstream os;
  os << "# " << kFormatTag << " version=" << kPackingFormatVersion << " k=" << ctx.k()
     << " n=" << ctx.n() << " q=" << ctx.q() << " m=" << ctx.m() << " modulus=" << ctx.modulus()
     << "\n";
  os << "alpha,line";
  for (std::uint64_t i = 0; i <= ctx.q(); ++i) os << ",x_" << i << ",x0_" << i;
  os << "\n";
  for (const Spread& s : p.spreads) {
    for (std::size_t li = 0; li < s.lines.size(); ++li) {
      os << s.alpha.enc() << "," << li;
      for (const ProjPoint& pt : s.lines[li].points) {
        os << "," << pt.rep.x.enc() << "," << pt.rep.x0.enc();
      }
      os << "\n";
    }
  }
  return os.str();
}

struct Header {
  std::int64_t version = -1, k = -1, n = -1, q = -1, m = -1, modulus = -1;
};

FieldContext context_for(const Header& h) {
  if (h.version != kPackingFormatVersion)
    throw FormatError("unsupported format version " + std::to_string(h.version));
  std::optional<FieldContext> ctx;
  try {
    ctx.emplace(FieldContext::make(static_cast<int>(h.k), static_cast<int>(h.n)));
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("invalid header parameters: ") + e.what());
  }
  if (h.q != static_cast<std::int64_t>(ctx->q()) || h.m != ctx->m())
    throw FormatError("header q/m inconsistent with k and n");
  if (h.modulus != static_cast<std::int64_t>(ctx->modulus()))
    throw FormatError("header modulus " + std::to_string(h.modulus) +
                      " does not match the context modulus " + std::to_string(ctx->modulus()));
  return std::move(*ctx);
}

ProjPoint parse_point(const FieldContext& ctx, std::int64_t x, std::int64_t x0) {
  if (x < 0 || x0 < 0 || static_cast<std::uint64_t>(x) >= ctx.order() ||
      static_cast<std::uint64_t>(x0) >= ctx.order())
    throw FormatError("point encoding out of range: [" + std::to_string(x) + "," +
                      std::to_string(x0) + "]");
  const ProjVector v{FieldElem{static_cast<std::uint32_t>(x)}, FieldElem{static_cast<std::uint32_t>(x0)}};
  if (!ctx.in_subfield(v.x0))
    throw FormatError("w-coordinate " + std::to_string(x0) + " is not a subfield element");
  if (v.is_zero()) throw FormatError("zero vector in point list");
  return canonical_point(ctx, v);
}

FieldElem parse_alpha(std::int64_t a) {
  if (a <= 0 || a > static_cast<std::int64_t>(UINT32_MAX))
    throw FormatError("spread label must be a positive 32-bit integer, got " + std::to_string(a));
  return FieldElem{static_cast<std::uint32_t>(a)};
}

void normalize(Packing& p) {
  for (Spread& s : p.spreads) {
    for (Line& l : s.lines) std::sort(l.points.begin(), l.points.end());
    std::sort(s.lines.begin(), s.lines.end());
  }
  std::sort(p.spreads.begin(), p.spreads.end(),
            [](const Spread& a, const Spread& b) { return a.alpha < b.alpha; });
  for (std::size_t i = 1; i < p.spreads.size(); ++i) {
    if (p.spreads[i].alpha == p.spreads[i - 1].alpha)
      throw FormatError("duplicate spread label " + std::to_string(p.spreads[i].alpha.enc()));
  }
}

std::int64_t int_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer())
    throw FormatError(std::string("missing or non-integer field \"") + key + "\"");
  return obj.at(key).get<std::int64_t>();
}

LoadedPacking read_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("top-level value must be an object");
  if (!doc.contains("format") || !doc.at("format").is_string() ||
      doc.at("format").get<std::string>() != kFormatTag)
    throw FormatError("missing format tag \"tfpack-packing\"");

  Header h;
  h.version = int_field(doc, "version");
  h.k = int_field(doc, "k");
  h.n = int_field(doc, "n");
  h.q = int_field(doc, "q");
  h.m = int_field(doc, "m");
  h.modulus = int_field(doc, "modulus");
  FieldContext ctx = context_for(h);

  if (!doc.contains("spreads") || !doc.at("spreads").is_array())
    throw FormatError("missing \"spreads\" array");
  Packing p;
  for (const json& js : doc.at("spreads")) {
    if (!js.is_object()) throw FormatError("spread entry must be an object");
    Spread s{parse_alpha(int_field(js, "alpha")), {}};
    if (!js.contains("lines") || !js.at("lines").is_array())
      throw FormatError("spread without \"lines\" array");
    for (const json& jl : js.at("lines")) {
      if (!jl.is_array()) throw FormatError("line must be an array of points");
      Line l;
      for (const json& jp : jl) {
        if (!jp.is_array() || jp.size() != 2 || !jp[0].is_number_integer() ||
            !jp[1].is_number_integer())
          throw FormatError("point must be a pair of integers");
        l.points.push_back(parse_point(ctx, jp[0].get<std::int64_t>(), jp[1].get<std::int64_t>()));
      }
      s.lines.push_back(std::move(l));
    }
    p.spreads.push_back(std::move(s));
  }
  normalize(p);
  return {std::move(ctx), std::move(p)};
}

std::int64_t parse_int(std::string_view token) {
  std::int64_t value = 0;
  std::size_t used = 0;
  try {
    value = std::stoll(std::string(token), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size())
    throw FormatError("expected an integer, got \"" + std::string(token) + "\"");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

LoadedPacking read_csv(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line.rfind("# tfpack-packing", 0) != 0)
    throw FormatError("CSV must start with a \"# tfpack-packing\" header line");

  std::map<std::string, std::int64_t, std::less<>> kv;
  for (std::string_view tok : split(std::string_view(line).substr(17), ' ')) {
    if (tok.empty()) continue;
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw FormatError("malformed header token");
    kv[std::string(tok.substr(0, eq))] = parse_int(tok.substr(eq + 1));
  }
  auto get = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw FormatError(std::string("CSV header missing ") + key);
    return it->second;
  };
  Header h{get("version"), get("k"), get("n"), get("q"), get("m"), get("modulus")};
  FieldContext ctx = context_for(h);

  if (!std::getline(is, line) || line.rfind("alpha,line", 0) != 0)
    throw FormatError("CSV column header missing");

  std::map<std::uint32_t, Spread> spreads;
  std::map<std::uint32_t, std::int64_t> next_index;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() < 4 || cells.size() % 2 != 0) throw FormatError("malformed CSV row");
    const FieldElem alpha = parse_alpha(parse_int(cells[0]));
    const std::int64_t index = parse_int(cells[1]);
    if (index != next_index[alpha.enc()]++) throw FormatError("line indices must be consecutive");
    Line l;
    for (std::size_t i = 2; i < cells.size(); i += 2) {
      l.points.push_back(parse_point(ctx, parse_int(cells[i]), parse_int(cells[i + 1])));
    }
    auto [it, inserted] = spreads.try_emplace(alpha.enc(), Spread{alpha, {}});
    it->second.lines.push_back(std::move(l));
  }
  Packing p;
  for (auto& [label, s] : spreads) p.spreads.push_back(std::move(s));
  normalize(p);
  return {std::move(ctx), std::move(p)};
}

}  // namespace

std::string write_packing(const FieldContext& ctx, const Packing& p, FileFormat format) {
  return format == FileFormat::kJson ? write_json(ctx, p) : write_csv(ctx, p);
}

LoadedPacking read_packing(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw FormatError("empty packing file");
  if (text[first] == '{') return read_json(text);
  if (text[first] == '#') return read_csv(text);
  throw FormatError("unrecognized packing file format");
}

}  // namespace tfpack

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <tuple>
#include <vector>

#include "tfpack/errors.hpp"
#include "tfpack/field.hpp"
#include "tfpack/geometry.hpp"
#include "tfpack/oracle.hpp"
#include "tfpack/packing.hpp"
#include "tfpack/packing_io.hpp"

namespace py = pybind11;
using namespace tfpack;

namespace {

using PyPoint = std::tuple<std::uint32_t, std::uint32_t>;
using PyLine = std::vector<PyPoint>;
using PyPacking = std::map<std::uint32_t, std::vector<PyLine>>;

ProjVector to_vector(const FieldContext& ctx, const PyPoint& p) {
  const ProjVector v{FieldElem{std::get<0>(p)}, FieldElem{std::get<1>(p)}};
  if (!ctx.contains(v.x) || !ctx.contains(v.x0) || !ctx.in_subfield(v.x0))
    throw PreconditionError("point encoding out of range or w-coordinate outside F_q");
  return v;
}

PyPoint from_point(const ProjPoint& p) { return {p.rep.x.enc(), p.rep.x0.enc()}; }

PyLine from_line(const Line& l) {
  PyLine out;
  for (const ProjPoint& p : l.points) out.push_back(from_point(p));
  return out;
}

Line to_line(const FieldContext& ctx, const PyLine& l) {
  Line out;
  for (const PyPoint& p : l) out.points.push_back(canonical_point(ctx, to_vector(ctx, p)));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

std::vector<PyLine> from_lines(const std::vector<Line>& lines) {
  std::vector<PyLine> out;
  for (const Line& l : lines) out.push_back(from_line(l));
  return out;
}

PyPacking from_packing(const Packing& p) {
  PyPacking out;
  for (const Spread& s : p.spreads) out[s.alpha.enc()] = from_lines(s.lines);
  return out;
}

Packing to_packing(const FieldContext& ctx, const PyPacking& p) {
  Packing out;
  for (const auto& [alpha, lines] : p) {
    Spread s{FieldElem{alpha}, {}};
    for (const PyLine& l : lines) s.lines.push_back(to_line(ctx, l));
    std::sort(s.lines.begin(), s.lines.end());
    out.spreads.push_back(std::move(s));
  }
  return out;
}

std::vector<std::uint32_t> encs(const std::vector<FieldElem>& v) {
  std::vector<std::uint32_t> out;
  for (FieldElem e : v) out.push_back(e.enc());
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["passed"] = r.passed();
  std::vector<std::string> violations;
  for (const Violation& v : r.violations) violations.push_back(v.describe());
  d["violations"] = violations;
  return d;
}

FieldElem el(std::uint32_t v) { return FieldElem{v}; }

}  // namespace

PYBIND11_MODULE(_tfpack, m) {
  m.doc() = "Transitive (q-1)-fold packings of PG(n, 2^k)";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<FieldContext>(m, "FieldContext")
      .def(py::init(&FieldContext::make), py::arg("k"), py::arg("n"))
      .def_property_readonly("k", &FieldContext::k)
      .def_property_readonly("n", &FieldContext::n)
      .def_property_readonly("m", &FieldContext::m)
      .def_property_readonly("q", &FieldContext::q)
      .def_property_readonly("order", &FieldContext::order)
      .def_property_readonly("modulus", &FieldContext::modulus)
      .def_property_readonly("subfield",
                             [](const FieldContext& c) {
                               return encs({c.subfield().begin(), c.subfield().end()});
                             })
      .def("add", [](const FieldContext& c, std::uint32_t a, std::uint32_t b) { return c.add(el(a), el(b)).enc(); })
      .def("mul", [](const FieldContext& c, std::uint32_t a, std::uint32_t b) { return c.mul(el(a), el(b)).enc(); })
      .def("inv", [](const FieldContext& c, std::uint32_t a) { return c.inv(el(a)).enc(); })
      .def("pow", [](const FieldContext& c, std::uint32_t a, std::uint64_t e) { return c.pow(el(a), e).enc(); })
      .def("frobenius_q", [](const FieldContext& c, std::uint32_t a) { return c.frobenius_q(el(a)).enc(); })
      .def("qplus1_root", [](const FieldContext& c, std::uint32_t a) { return c.qplus1_root(el(a)).enc(); })
      .def("abs_trace", [](const FieldContext& c, std::uint32_t a) { return c.abs_trace(el(a)); })
      .def("rel_trace", [](const FieldContext& c, std::uint32_t a) { return c.rel_trace(el(a)).enc(); })
      .def("solve_semilinear", [](const FieldContext& c, std::uint32_t u, std::uint32_t rhs) {
        return encs(c.solve_semilinear(el(u), el(rhs)));
      });

  m.def("canonical_point", [](const FieldContext& c, const PyPoint& p) {
    return from_point(canonical_point(c, to_vector(c, p)));
  });
  m.def("enumerate_points", [](const FieldContext& c) {
    std::vector<PyPoint> out;
    for (const ProjPoint& p : enumerate_points(c)) out.push_back(from_point(p));
    return out;
  });
  m.def("enumerate_lines", [](const FieldContext& c) { return from_lines(enumerate_lines(c)); });
  m.def("line_through", [](const FieldContext& c, const PyPoint& a, const PyPoint& b) {
    return from_line(line_through(c, canonical_point(c, to_vector(c, a)), canonical_point(c, to_vector(c, b))));
  });
  m.def("eval_form", [](const FieldContext& c, const PyPoint& a, const PyPoint& b) {
    return eval_form(c, to_vector(c, a), to_vector(c, b)).enc();
  });
  m.def("alpha_set", [](const FieldContext& c, const PyLine& l) { return encs(alpha_set(c, to_line(c, l))); });
  m.def("unique_lambda", [](const FieldContext& c, std::uint32_t u, std::uint32_t a) {
    return unique_lambda(c, el(u), el(a)).enc();
  });
  m.def("line_through_U_point", [](const FieldContext& c, std::uint32_t u, std::uint32_t a) {
    return from_line(line_through_U_point(c, el(u), el(a)));
  });
  m.def("line_through_affine_point", [](const FieldContext& c, std::uint32_t u, std::uint32_t a) {
    return from_line(line_through_affine_point(c, el(u), el(a)));
  });
  m.def("build_spread", [](const FieldContext& c, std::uint32_t a) { return from_lines(build_spread(c, el(a)).lines); });
  m.def(
      "build_packing",
      [](const FieldContext& c, unsigned threads) {
        Packing p;
        {
          py::gil_scoped_release release;
          p = build_packing(c, threads);
        }
        return from_packing(p);
      },
      py::arg("ctx"), py::arg("threads") = 0);
  m.def("apply_beta", [](const FieldContext& c, const PyLine& l, std::uint32_t beta) {
    return from_line(apply_beta(c, to_line(c, l), el(beta)));
  });
  m.def("verify_spread", [](const FieldContext& c, std::uint32_t alpha, const std::vector<PyLine>& lines) {
    Spread s{el(alpha), {}};
    for (const PyLine& l : lines) s.lines.push_back(to_line(c, l));
    std::sort(s.lines.begin(), s.lines.end());
    return report_dict(verify_spread(c, s));
  });
  m.def("verify_packing", [](const FieldContext& c, const PyPacking& p, std::int64_t t) {
    return report_dict(verify_packing(enumerate_lines(c), to_packing(c, p), t));
  });
  m.def("verify_transitivity", [](const FieldContext& c, const PyPacking& p) {
    const auto r = verify_transitivity(c, to_packing(c, p));
    py::dict d = report_dict(r.report);
    d["orbit_size"] = r.orbit_size;
    return d;
  });
  m.def("classify_bruteforce", [](const FieldContext& c, const PyLine& l) {
    return encs(oracle::classify_bruteforce(c, to_line(c, l)));
  });
  m.def("lambda_bruteforce", [](const FieldContext& c, std::uint32_t u, std::uint32_t a) {
    return encs(oracle::lambda_bruteforce(c, el(u), el(a)));
  });
  m.def(
      "write_packing",
      [](const FieldContext& c, const PyPacking& p, const std::string& format) {
        if (format != "json" && format != "csv") throw PreconditionError("format must be json or csv");
        return write_packing(c, to_packing(c, p), format == "csv" ? FileFormat::kCsv : FileFormat::kJson);
      },
      py::arg("ctx"), py::arg("packing"), py::arg("format") = "json");
  m.def("read_packing", [](const std::string& text) {
    LoadedPacking loaded = read_packing(text);
    PyPacking packing = from_packing(loaded.packing);
    return py::make_tuple(std::move(loaded.ctx), std::move(packing));
  });
}

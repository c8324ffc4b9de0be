#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orderdim/audit.hpp"
#include "orderdim/classify.hpp"
#include "orderdim/cli.hpp"
#include "orderdim/dimension.hpp"
#include "orderdim/extend.hpp"
#include "orderdim/geometry.hpp"
#include "orderdim/io.hpp"
#include "orderdim/realize.hpp"

namespace py = pybind11;
using namespace orderdim;

// Every entry point takes a relation document as text (JSON or edge list)
// and returns the canonical JSON the CLI would print.

namespace {

OutputFormat format_of(const std::string& name) {
  const auto f = output_format_from_string(name);
  if (!f) throw Error(Errc::InvalidArgument, "unknown format '" + name + "'");
  return *f;
}

PartnerClass partner_of(const std::string& name) {
  if (name == "interval" || name == "linear-interval") return PartnerClass::IntervalOrder;
  if (name == "semiorder" || name == "linear-semiorder") return PartnerClass::Semiorder;
  throw Error(Errc::InvalidArgument, "unknown partner class '" + name + "'");
}

std::string extend_text(const std::string& text, const std::string& cls, const std::string& format) {
  const Relation r = parse_relation(text);
  const OutputFormat f = format_of(format);
  if (cls == "linear") return emit(linear_extension(r), f);
  if (cls == "linear-reflexive") return emit(linear_extension(r, LinearMode::Reflexive), f);
  if (cls == "interval") return emit(interval_extension(r), f);
  if (cls == "strong-interval") return emit(strong_interval_extension(r), f);
  if (cls == "semiorder") return emit(semiorder_extension(r), f);
  throw Error(Errc::InvalidArgument, "unknown extension class '" + cls + "'");
}

std::string represent_text(const std::string& text, const std::string& kind, const std::string& format) {
  const Relation r = parse_relation(text);
  const OutputFormat f = format_of(format);
  if (kind == "interval") return emit(interval_representation(r), f);
  if (kind == "unit") return emit(unit_interval_representation(r), f);
  if (kind == "triangle") return emit(triangle_representation(r, PartnerClass::IntervalOrder), f);
  if (kind == "unit-triangle") return emit(triangle_representation(r, PartnerClass::Semiorder), f);
  if (kind == "box") return emit(box_embedding(r, interval_dim(r).witness), f);
  throw Error(Errc::InvalidArgument, "unknown representation kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_orderdim, m) {
  m.doc() = "Order classes, extensions, realizers, dimensions and representations of finite relations";

  static py::exception<Error> error(m, "OrderdimError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object witness = py::none();
      if (e.witness()) witness = py::make_tuple(std::string(to_string(e.witness()->kind)), e.witness()->members);
      py::object args = py::make_tuple(std::string(to_string(e.code())), e.what(), witness);
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("canonical", [](const std::string& text) { return emit(parse_document(text), OutputFormat::Json); },
        py::arg("text"));
  m.def("convert", [](const std::string& text, const std::string& format) {
        return emit(parse_document(text), format_of(format));
      }, py::arg("text"), py::arg("format"));
  m.def("classify", [](const std::string& text) { return emit(classify(parse_relation(text)), OutputFormat::Json); },
        py::arg("text"));
  m.def("extend", &extend_text, py::arg("text"), py::arg("cls"), py::arg("format") = "json");
  m.def("decompose", [](const std::string& text, const std::string& partner, bool exhaustive) {
        return emit(decompose(parse_relation(text), partner_of(partner), {.exhaustive = exhaustive}), OutputFormat::Json);
      }, py::arg("text"), py::arg("partner") = "interval", py::arg("exhaustive") = false);
  m.def("realize", [](const std::string& text, const std::string& cls) {
        const auto c = member_class_from_string(cls);
        if (!c) throw Error(Errc::InvalidArgument, "unknown member class '" + cls + "'");
        return emit(realizer(parse_relation(text), *c), OutputFormat::Json);
      }, py::arg("text"), py::arg("cls"));
  m.def("dimension", [](const std::string& text, const std::string& quantity) {
        const auto q = quantity_from_string(quantity);
        if (!q) throw Error(Errc::InvalidArgument, "unknown quantity '" + quantity + "'");
        return emit(dimension(parse_relation(text), *q), OutputFormat::Json);
      }, py::arg("text"), py::arg("quantity"));
  m.def("represent", &represent_text, py::arg("text"), py::arg("kind"), py::arg("format") = "json");
  m.def("audit", [](const std::string& theorem, std::size_t n, std::size_t count, std::uint64_t seed) {
        return emit(run_audit({.theorem = theorem, .n = n, .count = count, .seed = seed}), OutputFormat::Json);
      }, py::arg("theorem"), py::arg("n") = 6, py::arg("count") = 100, py::arg("seed") = 1);
  m.def("audit_theorems", &audit_theorems);
  m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      }, py::arg("args"));
}

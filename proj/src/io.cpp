#include "orderdim/io.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include "detail/json_io.hpp"

namespace orderdim {
namespace detail {
namespace {

Json pairs_json(const Relation& r) {
  Json out = Json::array();
  for (auto [a, b] : r.pairs()) out.push_back(Json::array({r.label(a), r.label(b)}));
  return out;
}

[[noreturn]] void bad_document(const std::string& what) {
  throw Error(Errc::ParseError, "relation document: " + what);
}

Json interval_json(const OpenInterval& iv) { return Json::array({to_string(iv.left), to_string(iv.right)}); }

}  // namespace

Json to_json(const Relation& r, const std::optional<std::string>& name) {
  Json j = Json::object();
  j["elements"] = r.elements();
  j["pairs"] = pairs_json(r);
  if (name) j["name"] = *name;
  return j;
}

Json to_json(const RelationDocument& doc) {
  Json j = Json::object();
  j["elements"] = doc.elements;
  j["pairs"] = Json::array();
  for (const auto& [a, b] : doc.pairs) j["pairs"].push_back(Json::array({a, b}));
  if (doc.name) j["name"] = *doc.name;
  return j;
}

Json to_json(const Witness& w) {
  return Json{{"kind", std::string(to_string(w.kind))}, {"members", w.members}};
}

Json to_json(const ClassReport& report) {
  Json flags = Json::object();
  Json witnesses = Json::object();
  for (Property p : kAllProperties) flags[std::string(to_string(p))] = report.flag(p);
  for (const auto& [p, w] : report.witnesses) witnesses[std::string(to_string(p))] = to_json(w);
  return Json{{"flags", flags}, {"witnesses", witnesses}};
}

Json to_json(const Decomposition& d) {
  Json seq = Json::array();
  for (Index i : linear_order_sequence(d.linear_part)) seq.push_back(d.linear_part.label(i));
  return Json{{"fast_path", d.fast_path},
              {"linear_part", to_json(d.linear_part)},
              {"linear_sequence", seq},
              {"partner", to_json(d.partner)},
              {"partner_class", std::string(to_string(d.partner_class))},
              {"search_nodes", d.search_nodes},
              {"verified", d.verified}};
}

Json to_json(const Realizer& z) {
  Json members = Json::array();
  for (std::size_t k = 0; k < z.members.size(); ++k) {
    Json m{{"is_linear", static_cast<bool>(z.is_linear.at(k))}, {"relation", to_json(z.members[k])}};
    if (k < z.provenance.size() && z.provenance[k]) m["decomposition"] = to_json(*z.provenance[k]);
    members.push_back(std::move(m));
  }
  return Json{{"member_class", std::string(to_string(z.member_class))},
              {"members", members},
              {"size", z.members.size()},
              {"target", to_json(z.target)}};
}

Json to_json(const DimCertificate& cert) {
  Json value = cert.value.q ? Json::array({cert.value.p, *cert.value.q}) : Json(cert.value.p);
  return Json{{"budget_used", cert.budget_used},
              {"display", cert.value.display()},
              {"exhaustive", cert.exhaustive},
              {"quantity", std::string(to_string(cert.quantity))},
              {"value", value},
              {"witness", to_json(cert.witness)}};
}

Json to_json(const GeometricRep& rep) {
  Json geometry = Json::array();
  for (Index x = 0; x < rep.source.size(); ++x) {
    Json e{{"element", rep.source.label(x)}};
    Json ivs = Json::array();
    for (const OpenInterval& iv : rep.intervals.at(x)) ivs.push_back(interval_json(iv));
    e["intervals"] = ivs;
    if (!rep.apex.empty()) e["apex"] = to_string(rep.apex.at(x));
    geometry.push_back(std::move(e));
  }
  return Json{{"geometry", geometry},
              {"kind", std::string(to_string(rep.kind))},
              {"source", to_json(rep.source)},
              {"verified", verify_representation(rep)}};
}

RelationDocument document_from_json(const Json& j) {
  if (!j.is_object()) bad_document("top level must be an object");
  RelationDocument doc;
  const auto elements = j.find("elements");
  if (elements == j.end() || !elements->is_array()) bad_document("\"elements\" must be an array of strings");
  for (const Json& e : *elements) {
    if (!e.is_string()) bad_document("\"elements\" must be an array of strings");
    doc.elements.push_back(e.get<std::string>());
  }
  const auto pairs = j.find("pairs");
  if (pairs == j.end() || !pairs->is_array()) bad_document("\"pairs\" must be an array of 2-element arrays");
  for (const Json& p : *pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      bad_document("every pair must be a 2-element array of strings");
    }
    doc.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  if (const auto name = j.find("name"); name != j.end()) {
    if (!name->is_string()) bad_document("\"name\" must be a string");
    doc.name = name->get<std::string>();
  }
  return doc;
}

Witness witness_from_json(const Json& j) {
  const auto kind = witness_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw Error(Errc::ParseError, "unknown witness kind");
  return Witness{*kind, j.at("members").get<std::vector<std::string>>()};
}

std::string dump(const Json& j) { return j.dump(2, ' ', false, Json::error_handler_t::replace) + "\n"; }

void unsupported(std::string_view what, OutputFormat format) {
  throw Error(Errc::UnsupportedCombination,
              "cannot emit " + std::string(what) + " as " + std::string(to_string(format)));
}

}  // namespace detail

namespace {

using detail::Json;

constexpr std::array<std::pair<OutputFormat, std::string_view>, 4> kFormatNames{{
    {OutputFormat::Json, "json"},
    {OutputFormat::Dot, "dot"},
    {OutputFormat::Svg, "svg"},
    {OutputFormat::Edgelist, "edgelist"},
}};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

RelationDocument parse_json_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                      ": malformed JSON");
  }
  return detail::document_from_json(j);
}

RelationDocument parse_edgelist(std::string_view text) {
  RelationDocument doc;
  std::optional<std::vector<std::string>> declared;
  std::vector<std::string> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.rfind("#elements:", 0) == 0) {
        if (declared) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": second #elements header");
        declared = tokens(line.substr(10));
      } else if (line.rfind("#name:", 0) == 0) {
        doc.name = std::string(trim(line.substr(6)));
      }
      continue;
    }
    auto t = tokens(line);
    if (t.size() != 2) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected two labels, got " +
                                        std::to_string(t.size()));
    }
    for (const auto& label : t)
      if (std::find(seen.begin(), seen.end(), label) == seen.end()) seen.push_back(label);
    doc.pairs.emplace_back(std::move(t[0]), std::move(t[1]));
  }
  if (declared) {
    doc.elements = std::move(*declared);
    for (const auto& label : seen)
      if (std::find(doc.elements.begin(), doc.elements.end(), label) == doc.elements.end()) {
        throw Error(Errc::UnknownElement, "label '" + label + "' is not in the #elements header");
      }
  } else {
    doc.elements = std::move(seen);
  }
  return doc;
}

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string emit_dot(const Relation& r, const std::optional<std::string>& name) {
  const bool acyclic = is_acyclic(r).holds;
  const Relation edges = acyclic ? transitive_reduction(r) : r;
  std::ostringstream out;
  out << "digraph " << dot_id(name.value_or("relation")) << " {\n";
  if (!acyclic) out << "  // cyclic relation: every pair drawn\n";
  for (const auto& e : r.elements()) out << "  " << dot_id(e) << ";\n";
  for (auto [a, b] : edges.pairs()) out << "  " << dot_id(r.label(a)) << " -> " << dot_id(r.label(b)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_edgelist(const Relation& r, const std::optional<std::string>& name) {
  for (const auto& e : r.elements()) {
    if (e.empty() || e.front() == '#' || e.find_first_of(" \t\r\n") != std::string::npos) {
      throw Error(Errc::UnsupportedCombination, "label '" + e + "' cannot be written as an edge list");
    }
  }
  std::string out;
  if (name) out += "#name: " + *name + "\n";
  out += "#elements:";
  for (const auto& e : r.elements()) out += " " + e;
  out += "\n";
  for (auto [a, b] : r.pairs()) out += r.label(a) + " " + r.label(b) + "\n";
  return out;
}

// Horizontal pixel mapping for a set of rational coordinates.
struct Axis {
  double lo = 0, hi = 1, left = 40, width = 520;

  template <typename It>
  static Axis over(It first, It last) {
    Axis a;
    if (first != last) {
      auto [mn, mx] = std::minmax_element(first, last);
      a.lo = boost::rational_cast<double>(*mn);
      a.hi = boost::rational_cast<double>(*mx);
    }
    if (a.hi <= a.lo) a.hi = a.lo + 1;
    return a;
  }
  double operator()(const Rational& v) const {
    return left + (boost::rational_cast<double>(v) - lo) / (hi - lo) * width;
  }
};

std::string emit_svg(const GeometricRep& rep) {
  const std::size_t n = rep.source.size();
  const std::size_t coords = n ? rep.intervals.front().size() : 0;
  const bool triangle = rep.kind == RepKind::Triangle || rep.kind == RepKind::UnitTriangle;
  if (rep.kind == RepKind::Box && coords > 2) detail::unsupported("a box embedding with more than 2 coordinates", OutputFormat::Svg);

  std::vector<Rational> xs, ys;
  for (const auto& boxes : rep.intervals) {
    if (boxes.empty()) continue;
    xs.push_back(boxes[0].left);
    xs.push_back(boxes[0].right);
    if (boxes.size() > 1) {
      ys.push_back(boxes[1].left);
      ys.push_back(boxes[1].right);
    }
  }
  const Axis x_axis = Axis::over(xs.begin(), xs.end());
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);

  if (triangle) {
    const Axis apex_axis = Axis::over(rep.apex.begin(), rep.apex.end());
    const double top = 40, bottom = 240;
    out << R"(<svg xmlns="http://www.w3.org/2000/svg" width="600" height="280">)" << "\n";
    out << R"(  <line x1="20" y1=")" << top << R"(" x2="580" y2=")" << top << R"(" stroke="black"/>)" << "\n";
    out << R"(  <line x1="20" y1=")" << bottom << R"(" x2="580" y2=")" << bottom << R"(" stroke="black"/>)" << "\n";
    for (Index x = 0; x < n; ++x) {
      const double ax = apex_axis(rep.apex[x]);
      out << R"(  <polygon points=")" << ax << "," << top << " " << x_axis(rep.intervals[x][0].left) << ","
          << bottom << " " << x_axis(rep.intervals[x][0].right) << "," << bottom
          << R"(" fill="steelblue" fill-opacity="0.25" stroke="steelblue"/>)" << "\n";
      out << R"(  <text x=")" << ax << R"(" y=")" << top - 8 << R"(" text-anchor="middle">)"
          << xml_escape(rep.source.label(x)) << "</text>\n";
    }
  } else if (coords == 2) {
    const Axis y_axis{Axis::over(ys.begin(), ys.end()).lo, Axis::over(ys.begin(), ys.end()).hi, 40, 520};
    out << R"(<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600">)" << "\n";
    for (Index x = 0; x < n; ++x) {
      const auto& b = rep.intervals[x];
      const double x0 = x_axis(b[0].left), x1 = x_axis(b[0].right);
      const double y0 = 600 - y_axis(b[1].right), y1 = 600 - y_axis(b[1].left);
      out << R"(  <rect x=")" << x0 << R"(" y=")" << y0 << R"(" width=")" << x1 - x0 << R"(" height=")" << y1 - y0
          << R"(" fill="steelblue" fill-opacity="0.2" stroke="steelblue"/>)" << "\n";
      out << R"(  <text x=")" << x0 + 4 << R"(" y=")" << y0 + 14 << R"(">)" << xml_escape(rep.source.label(x))
          << "</text>\n";
    }
  } else {
    const double height = 40 + 30.0 * static_cast<double>(n);
    out << R"(<svg xmlns="http://www.w3.org/2000/svg" width="600" height=")" << height << R"(">)" << "\n";
    for (Index x = 0; x < n; ++x) {
      const double y = 30 + 30.0 * static_cast<double>(x);
      const double x0 = x_axis(rep.intervals[x][0].left), x1 = x_axis(rep.intervals[x][0].right);
      out << R"(  <line x1=")" << x0 << R"(" y1=")" << y << R"(" x2=")" << x1 << R"(" y2=")" << y
          << R"(" stroke="steelblue" stroke-width="4"/>)" << "\n";
      out << R"(  <text x=")" << x0 << R"(" y=")" << y - 6 << R"(">)" << xml_escape(rep.source.label(x))
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string_view to_string(OutputFormat f) {
  for (auto [k, name] : kFormatNames)
    if (k == f) return name;
  return "?";
}

std::optional<OutputFormat> output_format_from_string(std::string_view name) {
  for (auto [k, n] : kFormatNames)
    if (n == name) return k;
  return std::nullopt;
}

RelationDocument parse_document(std::string_view text, InputFormat format) {
  if (format == InputFormat::Auto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string_view::npos && text[first] == '{' ? InputFormat::Json : InputFormat::Edgelist;
  }
  return format == InputFormat::Json ? parse_json_document(text) : parse_edgelist(text);
}

Relation to_relation(const RelationDocument& doc) {
  Relation r(doc.elements);
  for (const auto& [a, b] : doc.pairs) r.insert_labels(a, b);
  return r;
}

RelationDocument to_document(const Relation& r, std::optional<std::string> name) {
  RelationDocument doc{r.elements(), {}, std::move(name)};
  for (auto [a, b] : r.pairs()) doc.pairs.emplace_back(r.label(a), r.label(b));
  return doc;
}

Relation parse_relation(std::string_view text, InputFormat format) {
  return to_relation(parse_document(text, format));
}

std::string emit(const RelationDocument& doc, OutputFormat format) {
  const Relation r = to_relation(doc);
  switch (format) {
    case OutputFormat::Json: return detail::dump(detail::to_json(r, doc.name));
    case OutputFormat::Dot: return emit_dot(r, doc.name);
    case OutputFormat::Edgelist: return emit_edgelist(r, doc.name);
    case OutputFormat::Svg: break;
  }
  detail::unsupported("a relation", format);
}

std::string emit(const Relation& r, OutputFormat format) { return emit(to_document(r), format); }

std::string emit(const Witness& w, OutputFormat format) {
  if (format != OutputFormat::Json) detail::unsupported("a witness", format);
  return detail::dump(detail::to_json(w));
}

std::string emit(const ClassReport& report, OutputFormat format) {
  if (format != OutputFormat::Json) detail::unsupported("a class report", format);
  return detail::dump(detail::to_json(report));
}

std::string emit(const Decomposition& d, OutputFormat format) {
  if (format != OutputFormat::Json) detail::unsupported("a decomposition", format);
  return detail::dump(detail::to_json(d));
}

std::string emit(const Realizer& z, OutputFormat format) {
  if (format != OutputFormat::Json) detail::unsupported("a realizer", format);
  return detail::dump(detail::to_json(z));
}

std::string emit(const DimCertificate& cert, OutputFormat format) {
  if (format != OutputFormat::Json) detail::unsupported("a dimension certificate", format);
  return detail::dump(detail::to_json(cert));
}

std::string emit(const GeometricRep& rep, OutputFormat format) {
  if (format == OutputFormat::Json) return detail::dump(detail::to_json(rep));
  if (format == OutputFormat::Svg) return emit_svg(rep);
  detail::unsupported("a geometric representation", format);
}

}  // namespace orderdim

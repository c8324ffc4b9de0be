#include "orderdim/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

#include "orderdim/audit.hpp"
#include "orderdim/classify.hpp"
#include "orderdim/dimension.hpp"
#include "orderdim/extend.hpp"
#include "orderdim/geometry.hpp"
#include "orderdim/io.hpp"
#include "orderdim/realize.hpp"

namespace orderdim::cli {
namespace {

struct Settings {
  std::string format = "json";
  std::string out_path;
  std::size_t max_n = 0;
  std::uint64_t budget = 0;

  std::string file;
  std::string cls;
  std::string mode = "strict";
  std::string quantity;
  std::string kind;
  bool exhaustive = false;

  AuditOptions audit;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Relation load(const Settings& s) {
  Relation r = parse_relation(read_input(s.file));
  if (s.max_n && r.size() > s.max_n) {
    throw Error(Errc::SizeLimit, "input has " + std::to_string(r.size()) + " elements, --max-n is " +
                                     std::to_string(s.max_n));
  }
  return r;
}

DecomposeOptions decompose_options(const Settings& s) {
  DecomposeOptions d;
  if (s.budget) d.node_budget = s.budget;
  d.exhaustive = s.exhaustive;
  return d;
}

DimOptions dim_options(const Settings& s) {
  DimOptions d;
  if (s.max_n) d.max_n_linear = d.max_n_pool = s.max_n;
  if (s.budget) d.budget = s.budget;
  return d;
}

struct Result {
  std::string text;
  int code = kOk;
};

Result dispatch(const std::string& command, const Settings& s) {
  const OutputFormat fmt = *output_format_from_string(s.format);
  if (command == "check") return {emit(classify(load(s)), fmt)};
  if (command == "extend") {
    const Relation r = load(s);
    if (s.cls == "linear") {
      return {emit(linear_extension(r, s.mode == "reflexive" ? LinearMode::Reflexive : LinearMode::Strict), fmt)};
    }
    if (s.cls == "interval") return {emit(interval_extension(r), fmt)};
    if (s.cls == "strong-interval") return {emit(strong_interval_extension(r), fmt)};
    return {emit(semiorder_extension(r), fmt)};
  }
  if (command == "decompose") {
    const PartnerClass cls = s.cls == "linear-semiorder" ? PartnerClass::Semiorder : PartnerClass::IntervalOrder;
    return {emit(decompose(load(s), cls, decompose_options(s)), fmt)};
  }
  if (command == "realize") {
    return {emit(realizer(load(s), *member_class_from_string(s.cls), decompose_options(s)), fmt)};
  }
  if (command == "dim") return {emit(dimension(load(s), *quantity_from_string(s.quantity), dim_options(s)), fmt)};
  if (command == "represent") {
    const Relation r = load(s);
    if (s.kind == "interval") return {emit(interval_representation(r), fmt)};
    if (s.kind == "unit") return {emit(unit_interval_representation(r), fmt)};
    if (s.kind == "triangle") return {emit(triangle_representation(r, PartnerClass::IntervalOrder, decompose_options(s)), fmt)};
    if (s.kind == "unit-triangle") {
      return {emit(triangle_representation(r, PartnerClass::Semiorder, decompose_options(s)), fmt)};
    }
    return {emit(box_embedding(r, interval_dim(r, dim_options(s)).witness), fmt)};
  }
  // audit
  AuditOptions opts = s.audit;
  if (s.max_n && opts.n > s.max_n) {
    throw Error(Errc::SizeLimit, "--n " + std::to_string(opts.n) + " exceeds --max-n " + std::to_string(s.max_n));
  }
  opts.decompose = decompose_options(s);
  opts.dim = dim_options(s);
  const AuditReport report = run_audit(opts);
  return {emit(report, fmt), report.has_reverified_counterexample() ? kCounterexample : kOk};
}

std::vector<std::string> names(std::initializer_list<std::string_view> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

int exit_code(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::UnknownElement:
    case Errc::DuplicateElement:
    case Errc::GroundSetMismatch:
    case Errc::UnsupportedCombination:
    case Errc::InvalidArgument:
      return kInputError;
    case Errc::CyclicInput:
    case Errc::SymmetricPair:
    case Errc::NotReflexive:
    case Errc::NoDecompositionFound:
    case Errc::MemberConstructionFailed:
    case Errc::NotIntervalOrder:
    case Errc::NotSemiorder:
    case Errc::RealizerInvalid:
    case Errc::MemberNotLinear:
    case Errc::EmptyFamily:
      return kPrecondition;
    case Errc::SizeLimit:
    case Errc::SearchBudgetExhausted:
      return kLimit;
    case Errc::InternalSaturationCycle:
    case Errc::InternalOperatorFailure:
    case Errc::InfeasibleSystem:
      return kInternal;
  }
  return kInternal;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order classes, extensions, realizers, dimensions and representations of finite relations",
               "orderdim"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember(names({"json", "dot", "svg", "edgelist"})))
      ->capture_default_str();
  app.add_option("--out", s.out_path, "Write the result to this file instead of stdout");
  app.add_option("--max-n", s.max_n, "Reject inputs with more elements; also the exact-dimension cap");
  app.add_option("--budget", s.budget, "Search node budget for decompositions and dimension searches");

  auto add_file = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("FILE", s.file, "Relation document (JSON or edge list, - for stdin)")->required();
  };

  CLI::App* check = app.add_subcommand("check", "Classify a relation");
  add_file(check);

  CLI::App* extend = app.add_subcommand("extend", "Extend a relation into an order class");
  extend->add_option("--class", s.cls)->required()->check(
      CLI::IsMember(names({"linear", "interval", "strong-interval", "semiorder"})));
  extend->add_option("--mode", s.mode, "For --class linear")->check(CLI::IsMember(names({"strict", "reflexive"})));
  add_file(extend);

  CLI::App* decomp = app.add_subcommand("decompose", "Write the closure as L n Q");
  decomp->add_option("--class", s.cls)->required()->check(
      CLI::IsMember(names({"linear-interval", "linear-semiorder"})));
  decomp->add_flag("--exhaustive", s.exhaustive, "Ignore the node budget");
  add_file(decomp);

  CLI::App* realize = app.add_subcommand("realize", "Build and verify a realizer");
  realize->add_option("--class", s.cls)->required()->check(CLI::IsMember(names(
      {"strict-linear", "linear", "interval", "strong-interval", "semiorder", "linear-interval", "linear-semiorder"})));
  add_file(realize);

  CLI::App* dim = app.add_subcommand("dim", "Exact dimension with a witness realizer");
  dim->add_option("--quantity", s.quantity)->required()->check(
      CLI::IsMember(names({"dim", "idim", "sdim", "lidim", "lsdim"})));
  add_file(dim);

  CLI::App* represent = app.add_subcommand("represent", "Geometric representation");
  represent->add_option("--kind", s.kind)->required()->check(
      CLI::IsMember(names({"interval", "unit", "triangle", "unit-triangle", "box"})));
  represent->add_flag("--exhaustive", s.exhaustive, "Ignore the node budget");
  add_file(represent);

  CLI::App* audit = app.add_subcommand("audit", "Check a claim on seeded random acyclic relations");
  audit->fallthrough();
  audit->add_option("--theorem", s.audit.theorem)->required()->check(CLI::IsMember(audit_theorems()));
  audit->add_option("--n", s.audit.n)->capture_default_str();
  audit->add_option("--count", s.audit.count)->capture_default_str();
  audit->add_option("--seed", s.audit.seed)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Result result = dispatch(command, s);
    if (s.out_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(s.out_path, std::ios::binary);
      if (!(file << result.text)) {
        err << "error: cannot write '" << s.out_path << "'\n";
        return kInputError;
      }
    }
    return result.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.witness()) {
      err << "witness: " << to_string(e.witness()->kind);
      for (const auto& m : e.witness()->members) err << " " << m;
      err << "\n";
    }
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace orderdim::cli

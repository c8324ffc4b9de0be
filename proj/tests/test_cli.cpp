#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "orderdim/cli.hpp"
#include "support/build.hpp"

using build::fixture_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = orderdim::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check reports the 2+2 witness") {
    const Run r = run({"check", fixture_path("two_plus_two.json")});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["flags"]["interval_order"] == false);
    CHECK(j["witnesses"]["interval_order"]["kind"] == "TwoPlusTwo");
  }

  TEST_CASE("every subcommand succeeds on 2+2") {
    const std::string f = fixture_path("two_plus_two.json");
    const std::vector<std::vector<std::string>> commands = {
        {"extend", "--class", "linear", f},
        {"extend", "--class", "linear", "--mode", "reflexive", f},
        {"extend", "--class", "interval", f},
        {"extend", "--class", "semiorder", f},
        {"decompose", "--class", "linear-interval", f},
        {"decompose", "--class", "linear-semiorder", "--exhaustive", f},
        {"realize", "--class", "interval", f},
        {"realize", "--class", "linear-semiorder", f},
        {"dim", "--quantity", "sdim", f},
        {"represent", "--kind", "triangle", f},
        {"represent", "--kind", "box", f},
        {"--format", "dot", "extend", "--class", "interval", fixture_path("s3.json")},
        {"--format", "edgelist", "extend", "--class", "interval", fixture_path("two_plus_two.txt")},
    };
    for (const auto& args : commands) {
      CAPTURE(args.front());
      const Run r = run(args);
      CHECK(r.code == 0);
      CHECK_FALSE(r.out.empty());
      CHECK(r.err.empty());
    }
  }

  TEST_CASE("lidim of 2+2 prints (2,0)") {
    const Run r = run({"dim", "--quantity", "lidim", fixture_path("two_plus_two.json")});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["display"] == "(2,0)");
    CHECK(j["witness"]["size"] == 2);
  }

  TEST_CASE("global options may follow the subcommand") {
    const Run r = run({"represent", "--kind", "triangle", fixture_path("two_plus_two.json"), "--format", "svg"});
    CHECK(r.code == 0);
    CHECK(r.out.find("<svg") != std::string::npos);
  }

  TEST_CASE("--out writes the artifact to a file") {
    const auto path = std::filesystem::temp_directory_path() / "orderdim_cli_out.json";
    const Run r = run({"--out", path.string(), "check", fixture_path("two_plus_two.json")});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(std::filesystem::file_size(path) > 0);
    std::filesystem::remove(path);
  }

  TEST_CASE("input errors exit 2") {
    for (const char* f : {"duplicate.json", "malformed.json", "unknown_element.json", "missing.json"}) {
      CAPTURE(f);
      const Run r = run({"check", fixture_path(f)});
      CHECK(r.code == 2);
      CHECK(r.err.rfind("error:", 0) == 0);
    }
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"dim", "--quantity", "width", fixture_path("s3.json")}).code == 2);
    CHECK(run({"--format", "svg", "check", fixture_path("s3.json")}).code == 2);
  }

  TEST_CASE("precondition violations exit 3 with a witness") {
    const Run cyc = run({"extend", "--class", "interval", fixture_path("cyclic.json")});
    CHECK(cyc.code == 3);
    CHECK(cyc.err.find("witness: Cycle x1 x2 x3 x1") != std::string::npos);

    const Run rep = run({"represent", "--kind", "unit", fixture_path("three_plus_one.json")});
    CHECK(rep.code == 3);
    CHECK(rep.err.find("witness: ThreePlusOne") != std::string::npos);

    const Run iv = run({"represent", "--kind", "interval", fixture_path("two_plus_two.json")});
    CHECK(iv.code == 3);
    CHECK(iv.err.find("witness: TwoPlusTwo") != std::string::npos);
  }

  TEST_CASE("limits exit 4") {
    CHECK(run({"--max-n", "4", "check", fixture_path("s3.json")}).code == 4);
    CHECK(run({"--budget", "10", "dim", "--quantity", "dim", fixture_path("s3.json")}).code == 4);
    CHECK(run({"--budget", "1", "decompose", "--class", "linear-interval", fixture_path("two_plus_two.json")}).code == 4);
    CHECK(run({"--max-n", "3", "audit", "--theorem", "3.5", "--n", "5", "--count", "1"}).code == 4);
  }

  TEST_CASE("audit exit codes") {
    const Run ok = run({"audit", "--theorem", "4.1", "--n", "6", "--count", "200", "--seed", "7"});
    CHECK(ok.code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["passes"] == 200);
    CHECK(j["counterexamples"].empty());

    const Run bad = run({"audit", "--theorem", "3.7-literal", "--n", "4", "--count", "200", "--seed", "1"});
    CHECK(bad.code == 5);
    const auto b = nlohmann::json::parse(bad.out);
    REQUIRE_FALSE(b["counterexamples"].empty());
    for (const auto& c : b["counterexamples"]) CHECK(c["reverified"] == true);

    CHECK(run({"audit", "--theorem", "9.9"}).code == 2);
  }

  TEST_CASE("help exits 0") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("audit") != std::string::npos);
  }

  TEST_CASE("error codes map onto exit codes") {
    using orderdim::Errc;
    using namespace orderdim::cli;
    CHECK(exit_code(Errc::ParseError) == kInputError);
    CHECK(exit_code(Errc::CyclicInput) == kPrecondition);
    CHECK(exit_code(Errc::SearchBudgetExhausted) == kLimit);
    CHECK(exit_code(Errc::InternalSaturationCycle) == kInternal);
  }
}

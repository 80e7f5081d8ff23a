#include <sstream>
#include <string>
#include <vector>

#include "cosetal/cli.hpp"
#include "cosetal/text_format.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support/fixtures.hpp"

using namespace cosetal;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(COSETAL_DATA_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check on the absorbing extension") {
  const Run r = run({"check", "absorbing", data("basics.txt"), data("absorbing.txt")});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "cosetal: yes, special-Schreier: no"));
  CHECK(contains(r.out, "#   Eq(e) weakly Schreier: yes"));
}

TEST_CASE("check on the direct product passes everything") {
  const Run r = run({"check", "product", data("basics.txt"), data("product.txt")});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "extension: yes, cosetal: yes, special-Schreier: yes"));
  CHECK_FALSE(contains(r.out, ": no"));
}

TEST_CASE("check failure and usage errors") {
  const Run chain = run({"check", "chainext", data("basics.txt"), data("chain.txt")});
  CHECK(chain.code == kExitCheckFailed);
  CHECK(contains(chain.out, "e cokernel of k: no"));
  CHECK(contains(chain.out, "cosetal: no"));

  const Run parse = run({"check", "absorbing", data("basics.txt"), data("malformed.txt")});
  CHECK(parse.code == kExitUsage);
  CHECK(contains(parse.err, "malformed.txt:3"));
  CHECK(contains(parse.err, "ParseError"));

  CHECK(run({"check", "missing", data("basics.txt")}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"check", "absorbing", "/nonexistent.txt"}).code == kExitUsage);
}

TEST_CASE("extract") {
  const Run z4 = run({"extract", "z4ext", data("basics.txt"), data("z4.txt")});
  REQUIRE(z4.code == kExitOk);
  CHECK(contains(z4.out, "# sections: 2"));
  const Workspace ws = parse_workspace(z4.out);
  CHECK(ws.partition("z4ext_E") == PairPartition::discrete(2, 2));
  CHECK(ws.action("z4ext_phi") == ActionTable::trivial(2, 2));
  CHECK(ws.factor_set("z4ext_g") == fixtures::table(2, {0, 0, 0, 1}));

  const Run p = run({"extract", "product", data("basics.txt"), data("product.txt")});
  REQUIRE(p.code == kExitOk);
  const Workspace wp = parse_workspace(p.out);
  CHECK(wp.partition("product_E") == PairPartition::discrete(2, 2));
  CHECK(wp.factor_set("product_g") == FactorTable::constant(2, 0));

  const Run a = run({"extract", "absorbing", data("basics.txt"), data("absorbing.txt")});
  REQUIRE(a.code == kExitOk);
  CHECK(parse_workspace(a.out).partition("absorbing_E") == fixtures::coarse_at_h());

  const Run bad = run({"extract", "chainext", data("basics.txt"), data("chain.txt")});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(contains(bad.err, "NotCosetal"));
}

TEST_CASE("cohomology") {
  const Run z2 = run({"cohomology", data("basics.txt"), "--kernel", "z2", "--quotient", "z2"});
  REQUIRE(z2.code == kExitOk);
  CHECK(contains(z2.out, "# order 2, factors [2], reps: Z2xZ2, Z4"));
  const Run coarse = run({"cohomology", data("basics.txt"), data("data_coarse.txt"), "--kernel", "z2",
                          "--quotient", "l2", "--partition", "coarse"});
  REQUIRE(coarse.code == kExitOk);
  CHECK(contains(coarse.out, "# order 1,"));
  const Run z3 = run({"cohomology", data("z3.txt"), "--kernel", "z3", "--quotient", "z3"});
  REQUIRE(z3.code == kExitOk);
  CHECK(contains(z3.out, "# order 3, factors [3], reps: Z3xZ3, Z9, Z9"));
  const Run from_ext = run({"cohomology", data("basics.txt"), data("z4.txt"), "--extension", "z4ext"});
  CHECK(from_ext.code == kExitOk);
  CHECK(contains(from_ext.out, "# order 2,"));

  const Run small = run({"cohomology", data("z3.txt"), "--kernel", "z3", "--quotient", "z3", "--bound", "10"});
  CHECK(small.code == kExitCheckFailed);
  CHECK(contains(small.err, "TooLarge"));
  CHECK(contains(small.err, "needs bound >= 81"));
}

TEST_CASE("classify emits parseable extensions") {
  const Run r = run({"classify", data("z3.txt"), "--kernel", "z3", "--quotient", "z3"});
  REQUIRE(r.code == kExitOk);
  const Workspace ws = parse_workspace({{"z3", "group z3 3 0\n0 1 2\n1 2 0\n2 0 1\n"}, {"out", r.out}});
  CHECK(ws.extensions().size() == 3);
  for (const auto& [name, entry] : ws.extensions()) CHECK(is_cosetal(ws.extension_diagram(name)).holds);
}

TEST_CASE("baer-sum") {
  const Run twice = run({"baer-sum", "z4ext", "z4ext", data("basics.txt"), data("z4.txt")});
  REQUIRE(twice.code == kExitOk);
  CHECK(contains(twice.out, "# classes: 1 + 1 = 0 in a group of order 2"));
  CHECK(contains(twice.out, "# carrier Z2xZ2"));
  const Workspace ws = parse_workspace({{"basics", "group z2 2 0\n0 1\n1 0\n"}, {"out", twice.out}});
  CHECK(find_isomorphism(ws.extension_diagram("sum").total(), fixtures::z2z2_ext().total()).has_value());

  const Run unit = run({"baer-sum", "z4ext", "v4ext", data("basics.txt"), data("z4.txt"), "--name", "s"});
  REQUIRE(unit.code == kExitOk);
  CHECK(contains(unit.out, "# classes: 1 + 0 = 1"));
  CHECK(contains(unit.out, "extension s\n"));

  const Run mismatch = run({"baer-sum", "absorbing", "product", data("basics.txt"), data("absorbing.txt"),
                            data("product.txt")});
  CHECK(mismatch.code == kExitCheckFailed);
  CHECK(contains(mismatch.err, "DataMismatch"));
}

TEST_CASE("machine output") {
  const Run r = run({"check", "absorbing", data("basics.txt"), data("absorbing.txt"), "--machine"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "check");
  CHECK(j["cosetal"] == true);
  CHECK(j["special_schreier"] == false);
  CHECK(j["valid_extension"] == true);
  CHECK(j["exit"] == 0);

  const Run c = run({"--machine", "cohomology", data("basics.txt"), "--kernel", "z2", "--quotient", "z2"});
  REQUIRE(c.code == kExitOk);
  const auto h = nlohmann::json::parse(c.out);
  CHECK(h["order"] == 2);
  CHECK(h["invariant_factors"] == nlohmann::json::array({2}));

  const Run e = run({"check", "absorbing", data("basics.txt"), data("malformed.txt"), "--machine"});
  CHECK(e.code == kExitUsage);
  const auto err = nlohmann::json::parse(e.out);
  CHECK(err["error"]["code"] == "ParseError");
  CHECK(err["error"]["witness"] == nlohmann::json::array({3}));
  CHECK(err["exit"] == 2);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"classify", data("z3.txt"), "--kernel", "z3", "--quotient", "z3"};
  CHECK(run(args).out == run(args).out);
}

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "symrep/cli.hpp"
#include "symrep/text_format.hpp"
#include "symrep/workspace.hpp"

using namespace symrep;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string fixture(std::string const& name) { return (fs::path(SYMREP_FIXTURES) / name).string(); }

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Document payload(Run const& r) {
  REQUIRE(r.code != kExitError);
  return Document::parse(r.out);
}

std::string value(Document const& d, std::string_view key) {
  Field const& f = d.require(key);
  std::string s;
  for (auto const& t : f.rows.front()) s += (s.empty() ? "" : " ") + t;
  return s;
}

fs::path scratch(std::string const& name, std::string const& text) {
  fs::path dir = fs::temp_directory_path() / "symrep-cli-test";
  fs::create_directories(dir);
  fs::copy_file(fixture("e2.monoid"), dir / "e2.monoid", fs::copy_options::overwrite_existing);
  std::ofstream(dir / name) << text;
  return dir / name;
}

}  // namespace

TEST_CASE("completion") {
  Document e2 = payload(run({"completion", fixture("e2.monoid")}));
  CHECK(value(e2, "group-order") == "1");
  Document c2 = payload(run({"completion", fixture("c2.monoid")}));
  CHECK(value(c2, "group-order") == "2");
  CHECK(value(c2, "q") == "0 1");
  Run bad = run({"completion", fixture("bad_table.monoid")});
  CHECK(bad.code == kExitError);
  CHECK(bad.out.empty());
  CHECK(bad.err == "error: ParseError: bad_table.monoid: line 6, column 5: expected a non-negative integer, got 'x'\n");
}

TEST_CASE("rinv and linv") {
  Document a = payload(run({"rinv", fixture("a_xy.mset")}));
  CHECK(value(a, "size") == "1");
  CHECK(value(a, "counit-kind") == "injection");
  Document s = payload(run({"rinv", fixture("t3_swap.mset")}));
  CHECK(value(s, "counit-kind") == "isomorphism");
  Document l = payload(run({"linv", fixture("t3_swap.mset")}));
  CHECK(value(l, "unit-kind") == "isomorphism");
  Run open = run({"rinv", fixture("t3_regular.mset"), "--submonoid", "0,1"});
  CHECK(open.code == kExitError);
  CHECK(open.err.find("SubmonoidMismatch") != std::string::npos);
  Document rel = payload(run({"rinv", fixture("t3_regular.mset"), "--submonoid", "0,2"}));
  CHECK(value(rel, "submonoid") == "{0,2}");
  CHECK(run({"rinv", fixture("t3_regular.mset"), "--submonoid", "0,x"}).code == kExitError);
}

TEST_CASE("change of monoid and fixed points") {
  CHECK(value(payload(run({"induce", fixture("t3_point_n.mset")})), "size") == "2");
  CHECK(value(payload(run({"coinduce", fixture("t3_trivial2_n.mset")})), "size") == "4");
  Document r = payload(run({"restrict", fixture("t3_swap.mset"), "--submonoid", "0,2"}));
  CHECK(r.require("action").rows == std::vector<std::vector<std::string>>{{"0", "1"}, {"0", "1"}});
  CHECK(run({"induce", fixture("a_xy.mset")}).code == kExitError);
  CHECK(run({"restrict", fixture("a_xy.mset")}).code == kExitError);
  CHECK(value(payload(run({"fixed", fixture("a_xy.mset"), "--elements", "1"})), "fixed") == "0");
  CHECK(run({"fixed", fixture("a_xy.mset"), "--elements", "7"}).code == kExitError);
}

TEST_CASE("equiv exit codes") {
  CHECK(run({"equiv", fixture("collapse.map"), fixture("z_e2.family")}).code == kExitOk);
  CHECK(run({"equiv", fixture("collapse.map"), fixture("z_trivial.family")}).code == kExitNegative);
  Run unknown = run({"equiv", fixture("collapse.map"), fixture("z_unknown.family")});
  CHECK(unknown.code == kExitError);
  CHECK(unknown.err.find("FamilyInvalid") != std::string::npos);
  CHECK(run({"equiv", fixture("collapse.map"), fixture("z_e2.family"), "--side", "left"}).code == kExitOk);
  CHECK(run({"equiv", fixture("collapse.map"), fixture("z_e2.family"), "--side", "up"}).code == kExitError);
}

TEST_CASE("orbit-cat") {
  Document t = payload(run({"orbit-cat", fixture("trivial.monoid")}));
  CHECK(t.require("objects").rows.size() == 1);
  Document c2 = payload(run({"orbit-cat", fixture("c2.monoid")}));
  CHECK(c2.require("objects").rows.size() == 3);
  CHECK(value(c2, "cross-check") == "ok");
  Document e2 = payload(run({"orbit-cat", fixture("e2.monoid")}));
  CHECK(e2.require("homs").rows == std::vector<std::vector<std::string>>{{"2", "1"}, {"1", "1"}});
  CHECK(run({"orbit-cat", fixture("s3.monoid"), "--max-monoid", "4"}).code == kExitError);
  Document fam = payload(run({"orbit-cat", fixture("e2.monoid"), "--family", fixture("z_e2.family")}));
  CHECK(value(fam, "scope") == "family");
}

TEST_CASE("xfunctor") {
  Document d = payload(run({"xfunctor", fixture("a_xy.mset")}));
  CHECK(value(d, "upsilon") == "isomorphic");
  CHECK(d.require("values").rows ==
        std::vector<std::vector<std::string>>{{"({0},{0})", "{0,1}"}, {"({0,1},{0})", "{0}"}});
}

TEST_CASE("dynamics") {
  Document rho = payload(run({"dynamics", fixture("rho5.graph")}));
  CHECK(rho.require("cycles").rows == std::vector<std::vector<std::string>>{{"0", "1", "2"}});
  Document tower = payload(run({"dynamics", fixture("tower5.graph")}));
  CHECK(value(tower, "eventual-image") == "0");
  Document perm = payload(run({"dynamics", fixture("perm.graph")}));
  CHECK(value(perm, "eventual-image") == "0 1 2 3 4");
  CHECK(value(perm, "transient") == "0 0 0 0 0");
}

TEST_CASE("dot output is byte-stable") {
  fs::path dir = fs::temp_directory_path() / "symrep-cli-test";
  fs::create_directories(dir);
  auto read = [](fs::path const& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  std::string first, second;
  for (std::string* slot : {&first, &second}) {
    Run r = run({"dynamics", fixture("rho5.graph"), "--dot", (dir / "rho5.dot").string()});
    CHECK(r.code == kExitOk);
    *slot = read(dir / "rho5.dot");
  }
  CHECK(first == second);
  CHECK(first.rfind("digraph dynamics {", 0) == 0);
  CHECK(first.find("s0 [label=\"0\", peripheries=2") != std::string::npos);
  CHECK(first.find("s4 -> s3;") != std::string::npos);

  CHECK(run({"orbit-cat", fixture("c2.monoid"), "--dot", (dir / "c2.dot").string()}).code == kExitOk);
  std::string c2 = read(dir / "c2.dot");
  CHECK(c2.find("o2 -> o0") == std::string::npos);
  CHECK(c2.find("o0 -> o2 [label=\"1\"];") != std::string::npos);
}

TEST_CASE("tree format") {
  Run r = run({"--format", "tree", "rinv", fixture("a_xy.mset")});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["size"] == 1);
  CHECK(j["command"][0] == "--format");
  CHECK(j.begin().key() == "command");
  // Options after the subcommand reach the top level too.
  auto k = nlohmann::ordered_json::parse(run({"rinv", fixture("a_xy.mset"), "--format", "tree"}).out);
  CHECK(k["size"] == 1);
}

TEST_CASE("input errors") {
  CHECK(run({}).code == kExitError);
  CHECK(run({"frobnicate"}).code == kExitError);
  CHECK(run({"completion"}).code == kExitError);
  CHECK(run({"completion", fixture("missing.monoid")}).code == kExitError);
  CHECK(run({"completion", fixture("a_xy.mset")}).err.find("expected kind 'monoid'") != std::string::npos);
  CHECK(run({"--format", "xml", "completion", fixture("e2.monoid")}).code == kExitError);
  CHECK(run({"--help"}).code == kExitOk);

  fs::path bad = scratch("swap.mset", "kind: mset\nmonoid: e2.monoid\nsize: 2\naction:\n  0 1\n  1 0\n");
  Run r = run({"rinv", bad.string()});
  CHECK(r.code == kExitError);
  CHECK(r.err.find("CompatibilityViolated") != std::string::npos);
  fs::path shape = scratch("short.mset", "kind: mset\nmonoid: e2.monoid\nsize: 2\naction:\n  0 1\n");
  CHECK(run({"rinv", shape.string()}).err.find("line 4") != std::string::npos);
}

TEST_CASE("oracle command") {
  Run r = run({"oracle", "--max-order", "2", "--max-points", "2"});
  CHECK(r.code == kExitOk);
  CHECK(value(Document::parse(r.out), "status") == "pass");
}

TEST_CASE("reports are deterministic and round-trip") {
  std::vector<std::vector<std::string>> commands = {
      {"completion", fixture("t3.monoid")},
      {"linv", fixture("a_xy.mset")},
      {"orbit-cat", fixture("t3.monoid")},
      {"equiv", fixture("collapse.map"), fixture("z_trivial.family")},
  };
  for (auto const& c : commands) {
    Run a = run(c), b = run(c);
    CHECK(a.out == b.out);
    Report rep = Report::from_document(Document::parse(a.out));
    CHECK(rep.to_text() == a.out);
  }
}

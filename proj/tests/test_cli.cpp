#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>
#include <string>
#include <vector>

#include "cog/cli.hpp"
#include "cog/construct.hpp"
#include "cog/json_io.hpp"
#include "cog/regularity.hpp"
#include "cog/theory.hpp"
#include "doctest.h"

using namespace cog;

namespace {

struct RunResult {
  int rc;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args,
              const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int rc = cli_run(args, out, err, in);
  return {rc, out.str(), err.str()};
}

Json parse_line(const std::string& s) {
  REQUIRE(!s.empty());
  REQUIRE(s.back() == '\n');
  return Json::parse(s);
}

}  // namespace

// --- serialization round-trips --------------------------------------------

TEST_CASE("json: group literals round-trip") {
  for (const char* doc :
       {R"({"kind":"finite","m":12})", R"({"kind":"linearZ"})",
        R"({"kind":"qqwound","generators":[["1/2","1/2"],["0/1","1/1"]]})"}) {
    Json j = Json::parse(doc);
    CHECK(group_to_json(group_from_json(j)) == j);
  }
  // span input gets normalized to a basis but stays the same group
  Json messy = Json::parse(
      R"({"kind":"qqwound","generators":[["1/2","1/2"],["1/2","3/2"]]})");
  CyclicGroup G = group_from_json(messy);
  CHECK(group_from_json(group_to_json(G)).lattice() == G.lattice());
}

TEST_CASE("json: integers switch to strings beyond the double-safe range") {
  Int safe = (Int(1) << 53) - 1;
  CHECK(int_to_json(safe).is_number());
  CHECK(int_to_json(safe + 1).is_string());
  CHECK(int_from_json(int_to_json(safe + 1), "x") == safe + 1);
  CHECK(int_from_json(int_to_json(-safe - 1), "x") == -safe - 1);
  CHECK(int_from_json(Json(7), "x") == 7);
  CHECK_THROWS_AS(int_from_json(Json(1.5), "x"), std::invalid_argument);
  CHECK_THROWS_AS(int_from_json(Json::parse("\"12a\""), "x"),
                  std::invalid_argument);
}

TEST_CASE("json: rationals and elements") {
  CHECK(rat_to_json(Rat(-3, 6)) == Json("-1/2"));
  CHECK(rat_from_json(Json("4/8"), "q") == Rat(1, 2));
  CHECK(rat_from_json(Json(5), "q") == Rat(5));
  CHECK_THROWS_AS(rat_from_json(Json("1/0"), "q"), std::invalid_argument);

  GroupElem e = QQ{Rat(1, 3), Rat(-2)};
  CHECK(elem_from_json(elem_to_json(e)) == e);
  GroupElem z = Int(41);
  CHECK(elem_from_json(elem_to_json(z)) == z);
}

TEST_CASE("json: digit tables and theories round-trip") {
  Json bare = Json::parse(R"({"2":[1,0],"3":[2,1]})");
  DiscreteTheory t = discrete_theory_from_json(bare);
  CHECK(t.seq.digits.at(2) == std::vector<int>{1, 0});
  CHECK(!t.seq.all_further_zero);
  CHECK(charseq_to_json(t.seq) == bare);

  Json wrapped = Json::parse(
      R"({"charseq":{"2":[1]},"all_further_zero":true})");
  DiscreteTheory m = discrete_theory_from_json(wrapped);
  CHECK(m.seq.all_further_zero);
  CHECK(discrete_theory_to_json(m) == wrapped);

  CHECK_THROWS_AS(discrete_theory_from_json(Json::parse(R"({"4":[1]})")),
                  std::domain_error);
}

TEST_CASE("json: supernatural and dense theories round-trip") {
  Json s = Json::parse(R"({"2":2,"3":"inf"})");
  CHECK(supernatural_to_json(supernatural_from_json(s)) == s);

  Supernatural full;
  full.set_default(Supernatural::kInf);
  Json fj = supernatural_to_json(full);
  CHECK(fj["*"] == Json("inf"));
  CHECK(supernatural_from_json(fj).exp_at(101) == Supernatural::kInf);

  Json d = Json::parse(R"({"torsion":{"2":1},"zakon":{"5":"inf"}})");
  CHECK(dense_theory_to_json(dense_theory_from_json(d)) == d);
}

TEST_CASE("json: regularity verdicts") {
  RegularityVerdict open{std::nullopt, std::nullopt, "window"};
  Json j = verdict_to_json(open);
  CHECK(j["holds"].is_null());
  CHECK(j["witness"].is_null());
  CHECK(j["certified_by"] == "window");

  RegularityVerdict no{false, std::vector<GroupElem>{Int(-2), Int(-1)},
                       "window"};
  Json k = verdict_to_json(no);
  CHECK(k["holds"] == Json(false));
  CHECK(k["witness"] == Json::parse("[-2,-1]"));
}

// --- command smoke tests ---------------------------------------------------

TEST_CASE("cli: dsat evaluates a chain formula") {
  auto r = run({"dsat", "--group", R"({"kind":"finite","m":22})", "--p", "5",
                "--n", "1", "--k", "3"});
  CHECK(r.rc == 0);
  CHECK(r.out == "{\"holds\":true}\n");

  auto f = run({"dsat", "--group", R"({"kind":"finite","m":22})", "--p", "5",
                "--n", "1", "--k", "1"});
  CHECK(f.rc == 0);
  CHECK(parse_line(f.out)["holds"] == Json(false));
}

TEST_CASE("cli: ddsat evaluates on linear carriers") {
  auto r = run({"ddsat", "--carrier", R"({"kind":"zline","z":10})", "--p", "3",
                "--n", "2", "--k", "8"});
  CHECK(r.rc == 0);
  CHECK(parse_line(r.out)["holds"] == Json(true));
  auto f = run({"ddsat", "--carrier", R"({"kind":"zline","z":10})", "--p", "3",
                "--n", "2", "--k", "3"});
  CHECK(parse_line(f.out)["holds"] == Json(false));
}

TEST_CASE("cli: witness lists the frozen moduli") {
  auto r = run({"witness", "--constraints",
                R"([{"p":3,"n":1,"k":2},{"p":5,"n":1,"k":3}])", "--count",
                "3"});
  CHECK(r.rc == 0);
  CHECK(r.out == "[22,37,52]\n");
}

TEST_CASE("cli: axioms pass on finite and sampled infinite carriers") {
  auto fin = run({"axioms", "--group", R"({"kind":"finite","m":6})"});
  CHECK(fin.rc == 0);
  Json j = parse_line(fin.out);
  CHECK(j["ok"] == Json(true));
  CHECK(j["strict"]["witness"].is_null());

  auto inf = run({"axioms", "--group",
                  R"({"kind":"qqwound","generators":[["1/2","1/2"]]})",
                  "--samples", "9"});
  CHECK(inf.rc == 0);
  CHECK(parse_line(inf.out)["ok"] == Json(true));
}

TEST_CASE("cli: cregular brute force and window search") {
  auto fin = run({"cregular", "--group", R"({"kind":"finite","m":8})", "--n",
                  "2"});
  CHECK(fin.rc == 0);
  Json j = parse_line(fin.out);
  CHECK(j["holds"] == Json(true));
  CHECK(j["certified_by"] == "brute-force");

  // window refutation earns exit 1 and a concrete tuple
  auto win = run({"cregular", "--group", R"({"kind":"linearZ"})", "--n", "2",
                  "--bound", "10"});
  CHECK(win.rc == 1);
  Json w = parse_line(win.out);
  CHECK(w["holds"] == Json(false));
  CHECK(w["witness"] == Json::parse("[-10,-9]"));
  CHECK(w["certified_by"] == "window");

  // wrapped integers without a bound cannot be brute forced
  auto bad = run({"cregular", "--group", R"({"kind":"linearZ"})", "--n", "2"});
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("--bound") != std::string::npos);
  CHECK(bad.out.empty());
}

TEST_CASE("cli: budget flag caps the search") {
  auto hit = run({"cregular", "--group", R"({"kind":"finite","m":10})", "--n",
                  "3", "--budget", "50"});
  CHECK(hit.rc == 2);
  CHECK(hit.err.find("budget exceeded") != std::string::npos);

  auto ok = run({"regular", "--group", R"({"kind":"finite","m":10})", "--n",
                 "2", "--budget", "2000"});
  CHECK(ok.rc == 0);
  CHECK(parse_line(ok.out)["holds"] == Json(true));

  // the flag is global, so it also parses before the subcommand
  auto pre = run({"--budget", "50", "cregular", "--group",
                  R"({"kind":"finite","m":10})", "--n", "3"});
  CHECK(pre.rc == 2);
  CHECK(pre.err.find("budget exceeded") != std::string::npos);
}

TEST_CASE("cli: zakon on groups, unwound carriers, and dense documents") {
  auto g = run({"zakon", "--group", R"({"kind":"finite","m":18})", "--p", "3"});
  CHECK(g.rc == 0);
  CHECK(g.out == "{\"p\":3,\"exp\":1,\"value\":3}\n");

  auto u = run({"zakon", "--group",
                R"({"kind":"qqwound","generators":[["1/2","0/1"]]})", "--p",
                "2", "--unwound"});
  CHECK(u.rc == 0);
  CHECK(parse_line(u.out)["exp"] == Json(2));

  auto d = run({"zakon", "--group", R"({"torsion":{},"zakon":{"3":"inf"}})",
                "--p", "3"});
  CHECK(d.rc == 0);
  CHECK(parse_line(d.out)["value"] == Json("inf"));

  auto bad = run({"zakon", "--group", R"({"torsion":{},"zakon":{}})", "--p",
                  "3", "--unwound"});
  CHECK(bad.rc == 2);
}

TEST_CASE("cli: charseq reads groups and tables, shallow stages exit 2") {
  auto g = run({"charseq", "--group", R"({"kind":"finite","m":12})", "--p",
                "2", "--depth", "2"});
  CHECK(g.rc == 0);
  CHECK(g.out == "{\"p\":2,\"digits\":[0,0]}\n");

  auto t = run({"charseq", "--group", R"({"2":[1,1,0]})", "--p", "2",
                "--depth", "3"});
  CHECK(t.rc == 0);
  CHECK(parse_line(t.out)["digits"] == Json::parse("[1,1,0]"));

  auto shallow = run({"charseq", "--group",
                      R"({"kind":"qqwound","generators":[["1/2","1/2"]]})",
                      "--p", "3", "--depth", "1"});
  CHECK(shallow.rc == 2);
  CHECK(shallow.err.find("stage too shallow") != std::string::npos);
}

TEST_CASE("cli: build composes with charseq through stdin") {
  auto built = run({"build", "--digits", R"({"2":[1,0],"3":[2,1]})", "--n",
                    "2"});
  CHECK(built.rc == 0);
  Json g = parse_line(built.out);
  CHECK(g["kind"] == Json("qqwound"));

  // pipe the group literal back in via "-" and read both digit columns
  auto back3 = run({"charseq", "--group", "-", "--p", "3", "--depth", "2"},
                   built.out);
  CHECK(back3.rc == 0);
  CHECK(parse_line(back3.out)["digits"] == Json::parse("[2,1]"));
  auto back2 = run({"charseq", "--group", "-", "--p", "2", "--depth", "2"},
                   built.out);
  CHECK(parse_line(back2.out)["digits"] == Json::parse("[1,0]"));

  auto bad = run({"build", "--digits", R"({"2":[1]})", "--n", "2"});
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("insufficient digits") != std::string::npos);
}

TEST_CASE("cli: equivalence deciders") {
  const std::string marked1 = R"({"charseq":{"2":[1]},"all_further_zero":true})";
  const std::string marked2 = R"({"charseq":{"2":[0]},"all_further_zero":true})";
  auto eq = run({"equiv-discrete", "--left", marked1, "--right", marked1});
  CHECK(eq.rc == 0);
  CHECK(eq.out == "{\"status\":\"Equivalent\"}\n");

  auto diff = run({"equiv-discrete", "--left", marked1, "--right", marked2});
  CHECK(diff.rc == 0);
  Json d = parse_line(diff.out);
  CHECK(d["status"] == Json("Distinguished"));
  CHECK(d["formula"] == Json::parse(R"({"p":2,"n":1,"k":1})"));
  CHECK(d["side"] == Json(1));

  // partial tables pinned across the whole default rectangle
  const std::string deep =
      R"({"2":[0,0,0],"3":[0,0,0],"5":[0,0,0],"7":[0,0,0]})";
  auto upto = run({"equiv-discrete", "--left", deep, "--right", deep});
  CHECK(upto.rc == 0);
  Json u = parse_line(upto.out);
  CHECK(u["status"] == Json("EquivalentUpToDepth"));
  CHECK(u["p_bound"] == Json(7));
  CHECK(u["depth"] == Json(3));

  // partial tables that do not cover the rectangle are an input error
  auto thin = run({"equiv-discrete", "--left", R"({"2":[1,1]})", "--right",
                   R"({"2":[1,1]})"});
  CHECK(thin.rc == 2);
  CHECK(thin.err.find("insufficient specification") != std::string::npos);

  auto dense_eq = run({"equiv-dense", "--left",
                       R"({"torsion":{"2":1},"zakon":{"3":"inf"}})", "--right",
                       R"({"torsion":{"2":1},"zakon":{"3":"inf"}})"});
  CHECK(dense_eq.rc == 0);
  CHECK(dense_eq.out == "{\"status\":\"Equivalent\"}\n");

  auto dense_t = run({"equiv-dense", "--left", R"({"torsion":{"2":1},"zakon":{}})",
                      "--right", R"({"torsion":{"2":2},"zakon":{}})"});
  Json dt = parse_line(dense_t.out);
  CHECK(dt["status"] == Json("Distinguished"));
  CHECK(dt["invariant"] == Json("torsion"));
  CHECK(dt["p"] == Json(2));

  auto dense_z = run({"equiv-dense", "--left", R"({"torsion":{},"zakon":{"5":1}})",
                      "--right", R"({"torsion":{},"zakon":{"5":2}})"});
  Json dz = parse_line(dense_z.out);
  CHECK(dz["status"] == Json("Distinguished"));
  CHECK(dz["invariant"] == Json("zakon"));
}

TEST_CASE("cli: cocycle-check accepts builder carries") {
  auto r = run({"cocycle-check", "--digits", R"({"2":[1],"3":[2]})", "--den",
                "6"});
  CHECK(r.rc == 0);
  CHECK(r.out == "{\"ok\":true,\"law\":null,\"witness\":null}\n");

  auto s = run({"cocycle-check", "--digits", R"({"2":[1]})", "--den", "2",
                "--sample", R"(["0/1","1/2","1/1","3/2"])"});
  CHECK(s.rc == 0);
  CHECK(parse_line(s.out)["ok"] == Json(true));

  auto off = run({"cocycle-check", "--digits", R"({"2":[1]})", "--den", "2",
                  "--sample", R"(["1/3"])"});
  CHECK(off.rc == 2);
  CHECK(off.err.find("not in the cocycle domain") != std::string::npos);
}

TEST_CASE("cli: divreport and torsion") {
  auto d = run({"divreport", "--theory",
                R"({"charseq":{"2":[0,0],"3":[0,0]},"all_further_zero":true})",
                "--p", "2"});
  CHECK(d.rc == 0);
  Json j = parse_line(d.out);
  CHECK(j.contains("p_divisible"));
  CHECK(j.contains("one_p_divisible"));
  CHECK(j.contains("has_p_torsion"));

  auto tg = run({"torsion", "--group", R"({"kind":"finite","m":12})"});
  CHECK(tg.rc == 0);
  CHECK(tg.out == "{\"2\":2,\"3\":1}\n");

  auto tt = run({"torsion", "--group",
                 R"({"charseq":{"2":[1,1]},"all_further_zero":true})"});
  CHECK(tt.rc == 0);
  Json p = parse_line(tt.out);
  CHECK(p.is_object());
}

// --- CLI plumbing ----------------------------------------------------------

TEST_CASE("cli: output is deterministic across runs") {
  std::vector<std::vector<std::string>> cmds = {
      {"build", "--digits", R"({"2":[1,0],"3":[2,1]})", "--n", "2"},
      {"witness", "--constraints", R"([{"p":2,"n":2,"k":3}])", "--count", "4"},
      {"axioms", "--group", R"({"kind":"finite","m":9})"},
  };
  for (const auto& cmd : cmds) {
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.rc == b.rc);
    CHECK(a.out == b.out);
    CHECK(a.out.find('\n') == a.out.size() - 1);
  }
}

TEST_CASE("cli: usage and input errors exit 2") {
  CHECK(run({}).rc == 2);
  CHECK(run({"nosuchcmd"}).rc == 2);
  CHECK(run({"dsat", "--group", R"({"kind":"finite","m":22})"}).rc == 2);
  CHECK(run({"dsat", "--group", "{broken", "--p", "5", "--n", "1", "--k", "3"})
            .rc == 2);
  CHECK(run({"dsat", "--group", R"({"kind":"nope"})", "--p", "5", "--n", "1",
             "--k", "3"})
            .rc == 2);
  // non-prime p is rejected by formula validation
  auto bad = run({"dsat", "--group", R"({"kind":"finite","m":22})", "--p", "4",
                  "--n", "1", "--k", "3"});
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("prime") != std::string::npos);
  // bad numeric flag text
  CHECK(run({"zakon", "--group", R"({"kind":"finite","m":5})", "--p", "2x"})
            .rc == 2);
}

TEST_CASE("cli: help goes to stdout and exits 0") {
  auto top = run({"--help"});
  CHECK(top.rc == 0);
  CHECK(top.out.find("Usage") != std::string::npos);
  auto sub = run({"witness", "--help"});
  CHECK(sub.rc == 0);
  CHECK(sub.out.find("--constraints") != std::string::npos);
}

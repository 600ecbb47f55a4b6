#include "cog/cli.hpp"

#include <algorithm>
#include <exception>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cog/construct.hpp"
#include "cog/corder.hpp"
#include "cog/json_io.hpp"
#include "cog/regularity.hpp"
#include "cog/theory.hpp"
#include "cog/unwound.hpp"

namespace cog {
namespace {

// A flag value of "-" means "read the document from standard input".
std::string slurp_if_dash(const std::string& s, std::istream& in) {
  if (s != "-") return s;
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

Json parse_doc(const std::string& s, const char* what, std::istream& in) {
  const std::string text = slurp_if_dash(s, in);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string(what) + ": invalid JSON (" +
                                e.what() + ")");
  }
}

Int parse_int_flag(const std::string& s, const char* what) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": expected an integer, got \"" +
                                s + "\"");
  }
}

// Group literals carry a "kind" tag; plain digit tables and wrapped
// discrete theories do not.  Several commands accept either.
bool looks_like_group(const Json& j) {
  return j.is_object() && j.contains("kind") && j["kind"].is_string();
}

DiscreteDesc desc_from_json(const Json& j) {
  if (looks_like_group(j)) return group_from_json(j);
  return discrete_theory_from_json(j);
}

Json axiom_check_to_json(const AxiomCheck& c) {
  Json j;
  j["pass"] = c.pass;
  if (c.pass) {
    j["witness"] = nullptr;
  } else {
    Json w = Json::array();
    for (const auto& e : c.witness) w.push_back(elem_to_json(e));
    j["witness"] = std::move(w);
  }
  return j;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json j;
  j["ok"] = r.all_pass();
  j["strict"] = axiom_check_to_json(r.strict);
  j["cyclic"] = axiom_check_to_json(r.cyclic);
  j["linear"] = axiom_check_to_json(r.linear);
  j["compatible"] = axiom_check_to_json(r.compatible);
  return j;
}

Json zakon_to_json(const ZakonValue& z) {
  Json j;
  j["p"] = int_to_json(z.p);
  if (z.infinite()) {
    j["exp"] = "inf";
    j["value"] = "inf";
  } else {
    j["exp"] = z.exp;
    j["value"] = int_to_json(z.value());
  }
  return j;
}

Json equiv_to_json(const EquivVerdict& v) {
  Json j;
  switch (v.status) {
    case EquivStatus::Equivalent:
      j["status"] = "Equivalent";
      break;
    case EquivStatus::EquivalentUpToDepth:
      j["status"] = "EquivalentUpToDepth";
      j["p_bound"] = int_to_json(*v.p_bound);
      j["depth"] = *v.depth;
      break;
    case EquivStatus::Distinguished:
      j["status"] = "Distinguished";
      if (v.formula) {
        j["formula"] = dformula_to_json(*v.formula);
        j["side"] = *v.side;
      }
      if (v.dense) {
        j["p"] = int_to_json(v.dense->p);
        j["invariant"] =
            v.dense->which == DenseDiag::Which::Torsion ? "torsion" : "zakon";
      }
      break;
  }
  return j;
}

Json cocycle_report_to_json(const CocycleReport& r) {
  Json j;
  j["ok"] = r.ok;
  if (r.ok) {
    j["law"] = nullptr;
    j["witness"] = nullptr;
  } else {
    j["law"] = r.law;
    Json w = Json::array();
    for (const auto& q : r.witness) w.push_back(rat_to_json(q));
    j["witness"] = std::move(w);
  }
  return j;
}

struct CliState {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  int rc = 0;

  void emit(const Json& j) { out << dump_line(j); }
};

void register_commands(CLI::App& app, CliState& st) {
  // Shared option storage.  Each subcommand callback reads only the flags
  // it registered, so reusing slots across subcommands is safe.
  auto doc = std::make_shared<std::string>();
  auto doc2 = std::make_shared<std::string>();
  auto p_s = std::make_shared<std::string>();
  auto k_s = std::make_shared<std::string>();
  auto budget_s = std::make_shared<std::string>(kDefaultBudget.str());
  auto bound_s = std::make_shared<std::string>();
  auto den_s = std::make_shared<std::string>();
  auto pbound_s = std::make_shared<std::string>("7");
  auto n = std::make_shared<int>(0);
  auto depth = std::make_shared<int>(1);
  auto count = std::make_shared<int>(1);
  auto samples = std::make_shared<int>(12);
  auto unwound_flag = std::make_shared<bool>(false);

  // axioms: check the four order axioms, exhaustively on finite carriers
  // and on a deterministic sample otherwise.
  {
    auto* c = app.add_subcommand("axioms", "Check the cyclic order axioms");
    c->add_option("--group", *doc, "group literal (JSON, or - for stdin)")
        ->required();
    c->add_option("--samples", *samples,
                  "sample size for infinite carriers (default 12)");
    c->callback([&st, doc, samples] {
      CyclicGroup G = group_from_json(parse_doc(*doc, "--group", st.in));
      AxiomReport r;
      if (G.kind() == GroupKind::Finite) {
        r = check_axioms(G);
      } else {
        auto elems = sample_elements(G, *samples);
        r = check_axioms_on(G, elems, [&G](const GroupElem& a, const GroupElem& b,
                                           const GroupElem& c2) {
          return G.R(a, b, c2);
        });
      }
      st.emit(axiom_report_to_json(r));
      st.rc = r.all_pass() ? 0 : 1;
    });
  }

  // cregular / regular: the regularity deciders.  A --bound switches the
  // wrapped integers to the window refutation search.
  {
    auto* c = app.add_subcommand("cregular", "Decide c-n-regularity");
    c->add_option("--group", *doc, "group literal")->required();
    c->add_option("--n", *n, "regularity index (>= 2)")->required();
    c->add_option("--bound", *bound_s, "window bound (enables window search)");
    c->callback([&st, doc, n, bound_s, budget_s] {
      CyclicGroup G = group_from_json(parse_doc(*doc, "--group", st.in));
      Int budget = parse_int_flag(*budget_s, "--budget");
      RegularityVerdict v;
      if (!bound_s->empty()) {
        v = is_c_n_regular_window(G, *n, parse_int_flag(*bound_s, "--bound"),
                                  budget);
      } else if (G.kind() == GroupKind::LinearZ) {
        throw std::invalid_argument(
            "the wrapped integers need --bound for the window search");
      } else {
        v = is_c_n_regular(G, *n, budget);
      }
      st.emit(verdict_to_json(v));
      st.rc = (v.holds.has_value() && !*v.holds) ? 1 : 0;
    });
  }
  {
    auto* c = app.add_subcommand("regular", "Decide n-regularity");
    c->add_option("--group", *doc, "group literal")->required();
    c->add_option("--n", *n, "regularity index (>= 2)")->required();
    c->callback([&st, doc, n, budget_s] {
      CyclicGroup G = group_from_json(parse_doc(*doc, "--group", st.in));
      RegularityVerdict v =
          is_n_regular(G, *n, parse_int_flag(*budget_s, "--budget"));
      st.emit(verdict_to_json(v));
      st.rc = (v.holds.has_value() && !*v.holds) ? 1 : 0;
    });
  }

  // zakon: the p-power invariant, on the group or on its unwinding.
  {
    auto* c = app.add_subcommand("zakon", "Compute the Zakon p-power invariant");
    c->add_option("--group", *doc, "group literal or dense theory document")
        ->required();
    c->add_option("--p", *p_s, "prime")->required();
    c->add_flag("--unwound", *unwound_flag,
                "evaluate on the unwound extension instead");
    c->callback([&st, doc, p_s, unwound_flag] {
      Json j = parse_doc(*doc, "--group", st.in);
      Int p = parse_int_flag(*p_s, "--p");
      ZakonValue z;
      if (looks_like_group(j)) {
        CyclicGroup G = group_from_json(j);
        z = *unwound_flag ? zakon_unwound(G, p) : zakon(G, p);
      } else {
        if (*unwound_flag)
          throw std::invalid_argument(
              "--unwound needs a group literal, not a theory document");
        z = zakon(dense_theory_from_json(j), p);
      }
      st.emit(zakon_to_json(z));
    });
  }

  // dsat / ddsat: evaluate the two formula families.
  {
    auto* c = app.add_subcommand("dsat", "Evaluate a chain formula on a group");
    c->add_option("--group", *doc, "group literal")->required();
    c->add_option("--p", *p_s, "prime")->required();
    c->add_option("--n", *n, "exponent (>= 1)")->required();
    c->add_option("--k", *k_s, "residue index")->required();
    c->callback([&st, doc, p_s, n, k_s] {
      CyclicGroup G = group_from_json(parse_doc(*doc, "--group", st.in));
      DFormula f{parse_int_flag(*p_s, "--p"), *n, parse_int_flag(*k_s, "--k")};
      validate_dformula(f);
      Json j;
      j["holds"] = satisfies_D(G, f);
      st.emit(j);
    });
  }
  {
    auto* c = app.add_subcommand(
        "ddsat", "Evaluate a divisibility formula on a linear carrier");
    c->add_option("--carrier", *doc, "carrier literal")->required();
    c->add_option("--p", *p_s, "prime")->required();
    c->add_option("--n", *n, "exponent (>= 1)")->required();
    c->add_option("--k", *k_s, "residue index")->required();
    c->callback([&st, doc, p_s, n, k_s] {
      LinearGroupWithZ T = carrier_from_json(parse_doc(*doc, "--carrier", st.in));
      DFormula f{parse_int_flag(*p_s, "--p"), *n, parse_int_flag(*k_s, "--k")};
      validate_dformula(f);
      Json j;
      j["holds"] = satisfies_DD(T, f);
      st.emit(j);
    });
  }

  // charseq: read a digit column from a group or a digit table.
  {
    auto* c = app.add_subcommand("charseq",
                                 "Read characteristic digits at a prime");
    c->add_option("--group", *doc, "group literal or digit table")->required();
    c->add_option("--p", *p_s, "prime")->required();
    c->add_option("--depth", *depth, "number of digits (>= 1)")->required();
    c->callback([&st, doc, p_s, depth] {
      DiscreteDesc d = desc_from_json(parse_doc(*doc, "--group", st.in));
      PadicDigits digits = char_sequence(d, parse_int_flag(*p_s, "--p"), *depth);
      st.emit(padic_to_json(digits));
    });
  }

  // equiv-discrete / equiv-dense: elementary equivalence deciders.
  {
    auto* c = app.add_subcommand("equiv-discrete",
                                 "Compare two discrete digit tables");
    c->add_option("--left", *doc, "digit table")->required();
    c->add_option("--right", *doc2, "digit table")->required();
    c->add_option("--p-bound", *pbound_s,
                  "largest prime compared when tables are partial (default 7)");
    c->add_option("--depth", *depth,
                  "depth compared when tables are partial (default 3)");
    *depth = 3;
    c->callback([&st, doc, doc2, pbound_s, depth] {
      DiscreteTheory t1 =
          discrete_theory_from_json(parse_doc(*doc, "--left", st.in));
      DiscreteTheory t2 =
          discrete_theory_from_json(parse_doc(*doc2, "--right", st.in));
      EquivVerdict v = equiv_discrete(
          t1, t2, parse_int_flag(*pbound_s, "--p-bound"), *depth);
      st.emit(equiv_to_json(v));
    });
  }
  {
    auto* c = app.add_subcommand("equiv-dense",
                                 "Compare two dense theory documents");
    c->add_option("--left", *doc, "dense theory document")->required();
    c->add_option("--right", *doc2, "dense theory document")->required();
    c->callback([&st, doc, doc2] {
      DenseTheory t1 = dense_theory_from_json(parse_doc(*doc, "--left", st.in));
      DenseTheory t2 =
          dense_theory_from_json(parse_doc(*doc2, "--right", st.in));
      st.emit(equiv_to_json(equiv_dense(t1, t2)));
    });
  }

  // build: assemble the stage group of a digit prefix.
  {
    auto* c = app.add_subcommand("build",
                                 "Build the stage group of a digit prefix");
    c->add_option("--digits", *doc, "digit table")->required();
    c->add_option("--n", *n, "stage depth (>= 1)")->required();
    c->callback([&st, doc, n] {
      DiscreteTheory t =
          discrete_theory_from_json(parse_doc(*doc, "--digits", st.in));
      st.emit(group_to_json(build_discrete_group(t.seq, *n)));
    });
  }

  // witness: finite circles realizing a constraint system.
  {
    auto* c = app.add_subcommand(
        "witness", "List finite circles satisfying chain constraints");
    c->add_option("--constraints", *doc, "array of {p,n,k} formulas")
        ->required();
    c->add_option("--count", *count, "how many moduli to list")->required();
    c->callback([&st, doc, count] {
      Json arr = parse_doc(*doc, "--constraints", st.in);
      if (!arr.is_array())
        throw std::invalid_argument("--constraints: expected a JSON array");
      std::vector<DFormula> fs;
      for (const auto& f : arr) fs.push_back(dformula_from_json(f));
      Json out_arr = Json::array();
      for (const Int& m : witness_moduli(fs, *count))
        out_arr.push_back(int_to_json(m));
      st.emit(out_arr);
    });
  }

  // cocycle-check: verify the carry cocycle of a digit prefix.
  {
    auto* c = app.add_subcommand(
        "cocycle-check", "Verify the carry cocycle laws for a digit prefix");
    c->add_option("--digits", *doc, "digit table")->required();
    c->add_option("--den", *den_s, "denominator D (domain is (1/D)Z)")
        ->required();
    c->add_option("--sample", *doc2,
                  "JSON array of rationals to test on (default: j/D)");
    c->callback([&st, doc, doc2, den_s] {
      DiscreteTheory t =
          discrete_theory_from_json(parse_doc(*doc, "--digits", st.in));
      Int D = parse_int_flag(*den_s, "--den");
      Cocycle th = theta_from_digits(t.seq, D);
      std::vector<Rat> sample;
      if (!doc2->empty()) {
        Json arr = parse_doc(*doc2, "--sample", st.in);
        if (!arr.is_array())
          throw std::invalid_argument("--sample: expected a JSON array");
        for (const auto& q : arr)
          sample.push_back(rat_from_json(q, "sample entry"));
      } else {
        // Default sample: one period of the domain, capped so the cubic
        // law check stays fast for large denominators.
        Int cap = D < 64 ? D : Int(64);
        for (Int j = 0; j < cap; ++j) sample.push_back(Rat(j, D));
      }
      CocycleReport r = verify_cocycle(th, sample);
      st.emit(cocycle_report_to_json(r));
      st.rc = r.ok ? 0 : 1;
    });
  }

  // divreport: first-order divisibility facts of a discrete theory.
  {
    auto* c = app.add_subcommand("divreport",
                                 "Divisibility facts of a discrete theory");
    c->add_option("--theory", *doc, "digit table")->required();
    c->add_option("--p", *p_s, "prime")->required();
    c->callback([&st, doc, p_s] {
      DiscreteTheory t =
          discrete_theory_from_json(parse_doc(*doc, "--theory", st.in));
      DivReport r = divisibility_report(t, parse_int_flag(*p_s, "--p"));
      Json j;
      j["p_divisible"] = r.p_divisible;
      j["one_p_divisible"] = r.one_p_divisible;
      j["has_p_torsion"] = r.has_p_torsion;
      st.emit(j);
    });
  }

  // torsion: the torsion profile of a group or discrete theory.
  {
    auto* c = app.add_subcommand("torsion", "Torsion profile");
    c->add_option("--group", *doc, "group literal or digit table")->required();
    c->callback([&st, doc] {
      Json j = parse_doc(*doc, "--group", st.in);
      Supernatural s = looks_like_group(j)
                           ? torsion_profile(group_from_json(j))
                           : torsion_profile(discrete_theory_from_json(j));
      st.emit(supernatural_to_json(s));
    });
  }

  // Global search cap.  Subcommands fall through so the flag is accepted
  // both before and after the command name.
  app.add_option("--budget", *budget_s,
                 "cap on brute-force enumeration (default 10^7)");
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream& in) {
  CLI::App app{"Exact deciders and constructors for cyclically ordered groups"};
  app.require_subcommand(1);
  CliState st{out, err, in};
  register_commands(app, st);

  // CLI11's vector overload consumes the arguments back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  return st.rc;
}

}  // namespace cog

#include "cog/json_io.hpp"

namespace cog {

namespace {

const Int kSafeMax = (Int(1) << 53) - 1;

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument(msg);
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

std::vector<QQ> gens_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + ": generators must be an array");
  std::vector<QQ> gens;
  for (const Json& g : j) {
    if (!g.is_array() || g.size() != 2)
      bad(std::string(what) + ": each generator must be a rational pair");
    gens.push_back({rat_from_json(g[0], what), rat_from_json(g[1], what)});
  }
  gens.push_back({Rat(0), Rat(1)});
  return gens;
}

Json gens_to_json(const QQLattice& W) {
  Json a = Json::array();
  for (const QQ& b : W.basis()) a.push_back({rat_to_json(b.a), rat_to_json(b.b)});
  return a;
}

int small_int_from_json(const Json& j, const char* what) {
  Int v = int_from_json(j, what);
  if (v < -1000000 || v > 1000000) bad(std::string(what) + ": out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

Json int_to_json(const Int& v) {
  if (v <= kSafeMax && v >= -kSafeMax)
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Int int_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    try {
      return Int(s);
    } catch (const std::exception&) {
      bad(std::string(what) + ": not an integer: " + s);
    }
  }
  bad(std::string(what) + ": expected an integer");
}

Json rat_to_json(const Rat& q) { return Json(format_rat(q)); }

Rat rat_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get_ref<const std::string&>());
    } catch (const std::exception&) {
      bad(std::string(what) + ": not a rational: " +
          j.get_ref<const std::string&>());
    }
  }
  bad(std::string(what) + ": expected a rational");
}

Json group_to_json(const CyclicGroup& G) {
  Json j;
  switch (G.kind()) {
    case GroupKind::Finite:
      j["kind"] = "finite";
      j["m"] = int_to_json(*G.size());
      break;
    case GroupKind::LinearZ:
      j["kind"] = "linearZ";
      break;
    case GroupKind::QQWound:
      j["kind"] = "qqwound";
      j["generators"] = gens_to_json(G.lattice());
      break;
  }
  return j;
}

CyclicGroup group_from_json(const Json& j) {
  const std::string kind =
      field(j, "kind", "group literal").get<std::string>();
  if (kind == "finite")
    return CyclicGroup::finite(
        int_from_json(field(j, "m", "group literal"), "group literal m"));
  if (kind == "linearZ") return CyclicGroup::linear_z();
  if (kind == "qqwound")
    return CyclicGroup::qq_wound(QQLattice::span(
        gens_from_json(field(j, "generators", "group literal"), "qqwound")));
  bad("group literal: unknown kind \"" + kind + "\"");
}

Json carrier_to_json(const LinearGroupWithZ& T) {
  Json j;
  if (T.kind() == LinearGroupWithZ::Kind::ZLine) {
    j["kind"] = "zline";
    j["z"] = int_to_json(T.z_int());
  } else {
    j["kind"] = "qqline";
    j["generators"] = gens_to_json(T.lattice());
  }
  return j;
}

LinearGroupWithZ carrier_from_json(const Json& j) {
  const std::string kind =
      field(j, "kind", "carrier literal").get<std::string>();
  if (kind == "zline")
    return LinearGroupWithZ::z_line(
        int_from_json(field(j, "z", "carrier literal"), "carrier z"));
  if (kind == "qqline")
    return LinearGroupWithZ::qq_line(QQLattice::span(
        gens_from_json(field(j, "generators", "carrier literal"), "qqline")));
  bad("carrier literal: unknown kind \"" + kind + "\"");
}

Json elem_to_json(const GroupElem& e) {
  if (std::holds_alternative<Int>(e)) return int_to_json(std::get<Int>(e));
  const QQ& q = std::get<QQ>(e);
  return Json::array({rat_to_json(q.a), rat_to_json(q.b)});
}

GroupElem elem_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) bad("element: rational pair must have two entries");
    return QQ{rat_from_json(j[0], "element"), rat_from_json(j[1], "element")};
  }
  return int_from_json(j, "element");
}

Json uw_to_json(const UnwoundElem& u) {
  return Json::array({int_to_json(u.winding), elem_to_json(u.g)});
}

UnwoundElem uw_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    bad("unwound element: expected [winding, element]");
  return {int_from_json(j[0], "winding"), elem_from_json(j[1])};
}

Json dformula_to_json(const DFormula& f) {
  Json j;
  j["p"] = int_to_json(f.p);
  j["n"] = f.n;
  j["k"] = int_to_json(f.k);
  return j;
}

DFormula dformula_from_json(const Json& j) {
  DFormula f{int_from_json(field(j, "p", "formula"), "formula p"),
             small_int_from_json(field(j, "n", "formula"), "formula n"),
             int_from_json(field(j, "k", "formula"), "formula k")};
  validate_dformula(f);
  return f;
}

Json padic_to_json(const PadicDigits& d) {
  Json j;
  j["p"] = int_to_json(d.p);
  j["digits"] = d.digits;
  return j;
}

Json charseq_to_json(const CharSeq& c) {
  Json j = Json::object();
  for (const auto& [p, digits] : c.digits) j[p.str()] = digits;
  return j;
}

CharSeq charseq_from_json(const Json& j) {
  if (!j.is_object()) bad("digit table: expected an object");
  CharSeq c;
  for (const auto& [key, val] : j.items()) {
    Int p = int_from_json(Json(key), "digit table key");
    if (!val.is_array()) bad("digit table: digits must be an array");
    std::vector<int> digits;
    for (const Json& d : val)
      digits.push_back(small_int_from_json(d, "digit"));
    c.digits[p] = std::move(digits);
  }
  validate_charseq(c);
  return c;
}

Json discrete_theory_to_json(const DiscreteTheory& t) {
  Json j;
  j["charseq"] = charseq_to_json(t.seq);
  j["all_further_zero"] = t.seq.all_further_zero;
  return j;
}

DiscreteTheory discrete_theory_from_json(const Json& j) {
  if (!j.is_object()) bad("discrete theory: expected an object");
  DiscreteTheory t;
  if (j.contains("charseq")) {
    t.seq = charseq_from_json(j.at("charseq"));
    if (j.contains("all_further_zero")) {
      const Json& m = j.at("all_further_zero");
      if (!m.is_boolean()) bad("discrete theory: mark must be a boolean");
      t.seq.all_further_zero = m.get<bool>();
    }
  } else {
    t.seq = charseq_from_json(j);
  }
  return t;
}

Json supernatural_to_json(const Supernatural& s) {
  Json j = Json::object();
  for (const auto& [p, e] : s.entries())
    j[p.str()] = e == Supernatural::kInf ? Json("inf") : Json(e);
  if (s.default_exp() == Supernatural::kInf) j["*"] = "inf";
  return j;
}

Supernatural supernatural_from_json(const Json& j) {
  if (!j.is_object()) bad("torsion profile: expected an object");
  auto exp_of = [](const Json& v) {
    if (v.is_string() && v.get_ref<const std::string&>() == "inf")
      return Supernatural::kInf;
    int e = small_int_from_json(v, "torsion exponent");
    if (e < 0) bad("torsion exponent: negative");
    return e;
  };
  Supernatural s;
  if (j.contains("*")) s.set_default(exp_of(j.at("*")));
  for (const auto& [key, val] : j.items()) {
    if (key == "*") continue;
    Int p = int_from_json(Json(key), "torsion profile key");
    if (!is_prime(p)) bad("torsion profile: keys must be prime");
    s.set(p, exp_of(val));
  }
  return s;
}

Json dense_theory_to_json(const DenseTheory& t) {
  Json j;
  j["torsion"] = supernatural_to_json(t.torsion);
  j["zakon"] = supernatural_to_json(t.zakon_exps);
  return j;
}

DenseTheory dense_theory_from_json(const Json& j) {
  DenseTheory t;
  t.torsion = supernatural_from_json(field(j, "torsion", "dense theory"));
  t.zakon_exps = supernatural_from_json(field(j, "zakon", "dense theory"));
  return t;
}

Json verdict_to_json(const RegularityVerdict& v) {
  Json j;
  j["holds"] = v.holds ? Json(*v.holds) : Json(nullptr);
  if (v.witness) {
    Json w = Json::array();
    for (const GroupElem& e : *v.witness) w.push_back(elem_to_json(e));
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["certified_by"] = v.certified_by;
  return j;
}

}  // namespace cog

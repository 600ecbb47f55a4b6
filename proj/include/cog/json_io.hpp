#pragma once

// JSON document model for every serializable type: groups, linear
// carriers, elements, formulas, digit tables, torsion profiles, theories,
// and verdicts.  Output is deterministic: insertion-ordered keys, compact
// dumps, rationals as "num/den" strings, and integers as JSON numbers
// only inside the 53-bit safe range (decimal strings beyond).

#include "cog/regularity.hpp"
#include "cog/theory.hpp"
#include "cog/unwound.hpp"

#include "json.hpp"

namespace cog {

using Json = nlohmann::ordered_json;

// Compact single-line dump with trailing newline.
std::string dump_line(const Json& j);

Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const char* what);

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j, const char* what);

// {"kind":"finite","m":12} | {"kind":"linearZ"} |
// {"kind":"qqwound","generators":[["1/36","7/36"]]}; the qqwound span
// always joins (0, 1).
Json group_to_json(const CyclicGroup& G);
CyclicGroup group_from_json(const Json& j);

// {"kind":"zline","z":7} | {"kind":"qqline","generators":[...]}
Json carrier_to_json(const LinearGroupWithZ& T);
LinearGroupWithZ carrier_from_json(const Json& j);

// Finite or wrapped-integer elements are integers; wound elements are
// rational pairs ["a/b","c/d"].
Json elem_to_json(const GroupElem& e);
GroupElem elem_from_json(const Json& j);

// ["winding", element-payload]
Json uw_to_json(const UnwoundElem& u);
UnwoundElem uw_from_json(const Json& j);

// {"p":3,"n":2,"k":5}
Json dformula_to_json(const DFormula& f);
DFormula dformula_from_json(const Json& j);

// {"p":3,"digits":[2,1]}
Json padic_to_json(const PadicDigits& d);

// Bare digit table {"2":[0,1],"3":[2]}; the theory wrapper adds the
// closure mark: {"charseq":{...},"all_further_zero":true}.  Readers accept
// a bare table wherever a theory is expected (mark defaults to false).
Json charseq_to_json(const CharSeq& c);
CharSeq charseq_from_json(const Json& j);
Json discrete_theory_to_json(const DiscreteTheory& t);
DiscreteTheory discrete_theory_from_json(const Json& j);

// {"2":2,"3":"inf"} plus optional default entry "*":"inf"
Json supernatural_to_json(const Supernatural& s);
Supernatural supernatural_from_json(const Json& j);

// {"torsion":{...},"zakon":{...}}
Json dense_theory_to_json(const DenseTheory& t);
DenseTheory dense_theory_from_json(const Json& j);

// {"holds":bool|null,"witness":[...]|null,"certified_by":"..."}
Json verdict_to_json(const RegularityVerdict& v);

}  // namespace cog

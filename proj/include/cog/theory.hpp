#pragma once

// First-order invariants of cyclically ordered abelian groups: the Zakon
// quotient counts [p]A = |A/pA|, the one-variable divisibility formulas
// D_{p^n,k} (in the circle) and DD_{p^n,k} (in the unwound carrier), the
// characteristic digit sequences they carve out, and the equivalence
// deciders built on those invariants.

#include "cog/corder.hpp"
#include "cog/unwound.hpp"

#include <set>
#include <stdexcept>
#include <variant>

namespace cog {

// --- Zakon invariants -----------------------------------------------------

// The value p^exp with exp in N or infinity, kept in exponent form so the
// infinite case stays exact.
struct ZakonValue {
  Int p;
  int exp = 0;  // Supernatural::kInf means infinite
  bool infinite() const { return exp == Supernatural::kInf; }
  Int value() const {
    if (infinite()) throw std::domain_error("infinite Zakon value");
    return int_pow(p, exp);
  }
  bool operator==(const ZakonValue&) const = default;
};

// Symbolic carriers for groups given by theory data rather than elements.
// SubQDesc describes a subgroup of Q containing 1: `nondivisible` lists the
// primes at which it is not divisible; an empty set means all of Q.
struct SubQDesc {
  std::set<Int> nondivisible;
};

// A dense theory is determined by its torsion profile and the family of
// Zakon exponents.
struct DenseTheory {
  Supernatural torsion;
  Supernatural zakon_exps;
  bool operator==(const DenseTheory&) const = default;
};

using ZakonCarrier = std::variant<CyclicGroup, SubQDesc, DenseTheory>;

ZakonValue zakon(const ZakonCarrier& A, const Int& p);

// [p] of the unwound group, computed through the torsion dichotomy: equal
// to [p]G when G has p-torsion, and to p*[p]G otherwise.
ZakonValue zakon_unwound(const CyclicGroup& G, const Int& p);

bool has_p_torsion(const CyclicGroup& G, const Int& p);

// --- divisibility formulas ------------------------------------------------

struct DFormula {
  Int p;   // prime
  int n;   // exponent, n >= 1
  Int k;   // 0 <= k < p^n
  bool operator==(const DFormula&) const = default;
};

void validate_dformula(const DFormula& f);

// D_{p^n,k} in G: some x walks a p^n-step chain around the circle and
// lands on k copies of 1.
bool satisfies_D(const CyclicGroup& G, const DFormula& f);

// DD_{p^n,k} in the linear carrier T: some x has p^n * x = z + k*1.
bool satisfies_DD(const LinearGroupWithZ& T, const DFormula& f);

// --- characteristic sequences ---------------------------------------------

// Digits of the finite circle Z/m at p: base-p digits of (-m) mod p^depth.
PadicDigits char_digit_of_modulus(const Int& m, const Int& p, int depth);

// Pinned digit table of a discrete theory: explicit prefixes for finitely
// many primes, with an optional mark declaring every unlisted digit zero.
struct CharSeq {
  std::map<Int, std::vector<int>> digits;
  bool all_further_zero = false;

  // 1-based depth j; nullopt when the table does not pin the digit.
  std::optional<int> digit(const Int& p, int j) const;
  bool operator==(const CharSeq&) const = default;
};

void validate_charseq(const CharSeq& seq);

struct DiscreteTheory {
  CharSeq seq;
  bool operator==(const DiscreteTheory&) const = default;
};

// Raised when a carrier or table cannot answer below the requested depth;
// carries the deepest reliable depth.
struct StageTooShallow : std::runtime_error {
  int reliable_depth;
  explicit StageTooShallow(int d)
      : std::runtime_error("stage too shallow: digits reliable to depth " +
                           std::to_string(d)),
        reliable_depth(d) {}
};

using DiscreteDesc = std::variant<CyclicGroup, DiscreteTheory>;

// First `depth` digits at p, read off the carrier by solving the DD
// formulas (wound carriers), by modulus arithmetic (finite carriers), or
// from the table.
PadicDigits char_sequence(const DiscreteDesc& G, const Int& p, int depth);

// --- equivalence ----------------------------------------------------------

enum class EquivStatus { Equivalent, EquivalentUpToDepth, Distinguished };

struct DenseDiag {
  Int p;
  enum class Which { Torsion, Zakon } which;
  bool operator==(const DenseDiag&) const = default;
};

struct EquivVerdict {
  EquivStatus status;
  // Distinguished, discrete case: a formula D_{p^j, k} holding in exactly
  // one side, and which side that is (1 or 2).
  std::optional<DFormula> formula;
  std::optional<int> side;
  // Distinguished, dense case: the separating invariant.
  std::optional<DenseDiag> dense;
  // EquivalentUpToDepth: the bounds that were exhausted.
  std::optional<Int> p_bound;
  std::optional<int> depth;
};

// Compares digit tables.  Fully pinned tables (both marked) earn a flat
// Equivalent/Distinguished; otherwise the comparison runs over primes
// p <= p_bound and depths <= depth and both tables must pin that whole
// rectangle (else std::invalid_argument("insufficient specification")).
EquivVerdict equiv_discrete(const DiscreteTheory& t1, const DiscreteTheory& t2,
                            const Int& p_bound, int depth);

EquivVerdict equiv_dense(const DenseTheory& t1, const DenseTheory& t2);

// --- digit-level corollaries ----------------------------------------------

struct DivReport {
  bool p_divisible;
  bool one_p_divisible;
  bool has_p_torsion;
  bool operator==(const DivReport&) const = default;
};

// Reads the three divisibility facts off the first digit at p.
DivReport divisibility_report(const DiscreteTheory& t, const Int& p);

// Torsion subgroup profile as a supernatural number.
Supernatural torsion_profile(const CyclicGroup& G);
// Table route: needs a marked table; exponent at p = leading zeros of the
// digit stream (infinite when the whole stream is zero).
Supernatural torsion_profile(const DiscreteTheory& t);

// Agreement threshold for reading D_{p^n,k} on Z/m syntactically: the
// chain witness exists exactly when m > k*(p^n - 1).
bool d_transfer_applicable(const Int& m, const DFormula& f);

}  // namespace cog

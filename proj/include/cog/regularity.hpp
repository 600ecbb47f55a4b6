#pragma once

// Deciders for n-regularity and c-n-regularity: exhaustive search on
// finite circles, window refutation on the wrapped integers, and the
// structural criterion (linear part regular, quotient divisible with a
// primitive root) for symbolic non-c-archimedean groups.  Also the
// c-n-divisibility test through the unwound carrier.

#include "cog/corder.hpp"

#include <optional>
#include <set>

namespace cog {

// Default cap on tuple enumerations, overridable per call.
inline const Int kDefaultBudget = 10'000'000;

struct RegularityVerdict {
  // Definite answer when present; empty means the window search was
  // exhausted without refutation (a semi-decision never answers "true").
  std::optional<bool> holds;
  // Falsifying tuple (x_1, ..., x_n), present whenever holds == false and
  // the decider is enumerative; replayable through the definition.
  std::optional<std::vector<GroupElem>> witness;
  std::string certified_by;  // "brute-force", "window", or "structural"
};

// Decides the regularity obligation for one tuple: is there x with
// (nx = x_1 or nx = x_n or R(x_1, nx, x_n)) and chain_R([0, x, 2x, ...,
// (n-1)x, x_n])?  Exhaustive on finite carriers; on the wrapped integers
// the scan range is large enough to be exact.
bool division_witness_exists(const CyclicGroup& G, int n,
                             const std::vector<GroupElem>& tuple);

// c-n-regularity by exhaustive enumeration of tuples with
// chain_R([0, x_1, ..., x_n]).  Finite carriers only; tuple spaces larger
// than the budget throw std::runtime_error("budget exceeded").
RegularityVerdict is_c_n_regular(const CyclicGroup& G, int n,
                                 const Int& budget = kDefaultBudget);

// n-regularity: the same search over tuples additionally satisfying
// chain_R([0, x_1, ..., x_n, -x_n]).
RegularityVerdict is_n_regular(const CyclicGroup& G, int n,
                               const Int& budget = kDefaultBudget);

// Searches [-bound, bound]^n on the wrapped integers (or the trivial
// group) for a tuple refuting c-n-regularity.  Returns holds=false with
// the lexicographically least witness, or an empty verdict when the
// window holds no counterexample; never claims "true".
RegularityVerdict is_c_n_regular_window(const CyclicGroup& G, int n,
                                        const Int& bound,
                                        const Int& budget = kDefaultBudget);

// Linear part of a symbolic non-c-archimedean group: trivial, the
// integers, or a dense regular group carrying its family of Zakon
// invariant exponents (recorded for serialization; every listed kind is
// n-regular for all n).
struct LinearDesc {
  enum class Kind { Trivial, Z, DenseRegular };
  Kind kind = Kind::Trivial;
  std::map<Int, int> zakon;  // DenseRegular: prime -> exponent of [p]G

  static LinearDesc trivial();
  static LinearDesc z();
  static LinearDesc dense_regular(std::map<Int, int> zakon);
};

// Quotient-by-linear-part descriptor: where it is divisible and what
// torsion it carries.
struct QuotientDesc {
  bool divisible_all = false;    // divisible at every prime
  std::set<Int> divisible_at;    // otherwise: exactly these primes
  Supernatural torsion;
};

// The structural criterion for c-n-regularity of the symbolic group with
// linear part l and quotient K: l n-regular, K n-divisible, and K
// containing a primitive n-th root of unity.
RegularityVerdict classify_structural(const LinearDesc& l,
                                      const QuotientDesc& K, int n);

// c-n-divisibility, decided on the unwound carrier (n-divisibility of the
// unwound group) and cross-checked against the equivalent reading
// (n-divisible group plus a primitive n-th root).  Finitely generated
// stages answer for themselves; a union of ever-deeper stages can be
// divisible even though each stage is not.
bool is_c_n_divisible(const CyclicGroup& G, int n);

}  // namespace cog

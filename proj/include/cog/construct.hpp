#pragma once

// Building discrete wound groups from digit prescriptions, and the
// 2-cocycle presentation of those extensions.  The builder solves the
// digit congruences by chinese remainder over the first n primes and
// returns the stage carrier; the cocycle side realizes the same group as
// Q x Z twisted by a symmetric carry cocycle.

#include "cog/corder.hpp"
#include "cog/theory.hpp"

#include <functional>

namespace cog {

// Stage ingredients: the first n primes, the combined residue k, the
// denominator D = (p_1 ... p_n)^n, and the unwound lattice
// W = <(1/D, k/D), (0,1)>.
struct StageData {
  std::vector<Int> primes;
  Int k;
  Int D;
  QQLattice W;
};

// Reads digits phi_{p_i}(j) for i,j <= n from the table (missing entries
// throw std::invalid_argument("insufficient digits")), combines them by
// chinese remainder and assembles the stage lattice.
StageData build_stage(const CharSeq& prefix, int n);

// The stage circle itself: wound round of the stage lattice.
CyclicGroup build_discrete_group(const CharSeq& prefix, int n);

// Finite circles Z/m realizing the constraints D_{p^n,k} syntactically:
// m = -k (mod p^n) for every constraint, thresholded so the chain reading
// agrees with the digit reading.  Returns the `count` smallest, ascending.
std::vector<Int> witness_moduli(const std::vector<DFormula>& constraints,
                                int count);

// --- cocycles -------------------------------------------------------------

// A finitely generated subgroup of Q (cyclic: gen * Z), or all of Q.
struct QDomain {
  Rat gen;            // 0 means the trivial subgroup
  bool whole = false; // true: all of Q (gen ignored)

  static QDomain cyclic(const Rat& g);
  static QDomain all();
  bool contains(const Rat& q) const;
  bool operator==(const QDomain&) const = default;
};

// Symmetric integer-valued 2-cocycle on a rational domain.
struct Cocycle {
  QDomain domain;
  std::function<Int(const Rat&, const Rat&)> eval;
};

// Twisted addition on domain x Z.
std::pair<Rat, Int> theta_add(const Cocycle& th, const std::pair<Rat, Int>& x,
                              const std::pair<Rat, Int>& y);

struct CocycleReport {
  bool ok = true;
  std::string law;           // "normalization", "symmetry", "associativity"
  std::vector<Rat> witness;  // arguments violating the law
};

// Checks theta(a,0) = 0, symmetry, and the cocycle identity on all pairs
// and triples drawn from the sample closed under one round of addition.
CocycleReport verify_cocycle(const Cocycle& th, const std::vector<Rat>& sample);

// Extends theta from A to A + Z a' where a' has prime index p over A
// (p * a' must land in A; a' already in A throws
// std::domain_error("nothing to extend")).  b0 prescribes the second
// coordinate of p * (a', 0) in the extended presentation.
Cocycle extend_cocycle_prime(const Cocycle& th, const Rat& a_prime,
                             const Int& p, const Int& b0);

// The carry cocycle of a digit prescription: theta on (1/D)Z whose twisted
// sum presents the stage group, via the section r(q) = (q, frac(q*k)).
Cocycle theta_from_digits(const CharSeq& prefix, const Int& D);

}  // namespace cog

#pragma once

// Cyclically ordered abelian groups, concretely.  Three carriers cover
// everything the rest of the library needs:
//
//   Finite   Z/m with the residue order read around the circle
//   LinearZ  Z with the cyclic order induced by its linear order
//   QQWound  a finitely generated subgroup W of Q x Q (lex order, with
//            z = (1,0) and 1 = (0,1) inside) wound round by the winding
//            element z; elements are canonical coset representatives
//
// The ternary relation R(a,b,c) reads "walking the circle from a you meet
// b before c".

#include "cog/numkit.hpp"

#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace cog {

// A point of Q x Q, compared lexicographically (first coordinate wins).
struct QQ {
  Rat a;  // the coordinate that becomes the angle after winding
  Rat b;  // the linear coordinate
  bool operator==(const QQ&) const = default;
};

QQ operator+(const QQ& x, const QQ& y);
QQ operator-(const QQ& x, const QQ& y);
QQ operator-(const QQ& x);
QQ operator*(const Int& n, const QQ& x);
int qq_cmp(const QQ& x, const QQ& y);  // -1 / 0 / +1, lexicographic
bool qq_lt(const QQ& x, const QQ& y);

// Finitely generated subgroup of Q x Q kept as a scaled integer lattice in
// Hermite form: rows (a11, a12) and (0, a22) over a common denominator.
// a11, a22 >= 0, and 0 <= a12 < a22 when both rows are present.
class QQLattice {
 public:
  QQLattice() = default;  // the zero subgroup

  static QQLattice span(const std::vector<QQ>& gens);

  bool contains(const QQ& v) const;
  // v/n inside the lattice?  (n nonzero; computes membership of v/n)
  bool divides(const Int& n, const QQ& v) const;

  int rank() const;
  // Rational basis rows, at most two, Hermite-shaped.
  std::vector<QQ> basis() const;

  // Generator (0, c) with smallest c > 0 of the intersection with the
  // second axis, if the intersection is nontrivial.
  std::optional<Rat> second_axis_generator() const;

  // Largest e with (1/e, 0) in the lattice, given (1,0) is a member;
  // equivalently the order of the torsion part of the wound-round group.
  Int winding_content() const;

  // Index of a full-rank sublattice inside this full-rank lattice.
  Int index_of(const QQLattice& sub) const;

  // The sublattice n*L + Z*w (used for counting L / (p L + Z z)).
  QQLattice scaled_plus(const Int& n, const QQ& w) const;

  bool operator==(const QQLattice&) const = default;

 private:
  // scaled rows: (a11_, a12_) and (0, a22_) over denominator den_
  Int den_ = 1;
  Int a11_ = 0, a12_ = 0, a22_ = 0;
  void normalize();
};

enum class GroupKind { Finite, LinearZ, QQWound };

// Element payload: residues / integers are Int, wound rationals are QQ.
using GroupElem = std::variant<Int, QQ>;

const Int& as_int(const GroupElem& e);
const QQ& as_qq(const GroupElem& e);

class CyclicGroup {
 public:
  static CyclicGroup finite(const Int& m);  // m >= 1
  static CyclicGroup linear_z();
  // Joins (0,1) to the listed generators, validates that z = (1,0) lies in
  // the span and that (0,1) is the least positive element (discreteness).
  static CyclicGroup qq_wound(const std::vector<QQ>& gens);
  static CyclicGroup qq_wound(const QQLattice& lattice);

  GroupKind kind() const { return kind_; }
  const Int& modulus() const;         // Finite only
  const QQLattice& lattice() const;   // QQWound only: the unwound carrier
  std::vector<QQ> generators() const; // QQWound: the stored basis

  GroupElem zero() const;
  GroupElem one() const;  // the distinguished 1: residue 1, integer 1, class of (0,1)

  bool is_member(const GroupElem& x) const;
  // Canonical representative; throws std::domain_error("not a member")
  // for payloads outside the carrier.
  GroupElem canonical(const GroupElem& x) const;

  GroupElem add(const GroupElem& x, const GroupElem& y) const;
  GroupElem neg(const GroupElem& x) const;
  GroupElem sub(const GroupElem& x, const GroupElem& y) const;
  GroupElem mul(const Int& n, const GroupElem& x) const;
  bool eq(const GroupElem& x, const GroupElem& y) const;

  // The cyclic order relation.
  bool R(const GroupElem& a, const GroupElem& b, const GroupElem& c) const;

  // Angle of an element in [0, 1): position of the class against one full
  // turn of the winding element.
  Rat angle(const GroupElem& x) const;

  std::optional<Int> size() const;  // m for Finite, nullopt otherwise
  std::vector<GroupElem> elements() const;  // Finite only

 private:
  CyclicGroup() = default;
  GroupKind kind_ = GroupKind::Finite;
  Int m_ = 1;
  QQLattice lat_;
};

// Chain relation: all entries distinct and R(x_i, x_{i+1}, x_last) for
// every i up to the second-to-last link.  Needs at least 3 entries.
bool chain_R(const CyclicGroup& G, const std::vector<GroupElem>& xs);

struct AxiomCheck {
  bool pass = true;
  std::vector<GroupElem> witness;  // first violating tuple, if any
};

struct AxiomReport {
  AxiomCheck strict;      // R(a,b,c) -> a,b,c pairwise distinct
  AxiomCheck cyclic;      // R(a,b,c) -> R(b,c,a)
  AxiomCheck linear;      // R(c,.,.) linearly orders the rest
  AxiomCheck compatible;  // R(a,b,c) -> R(a+u, b+u, c+u)
  bool all_pass() const {
    return strict.pass && cyclic.pass && linear.pass && compatible.pass;
  }
};

using TernaryRel =
    std::function<bool(const GroupElem&, const GroupElem&, const GroupElem&)>;

// Exhaustive check over a finite carrier; throws
// std::domain_error("axiom check requires finite carrier") otherwise.
AxiomReport check_axioms(const CyclicGroup& G);

// The same four scans over an explicit element list and an arbitrary
// ternary relation.  This is what mutation tests feed with corrupted
// relations, and what infinite carriers run on samples.
AxiomReport check_axioms_on(const CyclicGroup& G,
                            const std::vector<GroupElem>& elems,
                            const TernaryRel& rel);

// Deterministic sample of carrier elements for spot-checking infinite
// carriers: small multiples of the generators shifted by small multiples
// of one, canonicalized and deduplicated.
std::vector<GroupElem> sample_elements(const CyclicGroup& G, int count);

// The maximal subgroup on which the cyclic order restricts to a linear
// order (the kernel of the winding).
enum class LinearPartKind { Trivial, WholeGroup, IntegerMultiplesOfOne };
struct LinearPartDesc {
  LinearPartKind kind;
  bool operator==(const LinearPartDesc&) const = default;
};
LinearPartDesc linear_part(const CyclicGroup& G);

}  // namespace cog

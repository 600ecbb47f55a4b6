#pragma once

// Unwinding a cyclically ordered group G into the linearly ordered group
// Z x G (winding count, element), and winding a linear group with a
// distinguished cofinal z back into the quotient circle.  The two
// constructions invert each other and everything here is exact.

#include "cog/corder.hpp"

namespace cog {

struct UnwoundElem {
  Int winding;
  GroupElem g;
};

// A linearly ordered abelian group with a distinguished positive cofinal
// element z.  Two shapes cover the library: (Z, z = m) and a finitely
// generated subgroup of lexicographic Q x Q containing z = (1,0) and
// (0,1), discrete with least positive element (0,1).
class LinearGroupWithZ {
 public:
  enum class Kind { ZLine, QQLine };

  static LinearGroupWithZ z_line(const Int& z);  // z >= 1, else "z not cofinal"
  static LinearGroupWithZ qq_line(const QQLattice& W);
  static LinearGroupWithZ qq_line(const std::vector<QQ>& gens);  // (0,1) joined

  Kind kind() const { return kind_; }
  const Int& z_int() const;           // ZLine
  const QQLattice& lattice() const;   // QQLine

  GroupElem zero() const;
  GroupElem one() const;
  GroupElem z() const;

  bool is_member(const GroupElem& x) const;
  GroupElem add(const GroupElem& x, const GroupElem& y) const;
  GroupElem neg(const GroupElem& x) const;
  GroupElem sub(const GroupElem& x, const GroupElem& y) const;
  GroupElem mul(const Int& n, const GroupElem& x) const;
  bool eq(const GroupElem& x, const GroupElem& y) const;
  bool lt(const GroupElem& x, const GroupElem& y) const;

  // Solves n*x = target exactly; nullopt when no solution in the carrier.
  std::optional<GroupElem> divide_exact(const Int& n, const GroupElem& target) const;

 private:
  LinearGroupWithZ() = default;
  Kind kind_ = Kind::ZLine;
  Int z_ = 1;
  QQLattice lat_;
};

// Addition on the unwound Z x G.  The winding count increases exactly when
// the sum of the two angular positions passes a full turn.
UnwoundElem uw_add(const CyclicGroup& G, const UnwoundElem& x, const UnwoundElem& y);
UnwoundElem uw_neg(const CyclicGroup& G, const UnwoundElem& x);
bool uw_eq(const CyclicGroup& G, const UnwoundElem& x, const UnwoundElem& y);
// Lexicographic-by-position order on the unwound group.
bool uw_lt(const CyclicGroup& G, const UnwoundElem& x, const UnwoundElem& y);

// The unwinding of G, reported both generically (operations on Z x G via
// uw_add/uw_lt) and, when G is finite or wound, as a compact linear
// carrier isomorphic to it.
struct Unwound {
  CyclicGroup base;
  std::optional<LinearGroupWithZ> compact;
};

Unwound uw_of(const CyclicGroup& G);

// Quotient of T by the infinite cyclic subgroup generated by z, cyclically
// ordered by the order of coset representatives in [0, z).
CyclicGroup wound_round(const LinearGroupWithZ& T);

// Winding number and value of a sum taken inside G: the pair (k, g) with
// sum of lifts = k*z + lift(g).  Equals the left fold of uw_add over the
// lifts (0, g_j).
std::pair<Int, GroupElem> winding_sum(const CyclicGroup& G,
                                      const std::vector<GroupElem>& gs);

}  // namespace cog

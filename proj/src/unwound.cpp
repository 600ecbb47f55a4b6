#include "cog/unwound.hpp"

#include <stdexcept>

namespace cog {

LinearGroupWithZ LinearGroupWithZ::z_line(const Int& z) {
  if (z < 1) throw std::domain_error("z not cofinal");
  LinearGroupWithZ T;
  T.kind_ = Kind::ZLine;
  T.z_ = z;
  return T;
}

LinearGroupWithZ LinearGroupWithZ::qq_line(const QQLattice& W) {
  if (!W.contains({Rat(1), Rat(0)}))
    throw std::domain_error("z=(1,0) must lie in the generated carrier");
  auto ls = W.second_axis_generator();
  if (!ls || *ls != 1)
    throw std::domain_error("(0,1) must be the least positive element of the linear part");
  LinearGroupWithZ T;
  T.kind_ = Kind::QQLine;
  T.lat_ = W;
  return T;
}

LinearGroupWithZ LinearGroupWithZ::qq_line(const std::vector<QQ>& gens) {
  std::vector<QQ> all = gens;
  all.push_back({Rat(0), Rat(1)});
  return qq_line(QQLattice::span(all));
}

const Int& LinearGroupWithZ::z_int() const {
  if (kind_ != Kind::ZLine) throw std::domain_error("not an integer carrier");
  return z_;
}

const QQLattice& LinearGroupWithZ::lattice() const {
  if (kind_ != Kind::QQLine) throw std::domain_error("not a rational carrier");
  return lat_;
}

GroupElem LinearGroupWithZ::zero() const {
  if (kind_ == Kind::ZLine) return Int(0);
  return QQ{Rat(0), Rat(0)};
}

GroupElem LinearGroupWithZ::one() const {
  if (kind_ == Kind::ZLine) return Int(1);
  return QQ{Rat(0), Rat(1)};
}

GroupElem LinearGroupWithZ::z() const {
  if (kind_ == Kind::ZLine) return z_;
  return QQ{Rat(1), Rat(0)};
}

bool LinearGroupWithZ::is_member(const GroupElem& x) const {
  if (kind_ == Kind::ZLine) return std::holds_alternative<Int>(x);
  return std::holds_alternative<QQ>(x) && lat_.contains(std::get<QQ>(x));
}

namespace {
void require_member(const LinearGroupWithZ& T, const GroupElem& x) {
  if (!T.is_member(x)) throw std::domain_error("not a member");
}
}  // namespace

GroupElem LinearGroupWithZ::add(const GroupElem& x, const GroupElem& y) const {
  require_member(*this, x);
  require_member(*this, y);
  if (kind_ == Kind::ZLine) return Int(as_int(x) + as_int(y));
  return as_qq(x) + as_qq(y);
}

GroupElem LinearGroupWithZ::neg(const GroupElem& x) const {
  require_member(*this, x);
  if (kind_ == Kind::ZLine) return Int(-as_int(x));
  return -as_qq(x);
}

GroupElem LinearGroupWithZ::sub(const GroupElem& x, const GroupElem& y) const {
  return add(x, neg(y));
}

GroupElem LinearGroupWithZ::mul(const Int& n, const GroupElem& x) const {
  require_member(*this, x);
  if (kind_ == Kind::ZLine) return Int(n * as_int(x));
  return n * as_qq(x);
}

bool LinearGroupWithZ::eq(const GroupElem& x, const GroupElem& y) const {
  require_member(*this, x);
  require_member(*this, y);
  if (kind_ == Kind::ZLine) return as_int(x) == as_int(y);
  return as_qq(x) == as_qq(y);
}

bool LinearGroupWithZ::lt(const GroupElem& x, const GroupElem& y) const {
  require_member(*this, x);
  require_member(*this, y);
  if (kind_ == Kind::ZLine) return as_int(x) < as_int(y);
  return qq_lt(as_qq(x), as_qq(y));
}

std::optional<GroupElem> LinearGroupWithZ::divide_exact(
    const Int& n, const GroupElem& target) const {
  if (n == 0) throw std::domain_error("division by zero");
  require_member(*this, target);
  if (kind_ == Kind::ZLine) {
    const Int& t = as_int(target);
    if (t % n != 0) return std::nullopt;
    return GroupElem(Int(t / n));
  }
  QQ cand{as_qq(target).a / Rat(n), as_qq(target).b / Rat(n)};
  if (!lat_.contains(cand)) return std::nullopt;
  return GroupElem(cand);
}

UnwoundElem uw_add(const CyclicGroup& G, const UnwoundElem& x,
                   const UnwoundElem& y) {
  GroupElem a = G.canonical(x.g), b = G.canonical(y.g);
  Int w = x.winding + y.winding;
  GroupElem zero = G.zero();
  if (G.eq(a, zero)) return {w, b};
  if (G.eq(b, zero)) return {w, a};
  GroupElem s = G.add(a, b);
  if (G.eq(s, zero)) return {w + 1, zero};
  // walking from 0 through a: reaching a+b without passing 0 means no
  // extra turn, otherwise the sum wrapped once
  if (G.R(zero, a, s)) return {w, s};
  return {w + 1, s};
}

UnwoundElem uw_neg(const CyclicGroup& G, const UnwoundElem& x) {
  GroupElem c = G.canonical(x.g);
  if (G.eq(c, G.zero())) return {-x.winding, c};
  return {-x.winding - 1, G.neg(c)};
}

bool uw_eq(const CyclicGroup& G, const UnwoundElem& x, const UnwoundElem& y) {
  return x.winding == y.winding && G.eq(x.g, y.g);
}

bool uw_lt(const CyclicGroup& G, const UnwoundElem& x, const UnwoundElem& y) {
  if (x.winding != y.winding) return x.winding < y.winding;
  GroupElem a = G.canonical(x.g), b = G.canonical(y.g);
  if (G.eq(a, b)) return false;
  if (G.eq(a, G.zero())) return true;   // 0 starts every block
  if (G.eq(b, G.zero())) return false;
  return G.R(G.zero(), a, b);
}

Unwound uw_of(const CyclicGroup& G) {
  Unwound u{G, std::nullopt};
  switch (G.kind()) {
    case GroupKind::Finite:
      u.compact = LinearGroupWithZ::z_line(G.modulus());
      break;
    case GroupKind::QQWound:
      u.compact = LinearGroupWithZ::qq_line(G.lattice());
      break;
    case GroupKind::LinearZ:
      break;  // only the generic form; no compact rational shape is stored
  }
  return u;
}

CyclicGroup wound_round(const LinearGroupWithZ& T) {
  if (T.kind() == LinearGroupWithZ::Kind::ZLine)
    return CyclicGroup::finite(T.z_int());
  return CyclicGroup::qq_wound(T.lattice());
}

std::pair<Int, GroupElem> winding_sum(const CyclicGroup& G,
                                      const std::vector<GroupElem>& gs) {
  switch (G.kind()) {
    case GroupKind::Finite: {
      Int s = 0;
      for (const GroupElem& g : gs) s += as_int(G.canonical(g));
      return {floor_div(s, G.modulus()), GroupElem(mod_floor(s, G.modulus()))};
    }
    case GroupKind::LinearZ: {
      // through the order isomorphism (n, c) -> (n + [c < 0], c) with
      // lexicographic Z x Z the winding count is a signed count of
      // negative terms
      Int s = 0, k = 0;
      for (const GroupElem& g : gs) {
        const Int& v = as_int(g);
        s += v;
        if (v < 0) ++k;
      }
      if (s < 0) --k;
      return {k, GroupElem(s)};
    }
    case GroupKind::QQWound: {
      QQ total{Rat(0), Rat(0)};
      for (const GroupElem& g : gs) total = total + as_qq(G.canonical(g));
      QQ rep = as_qq(G.canonical(GroupElem(total)));
      Rat k = total.a - rep.a;
      if (rat_den(k) != 1) throw std::logic_error("winding count not integral");
      return {rat_num(k), GroupElem(rep)};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace cog

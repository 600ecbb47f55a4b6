#include "cog/corder.hpp"

#include <algorithm>
#include <stdexcept>

namespace cog {

QQ operator+(const QQ& x, const QQ& y) { return {x.a + y.a, x.b + y.b}; }
QQ operator-(const QQ& x, const QQ& y) { return {x.a - y.a, x.b - y.b}; }
QQ operator-(const QQ& x) { return {-x.a, -x.b}; }
QQ operator*(const Int& n, const QQ& x) {
  return {Rat(n) * x.a, Rat(n) * x.b};
}

int qq_cmp(const QQ& x, const QQ& y) {
  if (x.a != y.a) return x.a < y.a ? -1 : 1;
  if (x.b != y.b) return x.b < y.b ? -1 : 1;
  return 0;
}

bool qq_lt(const QQ& x, const QQ& y) { return qq_cmp(x, y) < 0; }

namespace {

struct Row {
  Int x, y;
};

// Extended gcd with g >= 0.
void egcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
  if (b == 0) {
    g = a < 0 ? Int(-a) : a;
    u = a < 0 ? Int(-1) : Int(1);
    if (a == 0) u = 0;
    v = 0;
    return;
  }
  Int g1, u1, v1;
  egcd(b, a % b, g1, u1, v1);
  g = g1;
  u = v1;
  v = u1 - (a / b) * v1;
}

}  // namespace

void QQLattice::normalize() {
  using boost::multiprecision::gcd;
  if (a11_ == 0 && a22_ == 0) {
    den_ = 1;
    a12_ = 0;
    return;
  }
  Int g = den_;
  g = gcd(g, a11_);
  g = gcd(g, a12_);
  g = gcd(g, a22_);
  if (g > 1) {
    den_ /= g;
    a11_ /= g;
    a12_ /= g;
    a22_ /= g;
  }
}

QQLattice QQLattice::span(const std::vector<QQ>& gens) {
  using boost::multiprecision::lcm;
  Int den = 1;
  for (const QQ& g : gens) {
    den = lcm(den, rat_den(g.a));
    den = lcm(den, rat_den(g.b));
  }
  QQLattice L;
  L.den_ = den;
  // fold the scaled generator rows into Hermite shape
  Row r1{0, 0};  // leading row, r1.x >= 0
  Int y2 = 0;    // second-axis row (0, y2), y2 >= 0
  auto add_axis = [&](const Int& y) {
    y2 = boost::multiprecision::gcd(y2, y);
  };
  for (const QQ& g : gens) {
    Row v{rat_num(g.a * den), rat_num(g.b * den)};
    if (v.x == 0) {
      add_axis(v.y < 0 ? Int(-v.y) : v.y);
      continue;
    }
    if (r1.x == 0) {
      if (v.x < 0) {
        v.x = -v.x;
        v.y = -v.y;
      }
      r1 = v;
      continue;
    }
    Int g0, u, w;
    egcd(r1.x, v.x, g0, u, w);
    Row combo{g0, u * r1.y + w * v.y};
    // the complementary combination has first coordinate 0
    Int axis_y = (r1.x / g0) * v.y - (v.x / g0) * r1.y;
    add_axis(axis_y < 0 ? Int(-axis_y) : axis_y);
    r1 = combo;
  }
  L.a11_ = r1.x;
  L.a12_ = r1.y;
  L.a22_ = y2;
  if (L.a11_ != 0 && L.a22_ != 0) L.a12_ = mod_floor(L.a12_, L.a22_);
  L.normalize();
  return L;
}

bool QQLattice::contains(const QQ& v) const {
  Rat sa = v.a * den_, sb = v.b * den_;
  if (rat_den(sa) != 1 || rat_den(sb) != 1) return false;
  Int x = rat_num(sa), y = rat_num(sb);
  if (a11_ == 0) {
    if (x != 0) return false;
    if (a22_ == 0) return y == 0;
    return y % a22_ == 0;
  }
  if (x % a11_ != 0) return false;
  Int alpha = x / a11_;
  Int rem = y - alpha * a12_;
  if (a22_ == 0) return rem == 0;
  return rem % a22_ == 0;
}

bool QQLattice::divides(const Int& n, const QQ& v) const {
  if (n == 0) throw std::domain_error("division by zero");
  Rat q(n);
  return contains({v.a / q, v.b / q});
}

int QQLattice::rank() const { return (a11_ != 0 ? 1 : 0) + (a22_ != 0 ? 1 : 0); }

std::vector<QQ> QQLattice::basis() const {
  std::vector<QQ> out;
  if (a11_ != 0) out.push_back({Rat(a11_, den_), Rat(a12_, den_)});
  if (a22_ != 0) out.push_back({Rat(0), Rat(a22_, den_)});
  return out;
}

std::optional<Rat> QQLattice::second_axis_generator() const {
  if (a22_ == 0) return std::nullopt;
  return Rat(a22_, den_);
}

Int QQLattice::winding_content() const {
  if (!contains({Rat(1), Rat(0)}))
    throw std::logic_error("winding_content needs (1,0) in the lattice");
  // minimal t > 0 with (t, 0) in the scaled lattice
  Int alpha0;
  if (a22_ == 0) {
    // rank-1 case: (1,0) inside forces a12 = 0
    alpha0 = 1;
  } else {
    alpha0 = a22_ / boost::multiprecision::gcd(a12_, a22_);
  }
  Int t0 = alpha0 * a11_;
  if (t0 == 0 || den_ % t0 != 0)
    throw std::logic_error("winding content is not integral");
  return den_ / t0;
}

Int QQLattice::index_of(const QQLattice& sub) const {
  if (rank() != 2 || sub.rank() != 2)
    throw std::domain_error("index needs full-rank lattices");
  Rat det_this = Rat(a11_ * a22_, den_ * den_);
  Rat det_sub = Rat(sub.a11_ * sub.a22_, sub.den_ * sub.den_);
  Rat idx = det_sub / det_this;
  if (rat_den(idx) != 1 || idx <= 0)
    throw std::domain_error("not a sublattice of full rank");
  return rat_num(idx);
}

QQLattice QQLattice::scaled_plus(const Int& n, const QQ& w) const {
  std::vector<QQ> gens;
  for (const QQ& b : basis()) gens.push_back(n * b);
  gens.push_back(w);
  return span(gens);
}

const Int& as_int(const GroupElem& e) {
  const Int* p = std::get_if<Int>(&e);
  if (!p) throw std::domain_error("not a member");
  return *p;
}

const QQ& as_qq(const GroupElem& e) {
  const QQ* p = std::get_if<QQ>(&e);
  if (!p) throw std::domain_error("not a member");
  return *p;
}

CyclicGroup CyclicGroup::finite(const Int& m) {
  if (m < 1) throw std::domain_error("modulus must be >= 1");
  CyclicGroup G;
  G.kind_ = GroupKind::Finite;
  G.m_ = m;
  return G;
}

CyclicGroup CyclicGroup::linear_z() {
  CyclicGroup G;
  G.kind_ = GroupKind::LinearZ;
  return G;
}

CyclicGroup CyclicGroup::qq_wound(const std::vector<QQ>& gens) {
  std::vector<QQ> all = gens;
  all.push_back({Rat(0), Rat(1)});
  return qq_wound(QQLattice::span(all));
}

CyclicGroup CyclicGroup::qq_wound(const QQLattice& lattice) {
  if (!lattice.contains({Rat(1), Rat(0)}))
    throw std::domain_error("z=(1,0) must lie in the generated carrier");
  auto ls = lattice.second_axis_generator();
  if (!ls || *ls != 1)
    throw std::domain_error("(0,1) must be the least positive element of the linear part");
  CyclicGroup G;
  G.kind_ = GroupKind::QQWound;
  G.lat_ = lattice;
  return G;
}

const Int& CyclicGroup::modulus() const {
  if (kind_ != GroupKind::Finite)
    throw std::domain_error("modulus only applies to finite carriers");
  return m_;
}

const QQLattice& CyclicGroup::lattice() const {
  if (kind_ != GroupKind::QQWound)
    throw std::domain_error("lattice only applies to wound carriers");
  return lat_;
}

std::vector<QQ> CyclicGroup::generators() const { return lattice().basis(); }

GroupElem CyclicGroup::zero() const {
  if (kind_ == GroupKind::QQWound) return QQ{Rat(0), Rat(0)};
  return Int(0);
}

GroupElem CyclicGroup::one() const {
  if (kind_ == GroupKind::QQWound) return QQ{Rat(0), Rat(1)};
  if (kind_ == GroupKind::Finite) return Int(mod_floor(1, m_));
  return Int(1);
}

bool CyclicGroup::is_member(const GroupElem& x) const {
  if (kind_ == GroupKind::QQWound)
    return std::holds_alternative<QQ>(x) && lat_.contains(std::get<QQ>(x));
  return std::holds_alternative<Int>(x);
}

namespace {

// Class representative of a lattice member modulo whole turns of z = (1,0):
// subtract whole turns; classes just below a turn keep the representative
// (1, b) with b < 0 so the order reads correctly.  Membership must already
// be validated; sums and differences of members need no re-check.
QQ wound_reduce(const QQ& v) {
  QQ c{rat_frac(v.a), v.b};
  if (c.a == 0 && c.b < 0) c.a = 1;
  return c;
}

}  // namespace

GroupElem CyclicGroup::canonical(const GroupElem& x) const {
  if (!is_member(x)) throw std::domain_error("not a member");
  switch (kind_) {
    case GroupKind::Finite:
      return Int(mod_floor(std::get<Int>(x), m_));
    case GroupKind::LinearZ:
      return x;
    case GroupKind::QQWound:
      return wound_reduce(std::get<QQ>(x));
  }
  throw std::logic_error("unreachable");
}

GroupElem CyclicGroup::add(const GroupElem& x, const GroupElem& y) const {
  if (kind_ == GroupKind::QQWound)
    return GroupElem(wound_reduce(as_qq(canonical(x)) + as_qq(canonical(y))));
  Int s = as_int(x) + as_int(y);
  if (kind_ == GroupKind::Finite) s = mod_floor(s, m_);
  return s;
}

GroupElem CyclicGroup::neg(const GroupElem& x) const {
  if (kind_ == GroupKind::QQWound)
    return GroupElem(wound_reduce(-as_qq(canonical(x))));
  Int v = -as_int(x);
  if (kind_ == GroupKind::Finite) v = mod_floor(v, m_);
  return v;
}

GroupElem CyclicGroup::sub(const GroupElem& x, const GroupElem& y) const {
  return add(x, neg(y));
}

GroupElem CyclicGroup::mul(const Int& n, const GroupElem& x) const {
  if (kind_ == GroupKind::QQWound)
    return GroupElem(wound_reduce(n * as_qq(canonical(x))));
  Int v = n * as_int(x);
  if (kind_ == GroupKind::Finite) v = mod_floor(v, m_);
  return v;
}

bool CyclicGroup::eq(const GroupElem& x, const GroupElem& y) const {
  GroupElem cx = canonical(x), cy = canonical(y);
  if (kind_ == GroupKind::QQWound) return std::get<QQ>(cx) == std::get<QQ>(cy);
  return std::get<Int>(cx) == std::get<Int>(cy);
}

bool CyclicGroup::R(const GroupElem& a, const GroupElem& b,
                    const GroupElem& c) const {
  switch (kind_) {
    case GroupKind::Finite: {
      Int ra = mod_floor(as_int(a), m_);
      Int rb = mod_floor(as_int(b) - ra, m_);
      Int rc = mod_floor(as_int(c) - ra, m_);
      return 0 < rb && rb < rc;
    }
    case GroupKind::LinearZ: {
      const Int &x = as_int(a), &y = as_int(b), &z = as_int(c);
      return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
    }
    case GroupKind::QQWound: {
      // translate a to 0; canonical representatives of [0, z) are ordered
      // lexicographically
      QQ va = as_qq(canonical(a));
      QQ rb = wound_reduce(as_qq(canonical(b)) - va);
      QQ rc = wound_reduce(as_qq(canonical(c)) - va);
      QQ z0{Rat(0), Rat(0)};
      return qq_lt(z0, rb) && qq_lt(rb, rc);
    }
  }
  throw std::logic_error("unreachable");
}

Rat CyclicGroup::angle(const GroupElem& x) const {
  switch (kind_) {
    case GroupKind::Finite:
      return Rat(mod_floor(as_int(x), m_), m_);
    case GroupKind::LinearZ:
      throw std::domain_error("angle requires a wound carrier");
    case GroupKind::QQWound: {
      QQ c = as_qq(canonical(x));
      return c.a == 1 ? Rat(0) : c.a;  // reduce the top representative into [0,1)
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<Int> CyclicGroup::size() const {
  if (kind_ == GroupKind::Finite) return m_;
  return std::nullopt;
}

std::vector<GroupElem> CyclicGroup::elements() const {
  if (kind_ != GroupKind::Finite)
    throw std::domain_error("element enumeration requires finite carrier");
  std::vector<GroupElem> out;
  for (Int i = 0; i < m_; ++i) out.push_back(i);
  return out;
}

bool chain_R(const CyclicGroup& G, const std::vector<GroupElem>& xs) {
  size_t n = xs.size();
  if (n < 3) throw std::invalid_argument("chain needs at least 3 points");
  std::vector<GroupElem> c;
  c.reserve(n);
  for (const GroupElem& x : xs) c.push_back(G.canonical(x));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (G.eq(c[i], c[j])) return false;
  for (size_t i = 0; i + 2 < n; ++i)
    if (!G.R(c[i], c[i + 1], c[n - 1])) return false;
  return true;
}

namespace {

using ElemList = std::vector<GroupElem>;

AxiomCheck scan_strict(const CyclicGroup& G, const ElemList& es,
                       const TernaryRel& rel) {
  for (const auto& a : es)
    for (const auto& b : es)
      for (const auto& c : es)
        if (rel(a, b, c) && (G.eq(a, b) || G.eq(b, c) || G.eq(a, c)))
          return {false, {a, b, c}};
  return {};
}

AxiomCheck scan_cyclic(const ElemList& es, const TernaryRel& rel) {
  for (const auto& a : es)
    for (const auto& b : es)
      for (const auto& c : es)
        if (rel(a, b, c) && !rel(b, c, a)) return {false, {a, b, c}};
  return {};
}

AxiomCheck scan_linear(const CyclicGroup& G, const ElemList& es,
                       const TernaryRel& rel) {
  for (const auto& c : es) {
    ElemList rest;
    for (const auto& x : es)
      if (!G.eq(x, c)) rest.push_back(x);
    // trichotomy of the induced order x <_c y := rel(c, x, y)
    for (size_t i = 0; i < rest.size(); ++i)
      for (size_t j = i + 1; j < rest.size(); ++j) {
        bool xy = rel(c, rest[i], rest[j]);
        bool yx = rel(c, rest[j], rest[i]);
        if (xy == yx) return {false, {c, rest[i], rest[j]}};
      }
    // transitivity
    for (const auto& x : rest)
      for (const auto& y : rest)
        for (const auto& w : rest)
          if (rel(c, x, y) && rel(c, y, w) && !rel(c, x, w))
            return {false, {c, x, y, w}};
  }
  return {};
}

AxiomCheck scan_compatible(const CyclicGroup& G, const ElemList& es,
                           const TernaryRel& rel) {
  // translate every element by every shift once up front; the quartic loop
  // below then spends its time on the relation alone
  const size_t n = es.size();
  std::vector<ElemList> sh(n);
  for (size_t u = 0; u < n; ++u) {
    sh[u].reserve(n);
    for (size_t e = 0; e < n; ++e) sh[u].push_back(G.add(es[e], es[u]));
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        bool base = rel(es[a], es[b], es[c]);
        for (size_t u = 0; u < n; ++u) {
          bool shifted = rel(sh[u][a], sh[u][b], sh[u][c]);
          if (base != shifted) return {false, {es[a], es[b], es[c], es[u]}};
        }
      }
  return {};
}

}  // namespace

AxiomReport check_axioms_on(const CyclicGroup& G, const ElemList& elems,
                            const TernaryRel& rel) {
  AxiomReport rep;
  rep.strict = scan_strict(G, elems, rel);
  rep.cyclic = scan_cyclic(elems, rel);
  rep.linear = scan_linear(G, elems, rel);
  rep.compatible = scan_compatible(G, elems, rel);
  return rep;
}

AxiomReport check_axioms(const CyclicGroup& G) {
  if (G.kind() != GroupKind::Finite)
    throw std::domain_error("axiom check requires finite carrier");
  TernaryRel rel = [&G](const GroupElem& a, const GroupElem& b,
                        const GroupElem& c) { return G.R(a, b, c); };
  return check_axioms_on(G, G.elements(), rel);
}

std::vector<GroupElem> sample_elements(const CyclicGroup& G, int count) {
  std::vector<GroupElem> out;
  auto push = [&](const GroupElem& e) {
    GroupElem c = G.canonical(e);
    for (const auto& seen : out)
      if (G.eq(seen, c)) return;
    out.push_back(c);
  };
  switch (G.kind()) {
    case GroupKind::Finite: {
      for (Int i = 0; i < G.modulus() && static_cast<int>(out.size()) < count; ++i)
        push(i);
      break;
    }
    case GroupKind::LinearZ: {
      push(Int(0));
      for (Int i = 1; static_cast<int>(out.size()) < count; ++i) {
        push(i);
        if (static_cast<int>(out.size()) < count) push(Int(-i));
      }
      break;
    }
    case GroupKind::QQWound: {
      std::vector<QQ> bs = G.lattice().basis();
      // small integer combinations of the basis, radiating outward
      for (int s = 0; static_cast<int>(out.size()) < count && s <= 8 * count; ++s) {
        for (int i = -s; i <= s; ++i) {
          int j_abs = s - (i < 0 ? -i : i);
          for (int j : (j_abs == 0 ? std::vector<int>{0}
                                   : std::vector<int>{j_abs, -j_abs})) {
            QQ v{Rat(0), Rat(0)};
            if (!bs.empty()) v = v + (Int(i) * bs[0]);
            if (bs.size() > 1) v = v + (Int(j) * bs[1]);
            push(GroupElem(v));
            if (static_cast<int>(out.size()) >= count) break;
          }
          if (static_cast<int>(out.size()) >= count) break;
        }
      }
      break;
    }
  }
  return out;
}

LinearPartDesc linear_part(const CyclicGroup& G) {
  switch (G.kind()) {
    case GroupKind::Finite:
      return {LinearPartKind::Trivial};
    case GroupKind::LinearZ:
      return {LinearPartKind::WholeGroup};
    case GroupKind::QQWound:
      return {LinearPartKind::IntegerMultiplesOfOne};
  }
  throw std::logic_error("unreachable");
}

}  // namespace cog

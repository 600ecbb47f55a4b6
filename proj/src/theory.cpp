#include "cog/theory.hpp"

#include <algorithm>

namespace cog {

namespace {

int pow_exp_of(Int idx, const Int& p) {
  int e = 0;
  while (idx % p == 0) {
    idx /= p;
    ++e;
  }
  if (idx != 1) throw std::logic_error("index is not a prime power");
  return e;
}

ZakonValue zakon_group(const CyclicGroup& G, const Int& p) {
  switch (G.kind()) {
    case GroupKind::Finite:
      return {p, G.modulus() % p == 0 ? 1 : 0};
    case GroupKind::LinearZ:
      return {p, 1};
    case GroupKind::QQWound: {
      // |G/pG| = [W : pW + Z z] for the unwound lattice W
      const QQLattice& W = G.lattice();
      Int idx = W.index_of(W.scaled_plus(p, {Rat(1), Rat(0)}));
      return {p, pow_exp_of(idx, p)};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ZakonValue zakon(const ZakonCarrier& A, const Int& p) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (const auto* G = std::get_if<CyclicGroup>(&A)) return zakon_group(*G, p);
  if (const auto* S = std::get_if<SubQDesc>(&A))
    return {p, S->nondivisible.count(p) ? 1 : 0};
  const auto& D = std::get<DenseTheory>(A);
  return {p, D.zakon_exps.exp_at(p)};
}

bool has_p_torsion(const CyclicGroup& G, const Int& p) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  switch (G.kind()) {
    case GroupKind::Finite:
      return G.modulus() % p == 0;
    case GroupKind::LinearZ:
      return false;
    case GroupKind::QQWound:
      // an order-p class exists iff z divides down by p inside the lattice
      return G.lattice().divides(p, {Rat(1), Rat(0)});
  }
  throw std::logic_error("unreachable");
}

ZakonValue zakon_unwound(const CyclicGroup& G, const Int& p) {
  ZakonValue base = zakon_group(G, p);
  if (has_p_torsion(G, p)) return base;
  if (base.infinite()) return base;
  return {p, base.exp + 1};
}

void validate_dformula(const DFormula& f) {
  if (!is_prime(f.p)) throw std::domain_error("p must be prime");
  if (f.n < 1) throw std::domain_error("n must be >= 1");
  if (f.k < 0 || f.k >= int_pow(f.p, f.n))
    throw std::domain_error("k out of range");
}

namespace {

// Chain guard for the multiples 0, x, 2x, ..., (P-1)x of a residue x mod m,
// in plain residue arithmetic.  P = 2 degenerates to "x is not 0".
bool finite_multiples_chain(const Int& m, const Int& x, const Int& P) {
  if (P == 2) return mod_floor(x, m) != 0;
  std::vector<Int> r;
  r.reserve(static_cast<size_t>(P));
  for (Int i = 0, acc = 0; i < P; ++i, acc = mod_floor(acc + x, m))
    r.push_back(acc);
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = i + 1; j < r.size(); ++j)
      if (r[i] == r[j]) return false;
  const Int& last = r.back();
  for (size_t i = 0; i + 2 < r.size(); ++i) {
    // R(r[i], r[i+1], last) after rotating r[i] to the origin
    Int b = mod_floor(r[i + 1] - r[i], m);
    Int c = mod_floor(last - r[i], m);
    if (!(0 < b && b < c)) return false;
  }
  return true;
}

}  // namespace

bool satisfies_D(const CyclicGroup& G, const DFormula& f) {
  validate_dformula(f);
  Int P = int_pow(f.p, f.n);
  switch (G.kind()) {
    case GroupKind::Finite: {
      const Int& m = G.modulus();
      for (Int x = 0; x < m; ++x)
        if (mod_floor(P * x - f.k, m) == 0 && finite_multiples_chain(m, x, P))
          return true;
      return false;
    }
    case GroupKind::LinearZ: {
      // P*x = k has at most the solution k/P, which lies in [0,1) and so
      // never supports a forward chain
      if (f.k == 0) return false;  // x = 0 fails strictness
      Rat x0(f.k, P);
      return rat_den(x0) == 1 && rat_num(x0) >= 1;
    }
    case GroupKind::QQWound:
      // stage transfer: the circle satisfies D exactly when its unwound
      // carrier divides z + k*1 by P
      return satisfies_DD(LinearGroupWithZ::qq_line(G.lattice()), f);
  }
  throw std::logic_error("unreachable");
}

bool satisfies_DD(const LinearGroupWithZ& T, const DFormula& f) {
  validate_dformula(f);
  Int P = int_pow(f.p, f.n);
  GroupElem target = T.add(T.z(), T.mul(f.k, T.one()));
  return T.divide_exact(P, target).has_value();
}

PadicDigits char_digit_of_modulus(const Int& m, const Int& p, int depth) {
  if (m < 1) throw std::domain_error("modulus must be >= 1");
  return padic_digits(-m, p, depth);
}

std::optional<int> CharSeq::digit(const Int& p, int j) const {
  if (j < 1) throw std::domain_error("depth is 1-based");
  auto it = digits.find(p);
  if (it != digits.end() && j <= static_cast<int>(it->second.size()))
    return it->second[static_cast<size_t>(j - 1)];
  if (all_further_zero) return 0;
  return std::nullopt;
}

void validate_charseq(const CharSeq& seq) {
  for (const auto& [p, ds] : seq.digits) {
    if (!is_prime(p)) throw std::domain_error("digit table keys must be prime");
    for (int d : ds)
      if (d < 0 || d >= p) throw std::domain_error("digit out of range");
  }
}

PadicDigits char_sequence(const DiscreteDesc& G, const Int& p, int depth) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (depth < 1) throw std::domain_error("depth must be >= 1");
  if (const auto* T = std::get_if<DiscreteTheory>(&G)) {
    validate_charseq(T->seq);
    PadicDigits out{p, {}};
    for (int j = 1; j <= depth; ++j) {
      auto d = T->seq.digit(p, j);
      if (!d) throw StageTooShallow(j - 1);
      out.digits.push_back(*d);
    }
    return out;
  }
  const auto& grp = std::get<CyclicGroup>(G);
  if (grp.kind() == GroupKind::Finite)
    return char_digit_of_modulus(grp.modulus(), p, depth);
  if (grp.kind() != GroupKind::QQWound)
    throw std::domain_error("characteristic sequence requires a finite or wound carrier");

  // read digits off the wound stage by solving DD at increasing depth
  LinearGroupWithZ T = LinearGroupWithZ::qq_line(grp.lattice());
  PadicDigits out{p, {}};
  Int k_prev = 0, pw_prev = 1;
  for (int j = 1; j <= depth; ++j) {
    Int pw = pw_prev * p;
    std::optional<Int> found;
    for (Int k = 0; k < pw; ++k) {
      if (satisfies_DD(T, {p, j, k})) {
        if (found) throw std::logic_error("digit at this depth is not unique");
        found = k;
      }
    }
    if (!found) throw StageTooShallow(j - 1);
    if (mod_floor(*found, pw_prev) != k_prev)
      throw std::logic_error("digit prefixes are not coherent");
    Int d = (*found - k_prev) / pw_prev;
    out.digits.push_back(static_cast<int>(d));
    k_prev = *found;
    pw_prev = pw;
  }
  return out;
}

namespace {

// Value of the digit prefix at (p, j): k_j = sum of d_i p^{i-1}.
Int prefix_value(const CharSeq& seq, const Int& p, int j) {
  Int k = 0, pw = 1;
  for (int i = 1; i <= j; ++i) {
    k += Int(*seq.digit(p, i)) * pw;
    pw *= p;
  }
  return k;
}

EquivVerdict distinguished_at(const DiscreteTheory& t1, const Int& p, int j) {
  EquivVerdict v;
  v.status = EquivStatus::Distinguished;
  v.formula = DFormula{p, j, prefix_value(t1.seq, p, j)};
  v.side = 1;
  return v;
}

}  // namespace

EquivVerdict equiv_discrete(const DiscreteTheory& t1, const DiscreteTheory& t2,
                            const Int& p_bound, int depth) {
  validate_charseq(t1.seq);
  validate_charseq(t2.seq);
  if (t1.seq.all_further_zero && t2.seq.all_further_zero) {
    // fully pinned tables: compare over the union of supports; everything
    // beyond the explicit prefixes is zero on both sides
    std::set<Int> primes;
    for (const auto& [p, ds] : t1.seq.digits) primes.insert(p);
    for (const auto& [p, ds] : t2.seq.digits) primes.insert(p);
    for (const Int& p : primes) {
      auto len = [&](const DiscreteTheory& t) {
        auto it = t.seq.digits.find(p);
        return it == t.seq.digits.end() ? 0 : static_cast<int>(it->second.size());
      };
      int maxd = std::max(len(t1), len(t2));
      for (int j = 1; j <= maxd; ++j)
        if (*t1.seq.digit(p, j) != *t2.seq.digit(p, j))
          return distinguished_at(t1, p, j);
    }
    EquivVerdict v;
    v.status = EquivStatus::Equivalent;
    return v;
  }

  // depth-bounded comparison: the whole rectangle must be pinned
  std::vector<Int> primes;
  for (Int p = 2; p <= p_bound; ++p)
    if (is_prime(p)) primes.push_back(p);
  for (const Int& p : primes)
    for (int j = 1; j <= depth; ++j)
      if (!t1.seq.digit(p, j) || !t2.seq.digit(p, j))
        throw std::invalid_argument("insufficient specification");
  for (const Int& p : primes)
    for (int j = 1; j <= depth; ++j)
      if (*t1.seq.digit(p, j) != *t2.seq.digit(p, j))
        return distinguished_at(t1, p, j);
  EquivVerdict v;
  v.status = EquivStatus::EquivalentUpToDepth;
  v.p_bound = p_bound;
  v.depth = depth;
  return v;
}

EquivVerdict equiv_dense(const DenseTheory& t1, const DenseTheory& t2) {
  Int pt = supernat_least_diff(t1.torsion, t2.torsion);
  Int pz = supernat_least_diff(t1.zakon_exps, t2.zakon_exps);
  if (pt == 0 && pz == 0) {
    EquivVerdict v;
    v.status = EquivStatus::Equivalent;
    return v;
  }
  EquivVerdict v;
  v.status = EquivStatus::Distinguished;
  if (pt != 0 && (pz == 0 || pt <= pz))
    v.dense = DenseDiag{pt, DenseDiag::Which::Torsion};
  else
    v.dense = DenseDiag{pz, DenseDiag::Which::Zakon};
  return v;
}

DivReport divisibility_report(const DiscreteTheory& t, const Int& p) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  validate_charseq(t.seq);
  auto d = t.seq.digit(p, 1);
  if (!d) throw std::invalid_argument("digit unspecified");
  bool nonzero = *d != 0;
  // one fact, three faces: the group is p-divisible iff 1 is, iff the
  // first digit is nonzero; a zero first digit instead buys p-torsion
  return {nonzero, nonzero, !nonzero};
}

Supernatural torsion_profile(const CyclicGroup& G) {
  switch (G.kind()) {
    case GroupKind::Finite:
      return Supernatural::from_integer(G.modulus());
    case GroupKind::LinearZ:
      return {};
    case GroupKind::QQWound:
      return Supernatural::from_integer(G.lattice().winding_content());
  }
  throw std::logic_error("unreachable");
}

Supernatural torsion_profile(const DiscreteTheory& t) {
  validate_charseq(t.seq);
  if (!t.seq.all_further_zero)
    throw std::invalid_argument("torsion profile needs a finitely presented table");
  Supernatural out;
  out.set_default(Supernatural::kInf);  // unlisted primes have all-zero digits
  for (const auto& [p, ds] : t.seq.digits) {
    int zeros = 0;
    bool saw_nonzero = false;
    for (int d : ds) {
      if (d != 0) {
        saw_nonzero = true;
        break;
      }
      ++zeros;
    }
    out.set(p, saw_nonzero ? zeros : Supernatural::kInf);
  }
  return out;
}

bool d_transfer_applicable(const Int& m, const DFormula& f) {
  validate_dformula(f);
  if (m < 1) throw std::domain_error("modulus must be >= 1");
  return m > f.k * (int_pow(f.p, f.n) - 1);
}

}  // namespace cog

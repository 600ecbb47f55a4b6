#include "cog/construct.hpp"

#include <algorithm>
#include <set>

namespace cog {

StageData build_stage(const CharSeq& prefix, int n) {
  if (n < 1) throw std::domain_error("stage depth must be >= 1");
  validate_charseq(prefix);
  StageData s;
  s.primes = first_primes(n);
  std::vector<std::pair<Int, Int>> congruences;
  for (const Int& p : s.primes) {
    Int k_p = 0, pw = 1;
    for (int j = 1; j <= n; ++j) {
      auto d = prefix.digit(p, j);
      if (!d) throw std::invalid_argument("insufficient digits");
      k_p += Int(*d) * pw;
      pw *= p;
    }
    congruences.emplace_back(k_p, pw);
  }
  CrtResult r = crt_solve(congruences);
  s.k = r.value;
  s.D = r.modulus;
  s.W = QQLattice::span({{Rat(1, s.D), Rat(s.k, s.D)}, {Rat(0), Rat(1)}});
  return s;
}

CyclicGroup build_discrete_group(const CharSeq& prefix, int n) {
  return CyclicGroup::qq_wound(build_stage(prefix, n).W);
}

std::vector<Int> witness_moduli(const std::vector<DFormula>& constraints,
                                int count) {
  if (count < 0) throw std::domain_error("count must be >= 0");
  std::vector<std::pair<Int, Int>> congruences;
  Int threshold = 0;
  for (const DFormula& f : constraints) {
    validate_dformula(f);
    Int P = int_pow(f.p, f.n);
    congruences.emplace_back(mod_floor(-f.k, P), P);
    threshold = std::max(threshold, Int(f.k * (P - 1)));
  }
  CrtResult r = crt_solve(congruences);  // rejects clashing constraints
  std::vector<Int> out;
  // smallest admissible representative above the chain threshold
  Int m = r.value == 0 ? r.modulus : r.value;
  while (m <= threshold) m += r.modulus;
  for (int i = 0; i < count; ++i, m += r.modulus) out.push_back(m);
  return out;
}

QDomain QDomain::cyclic(const Rat& g) {
  QDomain d;
  d.gen = g < 0 ? Rat(-g) : g;
  return d;
}

QDomain QDomain::all() {
  QDomain d;
  d.whole = true;
  return d;
}

bool QDomain::contains(const Rat& q) const {
  if (whole) return true;
  if (gen == 0) return q == 0;
  return rat_den(q / gen) == 1;
}

std::pair<Rat, Int> theta_add(const Cocycle& th, const std::pair<Rat, Int>& x,
                              const std::pair<Rat, Int>& y) {
  if (!th.domain.contains(x.first) || !th.domain.contains(y.first))
    throw std::domain_error("not in the cocycle domain");
  return {x.first + y.first, x.second + y.second + th.eval(x.first, y.first)};
}

CocycleReport verify_cocycle(const Cocycle& th, const std::vector<Rat>& sample) {
  for (const Rat& q : sample)
    if (!th.domain.contains(q))
      throw std::domain_error("sample point not in the cocycle domain");

  // close the sample under one round of sums, then index every value the
  // three laws can touch so each theta evaluation happens once
  std::set<Rat> closure(sample.begin(), sample.end());
  for (const Rat& a : sample)
    for (const Rat& b : sample) closure.insert(a + b);
  std::vector<Rat> C(closure.begin(), closure.end());
  std::set<Rat> vals(closure);
  for (const Rat& a : C)
    for (const Rat& b : C) vals.insert(a + b);
  std::vector<Rat> V(vals.begin(), vals.end());
  auto index_of = [&V](const Rat& q) {
    return static_cast<size_t>(
        std::lower_bound(V.begin(), V.end(), q) - V.begin());
  };

  const size_t nv = V.size();
  std::vector<Int> table;
  const bool use_table = nv <= 3000;
  if (use_table) {
    table.resize(nv * nv);
    for (size_t i = 0; i < nv; ++i)
      for (size_t j = 0; j < nv; ++j) table[i * nv + j] = th.eval(V[i], V[j]);
  }
  auto theta = [&](size_t i, size_t j) {
    return use_table ? table[i * nv + j] : th.eval(V[i], V[j]);
  };

  // Scaled integer view of V: rational sums and searches in the cubic law
  // loop below are too slow, so sums of C are located in V through integer
  // tables computed once.
  Int L = 1;
  for (const Rat& v : V)
    L = boost::multiprecision::lcm(L, rat_den(v));
  std::vector<Int> sv;
  sv.reserve(nv);
  for (const Rat& v : V) sv.push_back(rat_num(v) * (L / rat_den(v)));
  auto scaled_index = [&sv](const Int& u) {
    return static_cast<size_t>(
        std::lower_bound(sv.begin(), sv.end(), u) - sv.begin());
  };

  for (const Rat& a : C) {
    if (th.eval(a, 0) != 0 || th.eval(Rat(0), a) != 0)
      return {false, "normalization", {a, Rat(0)}};
  }
  std::vector<size_t> ci;
  ci.reserve(C.size());
  for (const Rat& a : C) ci.push_back(index_of(a));
  const size_t nc = C.size();
  std::vector<size_t> sum_idx(nc * nc);
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = 0; j < nc; ++j)
      sum_idx[i * nc + j] = scaled_index(sv[ci[i]] + sv[ci[j]]);
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = i + 1; j < nc; ++j)
      if (theta(ci[i], ci[j]) != theta(ci[j], ci[i]))
        return {false, "symmetry", {C[i], C[j]}};
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = 0; j < nc; ++j) {
      size_t ij = sum_idx[i * nc + j];
      for (size_t k = 0; k < nc; ++k) {
        size_t jk = sum_idx[j * nc + k];
        if (theta(ci[i], ci[j]) + theta(ij, ci[k]) !=
            theta(ci[i], jk) + theta(ci[j], ci[k]))
          return {false, "associativity", {C[i], C[j], C[k]}};
      }
    }
  return {};
}

Cocycle extend_cocycle_prime(const Cocycle& th, const Rat& a_prime,
                             const Int& p, const Int& b0) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (th.domain.contains(a_prime)) throw std::domain_error("nothing to extend");

  if (th.domain.gen == 0 && !th.domain.whole) {
    // adjoining to the trivial subgroup: no relation, no carry
    Cocycle out;
    out.domain = QDomain::cyclic(a_prime);
    QDomain dom = out.domain;
    Cocycle base = th;
    out.eval = [base, dom](const Rat& q1, const Rat& q2) {
      if (!dom.contains(q1) || !dom.contains(q2))
        throw std::domain_error("not in the extended domain");
      return base.eval(0, 0);
    };
    return out;
  }

  Rat pa = Rat(p) * a_prime;
  if (!th.domain.contains(pa))
    throw std::invalid_argument(
        "a_prime does not have prime index p over the domain; extend stepwise");

  Cocycle out;
  out.domain = QDomain::cyclic(rat_gcd(th.domain.gen, a_prime));
  Cocycle base = th;
  Rat ap = a_prime;
  Int pp = p;
  Int carry = b0;
  // decompose q = n*a' + a with 0 <= n < p and a in the old domain; the
  // carry theta(eps*p*a', a1+a2) + eps*b0 appears when the n-parts wrap
  auto decompose = [base, ap, pp](const Rat& q) {
    for (Int n = 0; n < pp; ++n) {
      Rat a = q - Rat(n) * ap;
      if (base.domain.contains(a)) return std::pair<Int, Rat>(n, a);
    }
    throw std::domain_error("not in the extended domain");
  };
  out.eval = [base, decompose, pa, carry, pp](const Rat& q1, const Rat& q2) {
    auto [n1, a1] = decompose(q1);
    auto [n2, a2] = decompose(q2);
    Int eps = (n1 + n2 >= pp) ? 1 : 0;
    Rat wrap = Rat(eps) * pa;
    return base.eval(a1, a2) + base.eval(wrap, a1 + a2) + eps * carry;
  };
  return out;
}

Cocycle theta_from_digits(const CharSeq& prefix, const Int& D) {
  if (D < 1) throw std::domain_error("denominator must be >= 1");
  validate_charseq(prefix);
  // residue k mod D from the digit table: k = k_p (mod p^{v_p(D)}) for
  // every prime p of D
  std::vector<std::pair<Int, Int>> congruences;
  for (const auto& [p, e] : factorize(D)) {
    Int k_p = 0, pw = 1;
    for (int j = 1; j <= e; ++j) {
      auto d = prefix.digit(p, j);
      if (!d) throw std::invalid_argument("insufficient digits");
      k_p += Int(*d) * pw;
      pw *= p;
    }
    congruences.emplace_back(k_p, pw);
  }
  Int k = crt_solve(congruences).value;

  Cocycle out;
  out.domain = QDomain::cyclic(Rat(1, D));
  Int den = D;
  // section r(q) = (q, frac(q*k)) against the linear generator: the defect
  // r(q1+q2) - r(q1) - r(q2) is 0 or -1 times the generator
  out.eval = [den, k](const Rat& q1, const Rat& q2) {
    Rat j1 = q1 * den, j2 = q2 * den;
    if (rat_den(j1) != 1 || rat_den(j2) != 1)
      throw std::domain_error("not in the cocycle domain");
    Int t = mod_floor((rat_num(j1) + rat_num(j2)) * k, den) -
            mod_floor(rat_num(j1) * k, den) - mod_floor(rat_num(j2) * k, den);
    if (t % den != 0) throw std::logic_error("carry defect not integral");
    return Int(t / den);
  };
  return out;
}

}  // namespace cog

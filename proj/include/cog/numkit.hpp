#pragma once

// Exact integer/rational helpers shared by every other module: floor/mod
// conventions, primes, chinese remainder, p-adic digits and supernatural
// numbers.  Everything here is desk-scale by design; trial division and
// iterated pairwise CRT are deliberate choices, not placeholders.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cog {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division, rounding toward minus infinity.  b must be nonzero.
Int floor_div(const Int& a, const Int& b);

// Least nonnegative residue of a modulo b.  b must be positive.
Int mod_floor(const Int& a, const Int& b);

Int rat_num(const Rat& q);
Int rat_den(const Rat& q);

// floor(q) as an integer, and the fractional part q - floor(q) in [0,1).
Int rat_floor(const Rat& q);
Rat rat_frac(const Rat& q);

// Positive generator of the subgroup of (Q,+) generated by a and b;
// rat_gcd(0,0) = 0.
Rat rat_gcd(const Rat& a, const Rat& b);

// Parses "a/b" or "a" (optional sign, zero denominator rejected).
Rat parse_rat(const std::string& s);

// Canonical "num/den" with den >= 1, gcd(num,den) = 1; integers print as
// "n/1" so the format round-trips without a special case.
std::string format_rat(const Rat& q);

bool is_prime(const Int& n);

// The first n primes, ascending.
std::vector<Int> first_primes(int n);

// Prime factorization of n >= 1 as {prime: exponent}; factorize(1) = {}.
std::map<Int, int> factorize(Int n);

Int int_pow(const Int& base, int e);

struct CrtResult {
  Int value;    // 0 <= value < modulus
  Int modulus;  // lcm of the input moduli
  bool operator==(const CrtResult&) const = default;
};

// Solves the simultaneous congruences x = r_i (mod m_i), m_i >= 1.
// Non-coprime but consistent systems are combined over the lcm; an
// inconsistent system throws std::domain_error("inconsistent system").
// The empty system has solution 0 mod 1.
CrtResult crt_solve(const std::vector<std::pair<Int, Int>>& congruences);

struct PadicDigits {
  Int p;
  std::vector<int> digits;  // least significant first, each in [0, p)
  bool operator==(const PadicDigits&) const = default;
};

// Base-p digits of the least nonnegative residue of x mod p^depth,
// least significant first, always exactly `depth` entries.
// p must be prime and depth >= 1.
PadicDigits padic_digits(const Int& x, const Int& p, int depth);

// A supernatural number: formal product of p^{e_p} with e_p a natural
// number or infinity.  Finitely many primes carry explicit exponents; all
// other primes share a default exponent, either 0 (the usual case) or
// infinity (full-torsion profiles such as the circle group's).
class Supernatural {
 public:
  static constexpr int kInf = -1;

  Supernatural() = default;

  // Factorization of a positive integer.
  static Supernatural from_integer(const Int& m);

  // e >= 0 or kInf.  Setting a prime to the default exponent removes the
  // explicit entry so equal values always have equal representations.
  void set(const Int& p, int e);
  int exp_at(const Int& p) const;

  void set_default(int e);  // 0 or kInf
  int default_exp() const { return default_; }

  const std::map<Int, int>& entries() const { return exps_; }

  bool operator==(const Supernatural&) const = default;

 private:
  std::map<Int, int> exps_;
  int default_ = 0;
};

// Exponent order with kInf on top: a <= b.
bool exp_le(int a, int b);

// Divisibility of supernatural numbers: exponent-wise <= at every prime.
bool supernat_divides(const Supernatural& a, const Supernatural& b);

// Smallest prime where the two differ, or 0 if equal.  Used to report
// which invariant separates two dense theories.
Int supernat_least_diff(const Supernatural& a, const Supernatural& b);

}  // namespace cog

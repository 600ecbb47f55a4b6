#include "cog/numkit.hpp"

#include <boost/multiprecision/integer.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cog {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int q = a / b;  // cpp_int division truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  if (b <= 0) throw std::domain_error("modulus must be positive");
  Int r = a % b;
  if (r < 0) r += b;
  return r;
}

Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

Int rat_floor(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }

Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

Rat rat_gcd(const Rat& a, const Rat& b) {
  // <n1/d1, n2/d2> = (1/lcm(d1,d2)) <n1*k1, n2*k2> = gcd(...)/lcm(d1,d2)
  if (a == 0 && b == 0) return Rat(0);
  Int d = boost::multiprecision::lcm(rat_den(a), rat_den(b));
  Int n1 = rat_num(a) * (d / rat_den(a));
  Int n2 = rat_num(b) * (d / rat_den(b));
  return Rat(boost::multiprecision::gcd(boost::multiprecision::abs(n1),
                                        boost::multiprecision::abs(n2)),
             d);
}

Rat parse_rat(const std::string& s) {
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("malformed rational: " + s);
  };
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw bad();
  auto parse_int = [&](const std::string& u) {
    if (u.empty() || u == "-" || u == "+") throw bad();
    size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) throw bad();
    return Int(u);
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rat(parse_int(t));
  Int num = parse_int(t.substr(0, slash));
  Int den = parse_int(t.substr(slash + 1));
  if (den == 0) throw std::domain_error("zero denominator: " + s);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string format_rat(const Rat& q) {
  std::ostringstream os;
  os << rat_num(q) << '/' << rat_den(q);
  return os.str();
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<Int> first_primes(int n) {
  if (n < 0) throw std::domain_error("negative prime count");
  std::vector<Int> out;
  Int c = 2;
  while (static_cast<int>(out.size()) < n) {
    if (is_prime(c)) out.push_back(c);
    ++c;
  }
  return out;
}

std::map<Int, int> factorize(Int n) {
  if (n < 1) throw std::domain_error("factorize expects a positive integer");
  std::map<Int, int> out;
  for (Int d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

Int int_pow(const Int& base, int e) {
  if (e < 0) throw std::domain_error("negative exponent");
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

namespace {

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
struct Egcd {
  Int g, x, y;
};

Egcd egcd(const Int& a, const Int& b) {
  if (b == 0) return {a < 0 ? Int(-a) : a, a < 0 ? Int(-1) : Int(1), 0};
  Egcd sub = egcd(b, a % b);
  return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

}  // namespace

CrtResult crt_solve(const std::vector<std::pair<Int, Int>>& congruences) {
  Int r = 0, m = 1;
  for (const auto& [ri, mi] : congruences) {
    if (mi < 1) throw std::domain_error("modulus must be positive");
    // combine x = r (mod m) with x = ri (mod mi)
    Egcd e = egcd(m, mi);
    if ((ri - r) % e.g != 0) throw std::domain_error("inconsistent system");
    Int lcm = m / e.g * mi;
    // x = r + m * t, with m*t = ri - r (mod mi): t = x0 * (ri-r)/g
    Int t = (ri - r) / e.g % (mi / e.g) * e.x % (mi / e.g);
    r = mod_floor(r + m * t, lcm);
    m = lcm;
  }
  return {r, m};
}

PadicDigits padic_digits(const Int& x, const Int& p, int depth) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (depth < 1) throw std::domain_error("depth must be >= 1");
  Int r = mod_floor(x, int_pow(p, depth));
  PadicDigits out{p, {}};
  for (int i = 0; i < depth; ++i) {
    out.digits.push_back(static_cast<int>(r % p));
    r /= p;
  }
  return out;
}

Supernatural Supernatural::from_integer(const Int& m) {
  Supernatural s;
  for (const auto& [p, e] : factorize(m)) s.set(p, e);
  return s;
}

void Supernatural::set(const Int& p, int e) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (e < 0 && e != kInf) throw std::domain_error("bad exponent");
  if (e == default_)
    exps_.erase(p);
  else
    exps_[p] = e;
}

int Supernatural::exp_at(const Int& p) const {
  auto it = exps_.find(p);
  return it == exps_.end() ? default_ : it->second;
}

void Supernatural::set_default(int e) {
  if (e != 0 && e != kInf) throw std::domain_error("default exponent must be 0 or infinite");
  // re-normalize entries that collide with the new default
  default_ = e;
  for (auto it = exps_.begin(); it != exps_.end();) {
    if (it->second == default_)
      it = exps_.erase(it);
    else
      ++it;
  }
}

bool exp_le(int a, int b) {
  if (b == Supernatural::kInf) return true;
  if (a == Supernatural::kInf) return false;
  return a <= b;
}

bool supernat_divides(const Supernatural& a, const Supernatural& b) {
  if (!exp_le(a.default_exp(), b.default_exp())) return false;
  for (const auto& [p, e] : a.entries())
    if (!exp_le(e, b.exp_at(p))) return false;
  for (const auto& [p, e] : b.entries())
    if (!exp_le(a.exp_at(p), e)) return false;
  return true;
}

Int supernat_least_diff(const Supernatural& a, const Supernatural& b) {
  std::map<Int, int> probe;  // union of explicit supports
  for (const auto& [p, e] : a.entries()) probe[p] = 0;
  for (const auto& [p, e] : b.entries()) probe[p] = 0;
  for (const auto& [p, unused] : probe) {
    (void)unused;
    if (a.exp_at(p) != b.exp_at(p)) return p;
  }
  if (a.default_exp() != b.default_exp()) {
    // smallest prime outside both supports
    for (Int p = 2;; p += (p == 2 ? 1 : 2)) {
      if (is_prime(p) && probe.find(p) == probe.end()) return p;
    }
  }
  return 0;
}

}  // namespace cog

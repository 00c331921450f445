#include "structura/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "structura/error.hpp"

namespace structura {

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  auto valid_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find('-') != std::string::npos)
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  mpz_class n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_canonical(const Rat& x) {
  if (x.get_den() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return g == 1;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(int c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Poly::Poly(const Rat& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, int k) {
  if (c == 0) return {};
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rat& root) { return Poly(std::vector<Rat>{-root, Rat(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[k];
}

Rat Poly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return a * Rat(-1); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Rat> out(x.size() + y.size() - 1, Rat(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return Poly(std::move(out));
}

Poly operator*(Poly a, const Rat& c) { return a *= c; }
Poly operator*(const Rat& c, Poly a) { return a *= c; }

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quot(rem.size() - db, Rat(0));
  const Rat inv_lead = 1 / b.leading();
  const auto& bc = b.coeffs();
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    if (rem[k] == 0) continue;
    Rat q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::Internal, "inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return poly_divmod(a, d).second.is_zero();
}

Poly monic(const Poly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  return a * (1 / a.leading());
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0)");
  Poly x = monic(a), y = monic(b);
  while (!y.is_zero()) {
    Poly r = monic(poly_divmod(x, y).second);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return monic(exact_div(a, poly_gcd(a, b)) * b);
}

Poly derivative(const Poly& a) {
  if (a.degree() <= 0) return {};
  std::vector<Rat> out(a.coeffs().size() - 1);
  for (size_t i = 1; i < a.coeffs().size(); ++i) out[i - 1] = a.coeffs()[i] * static_cast<long>(i);
  return Poly(std::move(out));
}

Poly pow(const Poly& a, int e) {
  Poly result(1), base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly compose(const Poly& a, const Poly& b) {
  Poly acc;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = acc * b + Poly(*it);
  return acc;
}

Poly reverse(const Poly& a, int n) {
  if (a.is_zero()) return {};
  std::vector<Rat> out(static_cast<size_t>(n) + 1, Rat(0));
  for (int j = 0; j <= a.degree(); ++j) out[n - j] = a.coeffs()[j];
  return Poly(std::move(out));
}

int root_multiplicity(const Poly& a, const Rat& root) {
  if (a.is_zero()) throw Error(ErrorCode::Internal, "multiplicity in the zero polynomial");
  int m = 0;
  Poly cur = a, lin = Poly::linear(root);
  while (true) {
    auto [q, r] = poly_divmod(cur, lin);
    if (!r.is_zero()) return m;
    cur = std::move(q);
    ++m;
  }
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat c = p.coeff(k);
    if (c == 0) continue;
    Rat mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || k == 0) os << format_rat(mag);
    if (k >= 1) os << "s";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- factoring

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::map<mpz_class, int> primes;
  for (unsigned long p = 2; p < 10000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++primes[mpz_class(p)];
      n /= p;
    }
  }
  factor_into(n, primes);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : primes) {
    const size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Primitive integer coefficients of a nonzero rational polynomial.
std::vector<mpz_class> integer_coeffs(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  for (auto& v : out) v /= g;
  return out;
}

}  // namespace

Poly FactoredPoly::expand() const {
  Poly out = cofactor * leading;
  for (const auto& [root, mult] : linear_factors) out = out * pow(Poly::linear(root), mult);
  return out;
}

int FactoredPoly::multiplicity(const Rat& root) const {
  for (const auto& [r, m] : linear_factors)
    if (r == root) return m;
  return 0;
}

FactoredPoly split_over_rationals(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::Internal, "split_over_rationals of zero");
  FactoredPoly out;
  out.leading = p.leading();
  Poly rest = monic(p);
  int zero_mult = 0;
  while (rest.coeff(0) == 0 && rest.degree() > 0) {
    rest = exact_div(rest, Poly::s());
    ++zero_mult;
  }
  std::vector<std::pair<Rat, int>> roots;
  if (zero_mult > 0) roots.emplace_back(Rat(0), zero_mult);
  if (rest.degree() > 0) {
    Poly squarefree = exact_div(rest, poly_gcd(rest, derivative(rest)));
    auto ic = integer_coeffs(squarefree);
    const auto nums = divisors(ic.front());
    const auto dens = divisors(ic.back());
    std::vector<Rat> found;
    for (const auto& u : nums) {
      for (const auto& v : dens) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          Rat cand(u * sign, v);
          cand.canonicalize();
          if (squarefree(cand) == 0) found.push_back(cand);
        }
      }
    }
    for (const auto& r : found) {
      int m = root_multiplicity(rest, r);
      rest = exact_div(rest, pow(Poly::linear(r), m));
      roots.emplace_back(r, m);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.linear_factors = std::move(roots);
  out.cofactor = rest;
  return out;
}

std::pair<Poly, Rat> mobius_tilde(const Poly& p, const Rat& a) {
  if (!p.is_monic()) throw Error(ErrorCode::PreconditionViolated, "mobius_tilde needs a monic polynomial");
  const Rat pa = p(a);
  if (pa == 0) throw Error(ErrorCode::RootAtA, "a = " + format_rat(a) + " is a root");
  // s^n p(1/s + a) = Σ c_j (1 + a s)^j s^{n-j}
  const int n = p.degree();
  const Poly one_as(std::vector<Rat>{Rat(1), a});
  Poly out;
  Poly power(1);
  for (int j = 0; j <= n; ++j) {
    if (p.coeff(j) != 0) out += power * Poly::monomial(p.coeff(j), n - j);
    power = power * one_as;
  }
  return {out, pa};
}

Poly mobius_untilde(const Poly& t, const Rat& a, int n) {
  // (s − a)^n t(1/(s − a)) = Σ c_j (s − a)^{n−j}
  Poly out;
  const Poly lin = Poly::linear(a);
  for (int j = 0; j <= t.degree(); ++j)
    if (t.coeff(j) != 0) out += pow(lin, n - j) * t.coeff(j);
  return out;
}

// ---------------------------------------------------------------- RatFn

RatFn::RatFn(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  const Poly g = poly_gcd(num, den);
  Poly n = exact_div(num, g), d = exact_div(den, g);
  const Rat lc = d.leading();
  num_ = n * (1 / lc);
  den_ = d * (1 / lc);
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}
RatFn operator-(const RatFn& a, const RatFn& b) {
  return RatFn(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}
RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num() * b.num(), a.den() * b.den()); }
RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero rational function");
  return RatFn(a.num() * b.den(), a.den() * b.num());
}

}  // namespace structura

#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace structura {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) as long as it is built through the helpers below.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
/// Parses "p", "p/q" or "-p/q"; throws Error(ParseError) otherwise.
Rat parse_rat(const std::string& text);
std::string format_rat(const Rat& x);
bool is_canonical(const Rat& x);

/// Degree reported for the zero polynomial.
inline constexpr int NEG_INF = std::numeric_limits<int>::min();

/// Univariate polynomial over Q in the variable s, coefficients ascending by
/// power. Trailing zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  Poly(int c);  // NOLINT(google-explicit-constructor)
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rat> coeffs);

  /// c·s^k.
  static Poly monomial(const Rat& c, int k);
  /// The linear factor s − root.
  static Poly linear(const Rat& root);
  /// The variable s.
  static Poly s() { return monomial(Rat(1), 1); }

  int degree() const { return coeffs_.empty() ? NEG_INF : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of s^k (zero outside the stored range).
  Rat coeff(int k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rat leading() const;

  Rat operator()(const Rat& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rat& c);
Poly operator*(const Rat& c, Poly a);

/// Quotient and remainder with deg(remainder) < deg(b).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// a / b, throwing Error(Internal) when the division leaves a remainder.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
/// Monic gcd; throws Error(BothZero) if a = b = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic lcm of nonzero polynomials.
Poly poly_lcm(const Poly& a, const Poly& b);
/// a scaled to leading coefficient 1 (zero stays zero).
Poly monic(const Poly& a);
Poly derivative(const Poly& a);
Poly pow(const Poly& a, int e);
/// a(b(s)).
Poly compose(const Poly& a, const Poly& b);
/// s^n · a(1/s) for n ≥ deg a.
Poly reverse(const Poly& a, int n);
/// Multiplicity of `root` as a zero of a (a nonzero).
int root_multiplicity(const Poly& a, const Rat& root);

std::string to_string(const Poly& p);

/// leading · ∏ (s − root)^mult · cofactor with a monic cofactor free of
/// rational roots. Roots are stored in increasing order.
struct FactoredPoly {
  Rat leading{0};
  std::vector<std::pair<Rat, int>> linear_factors;
  Poly cofactor{1};

  Poly expand() const;
  bool is_split() const { return cofactor.degree() == 0; }
  int multiplicity(const Rat& root) const;
};

FactoredPoly split_over_rationals(const Poly& p);

/// s^{deg p} · p(1/s + a) together with p(a). Requires p monic and p(a) ≠ 0.
std::pair<Poly, Rat> mobius_tilde(const Poly& p, const Rat& a);
/// Inverse substitution: (s − a)^n · t(1/(s − a)).
Poly mobius_untilde(const Poly& t, const Rat& a, int n);

/// Reduced fraction num/den with monic den.
class RatFn {
 public:
  RatFn() : num_(0), den_(1) {}
  RatFn(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFn(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

 private:
  Poly num_;
  Poly den_;
};

RatFn operator+(const RatFn& a, const RatFn& b);
RatFn operator-(const RatFn& a, const RatFn& b);
RatFn operator*(const RatFn& a, const RatFn& b);
RatFn operator/(const RatFn& a, const RatFn& b);

}  // namespace structura

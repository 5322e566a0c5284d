#ifndef PERMGRID_RATFUN_HPP
#define PERMGRID_RATFUN_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permgrid {

using Int = boost::multiprecision::cpp_int;

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// Canonical form: no trailing zero coefficients; the zero polynomial has
/// an empty coefficient vector.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(Int constant);
  explicit Polynomial(std::vector<Int> coeffs);  // coeffs[i] is the x^i term

  static Polynomial monomial(Int c, int degree);
  static Polynomial variable();  // x

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
  int order() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Exact quotient, or nullopt when o does not divide *this over Q[x]
  /// (scaled to integers).
  std::optional<Polynomial> divide_exact(const Polynomial& o) const;

  Int content() const;  // gcd of coefficients (0 for zero polynomial)
  Polynomial primitive_part() const;

  static Polynomial gcd(const Polynomial& a, const Polynomial& b);
  static Polynomial pow(const Polynomial& base, int e);

  std::string to_string() const;  // e.g. "1 - 3*x + x^2"
  static std::optional<Polynomial> parse(const std::string& text);

private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Ratio of integer polynomials in canonical form: numerator and denominator
/// coprime, jointly content-free, and the lowest nonzero coefficient of the
/// denominator positive.  Every generating function in this project is one of
/// these.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Int(1)) {}  // zero
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);  // throws on zero den
  explicit RationalFunction(Int constant);

  static RationalFunction variable();  // x
  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(Int(1)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;  // throws on 0
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  static RationalFunction pow(const RationalFunction& base, int e);

  /// Order of vanishing at x = 0 (num order minus den order); INT_MAX for 0.
  int order_at_zero() const;

  /// Taylor coefficients x^0..x^n_max.  Requires den(0) != 0 and an integral
  /// expansion (always the case for counting series).
  std::vector<Int> series(int n_max) const;

  /// Exact composition with x/(1-x).
  RationalFunction substitute_inflation() const;

  std::string to_string() const;  // "num / den", or "num" when den == 1
  /// Factored rendering against a candidate factor list (used to match the
  /// displayed forms); falls back to expanded form for leftovers.
  std::string to_factored_string(std::span<const Polynomial> factors) const;
  static std::optional<RationalFunction> parse(const std::string& text);

private:
  void canonicalize();
  Polynomial num_, den_;
};

struct InflationFactor {
  RationalFunction gf;
  int points = 1;  // how many skeleton points this factor inflates
};

/// substitute_inflation(s) * ((1-x)/x)^k * prod(factors), k = total points
/// covered by the factors.  Models "all other points inflate monotonically".
/// Throws if s does not vanish to order >= k at 0.
RationalFunction inflation_gf(const RationalFunction& s,
                              std::span<const InflationFactor> factors);

}  // namespace permgrid

#endif

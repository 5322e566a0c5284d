#include "permgrid/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace permgrid {

namespace mp = boost::multiprecision;

Polynomial::Polynomial(Int constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(Int c, int degree) {
  Polynomial p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, Int(0));
    p.coeffs_[degree] = std::move(c);
  }
  return p;
}

Polynomial Polynomial::variable() { return monomial(Int(1), 1); }

Int Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
  return coeffs_[i];
}

int Polynomial::order() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return Polynomial();
  if (degree() < o.degree()) return std::nullopt;
  // Long division over Q, staying in integers by checking divisibility.
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quot(degree() - o.degree() + 1, Int(0));
  const Int& lead = o.coeffs_.back();
  for (int d = degree(); d >= o.degree(); --d) {
    Int c = rem[d];
    if (c == 0) continue;
    if (c % lead != 0) return std::nullopt;
    Int q = c / lead;
    quot[d - o.degree()] = q;
    for (int j = 0; j <= o.degree(); ++j)
      rem[d - o.degree() + j] -= q * o.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return Polynomial(std::move(quot));
}

Int Polynomial::content() const {
  Int g(0);
  for (const auto& c : coeffs_) g = mp::gcd(g, c);
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return Polynomial();
  Int c = content();
  if (coeffs_.back() < 0) c = -c;
  std::vector<Int> r = coeffs_;
  for (auto& x : r) x /= c;
  return Polynomial(std::move(r));
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Polynomial pseudo_rem(Polynomial a, const Polynomial& b) {
  const Int& lb = b.coeffs().back();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    Int la = a.coeffs().back();
    a = a * Polynomial(lb) - b * Polynomial::monomial(la, shift);
  }
  return a;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero())
    return b.is_zero() ? Polynomial()
                       : b.primitive_part() * Polynomial(mp::abs(b.content()));
  if (b.is_zero()) return a.primitive_part() * Polynomial(mp::abs(a.content()));
  Int cont = mp::gcd(a.content(), b.content());
  Polynomial x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = pseudo_rem(x, y).primitive_part();
    x = y;
    y = r;
  }
  return x * Polynomial(cont);
}

Polynomial Polynomial::pow(const Polynomial& base, int e) {
  Polynomial r{Int(1)};
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int a = mp::abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::optional<Polynomial> Polynomial::parse(const std::string& text) {
  // Grammar: term (('+'|'-') term)*, term = int ['*' var ['^' n]] | var ['^' n]
  // The variable may be written x or t.
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  std::vector<Int> coeffs;
  auto add = [&](const Int& c, int d) {
    if (d >= static_cast<int>(coeffs.size())) coeffs.resize(d + 1, Int(0));
    coeffs[d] += c;
  };
  skip_ws();
  if (pos >= text.size()) return std::nullopt;
  bool expect_term = true;
  int sign = 1;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    char ch = text[pos];
    if (ch == '+' || ch == '-') {
      if (expect_term && ch == '-') { sign = -sign; ++pos; continue; }
      if (expect_term) { ++pos; continue; }
      sign = (ch == '-') ? -1 : 1;
      expect_term = true;
      ++pos;
      continue;
    }
    if (!expect_term) return std::nullopt;
    Int c(1);
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      c = Int(text.substr(start, pos - start));
      saw_number = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
    }
    int deg = 0;
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == 't')) {
      ++pos;
      deg = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) return std::nullopt;
        deg = std::stoi(text.substr(start, pos - start));
      }
    } else if (!saw_number) {
      return std::nullopt;
    }
    add(sign > 0 ? c : -c, deg);
    sign = 1;
    expect_term = false;
  }
  if (expect_term) return std::nullopt;
  return Polynomial(std::move(coeffs));
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Int(1)) {}

RationalFunction::RationalFunction(Int constant)
    : num_(std::move(constant)), den_(Int(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("ratfun: zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Polynomial::variable());
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Int(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0 || mp::abs(g.content()) != 1) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  Int c = mp::gcd(num_.content(), den_.content());
  int lo = den_.order();
  if (den_.coeff(lo) < 0) c = -c;
  if (c != 1) {
    num_ = *num_.divide_exact(Polynomial(c));
    den_ = *den_.divide_exact(Polynomial(c));
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("ratfun: division by zero function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(const RationalFunction& base, int e) {
  if (e < 0) return RationalFunction::one() / pow(base, -e);
  RationalFunction r = RationalFunction::one();
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

int RationalFunction::order_at_zero() const {
  if (num_.is_zero()) return INT_MAX;
  return num_.order() - den_.order();
}

std::vector<Int> RationalFunction::series(int n_max) const {
  if (den_.coeff(0) == 0)
    throw std::domain_error("ratfun: series needs nonzero den constant term");
  using Rat = boost::rational<Int>;
  const Int d0 = den_.coeff(0);
  std::vector<Rat> c(n_max + 1, Rat(0));
  for (int n = 0; n <= n_max; ++n) {
    Rat acc(num_.coeff(n));
    for (int k = 1; k <= std::min(n, den_.degree()); ++k)
      acc -= Rat(den_.coeff(k)) * c[n - k];
    c[n] = acc / Rat(d0);
  }
  std::vector<Int> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (c[n].denominator() != 1)
      throw std::domain_error("ratfun: non-integer series coefficient");
    out[n] = c[n].numerator();
  }
  return out;
}

namespace {

// p(x/(1-x)) * (1-x)^target_deg, exact.
Polynomial compose_inflation(const Polynomial& p, int target_deg) {
  Polynomial one_minus_x({std::vector<Int>{Int(1), Int(-1)}});
  Polynomial x = Polynomial::variable();
  Polynomial acc;  // sum p_i x^i (1-x)^(target_deg - i)
  Polynomial xi{Int(1)};
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) != 0)
      acc = acc + Polynomial(p.coeff(i)) * xi *
                      Polynomial::pow(one_minus_x, target_deg - i);
    xi = xi * x;
  }
  return acc;
}

}  // namespace

RationalFunction RationalFunction::substitute_inflation() const {
  int d = std::max(num_.degree(), den_.degree());
  if (d < 0) return RationalFunction::zero();
  return RationalFunction(compose_inflation(num_, d),
                          compose_inflation(den_, d));
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(Int(1))) return num_.to_string();
  return num_.to_string() + " / " + den_.to_string();
}

std::string RationalFunction::to_factored_string(
    std::span<const Polynomial> factors) const {
  auto render = [&](const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> found;
    Polynomial rest = p;
    // Peel the x-power first, then the candidates.
    Polynomial x = Polynomial::variable();
    int xpow = 0;
    while (true) {
      auto q = rest.divide_exact(x);
      if (!q) break;
      rest = *q;
      ++xpow;
    }
    for (const auto& f : factors) {
      int mult = 0;
      while (true) {
        auto q = rest.divide_exact(f);
        if (!q) break;
        rest = *q;
        ++mult;
      }
      if (mult > 0) found.emplace_back(f, mult);
    }
    std::ostringstream out;
    bool first = true;
    auto piece = [&](const std::string& body, int mult) {
      if (!first) out << "*";
      first = false;
      out << "(" << body << ")";
      if (mult > 1) out << "^" << mult;
    };
    if (xpow == 1) { if (!first) out << "*"; out << "x"; first = false; }
    else if (xpow > 1) { if (!first) out << "*"; out << "x^" << xpow; first = false; }
    for (const auto& [f, m] : found) piece(f.to_string(), m);
    if (!(rest == Polynomial(Int(1))) || first) piece(rest.to_string(), 1);
    return out.str();
  };
  if (den_ == Polynomial(Int(1))) return render(num_);
  return render(num_) + " / " + render(den_);
}

std::optional<RationalFunction> RationalFunction::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto p = Polynomial::parse(text);
    if (!p) return std::nullopt;
    return RationalFunction(*p);
  }
  auto p = Polynomial::parse(text.substr(0, slash));
  auto q = Polynomial::parse(text.substr(slash + 1));
  if (!p || !q || q->is_zero()) return std::nullopt;
  return RationalFunction(*p, *q);
}

RationalFunction inflation_gf(const RationalFunction& s,
                              std::span<const InflationFactor> factors) {
  int k = 0;
  for (const auto& f : factors) k += f.points;
  if (!s.is_zero() && s.order_at_zero() < k)
    throw std::domain_error(
        "inflation_gf: order of vanishing below special point count");
  Polynomial one_minus_x({std::vector<Int>{Int(1), Int(-1)}});
  RationalFunction r = s.substitute_inflation() *
      RationalFunction(Polynomial::pow(one_minus_x, k),
                       Polynomial::monomial(Int(1), k));
  for (const auto& f : factors) r = r * f.gf;
  return r;
}

}  // namespace permgrid

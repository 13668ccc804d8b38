#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace veechdeg {

/// Univariate polynomial over Z, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
  }
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }
  static IntPoly monomial(const Int& c, int k) {
    std::vector<Int> v(static_cast<std::size_t>(k) + 1, Int(0));
    v.back() = c;
    return IntPoly(std::move(v));
  }
  static IntPoly t() { return monomial(1, 1); }
  /// t - a
  static IntPoly linear_root(const Int& a) { return IntPoly(std::vector<Int>{-a, Int(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const {
    return (i < 0 || i > degree()) ? Int(0) : c_[static_cast<std::size_t>(i)];
  }
  const Int& lead() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
    return c_.back();
  }
  void set_coeff(int i, const Int& v) {
    if (i > degree()) c_.resize(static_cast<std::size_t>(i) + 1, Int(0));
    c_[static_cast<std::size_t>(i)] = v;
    trim();
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator*=(const Int& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
  friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  IntPoly pow(unsigned e) const {
    IntPoly r = constant(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(r));
  }

  /// p(-t)
  IntPoly reflect() const {
    IntPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  /// p(t + a)
  IntPoly shift(const Int& a) const {
    IntPoly r;
    for (int i = degree(); i >= 0; --i) r = r * linear_root(-a) + constant(c_[static_cast<std::size_t>(i)]);
    return r;
  }

  Int eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
    return r;
  }

  /// Sign of p(a/b) computed as the sign of b^deg p(a/b), which stays in Z.
  int sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int r = 0, bp = 1;
    // Horner on the homogenised form: sum c_i a^i b^(n-i)
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r = r * a + *it * bp;
      bp *= b;
    }
    return sgn(r);
  }

  Int content() const {
    Int g = 0;
    for (const auto& x : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// p / content, with positive leading coefficient.
  IntPoly primitive_part() const {
    if (c_.empty()) return {};
    Int g = content();
    if (lead() < 0) g = -g;
    IntPoly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
  }

  /// Multiplicity of t as a factor.
  int valuation() const {
    int k = 0;
    while (k <= degree() && c_[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
  }

  /// p / t^k; requires t^k | p.
  IntPoly shift_down(int k) const {
    if (k == 0) return *this;
    if (k > valuation() && !is_zero()) throw Error(ErrorCode::NonExactDivision, "shift_down");
    return IntPoly(std::vector<Int>(c_.begin() + k, c_.end()));
  }

  std::string to_string(const char* var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Int& c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Int a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << a.get_str();
        continue;
      }
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

  /// Total order used to canonicalise factor lists: by degree, then coefficients.
  friend bool operator<(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      int c = cmp(a.c_[static_cast<std::size_t>(i)], b.c_[static_cast<std::size_t>(i)]);
      if (c != 0) return c < 0;
    }
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pseudo_remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Int& lb = b.lead();
  int delta = a.degree() - db + 1;
  for (int i = a.degree(); i >= db; --i) {
    Int q = r[static_cast<std::size_t>(i)];
    for (auto& x : r) x *= lb;
    if (q != 0) {
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= q * bc[static_cast<std::size_t>(j)];
    }
    --delta;
  }
  // delta counts multiplications still owed to reach the full power.
  IntPoly rem(std::move(r));
  if (delta > 0) rem *= veechdeg::pow(lb, static_cast<unsigned long>(delta));
  return rem;
}

/// Division in Z[t] that must be exact: returns q with a = q*b.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorCode::NonExactDivision, a.to_string() + " / " + b.to_string());
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Int& lb = b.lead();
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Int& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw Error(ErrorCode::NonExactDivision, a.to_string() + " / " + b.to_string());
    Int c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  for (const auto& x : r)
    if (x != 0) throw Error(ErrorCode::NonExactDivision, a.to_string() + " / " + b.to_string());
  return IntPoly(std::move(q));
}

/// Quotient and remainder when b's leading coefficient divides every step
/// (always true for monic b). Throws NonExactDivision otherwise.
inline std::pair<IntPoly, IntPoly> divrem_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Int& lb = b.lead();
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Int& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw Error(ErrorCode::NonExactDivision, "non-integral quotient");
    Int c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// True iff b divides a in Z[t].
inline bool divides(const IntPoly& b, const IntPoly& a) {
  try {
    divide_exact(a, b);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  Int c = gcd(a.content(), b.content());
  IntPoly u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? r : r.primitive_part();
  }
  return u.primitive_part() * c;
}

/// Synthetic division by (t - a); returns quotient, remainder is dropped.
inline IntPoly deflate(const IntPoly& p, const Int& a) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Int> q(c.size() - 1);
  Int acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    q[i] = acc;
    acc = acc * a + c[i];
  }
  return IntPoly(std::move(q));
}

/// Strips every factor (t - a) and returns its multiplicity.
inline int strip_root(IntPoly& p, const Int& a) {
  int k = 0;
  while (p.degree() >= 1 && p.eval(a) == 0) {
    p = deflate(p, a);
    ++k;
  }
  return k;
}

/// Yun's algorithm on a primitive polynomial with no repeated handling of
/// special roots: returns squarefree, pairwise coprime a_i with p = prod a_i^i.
inline std::vector<std::pair<IntPoly, int>> yun(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  IntPoly f = p.primitive_part();
  IntPoly fp = f.derivative();
  IntPoly a0 = gcd(f, fp);
  IntPoly b = divide_exact(f, a0);
  IntPoly c = divide_exact(fp, a0);
  IntPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    IntPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Squarefree decomposition: pairwise coprime squarefree primitive factors
/// with multiplicities. Factors t, t-1, t+1 are split off first (they are
/// the forced factors throughout) so they appear individually.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_decomposition");
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly f = p.primitive_part();
  int v = f.valuation();
  if (v > 0) {
    out.emplace_back(IntPoly::t(), v);
    f = f.shift_down(v);
  }
  for (long a : {1L, -1L}) {
    int k = strip_root(f, Int(a));
    if (k > 0) out.emplace_back(IntPoly::linear_root(Int(a)), k);
  }
  for (auto& fm : yun(f)) out.push_back(std::move(fm));
  return out;
}

inline IntPoly squarefree_part(const IntPoly& p) {
  IntPoly r = IntPoly::constant(1);
  for (const auto& [f, m] : squarefree_decomposition(p)) r *= f;
  return r;
}

/// Cauchy bound: every root has |z| < bound.
inline Rational cauchy_bound(const IntPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Int m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Int(abs(p.coeff(i))));
  Rational b(m, abs(p.lead()));
  b.canonicalize();
  return b + 1;
}

}  // namespace veechdeg

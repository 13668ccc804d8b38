#pragma once

#include <vector>

#include "factor.hpp"
#include "poly.hpp"

namespace veechdeg {

/// Isolating interval (lo, hi] for a single real root of poly.
struct RootInterval {
  Rational lo;
  Rational hi;
  IntPoly poly;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return midpoint().get_d(); }
};

/// Sturm sequence of a squarefree polynomial, kept in Z[t] through
/// pseudo-remainders whose sign is corrected to match the true remainder.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sturm sequence");
    seq_.push_back(p);
    if (p.degree() < 1) return;
    seq_.push_back(p.derivative());
    while (seq_.back().degree() > 0) {
      const IntPoly& a = seq_[seq_.size() - 2];
      const IntPoly& b = seq_.back();
      IntPoly r = pseudo_remainder(a, b);
      int delta = a.degree() - b.degree() + 1;
      // prem = lc(b)^delta * rem; undo a negative multiplier.
      if (b.lead() < 0 && (delta % 2 == 1)) r = -r;
      if (r.is_zero()) break;
      Int c = r.content();
      std::vector<Int> cs = r.coeffs();
      for (auto& x : cs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      seq_.push_back(-IntPoly(std::move(cs)));
    }
  }

  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& s : seq_) {
      int sg = s.sign_at(x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  }

  /// Distinct roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

  const std::vector<IntPoly>& sequence() const { return seq_; }

 private:
  std::vector<IntPoly> seq_;
};

/// Number of distinct real roots of p in (lo, hi]. Callers pass a squarefree p.
inline int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sturm_count");
  if (!(lo < hi)) return 0;
  return SturmSequence(p).count(lo, hi);
}

namespace detail {

inline void refine(const SturmSequence& s, RootInterval& r, const Rational& width) {
  while (r.width() >= width) {
    Rational mid = r.midpoint();
    if (s.count(r.lo, mid) >= 1)
      r.hi = mid;
    else
      r.lo = mid;
  }
}

/// Largest root of a squarefree p, or false if p has no real root.
inline bool largest_root_squarefree(const IntPoly& p, const Rational& width, RootInterval& out) {
  SturmSequence s(p);
  Rational b = cauchy_bound(p);
  Rational lo = -b, hi = b;
  if (s.count(lo, hi) == 0) return false;
  while (s.count(lo, hi) > 1 || hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    if (s.count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  out = RootInterval{lo, hi, p};
  return true;
}

}  // namespace detail

inline Rational default_isolation_width() { return pow2_inverse(32); }

/// All real roots of a squarefree p, increasing, each interval of width < width.
inline std::vector<RootInterval> isolate_real_roots(const IntPoly& p, const Rational& width = default_isolation_width()) {
  SturmSequence s(p);
  Rational b = cauchy_bound(p);
  std::vector<RootInterval> out;
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int c = s.count(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      RootInterval r{lo, hi, p};
      detail::refine(s, r, width);
      out.push_back(r);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.push_back({lo, mid});
    stack.push_back({mid, hi});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  return out;
}

/// Isolates the maximal real root of p. The returned interval carries the
/// irreducible factor of p that vanishes there.
inline RootInterval isolate_largest_real_root(const IntPoly& p, const Rational& width = default_isolation_width()) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "isolate_largest_real_root");
  Factorization f = factor_over_integers(p);
  std::vector<RootInterval> cands;
  for (const auto& [g, m] : f.factors) {
    RootInterval r;
    if (detail::largest_root_squarefree(g, width, r)) cands.push_back(r);
  }
  if (cands.empty()) throw Error(ErrorCode::NoRealRoot, p.to_string());
  // Distinct irreducible factors have distinct roots: refine until the
  // intervals separate, then keep the highest.
  RootInterval best = cands[0];
  for (std::size_t i = 1; i < cands.size(); ++i) {
    RootInterval c = cands[i];
    SturmSequence sb(best.poly), sc(c.poly);
    while (!(c.hi <= best.lo || best.hi <= c.lo)) {
      Rational wb = best.width() / 2, wc = c.width() / 2;
      detail::refine(sb, best, wb);
      detail::refine(sc, c, wc);
      if (best.width() < pow2_inverse(4096)) throw Error(ErrorCode::IntervalAmbiguous, p.to_string());
    }
    if (c.lo >= best.hi) best = c;
  }
  return best;
}

/// The irreducible factor of p having a root in r.
inline IntPoly minimal_polynomial_of_root(const IntPoly& p, RootInterval r) {
  Factorization f = factor_over_integers(p);
  for (int iter = 0; iter < 4096; ++iter) {
    std::vector<const IntPoly*> hits;
    for (const auto& [g, m] : f.factors)
      if (sturm_count(g, r.lo, r.hi) > 0) hits.push_back(&g);
    if (hits.size() == 1) return *hits[0];
    if (hits.empty()) throw Error(ErrorCode::IntervalAmbiguous, "interval holds no root of " + p.to_string());
    SturmSequence s(r.poly.is_zero() ? squarefree_part(p) : r.poly);
    detail::refine(s, r, r.width() / 2);
  }
  throw Error(ErrorCode::IntervalAmbiguous, p.to_string());
}

}  // namespace veechdeg

#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "modular.hpp"
#include "poly.hpp"

namespace veechdeg {

struct Factorization {
  Int content = 1;
  std::vector<std::pair<IntPoly, int>> factors;

  IntPoly expand() const {
    IntPoly r = IntPoly::constant(content);
    for (const auto& [f, m] : factors) r *= f.pow(static_cast<unsigned>(m));
    return r;
  }
};

namespace detail {

inline IntPoly mod_coeffs(const IntPoly& f, const Int& m) {
  std::vector<Int> c = f.coeffs();
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

inline IntPoly symmetric_coeffs(const IntPoly& f, const Int& m) {
  std::vector<Int> c = f.coeffs();
  for (auto& x : c) x = symmetric_mod(x, m);
  return IntPoly(std::move(c));
}

inline IntPoly lift_poly(const modp::Poly& a) {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = from_u64(a[i]);
  return IntPoly(std::move(c));
}

inline modp::Poly product(const std::vector<modp::Poly>& fs, std::size_t lo, std::size_t hi, modp::u64 p) {
  modp::Poly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = modp::mul(r, fs[i], p);
  return r;
}

/// Lift F = G0*H0 (mod p, monic, coprime) to F = G*H (mod p^k).
inline std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& F, const modp::Poly& G0, const modp::Poly& H0,
                                               modp::u64 p, unsigned k) {
  modp::Poly s, t;
  modp::ext_gcd(G0, H0, p, s, t);
  IntPoly G = lift_poly(G0), H = lift_poly(H0);
  Int m = from_u64(p);
  const Int pz = from_u64(p);
  for (unsigned e = 1; e < k; ++e) {
    Int mn = m * pz;
    IntPoly E = mod_coeffs(F - G * H, mn);
    std::vector<Int> ec = E.coeffs();
    for (auto& x : ec) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    modp::Poly err = modp::reduce(IntPoly(std::move(ec)), p);
    modp::Poly q, r;
    modp::divmod(modp::mul(t, err, p), G0, p, q, r);
    modp::Poly dH = modp::add(modp::mul(s, err, p), modp::mul(H0, q, p), p);
    G += lift_poly(r) * m;
    H += lift_poly(dH) * m;
    m = mn;
  }
  return {G, H};
}

inline void hensel_tree(const IntPoly& F, const std::vector<modp::Poly>& fs, std::size_t lo, std::size_t hi,
                        modp::u64 p, unsigned k, const Int& P, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(mod_coeffs(F, P));
    return;
  }
  std::size_t mid = (lo + hi) / 2;
  auto [G, H] = hensel_pair(F, product(fs, lo, mid, p), product(fs, mid, hi, p), p, k);
  hensel_tree(mod_coeffs(G, P), fs, lo, mid, p, k, P, out);
  hensel_tree(mod_coeffs(H, P), fs, mid, hi, p, k, P, out);
}

/// Irreducible factors of a primitive squarefree f with positive leading coefficient.
inline std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f) {
  if (f.degree() <= 1) return {f};
  const Int& l = f.lead();

  // Modular screen: a single irreducible factor mod some good prime certifies
  // irreducibility over Z. Otherwise keep the prime with the fewest factors.
  const auto& primes = modp::primes31();
  modp::u64 best_p = 0;
  std::size_t best_count = 0;
  std::size_t tried = 0;
  for (modp::u64 p : primes) {
    if (tried == 10) break;
    if (mod_u64(l, p) == 0) continue;
    modp::Poly fp = modp::monic(modp::reduce(f, p), p);
    if (!modp::is_squarefree(fp, p)) continue;
    ++tried;
    std::size_t count = 0;
    for (auto& [g, k] : modp::distinct_degree(fp, p)) count += static_cast<std::size_t>(modp::deg(g) / k);
    if (count == 1) return {f};
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
  }
  if (best_p == 0) throw Error(ErrorCode::InternalInconsistency, "no good prime for " + f.to_string());

  const modp::u64 p = best_p;
  std::vector<modp::Poly> local = modp::factor_squarefree(modp::monic(modp::reduce(f, p), p), p);
  std::sort(local.begin(), local.end());

  // Coefficient bound on l/lc(h) * h for any factor h of f.
  Int norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Int bound = abs(l) * (isqrt(norm2) + 1) * (Int(1) << static_cast<unsigned long>(f.degree()));
  Int P = 1;
  unsigned k = 0;
  while (P <= 2 * bound) {
    P *= from_u64(p);
    ++k;
  }
  Int linv;
  mpz_invert(linv.get_mpz_t(), l.get_mpz_t(), P.get_mpz_t());
  IntPoly F = mod_coeffs(f * linv, P);
  std::vector<IntPoly> lifted;
  hensel_tree(F, local, 0, local.size(), p, k, P, lifted);

  // Zassenhaus recombination over subsets of increasing size.
  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::vector<IntPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      const Int& lr = rest.lead();
      Int c0 = lr;
      for (auto i : idx) c0 = symmetric_mod(c0 * pool[i].coeff(0), P);
      Int target = lr * rest.coeff(0);
      bool plausible = (c0 == 0) ? target == 0 : (target == 0 || mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t()));
      if (plausible) {
        IntPoly g = IntPoly::constant(lr);
        for (auto i : idx) g = mod_coeffs(g * pool[i], P);
        g = symmetric_coeffs(g, P).primitive_part();
        IntPoly q;
        bool ok = false;
        try {
          q = divide_exact(rest, g);
          ok = true;
        } catch (const Error&) {
        }
        if (ok) {
          result.push_back(g);
          rest = q;
          std::vector<IntPoly> keep;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(pool[i]);
          pool = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == pool.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(rest.primitive_part());
  return result;
}

}  // namespace detail

/// Complete factorisation over Z. Factors are primitive, irreducible, with
/// positive leading coefficient, sorted by (degree, coefficients).
inline Factorization factor_over_integers(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor_over_integers");
  Factorization out;
  out.content = p.content();
  if (p.lead() < 0) out.content = -out.content;
  if (p.degree() == 0) return out;
  for (const auto& [f, m] : squarefree_decomposition(p.primitive_part())) {
    for (auto& g : detail::factor_squarefree_primitive(f)) out.factors.emplace_back(g, m);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
  return out;
}

inline bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_over_integers(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace veechdeg

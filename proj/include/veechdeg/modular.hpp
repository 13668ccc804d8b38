#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "integer.hpp"
#include "poly.hpp"

namespace veechdeg::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // lowest degree first, trimmed

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }

/// Primes just below 2^31, in decreasing order, generated once.
inline const std::vector<u64>& primes31() {
  static const std::vector<u64> ps = [] {
    std::vector<u64> v;
    Int c = Int(1) << 31;
    while (v.size() < 4096) {
      c -= 1;
      if (mpz_probab_prime_p(c.get_mpz_t(), 30)) v.push_back(c.get_ui());
    }
    return v;
  }();
  return ps;
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly reduce(const IntPoly& f, u64 p) {
  Poly r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_u64(f.coeffs()[i], p);
  trim(r);
  return r;
}

inline Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i], p);
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i], p);
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
      if (acc[i + j] >> 124) acc[i + j] %= p;
    }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, u64 s, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], s, p);
  trim(r);
  return r;
}

inline Poly monic(const Poly& a, u64 p) { return a.empty() ? a : scale(a, inv(a.back(), p), p); }

/// a = q*b + r
inline void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
  r = a;
  q.clear();
  if (deg(a) < deg(b)) return;
  q.assign(a.size() - b.size() + 1, 0);
  u64 il = inv(b.back(), p);
  for (int i = deg(r); i >= deg(b); --i) {
    u64 c = mul(r[static_cast<std::size_t>(i)], il, p);
    q[static_cast<std::size_t>(i - deg(b))] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = static_cast<std::size_t>(i - deg(b)) + j;
      r[k] = sub(r[k], mul(c, b[j], p), p);
    }
  }
  trim(r);
  trim(q);
}

inline Poly mod(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

inline Poly div(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return q;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// Bezout: s*a + t*b = gcd (monic).
inline Poly ext_gcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    Poly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 il = inv(r0.back(), p);
  s = scale(s0, il, p);
  t = scale(t0, il, p);
  return scale(r0, il, p);
}

inline Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p, p);
  trim(r);
  return r;
}

inline Poly powmod(Poly base, Int e, const Poly& m, u64 p) {
  Poly r{1};
  base = mod(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, base, p), m, p);
    e >>= 1;
    if (e > 0) base = mod(mul(base, base, p), m, p);
  }
  return r;
}

/// Distinct-degree factorisation of a monic squarefree f: pairs (product of
/// all irreducible factors of degree k, k).
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f, u64 p) {
  std::vector<std::pair<Poly, int>> out;
  Poly x{0, 1};
  Poly h = x;
  for (int k = 1; 2 * k <= deg(f); ++k) {
    h = powmod(h, Int(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, k);
      f = div(f, g, p);
      h = mod(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

/// Cantor-Zassenhaus equal-degree splitting (p odd).
inline void equal_degree(const Poly& f, int k, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(f) == k) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<u64> dist(0, p - 1);
  Int e = (veechdeg::pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(k)) - 1) / 2;
  for (;;) {
    Poly a(static_cast<std::size_t>(deg(f)));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly b = sub(powmod(a, e, f, p), Poly{1}, p);
    Poly g = gcd(f, b, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, k, p, rng, out);
      equal_degree(div(f, g, p), k, p, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors of a monic squarefree f.
inline std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::uint64_t seed = 0x5eed) {
  std::mt19937_64 rng(seed ^ p);
  std::vector<Poly> out;
  for (auto& [g, k] : distinct_degree(f, p)) equal_degree(g, k, p, rng, out);
  return out;
}

inline bool is_squarefree(const Poly& f, u64 p) { return deg(gcd(f, derivative(f, p), p)) == 0; }

}  // namespace veechdeg::modp

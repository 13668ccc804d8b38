#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace veechdeg {

using Int = mpz_class;
using Rational = mpq_class;

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

inline std::size_t bit_length(const Int& a) {
  return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

/// 2^-k as an exact rational.
inline Rational pow2_inverse(unsigned k) {
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  return Rational(Int(1), den);
}

/// Remainder of a modulo m in [0, m) for 0 < m < 2^63.
inline std::uint64_t mod_u64(const Int& a, std::uint64_t m) {
  Int r;
  Int mm(static_cast<unsigned long>(m));
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
  return r.get_ui();
}

inline Int from_u64(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

/// Representative of a in (-m/2, m/2].
inline Int symmetric_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace veechdeg

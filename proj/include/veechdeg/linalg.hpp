#pragma once

#include <algorithm>
#include <vector>

#include "matrix.hpp"
#include "roots.hpp"

namespace veechdeg {

/// Filling pair of multicurves: n horizontal cores, m vertical cores and
/// their intersection matrix X. Optional twist multiplicities a (length n)
/// and b (length m) default to 1.
struct CurveSystem {
  std::size_t n = 0;
  std::size_t m = 0;
  IntMatrix X;
  std::vector<Int> a;
  std::vector<Int> b;

  CurveSystem() = default;
  explicit CurveSystem(IntMatrix x) : n(x.rows()), m(x.cols()), X(std::move(x)), a(n, Int(1)), b(m, Int(1)) {
    validate();
  }

  bool weighted() const {
    for (const auto& x : a)
      if (x != 1) return true;
    for (const auto& x : b)
      if (x != 1) return true;
    return false;
  }

  void validate() const {
    if (X.rows() != n || X.cols() != m || a.size() != n || b.size() != m)
      throw Error(ErrorCode::InvalidArgument, "curve system shape");
    for (std::size_t i = 0; i < n; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < m; ++j) {
        if (X(i, j) < 0) throw Error(ErrorCode::InvalidArgument, "negative intersection");
        any = any || X(i, j) != 0;
      }
      if (!any) throw Error(ErrorCode::InvalidArgument, "horizontal curve meets nothing");
    }
    for (std::size_t j = 0; j < m; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) any = any || X(i, j) != 0;
      if (!any) throw Error(ErrorCode::InvalidArgument, "vertical curve meets nothing");
    }
  }

  IntMatrix Da() const {
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = a[i];
    return d;
  }
  IntMatrix Db() const {
    IntMatrix d(m, m);
    for (std::size_t j = 0; j < m; ++j) d(j, j) = b[j];
    return d;
  }
};

/// XX^T
inline SymIntMatrix gram(const CurveSystem& cs) { return SymIntMatrix(cs.X * cs.X.transpose()); }

/// D_a X D_b X^T, the matrix whose leading eigenvalue is mu^2 for a weighted
/// multitwist (equal to XX^T without weights).
inline IntMatrix twist_gram(const CurveSystem& cs) {
  IntMatrix G(cs.n, cs.n);
  Int acc;
  for (std::size_t i = 0; i < cs.n; ++i)
    for (std::size_t j = 0; j < cs.n; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < cs.m; ++k)
        if (cs.X(i, k) != 0 && cs.X(j, k) != 0) acc += cs.X(i, k) * cs.b[k] * cs.X(j, k);
      G(i, j) = cs.a[i] * acc;
    }
  return G;
}

/// D_b X^T D_a X: same nonzero spectrum as twist_gram, m x m.
inline IntMatrix twist_gram_dual(const CurveSystem& cs) {
  IntMatrix G(cs.m, cs.m);
  Int acc;
  for (std::size_t i = 0; i < cs.m; ++i)
    for (std::size_t j = 0; j < cs.m; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < cs.n; ++k)
        if (cs.X(k, i) != 0 && cs.X(k, j) != 0) acc += cs.X(k, i) * cs.a[k] * cs.X(k, j);
      G(i, j) = cs.b[i] * acc;
    }
  return G;
}

/// Characteristic polynomial of D_a X D_b X^T, computed on the smaller side.
inline IntPoly twist_charpoly(const CurveSystem& cs) {
  if (cs.n <= cs.m) return charpoly(twist_gram(cs));
  return charpoly(twist_gram_dual(cs)) * IntPoly::t().pow(static_cast<unsigned>(cs.n - cs.m));
}

inline SymIntMatrix build_omega(const CurveSystem& cs) {
  IntMatrix o(cs.n + cs.m, cs.n + cs.m);
  o.set_block(0, cs.n, cs.X);
  o.set_block(cs.n, 0, cs.X.transpose());
  return SymIntMatrix(std::move(o));
}

/// Homological action of the multitwist in the core-curve basis:
/// [[I - D_a X D_b X^T, D_a X], [-D_b X^T, I]].
inline IntMatrix build_M(const CurveSystem& cs) {
  const std::size_t n = cs.n, m = cs.m;
  IntMatrix M(n + m, n + m);
  IntMatrix aX = cs.Da() * cs.X;
  IntMatrix bXt = cs.Db() * cs.X.transpose();
  M.set_block(0, 0, IntMatrix::identity(n) - aX * bXt);
  M.set_block(0, n, aX);
  M.set_block(n, 0, -bXt);
  M.set_block(n, n, IntMatrix::identity(m));
  return M;
}

/// Closed-form inverse [[I, -D_a X], [D_b X^T, I - D_b X^T D_a X]].
inline IntMatrix build_M_inverse(const CurveSystem& cs) {
  const std::size_t n = cs.n, m = cs.m;
  IntMatrix M(n + m, n + m);
  IntMatrix aX = cs.Da() * cs.X;
  IntMatrix bXt = cs.Db() * cs.X.transpose();
  M.set_block(0, 0, IntMatrix::identity(n));
  M.set_block(0, n, -aX);
  M.set_block(n, 0, bXt);
  M.set_block(n, n, IntMatrix::identity(m) - bXt * aX);
  return M;
}

/// chi_M divided by (t-1)^(n+m-2r), r = min(n, m): with chi_G(s) = sum c_k s^k
/// for the r x r twist gram, the quotient is sum_k c_k (-1)^(r+k) t^(r-k) (t-1)^(2k).
/// Avoids forming M when one side has many curves.
inline IntPoly charpoly_M_core(const CurveSystem& cs) {
  const int r = static_cast<int>(std::min(cs.n, cs.m));
  IntPoly chi = charpoly(cs.n <= cs.m ? twist_gram(cs) : twist_gram_dual(cs));
  IntPoly t = IntPoly::t(), sq = IntPoly({1, -2, 1});
  IntPoly acc, pw = IntPoly::constant(1);
  for (int k = 0; k <= r; ++k) {
    Int c = chi.coeff(k);
    if ((r + k) % 2) c = -c;
    acc += pw * t.pow(static_cast<unsigned>(r - k)) * c;
    pw *= sq;
  }
  return acc;
}

inline IntPoly charpoly_M(const CurveSystem& cs) {
  const std::size_t r = std::min(cs.n, cs.m);
  return charpoly_M_core(cs) * IntPoly({-1, 1}).pow(static_cast<unsigned>(cs.n + cs.m - 2 * r));
}

inline IntMatrix add_scalar(const IntMatrix& A, const Int& s) {
  IntMatrix r = A;
  for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) += s;
  return r;
}

/// Inertia from the characteristic polynomial: the multiplicity of t gives
/// the nullity, Sturm counts on each squarefree factor give the rest.
inline Inertia inertia_from_charpoly(const IntPoly& chi) {
  Inertia in;
  for (const auto& [f, mult] : squarefree_decomposition(chi)) {
    const auto m = static_cast<std::size_t>(mult);
    if (f == IntPoly::t()) {
      in.n_zero += m;
      continue;
    }
    Rational b = cauchy_bound(f);
    SturmSequence s(f);
    in.n_pos += m * static_cast<std::size_t>(s.count(Rational(0), b));
    in.n_neg += m * static_cast<std::size_t>(s.count(-b, Rational(0)));
  }
  return in;
}

inline Inertia inertia(const SymIntMatrix& A) { return inertia_from_charpoly(charpoly(A.matrix())); }

/// Number of eigenvalues (with multiplicity) of a matrix with real spectrum
/// lying in (lo, hi], read off its characteristic polynomial.
inline std::size_t eigen_count(const IntPoly& chi, const Rational& lo, const Rational& hi) {
  std::size_t c = 0;
  for (const auto& [f, mult] : squarefree_decomposition(chi))
    c += static_cast<std::size_t>(mult) * static_cast<std::size_t>(sturm_count(f, lo, hi));
  return c;
}

/// Inertia of Omega + 2I without forming it: Omega has eigenvalues +-sqrt(nu)
/// for nu an eigenvalue of G, G the smaller of XX^T, X^T X, and |n-m| extra zeros.
/// 2 - sqrt(nu) is negative iff nu > 4 and zero iff nu = 4.
inline Inertia inertia_omega_plus_2I(const CurveSystem& cs) {
  IntMatrix G = cs.n <= cs.m ? cs.X * cs.X.transpose() : cs.X.transpose() * cs.X;
  IntPoly chi = charpoly(G);
  Inertia in;
  Rational big = cauchy_bound(chi) + 1;
  in.n_neg = eigen_count(chi, Rational(4), big);
  IntPoly rest = chi;
  in.n_zero = static_cast<std::size_t>(strip_root(rest, Int(4)));
  in.n_pos = cs.n + cs.m - in.n_neg - in.n_zero;
  return in;
}

}  // namespace veechdeg

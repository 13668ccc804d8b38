#pragma once

#include <ostream>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "modular.hpp"
#include "poly.hpp"

namespace veechdeg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
      for (long x : r) a_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    check_same(a, b);
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    check_same(a, b);
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }
  IntMatrix operator-() const {
    IntMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend IntMatrix operator*(const Int& s, const IntMatrix& a) {
    IntMatrix r = a;
    for (auto& x : r.a_) x *= s;
    return r;
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }

  /// Copy of the block [r0, r0+nr) x [c0, c0+nc) placed into this at (i0, j0).
  void set_block(std::size_t i0, std::size_t j0, const IntMatrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  IntMatrix block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
    IntMatrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
    return r;
  }

  /// Remove row i and column i.
  IntMatrix principal_minor_without(std::size_t k) const {
    IntMatrix r(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
        if (j == k) continue;
        r(ri, rj++) = (*this)(i, j);
      }
      ++ri;
    }
    return r;
  }

  std::vector<std::vector<Int>> to_rows() const {
    std::vector<std::vector<Int>> out(rows_, std::vector<Int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  Int max_abs_row_sum() const {
    Int best = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += abs((*this)(i, j));
      if (s > best) best = s;
    }
    return best;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j).get_str();
      os << "]";
    }
    return os << "]";
  }

 private:
  static void check_same(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Symmetric integer matrix; symmetry is checked on construction.
class SymIntMatrix {
 public:
  SymIntMatrix() = default;
  explicit SymIntMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw Error(ErrorCode::InvalidArgument, "matrix is not symmetric");
  }
  SymIntMatrix(std::initializer_list<std::initializer_list<long>> rows) : SymIntMatrix(IntMatrix(rows)) {}

  std::size_t dim() const { return m_.rows(); }
  const Int& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }
  operator const IntMatrix&() const { return m_; }
  friend bool operator==(const SymIntMatrix& a, const SymIntMatrix& b) { return a.m_ == b.m_; }
  friend std::ostream& operator<<(std::ostream& os, const SymIntMatrix& m) { return os << m.m_; }

 private:
  IntMatrix m_;
};

namespace detail {

/// det(tI - A) mod p via reduction to upper Hessenberg form.
inline std::vector<modp::u64> charpoly_mod(const IntMatrix& A, modp::u64 p) {
  using modp::u64;
  const std::size_t n = A.rows();
  std::vector<std::vector<u64>> H(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H[i][j] = mod_u64(A(i, j), p);

  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && H[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(H[piv], H[m]);
      for (std::size_t i = 0; i < n; ++i) std::swap(H[i][piv], H[i][m]);
    }
    u64 inv = modp::inv(H[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      u64 u = modp::mul(H[i][m - 1], inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) H[i][j] = modp::sub(H[i][j], modp::mul(u, H[m][j], p), p);
      for (std::size_t j = 0; j < n; ++j) H[j][m] = modp::add(H[j][m], modp::mul(u, H[j][i], p), p);
    }
  }

  // P_k = charpoly of the leading k x k block.
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> cur(k + 1, 0);
    const auto& prev = P[k - 1];
    u64 hkk = H[k - 1][k - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = modp::add(cur[i + 1], prev[i], p);
      cur[i] = modp::sub(cur[i], modp::mul(hkk, prev[i], p), p);
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = modp::mul(prod, H[i + 1][i], p);
      if (prod == 0) break;
      u64 c = modp::mul(prod, H[i][k - 1], p);
      for (std::size_t j = 0; j < P[i].size(); ++j) cur[j] = modp::sub(cur[j], modp::mul(c, P[i][j], p), p);
    }
    P[k] = std::move(cur);
  }
  return P[n];
}

}  // namespace detail

/// det(tI - A) by multimodular Hessenberg reduction and Chinese remaindering.
/// Coefficients are bounded by (1 + R)^n, R the largest absolute row sum.
inline IntPoly charpoly(const IntMatrix& A) {
  if (!A.is_square()) throw Error(ErrorCode::InvalidArgument, "charpoly of non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return IntPoly::constant(1);
  Int bound = veechdeg::pow(A.max_abs_row_sum() + 1, static_cast<unsigned long>(n));
  Int need = 2 * bound + 1;
  std::vector<Int> coef(n + 1, Int(0));
  Int M = 1;
  for (modp::u64 p : modp::primes31()) {
    if (M > need) break;
    auto r = detail::charpoly_mod(A, p);
    Int pz = from_u64(p);
    Int minv;  // M^-1 mod p
    mpz_invert(minv.get_mpz_t(), M.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i <= n; ++i) {
      // Garner step: coef += M * ((r - coef) * M^-1 mod p)
      Int diff = from_u64(r[i]) - coef[i];
      Int t = diff * minv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
      coef[i] += M * t;
    }
    M *= pz;
  }
  if (M <= need) throw Error(ErrorCode::InternalInconsistency, "charpoly: ran out of primes");
  for (auto& c : coef) c = symmetric_mod(c, M);
  return IntPoly(std::move(coef));
}

/// det(tI - A) by fraction-free Bareiss elimination over Z[t].
inline IntPoly charpoly_bareiss(const IntMatrix& A) {
  if (!A.is_square()) throw Error(ErrorCode::InvalidArgument, "charpoly of non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return IntPoly::constant(1);
  std::vector<std::vector<IntPoly>> M(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = (i == j ? IntPoly::t() : IntPoly{}) - IntPoly::constant(A(i, j));
  IntPoly prev = IntPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && M[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(M[piv], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = IntPoly{};
    }
    prev = M[k][k];
  }
  IntPoly d = M[n - 1][n - 1];
  return negate ? -d : d;
}

struct Inertia {
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t n_zero = 0;

  long signature() const { return static_cast<long>(n_pos) - static_cast<long>(n_neg); }
  std::size_t nullity() const { return n_zero; }
  std::size_t dim() const { return n_pos + n_neg + n_zero; }
  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.n_pos == b.n_pos && a.n_neg == b.n_neg && a.n_zero == b.n_zero;
  }
};

}  // namespace veechdeg

#include <gtest/gtest.h>

#include <random>

#include <veechdeg/linalg.hpp>

using namespace veechdeg;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_filling_X(std::mt19937_64& rng, std::size_t n, std::size_t m, long hi) {
  IntMatrix X = random_matrix(rng, n, m, 0, hi);
  for (std::size_t i = 0; i < n; ++i) X(i, i % m) += 1;
  for (std::size_t j = 0; j < m; ++j) X(j % n, j) += 1;
  return X;
}

SymIntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound) {
  IntMatrix A = random_matrix(rng, n, n, -bound, bound);
  return SymIntMatrix(A + A.transpose());
}

// Leibniz expansion of det(tI - A) over permutations; oracle for small n.
IntPoly charpoly_leibniz(const IntMatrix& A) {
  const std::size_t n = A.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  IntPoly total;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    IntPoly term = IntPoly::constant(inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i)
      term *= (i == perm[i] ? IntPoly::t() : IntPoly{}) - IntPoly::constant(A(i, perm[i]));
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(IntMatrix{{3}}), IntPoly({-3, 1}));
  IntMatrix A{{4, 1, 1}, {1, 1, 0}, {1, 0, 3}};
  IntPoly t = IntPoly::t();
  IntPoly expect = (t - IntPoly{4}) * (t - IntPoly{1}) * (t - IntPoly{3}) - (t - IntPoly{3}) - (t - IntPoly{1});
  EXPECT_EQ(charpoly(A), expect);
  EXPECT_EQ(charpoly_bareiss(A), expect);

  IntMatrix ones(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) ones(i, j) = 1;
  EXPECT_EQ(charpoly(ones), t.pow(3) * (t - IntPoly{4}));
}

TEST(Charpoly, AgreesWithOracles) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + rng() % 6;
    IntMatrix A = random_matrix(rng, n, n, -9, 9);
    IntPoly c = charpoly(A);
    EXPECT_EQ(c, charpoly_bareiss(A));
    EXPECT_EQ(c, charpoly_leibniz(A));
    EXPECT_EQ(c.degree(), static_cast<int>(n));
    EXPECT_EQ(c.lead(), 1);
  }
  // larger entries exercise several CRT primes
  for (int it = 0; it < 10; ++it) {
    std::size_t n = 4 + rng() % 8;
    IntMatrix A = random_matrix(rng, n, n, -100000, 100000);
    EXPECT_EQ(charpoly(A), charpoly_bareiss(A));
  }
  // zero pivots in the first column
  IntMatrix Z{{0, 0, 1}, {0, 0, 2}, {3, 4, 0}};
  EXPECT_EQ(charpoly(Z), charpoly_leibniz(Z));
  EXPECT_EQ(charpoly_bareiss(Z), charpoly_leibniz(Z));
}

TEST(OmegaAndM, Examples) {
  CurveSystem c1(IntMatrix{{1}});
  EXPECT_EQ(build_M(c1), (IntMatrix{{0, 1}, {-1, 1}}));
  CurveSystem c3(IntMatrix{{3}});
  EXPECT_EQ(build_M(c3), (IntMatrix{{-8, 3}, {-3, 1}}));
  CurveSystem c2(IntMatrix{{2}});
  EXPECT_EQ(build_omega(c2).matrix(), (IntMatrix{{0, 2}, {2, 0}}));
}

TEST(OmegaAndM, SquareRootIdentityOnRandomX) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
    CurveSystem cs(random_filling_X(rng, n, m, 5));
    IntMatrix M = build_M(cs), Mi = build_M_inverse(cs);
    IntMatrix I = IntMatrix::identity(n + m);
    EXPECT_EQ(M * Mi, I);
    EXPECT_EQ(Mi * M, I);
    IntMatrix O = build_omega(cs).matrix();
    EXPECT_EQ(O * O, Int(2) * I - M - Mi);
  }
}

TEST(OmegaAndM, EigenvalueCorrespondence) {
  // chi_M(t) = (t-1)^(m-n) * sum_k a_k (-1)^(n+k) t^(n-k) (t-1)^(2k) with
  // chi_G(s) = sum a_k s^k, i.e. mu^2 = 2 - lambda - 1/lambda.
  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 1 + rng() % 3, m = n + rng() % 3;
    CurveSystem cs(random_filling_X(rng, n, m, 4));
    IntPoly chiG = charpoly(gram(cs).matrix());
    IntPoly t = IntPoly::t(), tm1 = IntPoly({-1, 1});
    IntPoly acc;
    for (int k = 0; k <= static_cast<int>(n); ++k) {
      Int sgn = ((static_cast<int>(n) + k) % 2) ? -1 : 1;
      acc += chiG.coeff(k) * sgn * t.pow(static_cast<unsigned>(static_cast<int>(n) - k)) * tm1.pow(static_cast<unsigned>(2 * k));
    }
    acc *= tm1.pow(static_cast<unsigned>(m - n));
    EXPECT_EQ(charpoly(build_M(cs)), acc);
  }
}

TEST(OmegaAndM, GramSideCharpoly) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
    CurveSystem cs(random_filling_X(rng, n, m, 4));
    if (it % 2) {
      for (auto& x : cs.a) x = 1 + static_cast<long>(rng() % 3);
      for (auto& x : cs.b) x = 1 + static_cast<long>(rng() % 3);
    }
    EXPECT_EQ(charpoly_M(cs), charpoly(build_M(cs)));
    EXPECT_EQ(twist_charpoly(cs), charpoly(cs.Da() * cs.X * cs.Db() * cs.X.transpose()));
    EXPECT_EQ(charpoly(twist_gram_dual(cs)), charpoly(cs.Db() * cs.X.transpose() * cs.Da() * cs.X));
  }
}

TEST(Inertia, Examples) {
  CurveSystem c1(IntMatrix{{1}});
  auto O1 = SymIntMatrix(add_scalar(build_omega(c1).matrix(), 2));
  EXPECT_EQ(inertia(O1), (Inertia{2, 0, 0}));
  CurveSystem c3(IntMatrix{{3}});
  auto O3 = SymIntMatrix(add_scalar(build_omega(c3).matrix(), 2));
  EXPECT_EQ(inertia(O3), (Inertia{1, 1, 0}));
  IntMatrix path(5, 5);
  for (std::size_t i = 0; i + 1 < 5; ++i) path(i, i + 1) = path(i + 1, i) = 1;
  Inertia pd = inertia(SymIntMatrix(add_scalar(path, 2)));
  EXPECT_EQ(pd, (Inertia{5, 0, 0}));
  EXPECT_EQ(inertia(SymIntMatrix{{0, 0}, {0, 0}}), (Inertia{0, 0, 2}));
}

TEST(Inertia, FastOmegaRouteMatchesGeneric) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
    CurveSystem cs(random_filling_X(rng, n, m, 3));
    Inertia fast = inertia_omega_plus_2I(cs);
    Inertia slow = inertia(SymIntMatrix(add_scalar(build_omega(cs).matrix(), 2)));
    EXPECT_EQ(fast, slow);
  }
  // eigenvalue 4 of XX^T gives a kernel vector of Omega + 2I
  CurveSystem c2(IntMatrix{{2}});
  EXPECT_EQ(inertia_omega_plus_2I(c2), (Inertia{1, 0, 1}));
}

TEST(Inertia, SumsToDimensionAndInterlaces) {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + rng() % 5;
    SymIntMatrix A = random_symmetric(rng, n, 4);
    Inertia a = inertia(A);
    EXPECT_EQ(a.dim(), n);
    std::size_t k = rng() % n;
    Inertia b = inertia(SymIntMatrix(A.matrix().principal_minor_without(k)));
    EXPECT_LE(b.n_pos, a.n_pos);
    EXPECT_LE(a.n_pos, b.n_pos + 1);
    EXPECT_LE(b.n_neg, a.n_neg);
    EXPECT_LE(a.n_neg, b.n_neg + 1);
  }
}

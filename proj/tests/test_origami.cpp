#include <gtest/gtest.h>

#include <random>

#include <veechdeg/constructions.hpp>
#include <veechdeg/origami.hpp>

using namespace veechdeg;

namespace {

Origami random_relabel(const Origami& o, std::mt19937_64& rng) {
  Perm pi(o.n_squares());
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  return o.relabel(pi);
}

// Row multisets, sorted; invariant under relabelling squares.
std::vector<std::vector<Int>> sorted_entries(const IntMatrix& X) {
  std::vector<std::vector<Int>> rows = X.to_rows();
  for (auto& r : rows) std::sort(r.begin(), r.end());
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<Origami> sample_surfaces() {
  std::vector<Origami> out;
  out.push_back(Origami({0}, {0}));
  out.push_back(build_generic({2, Stratum({1, 1}), 4, {2}}));
  out.push_back(build_generic({4, Stratum({3, 1, 1, 1}), 4, {2, 3, 1}}));
  out.push_back(build_spin0_min_deg2(5));
  out.push_back(build_spin0_min(5, 3, {2, 3}));
  out.push_back(build_hyp({1, 1, 2, false}));
  out.push_back(build_hyp({1, 2, 3, true}));
  out.push_back(build_hyp_staircase_long(4, 2));
  out.push_back(build_spin0_multi(4, Stratum({2, 2, 2}), 4, {2, 3, 1}));
  return out;
}

}  // namespace

TEST(Origami, Construction) {
  Origami t({0}, {0});
  EXPECT_EQ(t.n_squares(), 1u);
  Origami t2({1, 0}, {0, 1});
  EXPECT_EQ(cylinders(t2, Direction::horizontal).cylinders.size(), 1u);
  EXPECT_EQ(cylinders(t2, Direction::horizontal).cylinders[0].circumference, 2);
  try {
    Origami bad({0, 1}, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConnected);
  }
  try {
    Origami bad({0, 0}, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPermutation);
  }
  EXPECT_THROW(Origami({0, 1}, {0}), Error);
}

TEST(Origami, TorusInvariants) {
  Origami t({0}, {0});
  EXPECT_TRUE(stratum(t).orders.empty());
  EXPECT_EQ(genus(t), 1);
  EXPECT_EQ(t.vertices().size(), 1u);
  auto h = cylinders(t, Direction::horizontal);
  ASSERT_EQ(h.cylinders.size(), 1u);
  EXPECT_EQ(h.cylinders[0].circumference, 1);
  EXPECT_EQ(h.cylinders[0].height, 1);
  EXPECT_EQ(curve_system(t).X, (IntMatrix{{1}}));
  EXPECT_EQ(curve_system(t, CylinderMode::maximal).X, (IntMatrix{{1}}));
}

TEST(Origami, HypStrataAndGenus) {
  Origami x = build_hyp({1, 1, 2, false});
  EXPECT_EQ(x.n_squares(), 8u);
  EXPECT_EQ(genus(x), 4);
  EXPECT_EQ(stratum(x), Stratum({3, 3}));
  Origami y = build_hyp({1, 2, 2, true});
  EXPECT_EQ(stratum(y), Stratum({2 * 5 - 2}));
}

TEST(Origami, GenericGenus) {
  Origami o = build_generic({3, Stratum({2, 2}), 3, {1, 2}});
  EXPECT_EQ(genus(o), 3);
  EXPECT_EQ(1 + stratum(o).total() / 2, 3);
}

TEST(Origami, CylinderCounts) {
  // generic: one long horizontal cylinder plus the inserted pieces
  Origami o = build_generic({2, Stratum({1, 1}), 4, {2}});
  auto H = cylinders(o, Direction::horizontal);
  int long_rows = 0;
  for (auto& c : H.cylinders)
    if (c.circumference == 16) ++long_rows;
  EXPECT_EQ(long_rows, 1);
  // staircase steps: circumference-2 horizontal cylinders of height 1
  Origami s = build_hyp_staircase_long(5, 2);
  int steps = 0;
  for (auto& c : cylinders(s, Direction::horizontal).cylinders)
    if (c.circumference == 2) {
      ++steps;
      EXPECT_EQ(c.height, 1);
    }
  EXPECT_EQ(steps, 3);
}

TEST(Origami, CurveSystemExamples) {
  Origami o = build_generic({2, Stratum({1, 1}), 3, {2}});
  EXPECT_EQ(gram(curve_system(o)), (SymIntMatrix{{9, 1}, {1, 2}}));
  Origami s = build_hyp_staircase_long(4, 3);
  EXPECT_EQ(gram(curve_system(s)), long_staircase_gram(4, 3));
}

TEST(Origami, Properties) {
  std::mt19937_64 rng(99);
  for (const Origami& o : sample_surfaces()) {
    Stratum s = stratum(o);
    int g = genus(o);
    EXPECT_EQ(s.total() % 2, 0);
    EXPECT_EQ(s.total(), 2 * g - 2);
    for (auto dir : {Direction::horizontal, Direction::vertical}) {
      long total = 0;
      for (auto& c : cylinders(o, dir).cylinders) {
        EXPECT_EQ(static_cast<std::size_t>(c.circumference) * static_cast<std::size_t>(c.height), c.squares.size());
        total += c.circumference * c.height;
      }
      EXPECT_EQ(total, static_cast<long>(o.n_squares()));
    }
    for (auto mode : {CylinderMode::unit, CylinderMode::maximal}) {
      CurveSystem cs = curve_system(o, mode);
      auto H = mode == CylinderMode::unit ? unit_cylinders(o, Direction::horizontal) : cylinders(o, Direction::horizontal);
      auto V = mode == CylinderMode::unit ? unit_cylinders(o, Direction::vertical) : cylinders(o, Direction::vertical);
      Int weighted = 0;
      for (std::size_t i = 0; i < cs.n; ++i) {
        Int row = 0;
        for (std::size_t j = 0; j < cs.m; ++j) {
          row += cs.X(i, j);
          weighted += cs.X(i, j) * H.cylinders[i].height * V.cylinders[j].height;
        }
        Int across = 0;
        for (std::size_t j = 0; j < cs.m; ++j) across += cs.X(i, j) * V.cylinders[j].height;
        EXPECT_EQ(across, H.cylinders[i].circumference);
      }
      EXPECT_EQ(weighted, Int(static_cast<unsigned long>(o.n_squares())));
    }
    for (int rep = 0; rep < 3; ++rep) {
      Origami r = random_relabel(o, rng);
      EXPECT_EQ(stratum(r), s);
      EXPECT_EQ(genus(r), g);
      CurveSystem a = curve_system(o), b = curve_system(r);
      EXPECT_EQ(sorted_entries(a.X), sorted_entries(b.X));
      EXPECT_EQ(charpoly(gram(a).matrix()), charpoly(gram(b).matrix()));
    }
  }
}

TEST(Origami, SquareTiledWeights) {
  Origami o = build_generic({2, Stratum({1, 1}), 3, {2}});
  CurveSystem cs = square_tiled_weights(o, 2);
  IntMatrix G = twist_gram(cs);
  Int Lh = 1, Lv = 1;
  for (auto& c : cycles(o.sigma_h())) Lh = lcm(Lh, Int(static_cast<unsigned long>(c.size())));
  for (auto& c : cycles(o.sigma_v())) Lv = lcm(Lv, Int(static_cast<unsigned long>(c.size())));
  Int expect = 4 * Lh * Lv;
  for (std::size_t i = 0; i < cs.n; ++i) {
    Int rs = 0;
    for (std::size_t j = 0; j < cs.n; ++j) rs += G(i, j);
    EXPECT_EQ(rs, expect);  // constant row sums: the PF eigenvector is all ones
  }
}

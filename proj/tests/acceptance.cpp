// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <veechdeg/factor.hpp>
#include <veechdeg/realize.hpp>

using namespace veechdeg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 5) msg_ << (msg_.tellp() ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + " | " + std::to_string(failures_) + " failures: " + msg_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream msg_;
};

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

/// Every builder output of genus at most 4 over a small parameter grid.
std::vector<std::pair<std::string, Origami>> builder_outputs_g4() {
  std::vector<std::pair<std::string, Origami>> out;
  auto add = [&](const std::string& fam, const FamilyParams& p) {
    if (auto o = try_build(fam, p)) {
      std::string tag = fam;
      for (const auto& [k, v] : p) tag += " " + k + "=" + v;
      out.emplace_back(tag, *o);
    }
  };
  for (int g = 2; g <= 4; ++g)
    for (const Stratum& s : strata_of_genus(g)) {
      for (int d = 2; d <= g; ++d)
        for (int y = 3; y <= 7; ++y)
          add("generic", {{"g", std::to_string(g)}, {"stratum", s.to_string()}, {"y", std::to_string(y)},
                          {"ys", join(detail::generic_heights(g, s, d))}});
      if (s.all_even() && s.orders.size() > 1)
        for (int d = 2; d <= g; ++d)
          for (int y = 2; y <= 6; ++y)
            add("spin0_multi", {{"g", std::to_string(g)}, {"stratum", s.to_string()}, {"y", std::to_string(y)},
                                {"ys", join(detail::distinct_heights(g - 1, d - 1))}});
    }
  add("spin0_min_deg2", {{"g", "4"}});
  for (int y = 2; y <= 6; ++y)
    for (const char* ys : {"1", "2", "3"}) add("spin0_min", {{"g", "4"}, {"y", std::to_string(y)}, {"ys", ys}});
  for (int y = 3; y <= 6; ++y) add("spin0_min_compact", {{"g", "4"}, {"ys", "2," + std::to_string(y) + ",1"}});
  for (int n = 0; n <= 2; ++n)
    for (int k = 0; n + k + 2 <= 4; ++k)
      for (int y = 2; y <= 5; ++y) {
        FamilyParams p{{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"y", std::to_string(y)}};
        add("hyp_X", p);
        if (n > 0) add("hyp_Y", p);
      }
  for (int g = 2; g <= 4; ++g)
    for (int y = 2; y <= 5; ++y) add("hyp_staircase_long", {{"g", std::to_string(g)}, {"y", std::to_string(y)}});
  return out;
}

Outcome criterion1() {
  Check c;
  IntPoly t = IntPoly::t();
  for (int g = 4; g <= 8; ++g) {
    // the displayed matrix, written out entry by entry
    IntMatrix A(static_cast<std::size_t>(g + 1), static_cast<std::size_t>(g + 1));
    A(0, 0) = g + 2;
    for (std::size_t j = 1; j <= static_cast<std::size_t>(g); ++j) A(0, j) = A(j, 0) = j <= 2 ? 2 : 1;
    for (std::size_t i = 1; i <= 2; ++i)
      for (std::size_t j = 1; j <= 2; ++j) A(i, j) = 1;
    for (std::size_t i = 3; i <= static_cast<std::size_t>(g); ++i) A(i, i) = 1;
    IntPoly quad({2 * g + 2, -(g + 5), 1});
    IntPoly want = t.pow(2) * IntPoly({-1, 1}).pow(static_cast<unsigned>(g - 3)) * quad;
    c.expect(charpoly(A) == want, "displayed matrix g=" + std::to_string(g));
    Origami o = build_spin0_min_deg2(g);
    c.expect(charpoly(gram(curve_system(o)).matrix()) == want, "built surface g=" + std::to_string(g));
    c.expect(trace_field_degree(curve_system(o)).minpoly == quad, "minpoly g=" + std::to_string(g));
    Int disc = quad.coeff(1) * quad.coeff(1) - 4 * quad.coeff(2) * quad.coeff(0);
    c.expect(disc == g * g + 2 * g + 17, "discriminant g=" + std::to_string(g));
  }
  for (std::uint64_t g = 4; g <= 1000000; ++g) {
    std::uint64_t D = g * g + 2 * g + 17, r = isqrt(D);
    if (r * r == D) c.expect(false, "square discriminant at g=" + std::to_string(g));
  }
  return c.done("degree-two family charpoly for g=4..8, discriminant g^2+2g+17 non-square for 4 <= g <= 10^6");
}

Outcome criterion2() {
  Check c;
  std::mt19937 rng(20260101);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 200; ++trial) {
    const int g = uni(2, 6), y = uni(2, 7);
    const auto l = static_cast<std::size_t>(uni(0, g - 1));
    std::vector<int> ys;
    for (int i = 0; i < g - 1; ++i) ys.push_back(uni(1, 5));
    std::vector<Int> coef;
    int a = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      coef.push_back(i < l ? Int(1) : Int(ys[i]));
      if (i >= l) a += ys[i] - 1;
    }
    IntPoly lhs = charpoly(generic_gram(y, ys, l).matrix());
    IntPoly rhs = generic_charpoly_formula(Int(y * y), ys, coef, a);
    c.expect(lhs == rhs, "g=" + std::to_string(g) + " y=" + std::to_string(y) + " ys=" + join(ys) +
                             " l=" + std::to_string(l));
  }
  return c.done("closed-form charpoly of the generic matrix on 200 random tuples");
}

IntMatrix omega_squared_identity_gap(const CurveSystem& cs) {
  IntMatrix W = build_omega(cs).matrix();
  IntMatrix I = IntMatrix::identity(cs.n + cs.m);
  IntMatrix lhs = W * W;
  IntMatrix rhs = I + I - build_M(cs) - build_M_inverse(cs);
  return lhs - rhs;
}

bool is_zero(const IntMatrix& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0) return false;
  return true;
}

Outcome criterion3() {
  Check c;
  auto outputs = builder_outputs_g4();
  for (const auto& [tag, o] : outputs) {
    CurveSystem cs = curve_system(o);
    c.expect(is_zero(omega_squared_identity_gap(cs)), tag);
    c.expect(build_M(cs) * build_M_inverse(cs) == IntMatrix::identity(cs.n + cs.m), "inverse " + tag);
  }
  std::mt19937 rng(7);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int made = 0;
  while (made < 20) {
    const auto n = static_cast<std::size_t>(uni(1, 5)), m = static_cast<std::size_t>(uni(1, 5));
    IntMatrix X(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) X(i, j) = uni(0, 5);
    CurveSystem cs;
    try {
      cs = CurveSystem(X);
    } catch (const Error&) {
      continue;  // an empty row or column
    }
    ++made;
    c.expect(is_zero(omega_squared_identity_gap(cs)), "random X #" + std::to_string(made));
  }
  return c.done("Omega^2 = 2I - M - M^-1 on " + std::to_string(outputs.size()) +
                " builder outputs (g <= 4) and 20 random X");
}

Outcome criterion4() {
  Check c;
  int fired = 0;
  auto outputs = builder_outputs_g4();
  for (const auto& [tag, o] : outputs) {
    CurveSystem cs = curve_system(o);
    TraceField tf = trace_field_degree(cs);
    if (!nonsplitting_criterion(cs, tf.degree)) continue;
    ++fired;
    c.expect(stretch_degree_direct(cs).degree == 2 * tf.degree, tag);
  }
  c.expect(fired > 0, "criterion never fired");
  return c.done("criterion fired on " + std::to_string(fired) + " of " + std::to_string(outputs.size()) +
                " builder outputs; direct stretch degree = 2 x trace degree on each");
}

std::vector<CellResult> g4_sweep() {
  static std::vector<CellResult> cache = sweep(all_cells(4), 100, 1);
  return cache;
}

Outcome criterion5() {
  Check c;
  auto res = g4_sweep();
  int ok = 0;
  for (const auto& r : res) {
    if (r.ok) ++ok;
    c.expect(r.ok, "g=" + std::to_string(r.cell.g) + " " + r.cell.stratum.display() + " " +
                       to_string(r.cell.component) + " d=" + std::to_string(r.cell.d) + ": " + r.message);
    if (r.ok) c.expect(r.realization->certificate.trace_degree == r.cell.d, "degree mismatch");
  }
  return c.done(std::to_string(ok) + "/" + std::to_string(res.size()) +
                " cells (stratum, component, d) with g <= 4 realized within y-budget 100");
}

Outcome criterion6() {
  Check c;
  int guaranteed = 0, even_everywhere = 0, ok_cells = 0;
  for (const auto& r : g4_sweep()) {
    if (!r.ok) continue;
    ++ok_cells;
    const Realization& z = *r.realization;
    if (z.certificate.stretch_degree == 2 * r.cell.d) ++even_everywhere;
    if (!z.criterion_guaranteed) continue;
    ++guaranteed;
    std::string cell = r.cell.stratum.display() + " " + to_string(r.cell.component) + " d=" + std::to_string(r.cell.d);
    c.expect(z.certificate.criterion_applies, "criterion off at " + cell);
    c.expect(z.certificate.stretch_degree == 2 * r.cell.d, "stretch degree at " + cell);
  }
  c.expect(guaranteed > 0, "no guaranteed cells");
  return c.done("stretch degree 2d with the criterion on all " + std::to_string(guaranteed) +
                " cells on guaranteed routes (" + std::to_string(even_everywhere) + "/" + std::to_string(ok_cells) +
                " cells overall have stretch degree 2d)");
}

Outcome criterion7() {
  Check c;
  int checked = 0;
  for (int g = 2; g <= 6; ++g)
    for (const Stratum& s : strata_of_genus(g)) {
      if (!s.all_even()) continue;
      std::vector<int> ys;
      for (int i = 1; i < g; ++i) ys.push_back(i);
      std::optional<Origami> gen;
      for (int y = 3; !gen && y <= 12; ++y)
        gen = try_build("generic", {{"g", std::to_string(g)}, {"stratum", s.to_string()}, {"y", std::to_string(y)},
                                    {"ys", join(ys)}});
      c.expect(gen && spin_parity(*gen) == 1, "generic " + s.display());
      ++checked;
      if (s.orders.size() > 1) {
        std::optional<Origami> base;
        for (int y = 2; !base && y <= 12; ++y)
          base = try_build("spin0_multi", {{"g", std::to_string(g)}, {"stratum", s.to_string()},
                                           {"y", std::to_string(y)}, {"ys", join(ys)}});
        c.expect(base && spin_parity(*base) == 0, "spin0_multi " + s.display());
        ++checked;
      }
    }
  for (int g = 4; g <= 6; ++g) {
    std::vector<int> ys(static_cast<std::size_t>(g - 3), 1);
    ys.back() = 2;
    int built = 0;
    for (int y = 2; y <= 12 && built < 3; ++y) {
      auto o = try_build("spin0_min", {{"g", std::to_string(g)}, {"y", std::to_string(y)}, {"ys", join(ys)}});
      if (!o) continue;
      ++built;
      c.expect(spin_parity(*o) == 0, "spin0_min g=" + std::to_string(g) + " y=" + std::to_string(y));
      ++checked;
    }
    c.expect(built == 3, "spin0_min g=" + std::to_string(g) + " not admissible");
  }
  return c.done("spin parity 1 for generic all-even surfaces, 0 for the two spin-0 templates (" +
                std::to_string(checked) + " surfaces, g <= 6)");
}

Outcome criterion8() {
  Check c;
  int hyp = 0, gen = 0;
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k)
      for (int y = 2; y <= 4; ++y)
        for (bool collapse : {false, true}) {
          if (collapse && n == 0) continue;
          StaircaseParams p{n, k, y, collapse};
          Origami o = build_hyp(p);
          InvolutionResult inv = hyperelliptic_involution(o);
          c.expect(inv.hyperelliptic && inv.fixed_points == 2 * p.genus() + 2,
                   (collapse ? "Y " : "X ") + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(y));
          ++hyp;
        }
  for (int g = 3; g <= 5; ++g)
    for (const Stratum& s : strata_of_genus(g))
      for (int d = 2; d <= g; ++d)
        for (int y : {5, 6}) {
          auto o = try_build("generic", {{"g", std::to_string(g)}, {"stratum", s.to_string()},
                                         {"y", std::to_string(y)}, {"ys", join(detail::generic_heights(g, s, d))}});
          if (!o) continue;
          c.expect(!hyperelliptic_involution(*o).hyperelliptic, "generic " + s.display());
          ++gen;
        }
  return c.done(std::to_string(hyp) + " staircases with exactly 2g+2 fixed points (n,k <= 3, 2 <= y <= 4); " +
                std::to_string(gen) + " generic surfaces (g = 3..5) with no hyperelliptic involution");
}

/// Roots of p and q (squarefree, coprime) alternate p, q, p, ..., p.
bool strictly_interlaced(const IntPoly& p, const IntPoly& q) {
  if (gcd(p, q).degree() != 0) return false;
  if (squarefree_part(p).degree() != p.degree() || squarefree_part(q).degree() != q.degree()) return false;
  for (int bits = 8; bits <= 256; bits *= 2) {
    auto rp = isolate_real_roots(p, pow2_inverse(bits));
    auto rq = isolate_real_roots(q, pow2_inverse(bits));
    if (static_cast<int>(rp.size()) != p.degree() || static_cast<int>(rq.size()) != q.degree()) return false;
    if (rp.size() != rq.size() + 1) return false;
    std::vector<const RootInterval*> seq;
    for (std::size_t i = 0; i < rp.size(); ++i) {
      seq.push_back(&rp[i]);
      if (i < rq.size()) seq.push_back(&rq[i]);
    }
    bool separated = true;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) separated = separated && seq[i]->hi < seq[i + 1]->lo;
    if (separated) return true;
  }
  return false;
}

Outcome criterion9() {
  Check c;
  for (int alpha : {2, 5, 6})
    for (int k = 1; k <= 8; ++k) {
      IntPoly p = charpoly(staircase_B(alpha, k).matrix());
      IntPoly q = charpoly(staircase_B(alpha, k - 1).matrix());
      c.expect(strictly_interlaced(p, q), "alpha=" + std::to_string(alpha) + " k=" + std::to_string(k));
    }
  for (int alpha : {2, 5, 6, 9, 10}) {
    IntPoly chi = charpoly(hyp_gram(alpha, 0, 1).matrix());
    IntPoly want({alpha - 1, -(alpha + 1), 1});
    c.expect(chi == want, "charpoly alpha=" + std::to_string(alpha));
    RootInterval r = isolate_largest_real_root(chi);
    c.expect(r.poly == want, "minpoly alpha=" + std::to_string(alpha));
    double closed = (alpha + 1 + std::sqrt(static_cast<double>(alpha * alpha - 2 * alpha + 5))) / 2;
    c.expect(Rational(closed) > r.lo - Rational(1, 1 << 20) && Rational(closed) < r.hi + Rational(1, 1 << 20),
             "root alpha=" + std::to_string(alpha));
    c.expect((alpha + 1) * (alpha + 1) - 4 * (alpha - 1) == alpha * alpha - 2 * alpha + 5, "discriminant");
  }
  return c.done("strict interlacing of B_k and B_(k-1) for k <= 8, alpha in {2,5,6}; mu^2 minpoly t^2-(alpha+1)t+(alpha-1)");
}

Outcome criterion10() {
  Check c;
  std::mt19937 rng(424242);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int primes[] = {2, 3, 5, 7};
  // Eisenstein at p, hence irreducible over Q
  auto eisenstein = [&]() {
    const int p = primes[uni(0, 3)], deg = uni(1, 10);
    std::vector<Int> co(static_cast<std::size_t>(deg + 1));
    int lead;
    do lead = uni(1, 50);
    while (lead % p == 0);
    co.back() = lead;
    for (int i = 1; i < deg; ++i) co[static_cast<std::size_t>(i)] = p * uni(-50 / p, 50 / p);
    int k;
    do k = uni(-50 / p, 50 / p);
    while (k == 0 || k % p == 0);
    co[0] = p * k;
    return IntPoly(co).primitive_part();
  };
  for (int trial = 0; trial < 500; ++trial) {
    const int nf = uni(1, 4);
    std::map<IntPoly, int, bool (*)(const IntPoly&, const IntPoly&)> want(
        [](const IntPoly& a, const IntPoly& b) { return a < b; });
    Int content = uni(1, 6) * (uni(0, 1) ? 1 : -1);
    IntPoly prod = IntPoly::constant(content);
    for (int i = 0; i < nf; ++i) {
      IntPoly f = eisenstein();
      if (f.lead() < 0) f = -f;
      want[f] += 1;
      prod *= f;
    }
    Factorization got = factor_over_integers(prod);
    bool same = got.content == content && got.factors.size() == want.size();
    for (const auto& [f, m] : got.factors) same = same && want.count(f) && want[f] == m;
    c.expect(same && got.expand() == prod, "trial " + std::to_string(trial) + ": " + prod.to_string());
  }
  IntPoly t4 = IntPoly({4, 0, 0, 0, 1});
  Factorization f = factor_over_integers(t4);
  c.expect(f.factors.size() == 2 && f.expand() == t4, "t^4+4");
  for (const auto& [g, m] : f.factors)
    c.expect(m == 1 && (g == IntPoly({2, 2, 1}) || g == IntPoly({2, -2, 1})), "t^4+4 factor " + g.to_string());
  return c.done("500 random products of Eisenstein factors (degree <= 10, |coeff| <= 50) refactor exactly; t^4+4 = (t^2+2t+2)(t^2-2t+2)");
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << " [" << ms
              << " ms]" << std::endl;
  }
  return failed;
}

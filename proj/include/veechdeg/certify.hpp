#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "factor.hpp"
#include "linalg.hpp"
#include "origami.hpp"
#include "roots.hpp"

namespace veechdeg {

// Degrees: trace field, stretch factor, the nonsplitting criterion.

struct TraceField {
  int degree = 0;
  IntPoly minpoly;   // of mu^2
  RootInterval root;
  IntPoly charpoly;  // of D_a X D_b X^T (XX^T without weights)
};

inline TraceField trace_field_degree(const CurveSystem& cs) {
  TraceField tf;
  tf.charpoly = twist_charpoly(cs);
  tf.root = isolate_largest_real_root(tf.charpoly);
  tf.minpoly = tf.root.poly;
  tf.degree = tf.minpoly.degree();
  return tf;
}

/// mu^2 > 4, certified by a Sturm count on (4, bound].
inline bool is_pseudo_anosov(const CurveSystem& cs) {
  IntPoly chi = twist_charpoly(cs);
  return eigen_count(chi, Rational(4), cauchy_bound(chi) + 1) > 0;
}

/// t^D f((t+1)^2 / t): its roots are the lambda with lambda + 1/lambda + 2
/// a root of f.
inline IntPoly lambda_transform(const IntPoly& f) {
  const int D = f.degree();
  IntPoly t = IntPoly::t(), sq = IntPoly({1, 2, 1});
  IntPoly acc, pw = IntPoly::constant(1);
  for (int k = 0; k <= D; ++k) {
    acc += pw * t.pow(static_cast<unsigned>(D - k)) * f.coeff(k);
    pw *= sq;
  }
  return acc;
}

struct StretchField {
  int degree = 0;
  IntPoly minpoly;
  RootInterval root;
};

/// Leading eigenvalue of -M and its minimal polynomial. The (t+1) powers of
/// chi_{-M} carry nothing, so only the gram-side core is factored. The
/// result is checked against the transform of the trace minimal polynomial.
inline StretchField stretch_degree_direct(const CurveSystem& cs) {
  if (!is_pseudo_anosov(cs)) throw Error(ErrorCode::NotPseudoAnosov, "leading eigenvalue of XX^T is at most 4");
  IntPoly core = charpoly_M_core(cs).reflect();
  StretchField sf;
  sf.root = isolate_largest_real_root(core);
  sf.minpoly = sf.root.poly;
  sf.degree = sf.minpoly.degree();
  if (sf.root.lo < 1) throw Error(ErrorCode::InternalInconsistency, "stretch factor not above 1");
  IntPoly pf = trace_field_degree(cs).minpoly;
  if (!divides(sf.minpoly, lambda_transform(pf)))
    throw Error(ErrorCode::InternalInconsistency, "minimal polynomial of lambda does not divide the transform of " + pf.to_string());
  return sf;
}

/// n+m > sigma + null > n+m-2d for Omega + 2I.
inline bool criterion_from_inertia(const Inertia& in, int d) {
  const long N = static_cast<long>(in.dim());
  const long s = in.signature() + static_cast<long>(in.nullity());
  return N > s && s > N - 2L * d;
}

inline bool nonsplitting_criterion(const CurveSystem& cs, int d) {
  int certified = trace_field_degree(cs).degree;
  if (d != certified)
    throw Error(ErrorCode::DegreeMismatch, "d = " + std::to_string(d) + " but trace degree is " + std::to_string(certified));
  return criterion_from_inertia(inertia_omega_plus_2I(cs), d);
}

/// Coefficients read backwards equal the original (up to sign).
inline bool is_reciprocal(const IntPoly& p) {
  const int D = p.degree();
  bool plus = true, minus = true;
  for (int i = 0; i <= D; ++i) {
    plus = plus && p.coeff(i) == p.coeff(D - i);
    minus = minus && p.coeff(i) == -p.coeff(D - i);
  }
  return plus || minus;
}

struct DegreeCertificate {
  int trace_degree = 0;
  int stretch_degree = 0;
  IntPoly gram_charpoly;
  IntPoly pf_minpoly;
  IntPoly stretch_minpoly;
  Inertia inertia_of_omega_plus_2I;
  bool criterion_applies = false;
  RootInterval pf_root;
  RootInterval stretch_root;
};

/// Both routes to the stretch degree; disagreement is an internal error.
inline DegreeCertificate certify(const CurveSystem& cs) {
  DegreeCertificate c;
  TraceField tf = trace_field_degree(cs);
  c.trace_degree = tf.degree;
  c.gram_charpoly = tf.charpoly;
  c.pf_minpoly = tf.minpoly;
  c.pf_root = tf.root;
  StretchField sf = stretch_degree_direct(cs);
  c.stretch_degree = sf.degree;
  c.stretch_minpoly = sf.minpoly;
  c.stretch_root = sf.root;
  c.inertia_of_omega_plus_2I = inertia_omega_plus_2I(cs);
  c.criterion_applies = criterion_from_inertia(c.inertia_of_omega_plus_2I, c.trace_degree);
  if (c.stretch_degree != c.trace_degree && c.stretch_degree != 2 * c.trace_degree)
    throw Error(ErrorCode::InternalInconsistency, "stretch degree " + std::to_string(c.stretch_degree) +
                                                      " vs trace degree " + std::to_string(c.trace_degree));
  if (c.criterion_applies && c.stretch_degree != 2 * c.trace_degree)
    throw Error(ErrorCode::InternalInconsistency, "criterion holds but the stretch degree is not 2d");
  if (c.criterion_applies && !is_reciprocal(c.stretch_minpoly))
    throw Error(ErrorCode::InternalInconsistency, "minimal polynomial of lambda is not reciprocal");
  return c;
}

// Spin parity.

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline bool bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
inline void flip(Bits& b, std::size_t i) { b[i / 64] ^= std::uint64_t{1} << (i % 64); }
inline void xor_into(Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}
inline int dot(const Bits& a, const Bits& b) {
  int p = 0;
  for (std::size_t i = 0; i < a.size(); ++i) p ^= __builtin_parityll(a[i] & b[i]);
  return p;
}
inline bool zero(const Bits& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

/// Rank of X mod 2.
inline std::size_t rank_mod2(const CurveSystem& cs) {
  const std::size_t words = (cs.m + 63) / 64;
  std::vector<Bits> rows(cs.n, Bits(words, 0));
  for (std::size_t i = 0; i < cs.n; ++i)
    for (std::size_t j = 0; j < cs.m; ++j)
      if (mpz_odd_p(cs.X(i, j).get_mpz_t())) flip(rows[i], j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cs.m && rank < cs.n; ++col) {
    std::size_t piv = rank;
    while (piv < cs.n && !bit(rows[piv], col)) ++piv;
    if (piv == cs.n) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < cs.n; ++i)
      if (i != rank && bit(rows[i], col)) xor_into(rows[i], rows[rank]);
    ++rank;
  }
  return rank;
}

}  // namespace detail

namespace detail {

/// A mod-2 class with its value of q. The pairing of two classes is
/// dot(left of one, right of the other); for core curves left = right.
struct SpinVector {
  Bits left;
  Bits right;
  int q = 1;
};

/// Arf invariant by symplectic Gram-Schmidt over GF(2): take the first
/// vector with a partner (lowest index), record q(u) q(v), project the rest,
/// drop vectors in the radical. Throws unless exactly g pairs are found.
inline int arf_invariant(std::vector<SpinVector> vec, int g) {
  auto pair = [](const SpinVector& a, const SpinVector& b) { return dot(a.left, b.right); };
  int arf = 0, pairs = 0;
  while (pairs < g && !vec.empty()) {
    std::size_t partner = 0;
    for (std::size_t k = 1; k < vec.size(); ++k)
      if (pair(vec[k], vec[0])) {
        partner = k;
        break;
      }
    if (partner == 0) {
      vec.erase(vec.begin());
      continue;
    }
    SpinVector u = vec[0], v = vec[partner];
    arf ^= u.q & v.q;
    ++pairs;
    vec.erase(vec.begin() + static_cast<long>(partner));
    vec.erase(vec.begin());
    std::vector<SpinVector> keep;
    for (auto& w : vec) {
      int bu = pair(w, u), bv = pair(w, v);
      // w -> w + B(w,v) u + B(w,u) v, with q(a+b) = q(a) + q(b) + B(a,b)
      if (bv) {
        xor_into(w.left, u.left);
        xor_into(w.right, u.right);
        w.q ^= u.q ^ bu;
      }
      if (bu) {
        xor_into(w.left, v.left);
        xor_into(w.right, v.right);
        w.q ^= v.q;
      }
      if (!zero(w.left) || !zero(w.right)) keep.push_back(std::move(w));
    }
    vec = std::move(keep);
  }
  if (pairs != g) throw Error(ErrorCode::CurvesDoNotGenerate, "found " + std::to_string(pairs) + " symplectic pairs, expected " + std::to_string(g));
  return arf;
}

/// Closed paths through square centres: moves 0 = right, 1 = up, 2 = left,
/// 3 = down. A path is recorded by the edges it crosses (left edge of s is
/// s, bottom edge of s is N + s) and by the 1-skeleton cycle it is homotopic
/// to (each centre slides to the lower-left corner of its square).
struct PathBits {
  Bits cross;
  Bits cell;
};

inline PathBits path_bits(const Origami& o, const std::vector<std::pair<int, int>>& moves, const Perm& hi, const Perm& vi) {
  const std::size_t N = o.n_squares(), words = (2 * N + 63) / 64;
  PathBits p{Bits(words, 0), Bits(words, 0)};
  for (auto [s, d] : moves) {
    auto S = static_cast<std::size_t>(s);
    switch (d) {
      case 0: flip(p.cross, static_cast<std::size_t>(o.r(s))); flip(p.cell, N + S); break;
      case 2: flip(p.cross, S); flip(p.cell, N + static_cast<std::size_t>(hi[S])); break;
      case 1: flip(p.cross, N + static_cast<std::size_t>(o.u(s))); flip(p.cell, S); break;
      default: flip(p.cross, N + S); flip(p.cell, static_cast<std::size_t>(vi[S])); break;
    }
  }
  return p;
}

/// q = ind + 1 for an embedded closed path: ind is the number of quarter
/// turns (left positive) divided by four.
inline int path_q(const std::vector<std::pair<int, int>>& moves) {
  int turns = 0;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    int a = moves[i].second, b = moves[(i + 1) % moves.size()].second;
    int t = (b - a + 4) % 4;
    if (t == 2) throw Error(ErrorCode::InternalInconsistency, "path turns back on itself");
    turns += t == 1 ? 1 : t == 3 ? -1 : 0;
  }
  if (turns % 4 != 0) throw Error(ErrorCode::InternalInconsistency, "path does not close up");
  return ((turns / 4) % 2 + 2 + 1) % 2;
}

/// Core curves of the unit cylinders followed by the fundamental cycles of
/// a breadth-first spanning tree of the square adjacency graph. Every such
/// cycle visits each square at most once, so it is embedded.
inline std::vector<SpinVector> square_graph_cycles(const Origami& o) {
  const std::size_t N = o.n_squares();
  Perm hi = inverse(o.sigma_h()), vi = inverse(o.sigma_v());
  std::vector<SpinVector> out;
  auto push = [&](const std::vector<std::pair<int, int>>& moves) {
    PathBits p = path_bits(o, moves, hi, vi);
    out.push_back(SpinVector{std::move(p.cross), std::move(p.cell), path_q(moves)});
  };
  for (auto& c : cycles(o.sigma_h())) {
    std::vector<std::pair<int, int>> mv;
    for (int s : c) mv.push_back({s, 0});
    push(mv);
  }
  for (auto& c : cycles(o.sigma_v())) {
    std::vector<std::pair<int, int>> mv;
    for (int s : c) mv.push_back({s, 1});
    push(mv);
  }
  // tree: parent square and the move parent -> child
  std::vector<int> parent(N, -1), pmove(N, -1), depth(N, 0);
  std::vector<char> seen(N, 0), tree_edge(2 * N, 0);  // edge id: 2s + 0 for s->r(s), 2s + 1 for s->u(s)
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int s = queue[qi];
    auto S = static_cast<std::size_t>(s);
    std::pair<int, int> nb[] = {{o.r(s), 0}, {o.u(s), 1}, {hi[S], 2}, {vi[S], 3}};
    for (auto [t, d] : nb) {
      auto T = static_cast<std::size_t>(t);
      if (seen[T]) continue;
      seen[T] = 1;
      parent[T] = s;
      pmove[T] = d;
      depth[T] = depth[S] + 1;
      std::size_t id = d == 0 ? 2 * S : d == 1 ? 2 * S + 1 : d == 2 ? 2 * T : 2 * T + 1;
      tree_edge[id] = 1;
      queue.push_back(t);
    }
  }
  for (std::size_t id = 0; id < 2 * N; ++id) {
    if (tree_edge[id]) continue;
    int a = static_cast<int>(id / 2), d = static_cast<int>(id % 2);
    int b = d == 0 ? o.r(a) : o.u(a);
    if (a == b) continue;  // a one-square unit cycle, already present
    // path a -> b along the edge, then b -> lca -> a through the tree
    std::vector<std::pair<int, int>> up_b, up_a;  // moves climbing towards the root
    int x = b, y = a;
    while (x != y) {
      if (depth[static_cast<std::size_t>(x)] >= depth[static_cast<std::size_t>(y)]) {
        up_b.push_back({x, (pmove[static_cast<std::size_t>(x)] + 2) % 4});
        x = parent[static_cast<std::size_t>(x)];
      } else {
        up_a.push_back({y, (pmove[static_cast<std::size_t>(y)] + 2) % 4});
        y = parent[static_cast<std::size_t>(y)];
      }
    }
    std::vector<std::pair<int, int>> mv{{a, d}};
    mv.insert(mv.end(), up_b.begin(), up_b.end());
    // descend from the lca to a: reverse of a's climb
    for (auto it = up_a.rbegin(); it != up_a.rend(); ++it) {
      int child = it->first;
      mv.push_back({parent[static_cast<std::size_t>(child)], pmove[static_cast<std::size_t>(child)]});
    }
    push(mv);
  }
  return out;
}

}  // namespace detail

/// Arf invariant of q on the span of the core curves, q = 1 on each curve.
/// Requires the curves to generate first homology mod 2.
inline int spin_parity(const CurveSystem& cs, int g) {
  using detail::Bits;
  const std::size_t N = cs.n + cs.m, words = (N + 63) / 64;
  const std::size_t rank = 2 * detail::rank_mod2(cs);
  if (rank != static_cast<std::size_t>(2 * g))
    throw Error(ErrorCode::CurvesDoNotGenerate,
                "mod 2 intersection form has rank " + std::to_string(rank) + ", expected " + std::to_string(2 * g));
  // the curve's own row of the intersection form pairs against its indicator
  std::vector<detail::SpinVector> vec;
  for (std::size_t i = 0; i < N; ++i) vec.push_back({Bits(words, 0), Bits(words, 0), 1});
  for (std::size_t i = 0; i < N; ++i) detail::flip(vec[i].right, i);
  for (std::size_t i = 0; i < cs.n; ++i)
    for (std::size_t j = 0; j < cs.m; ++j)
      if (mpz_odd_p(cs.X(i, j).get_mpz_t())) {
        detail::flip(vec[i].left, cs.n + j);
        detail::flip(vec[cs.n + j].left, i);
      }
  return detail::arf_invariant(std::move(vec), g);
}

/// Uses the cylinder core curves when they generate homology mod 2 and adds
/// embedded closed paths through square centres otherwise.
inline int spin_parity(const Origami& o) {
  Stratum s = stratum(o);
  if (!s.all_even()) throw Error(ErrorCode::SpinUndefined, s.display() + " has odd orders");
  const int g = genus(o);
  CurveSystem cs = curve_system(o);
  if (2 * detail::rank_mod2(cs) == static_cast<std::size_t>(2 * g)) return spin_parity(cs, g);
  return detail::arf_invariant(detail::square_graph_cycles(o), g);
}

// Hyperellipticity.

struct InvolutionResult {
  bool hyperelliptic = false;
  int fixed_points = 0;          // of the best involution found, -1 if none exists
  bool swaps_cone_points = false;
  Perm tau;
};

/// Rotations by pi preserving the square tiling: tau r = r^-1 tau,
/// tau u = u^-1 tau, tau^2 = id, fixed by tau(0). Fixed points are counted
/// at square centres, edge midpoints and vertices.
inline InvolutionResult hyperelliptic_involution(const Origami& o) {
  const int g = genus(o);
  if (stratum(o).orders.empty()) throw Error(ErrorCode::NoConePoint, "no cone point anchors the rotation");
  const std::size_t N = o.n_squares();
  Perm hi = inverse(o.sigma_h()), vi = inverse(o.sigma_v());
  Perm kappa = o.corner_map();
  auto vert = cycles(kappa);
  std::vector<int> vertex_of(N);
  for (std::size_t c = 0; c < vert.size(); ++c)
    for (int s : vert[c]) vertex_of[static_cast<std::size_t>(s)] = static_cast<int>(c);

  InvolutionResult best;
  best.fixed_points = -1;
  for (std::size_t t0 = 0; t0 < N; ++t0) {
    Perm tau(N, -1);
    tau[0] = static_cast<int>(t0);
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      int ts = tau[static_cast<std::size_t>(s)];
      std::pair<int, int> next[] = {{o.r(s), hi[static_cast<std::size_t>(ts)]}, {o.u(s), vi[static_cast<std::size_t>(ts)]},
                                    {hi[static_cast<std::size_t>(s)], o.r(ts)}, {vi[static_cast<std::size_t>(s)], o.u(ts)}};
      for (auto [a, b] : next) {
        int& slot = tau[static_cast<std::size_t>(a)];
        if (slot < 0) {
          slot = b;
          stack.push_back(a);
        } else if (slot != b) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || !is_permutation(tau)) continue;
    for (std::size_t s = 0; s < N && ok; ++s) ok = tau[static_cast<std::size_t>(tau[s])] == static_cast<int>(s);
    if (!ok) continue;

    int fixed = 0;
    for (std::size_t s = 0; s < N; ++s) {
      int ts = tau[s];
      if (ts == static_cast<int>(s)) ++fixed;
      if (ts == o.u(static_cast<int>(s))) ++fixed;  // top edge
      if (ts == o.r(static_cast<int>(s))) ++fixed;  // right edge
    }
    bool swaps = true;
    for (std::size_t c = 0; c < vert.size(); ++c) {
      int s = vert[c][0];
      int image = vertex_of[static_cast<std::size_t>(o.u(o.r(tau[static_cast<std::size_t>(s)])))];
      if (image == static_cast<int>(c)) {
        ++fixed;
        if (vert[c].size() > 1) swaps = false;
      }
    }
    if (fixed > best.fixed_points) {
      best.fixed_points = fixed;
      best.swaps_cone_points = swaps;
      best.tau = tau;
    }
    if (fixed == 2 * g + 2) {
      best.hyperelliptic = true;
      best.fixed_points = fixed;
      best.swaps_cone_points = swaps;
      best.tau = std::move(tau);
      break;
    }
  }
  return best;
}

inline std::pair<bool, int> is_hyperelliptic(const Origami& o) {
  InvolutionResult r = hyperelliptic_involution(o);
  return {r.hyperelliptic, r.fixed_points};
}

// Connected components.

enum class Component { hyp, even, odd, nonhyp, unique };

inline std::string to_string(Component c) {
  switch (c) {
    case Component::hyp: return "hyp";
    case Component::even: return "even";
    case Component::odd: return "odd";
    case Component::nonhyp: return "nonhyp";
    case Component::unique: return "unique";
  }
  return "?";
}

inline Component parse_component(const std::string& s) {
  for (Component c : {Component::hyp, Component::even, Component::odd, Component::nonhyp, Component::unique})
    if (to_string(c) == s) return c;
  throw Error(ErrorCode::InvalidArgument, "unknown component " + s);
}

/// Connected components of a stratum (Kontsevich-Zorich).
inline std::vector<Component> components_of(const Stratum& s) {
  const int g = s.total() / 2 + 1;
  const bool minimal = s.orders.size() == 1;
  const bool pair = s.orders.size() == 2 && s.orders[0] == s.orders[1];
  if (g == 2) return {Component::hyp};
  if (g == 3) {
    if (s == Stratum({4}) || s == Stratum({2, 2})) return {Component::hyp, Component::odd};
    return {Component::unique};
  }
  if (minimal) return {Component::hyp, Component::even, Component::odd};
  if (pair) {
    if ((g - 1) % 2 == 0) return {Component::hyp, Component::even, Component::odd};
    return {Component::hyp, Component::nonhyp};
  }
  if (s.all_even()) return {Component::even, Component::odd};
  return {Component::unique};
}

inline bool has_hyp_component(const Stratum& s) {
  auto c = components_of(s);
  return std::find(c.begin(), c.end(), Component::hyp) != c.end();
}

struct ComponentLabel {
  bool hyperelliptic = false;  // lies in the hyperelliptic component
  std::optional<int> spin;
  Component label = Component::unique;
  bool low_genus_caveat = false;
  int involution_fixed_points = -1;
};

inline ComponentLabel component_label(const Origami& o) {
  const int g = genus(o);
  if (g < 2) throw Error(ErrorCode::GenusTooSmall, "component labels need g >= 2");
  Stratum s = stratum(o);
  ComponentLabel out;
  InvolutionResult inv = hyperelliptic_involution(o);
  out.involution_fixed_points = inv.fixed_points;
  if (s.all_even()) out.spin = spin_parity(o);
  const bool two_zeros = s.orders.size() == 2;
  out.hyperelliptic = inv.hyperelliptic && has_hyp_component(s) && (!two_zeros || inv.swaps_cone_points);
  out.low_genus_caveat = g <= 3;
  auto comps = components_of(s);
  auto has = [&](Component c) { return std::find(comps.begin(), comps.end(), c) != comps.end(); };
  if (out.hyperelliptic) {
    out.label = Component::hyp;
  } else if (has(Component::odd) && out.spin) {
    out.label = *out.spin ? Component::odd : Component::even;
  } else if (has(Component::nonhyp)) {
    out.label = Component::nonhyp;
  } else {
    out.label = Component::unique;
  }
  return out;
}

// Search over the free parameter y.

struct HilbertResult {
  int y = 0;
  CurveSystem curves;
  DegreeCertificate certificate;
};

/// Curves for parameter y; nullopt when y is inadmissible for the family.
using CurveFamily = std::function<std::optional<CurveSystem>(int y)>;

/// First y in [y_start, y_max] whose trace field has degree d. Candidates
/// are tried in blocks of `jobs` in parallel; the smallest success wins, so
/// the answer does not depend on scheduling.
inline HilbertResult hilbert_search(const CurveFamily& family, int y_start, int y_max, int d, unsigned jobs = 1) {
  if (jobs == 0) jobs = 1;
  auto attempt = [&](int y) -> std::optional<HilbertResult> {
    std::optional<CurveSystem> cs = family(y);
    if (!cs || !is_pseudo_anosov(*cs)) return std::nullopt;
    TraceField tf = trace_field_degree(*cs);
    if (tf.degree != d) return std::nullopt;
    return HilbertResult{y, *cs, certify(*cs)};
  };
  for (int y = y_start; y <= y_max; y += static_cast<int>(jobs)) {
    const int hi = std::min(y_max, y + static_cast<int>(jobs) - 1);
    if (jobs == 1 || hi == y) {
      if (auto r = attempt(y)) return *r;
      continue;
    }
    std::vector<std::future<std::optional<HilbertResult>>> fut;
    for (int z = y; z <= hi; ++z) fut.push_back(std::async(std::launch::async, attempt, z));
    std::optional<HilbertResult> found;
    for (auto& f : fut) {
      auto r = f.get();
      if (r && !found) found = std::move(r);
    }
    if (found) return *found;
  }
  throw Error(ErrorCode::SearchExhausted, "no y in [" + std::to_string(y_start) + ", " + std::to_string(y_max) +
                                              "] gives trace degree " + std::to_string(d));
}

}  // namespace veechdeg

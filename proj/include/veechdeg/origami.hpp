#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace veechdeg {

using Perm = std::vector<int>;

inline bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

/// Cycles listed from their smallest element, in increasing order of that element.
inline std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Square-tiled surface: sigma_h sends a square to its right neighbour,
/// sigma_v to the one above.
class Origami {
 public:
  Origami(Perm sigma_h, Perm sigma_v) : h_(std::move(sigma_h)), v_(std::move(sigma_v)) {
    if (h_.empty() || h_.size() != v_.size()) throw Error(ErrorCode::NotAPermutation, "length mismatch or empty");
    if (!is_permutation(h_)) throw Error(ErrorCode::NotAPermutation, "sigma_h");
    if (!is_permutation(v_)) throw Error(ErrorCode::NotAPermutation, "sigma_v");
    std::vector<char> seen(h_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (int t : {h_[static_cast<std::size_t>(s)], v_[static_cast<std::size_t>(s)]}) {
        if (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = 1;
          ++reached;
          stack.push_back(t);
        }
      }
    }
    if (reached != h_.size()) throw Error(ErrorCode::NotConnected, "orbit of square 0 has " + std::to_string(reached) + " squares");
  }

  std::size_t n_squares() const { return h_.size(); }
  const Perm& sigma_h() const { return h_; }
  const Perm& sigma_v() const { return v_; }
  int r(int s) const { return h_[static_cast<std::size_t>(s)]; }
  int u(int s) const { return v_[static_cast<std::size_t>(s)]; }

  /// Corner map: the lower-left corner of square s is the lower-left corner
  /// of kappa(s) = u r u^-1 r^-1 (s) after turning once around the vertex.
  Perm corner_map() const {
    Perm hi = inverse(h_), vi = inverse(v_);
    Perm k(h_.size());
    for (std::size_t s = 0; s < h_.size(); ++s)
      k[s] = v_[static_cast<std::size_t>(h_[static_cast<std::size_t>(vi[static_cast<std::size_t>(hi[s])])])];
    return k;
  }

  /// Vertices as cycles of the corner map; a cycle of length L has angle 2 pi L.
  std::vector<std::vector<int>> vertices() const { return cycles(corner_map()); }

  /// Conjugate by a relabelling pi: square s becomes pi[s].
  Origami relabel(const Perm& pi) const {
    Perm h(h_.size()), v(v_.size());
    for (std::size_t s = 0; s < h_.size(); ++s) {
      h[static_cast<std::size_t>(pi[s])] = pi[static_cast<std::size_t>(h_[s])];
      v[static_cast<std::size_t>(pi[s])] = pi[static_cast<std::size_t>(v_[s])];
    }
    return Origami(std::move(h), std::move(v));
  }

  friend bool operator==(const Origami& a, const Origami& b) { return a.h_ == b.h_ && a.v_ == b.v_; }

 private:
  Perm h_, v_;
};

/// Multiset of cone-point orders, sorted decreasingly.
struct Stratum {
  std::vector<int> orders;

  Stratum() = default;
  explicit Stratum(std::vector<int> o) : orders(std::move(o)) { std::sort(orders.begin(), orders.end(), std::greater<>()); }

  int total() const { return std::accumulate(orders.begin(), orders.end(), 0); }
  bool all_even() const {
    return std::all_of(orders.begin(), orders.end(), [](int k) { return k % 2 == 0; });
  }
  std::size_t odd_count() const {
    return static_cast<std::size_t>(std::count_if(orders.begin(), orders.end(), [](int k) { return k % 2 != 0; }));
  }
  friend bool operator==(const Stratum& a, const Stratum& b) { return a.orders == b.orders; }
  friend bool operator<(const Stratum& a, const Stratum& b) { return a.orders < b.orders; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "," : "") + std::to_string(orders[i]);
    return s;
  }
  std::string display() const { return "H(" + to_string() + ")"; }
};

inline Stratum stratum(const Origami& o) {
  std::vector<int> ks;
  for (const auto& c : o.vertices())
    if (c.size() > 1) ks.push_back(static_cast<int>(c.size()) - 1);
  return Stratum(std::move(ks));
}

inline int genus(const Origami& o) {
  Stratum s = stratum(o);
  if (s.total() % 2 != 0) throw Error(ErrorCode::InternalInconsistency, "odd total order");
  int g = 1 + s.total() / 2;
  // Euler characteristic of the square complex: V - 2N + N = 2 - 2g.
  long V = static_cast<long>(o.vertices().size());
  long N = static_cast<long>(o.n_squares());
  if (V - N != 2 - 2 * g) throw Error(ErrorCode::InternalInconsistency, "Euler characteristic disagrees with stratum");
  return g;
}

enum class Direction { horizontal, vertical };

struct Cylinder {
  std::vector<int> squares;  // sorted
  int circumference = 0;
  int height = 0;
};

struct CylinderDecomposition {
  Direction direction = Direction::horizontal;
  std::vector<Cylinder> cylinders;
};

/// Maximal cylinders: stacked cycles are merged when no cone point sits on
/// the line between them.
inline CylinderDecomposition cylinders(const Origami& o, Direction dir) {
  const Perm& along = dir == Direction::horizontal ? o.sigma_h() : o.sigma_v();
  const Perm& across = dir == Direction::horizontal ? o.sigma_v() : o.sigma_h();
  auto cyc = cycles(along);
  std::vector<int> cycle_of(o.n_squares());
  for (std::size_t c = 0; c < cyc.size(); ++c)
    for (int s : cyc[c]) cycle_of[static_cast<std::size_t>(s)] = static_cast<int>(c);

  std::vector<int> parent(cyc.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::size_t c = 0; c < cyc.size(); ++c) {
    bool clean = true;
    for (int i : cyc[c]) {
      auto si = static_cast<std::size_t>(i);
      if (along[static_cast<std::size_t>(across[si])] != across[static_cast<std::size_t>(along[si])]) {
        clean = false;
        break;
      }
    }
    if (!clean) continue;
    int a = find(static_cast<int>(c)), b = find(cycle_of[static_cast<std::size_t>(across[static_cast<std::size_t>(cyc[c][0])])]);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

  CylinderDecomposition out;
  out.direction = dir;
  std::vector<int> index(cyc.size(), -1);
  for (std::size_t c = 0; c < cyc.size(); ++c) {
    int root = find(static_cast<int>(c));
    if (index[static_cast<std::size_t>(root)] < 0) {
      index[static_cast<std::size_t>(root)] = static_cast<int>(out.cylinders.size());
      out.cylinders.push_back(Cylinder{{}, static_cast<int>(cyc[c].size()), 0});
    }
    Cylinder& cy = out.cylinders[static_cast<std::size_t>(index[static_cast<std::size_t>(root)])];
    if (cy.circumference != static_cast<int>(cyc[c].size()))
      throw Error(ErrorCode::InternalInconsistency, "merged cycles of different lengths");
    cy.height += 1;
    cy.squares.insert(cy.squares.end(), cyc[c].begin(), cyc[c].end());
  }
  for (auto& cy : out.cylinders) std::sort(cy.squares.begin(), cy.squares.end());
  return out;
}

/// unit: every cycle of sigma_h / sigma_v is its own core curve (one square
/// wide annuli); maximal: cores of maximal cylinders.
enum class CylinderMode { unit, maximal };

/// Unit decomposition: cycles of sigma_h (or sigma_v), each of height 1.
inline CylinderDecomposition unit_cylinders(const Origami& o, Direction dir) {
  CylinderDecomposition out;
  out.direction = dir;
  for (auto& c : cycles(dir == Direction::horizontal ? o.sigma_h() : o.sigma_v())) {
    Cylinder cy{c, static_cast<int>(c.size()), 1};
    std::sort(cy.squares.begin(), cy.squares.end());
    out.cylinders.push_back(std::move(cy));
  }
  return out;
}

inline CurveSystem curve_system(const Origami& o, CylinderMode mode = CylinderMode::unit) {
  CylinderDecomposition H, V;
  if (mode == CylinderMode::unit) {
    H = unit_cylinders(o, Direction::horizontal);
    V = unit_cylinders(o, Direction::vertical);
  } else {
    H = cylinders(o, Direction::horizontal);
    V = cylinders(o, Direction::vertical);
  }
  std::vector<int> vcyl(o.n_squares());
  for (std::size_t j = 0; j < V.cylinders.size(); ++j)
    for (int s : V.cylinders[j].squares) vcyl[static_cast<std::size_t>(s)] = static_cast<int>(j);
  IntMatrix X(H.cylinders.size(), V.cylinders.size());
  for (std::size_t i = 0; i < H.cylinders.size(); ++i) {
    std::vector<long> cnt(V.cylinders.size(), 0);
    for (int s : H.cylinders[i].squares) ++cnt[static_cast<std::size_t>(vcyl[static_cast<std::size_t>(s)])];
    for (std::size_t j = 0; j < V.cylinders.size(); ++j) {
      long block = static_cast<long>(H.cylinders[i].height) * V.cylinders[j].height;
      if (cnt[j] % block != 0)
        throw Error(ErrorCode::NonIntegralIntersection,
                    "cylinders " + std::to_string(i) + "," + std::to_string(j) + ": " + std::to_string(cnt[j]) + " squares");
      X(i, j) = cnt[j] / block;
    }
  }
  return CurveSystem(std::move(X));
}

/// Twist multiplicities a_i = L_h / c_i, b_j = L_v / c_j (c the unit
/// cycle lengths, L their lcm), scaled by s. Every horizontal cycle then
/// has the same modulus a_i / c_i, so the multitwist is affine and the
/// Perron-Frobenius eigenvalue of D_a X D_b X^T is s^2 L_h L_v.
inline CurveSystem square_tiled_weights(const Origami& o, const Int& scale = 1) {
  CurveSystem cs = curve_system(o, CylinderMode::unit);
  auto H = cycles(o.sigma_h()), V = cycles(o.sigma_v());
  Int Lh = 1, Lv = 1;
  for (auto& c : H) Lh = lcm(Lh, Int(static_cast<unsigned long>(c.size())));
  for (auto& c : V) Lv = lcm(Lv, Int(static_cast<unsigned long>(c.size())));
  for (std::size_t i = 0; i < H.size(); ++i) cs.a[i] = scale * Lh / static_cast<unsigned long>(H[i].size());
  for (std::size_t j = 0; j < V.size(); ++j) cs.b[j] = scale * Lv / static_cast<unsigned long>(V[j].size());
  return cs;
}

}  // namespace veechdeg

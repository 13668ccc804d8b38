#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "origami.hpp"

namespace veechdeg {

struct GenericParams {
  int g = 0;
  Stratum stratum;
  int y = 0;
  std::vector<int> y_list;  // L-shapes first (one per pair of odd orders), then strips

  std::size_t l() const { return stratum.odd_count() / 2; }
};

struct StaircaseParams {
  int n = 0;
  int k = 0;
  int y = 1;
  bool collapse_A0 = false;  // true selects the Y family

  int genus() const { return n + k + 2; }
  int alpha() const { return collapse_A0 ? 1 + 4 * n : 2 + 4 * n; }
};

namespace detail {

/// Incremental gluing on top of a main horizontal row.
class Gluing {
 public:
  explicit Gluing(int row) {
    for (int i = 0; i < row; ++i) {
      r_.push_back((i + 1) % row);
      u_.push_back(i);
    }
  }

  int size() const { return static_cast<int>(r_.size()); }
  int& r(int s) { return r_[static_cast<std::size_t>(s)]; }
  int& u(int s) { return u_[static_cast<std::size_t>(s)]; }

  int add_square(int right, int up) {
    r_.push_back(right);
    u_.push_back(up);
    return size() - 1;
  }

  /// Vertical strip: yi squares stacked above square `col`, each its own
  /// horizontal cylinder.
  void strip(int col, int yi) {
    int above = u(col), prev = col;
    for (int j = 0; j < yi; ++j) {
      int s = add_square(size(), above);
      u(prev) = s;
      prev = s;
    }
  }

  /// L-shape: a horizontal row of yi squares whose first square sits above
  /// `col`; the others close up vertically on themselves.
  void l_shape(int col, int yi) {
    int base = size();
    for (int j = 0; j < yi; ++j) add_square(base + (j + 1) % yi, base + j);
    int above = u(col);
    u(col) = base;
    u(base) = above;
  }

  /// One step of the staircase on top of `cur`: a two-square row (L, R) with
  /// L above cur; returns R.
  int step(int cur) {
    int L = size();
    add_square(L + 1, cur);
    add_square(L, 0);
    u(cur) = L;
    return L + 1;
  }

  Origami finish() const { return Origami(r_, u_); }

 private:
  Perm r_, u_;
};

}  // namespace detail

inline void validate_stratum(int g, const Stratum& s) {
  if (g < 1) throw Error(ErrorCode::InvalidStratum, "genus must be positive");
  for (int k : s.orders)
    if (k <= 0) throw Error(ErrorCode::InvalidStratum, "orders must be positive");
  if (s.total() != 2 * g - 2) throw Error(ErrorCode::InvalidStratum, s.display() + " does not sum to 2g-2 for g=" + std::to_string(g));
  if (s.odd_count() % 2 != 0) throw Error(ErrorCode::InvalidStratum, s.display() + " has an odd number of odd orders");
}

/// Insertion plan for the generic builder: which object goes to which
/// column of the main row. Strips at adjacent columns share a cone point and
/// an L-shape exposes two order-1 points that strips on either side raise;
/// cone points are separated by a plain column.
struct GenericLayout {
  struct Item {
    bool l_shape;
    int column;
  };
  std::vector<Item> l_shapes;  // in y_list order
  std::vector<Item> strips;    // in y_list order
  int columns_needed = 0;      // main row must have at least this many squares
};

inline GenericLayout generic_layout(const Stratum& s) {
  std::vector<int> odd, even;
  for (int k : s.orders) (k % 2 ? odd : even).push_back(k);
  std::sort(odd.begin(), odd.end(), std::greater<>());
  std::sort(even.begin(), even.end(), std::greater<>());
  GenericLayout out;
  int col = 1;
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
    for (int j = 0; j < (odd[i] - 1) / 2; ++j) out.strips.push_back({false, col++});
    out.l_shapes.push_back({true, col++});
    for (int j = 0; j < (odd[i + 1] - 1) / 2; ++j) out.strips.push_back({false, col++});
    ++col;
  }
  for (int e : even) {
    for (int j = 0; j < e / 2; ++j) out.strips.push_back({false, col++});
    ++col;
  }
  // the gap after the last group may wrap onto column 0
  out.columns_needed = col - 1;
  return out;
}

/// Long horizontal cylinder of y^2 squares with L-shapes and vertical strips
/// inserted so that the cone points realise the requested stratum.
inline Origami build_generic(const GenericParams& p) {
  validate_stratum(p.g, p.stratum);
  if (p.g < 2) throw Error(ErrorCode::InvalidStratum, "genus must be at least 2");
  if (p.y_list.size() != static_cast<std::size_t>(p.g - 1))
    throw Error(ErrorCode::ParamsTooSmall, "y_list must have g-1 entries");
  for (int v : p.y_list)
    if (v < 1) throw Error(ErrorCode::ParamsTooSmall, "y_i must be positive");
  const std::size_t l = p.l();
  for (std::size_t i = 0; i < l; ++i)
    if (p.y_list[i] < 2) throw Error(ErrorCode::ParamsTooSmall, "L-shapes need y_i >= 2");
  GenericLayout lay = generic_layout(p.stratum);
  if (p.y < 1 || p.y * p.y < lay.columns_needed)
    throw Error(ErrorCode::ParamsTooSmall, "y^2 = " + std::to_string(p.y * p.y) + " < " + std::to_string(lay.columns_needed) + " columns needed");
  detail::Gluing G(p.y * p.y);
  for (std::size_t i = 0; i < lay.l_shapes.size(); ++i) G.l_shape(lay.l_shapes[i].column, p.y_list[i]);
  for (std::size_t i = 0; i < lay.strips.size(); ++i) G.strip(lay.strips[i].column, p.y_list[l + i]);
  Origami o = G.finish();
  if (!(stratum(o) == p.stratum)) throw Error(ErrorCode::InternalInconsistency, "generic builder missed " + p.stratum.display());
  return o;
}

/// Shared base: main row with a double column of y1 squares under M0 (glued
/// so that it passes through M2) and a strip of y2 squares over M1.
inline detail::Gluing spin0_base(int row, int y1, int y2) {
  detail::Gluing G(row);
  std::vector<int> d;
  for (int j = 0; j < y1; ++j) d.push_back(G.add_square(G.size(), 0));
  G.u(0) = 2;
  G.u(2) = d.back();
  for (int j = y1 - 1; j > 0; --j) G.u(d[static_cast<std::size_t>(j)]) = d[static_cast<std::size_t>(j - 1)];
  G.u(d[0]) = 0;
  G.strip(1, y2);
  return G;
}

/// Even-spin surfaces in strata with at least two zeros, all of even order.
/// The two zeros of the base grow with strips at columns 3, 4, ... and
/// row-1, row-2, ...; further zeros are separate runs of strips.
inline Origami build_spin0_multi(int g, const Stratum& s, int y, const std::vector<int>& y_list) {
  validate_stratum(g, s);
  if (!s.all_even()) throw Error(ErrorCode::InvalidStratum, s.display() + " has odd orders");
  if (s.orders.size() < 2) throw Error(ErrorCode::InvalidStratum, s.display() + " needs at least two zeros");
  if (y_list.size() != static_cast<std::size_t>(g - 1)) throw Error(ErrorCode::ParamsTooSmall, "y_list must have g-1 entries");
  for (int v : y_list)
    if (v < 1) throw Error(ErrorCode::ParamsTooSmall, "y_i must be positive");
  const int row = y * y - 2;
  const auto& k = s.orders;
  const int p = (k[0] - 2) / 2, q = (k[1] - 2) / 2;
  std::vector<int> cols;
  for (int j = 0; j < p; ++j) cols.push_back(3 + j);
  int next = p > 0 ? 3 + p + 1 : 5;
  for (std::size_t i = 2; i < k.size(); ++i) {
    for (int j = 0; j < k[i] / 2; ++j) cols.push_back(next + j);
    next += k[i] / 2 + 1;
  }
  const int last_allowed = row - q - 2;
  if (row < 4 || (!cols.empty() && cols.back() > last_allowed) || (q > 0 && row - q <= 3))
    throw Error(ErrorCode::ParamsTooSmall, "main row of " + std::to_string(row) + " squares too short");
  for (int j = 0; j < q; ++j) cols.push_back(row - 1 - j);
  detail::Gluing G = spin0_base(row, y_list[0], y_list[1]);
  for (std::size_t i = 0; i < cols.size(); ++i) G.strip(cols[i], y_list[i + 2]);
  Origami o = G.finish();
  if (!(stratum(o) == s)) throw Error(ErrorCode::InternalInconsistency, "spin0_multi missed " + s.display());
  return o;
}

/// Compact layout with free sizes: main row of g squares, the shared base and
/// strips over columns 3..g-1. Lies in H(2g-2) with even spin.
inline Origami build_spin0_min_compact(int g, const std::vector<int>& y_list) {
  if (g < 4) throw Error(ErrorCode::GenusTooSmall, "need g > 3");
  if (y_list.size() != static_cast<std::size_t>(g - 1)) throw Error(ErrorCode::ParamsTooSmall, "y_list must have g-1 entries");
  for (int v : y_list)
    if (v < 1) throw Error(ErrorCode::ParamsTooSmall, "y_i must be positive");
  detail::Gluing G = spin0_base(g, y_list[0], y_list[1]);
  for (int c = 3; c < g; ++c) G.strip(c, y_list[static_cast<std::size_t>(c - 1)]);
  Origami o = G.finish();
  if (!(stratum(o) == Stratum({2 * g - 2}))) throw Error(ErrorCode::InternalInconsistency, "compact builder left H(2g-2)");
  return o;
}

inline Origami build_spin0_min_deg2(int g) {
  if (g <= 3) throw Error(ErrorCode::GenusTooSmall, "need g > 3");
  std::vector<int> ys(static_cast<std::size_t>(g - 1), 1);
  ys[0] = 2;
  return build_spin0_min_compact(g, ys);
}

/// Main row of y^2 squares, g-3 strips over columns 1.., and the
/// three-square end piece glued over the next column.
inline Origami build_spin0_min(int g, int y, const std::vector<int>& y_list) {
  if (g <= 3) throw Error(ErrorCode::GenusTooSmall, "need g > 3");
  if (y_list.size() != static_cast<std::size_t>(g - 3)) throw Error(ErrorCode::ParamsTooSmall, "y_list must have g-3 entries");
  for (int v : y_list)
    if (v < 1) throw Error(ErrorCode::ParamsTooSmall, "y_i must be positive");
  const int row = y * y;
  const int c = 1 + static_cast<int>(y_list.size());
  if (y < 1 || row < c + 2) throw Error(ErrorCode::ParamsTooSmall, "main row too short");
  detail::Gluing G(row);
  for (std::size_t j = 0; j < y_list.size(); ++j) G.strip(1 + static_cast<int>(j), y_list[j]);
  int P = G.size(), Q = P + 1, R = P + 2;
  G.add_square(Q, c);
  G.add_square(P, R);
  G.add_square(R, Q);
  G.u(c) = P;
  Origami o = G.finish();
  if (!(stratum(o) == Stratum({2 * g - 2}))) throw Error(ErrorCode::InternalInconsistency, "spin0_min left H(2g-2)");
  return o;
}

/// X_{n,k,y} (or Y_{n,k,y} when the square A0 is collapsed). The
/// bottom row carries the 2n twisted columns, k two-square steps climb from
/// its last square and a row of y squares closes the top.
inline Origami build_hyp(const StaircaseParams& p) {
  if (p.n < 0 || p.k < 0) throw Error(ErrorCode::ParamsTooSmall, "n, k must be nonnegative");
  if (p.y < 2) throw Error(ErrorCode::ParamsTooSmall, "y must be at least 2");
  if (p.collapse_A0 && p.n == 0) throw Error(ErrorCode::ParamsTooSmall, "Y family needs n >= 1");
  const int n = p.n;
  std::vector<int> pos;
  for (int i = 0; i < 2 * n + 2; ++i)
    if (!(p.collapse_A0 && i == n)) pos.push_back(i);
  std::map<int, int> idx;
  for (std::size_t i = 0; i < pos.size(); ++i) idx[pos[i]] = static_cast<int>(i);
  detail::Gluing G(static_cast<int>(pos.size()));
  for (int j = 1; j <= n; ++j) {
    G.u(idx[j - 1]) = idx[2 * n + 1 - j];
    G.u(idx[n + j]) = idx[n - j];
  }
  int cur = idx[2 * n + 1];
  for (int i = 0; i < p.k; ++i) cur = G.step(cur);
  int base = G.size();
  for (int j = 0; j < p.y; ++j) G.add_square(base + (j + 1) % p.y, 0);
  G.u(cur) = base;
  for (int j = 0; j + 1 < p.y; ++j) G.u(base + j) = base + j + 1;
  G.u(base + p.y - 1) = cur;
  Origami o = G.finish();
  const int g = p.genus();
  Stratum want = p.collapse_A0 ? Stratum({2 * g - 2}) : Stratum({g - 1, g - 1});
  if (!(stratum(o) == want)) throw Error(ErrorCode::InternalInconsistency, "hyp builder missed " + want.display());
  return o;
}

/// A long row of y^2 squares, g-2 steps, and a single top square.
inline Origami build_hyp_staircase_long(int g, int y) {
  if (g < 2) throw Error(ErrorCode::GenusTooSmall, "need g >= 2");
  if (y < 2) throw Error(ErrorCode::ParamsTooSmall, "y must be at least 2");
  detail::Gluing G(y * y);
  int cur = y * y - 1;
  for (int i = 0; i < g - 2; ++i) cur = G.step(cur);
  int T = G.size();
  G.add_square(T, cur);
  G.u(cur) = T;
  Origami o = G.finish();
  if (!(stratum(o) == Stratum({2 * g - 2}))) throw Error(ErrorCode::InternalInconsistency, "staircase left H(2g-2)");
  return o;
}

// Closed-form matrices, used as oracles and for the spectral checks.

/// XX^T for the generic construction: y^2 corner, L-shape diagonal entries
/// y_i, all-ones y_i x y_i blocks for strips, b on the first row and column.
inline SymIntMatrix generic_gram(int y, const std::vector<int>& y_list, std::size_t l, int b = 1) {
  std::size_t dim = 1 + l;
  for (std::size_t i = l; i < y_list.size(); ++i) dim += static_cast<std::size_t>(y_list[i]);
  IntMatrix A(dim, dim);
  A(0, 0) = y * y;
  std::size_t at = 1;
  for (std::size_t i = 0; i < y_list.size(); ++i) {
    std::size_t w = i < l ? 1 : static_cast<std::size_t>(y_list[i]);
    for (std::size_t a = 0; a < w; ++a) {
      A(0, at + a) = A(at + a, 0) = b;
      for (std::size_t c = 0; c < w; ++c) A(at + a, at + c) = i < l ? y_list[i] : 1;
    }
    at += w;
  }
  return SymIntMatrix(std::move(A));
}

/// t^a (-y^2 P + t P - sum_i c_i P / (t - y_i)), P = prod (t - y_i).
inline IntPoly generic_charpoly_formula(const Int& y2, const std::vector<int>& y_list, const std::vector<Int>& c, int a) {
  IntPoly t = IntPoly::t();
  IntPoly P = IntPoly::constant(1);
  for (int v : y_list) P *= IntPoly::linear_root(Int(v));
  IntPoly acc = (t - IntPoly::constant(y2)) * P;
  for (std::size_t i = 0; i < y_list.size(); ++i) {
    IntPoly Pi = IntPoly::constant(1);
    for (std::size_t j = 0; j < y_list.size(); ++j)
      if (j != i) Pi *= IntPoly::linear_root(Int(y_list[j]));
    acc -= Pi * c[i];
  }
  return t.pow(static_cast<unsigned>(a)) * acc;
}

/// Tridiagonal matrix with the given diagonal and unit off-diagonals.
inline SymIntMatrix jacobi_matrix(const std::vector<Int>& diag, const std::vector<Int>& off) {
  const std::size_t n = diag.size();
  IntMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i) A(i, i) = diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) A(i, i + 1) = A(i + 1, i) = off[i];
  return SymIntMatrix(std::move(A));
}

/// B_k: (k+1) x (k+1), 2I + path adjacency with alpha - 2 added to the first entry.
inline SymIntMatrix staircase_B(int alpha, int k) {
  std::vector<Int> d(static_cast<std::size_t>(k + 1), Int(2)), o(static_cast<std::size_t>(k), Int(1));
  d[0] = alpha;
  return jacobi_matrix(d, o);
}

/// Displayed XX^T of X_{n,k,y} / Y_{n,k,y}.
inline SymIntMatrix hyp_gram(int alpha, int k, int y) {
  std::vector<Int> d(static_cast<std::size_t>(k + 2), Int(2)), o(static_cast<std::size_t>(k + 1), Int(1));
  d.front() = alpha;
  d.back() = y * y;
  o.back() = y;
  return jacobi_matrix(d, o);
}

/// Displayed g x g XX^T of the long staircase: diagonal (y^2, 2, ..., 2, 1).
inline SymIntMatrix long_staircase_gram(int g, int y) {
  std::vector<Int> d(static_cast<std::size_t>(g), Int(2)), o(static_cast<std::size_t>(g - 1), Int(1));
  d.front() = y * y;
  d.back() = 1;
  return jacobi_matrix(d, o);
}

/// q_k of the long staircase: charpoly of the k x k matrix diag (2, ..., 2, 1).
inline IntPoly long_staircase_q(int k) {
  if (k <= 0) return IntPoly::constant(1);
  std::vector<Int> d(static_cast<std::size_t>(k), Int(2)), o(static_cast<std::size_t>(k - 1), Int(1));
  d.back() = 1;
  return charpoly(jacobi_matrix(d, o).matrix());
}

/// The (g+1) x (g+1) matrix of the degree-two family.
inline SymIntMatrix deg2_gram(int g) { return gram(curve_system(build_spin0_min_deg2(g))); }

// Family-name keyed entry point.

using FamilyParams = std::map<std::string, std::string>;

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"generic", "spin0_multi", "spin0_min_deg2", "spin0_min_compact",
                                              "spin0_min", "hyp_X", "hyp_Y", "hyp_staircase_long"};
  return names;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "not an integer list: " + s);
    }
    i = j + 1;
  }
  return out;
}

namespace detail {

inline const std::string& require(const FamilyParams& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw Error(ErrorCode::InvalidArgument, "missing parameter " + key);
  return it->second;
}

inline int require_int(const FamilyParams& p, const std::string& key) {
  auto v = parse_int_list(require(p, key));
  if (v.size() != 1) throw Error(ErrorCode::InvalidArgument, key + " must be a single integer");
  return v[0];
}

inline std::vector<int> optional_list(const FamilyParams& p, const std::string& key) {
  auto it = p.find(key);
  return it == p.end() || it->second.empty() ? std::vector<int>{} : parse_int_list(it->second);
}

}  // namespace detail

inline Origami build_family(const std::string& family, const FamilyParams& p) {
  using namespace detail;
  if (family == "generic") {
    GenericParams gp{require_int(p, "g"), Stratum(parse_int_list(require(p, "stratum"))), require_int(p, "y"),
                     optional_list(p, "ys")};
    if (p.count("l") && static_cast<std::size_t>(require_int(p, "l")) != gp.l())
      throw Error(ErrorCode::InvalidStratum, "l must equal half the number of odd orders");
    return build_generic(gp);
  }
  if (family == "spin0_multi")
    return build_spin0_multi(require_int(p, "g"), Stratum(parse_int_list(require(p, "stratum"))), require_int(p, "y"),
                             optional_list(p, "ys"));
  if (family == "spin0_min_deg2") return build_spin0_min_deg2(require_int(p, "g"));
  if (family == "spin0_min_compact") return build_spin0_min_compact(require_int(p, "g"), optional_list(p, "ys"));
  if (family == "spin0_min") return build_spin0_min(require_int(p, "g"), require_int(p, "y"), optional_list(p, "ys"));
  if (family == "hyp_X" || family == "hyp_Y")
    return build_hyp(StaircaseParams{require_int(p, "n"), require_int(p, "k"), require_int(p, "y"), family == "hyp_Y"});
  if (family == "hyp_staircase_long") return build_hyp_staircase_long(require_int(p, "g"), require_int(p, "y"));
  throw Error(ErrorCode::InvalidArgument, "unknown family " + family);
}

}  // namespace veechdeg

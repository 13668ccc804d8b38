#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "certify.hpp"
#include "constructions.hpp"

namespace veechdeg {

/// How a (stratum, component, d) cell is reached: a builder, its parameters
/// as a function of the searched value, and where the search starts.
struct Route {
  std::string family;
  std::string note;
  std::function<FamilyParams(int y)> params;
  int y_start = 1;
  bool weighted = false;            // d = 1: square-tiled twist weights, the search runs over the scale
  bool criterion_guaranteed = false;  // the construction's proof applies the nonsplitting criterion
};

namespace detail {

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

/// Heights for the generic builder with exactly d-1 distinct values: 1 goes
/// to a strip when there is one, L-shapes only take values >= 2.
inline std::vector<int> generic_heights(int g, const Stratum& s, int d) {
  const std::size_t l = s.odd_count() / 2, total = static_cast<std::size_t>(g - 1);
  const std::size_t strips = total - l;
  std::vector<int> values;
  const bool use_one = strips > 0 && (l == 0 || d - 1 >= 2);
  for (int v = use_one ? 1 : 2; static_cast<int>(values.size()) < d - 1; ++v) values.push_back(v);
  std::vector<int> ys(total, 0);
  std::size_t next = 0;
  if (use_one) ys[l] = values[next++];
  for (std::size_t i = 0; i < total && next < values.size(); ++i)
    if (ys[i] == 0) ys[i] = values[next++];
  if (next < values.size()) throw Error(ErrorCode::UnreachableCombination, "not enough pieces for d = " + std::to_string(d));
  for (std::size_t i = 0; i < total; ++i)
    if (ys[i] == 0) ys[i] = i < l || !use_one ? values.back() : 1;
  return ys;
}

/// n values drawn from 1..k, each used at least once (k <= n).
inline std::vector<int> distinct_heights(int n, int k) {
  std::vector<int> ys;
  for (int i = 0; i < n; ++i) ys.push_back(std::min(i, k - 1) + 1);
  return ys;
}

}  // namespace detail

/// In genus 4 the spin 0 templates of H(6) with fewer than four distinct
/// degrees are hyperelliptic; those cells reweight the horizontal twists of
/// a fixed even surface instead.
inline bool reweighted_cell(int g, const Stratum& s, Component comp, int d) {
  return g == 4 && s.orders.size() == 1 && comp == Component::even && d <= 3;
}

constexpr int kMaxTwistWeight = 4;

/// Route for degree d >= 2 in the given component.
inline Route plan_route(int g, const Stratum& s, Component comp, int d) {
  using detail::join;
  const std::string gs = std::to_string(g), st = join(s.orders);
  const bool minimal = s.orders.size() == 1;
  Route r;
  if (reweighted_cell(g, s, comp, d)) {
    r.family = "spin0_min";
    r.note = "genus 4 even surface with reweighted horizontal twists";
    r.params = [](int) { return FamilyParams{{"g", "4"}, {"y", "2"}, {"ys", "1"}}; };
    r.weighted = true;
    return r;
  }
  if (d < 2 || d > g) throw Error(ErrorCode::InvalidArgument, "d must satisfy 2 <= d <= g here");
  switch (comp) {
    case Component::hyp:
      if (minimal && d == g) {
        r.family = "hyp_staircase_long";
        r.note = "long staircase, g x g Jacobi matrix";
        r.params = [gs](int y) { return FamilyParams{{"g", gs}, {"y", std::to_string(y)}}; };
      } else {
        r.family = minimal ? "hyp_Y" : "hyp_X";
        r.note = "staircase with n = g-d, k = d-2";
        std::string n = std::to_string(g - d), k = std::to_string(d - 2);
        r.params = [n, k](int y) { return FamilyParams{{"n", n}, {"k", k}, {"y", std::to_string(y)}}; };
      }
      r.y_start = 2;
      r.criterion_guaranteed = true;
      return r;
    case Component::even:
      if (!minimal) {
        r.family = "spin0_multi";
        r.note = "spin 0 base with strips, d-1 distinct heights";
        std::string ys = join(detail::distinct_heights(g - 1, d - 1));
        r.params = [gs, st, ys](int y) { return FamilyParams{{"g", gs}, {"stratum", st}, {"y", std::to_string(y)}, {"ys", ys}}; };
        r.y_start = 2;
        return r;
      }
      if (d == 2) {
        r.family = "spin0_min_deg2";
        r.note = "fixed degree-two surface";
        r.params = [gs](int) { return FamilyParams{{"g", gs}}; };
        return r;
      }
      if (d == 3) {
        r.family = "spin0_min_compact";
        r.note = "compact layout with heights (2, y, 1, ..., 1)";
        r.params = [g, gs](int y) {
          std::vector<int> ys(static_cast<std::size_t>(g - 1), 1);
          ys[0] = 2;
          ys[1] = y;
          return FamilyParams{{"g", gs}, {"ys", join(ys)}};
        };
        r.y_start = 3;
        return r;
      }
      r.family = "spin0_min";
      r.note = "end piece with d-3 distinct strip heights";
      {
        std::string ys = join(detail::distinct_heights(g - 3, d - 3));
        r.params = [gs, ys](int y) { return FamilyParams{{"g", gs}, {"y", std::to_string(y)}, {"ys", ys}}; };
      }
      r.y_start = 2;
      return r;
    case Component::odd:
    case Component::nonhyp:
    case Component::unique: {
      r.family = "generic";
      r.note = "long cylinder with L-shapes and strips, d-1 distinct heights, y > 4";
      std::string ys = join(detail::generic_heights(g, s, d));
      r.params = [gs, st, ys](int y) { return FamilyParams{{"g", gs}, {"stratum", st}, {"y", std::to_string(y)}, {"ys", ys}}; };
      r.y_start = 5;
      r.criterion_guaranteed = true;
      return r;
    }
  }
  throw Error(ErrorCode::UnreachableCombination, "no route");
}

struct RealizeRequest {
  int g = 0;
  Stratum stratum;
  std::optional<Component> component;  // nullopt: the first component of the stratum
  int d = 1;
  int y_max = 100;
  unsigned jobs = 1;
};

struct Realization {
  Component component = Component::unique;
  std::string family;
  std::string note;
  FamilyParams params;
  int y = 0;             // searched value: builder parameter, twist scale (d = 1) or weight-vector index
  bool weighted = false;
  bool criterion_guaranteed = false;
  std::optional<Origami> origami;
  CurveSystem curves;
  DegreeCertificate certificate;
  ComponentLabel label;
  Stratum stratum;
  int genus = 0;
};

inline std::optional<Origami> try_build(const std::string& family, const FamilyParams& p) {
  try {
    return build_family(family, p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParamsTooSmall) return std::nullopt;
    throw;
  }
}

inline Realization realize(const RealizeRequest& req) {
  validate_stratum(req.g, req.stratum);
  if (req.g < 2) throw Error(ErrorCode::GenusTooSmall, "need g >= 2");
  if (req.d < 1 || req.d > req.g) throw Error(ErrorCode::InvalidArgument, "need 1 <= d <= g");
  auto comps = components_of(req.stratum);
  Component comp = req.component.value_or(comps.front());
  if (std::find(comps.begin(), comps.end(), comp) == comps.end())
    throw Error(ErrorCode::InvalidArgument, req.stratum.display() + " has no " + to_string(comp) + " component");

  Realization out;
  out.component = comp;
  HilbertResult found;
  if (reweighted_cell(req.g, req.stratum, comp, req.d)) {
    Route r = plan_route(req.g, req.stratum, comp, req.d);
    out.family = r.family;
    out.note = r.note;
    out.params = r.params(0);
    out.weighted = true;
    out.origami = build_family(r.family, out.params);
    const CurveSystem base = curve_system(*out.origami);
    // index i spells the weights (1 + digit) in base kMaxTwistWeight, first curve fastest
    CurveFamily fam = [base](int i) -> std::optional<CurveSystem> {
      CurveSystem w = base;
      for (std::size_t k = 0; k < w.n; ++k, i /= kMaxTwistWeight) w.a[k] = 1 + i % kMaxTwistWeight;
      return w;
    };
    int count = 1;
    for (std::size_t k = 0; k < base.n; ++k) count *= kMaxTwistWeight;
    found = hilbert_search(fam, 0, count - 1, req.d, req.jobs);
  } else if (req.d == 1) {
    // a degree-two surface of the component, then twist weights
    Route base = plan_route(req.g, req.stratum, comp, 2);
    std::optional<Origami> o;
    int y = base.y_start;
    for (; y <= req.y_max && !o; ++y) o = try_build(base.family, base.params(y));
    if (!o) throw Error(ErrorCode::SearchExhausted, "no admissible base surface up to y = " + std::to_string(req.y_max));
    Origami surface = *o;
    out.family = base.family;
    out.note = base.note + "; square-tiled twist weights";
    out.params = base.params(y - 1);
    out.weighted = true;
    CurveFamily fam = [surface](int s) -> std::optional<CurveSystem> { return square_tiled_weights(surface, s); };
    found = hilbert_search(fam, 1, req.y_max, 1, req.jobs);
    out.origami = surface;
  } else {
    Route r = plan_route(req.g, req.stratum, comp, req.d);
    out.family = r.family;
    out.note = r.note;
    out.criterion_guaranteed = r.criterion_guaranteed;
    CurveFamily fam = [&r](int y) -> std::optional<CurveSystem> {
      auto o = try_build(r.family, r.params(y));
      if (!o) return std::nullopt;
      return curve_system(*o);
    };
    found = hilbert_search(fam, r.y_start, req.y_max, req.d, req.jobs);
    out.params = r.params(found.y);
    out.origami = build_family(r.family, out.params);
  }
  out.y = found.y;
  out.curves = found.curves;
  out.certificate = found.certificate;
  out.stratum = stratum(*out.origami);
  out.genus = genus(*out.origami);
  if (!(out.stratum == req.stratum))
    throw Error(ErrorCode::InternalInconsistency, out.family + " produced " + out.stratum.display());
  out.label = component_label(*out.origami);
  if (out.label.label != comp)
    throw Error(ErrorCode::InternalInconsistency,
                out.family + " landed in the " + to_string(out.label.label) + " component, not " + to_string(comp));
  return out;
}

// Strata and the sweep over all cells.

/// Partitions of 2g-2 with an even number of odd parts, parts descending,
/// listed in reverse lexicographic order.
inline std::vector<Stratum> strata_of_genus(int g) {
  std::vector<Stratum> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      Stratum s(cur);
      if (s.odd_count() % 2 == 0) out.push_back(s);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(2 * g - 2, 2 * g - 2);
  return out;
}

struct Cell {
  int g = 0;
  Stratum stratum;
  Component component = Component::unique;
  int d = 0;
};

struct CellResult {
  Cell cell;
  bool ok = false;
  std::string error;           // error code name when !ok
  std::string message;
  std::optional<Realization> realization;
  long ms = 0;
};

inline std::vector<Cell> all_cells(int g_max, int g_min = 2) {
  std::vector<Cell> cells;
  for (int g = g_min; g <= g_max; ++g)
    for (const Stratum& s : strata_of_genus(g))
      for (Component c : components_of(s))
        for (int d = 1; d <= g; ++d) cells.push_back({g, s, c, d});
  return cells;
}

inline CellResult run_cell(const Cell& c, int y_max) {
  CellResult r;
  r.cell = c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    RealizeRequest req{c.g, c.stratum, c.component, c.d, y_max, 1};
    r.realization = realize(req);
    r.ok = true;
  } catch (const Error& e) {
    r.error = to_string(e.code());
    r.message = e.what();
  }
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Runs every cell on a pool of `jobs` workers; results come back in cell
/// order whatever the schedule.
inline std::vector<CellResult> sweep(const std::vector<Cell>& cells, int y_max, unsigned jobs = 1,
                                     const std::function<void(const CellResult&)>& progress = {}) {
  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      results[i] = run_cell(cells[i], y_max);
      if (progress) {
        std::lock_guard<std::mutex> lock(mu);
        progress(results[i]);
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

// Odd stretch degrees: no completeness claim, only what the routes happen to show.

struct OddObservation {
  Cell cell;
  std::string family;
  int y = 0;
  int trace_degree = 0;
  int stretch_degree = 0;
};

/// Scans every route with d >= 2 over y in [y_start, y_budget] and keeps the
/// first y per (cell, stretch degree) whose stretch degree is odd and >= 3.
inline std::vector<OddObservation> explore_odd(int g_max, int y_budget, unsigned jobs = 1) {
  std::vector<Cell> cells;
  for (const Cell& c : all_cells(g_max))
    if (c.d >= 2 && !reweighted_cell(c.g, c.stratum, c.component, c.d)) cells.push_back(c);
  std::vector<std::vector<OddObservation>> per(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      const Cell& c = cells[i];
      Route r = plan_route(c.g, c.stratum, c.component, c.d);
      std::vector<int> seen;
      for (int y = r.y_start; y <= y_budget; ++y) {
        auto o = try_build(r.family, r.params(y));
        if (!o) continue;
        CurveSystem cs = curve_system(*o);
        if (!is_pseudo_anosov(cs)) continue;
        StretchField sf = stretch_degree_direct(cs);
        if (sf.degree < 3 || sf.degree % 2 == 0) continue;
        if (std::find(seen.begin(), seen.end(), sf.degree) != seen.end()) continue;
        seen.push_back(sf.degree);
        per[i].push_back({c, r.family, y, trace_field_degree(cs).degree, sf.degree});
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<OddObservation> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace veechdeg

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <veechdeg/io.hpp>

using namespace veechdeg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kExitExhausted = 4;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InternalInconsistency:
    case ErrorCode::NonExactDivision:
    case ErrorCode::NonIntegralIntersection:
    case ErrorCode::IntervalAmbiguous:
    case ErrorCode::DegreeMismatch:
      return kExitInternal;
    case ErrorCode::SearchExhausted:
      return kExitExhausted;
    default:
      return kExitUsage;
  }
}

long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

FamilyParams parse_kv(const std::vector<std::string>& items) {
  FamilyParams p;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::InvalidArgument, "expected key=value, got '" + it + "'");
    p[it.substr(0, eq)] = it.substr(eq + 1);
  }
  return p;
}

struct ConstructOpts {
  std::string family;
  std::vector<std::string> params;
  std::string out = "json";
};

int cmd_construct(const ConstructOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  FamilyParams p = parse_kv(o.params);
  Origami s = build_family(o.family, p);
  long build_ms = ms_since(t0);
  auto t1 = std::chrono::steady_clock::now();
  CurveSystem cs = curve_system(s);
  DegreeCertificate cert = certify(cs);
  ComponentLabel label = component_label(s);
  long cert_ms = ms_since(t1);
  if (o.out == "csv") {
    CellResult row;
    Stratum st = stratum(s);
    row.cell = {genus(s), st, label.label, cert.trace_degree};
    row.ok = true;
    Realization z;
    z.y = p.count("y") ? std::stoi(p.at("y")) : 0;
    z.certificate = cert;
    z.label = label;
    z.origami = s;
    row.realization = z;
    row.ms = ms_since(t0);
    std::cout << csv_header() << "\n" << csv_row(row) << "\n";
    return kExitOk;
  }
  json j = surface_report(s, cs, cert, label);
  j["request"] = {{"command", "construct"}, {"family", o.family}, {"params", p}};
  j["timings_ms"] = {{"build", build_ms}, {"certify", cert_ms}, {"total", ms_since(t0)}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct RealizeOpts {
  int genus = 0;
  std::string stratum;
  std::string component = "any";
  int degree = 1;
  int y_max = 100;
  unsigned jobs = 1;
  std::string out = "json";
};

int cmd_realize(const RealizeOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  RealizeRequest req;
  req.g = o.genus;
  req.stratum = Stratum(parse_int_list(o.stratum));
  if (o.component != "any") req.component = parse_component(o.component);
  req.d = o.degree;
  req.y_max = o.y_max;
  req.jobs = o.jobs;
  Realization r = realize(req);
  if (o.out == "csv") {
    CellResult row;
    row.cell = {req.g, req.stratum, r.component, req.d};
    row.ok = true;
    row.realization = r;
    row.ms = ms_since(t0);
    std::cout << csv_header() << "\n" << csv_row(row) << "\n";
    return kExitOk;
  }
  json j = realization_report(r);
  j["request"] = {{"command", "realize"},     {"genus", o.genus},   {"stratum", req.stratum.orders},
                  {"component", o.component}, {"degree", o.degree}, {"y_max", o.y_max}};
  j["timings_ms"] = {{"total", ms_since(t0)}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct SweepOpts {
  int g_max = 4;
  int y_budget = 100;
  unsigned jobs = 1;
};

int cmd_verify(const SweepOpts& o) {
  if (o.g_max < 2) throw Error(ErrorCode::InvalidArgument, "--g-max must be at least 2");
  auto results = sweep(all_cells(o.g_max), o.y_budget, o.jobs);
  std::cout << csv_header() << "\n";
  std::vector<const CellResult*> failed;
  for (const auto& r : results) {
    std::cout << csv_row(r) << "\n";
    if (!r.ok) failed.push_back(&r);
  }
  std::cerr << results.size() - failed.size() << "/" << results.size() << " cells passed\n";
  for (const auto* r : failed)
    std::cerr << "FAILED g=" << r->cell.g << " " << r->cell.stratum.display() << " " << to_string(r->cell.component)
              << " d=" << r->cell.d << ": " << r->message << "\n";
  return failed.empty() ? kExitOk : kExitExhausted;
}

int cmd_explore_odd(const SweepOpts& o) {
  if (o.g_max < 2) throw Error(ErrorCode::InvalidArgument, "--g-max must be at least 2");
  auto obs = explore_odd(o.g_max, o.y_budget, o.jobs);
  std::cout << "genus,stratum,component,d,family,y,trace_degree,stretch_degree\n";
  for (const auto& x : obs)
    std::cout << x.cell.g << "," << detail::join(x.cell.stratum.orders) << "," << to_string(x.cell.component) << ","
              << x.cell.d << "," << x.family << "," << x.y << "," << x.trace_degree << "," << x.stretch_degree << "\n";
  std::cerr << obs.size() << " odd stretch degrees observed (routes scanned up to y = " << o.y_budget << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace field and stretch factor degrees of multitwists on square-tiled surfaces"};
  app.require_subcommand(1);

  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "Build a family member and certify it");
  construct->add_option("family", co.family, "Family name")->required()->check(CLI::IsMember(family_names()));
  construct->add_option("params", co.params, "key=value parameters");
  construct->add_option("--out", co.out, "Output format")->check(CLI::IsMember({"json", "csv"}));

  RealizeOpts ro;
  auto* realize_cmd = app.add_subcommand("realize", "Find a surface with a given trace field degree");
  realize_cmd->add_option("--genus", ro.genus)->required();
  realize_cmd->add_option("--stratum", ro.stratum, "Orders k1,...,km")->required();
  realize_cmd->add_option("--component", ro.component)
      ->check(CLI::IsMember({"hyp", "even", "odd", "nonhyp", "unique", "any"}));
  realize_cmd->add_option("--degree", ro.degree)->required();
  realize_cmd->add_option("--y-max", ro.y_max, "Search budget");
  realize_cmd->add_option("--jobs", ro.jobs);
  realize_cmd->add_option("--out", ro.out)->check(CLI::IsMember({"json", "csv"}));

  SweepOpts vo;
  auto* verify = app.add_subcommand("verify-theorems", "Realize every (stratum, component, d) cell up to a genus");
  verify->add_option("--g-max", vo.g_max);
  verify->add_option("--y-budget", vo.y_budget);
  verify->add_option("--jobs", vo.jobs);

  SweepOpts eo;
  eo.y_budget = 30;
  auto* odd = app.add_subcommand("explore-odd", "Report odd stretch degrees seen along the construction routes");
  odd->add_option("--g-max", eo.g_max);
  odd->add_option("--y-budget", eo.y_budget);
  odd->add_option("--jobs", eo.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(co);
    if (*realize_cmd) return cmd_realize(ro);
    if (*verify) return cmd_verify(vo);
    if (*odd) return cmd_explore_odd(eo);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

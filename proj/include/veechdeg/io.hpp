#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "realize.hpp"

namespace veechdeg {

using json = nlohmann::ordered_json;

constexpr int kReportSchema = 1;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline Int int_from_json(const json& j) {
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::InvalidArgument, "bad integer string");
    return x;
  }
  if (!j.is_number_integer()) throw Error(ErrorCode::InvalidArgument, "expected an integer");
  return Int(j.get<long>());
}

/// Coefficients from the constant term up.
inline json poly_to_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(int_to_json(c));
  return a;
}

inline IntPoly poly_from_json(const json& j) {
  std::vector<Int> c;
  for (const auto& x : j) c.push_back(int_from_json(x));
  return IntPoly(c);
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(int_to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

inline json rational_to_json(const Rational& q) { return q.get_str(); }

inline json root_to_json(const RootInterval& r) {
  return {{"lo", rational_to_json(r.lo)}, {"hi", rational_to_json(r.hi)}, {"approx", r.approx()}};
}

inline json origami_to_json(const Origami& o) {
  return {{"n", o.n_squares()}, {"sigma_h", o.sigma_h()}, {"sigma_v", o.sigma_v()}};
}

inline Origami origami_from_json(const json& j) {
  try {
    auto h = j.at("sigma_h").get<Perm>();
    auto v = j.at("sigma_v").get<Perm>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != h.size())
      throw Error(ErrorCode::NotAPermutation, "n disagrees with sigma_h");
    return Origami(std::move(h), std::move(v));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("origami json: ") + e.what());
  }
}

inline json inertia_to_json(const Inertia& in) {
  return {{"n_pos", in.n_pos}, {"n_neg", in.n_neg}, {"n_zero", in.n_zero}, {"signature", in.signature()}};
}

inline json certificate_to_json(const DegreeCertificate& c) {
  return {{"trace_degree", c.trace_degree},
          {"stretch_degree", c.stretch_degree},
          {"gram_charpoly", poly_to_json(c.gram_charpoly)},
          {"pf_minpoly", poly_to_json(c.pf_minpoly)},
          {"pf_minpoly_text", c.pf_minpoly.to_string()},
          {"stretch_minpoly", poly_to_json(c.stretch_minpoly)},
          {"stretch_minpoly_text", c.stretch_minpoly.to_string()},
          {"inertia_of_omega_plus_2I", inertia_to_json(c.inertia_of_omega_plus_2I)},
          {"criterion_applies", c.criterion_applies},
          {"pf_root", root_to_json(c.pf_root)},
          {"stretch_root", root_to_json(c.stretch_root)}};
}

inline json label_to_json(const ComponentLabel& l) {
  json j{{"label", to_string(l.label)},
         {"hyperelliptic", l.hyperelliptic},
         {"low_genus_caveat", l.low_genus_caveat},
         {"involution_fixed_points", l.involution_fixed_points}};
  j["spin"] = l.spin ? json(*l.spin) : json(nullptr);
  return j;
}

inline json weights_to_json(const CurveSystem& cs) {
  json a = json::array(), b = json::array();
  for (const auto& x : cs.a) a.push_back(int_to_json(x));
  for (const auto& x : cs.b) b.push_back(int_to_json(x));
  return {{"a", a}, {"b", b}};
}

/// Report body shared by construct and realize: everything derived from the
/// surface and the curve system actually used.
inline json surface_report(const Origami& o, const CurveSystem& cs, const DegreeCertificate& cert,
                           const ComponentLabel& label) {
  json st = json::array();
  for (int k : stratum(o).orders) st.push_back(k);
  IntPoly chi = charpoly(gram(cs).matrix());
  return {{"schema", kReportSchema},
          {"origami", origami_to_json(o)},
          {"stratum", st},
          {"genus", genus(o)},
          {"component", label_to_json(label)},
          {"twist_weights", weights_to_json(cs)},
          {"xxt", matrix_to_json(gram(cs).matrix())},
          {"charpoly", poly_to_json(chi)},
          {"charpoly_text", chi.to_string()},
          {"certificate", certificate_to_json(cert)}};
}

inline json realization_report(const Realization& r) {
  json j = surface_report(*r.origami, r.curves, r.certificate, r.label);
  j["route"] = {{"family", r.family},
                {"note", r.note},
                {"params", r.params},
                {"y_found", r.y},
                {"weighted", r.weighted},
                {"criterion_guaranteed", r.criterion_guaranteed}};
  return j;
}

/// Recomputes the certificate from the embedded origami and twist weights and
/// compares it with the stored one. Returns the names of mismatching fields.
inline std::vector<std::string> revalidate_report(const json& report) {
  std::vector<std::string> bad;
  if (report.value("schema", 0) != kReportSchema) bad.push_back("schema");
  Origami o = origami_from_json(report.at("origami"));
  CurveSystem cs = curve_system(o);
  if (report.contains("twist_weights")) {
    const auto& w = report.at("twist_weights");
    if (w.at("a").size() != cs.n || w.at("b").size() != cs.m) {
      bad.push_back("twist_weights");
      return bad;
    }
    for (std::size_t i = 0; i < cs.n; ++i) cs.a[i] = int_from_json(w.at("a")[i]);
    for (std::size_t j = 0; j < cs.m; ++j) cs.b[j] = int_from_json(w.at("b")[j]);
  }
  json fresh = surface_report(o, cs, certify(cs), component_label(o));
  for (const char* key : {"stratum", "genus", "xxt", "charpoly"})
    if (fresh[key] != report.at(key)) bad.push_back(key);
  const json& c0 = report.at("certificate");
  const json& c1 = fresh["certificate"];
  for (const char* key : {"trace_degree", "stretch_degree", "gram_charpoly", "pf_minpoly", "stretch_minpoly",
                          "inertia_of_omega_plus_2I", "criterion_applies"})
    if (c0.at(key) != c1[key]) bad.push_back(std::string("certificate.") + key);
  for (const char* key : {"label", "hyperelliptic", "spin"})
    if (report.at("component").at(key) != fresh["component"][key]) bad.push_back(std::string("component.") + key);
  return bad;
}

// CSV rows for sweeps.

inline const char* csv_header() {
  return "genus,stratum,component,d,y_found,trace_degree,stretch_degree,criterion_applied,hyperelliptic,spin,n_squares,"
         "ms_elapsed";
}

/// Strata are written as "k1 k2 ..." so the row needs no quoting.
inline std::string csv_row(const CellResult& r) {
  std::string st;
  for (std::size_t i = 0; i < r.cell.stratum.orders.size(); ++i)
    st += (i ? " " : "") + std::to_string(r.cell.stratum.orders[i]);
  std::string row = std::to_string(r.cell.g) + "," + st + "," + to_string(r.cell.component) + "," +
                    std::to_string(r.cell.d) + ",";
  if (!r.ok) return row + "FAIL,,,,,,," + std::to_string(r.ms);
  const Realization& z = *r.realization;
  row += std::to_string(z.y) + "," + std::to_string(z.certificate.trace_degree) + "," +
         std::to_string(z.certificate.stretch_degree) + "," + (z.certificate.criterion_applies ? "true" : "false") +
         "," + (z.label.hyperelliptic ? "true" : "false") + "," + (z.label.spin ? std::to_string(*z.label.spin) : "") +
         "," + std::to_string(z.origami->n_squares()) + "," + std::to_string(r.ms);
  return row;
}

}  // namespace veechdeg

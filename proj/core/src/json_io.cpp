#include "bern/json_io.hpp"

namespace bern {

namespace {

Json cplx(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex cplx_from(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex value must be a [re, im] pair");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json to_json(const RationalFunction& f) {
  Json j;
  j["constant"] = cplx(f.constant_term());
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json jt;
    jt["pole"] = cplx(t.pole);
    Json cs = Json::array();
    for (const auto& a : t.coeffs) cs.push_back(cplx(a));
    jt["coeffs"] = cs;
    terms.push_back(jt);
  }
  j["terms"] = terms;
  if (f.is_polynomial()) {
    Json ps = Json::array();
    for (const auto& a : f.polynomial_coeffs()) ps.push_back(cplx(a));
    j["polynomial"] = ps;
  }
  return j;
}

RationalFunction rational_from_json(const Json& j) {
  if (j.contains("polynomial")) {
    std::vector<Complex> cs;
    for (const auto& c : j["polynomial"]) cs.push_back(cplx_from(c));
    return RationalFunction::polynomial(std::move(cs));
  }
  Complex constant{0.0, 0.0};
  if (j.contains("constant")) constant = cplx_from(j["constant"]);
  std::vector<PoleTerm> terms;
  if (j.contains("terms"))
    for (const auto& jt : j["terms"]) {
      PoleTerm t;
      t.pole = cplx_from(jt.at("pole"));
      for (const auto& c : jt.at("coeffs")) t.coeffs.push_back(cplx_from(c));
      terms.push_back(std::move(t));
    }
  return RationalFunction{constant, std::move(terms)};
}

Json to_json(const NormResult& res) {
  Json j;
  j["value"] = res.value;
  j["method"] = res.method == NormMethod::series ? "series" : "quadrature";
  j["error_estimate"] = res.error_estimate;
  Json grid;
  grid["angular_points"] = res.grid.angular_points;
  grid["annulus_alpha"] = res.grid.annulus_alpha;
  grid["tolerance"] = res.grid.tolerance;
  j["grid"] = grid;
  return j;
}

Json to_json(const BernsteinEstimate& e) {
  Json j;
  j["n"] = e.n;
  j["r"] = e.r;
  j["space"] = e.space;
  j["kind"] = to_string(e.kind);
  j["value"] = e.value;
  j["normalized"] = e.normalized;
  j["error_estimate"] = e.error_estimate;
  if (e.error) j["error"] = *e.error;
  return j;
}

Json to_json(const LimitCheckReport& rep) {
  Json j;
  j["r"] = rep.r;
  j["limit"] = rep.limit;
  j["tol"] = rep.tol;
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json jr;
    jr["n"] = row.n;
    jr["value"] = row.value;
    jr["value_over_n"] = row.value_over_n;
    jr["rel_error"] = row.rel_error;
    rows.push_back(jr);
  }
  j["rows"] = rows;
  j["monotone_value"] = rep.monotone_value;
  j["monotone_error"] = rep.monotone_error;
  j["final_error_ok"] = rep.final_error_ok;
  j["passed"] = rep.passed();
  return j;
}

}  // namespace bern

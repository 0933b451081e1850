#include "fz/serialize.hpp"

#include <stdexcept>

#include "fz/text.hpp"

namespace fz {

namespace {

Json coeff_list(const FieldPtr& f, std::span<const Elem> cs) {
  Json a = Json::array();
  for (Elem c : cs) a.push_back(elem_to_json(f, c));
  return a;
}

std::vector<Elem> coeffs_from(const FieldPtr& f, const Json& a) {
  std::vector<Elem> out;
  for (const auto& x : a) out.push_back(elem_from_json(f, x));
  return out;
}

}  // namespace

Json field_to_json(const FieldPtr& f) {
  Json j;
  j["p"] = f->p();
  j["m"] = f->m();
  j["modulus"] = f->m() == 1 ? Json(nullptr) : Json(f->modulus());
  return j;
}

FieldPtr field_from_json(const Json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto m = j.value("m", 1u);
  std::optional<std::vector<std::uint32_t>> mod;
  if (j.contains("modulus") && !j["modulus"].is_null()) mod = j["modulus"].get<std::vector<std::uint32_t>>();
  return Field::make(p, m, mod);
}

Json elem_to_json(const FieldPtr& f, Elem c) {
  if (f->m() == 1) return c;
  return f->coords(c);
}

Elem elem_from_json(const FieldPtr& f, const Json& j) {
  if (f->m() == 1) {
    const auto v = j.get<std::uint32_t>();
    if (v >= f->p()) throw std::invalid_argument("element out of range");
    return v;
  }
  const auto c = j.get<std::vector<std::uint32_t>>();
  return f->from_coords(c);
}

Json to_json(const UniPoly& p) {
  Json j;
  j["field"] = field_to_json(p.field());
  j["var"] = p.var() == Var::T ? "t" : "T";
  j["coeffs"] = coeff_list(p.field(), p.coeffs());
  return j;
}

UniPoly uni_from_json(const Json& j) {
  const FieldPtr f = field_from_json(j.at("field"));
  const std::string var = j.at("var").get<std::string>();
  if (var != "t" && var != "T") throw std::invalid_argument("unknown variable " + var);
  return UniPoly(f, var == "t" ? Var::T : Var::Theta, coeffs_from(f, j.at("coeffs")));
}

Json to_json(const BiPoly& p) {
  Json j;
  j["field"] = field_to_json(p.field());
  Json cs = Json::array();
  for (const auto& c : p.coeffs()) cs.push_back(coeff_list(p.field(), c.coeffs()));
  j["tCoeffs"] = std::move(cs);
  return j;
}

BiPoly bi_from_json(const Json& j) {
  const FieldPtr f = field_from_json(j.at("field"));
  std::vector<UniPoly> cs;
  for (const auto& c : j.at("tCoeffs")) cs.emplace_back(f, Var::Theta, coeffs_from(f, c));
  return BiPoly(f, std::move(cs));
}

Json to_json(const RationalFunction& r) {
  Json j;
  j["field"] = field_to_json(r.field());
  j["num"] = coeff_list(r.field(), r.num().coeffs());
  j["den"] = coeff_list(r.field(), r.den().coeffs());
  return j;
}

RationalFunction rational_from_json(const Json& j) {
  const FieldPtr f = field_from_json(j.at("field"));
  return RationalFunction(UniPoly(f, Var::Theta, coeffs_from(f, j.at("num"))),
                          UniPoly(f, Var::Theta, coeffs_from(f, j.at("den"))));
}

Json to_json(const LaurentSeries& s) {
  Json j;
  j["field"] = field_to_json(s.field());
  j["valuation"] = s.is_zero_to_order() ? Json(nullptr) : Json(s.valuation());
  j["coeffs"] = coeff_list(s.field(), s.coeffs());
  j["exactOrder"] = s.is_exact() ? Json("exact") : Json(s.exact_order());
  return j;
}

LaurentSeries laurent_from_json(const Json& j) {
  const FieldPtr f = field_from_json(j.at("field"));
  const auto& eo = j.at("exactOrder");
  const std::int64_t order = eo.is_string() ? LaurentSeries::kExact : eo.get<std::int64_t>();
  const auto& v = j.at("valuation");
  return LaurentSeries(f, v.is_null() ? order : v.get<std::int64_t>(), coeffs_from(f, j.at("coeffs")), order);
}

Json to_json(const EPoint& e) {
  Json a = Json::array();
  for (int l = 0; l < e.n(); ++l) {
    for (int j = e.n() - 1 - l; j >= 0; --j) {
      Json s;
      s["l"] = l;
      s["j"] = j;
      s["value"] = to_string(e.slot(l, j));
      a.push_back(std::move(s));
    }
  }
  return a;
}

EPoint epoint_from_json(const Json& j, const FieldPtr& f) {
  const int d = static_cast<int>(j.size());
  int n = 0;
  while (EPoint::dimension(n) < d) ++n;
  if (EPoint::dimension(n) != d) throw std::invalid_argument("slot count is not triangular");
  EPoint e(n, f);
  for (const auto& s : j) e.slot(s.at("l").get<int>(), s.at("j").get<int>()) = parse_theta_poly(s.at("value").get<std::string>(), f);
  return e;
}

}  // namespace fz

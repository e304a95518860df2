#include "gea/io.hpp"

#include "gea/error.hpp"

#include <string>

namespace gea {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

long integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

Json optional_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

Json to_json(const LaurentPoly& p) {
  Json out;
  out["min_exp"] = p.min_exp();
  out["coeffs"] = to_json(p.coeffs());
  return out;
}

Json to_json(const Poly& p) { return to_json(p.coeffs()); }

Json to_json(const RationalFunction& f) {
  Json out;
  out["num"] = to_json(f.num());
  out["den"] = to_json(f.den());
  return out;
}

Json to_json(const GASolution& sol) {
  Json out;
  out["P"] = to_json(sol.P);
  out["k"] = sol.k;
  out["common_den"] = to_json(sol.common_den);
  Json gfs = Json::array();
  for (const auto& f : sol.gfs) gfs.push_back(to_json(f));
  out["gfs"] = std::move(gfs);
  out["symmetric"] = sol.symmetric;
  return out;
}

Json to_json(const LinearRecurrence& rec) {
  Json out;
  out["order"] = rec.order();
  out["rec_coeffs"] = to_json(rec.rec_coeffs);
  out["initials"] = to_json(rec.initials);
  return out;
}

Json to_json(const EqualityVerdict& v) {
  Json out;
  out["verdict"] = v.equal ? "equal" : "first_difference";
  out["window"] = v.window;
  if (!v.equal) {
    out["n"] = v.n;
    out["a"] = to_string(v.a_value);
    out["b"] = to_string(v.b_value);
  }
  return out;
}

Json to_json(const Tale& t) {
  Json out;
  out["P"] = to_json(t.P);
  out["k"] = optional_long(t.k);
  out["a"] = optional_long(t.a);
  out["candidate"] = to_json(t.candidate);
  out["prefix_len"] = t.prefix_len;
  out["first_failure_n"] = t.first_failure_n;
  out["expected"] = to_string(t.expected);
  out["actual"] = to_string(t.actual);
  out["label"] = t.label;
  out["index_offset"] = t.index_offset;
  out["fit_window"] = t.fit_window;
  out["horizon"] = t.horizon;
  out["true_terms"] = to_json(t.true_terms);
  out["candidate_terms"] = to_json(t.candidate_terms);
  return out;
}

Json to_json(const TaleSearch& s) {
  Json out;
  out["outcome"] = to_string(s.outcome);
  out["note"] = s.note;
  out["tale"] = s.tale ? to_json(*s.tale) : Json(nullptr);
  return out;
}

Json to_json(const GeorgeReport& r) {
  Json out;
  out["holds"] = r.all_hold();
  Json rewriting;
  rewriting["holds"] = r.rewriting_holds;
  rewriting["checked_n_up_to"] = r.rewrite_horizon;
  out["rewriting"] = std::move(rewriting);
  Json central;
  central["holds"] = r.only_central_summands_below_8;
  central["first_n_with_outer_summand"] = r.first_n_with_outer_summand;
  out["central_summands_only_below_8"] = std::move(central);
  Json window;
  window["holds"] = r.euler_window_holds;
  window["checked_n_up_to"] = r.euler_window;
  window["left_side"] = to_json(r.left_side);
  window["right_side"] = to_json(r.right_side);
  out["finite_check"] = std::move(window);
  Json proof;
  proof["left_recurrence"] = to_json(r.left_recurrence);
  proof["right_recurrence"] = to_json(r.right_recurrence);
  proof["result"] = to_json(r.rigorous);
  out["rigorous"] = std::move(proof);
  Json oracle;
  oracle["holds"] = r.oracle_holds;
  oracle["checked_n_up_to"] = r.oracle_horizon;
  if (!r.oracle_holds) oracle["first_mismatch"] = r.oracle_first_mismatch;
  out["brute_force"] = std::move(oracle);
  return out;
}

Json to_json(const DieSpec& die) {
  Json faces = Json::array();
  for (const auto& f : die.faces()) {
    Json face;
    face["value"] = f.value;
    face["prob"] = to_string(f.prob);
    faces.push_back(std::move(face));
  }
  Json out;
  out["faces"] = std::move(faces);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  throw ParseError("rationals must be encoded as \"p/q\" strings");
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  return LaurentPoly(integer_field(j, "min_exp"), rationals_from_json(field(j, "coeffs")));
}

Poly poly_from_json(const Json& j) { return Poly(rationals_from_json(j)); }

RationalFunction ratfun_from_json(const Json& j) {
  return rf_normalize(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

GASolution ga_solution_from_json(const Json& j) {
  GASolution sol;
  sol.P = laurent_from_json(field(j, "P"));
  sol.k = integer_field(j, "k");
  sol.common_den = poly_from_json(field(j, "common_den"));
  const Json& gfs = field(j, "gfs");
  if (!gfs.is_array()) throw ParseError("field 'gfs' must be an array");
  for (const auto& f : gfs) sol.gfs.push_back(ratfun_from_json(f));
  const Json& sym = field(j, "symmetric");
  if (!sym.is_boolean()) throw ParseError("field 'symmetric' must be a boolean");
  sol.symmetric = sym.get<bool>();
  if (static_cast<long>(sol.gfs.size()) != sol.k) throw DomainError("GASolution: gfs length differs from k");
  return sol;
}

LinearRecurrence recurrence_from_json(const Json& j) {
  LinearRecurrence rec{rationals_from_json(field(j, "rec_coeffs")), rationals_from_json(field(j, "initials"))};
  if (j.contains("order") && integer_field(j, "order") != rec.order())
    throw DomainError("LinearRecurrence: 'order' does not match rec_coeffs");
  rec.validate();
  return rec;
}

DieSpec die_from_json(const Json& j) {
  const Json& faces = j.is_object() ? field(j, "faces") : j;
  if (!faces.is_array()) throw ParseError("die faces must be an array");
  std::vector<DieFace> out;
  for (const auto& f : faces) out.push_back({integer_field(f, "value"), rational_from_json(field(f, "prob"))});
  return DieSpec(std::move(out));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

}  // namespace gea

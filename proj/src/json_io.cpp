#include "cusp/json_io.hpp"

#include <set>
#include <sstream>

namespace cusp::json_io {

namespace {

void only_keys(const Json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, std::string(what) + " must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) fail(ErrorCode::InvalidInput, std::string("unknown field '") + k + "' in " + what);
  }
}

Int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::InvalidInput, std::string(what) + " must be an integer");
  return j.get<Int>();
}

}  // namespace

Rational parse_rational_value(const Json& j) {
  if (!j.is_string()) fail(ErrorCode::InvalidInput, "rational coefficients must be strings such as \"-3/4\"");
  return parse_rational(j.get<std::string>());
}

PuiseuxCurve parse_curve(const Json& j, std::optional<Int> truncation_override) {
  only_keys(j, {"n", "m", "y", "truncation", "name"}, "curve");
  if (!j.contains("n") || !j.contains("y")) fail(ErrorCode::InvalidInput, "curve needs fields 'n' and 'y'");
  const Int n = integer(j["n"], "n");
  if (!j["y"].is_array() || j["y"].empty()) fail(ErrorCode::InvalidInput, "'y' must be a nonempty list of [exponent, \"coefficient\"]");
  std::map<Int, Rational> terms;
  for (const auto& t : j["y"]) {
    if (!t.is_array() || t.size() != 2) fail(ErrorCode::InvalidInput, "each y term must be [exponent, \"coefficient\"]");
    const Int k = integer(t[0], "exponent");
    if (k < 0) fail(ErrorCode::InvalidInput, "negative exponent in y");
    if (!terms.emplace(k, parse_rational_value(t[1])).second) {
      fail(ErrorCode::InvalidInput, "duplicate exponent " + std::to_string(k) + " in y");
    }
  }
  if (terms.begin()->second == 0) {
    fail(ErrorCode::NotACusp, "zero leading coefficient at exponent " + std::to_string(terms.begin()->first));
  }
  const Int lead = terms.begin()->first;
  if (j.contains("m") && integer(j["m"], "m") != lead) {
    fail(ErrorCode::NotACusp, "leading exponent " + std::to_string(lead) + " does not match m");
  }
  if (n >= 1 && lead > n && gcd(n, lead) != 1) {
    fail(ErrorCode::InvalidPair, "non-coprime pair (" + std::to_string(n) + "," + std::to_string(lead) + ")");
  }
  std::optional<Int> truncation;
  if (j.contains("truncation")) truncation = integer(j["truncation"], "truncation");
  if (truncation_override) truncation = truncation_override;
  PuiseuxCurve::Terms list(terms.begin(), terms.end());
  PuiseuxCurve c(n, list);
  if (truncation) {
    if (*truncation < c.truncation()) {
      fail(ErrorCode::InvalidInput, "truncation " + std::to_string(*truncation) + " below the default " + std::to_string(c.truncation()));
    }
    c = c.with_truncation(*truncation);
  }
  return c;
}

OneForm parse_form(const Json& j) {
  only_keys(j, {"dx", "dy", "name"}, "form");
  Polynomial parts[2];
  const char* keys[2] = {"dx", "dy"};
  for (int side = 0; side < 2; ++side) {
    if (!j.contains(keys[side])) continue;
    const Json& list = j[keys[side]];
    if (!list.is_array()) fail(ErrorCode::InvalidInput, std::string("'") + keys[side] + "' must be a list of [a, b, \"coefficient\"]");
    for (const auto& t : list) {
      if (!t.is_array() || t.size() != 3) fail(ErrorCode::InvalidInput, "each form term must be [a, b, \"coefficient\"]");
      const Int a = integer(t[0], "exponent");
      const Int b = integer(t[1], "exponent");
      if (a < 0 || b < 0) fail(ErrorCode::InvalidInput, "negative exponent in form");
      parts[side].add_term(a, b, parse_rational_value(t[2]));
    }
  }
  OneForm w = OneForm::from_plain(parts[0], parts[1]);
  if (w.is_zero()) fail(ErrorCode::ZeroForm, "form is zero");
  return w;
}

PuiseuxPair parse_pair(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 2) fail(ErrorCode::InvalidInput, "pair must be written n,m");
  if (v[0] >= 1 && v[1] >= 1 && gcd(v[0], v[1]) != 1) {
    fail(ErrorCode::InvalidPair, "non-coprime pair (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")");
  }
  return PuiseuxPair(v[0], v[1]);
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidInput, "not an integer: '" + item + "'");
    }
    if (pos != item.size()) fail(ErrorCode::InvalidInput, "not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) fail(ErrorCode::InvalidInput, "empty integer list");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) fail(ErrorCode::InvalidInput, "empty rational list");
  return out;
}

Json rational(const Rational& q) { return to_string(q); }

Json polynomial(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) out.push_back({mono.a, mono.b, to_string(c)});
  return out;
}

Json form(const OneForm& w) { return {{"dx", polynomial(w.plain_dx())}, {"dy", polynomial(w.plain_dy())}}; }

Json series(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& [k, c] : s.terms()) out.push_back({k, to_string(c)});
  return out;
}

Json curve(const PuiseuxCurve& c) {
  Json y = Json::array();
  for (const auto& [k, q] : c.y_terms()) y.push_back({k, to_string(q)});
  return {{"n", c.pair().n()}, {"m", c.pair().m()}, {"truncation", c.truncation()}, {"exact", c.is_exact()}, {"y", y}};
}

Json order(const OrderResult& o) {
  if (o.finite) return o.value;
  return {{"at_least", o.value}};
}

Json semimodule(const GammaSemimodule& sm) {
  Json out{{"n", sm.semigroup().n()},
           {"m", sm.semigroup().m()},
           {"basis", sm.basis()},
           {"axes", sm.axes()},
           {"conductor", sm.conductor()},
           {"increasing", sm.is_increasing()}};
  if (sm.is_curve_shaped()) out["critical_orders"] = sm.critical_orders();
  Json limits = Json::array();
  for (int i = 0; i <= sm.s(); ++i) {
    const Limits l = sm.limits(i);
    limits.push_back({l.ell1, l.ell2});
  }
  out["limits"] = limits;
  return out;
}

Json delorme(const DelormeDecomposition& d) {
  Json coeffs = Json::array();
  for (const auto& f : d.coefficients) coeffs.push_back(polynomial(f));
  Json values = Json::array();
  for (const auto& v : d.values) values.push_back(order(v));
  return {{"i", d.i}, {"j", d.j}, {"k", d.k}, {"vij", d.vij}, {"coefficients", coeffs}, {"values", values}};
}

Json basis(const ExtendedStandardBasis& b, bool with_delorme) {
  Json forms = Json::array();
  for (int i = -1; i <= b.s(); ++i) forms.push_back(form(b.form(i)));
  Json out{{"curve", curve(b.curve)},
           {"lambda", b.lambda()},
           {"t", b.critical_orders()},
           {"u", b.axes()},
           {"s", b.s()},
           {"conductor", b.semimodule.conductor()},
           {"forms", forms}};
  Json nu_e = Json::array();
  for (int i = -1; i <= b.s() + (b.is_adjusted() ? 1 : 0); ++i) nu_e.push_back(nu_E_form(b.form(i), b.curve.pair()));
  out["nu_E"] = nu_e;
  if (b.is_adjusted()) {
    out["adjusted_form"] = form(b.form(b.s() + 1));
    out["adjusted_value"] = order(*b.adjusted_value);
  } else {
    out["adjusted_form"] = nullptr;
  }
  if (with_delorme) {
    Json list = Json::array();
    for (int i = 0; i <= b.s(); ++i) {
      for (int j = 0; j <= i; ++j) list.push_back(delorme(delorme_decompose(b, i, j)));
    }
    out["delorme"] = list;
  }
  return out;
}

Json semiroot_report(const SemirootReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json out{{"i", r.i},
           {"a", to_string(r.a)},
           {"parametrization", curve(r.curve)},
           {"expected", r.expected},
           {"pass", r.pass()},
           {"checks", checks}};
  out["semimodule"] = r.computed ? Json(*r.computed) : Json(nullptr);
  out["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
  return out;
}

Json dicritical(const OneForm& w, const PuiseuxPair& pair, const DicriticalVerdict& v) {
  const auto& c = v.certificate;
  Json out{{"n", pair.n()},
           {"m", pair.m()},
           {"dicritical", v.dicritical},
           {"combinatorial", c.combinatorial},
           {"geometric", c.geometric},
           {"resonant", c.resonant},
           {"nu_E", nu_E_form(w, pair)},
           {"rdo", rdo(w, pair)},
           {"basic", is_basic(w, pair)},
           {"copair", {copair(pair).b, copair(pair).d}},
           {"terminal_factor", {c.terminal_factor.a, c.terminal_factor.b}}};
  out["vertex"] = c.vertex ? Json{c.vertex->a, c.vertex->b} : Json(nullptr);
  out["initial_part"] = form(initial_part(w, pair, nu_E_form(w, pair)));
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cusp::json_io

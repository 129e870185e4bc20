#pragma once

#include <string>

#include <json.hpp>

#include "cusp/blowup.hpp"
#include "cusp/semiroot.hpp"

namespace cusp::json_io {

using Json = nlohmann::json;

// Inputs. Unknown keys are rejected; errors are InvalidInput, InvalidPair or NotACusp.
// Curve: {"n": 5, "y": [[11, "1"], ...]} with optional "m", "truncation", "name".
PuiseuxCurve parse_curve(const Json& j, std::optional<Int> truncation_override = std::nullopt);
// Form: {"dx": [[a, b, "c"], ...], "dy": [...]}
OneForm parse_form(const Json& j);
Rational parse_rational_value(const Json& j);
// "n,m"
PuiseuxPair parse_pair(const std::string& text);
std::vector<Int> parse_int_list(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);

// Outputs.
Json rational(const Rational& q);
Json polynomial(const Polynomial& p);
Json form(const OneForm& w);
Json series(const TruncatedSeries& s);
Json curve(const PuiseuxCurve& c);
Json order(const OrderResult& o);
Json semimodule(const GammaSemimodule& sm);
Json delorme(const DelormeDecomposition& d);
Json basis(const ExtendedStandardBasis& b, bool with_delorme);
Json semiroot_report(const SemirootReport& r);
Json dicritical(const OneForm& w, const PuiseuxPair& pair, const DicriticalVerdict& v);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace cusp::json_io

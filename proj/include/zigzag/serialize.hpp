#pragma once

// JSON forms used by the CLI. A Poly is an array of coefficient strings
// ("p/q", or "p" when the denominator is 1) ordered low-to-high degree; a
// RatFn is {"num": [...], "den": [...]} in normalized form. Round-trips are
// bit-exact.

#include <json.hpp>

#include "zigzag/exact.hpp"

namespace zigzag {

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json ratfn_to_json(const RatFn& f);
RatFn ratfn_from_json(const nlohmann::json& j);

// Human-readable form like "1 - 2x - x^2 + x^3".
std::string poly_to_text(const Poly& p);

}  // namespace zigzag

#include "zigzag/serialize.hpp"

#include <sstream>

namespace zigzag {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rat_to_string(c));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  std::vector<Rat> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rat_from_string(e.get<std::string>()));
  return Poly(std::move(c));
}

nlohmann::json ratfn_to_json(const RatFn& f) {
  return nlohmann::json{{"num", poly_to_json(f.num())},
                        {"den", poly_to_json(f.den())}};
}

RatFn ratfn_from_json(const nlohmann::json& j) {
  return RatFn(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

std::string poly_to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit = (mag == 1) && i > 0;
    if (!unit) os << rat_to_string(mag);
    if (i > 0) {
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace zigzag

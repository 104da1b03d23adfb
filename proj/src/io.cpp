#include "prasymp/io.hpp"

#include <charconv>
#include <sstream>
#include <system_error>

namespace prasymp {

std::string fmt_double(double v) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw InvalidInputError("bad numeric literal: '" + s + "'");
  return v;
}

std::string to_text(const ScaledComplex& v) {
  return fmt_double(v.mantissa().real()) + " " + fmt_double(v.mantissa().imag()) + " " +
         std::to_string(v.exp2());
}

ScaledComplex scaled_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string re, im, e;
  if (!(in >> re >> im >> e)) throw InvalidInputError("bad scaled literal: '" + text + "'");
  std::string rest;
  if (in >> rest) throw InvalidInputError("trailing tokens in scaled literal: '" + text + "'");
  std::int64_t ev = 0;
  auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), ev);
  if (ec != std::errc() || p != e.data() + e.size())
    throw InvalidInputError("bad exponent literal: '" + e + "'");
  Complex m(parse_double(re), parse_double(im));
  if (m == 0.0) {
    if (ev != 0) throw InvalidInputError("zero mantissa requires zero exponent");
    return ScaledComplex();
  }
  ScaledComplex v = ScaledComplex::normalized(m, ev);
  if (v.mantissa() != m)
    throw InvalidInputError("mantissa not normalized in scaled literal: '" + text + "'");
  return v;
}

nlohmann::json scaled_to_json(const ScaledComplex& v) {
  return {{"re", v.mantissa().real()}, {"im", v.mantissa().imag()}, {"exp2", v.exp2()}};
}

ScaledComplex scaled_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j.contains("exp2"))
    throw InvalidInputError("scaled value must be {re, im, exp2}");
  Complex m(j.at("re").get<double>(), j.at("im").get<double>());
  std::int64_t e = j.at("exp2").get<std::int64_t>();
  if (m == 0.0) {
    if (e != 0) throw InvalidInputError("zero mantissa requires zero exponent");
    return ScaledComplex();
  }
  ScaledComplex v = ScaledComplex::normalized(m, e);
  if (v.mantissa() != m) throw InvalidInputError("mantissa not normalized in scaled value");
  return v;
}

}  // namespace prasymp

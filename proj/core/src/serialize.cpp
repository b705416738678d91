#include <cstdio>
#include <sstream>

#include "ucv/model.hpp"
#include "ucv/search.hpp"

namespace ucv {
namespace {

using nlohmann::json;

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::invalid_argument(std::string("missing rational field '") + key + "'");
  }
  auto q = parse_rational(j.at(key).get<std::string>());
  if (!q) throw std::invalid_argument(std::string("malformed rational in field '") + key + "'");
  return *q;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

json to_json(const ClassMember& m) {
  json b = json::array();
  for (const auto& q : m.b()) b.push_back(to_string(q));
  return {{"lambda", to_string(m.lambda())}, {"b", std::move(b)}};
}

json to_json(const CoefficientReport& r) {
  return {
      {"a2", to_string(r.a.a2)},
      {"a3", to_string(r.a.a3)},
      {"a4", to_string(r.a.a4)},
      {"a5", to_string(r.a.a5)},
      {"A2", to_string(r.inverse.A2)},
      {"A3", to_string(r.inverse.A3)},
      {"A4", to_string(r.inverse.A4)},
      {"gamma1", to_string(r.gamma.gamma1)},
      {"gamma2", to_string(r.gamma.gamma2)},
      {"gamma3", to_string(r.gamma.gamma3)},
      {"h2f", to_string(r.hankel.h2f)},
      {"h3f", to_string(r.hankel.h3f)},
      {"h2inv", to_string(r.hankel.h2inv)},
      {"h3inv", to_string(r.hankel.h3inv)},
      {"z23", to_string(r.zalcman.z23)},
      {"z24", to_string(r.zalcman.z24)},
  };
}

json to_json(const ClassMember& m, const CoefficientReport& r) {
  json j = to_json(m);
  j.update(to_json(r));
  return j;
}

ClassMember member_from_json(const json& j) {
  const Rational lambda = rational_field(j, "lambda");
  if (!j.contains("b") || !j.at("b").is_array()) throw std::invalid_argument("missing array field 'b'");
  std::vector<Rational> b;
  for (const auto& entry : j.at("b")) {
    if (!entry.is_string()) throw std::invalid_argument("b entries must be rational strings");
    auto q = parse_rational(entry.get<std::string>());
    if (!q) throw std::invalid_argument("malformed rational in 'b'");
    b.push_back(*q);
  }
  return ClassMember::validate(lambda, std::move(b));
}

CoefficientReport report_from_json(const json& j) {
  CoefficientReport r;
  r.a = {rational_field(j, "a2"), rational_field(j, "a3"), rational_field(j, "a4"), rational_field(j, "a5")};
  r.inverse = {rational_field(j, "A2"), rational_field(j, "A3"), rational_field(j, "A4")};
  r.gamma = {rational_field(j, "gamma1"), rational_field(j, "gamma2"), rational_field(j, "gamma3")};
  r.hankel = {rational_field(j, "h2f"), rational_field(j, "h3f"), rational_field(j, "h2inv"),
              rational_field(j, "h3inv")};
  r.zalcman = {rational_field(j, "z23"), rational_field(j, "z24")};
  return r;
}

json to_json(const BoundCertificate& c) {
  json argmax = json::array();
  for (const auto& q : c.argmax) argmax.push_back(to_string(q));
  return {
      {"lambda", to_string(c.lambda)},
      {"functional", c.functional},
      {"direction", std::string(to_string(c.direction))},
      {"searched", c.searched_value},
      {"closed_form", c.closed_form ? json(*c.closed_form) : json(nullptr)},
      {"gap", c.gap ? json(*c.gap) : json(nullptr)},
      {"status", std::string(to_string(c.status))},
      {"warn", c.sharpness_warning()},
      {"violations", c.violations},
      {"argmax", std::move(argmax)},
  };
}

json to_json(std::span<const BoundCertificate> certs) {
  json arr = json::array();
  for (const auto& c : certs) arr.push_back(to_json(c));
  return arr;
}

std::string to_csv(std::span<const BoundCertificate> certs) {
  std::ostringstream out;
  out << "lambda,functional,direction,searched,closed_form,gap,status,argmax\n";
  for (const auto& c : certs) {
    out << to_display_string(c.lambda) << ',' << c.functional << ',' << to_string(c.direction) << ','
        << format_double(c.searched_value) << ',' << (c.closed_form ? format_double(*c.closed_form) : "") << ','
        << (c.gap ? format_double(*c.gap) : "") << ',' << to_string(c.status) << ',';
    for (std::size_t i = 0; i < c.argmax.size(); ++i) {
      if (i) out << ';';
      out << to_display_string(c.argmax[i]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ucv

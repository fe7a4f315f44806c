#pragma once

// Complex literal parsing for the CLI.  Accepted forms:
//   plain real            1.5, -2, 1e-3
//   pure imaginary        i, -i, 0.7i
//   cartesian             a+bi, a-bi      (real part may carry an exponent)
//   polar shorthand       r e theta i     written "0.8e34i" = 0.8*exp(34 i),
//                         angle in radians; this form wins over a pure
//                         imaginary with exponent notation.

#include <cctype>
#include <cstdlib>
#include <regex>
#include <string>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/errors.hpp"

namespace opuc::cli {

inline bool parse_full_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* c = s.c_str();
  char* end = nullptr;
  out = std::strtod(c, &end);
  return end == c + s.size();
}

inline cx parse_complex(std::string s) {
  // strip whitespace
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ValidationError("parse_complex: empty literal");

  static const std::regex polar(R"(^([+-]?(?:\d+\.?\d*|\.\d+))e([+-]?(?:\d+\.?\d*|\.\d+))i$)");
  std::smatch m;
  if (std::regex_match(t, m, polar)) {
    double r = std::stod(m[1].str());
    double theta = std::stod(m[2].str());
    return r * unit(theta);
  }

  double val = 0.0;
  if (parse_full_double(t, val)) return cx(val, 0.0);

  if (t.back() == 'i' || t.back() == 'I') {
    std::string body = t.substr(0, t.size() - 1);
    // pure imaginary
    if (body.empty() || body == "+") return cx(0.0, 1.0);
    if (body == "-") return cx(0.0, -1.0);
    if (parse_full_double(body, val)) return cx(0.0, val);
    // cartesian: split at the last sign that is not an exponent sign
    for (size_t k = body.size(); k-- > 1;) {
      char c = body[k];
      if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        double re = 0.0, im = 0.0;
        std::string imag = body.substr(k);
        if (imag == "+") imag = "1";
        if (imag == "-") imag = "-1";
        if (parse_full_double(body.substr(0, k), re) && parse_full_double(imag, im))
          return cx(re, im);
        break;
      }
    }
  }
  throw ValidationError("parse_complex: cannot parse '" + s + "'");
}

inline std::vector<cx> parse_complex_list(const std::string& s) {
  std::vector<cx> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(parse_complex(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(parse_complex(cur));
  if (out.empty()) throw ValidationError("parse_complex_list: empty list");
  return out;
}

}  // namespace opuc::cli

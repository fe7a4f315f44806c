#pragma once

// Deterministic artifact writers.  Floats go out with a fixed 17 significant
// digit format so identical jobs produce byte-identical JSON and CSV.

#include <cstdio>
#include <string>
#include <vector>

#include "opuc/common.hpp"

namespace opuc::cli {

inline std::string fmt_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

class Json {
 public:
  Json& raw(const std::string& s) {
    out_ += s;
    return *this;
  }
  Json& num(double x) { return raw(fmt_num(x)); }
  Json& integer(long x) { return raw(std::to_string(x)); }
  Json& boolean(bool b) { return raw(b ? "true" : "false"); }
  Json& str(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      if (c == '"' || c == '\\') out_ += '\\';
      out_ += c;
    }
    out_ += '"';
    return *this;
  }
  Json& cxnum(cx z) {
    out_ += '[';
    num(z.real());
    out_ += ',';
    num(z.imag());
    out_ += ']';
    return *this;
  }
  Json& key(const std::string& k) {
    str(k);
    out_ += ':';
    return *this;
  }
  Json& cx_list(const std::vector<cx>& v) {
    out_ += '[';
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out_ += ',';
      cxnum(v[i]);
    }
    out_ += ']';
    return *this;
  }
  Json& num_list(const std::vector<double>& v) {
    out_ += '[';
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out_ += ',';
      num(v[i]);
    }
    out_ += ']';
    return *this;
  }
  Json& comma() {
    out_ += ',';
    return *this;
  }
  Json& open() {
    out_ += '{';
    return *this;
  }
  Json& close() {
    out_ += '}';
    return *this;
  }
  Json& open_list() {
    out_ += '[';
    return *this;
  }
  Json& close_list() {
    out_ += ']';
    return *this;
  }

  std::string take() {
    out_ += '\n';
    return std::move(out_);
  }

 private:
  std::string out_;
};

class Csv {
 public:
  explicit Csv(const std::string& header) { out_ = header + "\n"; }
  Csv& row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ += ',';
      out_ += cells[i];
    }
    out_ += '\n';
    return *this;
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

}  // namespace opuc::cli

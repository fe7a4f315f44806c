#pragma once

// Minimal SVG painter: fixed 800x800 viewport, unit circle at radius 350px.

#include <cstdio>
#include <string>
#include <vector>

#include "opuc/common.hpp"

namespace opuc::cli {

class SvgCanvas {
 public:
  SvgCanvas() {
    body_ =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n"
        "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  }

  static std::string pt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
  }
  static double px(cx z) { return 400.0 + 350.0 * z.real(); }
  static double py(cx z) { return 400.0 - 350.0 * z.imag(); }

  void unit_circle() {
    body_ += "<circle cx=\"400\" cy=\"400\" r=\"350\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  }

  void polyline(const std::vector<cx>& pts, const std::string& color, double width,
                bool closed, double opacity = 1.0) {
    if (pts.empty()) return;
    body_ += closed ? "<polygon points=\"" : "<polyline points=\"";
    for (cx z : pts) body_ += pt(px(z)) + "," + pt(py(z)) + " ";
    body_ += "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + pt(width) +
             "\" stroke-opacity=\"" + pt(opacity) + "\"/>\n";
  }

  void segment(cx a, cx b, const std::string& color, double width, double opacity = 1.0) {
    body_ += "<line x1=\"" + pt(px(a)) + "\" y1=\"" + pt(py(a)) + "\" x2=\"" + pt(px(b)) +
             "\" y2=\"" + pt(py(b)) + "\" stroke=\"" + color + "\" stroke-width=\"" + pt(width) +
             "\" stroke-opacity=\"" + pt(opacity) + "\"/>\n";
  }

  void dot(cx z, const std::string& color, double radius) {
    body_ += "<circle cx=\"" + pt(px(z)) + "\" cy=\"" + pt(py(z)) + "\" r=\"" + pt(radius) +
             "\" fill=\"" + color + "\"/>\n";
  }

  std::string take() {
    body_ += "</svg>\n";
    return std::move(body_);
  }

 private:
  std::string body_;
};

}  // namespace opuc::cli

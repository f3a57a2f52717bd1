#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "raagham/geometry.hpp"

namespace raagham {

/// Minimal SVG document in world coordinates (y up).
class SvgWriter {
 public:
  SvgWriter(double xmin, double ymin, double xmax, double ymax, int pixels = 800);

  void circle(Point c, double r, const std::string& stroke, double width = 1.0,
              const std::string& fill = "none");
  void ring(Point c, double r_inner, double r_outer, const std::string& fill, double opacity);
  void dot(Point p, const std::string& fill, double pixel_radius = 2.5);
  void polyline(const std::vector<Point>& pts, const std::string& stroke, double width = 1.0);
  void text(Point p, const std::string& s, int size = 12);

  std::string str() const;

 private:
  double sx(double x) const;
  double sy(double y) const;
  double scale_;
  double xmin_, ymax_;
  int width_, height_;
  std::ostringstream body_;
};

}  // namespace raagham

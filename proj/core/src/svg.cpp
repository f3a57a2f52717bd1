#include "raagham/svg.hpp"

#include <algorithm>
#include <iomanip>

namespace raagham {

SvgWriter::SvgWriter(double xmin, double ymin, double xmax, double ymax, int pixels)
    : xmin_(xmin), ymax_(ymax) {
  const double span = std::max(xmax - xmin, ymax - ymin);
  scale_ = pixels / span;
  width_ = static_cast<int>((xmax - xmin) * scale_ + 0.5);
  height_ = static_cast<int>((ymax - ymin) * scale_ + 0.5);
  body_ << std::setprecision(6);
}

double SvgWriter::sx(double x) const { return (x - xmin_) * scale_; }
double SvgWriter::sy(double y) const { return (ymax_ - y) * scale_; }

void SvgWriter::circle(Point c, double r, const std::string& stroke, double width,
                       const std::string& fill) {
  body_ << "<circle cx=\"" << sx(c.real()) << "\" cy=\"" << sy(c.imag()) << "\" r=\""
        << r * scale_ << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width
        << "\" fill=\"" << fill << "\"/>\n";
}

void SvgWriter::ring(Point c, double r_inner, double r_outer, const std::string& fill,
                     double opacity) {
  const double x = sx(c.real()), y = sy(c.imag());
  const double ro = r_outer * scale_, ri = r_inner * scale_;
  body_ << "<path fill-rule=\"evenodd\" fill=\"" << fill << "\" fill-opacity=\"" << opacity
        << "\" d=\"M " << x - ro << ' ' << y << " a " << ro << ' ' << ro << " 0 1 0 " << 2 * ro
        << " 0 a " << ro << ' ' << ro << " 0 1 0 " << -2 * ro << " 0 M " << x - ri << ' ' << y
        << " a " << ri << ' ' << ri << " 0 1 0 " << 2 * ri << " 0 a " << ri << ' ' << ri
        << " 0 1 0 " << -2 * ri << " 0\"/>\n";
}

void SvgWriter::dot(Point p, const std::string& fill, double pixel_radius) {
  body_ << "<circle cx=\"" << sx(p.real()) << "\" cy=\"" << sy(p.imag()) << "\" r=\""
        << pixel_radius << "\" fill=\"" << fill << "\"/>\n";
}

void SvgWriter::polyline(const std::vector<Point>& pts, const std::string& stroke, double width) {
  body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
        << "\" points=\"";
  for (const Point& p : pts) body_ << sx(p.real()) << ',' << sy(p.imag()) << ' ';
  body_ << "\"/>\n";
}

void SvgWriter::text(Point p, const std::string& s, int size) {
  body_ << "<text x=\"" << sx(p.real()) << "\" y=\"" << sy(p.imag()) << "\" font-size=\"" << size
        << "\" font-family=\"sans-serif\">" << s << "</text>\n";
}

std::string SvgWriter::str() const {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
      << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << body_.str() << "</svg>\n";
  return out.str();
}

}  // namespace raagham

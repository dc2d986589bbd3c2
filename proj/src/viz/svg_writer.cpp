#include "aps/svg.hpp"

#include "aps/format.hpp"

namespace aps::viz {

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string px(double value) { return format_fixed(value, 2); }

SvgWriter::SvgWriter(int width, int height) : width_(width), height_(height) {}

void SvgWriter::rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke) {
  body_ += "<rect x=\"" + px(x) + "\" y=\"" + px(y) + "\" width=\"" + px(w) + "\" height=\"" + px(h) +
           "\" fill=\"" + escape_xml(fill) + "\" stroke=\"" + escape_xml(stroke) + "\"/>\n";
}

void SvgWriter::line(double x1, double y1, double x2, double y2, std::string_view stroke, double width) {
  body_ += "<line x1=\"" + px(x1) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(x2) + "\" y2=\"" + px(y2) +
           "\" stroke=\"" + escape_xml(stroke) + "\" stroke-width=\"" + px(width) + "\"/>\n";
}

void SvgWriter::text(double x, double y, std::string_view content, std::string_view anchor, int size,
                     double rotate) {
  body_ += "<text x=\"" + px(x) + "\" y=\"" + px(y) + "\" font-family=\"sans-serif\" font-size=\"" +
           std::to_string(size) + "\" text-anchor=\"" + escape_xml(anchor) + "\"";
  if (rotate != 0.0) body_ += " transform=\"rotate(" + px(rotate) + " " + px(x) + " " + px(y) + ")\"";
  body_ += ">" + escape_xml(content) + "</text>\n";
}

void SvgWriter::circle(double cx, double cy, double r, std::string_view fill, std::string_view title) {
  body_ += "<circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) + "\" r=\"" + px(r) + "\" fill=\"" + escape_xml(fill) +
           "\" fill-opacity=\"0.85\" stroke=\"#333333\" stroke-width=\"0.50\"><title>" + escape_xml(title) +
           "</title></circle>\n";
}

void SvgWriter::open_group(std::string_view id) { body_ += "<g id=\"" + escape_xml(id) + "\">\n"; }

void SvgWriter::close_group() { body_ += "</g>\n"; }

void SvgWriter::linear_gradient(std::string_view id, std::string_view from, std::string_view to) {
  defs_ += "<linearGradient id=\"" + escape_xml(id) + "\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">"
           "<stop offset=\"0\" stop-color=\"" + escape_xml(from) + "\"/><stop offset=\"1\" stop-color=\"" +
           escape_xml(to) + "\"/></linearGradient>\n";
}

std::string SvgWriter::finish() {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width_) +
         "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
         std::to_string(height_) + "\">\n";
  if (!defs_.empty()) out += "<defs>\n" + defs_ + "</defs>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

}  // namespace aps::viz

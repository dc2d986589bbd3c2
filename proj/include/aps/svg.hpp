#pragma once

#include <string>
#include <string_view>

namespace aps::viz {

/// Minimal SVG 1.1 emitter. Coordinates are written with two decimals so
/// identical input yields identical bytes.
class SvgWriter {
 public:
  SvgWriter(int width, int height);

  void rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke = "none");
  void line(double x1, double y1, double x2, double y2, std::string_view stroke, double width = 1.0);
  void text(double x, double y, std::string_view content, std::string_view anchor = "middle", int size = 12,
            double rotate = 0.0);
  void circle(double cx, double cy, double r, std::string_view fill, std::string_view title);
  void open_group(std::string_view id);
  void close_group();
  void linear_gradient(std::string_view id, std::string_view from, std::string_view to);

  /// Closes the root element and returns the document.
  std::string finish();

 private:
  std::string body_;
  std::string defs_;
  int width_;
  int height_;
};

std::string escape_xml(std::string_view text);
std::string px(double value);

}  // namespace aps::viz

#include "aps/plots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "aps/format.hpp"
#include "aps/svg.hpp"

namespace aps::viz {

namespace {

constexpr std::string_view kBaseColor = "#7f9fbf";
constexpr std::string_view kLowColor = "#2c7bb6";
constexpr std::string_view kHighColor = "#d7191c";
constexpr std::string_view kAxisColor = "#222222";
constexpr std::string_view kGridColor = "#dddddd";

struct Frame {
  double left, top, width, height;

  double x(double u) const { return left + u * width; }
  double y(double v) const { return top + (1.0 - v) * height; }
};

bool is_hex_color(std::string_view c) {
  if (c.size() != 7 || c[0] != '#') return false;
  return std::all_of(c.begin() + 1, c.end(), [](char ch) { return std::isxdigit(static_cast<unsigned char>(ch)); });
}

const HighlightGroup* group_of(std::string_view name, const std::vector<HighlightGroup>& groups) {
  for (const auto& g : groups)
    if (name.substr(0, g.prefix.size()) == g.prefix) return &g;
  return nullptr;
}

// Draw order: plain points first, then each highlight group in list order.
std::vector<std::size_t> draw_order(const std::vector<std::string>& names, const std::vector<HighlightGroup>& groups) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!group_of(names[i], groups)) order.push_back(i);
  for (const auto& g : groups)
    for (std::size_t i = 0; i < names.size(); ++i)
      if (group_of(names[i], groups) == &g) order.push_back(i);
  return order;
}

std::array<int, 3> rgb(std::string_view hex) {
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = std::stoi(std::string(hex.substr(1 + 2 * i, 2)), nullptr, 16);
  return out;
}

std::string mix(std::string_view from, std::string_view to, double t) {
  const auto a = rgb(from);
  const auto b = rgb(to);
  std::array<char, 8> buf{};
  std::array<int, 3> c{};
  for (int i = 0; i < 3; ++i) c[i] = static_cast<int>(std::lround(a[i] + (b[i] - a[i]) * t));
  std::snprintf(buf.data(), buf.size(), "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf.data();
}

void draw_legend_groups(SvgWriter& svg, const std::vector<HighlightGroup>& groups, double x, double y) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const double row = y + 16.0 * static_cast<double>(i);
    svg.rect(x, row - 8.0, 10.0, 10.0, groups[i].color);
    svg.text(x + 14.0, row + 1.0, groups[i].name, "start", 11);
  }
}

}  // namespace

std::string_view to_string(ColorBy metric) noexcept {
  return metric == ColorBy::Difficulty ? "difficulty" : "variance";
}

std::vector<HighlightGroup> default_highlight_groups() {
  return {{"MovieLens", "MovieLens", "#8f00ff"}, {"Amazon", "Amazon_", "#000000"}};
}

void check_plot_spec(const PlotSpec& spec) {
  if (spec.width_px <= 0 || spec.height_px <= 0) throw Error(ErrorCode::InvalidPlotSpec, "plot size must be positive");
  if (!(spec.point_radius_px > 0.0)) throw Error(ErrorCode::InvalidPlotSpec, "point radius must be positive");
  for (const auto& g : spec.highlight_groups) {
    if (g.prefix.empty()) throw Error(ErrorCode::InvalidPlotSpec, "highlight group '" + g.name + "' has an empty prefix");
    if (!is_hex_color(g.color)) {
      throw Error(ErrorCode::InvalidPlotSpec, "highlight color '" + g.color + "' is not #RRGGBB");
    }
  }
}

std::string file_token(std::string_view label) {
  std::string out;
  for (char c : label) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
    out.push_back(keep ? c : '_');
  }
  return out;
}

std::string mini_aps_svg(const PerformanceMatrix& matrix, std::string_view algo_x, std::string_view algo_y,
                         const PlotSpec& spec) {
  check_plot_spec(spec);
  const auto ix = matrix.find_algorithm(algo_x);
  if (!ix) throw Error(ErrorCode::UnknownAlgorithm, "no algorithm named '" + std::string(algo_x) + "'");
  const auto iy = matrix.find_algorithm(algo_y);
  if (!iy) throw Error(ErrorCode::UnknownAlgorithm, "no algorithm named '" + std::string(algo_y) + "'");
  if (*ix == *iy) throw Error(ErrorCode::SameAlgorithm, "both axes show '" + std::string(algo_x) + "'");

  std::vector<std::string> names;
  std::vector<double> xs, ys;
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
    const Score& sx = matrix.at(d, *ix);
    const Score& sy = matrix.at(d, *iy);
    if (!sx || !sy) continue;
    names.push_back(matrix.datasets()[d].str());
    xs.push_back(*sx);
    ys.push_back(*sy);
  }
  if (names.empty()) {
    throw Error(ErrorCode::NoPlottablePoints,
                "no dataset has scores for both " + std::string(algo_x) + " and " + std::string(algo_y));
  }
  const double max_x = *std::max_element(xs.begin(), xs.end());
  const double max_y = *std::max_element(ys.begin(), ys.end());
  if (max_x <= 0.0 || max_y <= 0.0) {
    throw Error(ErrorCode::ZeroColumn, "plotted scores are all zero on one axis");
  }

  const double w = spec.width_px;
  const double h = spec.height_px;
  const Frame frame{70.0, 40.0, std::max(w - 100.0, 1.0), std::max(h - 110.0, 1.0)};
  SvgWriter svg(spec.width_px, spec.height_px);
  svg.rect(0, 0, w, h, "#ffffff");
  svg.text(w / 2, 24, std::string(algo_y) + " vs " + std::string(algo_x), "middle", 14);

  for (double t : {0.0, 0.5, 1.0}) {
    const std::string label = t == 0.5 ? "0.5" : format_fixed(t, 0);
    svg.line(frame.x(t), frame.y(0), frame.x(t), frame.y(1), kGridColor);
    svg.line(frame.x(0), frame.y(t), frame.x(1), frame.y(t), kGridColor);
    svg.text(frame.x(t), frame.y(0) + 18, label);
    svg.text(frame.x(0) - 8, frame.y(t) + 4, label, "end");
  }
  svg.rect(frame.left, frame.top, frame.width, frame.height, "none", kAxisColor);

  const std::string metric = matrix.meta().metric_name + "@" + std::to_string(matrix.meta().k);
  svg.text(frame.x(0.5), frame.y(0) + 42, algo_x.data() + std::string(" (normalized ") + metric + ")");
  svg.text(22, frame.y(0.5), std::string(algo_y) + " (normalized " + metric + ")", "middle", 12, -90.0);

  svg.open_group("points");
  for (std::size_t i : draw_order(names, spec.highlight_groups)) {
    const HighlightGroup* g = group_of(names[i], spec.highlight_groups);
    svg.circle(frame.x(xs[i] / max_x), frame.y(ys[i] / max_y), spec.point_radius_px, g ? g->color : kBaseColor,
               names[i]);
  }
  svg.close_group();
  draw_legend_groups(svg, spec.highlight_groups, frame.left + 8, frame.top + 14);
  return svg.finish();
}

MiniGrid mini_aps_grid(const PerformanceMatrix& matrix, const PlotSpec& spec, bool ordered) {
  const std::size_t n = matrix.algorithm_count();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "a grid needs at least two algorithms");
  check_plot_spec(spec);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = ordered ? 0 : i + 1; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);

  std::vector<std::optional<MiniPlot>> rendered(pairs.size());
  std::vector<std::string> failures(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const std::string& x = matrix.algorithms()[pairs[p].first].str();
    const std::string& y = matrix.algorithms()[pairs[p].second].str();
    try {
      rendered[p] = MiniPlot{x + " vs " + y, "mini_" + file_token(x) + "_vs_" + file_token(y) + ".svg",
                             mini_aps_svg(matrix, x, y, spec)};
    } catch (const Error& e) {
      failures[p] = x + " vs " + y + " skipped: " + e.what();
    }
  }

  MiniGrid grid;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (rendered[p]) grid.plots.push_back(std::move(*rendered[p]));
    else grid.warnings.push_back(std::move(failures[p]));
  }
  return grid;
}

std::string pca_scatter_svg(const reduce::PcaProjection& projection,
                            std::optional<std::span<const double>> metric_values, const PlotSpec& spec) {
  check_plot_spec(spec);
  if (projection.components.size() != 2) {
    throw Error(ErrorCode::BadComponentCount, "scatter needs exactly two components");
  }
  const std::size_t m = projection.dataset_ids.size();
  if (metric_values && metric_values->size() != m) {
    throw Error(ErrorCode::LengthMismatch, "one metric value per projected dataset required");
  }

  std::vector<std::string> names;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(projection.dataset_ids[i].str());
    xs.push_back(projection.coordinates[i][0]);
    ys.push_back(projection.coordinates[i][1]);
  }
  auto padded = [](const std::vector<double>& v) {
    double lo = v.empty() ? -1.0 : *std::min_element(v.begin(), v.end());
    double hi = v.empty() ? 1.0 : *std::max_element(v.begin(), v.end());
    const double pad = hi > lo ? 0.05 * (hi - lo) : 1.0;
    return std::pair{lo - pad, hi + pad};
  };
  const auto [x_lo, x_hi] = padded(xs);
  const auto [y_lo, y_hi] = padded(ys);

  const bool colored = metric_values.has_value();
  const double w = spec.width_px;
  const double h = spec.height_px;
  const double legend_room = colored ? 90.0 : 0.0;
  const Frame frame{80.0, 40.0, std::max(w - 110.0 - legend_room, 1.0), std::max(h - 110.0, 1.0)};
  auto sx = [&](double v) { return frame.x((v - x_lo) / (x_hi - x_lo)); };
  auto sy = [&](double v) { return frame.y((v - y_lo) / (y_hi - y_lo)); };

  SvgWriter svg(spec.width_px, spec.height_px);
  svg.rect(0, 0, w, h, "#ffffff");
  svg.text(frame.x(0.5), 24, colored && spec.color_by
                                 ? "PCA colored by " + std::string(to_string(*spec.color_by))
                                 : std::string("PCA"), "middle", 14);

  for (double t : {0.0, 0.5, 1.0}) {
    svg.line(frame.x(t), frame.y(0), frame.x(t), frame.y(1), kGridColor);
    svg.line(frame.x(0), frame.y(t), frame.x(1), frame.y(t), kGridColor);
    svg.text(frame.x(t), frame.y(0) + 18, format_fixed(x_lo + t * (x_hi - x_lo), 2));
    svg.text(frame.x(0) - 8, frame.y(t) + 4, format_fixed(y_lo + t * (y_hi - y_lo), 2), "end");
  }
  svg.rect(frame.left, frame.top, frame.width, frame.height, "none", kAxisColor);
  const auto& ratio = projection.explained_variance_ratio;
  svg.text(frame.x(0.5), frame.y(0) + 42,
           "Component 1 (" + format_two_sig(100.0 * ratio[0]) + "% explained variance)");
  svg.text(22, frame.y(0.5), "Component 2 (" + format_two_sig(100.0 * ratio[1]) + "% explained variance)", "middle",
           12, -90.0);

  double lo = 0.0, hi = 0.0;
  if (colored) {
    lo = *std::min_element(metric_values->begin(), metric_values->end());
    hi = *std::max_element(metric_values->begin(), metric_values->end());
  }
  auto fill_for = [&](std::size_t i) -> std::string {
    if (colored) return hi > lo ? mix(kLowColor, kHighColor, ((*metric_values)[i] - lo) / (hi - lo)) : std::string(kLowColor);
    const HighlightGroup* g = group_of(names[i], spec.highlight_groups);
    return std::string(g ? g->color : kBaseColor);
  };

  svg.open_group("points");
  for (std::size_t i : draw_order(names, spec.highlight_groups))
    svg.circle(sx(xs[i]), sy(ys[i]), spec.point_radius_px, fill_for(i), names[i]);
  svg.close_group();

  if (colored) {
    const double lx = frame.left + frame.width + 30.0;
    const std::string title = spec.color_by ? std::string(to_string(*spec.color_by)) : std::string("metric");
    svg.text(lx + 8, frame.top - 8, title, "middle", 11);
    if (hi > lo) {
      svg.linear_gradient("metric-scale", kLowColor, kHighColor);
      svg.rect(lx, frame.top, 16, frame.height, "url(#metric-scale)", kAxisColor);
      svg.text(lx + 22, frame.top + 4, format_fixed(hi, 4), "start", 11);
      svg.text(lx + 22, frame.top + frame.height, format_fixed(lo, 4), "start", 11);
    } else {
      svg.rect(lx, frame.top, 16, frame.height, kLowColor, kAxisColor);
      svg.text(lx + 22, frame.top + frame.height / 2, format_fixed(lo, 4), "start", 11);
    }
  } else {
    draw_legend_groups(svg, spec.highlight_groups, frame.left + 8, frame.top + 14);
  }
  return svg.finish();
}

}  // namespace aps::viz

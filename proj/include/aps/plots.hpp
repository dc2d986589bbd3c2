#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aps/matrix.hpp"
#include "aps/pca.hpp"

namespace aps::viz {

/// Datasets whose name starts with `prefix` are drawn in `color`, on top of
/// the others.
struct HighlightGroup {
  std::string name;
  std::string prefix;
  std::string color;  // #RRGGBB
};

enum class ColorBy { Difficulty, Variance };

std::string_view to_string(ColorBy metric) noexcept;

struct PlotSpec {
  int width_px = 600;
  int height_px = 600;
  std::vector<HighlightGroup> highlight_groups;
  std::optional<ColorBy> color_by;
  double point_radius_px = 4.0;
};

/// MovieLens in violet and Amazon in black.
std::vector<HighlightGroup> default_highlight_groups();

/// Throws InvalidPlotSpec on non-positive sizes, malformed colors or empty
/// prefixes.
void check_plot_spec(const PlotSpec& spec);

/// Two-algorithm slice of the performance space. Only datasets with both
/// scores are drawn; each axis is divided by its maximum over those
/// datasets. Throws UnknownAlgorithm, SameAlgorithm, NoPlottablePoints and
/// ZeroColumn.
std::string mini_aps_svg(const PerformanceMatrix& matrix, std::string_view algo_x, std::string_view algo_y,
                         const PlotSpec& spec);

struct MiniPlot {
  std::string label;      // "<x> vs <y>"
  std::string file_name;  // mini_<x>_vs_<y>.svg
  std::string svg;
};

struct MiniGrid {
  std::vector<MiniPlot> plots;
  std::vector<std::string> warnings;  // pairs skipped for lack of points
};

/// One plot per unordered algorithm pair in matrix order, or per ordered pair
/// when `ordered` is set.
MiniGrid mini_aps_grid(const PerformanceMatrix& matrix, const PlotSpec& spec, bool ordered = false);

/// Scatter of the first two components. With `metric_values` the points are
/// filled on a two-color gradient between the metric's min and max and a
/// legend strip is drawn. Throws BadComponentCount and LengthMismatch.
std::string pca_scatter_svg(const reduce::PcaProjection& projection,
                            std::optional<std::span<const double>> metric_values, const PlotSpec& spec);

/// File-system-safe form of a label.
std::string file_token(std::string_view label);

}  // namespace aps::viz

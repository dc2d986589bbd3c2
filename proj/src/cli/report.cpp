#include <algorithm>
#include <sstream>

#include "aps/cli.hpp"
#include "aps/csv.hpp"
#include "aps/format.hpp"

namespace aps::cli {

namespace {

std::string fixed4(double v) { return format_fixed(v, 4); }

std::string joined_names(const select::Selection& s, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < s.datasets.size(); ++i) {
    if (i) out += sep;
    out += s.datasets[i].str();
  }
  return out;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::string metrics_csv(const metrics::MetricReport& report) {
  std::string out = "dataset,difficulty,variance,present_count\n";
  for (const auto& row : report.rows) {
    out += csv::join_fields({row.dataset.str(), fixed4(row.difficulty), row.variance ? fixed4(*row.variance) : "",
                             std::to_string(row.present_count)});
    out += '\n';
  }
  return out;
}

std::string selections_csv(std::span<const select::SearchResult> results) {
  std::string out = "rank,size,datasets,score\n";
  for (const auto& result : results) {
    for (const auto& s : result.top) {
      out += csv::join_fields(
          {std::to_string(s.rank), std::to_string(result.size), joined_names(s, ";"), fixed4(s.score)});
      out += '\n';
    }
  }
  return out;
}

std::string pca_csv(const reduce::PcaProjection& projection) {
  std::vector<std::string> header{"dataset"};
  for (std::size_t c = 0; c < projection.components.size(); ++c) header.push_back("pc" + std::to_string(c + 1));
  std::string out = csv::join_fields(header) + '\n';
  for (std::size_t i = 0; i < projection.dataset_ids.size(); ++i) {
    std::vector<std::string> fields{projection.dataset_ids[i].str()};
    for (double v : projection.coordinates[i]) fields.push_back(fixed4(v));
    out += csv::join_fields(fields) + '\n';
  }
  return out;
}

std::string pca_ratios_csv(const reduce::PcaProjection& projection) {
  std::vector<std::string> header;
  std::vector<std::string> values;
  for (std::size_t c = 0; c < projection.explained_variance_ratio.size(); ++c) {
    header.push_back("pc" + std::to_string(c + 1));
    values.push_back(fixed4(projection.explained_variance_ratio[c]));
  }
  return csv::join_fields(header) + '\n' + csv::join_fields(values) + '\n';
}

std::string report_markdown(const ReportInputs& in) {
  std::ostringstream md;
  md << "# Algorithm performance space report\n\n";
  if (in.config) md << "Input: `" << in.config->input_path << "`\n\n";

  if (in.validation) {
    const auto& v = *in.validation;
    md << "## Input summary\n\n"
       << "| datasets | algorithms | present cells | missing cells | complete rows |\n"
       << "|---:|---:|---:|---:|---:|\n"
       << "| " << v.dataset_count << " | " << v.algorithm_count << " | " << v.present_cells << " | "
       << v.missing_cells << " | " << v.complete_row_count << " |\n\n";
  }

  if (in.metrics && !in.metrics->rows.empty()) {
    std::vector<double> difficulty;
    for (const auto& r : in.metrics->rows) difficulty.push_back(r.difficulty);
    double sum = 0.0;
    for (double d : difficulty) sum += d;
    md << "## Dataset metrics\n\n"
       << "Mean difficulty " << fixed4(sum / static_cast<double>(difficulty.size())) << ", median difficulty "
       << fixed4(median(difficulty)) << ".\n\n"
       << "| dataset | difficulty | variance | results |\n|---|---:|---:|---:|\n";
    for (const auto& r : in.metrics->rows) {
      md << "| " << r.dataset.str() << " | " << fixed4(r.difficulty) << " | "
         << (r.variance ? fixed4(*r.variance) : std::string("n/a")) << " | " << r.present_count << " |\n";
    }
    md << '\n';
  }

  if (!in.selections.empty()) {
    md << "## Selections\n\n| mode | size | rank | datasets | diversity |\n|---|---:|---:|---|---:|\n";
    for (const auto& result : in.selections) {
      for (const auto& s : result.top) {
        md << "| " << select::to_string(result.mode) << " | " << result.size << " | " << s.rank << " | "
           << joined_names(s, ", ") << " | " << fixed4(s.score) << " |\n";
      }
    }
    md << '\n';
  }

  if (in.pca) {
    md << "## Principal components\n\n"
       << "Imputation: " << reduce::to_string(in.pca->imputation) << ", " << in.pca->dataset_ids.size()
       << " datasets.\n\n| component | explained variance |\n|---|---:|\n";
    for (std::size_t c = 0; c < in.pca->explained_variance_ratio.size(); ++c) {
      md << "| PC" << c + 1 << " | " << fixed4(in.pca->explained_variance_ratio[c]) << " |\n";
    }
    md << '\n';
  }

  if (!in.notes.empty()) {
    md << "## Notes\n\n";
    for (const auto& n : in.notes) md << "- " << n << '\n';
    md << '\n';
  }
  return md.str();
}

}  // namespace aps::cli

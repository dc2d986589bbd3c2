#include <charconv>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "aps/cli.hpp"
#include "aps/error.hpp"

namespace aps::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorCode::InvalidArgument, "invalid value '" + std::string(value) + "' for " + std::string(key));
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) bad_value(what, text);
  return value;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view format_name(ingest::TableFormat f) {
  switch (f) {
    case ingest::TableFormat::Wide: return "wide";
    case ingest::TableFormat::Long: return "long";
    case ingest::TableFormat::Auto: break;
  }
  return "auto";
}

std::string_view imputation_name(reduce::Imputation mode) {
  switch (mode) {
    case reduce::Imputation::ZeroFill: return "zero-fill";
    case reduce::Imputation::ColumnMean: return "column-mean";
    case reduce::Imputation::CompleteRowsOnly: break;
  }
  return "complete-rows-only";
}

}  // namespace

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "input_path") {
    config.input_path = value;
  } else if (key == "input_format") {
    if (value == "wide") config.input_format = ingest::TableFormat::Wide;
    else if (value == "long") config.input_format = ingest::TableFormat::Long;
    else if (value == "auto") config.input_format = ingest::TableFormat::Auto;
    else bad_value(key, value);
  } else if (key == "difficulty_orientation") {
    if (value == "one-minus-mean") config.difficulty_orientation = metrics::DifficultyOrientation::OneMinusMean;
    else if (value == "raw-mean") config.difficulty_orientation = metrics::DifficultyOrientation::RawMean;
    else bad_value(key, value);
  } else if (key == "diversity_variant") {
    if (value == "nth-root") config.diversity_variant = metrics::VolumeRoot::NthRoot;
    else if (value == "literal-sqrt") config.diversity_variant = metrics::VolumeRoot::LiteralSqrt;
    else bad_value(key, value);
  } else if (key == "pca_imputation") {
    if (value == "complete-rows-only") config.pca_imputation = reduce::Imputation::CompleteRowsOnly;
    else if (value == "zero-fill") config.pca_imputation = reduce::Imputation::ZeroFill;
    else if (value == "column-mean") config.pca_imputation = reduce::Imputation::ColumnMean;
    else bad_value(key, value);
  } else if (key == "output_dir") {
    if (value.empty()) bad_value(key, value);
    config.output_dir = value;
  } else if (key == "worker_count") {
    if (value == "auto") {
      config.worker_count = 0;
    } else {
      const std::size_t n = parse_count(value, key);
      if (n == 0 || n > 1024) bad_value(key, value);
      config.worker_count = static_cast<int>(n);
    }
  } else if (key == "algorithms") {
    config.algorithms = split_list(value);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown configuration key '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(ErrorCode::InvalidArgument, line_no, "expected key = value");
    }
    try {
      apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.code(), line_no, e.what());
    }
  }
}

std::string describe(const RunConfig& config) {
  std::ostringstream os;
  os << "input_path = " << config.input_path << '\n'
     << "input_format = " << format_name(config.input_format) << '\n'
     << "difficulty_orientation = "
     << (config.difficulty_orientation == metrics::DifficultyOrientation::RawMean ? "raw-mean" : "one-minus-mean")
     << '\n'
     << "diversity_variant = "
     << (config.diversity_variant == metrics::VolumeRoot::LiteralSqrt ? "literal-sqrt" : "nth-root") << '\n'
     << "pca_imputation = " << imputation_name(config.pca_imputation) << '\n'
     << "output_dir = " << config.output_dir << '\n'
     << "worker_count = " << (config.worker_count == 0 ? std::string("auto") : std::to_string(config.worker_count))
     << '\n'
     << "algorithms = ";
  for (std::size_t i = 0; i < config.algorithms.size(); ++i) os << (i ? "," : "") << config.algorithms[i];
  os << '\n';
  return os.str();
}

SizeRange parse_size_range(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  SizeRange range;
  if (dots == std::string_view::npos) {
    range.lo = range.hi = parse_count(text, "--size");
  } else {
    range.lo = parse_count(text.substr(0, dots), "--size");
    range.hi = parse_count(text.substr(dots + 2), "--size");
  }
  if (range.lo < 2 || range.hi < range.lo) {
    throw Error(ErrorCode::InvalidArgument, "--size needs 2 <= A <= B, got '" + std::string(text) + "'");
  }
  return range;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "failed reading '" + path.string() + "'");
  return buf.str();
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create '" + path.parent_path().string() + "': " + ec.message());

  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::IoError, "failed writing '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(ErrorCode::IoError, "cannot rename into '" + path.string() + "': " + ec.message());
  }
}

}  // namespace aps::cli

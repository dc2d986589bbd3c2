#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace aps::csv {

/// One logical record and the 1-based line it started on.
struct Record {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

/// Splits UTF-8 CSV text into records. Comma separator, LF or CRLF line
/// endings, optional leading byte-order mark, double-quoted fields with ""
/// escapes (which may span lines). Blank lines are skipped.
/// Throws ParseError(MalformedRow) on an unterminated quote.
std::vector<Record> read_records(std::string_view text);

/// Quotes a field only when it contains a separator, quote or line break.
std::string escape_field(std::string_view field);

/// Joins fields into one line (no terminator).
std::string join_fields(const std::vector<std::string>& fields);

}  // namespace aps::csv

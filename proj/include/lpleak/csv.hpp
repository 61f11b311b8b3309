#pragma once
#include <string>
#include <string_view>
#include <vector>

namespace lpleak {

using CsvRow = std::vector<std::string>;

/// Quotes a field when it holds a comma, quote, CR or LF; inner quotes are doubled.
std::string csv_field(std::string_view s);
/// One CRLF-free line: fields joined by commas, terminated by '\n'.
std::string csv_line(const CsvRow& row);
/// Parses RFC-4180 text (quoted fields may span lines). Accepts LF or CRLF.
/// Throws ParseError on an unterminated quote.
std::vector<CsvRow> parse_csv(std::string_view text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace lpleak

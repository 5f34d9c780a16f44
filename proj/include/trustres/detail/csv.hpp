#pragma once

#include <string>
#include <vector>

namespace trustres::detail {

// RFC-4180 style quoting: fields containing commas, quotes or newlines are
// double-quoted with internal quotes doubled. Lines end with '\n'.
std::string csv_quote(const std::string& field);

std::string csv_line(const std::vector<std::string>& fields);

// Splits `text` into records of fields. Throws trustres::ParseError on
// malformed quoting. Blank trailing line is ignored.
std::vector<std::vector<std::string>> csv_parse(const std::string& text);

}  // namespace trustres::detail

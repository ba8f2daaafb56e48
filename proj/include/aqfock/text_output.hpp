#pragma once

// Locale-independent CSV and JSON rendering. Numbers use 17 significant
// digits so that output round-trips exactly.

#include <string>
#include <utility>
#include <vector>

namespace aqfock::text {

/// %.17g with '.' as decimal point; non-finite values render as nan, inf, -inf.
std::string number(double v);
std::string number(long long v);

/// JSON fragments. Each returns rendered text ready to embed.
std::string json_number(double v);  // non-finite values become null
std::string json_int(long long v);
std::string json_bool(bool v);
std::string json_string(const std::string& s);
std::string json_array(const std::vector<std::string>& items);
std::string json_array(const std::vector<double>& items);
std::string json_array(const std::vector<int>& items);

using JsonField = std::pair<std::string, std::string>;
std::string json_object(const std::vector<JsonField>& fields);

/// One CSV line (no quoting: fields are numbers or plain identifiers).
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace aqfock::text

#include "aqfock/text_output.hpp"

#include <cmath>
#include <cstdio>

namespace aqfock::text {

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // snprintf honours LC_NUMERIC; normalize a comma decimal separator.
  std::string s(buf);
  for (char& c : s) {
    if (c == ',') c = '.';
  }
  return s;
}

std::string number(long long v) { return std::to_string(v); }

std::string json_number(double v) { return std::isfinite(v) ? number(v) : "null"; }
std::string json_int(long long v) { return std::to_string(v); }
std::string json_bool(bool v) { return v ? "true" : "false"; }

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out + "]";
}

std::string json_array(const std::vector<double>& items) {
  std::vector<std::string> rendered;
  for (double v : items) rendered.push_back(json_number(v));
  return json_array(rendered);
}

std::string json_array(const std::vector<int>& items) {
  std::vector<std::string> rendered;
  for (int v : items) rendered.push_back(json_int(v));
  return json_array(rendered);
}

std::string json_object(const std::vector<JsonField>& fields) {
  std::string out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += json_string(fields[i].first) + ":" + fields[i].second;
  }
  return out + "}";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += fields[i];
  }
  return out;
}

}  // namespace aqfock::text

#include "aqfock/run_config.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace aqfock {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, sep)) parts.push_back(item);
  return parts;
}

int parse_int(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("involution: bad integer '" + s + "' in " + context);
  return v;
}

}  // namespace

InvolutiveSpace parse_involution(const std::string& spec, std::size_t d) {
  if (d == 0) throw std::invalid_argument("dimension must be positive");
  if (spec == "identity") return InvolutiveSpace::identity(d);

  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "swap") {
    std::vector<std::pair<int, int>> pairs;
    for (const std::string& item : split(body, ',')) {
      const auto dash = item.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("involution: swap pairs look like 1-2, got '" + item + "'");
      pairs.emplace_back(parse_int(item.substr(0, dash), spec), parse_int(item.substr(dash + 1), spec));
    }
    if (pairs.empty()) throw std::invalid_argument("involution: swap needs at least one pair");
    return InvolutiveSpace::basis_swap(d, pairs);
  }
  if (kind == "signs") {
    std::vector<int> signs;
    for (const std::string& item : split(body, ',')) signs.push_back(parse_int(item, spec));
    if (signs.size() != d) {
      throw std::invalid_argument("involution: signs list has " + std::to_string(signs.size()) +
                                  " entries for dimension " + std::to_string(d));
    }
    return InvolutiveSpace::diagonal_signs(signs);
  }
  throw std::invalid_argument("involution must be 'identity', 'swap:a-b,...' or 'signs:s1,...', got '" + spec + "'");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("format must be csv or json");
}

void RunConfig::validate() const {
  params().validate();
  (void)space();
  if (trunc < 0) throw std::invalid_argument("truncation must be nonnegative");
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  if (tol && !(*tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

InvolutiveSpace RunConfig::space() const { return parse_involution(involution, dim); }

Vector reference_vector(const InvolutiveSpace& space) {
  const auto d = static_cast<Eigen::Index>(space.dim());
  const Vector e1 = Vector::Unit(d, 0);
  Vector x = e1 + space.involute(e1);
  if (x.norm() < 1e-12) return e1;
  return x / x.norm();
}

}  // namespace aqfock

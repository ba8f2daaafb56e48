#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aqfock {

/// One letter of a creation/annihilation word: '*' creates, '1' annihilates.
enum class Eps : char { Create = '*', Annihilate = '1' };

using EpsilonPattern = std::vector<Eps>;

inline EpsilonPattern parse_epsilon(std::string_view text) {
  EpsilonPattern eps;
  eps.reserve(text.size());
  for (char c : text) {
    if (c == '*') {
      eps.push_back(Eps::Create);
    } else if (c == '1') {
      eps.push_back(Eps::Annihilate);
    } else {
      throw std::invalid_argument("epsilon pattern may only contain '*' and '1'");
    }
  }
  return eps;
}

inline std::string to_string(const EpsilonPattern& eps) {
  std::string s;
  for (Eps e : eps) s.push_back(static_cast<char>(e));
  return s;
}

/// All 2^n patterns, in lexicographic order of the bit mask (bit k set = '1').
inline std::vector<EpsilonPattern> all_epsilon_patterns(int n) {
  std::vector<EpsilonPattern> out;
  for (unsigned mask = 0; mask < (1U << static_cast<unsigned>(n)); ++mask) {
    EpsilonPattern eps(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) eps[static_cast<std::size_t>(k)] = (mask >> k) & 1U ? Eps::Annihilate : Eps::Create;
    out.push_back(std::move(eps));
  }
  return out;
}

}  // namespace aqfock

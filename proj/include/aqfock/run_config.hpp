#pragma once

// Run configuration shared by the command-line tool and the verify suites.

#include <cstdint>
#include <optional>
#include <string>

#include "aqfock/fock_core.hpp"
#include "aqfock/random.hpp"

namespace aqfock {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  double alpha = 0.0;
  double q = 0.0;
  std::size_t dim = 2;
  std::string involution = "identity";
  int trunc = 6;
  int order = 8;
  int grid = 201;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;

  /// Throws std::invalid_argument if the parameters are inadmissible or the
  /// involution spec is malformed.
  void validate() const;

  DeformParams params() const { return DeformParams{alpha, q}; }
  InvolutiveSpace space() const;
};

/// "identity", "swap:1-2,3-4" (1-based basis pairs) or "signs:+1,-1,...".
InvolutiveSpace parse_involution(const std::string& spec, std::size_t d);

OutputFormat parse_format(const std::string& name);

/// A unit vector that is as close to self-dual as the involution allows:
/// e_1 + J e_1 normalized, or e_1 when that vanishes.
Vector reference_vector(const InvolutiveSpace& space);

}  // namespace aqfock

#pragma once

// Set partitions of type B with singletons and pairs, their statistics, and
// the Wick and moment formulas built on them. The sums are templates over the
// scalar so they can run in double or in exact rationals.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aqfock/epsilon.hpp"
#include "aqfock/fock_core.hpp"
#include "aqfock/numeric.hpp"

namespace aqfock::partitions {

/// Largest ground set accepted by enumerations and sums.
inline constexpr int kMaxGroundSet = 12;

/// A set partition of [n]; blocks hold sorted 1-based elements and are ordered
/// by their minima.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  /// Throws std::invalid_argument unless the blocks partition [n].
  void validate() const;
  /// Sorts blocks and their elements into canonical order.
  void canonicalize();

  std::size_t block_count() const { return blocks.size(); }
  bool operator==(const SetPartition&) const = default;
};

struct TypeBPartition {
  SetPartition partition;
  std::vector<int> coloring;  // +1 or -1 per block, aligned with partition.blocks
};

struct PartitionStats {
  int cr = 0;
  int ins = 0;
  int nb = 0;
  int innb = 0;
  int slnb = 0;
  std::vector<int> cov;  // per block
  std::vector<int> sl;   // per block
  std::optional<int> inn;  // noncrossing partitions only
  std::optional<int> out;
};

/// All (n-1)!! pair partitions; empty for odd n.
std::vector<SetPartition> enumerate_pair_partitions(int n);

/// Partitions of [n] into singletons and pairs.
std::vector<SetPartition> enumerate_p12(int n);

/// P_{1,2;eps}: openers and singletons sit on '*', closers on '1'. Built left
/// to right from eps rather than by filtering.
std::vector<SetPartition> enumerate_p12_eps(const EpsilonPattern& eps);

/// P_{2;eps}: the pair partitions in P_{1,2;eps}.
std::vector<SetPartition> enumerate_p2_eps(const EpsilonPattern& eps);

/// Noncrossing pair partitions.
std::vector<SetPartition> enumerate_nc2(int n);

/// All colorings of the pairs of `pi`; singletons stay colored +1.
std::vector<TypeBPartition> type_b_colorings(const SetPartition& pi);

/// True if w covers v: some elements of w lie strictly left and strictly right of all of v.
bool covers(const std::vector<int>& w, const std::vector<int>& v);
bool cross(const std::vector<int>& v, const std::vector<int>& w);

int crossings(const SetPartition& pi);
/// Number of blocks of `pi` covering block `b`.
int cov(const SetPartition& pi, std::size_t b);
/// Number of singletons of `pi` left of every element of block `b`.
int sl(const SetPartition& pi, std::size_t b);

/// All statistics by definition; `coloring` may be empty (all +1).
PartitionStats stats(const SetPartition& pi, const std::vector<int>& coloring = {});

/// (inner, outer) block counts; throws std::invalid_argument for crossing input.
std::pair<int, int> noncrossing_stats(const SetPartition& pi);

// ---------------------------------------------------------------------------
// Wick and moment sums over real vectors

/// Real vectors x_1..x_n in R^d, a real involution J and scalar parameters.
template <typename S>
struct RealData {
  std::vector<std::vector<S>> x;
  std::vector<std::vector<S>> involution;  // d x d
  S alpha{0};
  S q{0};

  std::size_t dim() const { return involution.size(); }

  /// <x_j, x_i>.
  S inner(std::size_t i, std::size_t j) const {
    S s{0};
    for (std::size_t a = 0; a < dim(); ++a) s += x[j][a] * x[i][a];
    return s;
  }
  /// <xbar_j, x_i> = x_j^T J x_i.
  S inner_bar(std::size_t i, std::size_t j) const {
    S s{0};
    for (std::size_t a = 0; a < dim(); ++a) {
      for (std::size_t b = 0; b < dim(); ++b) s += x[j][a] * involution[a][b] * x[i][b];
    }
    return s;
  }
};

/// Homogeneous pieces of a Fock vector, levels[k] of size d^k.
template <typename S>
struct RealFockVector {
  std::vector<std::vector<S>> levels;
};

namespace detail {

inline void check_size(int n) {
  if (n > kMaxGroundSet) throw std::invalid_argument("ground set larger than " + std::to_string(kMaxGroundSet));
}

template <typename S>
std::vector<S> singleton_tensor(const RealData<S>& data, const std::vector<int>& singletons) {
  std::vector<S> t{S(1)};
  for (int i : singletons) {
    const auto& xi = data.x[static_cast<std::size_t>(i - 1)];
    std::vector<S> next;
    next.reserve(t.size() * xi.size());
    for (const S& a : t) {
      for (const S& b : xi) next.push_back(a * b);
    }
    t = std::move(next);
  }
  return t;
}

template <typename S>
void accumulate(RealFockVector<S>& out, std::size_t level, const std::vector<S>& tensor, const S& weight) {
  auto& target = out.levels[level];
  if (target.empty()) target.assign(tensor.size(), S(0));
  for (std::size_t i = 0; i < tensor.size(); ++i) target[i] += weight * tensor[i];
}

inline std::vector<int> singletons_of(const SetPartition& pi) {
  std::vector<int> s;
  for (const auto& b : pi.blocks) {
    if (b.size() == 1) s.push_back(b[0]);
  }
  return s;
}

template <typename S>
RealFockVector<S> empty_result(const RealData<S>& data, std::size_t n) {
  RealFockVector<S> out;
  out.levels.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.levels[k].assign(upow(data.dim(), static_cast<int>(k)), S(0));
  return out;
}

}  // namespace detail

/// Colored Wick sum over P^B_{1,2;eps}(n) with weight
/// alpha^NB q^{Cr + InS + 2 InNB + 2 SLNB}.
template <typename S>
RealFockVector<S> wick_colored(const EpsilonPattern& eps, const RealData<S>& data) {
  const int n = static_cast<int>(eps.size());
  detail::check_size(n);
  RealFockVector<S> out = detail::empty_result(data, eps.size());
  for (const SetPartition& pi : enumerate_p12_eps(eps)) {
    const std::vector<int> singles = detail::singletons_of(pi);
    const std::vector<S> tensor = detail::singleton_tensor(data, singles);
    for (const TypeBPartition& colored : type_b_colorings(pi)) {
      const PartitionStats st = stats(pi, colored.coloring);
      S weight = ipow(data.alpha, st.nb) * ipow(data.q, st.cr + st.ins + 2 * st.innb + 2 * st.slnb);
      for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
        const auto& block = pi.blocks[b];
        if (block.size() != 2) continue;
        const auto i = static_cast<std::size_t>(block[0] - 1);
        const auto j = static_cast<std::size_t>(block[1] - 1);
        weight *= colored.coloring[b] == 1 ? data.inner(i, j) : data.inner_bar(i, j);
      }
      detail::accumulate(out, singles.size(), tensor, weight);
    }
  }
  return out;
}

/// Uncolored Wick sum over P_{1,2;eps}(n): q^{Cr + InS} times the product over
/// pairs of <x_i,x_j> + alpha q^{2 Cov + 2 SL} <x_i,xbar_j>.
template <typename S>
RealFockVector<S> wick_uncolored(const EpsilonPattern& eps, const RealData<S>& data) {
  const int n = static_cast<int>(eps.size());
  detail::check_size(n);
  RealFockVector<S> out = detail::empty_result(data, eps.size());
  for (const SetPartition& pi : enumerate_p12_eps(eps)) {
    const std::vector<int> singles = detail::singletons_of(pi);
    const PartitionStats st = stats(pi);
    S weight = ipow(data.q, st.cr + st.ins);
    for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
      const auto& block = pi.blocks[b];
      if (block.size() != 2) continue;
      const auto i = static_cast<std::size_t>(block[0] - 1);
      const auto j = static_cast<std::size_t>(block[1] - 1);
      weight *= data.inner(i, j) + data.alpha * ipow(data.q, 2 * st.cov[b] + 2 * st.sl[b]) * data.inner_bar(i, j);
    }
    detail::accumulate(out, singles.size(), detail::singleton_tensor(data, singles), weight);
  }
  return out;
}

template <typename S>
struct MomentSums {
  S colored{0};
  S uncolored{0};
};

/// <Omega, G(x_n)...G(x_1) Omega> both as the colored sum over P^B_2(n) with
/// weight alpha^NB q^{Cr + 2 InNB} and as the uncolored product form. Odd n
/// gives zero in both.
template <typename S>
MomentSums<S> moment_pair_sum(const RealData<S>& data) {
  const int n = static_cast<int>(data.x.size());
  detail::check_size(n);
  MomentSums<S> out;
  for (const SetPartition& pi : enumerate_pair_partitions(n)) {
    const PartitionStats base = stats(pi);
    S product = ipow(data.q, base.cr);
    for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
      const auto i = static_cast<std::size_t>(pi.blocks[b][0] - 1);
      const auto j = static_cast<std::size_t>(pi.blocks[b][1] - 1);
      product *= data.inner(i, j) + data.alpha * ipow(data.q, 2 * base.cov[b]) * data.inner_bar(i, j);
    }
    out.uncolored += product;

    for (const TypeBPartition& colored : type_b_colorings(pi)) {
      const PartitionStats st = stats(pi, colored.coloring);
      S weight = ipow(data.alpha, st.nb) * ipow(data.q, st.cr + 2 * st.innb);
      for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
        const auto i = static_cast<std::size_t>(pi.blocks[b][0] - 1);
        const auto j = static_cast<std::size_t>(pi.blocks[b][1] - 1);
        weight *= colored.coloring[b] == 1 ? data.inner(i, j) : data.inner_bar(i, j);
      }
      out.colored += weight;
    }
  }
  return out;
}

/// Sum over NC_2(n) of t^{In(pi)} times the product of <x_i,x_j>.
template <typename S>
S t_moment_sum(const RealData<S>& data, const S& t) {
  if (!(t > S(0))) throw std::invalid_argument("t_moment_sum: t must be positive");
  const int n = static_cast<int>(data.x.size());
  detail::check_size(n);
  S sum{0};
  for (const SetPartition& pi : enumerate_nc2(n)) {
    S term = ipow(t, noncrossing_stats(pi).first);
    for (const auto& block : pi.blocks) {
      term *= data.inner(static_cast<std::size_t>(block[0] - 1), static_cast<std::size_t>(block[1] - 1));
    }
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Double-precision bridges to the operator layer

/// Real parts of `vectors` with the space's involution and the parameters.
RealData<double> real_data(const std::vector<Vector>& vectors, const DeformParams& params,
                           const InvolutiveSpace& space);

FockVector to_fock(const RealFockVector<double>& v, std::size_t d);

/// B^{eps(n)}(x_n)...B^{eps(1)}(x_1) Omega from the colored or the uncolored sum.
FockVector wick_vector(const EpsilonPattern& eps, const std::vector<Vector>& vectors, const DeformParams& params,
                       const InvolutiveSpace& space, bool colored = true);

MomentSums<double> moment_pair_sum(const std::vector<Vector>& vectors, const DeformParams& params,
                                   const InvolutiveSpace& space);

double t_moment_sum(const std::vector<Vector>& vectors, double t);

}  // namespace aqfock::partitions

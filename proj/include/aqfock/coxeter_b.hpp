#pragma once

// The hyperoctahedral group (Coxeter group of type B) in window notation.

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace aqfock::coxeter_b {

/// Default cap on the rank accepted by enumeration and length tables.
inline constexpr int kDefaultRankCap = 6;

/// Largest rank with a packed key (five bits per entry in 64 bits), and hence
/// the hard limit for Cayley-graph tables. Plain elements may be larger.
inline constexpr int kMaxRank = 10;

/// A signed permutation sigma of {+-1,...,+-n} with sigma(-k) = -sigma(k),
/// stored by its positive window [sigma(1), ..., sigma(n)].
class SignedPermutation {
 public:
  /// Validates that the magnitudes of `window` form a permutation of 1..n.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  /// sigma(k) for k in {+-1, ..., +-n}.
  int operator()(int k) const;

  SignedPermutation inverse() const;
  bool is_identity() const;

  /// Packed key, unique per (rank, window). Throws std::length_error above kMaxRank.
  std::uint64_t key() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> window_;
};

/// (l1, l2): number of pi_0 letters and of pi_i (i >= 1) letters in a
/// reduced word.
struct LengthStats {
  int l1 = 0;
  int l2 = 0;
  int length() const { return l1 + l2; }
  auto operator<=>(const LengthStats&) const = default;
};

/// A word pi_{i_1} ... pi_{i_k} in the Coxeter generators.
struct GeneratorWord {
  std::vector<int> letters;

  LengthStats stats() const;
  auto operator<=>(const GeneratorWord&) const = default;
};

SignedPermutation generator(int n, int i);

/// (a o b)(k) = a(b(k)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

inline SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  return compose(a, b);
}

/// Left-to-right product of the letters: pi_{i_1} o ... o pi_{i_k}.
SignedPermutation evaluate(const GeneratorWord& word, int n);

/// Embeds sigma' of rank n-1 into rank n as an element fixing n.
SignedPermutation embed(const SignedPermutation& sigma, int n);

/// Length statistics from a breadth-first search of the Cayley graph, memoized
/// per rank. Throws ResourceError when the rank exceeds `rank_cap`.
LengthStats length_stats(const SignedPermutation& sigma, int rank_cap = kDefaultRankCap);

/// One reduced word of sigma (the BFS tree path).
GeneratorWord reduced_word(const SignedPermutation& sigma, int rank_cap = kDefaultRankCap);

/// Every reduced word of sigma. Exponential in the length; meant for small n.
std::vector<GeneratorWord> all_reduced_words(const SignedPermutation& sigma,
                                             int rank_cap = kDefaultRankCap);

/// Minimal right coset representatives w(0), ..., w(2n-1) of Sigma(n-1) in
/// Sigma(n): w(k) is the prefix of length k of
/// pi_{n-1} ... pi_1 pi_0 pi_1 ... pi_{n-1}.
std::vector<GeneratorWord> stumbo_reps(int n);

struct CosetDecomposition {
  SignedPermutation sub;  // rank n-1 (rank 0 when n == 1)
  int index = 0;          // k with sigma = embed(sub) * w(k)
};

CosetDecomposition coset_decompose(const SignedPermutation& sigma);

/// All 2^n n! elements, in BFS order from the identity.
std::vector<SignedPermutation> enumerate_group(int n, int rank_cap = kDefaultRankCap);

/// Group order 2^n n!.
std::size_t group_order(int n);

}  // namespace aqfock::coxeter_b

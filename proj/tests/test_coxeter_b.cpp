#include <doctest.h>

#include <set>

#include "aqfock/coxeter_b.hpp"
#include "aqfock/errors.hpp"

using namespace aqfock::coxeter_b;

namespace {

SignedPermutation w(std::vector<int> window) { return SignedPermutation(std::move(window)); }

}  // namespace

TEST_CASE("generators in window notation") {
  CHECK(generator(2, 0) == w({-1, 2}));
  CHECK(generator(2, 1) == w({2, 1}));
  CHECK(generator(3, 2) == w({1, 3, 2}));
}

TEST_CASE("composition applies the right factor first") {
  CHECK(compose(generator(2, 1), generator(2, 0)) == w({-2, 1}));
  const auto sigma = w({3, -1, 2});
  CHECK(compose(sigma, SignedPermutation::identity(3)) == sigma);
  CHECK(compose(generator(2, 0), generator(2, 0)).is_identity());
  CHECK(compose(sigma, sigma.inverse()).is_identity());
}

TEST_CASE("invalid windows are rejected") {
  CHECK_THROWS_AS(w({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(w({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(w({1, 3}), std::invalid_argument);
}

TEST_CASE("length statistics") {
  CHECK(length_stats(SignedPermutation::identity(3)) == LengthStats{0, 0});
  CHECK(length_stats(generator(2, 0)) == LengthStats{1, 0});
  CHECK(length_stats(w({1, -2})) == LengthStats{1, 2});
  // Longest element -id of B_n has length n^2 with n sign letters.
  CHECK(length_stats(w({-1, -2, -3})) == LengthStats{3, 6});
}

TEST_CASE("rank cap is enforced") {
  CHECK_THROWS_AS(length_stats(SignedPermutation::identity(7)), aqfock::ResourceError);
  CHECK(length_stats(SignedPermutation::identity(7), 7) == LengthStats{0, 0});
}

TEST_CASE("large elements exist but have no packed key") {
  const auto big = SignedPermutation::identity(40);
  CHECK(big.rank() == 40);
  CHECK_THROWS_AS(big.key(), std::length_error);
}

TEST_CASE("Stumbo representatives") {
  CHECK(stumbo_reps(1) == std::vector<GeneratorWord>{{{}}, {{0}}});
  CHECK(stumbo_reps(2) == std::vector<GeneratorWord>{{{}}, {{1}}, {{1, 0}}, {{1, 0, 1}}});
  CHECK(stumbo_reps(3)[4].letters == std::vector<int>{2, 1, 0, 1});
}

TEST_CASE("coset decomposition examples") {
  const auto id = coset_decompose(SignedPermutation::identity(3));
  CHECK(id.sub.is_identity());
  CHECK(id.index == 0);
  const auto reps = stumbo_reps(3);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto dec = coset_decompose(evaluate(reps[k], 3));
    CHECK(dec.sub.is_identity());
    CHECK(dec.index == static_cast<int>(k));
  }
  // [-2,1] is the rep pi_1 pi_0 itself; pi_0 from the subgroup followed by pi_1 gives [2,-1].
  const auto rep = coset_decompose(w({-2, 1}));
  CHECK(rep.sub.is_identity());
  CHECK(rep.index == 2);
  const auto dec = coset_decompose(w({2, -1}));
  CHECK(dec.sub == w({-1}));
  CHECK(dec.index == 1);
}

TEST_CASE("group sizes and uniqueness") {
  CHECK(enumerate_group(1).size() == 2);
  CHECK(enumerate_group(2).size() == 8);
  const auto g4 = enumerate_group(4);
  CHECK(g4.size() == 384);
  CHECK(std::set<SignedPermutation>(g4.begin(), g4.end()).size() == 384);
}

TEST_CASE("length generating function is the type-B Poincare polynomial") {
  // sum over Sigma(n) of x^{l(sigma)} = prod_{k=1}^n [2k]_x.
  for (int n = 1; n <= 4; ++n) {
    std::vector<long long> counts(static_cast<std::size_t>(n * n + 1), 0);
    for (const auto& s : enumerate_group(n)) ++counts[static_cast<std::size_t>(length_stats(s).length())];
    std::vector<long long> poly{1};
    for (int k = 1; k <= n; ++k) {
      std::vector<long long> next(poly.size() + static_cast<std::size_t>(2 * k - 1), 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        for (int j = 0; j < 2 * k; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
      }
      poly = next;
    }
    CHECK(counts == poly);
  }
}

TEST_CASE("l1 counts negative window entries") {
  // An independent closed form, checked against the BFS.
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_group(n)) {
      int negatives = 0;
      for (int v : s.window()) negatives += v < 0 ? 1 : 0;
      CHECK(length_stats(s).l1 == negatives);
    }
  }
}

TEST_CASE("reduced words evaluate back and agree on statistics") {
  for (const auto& s : enumerate_group(3)) {
    const auto words = all_reduced_words(s);
    REQUIRE(!words.empty());
    for (const auto& word : words) {
      CHECK(evaluate(word, 3) == s);
      CHECK(word.stats() == length_stats(s));
    }
    CHECK(reduced_word(s).stats() == length_stats(s));
  }
}

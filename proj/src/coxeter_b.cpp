#include "aqfock/coxeter_b.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "aqfock/errors.hpp"

namespace aqfock::coxeter_b {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : window_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("window magnitudes must be a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative rank");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
  return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int k) const {
  const int a = std::abs(k);
  if (a < 1 || a > rank()) throw std::out_of_range("signed permutation argument out of range");
  const int v = window_[static_cast<std::size_t>(a - 1)];
  return k > 0 ? v : -v;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (int k = 1; k <= rank(); ++k) {
    const int v = window_[static_cast<std::size_t>(k - 1)];
    inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? k : -k;
  }
  return SignedPermutation(std::move(inv));
}

bool SignedPermutation::is_identity() const {
  for (int k = 0; k < rank(); ++k) {
    if (window_[static_cast<std::size_t>(k)] != k + 1) return false;
  }
  return true;
}

std::uint64_t SignedPermutation::key() const {
  if (rank() > kMaxRank) throw std::length_error("key: rank exceeds " + std::to_string(kMaxRank));
  std::uint64_t key = static_cast<std::uint64_t>(rank());
  for (int v : window_) key = (key << 5U) | static_cast<std::uint64_t>(v < 0 ? 15 - v : v - 1);
  return key;
}

LengthStats GeneratorWord::stats() const {
  LengthStats s;
  for (int i : letters) (i == 0 ? s.l1 : s.l2) += 1;
  return s;
}

SignedPermutation generator(int n, int i) {
  if (n < 1 || i < 0 || i >= n) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range for rank " +
                                std::to_string(n));
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
  if (i == 0) {
    w[0] = -1;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> w(static_cast<std::size_t>(a.rank()));
  for (int k = 1; k <= a.rank(); ++k) w[static_cast<std::size_t>(k - 1)] = a(b(k));
  return SignedPermutation(std::move(w));
}

SignedPermutation evaluate(const GeneratorWord& word, int n) {
  SignedPermutation result = SignedPermutation::identity(n);
  for (int i : word.letters) result = compose(result, generator(n, i));
  return result;
}

SignedPermutation embed(const SignedPermutation& sigma, int n) {
  if (sigma.rank() != n - 1) throw std::invalid_argument("embed: rank must be n-1");
  std::vector<int> w = sigma.window();
  w.push_back(n);
  return SignedPermutation(std::move(w));
}

std::size_t group_order(int n) {
  std::size_t order = 1;
  for (int k = 1; k <= n; ++k) order *= 2 * static_cast<std::size_t>(k);
  return order;
}

namespace {

struct CayleyNode {
  LengthStats stats;
  int parent = -1;       // index into CayleyTable::elements
  int last_letter = -1;  // sigma = parent * pi_{last_letter}
};

struct CayleyTable {
  int n = 0;
  std::vector<SignedPermutation> elements;  // BFS order
  std::vector<CayleyNode> nodes;
  std::unordered_map<std::uint64_t, int> index;
};

std::shared_ptr<const CayleyTable> build_table(int n) {
  auto table = std::make_shared<CayleyTable>();
  table->n = n;
  const std::size_t order = group_order(n);
  table->elements.reserve(order);
  table->nodes.reserve(order);
  table->index.reserve(order);

  std::vector<SignedPermutation> gens;
  for (int i = 0; i < n; ++i) gens.push_back(generator(n, i));

  auto e = SignedPermutation::identity(n);
  table->index.emplace(e.key(), 0);
  table->elements.push_back(e);
  table->nodes.push_back({});
  for (std::size_t head = 0; head < table->elements.size(); ++head) {
    const SignedPermutation current = table->elements[head];
    const CayleyNode node = table->nodes[head];
    for (int i = 0; i < n; ++i) {
      SignedPermutation next = compose(current, gens[static_cast<std::size_t>(i)]);
      auto [it, inserted] = table->index.emplace(next.key(), static_cast<int>(table->elements.size()));
      if (!inserted) continue;
      CayleyNode child{node.stats, static_cast<int>(head), i};
      (i == 0 ? child.stats.l1 : child.stats.l2) += 1;
      table->elements.push_back(std::move(next));
      table->nodes.push_back(child);
    }
  }
  return table;
}

std::shared_ptr<const CayleyTable> table_for(int n, int rank_cap) {
  if (n > rank_cap || n > kMaxRank) {
    throw ResourceError("rank " + std::to_string(n) + " exceeds the configured cap " + std::to_string(rank_cap));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CayleyTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_table(n);
  return slot;
}

int node_index(const CayleyTable& table, const SignedPermutation& sigma) {
  return table.index.at(sigma.key());
}

}  // namespace

LengthStats length_stats(const SignedPermutation& sigma, int rank_cap) {
  if (sigma.rank() == 0) return {};
  auto table = table_for(sigma.rank(), rank_cap);
  return table->nodes[static_cast<std::size_t>(node_index(*table, sigma))].stats;
}

GeneratorWord reduced_word(const SignedPermutation& sigma, int rank_cap) {
  GeneratorWord word;
  if (sigma.rank() == 0) return word;
  auto table = table_for(sigma.rank(), rank_cap);
  int idx = node_index(*table, sigma);
  while (table->nodes[static_cast<std::size_t>(idx)].parent >= 0) {
    const auto& node = table->nodes[static_cast<std::size_t>(idx)];
    word.letters.push_back(node.last_letter);
    idx = node.parent;
  }
  std::reverse(word.letters.begin(), word.letters.end());
  return word;
}

std::vector<GeneratorWord> all_reduced_words(const SignedPermutation& sigma, int rank_cap) {
  const int n = sigma.rank();
  if (n == 0) return {GeneratorWord{}};
  auto table = table_for(n, rank_cap);
  // Memoized over elements: words(sigma) = U_{i descent} words(sigma pi_i) + [i].
  std::map<std::uint64_t, std::vector<GeneratorWord>> memo;
  std::function<const std::vector<GeneratorWord>&(const SignedPermutation&)> words =
      [&](const SignedPermutation& s) -> const std::vector<GeneratorWord>& {
    auto found = memo.find(s.key());
    if (found != memo.end()) return found->second;
    std::vector<GeneratorWord> out;
    const int len = table->nodes[static_cast<std::size_t>(node_index(*table, s))].stats.length();
    if (len == 0) {
      out.push_back(GeneratorWord{});
    } else {
      for (int i = 0; i < n; ++i) {
        SignedPermutation shorter = compose(s, generator(n, i));
        const int shorter_len =
            table->nodes[static_cast<std::size_t>(node_index(*table, shorter))].stats.length();
        if (shorter_len != len - 1) continue;
        for (const GeneratorWord& w : words(shorter)) {
          GeneratorWord extended = w;
          extended.letters.push_back(i);
          out.push_back(std::move(extended));
        }
      }
    }
    return memo.emplace(s.key(), std::move(out)).first->second;
  };
  return words(sigma);
}

std::vector<GeneratorWord> stumbo_reps(int n) {
  if (n < 1) throw std::invalid_argument("stumbo_reps: rank must be >= 1");
  std::vector<int> full;
  for (int i = n - 1; i >= 1; --i) full.push_back(i);
  full.push_back(0);
  for (int i = 1; i <= n - 1; ++i) full.push_back(i);
  std::vector<GeneratorWord> reps;
  reps.reserve(2 * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < 2 * static_cast<std::size_t>(n); ++k) {
    reps.push_back(GeneratorWord{std::vector<int>(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(k))});
  }
  return reps;
}

CosetDecomposition coset_decompose(const SignedPermutation& sigma) {
  const int n = sigma.rank();
  if (n < 1) throw std::invalid_argument("coset_decompose: rank must be >= 1");
  const auto reps = stumbo_reps(n);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const SignedPermutation w = evaluate(reps[k], n);
    const SignedPermutation sub = compose(sigma, w.inverse());
    if (sub(n) != n) continue;
    std::vector<int> window(sub.window().begin(), sub.window().end() - 1);
    return {SignedPermutation(std::move(window)), static_cast<int>(k)};
  }
  throw std::logic_error("coset_decompose: no representative found");
}

std::vector<SignedPermutation> enumerate_group(int n, int rank_cap) {
  if (n < 1) throw std::invalid_argument("enumerate_group: rank must be >= 1");
  return table_for(n, rank_cap)->elements;
}

}  // namespace aqfock::coxeter_b

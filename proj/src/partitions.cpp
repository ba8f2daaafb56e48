#include "aqfock/partitions.hpp"

#include <algorithm>
#include <functional>

namespace aqfock::partitions {

namespace {

int min_of(const std::vector<int>& b) { return b.front(); }
int max_of(const std::vector<int>& b) { return b.back(); }

/// Left-to-right construction. At each position the element may start a
/// singleton, open a pair, or close a pair that is still open; `allow`
/// restricts the choices per position.
struct Choices {
  bool singleton = true;
  bool open = true;
  bool close = true;
};

std::vector<SetPartition> build(int n, const std::function<Choices(int)>& allow) {
  if (n < 0) throw std::invalid_argument("partition enumeration: negative size");
  detail::check_size(n);
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  std::vector<std::size_t> open;  // indices into blocks awaiting a closer

  std::function<void(int)> step = [&](int pos) {
    if (pos > n) {
      if (!open.empty()) return;
      SetPartition pi{n, blocks};
      pi.canonicalize();
      out.push_back(std::move(pi));
      return;
    }
    // Prune: every open pair needs a later closer.
    if (static_cast<int>(open.size()) > n - pos + 1) return;
    const Choices c = allow(pos);
    if (c.singleton) {
      blocks.push_back({pos});
      step(pos + 1);
      blocks.pop_back();
    }
    if (c.open) {
      blocks.push_back({pos});
      open.push_back(blocks.size() - 1);
      step(pos + 1);
      open.pop_back();
      blocks.pop_back();
    }
    if (c.close) {
      for (std::size_t k = 0; k < open.size(); ++k) {
        const std::size_t b = open[k];
        blocks[b].push_back(pos);
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(k));
        step(pos + 1);
        open.insert(open.begin() + static_cast<std::ptrdiff_t>(k), b);
        blocks[b].pop_back();
      }
    }
  };
  step(1);
  std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) { return a.blocks < b.blocks; });
  return out;
}

}  // namespace

void SetPartition::validate() const {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int count = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("set partition: empty block");
    for (int e : b) {
      if (e < 1 || e > n || seen[static_cast<std::size_t>(e)]) {
        throw std::invalid_argument("set partition: blocks must cover [n] disjointly");
      }
      seen[static_cast<std::size_t>(e)] = true;
      ++count;
    }
  }
  if (count != n) throw std::invalid_argument("set partition: blocks must cover [n] disjointly");
}

void SetPartition::canonicalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<SetPartition> enumerate_pair_partitions(int n) {
  if (n % 2 != 0) return {};
  return build(n, [](int) { return Choices{false, true, true}; });
}

std::vector<SetPartition> enumerate_p12(int n) {
  return build(n, [](int) { return Choices{}; });
}

std::vector<SetPartition> enumerate_p12_eps(const EpsilonPattern& eps) {
  return build(static_cast<int>(eps.size()), [&eps](int pos) {
    const bool star = eps[static_cast<std::size_t>(pos - 1)] == Eps::Create;
    return Choices{star, star, !star};
  });
}

std::vector<SetPartition> enumerate_p2_eps(const EpsilonPattern& eps) {
  return build(static_cast<int>(eps.size()), [&eps](int pos) {
    const bool star = eps[static_cast<std::size_t>(pos - 1)] == Eps::Create;
    return Choices{false, star, !star};
  });
}

std::vector<SetPartition> enumerate_nc2(int n) {
  std::vector<SetPartition> out;
  for (SetPartition& pi : enumerate_pair_partitions(n)) {
    if (crossings(pi) == 0) out.push_back(std::move(pi));
  }
  return out;
}

std::vector<TypeBPartition> type_b_colorings(const SetPartition& pi) {
  std::vector<std::size_t> pairs;
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    if (pi.blocks[b].size() == 2) pairs.push_back(b);
  }
  std::vector<TypeBPartition> out;
  const std::size_t count = std::size_t{1} << pairs.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    TypeBPartition t{pi, std::vector<int>(pi.blocks.size(), 1)};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) t.coloring[pairs[k]] = -1;
    }
    out.push_back(std::move(t));
  }
  return out;
}

bool covers(const std::vector<int>& w, const std::vector<int>& v) {
  return min_of(w) < min_of(v) && max_of(v) < max_of(w) &&
         std::none_of(w.begin(), w.end(), [&](int e) { return std::find(v.begin(), v.end(), e) != v.end(); });
}

bool cross(const std::vector<int>& v, const std::vector<int>& w) {
  // i < k < j < l with i, j in one block and k, l in the other.
  auto interleave = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (int i : a) {
      for (int j : a) {
        if (!(i < j)) continue;
        for (int k : b) {
          if (!(i < k && k < j)) continue;
          for (int l : b) {
            if (j < l) return true;
          }
        }
      }
    }
    return false;
  };
  return interleave(v, w) || interleave(w, v);
}

int crossings(const SetPartition& pi) {
  int count = 0;
  for (std::size_t a = 0; a < pi.blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < pi.blocks.size(); ++b) count += cross(pi.blocks[a], pi.blocks[b]) ? 1 : 0;
  }
  return count;
}

int cov(const SetPartition& pi, std::size_t b) {
  int count = 0;
  for (std::size_t w = 0; w < pi.blocks.size(); ++w) {
    if (w != b && covers(pi.blocks[w], pi.blocks[b])) ++count;
  }
  return count;
}

int sl(const SetPartition& pi, std::size_t b) {
  int count = 0;
  for (std::size_t v = 0; v < pi.blocks.size(); ++v) {
    if (v != b && pi.blocks[v].size() == 1 && pi.blocks[v][0] < min_of(pi.blocks[b])) ++count;
  }
  return count;
}

PartitionStats stats(const SetPartition& pi, const std::vector<int>& coloring) {
  if (!coloring.empty() && coloring.size() != pi.blocks.size()) {
    throw std::invalid_argument("stats: coloring must have one entry per block");
  }
  auto color = [&coloring](std::size_t b) { return coloring.empty() ? 1 : coloring[b]; };
  PartitionStats s;
  s.cr = crossings(pi);
  const std::size_t count = pi.blocks.size();
  s.cov.resize(count);
  s.sl.resize(count);
  for (std::size_t b = 0; b < count; ++b) {
    s.cov[b] = cov(pi, b);
    s.sl[b] = sl(pi, b);
    const bool singleton = pi.blocks[b].size() == 1;
    const bool negative_pair = pi.blocks[b].size() == 2 && color(b) == -1;
    if (color(b) == -1) ++s.nb;
    if (singleton) s.ins += s.cov[b];
    if (negative_pair) {
      s.innb += s.cov[b];
      s.slnb += s.sl[b];
    }
  }
  if (s.cr == 0) {
    const auto [inn, out] = noncrossing_stats(pi);
    s.inn = inn;
    s.out = out;
  }
  return s;
}

std::pair<int, int> noncrossing_stats(const SetPartition& pi) {
  if (crossings(pi) != 0) throw std::invalid_argument("noncrossing_stats: partition has crossings");
  int inner = 0;
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) inner += cov(pi, b) > 0 ? 1 : 0;
  return {inner, static_cast<int>(pi.blocks.size()) - inner};
}

// ---------------------------------------------------------------------------
// Bridges

RealData<double> real_data(const std::vector<Vector>& vectors, const DeformParams& params,
                           const InvolutiveSpace& space) {
  RealData<double> data;
  data.alpha = params.alpha;
  data.q = params.q;
  const std::size_t d = space.dim();
  data.involution.assign(d, std::vector<double>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      data.involution[a][b] = space.involution()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
  }
  for (const Vector& v : vectors) {
    if (v.size() != static_cast<Eigen::Index>(d)) throw std::invalid_argument("real_data: dimension mismatch");
    if (v.imag().cwiseAbs().maxCoeff() != 0.0) throw std::invalid_argument("real_data: vectors must be real");
    std::vector<double> x(d);
    for (std::size_t a = 0; a < d; ++a) x[a] = v(static_cast<Eigen::Index>(a)).real();
    data.x.push_back(std::move(x));
  }
  return data;
}

FockVector to_fock(const RealFockVector<double>& v, std::size_t d) {
  FockVector out(d, static_cast<int>(v.levels.size()) - 1);
  for (std::size_t k = 0; k < v.levels.size(); ++k) {
    Vector level = Vector::Zero(static_cast<Eigen::Index>(upow(d, static_cast<int>(k))));
    for (std::size_t i = 0; i < v.levels[k].size(); ++i) level(static_cast<Eigen::Index>(i)) = v.levels[k][i];
    out.level(static_cast<int>(k)) = std::move(level);
  }
  return out;
}

FockVector wick_vector(const EpsilonPattern& eps, const std::vector<Vector>& vectors, const DeformParams& params,
                       const InvolutiveSpace& space, bool colored) {
  if (eps.size() != vectors.size()) throw std::invalid_argument("wick_vector: pattern and vectors differ in length");
  const RealData<double> data = real_data(vectors, params, space);
  return to_fock(colored ? wick_colored(eps, data) : wick_uncolored(eps, data), space.dim());
}

MomentSums<double> moment_pair_sum(const std::vector<Vector>& vectors, const DeformParams& params,
                                   const InvolutiveSpace& space) {
  return moment_pair_sum(real_data(vectors, params, space));
}

double t_moment_sum(const std::vector<Vector>& vectors, double t) {
  if (vectors.empty()) return 1.0;
  const auto d = static_cast<std::size_t>(vectors.front().size());
  return t_moment_sum(real_data(vectors, DeformParams{}, InvolutiveSpace::identity(d)), t);
}

}  // namespace aqfock::partitions

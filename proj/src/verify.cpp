#include "aqfock/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aqfock/coxeter_b.hpp"
#include "aqfock/operators.hpp"
#include "aqfock/orthopoly.hpp"
#include "aqfock/partitions.hpp"
#include "aqfock/qsymbols.hpp"
#include "aqfock/text_output.hpp"

namespace aqfock::verify {

namespace {

namespace cb = coxeter_b;
namespace pt = partitions;
namespace op = orthopoly;

/// Collects checks for one suite. A configured tolerance replaces every
/// floating-point bound; exact checks (bound 0) keep their bound.
class Recorder {
 public:
  Recorder(Report& report, std::string suite, const RunConfig& config)
      : report_(report), suite_(std::move(suite)), tol_(config.tol) {}

  void add(const std::string& name, double residual, double bound, const std::string& note = "") {
    const double b = (tol_ && bound > 0.0) ? *tol_ : bound;
    const bool ok = std::isfinite(residual) && residual <= b;
    report_.checks.push_back(Check{suite_, name, residual, b, ok, note});
  }

  void exact(const std::string& name, long long mismatches, const std::string& note = "") {
    report_.checks.push_back(Check{suite_, name, static_cast<double>(mismatches), 0.0, mismatches == 0, note});
  }

  void skip(const std::string& name, const std::string& why) {
    report_.checks.push_back(Check{suite_, name, 0.0, 0.0, true, "skipped: " + why});
  }

 private:
  Report& report_;
  std::string suite_;
  std::optional<double> tol_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double max_entry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

/// Largest level n with d^n <= cells.
int level_cap(std::size_t d, std::size_t cells, int hard_cap) {
  int n = 0;
  while (n < hard_cap && upow(d, n + 1) <= cells) ++n;
  return n;
}

/// r(x) on level n: contracts the last leg with conj(x).
Matrix contract_last(const Vector& x, int n) {
  const auto d = static_cast<std::size_t>(x.size());
  const auto rows = static_cast<Eigen::Index>(upow(d, n - 1));
  return kron(Matrix::Identity(rows, rows), Matrix(x.adjoint()));
}

std::string fmt(double v) { return text::number(v); }

// ---------------------------------------------------------------------------

void group_suite(Report& report, const RunConfig& config) {
  Recorder rec(report, "group", config);

  long long braid_failures = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto e = cb::SignedPermutation::identity(n);
    auto power = [](const cb::SignedPermutation& a, int k) {
      cb::SignedPermutation p = cb::SignedPermutation::identity(a.rank());
      for (int j = 0; j < k; ++j) p = p * a;
      return p;
    };
    for (int i = 0; i < n; ++i) {
      const auto gi = cb::generator(n, i);
      if (gi * gi != e) ++braid_failures;
      for (int j = i + 1; j < n; ++j) {
        const auto prod = gi * cb::generator(n, j);
        const int order = (i == 0 && j == 1) ? 4 : (j == i + 1 ? 3 : 2);
        if (power(prod, order) != e) ++braid_failures;
        for (int k = 1; k < order; ++k) {
          if (power(prod, k) == e) ++braid_failures;
        }
      }
    }
  }
  rec.exact("braid_relations", braid_failures, "n=2..5, exact orders of pi_i pi_j");

  long long order_failures = 0;
  for (int n = 1; n <= 5; ++n) {
    if (cb::enumerate_group(n).size() != cb::group_order(n)) ++order_failures;
  }
  rec.exact("group_order", order_failures, "BFS reaches 2^n n! elements, n<=5");

  long long word_failures = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& sigma : cb::enumerate_group(n)) {
      const cb::LengthStats s = cb::length_stats(sigma);
      for (const auto& word : cb::all_reduced_words(sigma)) {
        if (word.stats() != s || cb::evaluate(word, n) != sigma) ++word_failures;
      }
    }
  }
  rec.exact("reduced_word_well_defined", word_failures, "all reduced words, n<=3");

  long long coset_failures = 0;
  long long bijection_failures = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto reps = cb::stumbo_reps(n);
    std::vector<cb::SignedPermutation> w;
    for (const auto& r : reps) w.push_back(cb::evaluate(r, n));
    if (static_cast<int>(w.size()) != 2 * n) ++bijection_failures;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (cb::length_stats(w[k]).length() != static_cast<int>(k)) ++bijection_failures;
      for (std::size_t l = k + 1; l < w.size(); ++l) {
        if ((w[k] * w[l].inverse())(n) == n) ++bijection_failures;  // same right coset
      }
    }
    std::vector<std::size_t> hits(w.size(), 0);
    for (const auto& sigma : cb::enumerate_group(n)) {
      const auto dec = cb::coset_decompose(sigma);
      const auto k = static_cast<std::size_t>(dec.index);
      ++hits[k];
      const cb::SignedPermutation sub = cb::embed(dec.sub, n);
      if (sub * w[k] != sigma) ++coset_failures;
      const cb::LengthStats ls = cb::length_stats(sigma);
      const cb::LengthStats ss = cb::length_stats(dec.sub);
      const cb::LengthStats ws = reps[k].stats();
      if (ls.l1 != ss.l1 + ws.l1 || ls.l2 != ss.l2 + ws.l2) ++coset_failures;
    }
    const std::size_t coset_size = cb::group_order(n - 1);
    for (std::size_t h : hits) {
      if (h != coset_size) ++bijection_failures;
    }
  }
  rec.exact("coset_roundtrip_additivity", coset_failures, "every element, n<=5");
  rec.exact("stumbo_bijection", bijection_failures, "one representative per right coset, n<=5");
}

// ---------------------------------------------------------------------------

void fock_suite(Report& report, const RunConfig& config) {
  Recorder rec(report, "fock", config);
  const DeformParams params = config.params();
  const InvolutiveSpace space = config.space();
  const std::size_t d = space.dim();
  Rng rng(config.seed);

  const int n_word = std::max(1, level_cap(d, 16, 4));
  double closed_vs_word = 0.0;
  for (int n = 1; n <= n_word; ++n) {
    for (const auto& sigma : cb::enumerate_group(n)) {
      closed_vs_word = std::max(closed_vs_word,
                                max_entry(sigma_action(sigma, space) - sigma_action_by_word(sigma, space)));
    }
  }
  rec.add("sigma_action_closed_vs_word", closed_vs_word, 1e-12, "n<=" + std::to_string(n_word));

  double homomorphism = 0.0;
  {
    const auto group = cb::enumerate_group(n_word);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& a = group[pick(rng)];
      const auto& b = group[pick(rng)];
      homomorphism = std::max(
          homomorphism, max_entry(sigma_action(a * b, space) - sigma_action(a, space) * sigma_action(b, space)));
    }
  }
  rec.add("sigma_action_homomorphism", homomorphism, 1e-12, "20 random pairs");

  const int n_direct = std::max(1, level_cap(d, 16, 4));
  double hermitian = 0.0;
  double factorization = 0.0;
  double reps = 0.0;
  for (int n = 1; n <= n_direct; ++n) {
    const LevelMap direct = p_operator_direct(n, params, space);
    hermitian = std::max(hermitian, max_entry(direct - direct.adjoint()));
    factorization = std::max(factorization, max_entry(p_operator_recursive(n, params, space) - direct));
    reps = std::max(reps, max_entry(r_operator(n, params, space) - r_operator_from_reps(n, params, space)));
  }
  rec.add("p_hermitian", hermitian, 1e-12, "n<=" + std::to_string(n_direct));
  rec.add("p_recursive_vs_direct", factorization, 1e-12, "n<=" + std::to_string(n_direct));
  rec.add("r_formula_vs_coset_reps", reps, 1e-12, "n<=" + std::to_string(n_direct));

  const int n_level = std::max(1, level_cap(d, 64, 5));
  const FockModel model(space, params);
  double r_excess = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  double commutation = 0.0;
  for (int n = 1; n <= n_level; ++n) {
    const double bound = (1.0 + std::abs(params.alpha) * std::pow(std::abs(params.q), n - 1)) *
                         op::q_number(n, std::abs(params.q));
    r_excess = std::max(r_excess, spectral_norm(model.r(n)) - bound);
    min_eig = std::min(min_eig, positivity_report(n, params, space).min_eigenvalue);
    const Vector x = random_vector(d, rng);
    const Matrix rx = contract_last(x, n);
    const auto prev = static_cast<Eigen::Index>(d);
    const Matrix lhs = rx * kron(model.p(n - 1), Matrix(Matrix::Identity(prev, prev)));
    commutation = std::max(commutation, max_entry(lhs - model.p(n - 1) * rx) / std::max(1.0, max_entry(lhs)));
  }
  rec.add("r_norm_bound", std::max(r_excess, 0.0), 1e-12,
          "(1+|a||q|^{n-1})[n]_{|q|}, n<=" + std::to_string(n_level));
  rec.add("p_positive", std::isfinite(min_eig) ? std::max(0.0, kKernelTolerance - min_eig) : 1.0, 0.0,
          "min eigenvalue " + fmt(min_eig));
  rec.add("r_commutes_with_p", commutation, 1e-12, "r(x)(P (x) I) = P r(x)");

  double tpn = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const Vector x = trial == 0 ? reference_vector(space) : random_vector(d, rng);
    for (int n = 1; n <= n_level; ++n) {
      const FockVector f = FockVector::homogeneous(d, n, tensor_power(x, n));
      const double direct = inner_aq(f, f, params, space).real();
      tpn = std::max(tpn, rel(tensor_power_norm(x, n, params, space), direct));
    }
  }
  rec.add("tensor_power_norm", tpn, 1e-11, "closed form vs inner product");
}

// ---------------------------------------------------------------------------

void operators_suite(Report& report, const RunConfig& config) {
  Recorder rec(report, "operators", config);
  const DeformParams params = config.params();
  const InvolutiveSpace space = config.space();
  const std::size_t d = space.dim();
  const FockModel model(space, params);
  Rng rng(config.seed);
  const int m = std::clamp(config.trunc, 1, std::max(1, level_cap(d, 1024, 10)));

  auto unit = [&](bool real = false) {
    Vector v = random_vector(d, rng, real);
    return Vector(v / v.norm());
  };

  const Vector x = unit();
  const Vector y = unit();
  rec.add("annihilator_two_routes", ops::annihilator_route_residual(x, m, model, rng), 1e-10,
          "m=" + std::to_string(m));
  rec.add("adjoint_via_r", ops::adjoint_check(x, m, model, rng, 8, ops::AnnihilationRoute::ViaR), 1e-10);
  rec.add("adjoint_via_number", ops::adjoint_check(x, m, model, rng, 8, ops::AnnihilationRoute::ViaNumber), 1e-10);
  rec.add("commutation_relation", ops::commutator_residual(x, y, std::min(m, 5), model), 1e-11, "levels 0..4");
  rec.add("gaussian_selfadjoint", ops::gaussian_selfadjoint_residual(x, std::min(m, 6), model), 1e-10);

  // Unpruned G-word against the pruned vacuum moment.
  {
    const int k = std::min(config.order, std::max(1, level_cap(d, 1024, 8)));
    std::vector<Vector> word;
    for (int j = 0; j < k; ++j) word.push_back(unit());
    FockVector f = FockVector::vacuum(d);
    for (const Vector& v : word) f = ops::gaussian(v, model)(f);
    const cplx pruned = ops::vacuum_moment(word, model);
    rec.add("truncation_invariance", std::abs(f.vacuum_component() - pruned) / std::max(1.0, std::abs(pruned)), 1e-11,
            "word length " + std::to_string(k));
  }

  // Triple moment agreement on a unit vector close to self-dual.
  {
    const Vector xr = reference_vector(space);
    const double c = self_duality(xr, space);
    const int k_max = std::clamp(config.order, 0, 2 * std::max(1, level_cap(d, 1024, 6)));
    const std::vector<double> jacobi = op::qmp_moments(params.alpha, params.q, c, k_max);
    double op_vs_part = 0.0;
    double op_vs_jac = 0.0;
    double col_vs_uncol = 0.0;
    for (int k = 0; k <= k_max; ++k) {
      const double opm = ops::vacuum_moment_power(xr, k, model).real();
      const auto sums = pt::moment_pair_sum(std::vector<Vector>(static_cast<std::size_t>(k), xr), params, space);
      op_vs_part = std::max(op_vs_part, rel(sums.colored, opm));
      op_vs_jac = std::max(op_vs_jac, rel(jacobi[static_cast<std::size_t>(k)], opm));
      col_vs_uncol = std::max(col_vs_uncol, rel(sums.uncolored, sums.colored));
    }
    const std::string note = "k<=" + std::to_string(k_max) + ", <x,xbar>=" + fmt(c);
    rec.add("moments_operator_vs_partition", op_vs_part, 1e-10, note);
    rec.add("moments_operator_vs_jacobi", op_vs_jac, 1e-10, note);
    rec.add("moments_colored_vs_uncolored", col_vs_uncol, 1e-10, note);
  }

  // Mixed words of distinct real vectors.
  {
    double mixed = 0.0;
    double reversal = 0.0;
    for (int n = 1; n <= 6; ++n) {
      std::vector<Vector> v;
      for (int j = 0; j < n; ++j) v.push_back(unit(true));
      const double opm = ops::vacuum_moment(v, model).real();
      const double part = pt::moment_pair_sum(v, params, space).colored;
      std::vector<Vector> rv(v.rbegin(), v.rend());
      mixed = std::max(mixed, rel(part, opm));
      reversal = std::max(reversal, rel(ops::vacuum_moment(rv, model).real(), opm));
    }
    rec.add("mixed_moments_operator_vs_partition", mixed, 1e-10, "n<=6");
    rec.add("moment_reversal_symmetry", reversal, 1e-10, "n<=6");
  }

  // Creation norm against the theorem.
  {
    const Vector xr = reference_vector(space);
    const ops::NormBounds nb = ops::norm_bounds(xr, params, space);
    const int m_norm = std::clamp(config.trunc, 1, std::max(1, level_cap(d, 256, 12)));
    double upper_excess = 0.0;
    double lower_excess = 0.0;
    double monotone = 0.0;
    double prev = 0.0;
    double last = 0.0;
    for (int mm = 1; mm <= m_norm; ++mm) {
      const double norm = ops::creation_norm(xr, mm, model);
      upper_excess = std::max(upper_excess, norm - nb.upper);
      for (int n = 1; n <= mm; ++n) {
        lower_excess = std::max(lower_excess, ops::creation_lower_bound(xr, n, params, space) - norm);
      }
      monotone = std::max(monotone, prev - norm);
      prev = norm;
      last = norm;
    }
    const std::string note = "case " + std::to_string(static_cast<int>(nb.which)) + ", m<=" + std::to_string(m_norm) +
                             ", norm " + fmt(last) + " in [" + fmt(nb.lower) + ", " + fmt(nb.upper) + "]";
    rec.add("creation_norm_upper_bound", std::max(upper_excess, 0.0), 1e-10, note);
    rec.add("creation_norm_tensor_lower_bound", std::max(lower_excess, 0.0), 1e-10, note);
    rec.add("creation_norm_monotone", std::max(monotone, 0.0), 1e-12, note);
    if (nb.which == ops::NormCase::One) {
      rec.add("creation_norm_case1_exact", std::abs(last - nb.upper), 1e-8, note);
    }
  }

  // Traciality witness on C^2 with J = diag(s, t).
  {
    double witness = 0.0;
    double reversed = 0.0;
    for (int s : {1, -1}) {
      for (int t : {1, -1}) {
        const ops::TraceDefect td = ops::trace_defect(params, s, t);
        witness = std::max(witness, std::abs(td.witness - td.unit_formula));
        reversed = std::max(reversed, std::abs(td.measured));
      }
    }
    rec.add("trace_defect_witness", witness, 1e-12, "t a (1-q^2)(1+s a), s,t in {+1,-1}");
    rec.add("trace_defect_reversed_words", reversed, 1e-12, "x1=x3, x2=x4 gives reversed words");
  }
}

// ---------------------------------------------------------------------------

long long double_factorial(int n) {
  long long r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

void partitions_suite(Report& report, const RunConfig& config) {
  Recorder rec(report, "partitions", config);
  const DeformParams params = config.params();
  const InvolutiveSpace space = config.space();
  const std::size_t d = space.dim();
  const FockModel model(space, params);
  Rng rng(config.seed);

  const std::vector<long long> telephone{1, 1, 2, 4, 10, 26, 76, 232, 764};
  const std::vector<long long> catalan{1, 1, 2, 5, 14};
  long long count_failures = 0;
  for (int n = 0; n <= 8; ++n) {
    const auto pairs = pt::enumerate_pair_partitions(n);
    const long long expected_pairs = n % 2 == 0 ? double_factorial(n - 1) : 0;
    if (static_cast<long long>(pairs.size()) != expected_pairs) ++count_failures;
    long long colored = 0;
    for (const auto& pi : pairs) colored += static_cast<long long>(pt::type_b_colorings(pi).size());
    if (colored != (n % 2 == 0 ? (1LL << (n / 2)) * expected_pairs : 0)) ++count_failures;
    const auto p12 = pt::enumerate_p12(n);
    if (static_cast<long long>(p12.size()) != telephone[static_cast<std::size_t>(n)]) ++count_failures;
    if (n % 2 == 0 && static_cast<long long>(pt::enumerate_nc2(n).size()) != catalan[static_cast<std::size_t>(n / 2)]) {
      ++count_failures;
    }
    if (n > 6) continue;
    for (const auto& eps : all_epsilon_patterns(n)) {
      // Direct construction against filtering of all singleton-pair partitions.
      std::vector<pt::SetPartition> filtered;
      std::vector<pt::SetPartition> filtered_pairs;
      for (const auto& pi : p12) {
        bool ok = true;
        for (const auto& b : pi.blocks) {
          const bool first_star = eps[static_cast<std::size_t>(b[0] - 1)] == Eps::Create;
          const bool second_one = b.size() == 1 || eps[static_cast<std::size_t>(b[1] - 1)] == Eps::Annihilate;
          ok = ok && first_star && second_one;
        }
        if (!ok) continue;
        filtered.push_back(pi);
        if (std::all_of(pi.blocks.begin(), pi.blocks.end(), [](const auto& b) { return b.size() == 2; })) {
          filtered_pairs.push_back(pi);
        }
      }
      if (pt::enumerate_p12_eps(eps) != filtered) ++count_failures;
      if (pt::enumerate_p2_eps(eps) != filtered_pairs) ++count_failures;
    }
  }
  rec.exact("partition_counts", count_failures, "(n-1)!!, 2^{n/2}(n-1)!!, telephone, Catalan, eps filters");

  auto real_unit = [&] {
    Vector v = random_vector(d, rng, true);
    return Vector(v / v.norm());
  };

  double wick_forms = 0.0;
  double wick_ops = 0.0;
  const int n_wick = std::min(5, std::max(1, level_cap(d, 256, 5)));
  for (int n = 1; n <= 6; ++n) {
    for (int tuple = 0; tuple < 2; ++tuple) {
      std::vector<Vector> v;
      for (int j = 0; j < n; ++j) v.push_back(real_unit());
      for (const auto& eps : all_epsilon_patterns(n)) {
        const FockVector colored = pt::wick_vector(eps, v, params, space, true);
        const FockVector uncolored = pt::wick_vector(eps, v, params, space, false);
        wick_forms = std::max(wick_forms, max_abs_diff(colored, uncolored));
        if (n <= n_wick) wick_ops = std::max(wick_ops, max_abs_diff(colored, ops::apply_word(eps, v, model)));
      }
    }
  }
  rec.add("wick_colored_vs_uncolored", wick_forms, 1e-11, "all eps, n<=6");
  rec.add("wick_vs_operator_word", wick_ops, 1e-11, "all eps, n<=" + std::to_string(n_wick));

  double sums = 0.0;
  for (int n = 2; n <= 6; n += 2) {
    std::vector<Vector> v;
    for (int j = 0; j < n; ++j) v.push_back(real_unit());
    const auto s = pt::moment_pair_sum(v, params, space);
    sums = std::max(sums, rel(s.uncolored, s.colored));
  }
  rec.add("moment_sum_colored_vs_uncolored", sums, 1e-11, "n<=6");

  // At q = 0 with J = I the t-deformed noncrossing sum appears with alpha = (1-t)/t.
  double t_formula = 0.0;
  for (double t : {0.25, 0.5, 1.0, 2.0}) {
    for (int n = 2; n <= 8; n += 2) {
      std::vector<Vector> v;
      for (int j = 0; j < n; ++j) v.push_back(real_unit());
      const double lhs = pt::t_moment_sum(v, t);
      const double rhs = std::pow(t, n / 2) *
                         pt::moment_pair_sum(v, DeformParams{(1.0 - t) / t, 0.0}, InvolutiveSpace::identity(d)).colored;
      t_formula = std::max(t_formula, std::abs(lhs - rhs));
    }
  }
  rec.add("t_deformed_formula", t_formula, 1e-12, "t in {0.25,0.5,1,2}, n<=8");
}

// ---------------------------------------------------------------------------

void orthopoly_suite(Report& report, const RunConfig& config) {
  Recorder rec(report, "orthopoly", config);
  const double alpha = config.alpha;
  const double q = config.q;
  Rng rng(config.seed);

  // Pair factor identity at random points.
  double pair = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double a = random_uniform(rng, -0.99, 0.99);
    const double qq = random_uniform(rng, -0.99, 0.99);
    const double radius = 2.0 / std::sqrt(1.0 - qq);
    const double t = random_uniform(rng, -radius, radius);
    const int k = static_cast<int>(random_uniform(rng, 0.0, 6.0));
    const cplx b = std::sqrt(cplx(a, 0.0));
    const cplx product = op::g_factor(t, b, qq, k) * op::g_factor(t, -b, qq, k);
    const double real_form = op::pair_factor(t, a, qq, k);
    pair = std::max(pair, std::abs(product - real_form) / std::max(1.0, std::abs(real_form)));
  }
  rec.add("pair_factor_identity", pair, 1e-13, "200 random (t, a, q, k)");

  // Bernoulli limit q -> -1.
  {
    const double a = std::clamp(alpha, -0.5, 1.0);
    const auto limit = op::bernoulli_limit(a);
    const auto near = op::qmp_moments(a, -1.0 + 1e-6, 1.0, 6);
    double gap = 0.0;
    for (int k = 0; k <= 6; ++k) gap = std::max(gap, std::abs(near[static_cast<std::size_t>(k)] - limit.moment(k)));
    rec.add("bernoulli_limit", gap, 1e-5, "a=" + fmt(a) + ", q=-1+1e-6, k<=6");
  }

  // Meixner limit: the dilation that makes the recurrence converge.
  {
    const double g = 0.75;
    const int n_max = 6;
    double prev = std::numeric_limits<double>::infinity();
    double before = prev;
    double increase = 0.0;
    std::string note;
    for (double qq : {0.9, 0.99, 0.999}) {
      const op::MeixnerGap gap = op::meixner_limit_check(g, n_max, qq);
      increase = std::max(increase, gap.two_sqrt - prev);
      before = prev;
      prev = gap.two_sqrt;
      note += "q=" + fmt(qq) + ": 2sqrt " + fmt(gap.two_sqrt) + ", sqrt/2 " + fmt(gap.half_sqrt) + "; ";
    }
    rec.add("meixner_limit_decreasing", std::max(increase, 0.0), 0.0, note);
    // The gap is first order in 1-q, so a tenfold step in 1-q cuts it about tenfold.
    rec.add("meixner_limit_rate", prev / before, 0.15, "gap(0.999) / gap(0.99), lambda = 2 sqrt(1-q)");
  }

  if (!(alpha > -1.0 && alpha < 1.0)) {
    rec.skip("density_checks", "alpha >= 1 gives atoms at q = 0");
    return;
  }

  const op::DensitySpec spec{alpha, q};
  const double radius = spec.support_radius();
  const double tol = std::abs(q) <= 0.7 ? 1e-6 : 1e-4;

  double negative = 0.0;
  for (int i = 0; i < config.grid; ++i) {
    const double t = -radius + 2.0 * radius * (i + 1) / (config.grid + 1);
    negative = std::max(negative, -op::density(t, spec));
  }
  rec.add("density_nonnegative", std::max(negative, 0.0), 0.0, std::to_string(config.grid) + " grid points");

  const auto quad = op::quadrature_moments(spec, 8);
  const auto jac = op::qmp_moments(alpha, q, 1.0, 8);
  rec.add("density_mass", std::abs(quad[0] - 1.0), 1e-7);
  double moment_gap = 0.0;
  for (int k = 0; k <= 8; ++k) {
    moment_gap = std::max(moment_gap, rel(quad[static_cast<std::size_t>(k)], jac[static_cast<std::size_t>(k)]));
  }
  rec.add("density_moments_vs_jacobi", moment_gap, tol, "k<=8");

  const auto polys = op::qmp_polynomials(alpha, q, 1.0, 5);
  const auto jacobi = op::qmp_jacobi(alpha, q, 1.0, 5);
  double orth = 0.0;
  double norms = 0.0;
  double gamma_product = 1.0;
  for (int n = 0; n <= 5; ++n) {
    if (n > 0) gamma_product *= jacobi.gamma[static_cast<std::size_t>(n - 1)];
    for (int k = 0; k <= n; ++k) {
      const auto& pn = polys[static_cast<std::size_t>(n)];
      const auto& pk = polys[static_cast<std::size_t>(k)];
      const double v = op::integrate([&](double t) { return op::evaluate(pn, t) * op::evaluate(pk, t); }, spec);
      if (k == n) {
        norms = std::max(norms, rel(v, gamma_product));
      } else {
        orth = std::max(orth, std::abs(v));
      }
    }
  }
  rec.add("orthogonality", orth, 1e-6, "m != n <= 5");
  rec.add("norms_are_jacobi_products", norms, 1e-5, "n<=5");

  // Cauchy transform: continued fraction against quadrature, and Stieltjes inversion.
  {
    double cauchy = 0.0;
    for (cplx z : {cplx(0.3, 1.0), cplx(-1.1, 0.5), cplx(0.0, 2.0)}) {
      const cplx cf = op::qmp_cauchy_transform(z, alpha, q, 1.0, 400);
      const double re = op::integrate([&](double t) { return (1.0 / (z - t)).real(); }, spec);
      const double im = op::integrate([&](double t) { return (1.0 / (z - t)).imag(); }, spec);
      cauchy = std::max(cauchy, std::abs(cf - cplx(re, im)));
    }
    rec.add("cauchy_transform_vs_density", cauchy, 1e-8, "continued fraction depth 400");

    double inversion = 0.0;
    for (double frac : {-0.6, -0.2, 0.1, 0.5}) {
      const double t = frac * radius;
      inversion = std::max(inversion, std::abs(op::stieltjes_density(t, alpha, q, 1e-4, 4000) - op::density(t, spec)));
    }
    rec.add("stieltjes_inversion", inversion, 1e-3, "eta=1e-4, depth 4000");
  }
}

}  // namespace

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::string Report::to_json_lines() const {
  std::string out;
  for (const Check& c : checks) {
    out += text::json_object({{"suite", text::json_string(c.suite)},
                              {"name", text::json_string(c.name)},
                              {"residual", text::json_number(c.residual)},
                              {"bound", text::json_number(c.bound)},
                              {"passed", text::json_bool(c.passed)},
                              {"note", text::json_string(c.note)}});
    out += '\n';
  }
  return out;
}

std::string Report::to_csv() const {
  std::string out = text::csv_row({"suite", "name", "residual", "bound", "passed"}) + '\n';
  for (const Check& c : checks) {
    out += text::csv_row({c.suite, c.name, text::number(c.residual), text::number(c.bound), c.passed ? "1" : "0"});
    out += '\n';
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "group", "fock", "operators", "partitions", "orthopoly"};
  return names;
}

Report run_suite(const std::string& suite, const RunConfig& config) {
  config.validate();
  const std::vector<std::pair<std::string, std::function<void(Report&, const RunConfig&)>>> suites{
      {"group", group_suite},
      {"fock", fock_suite},
      {"operators", operators_suite},
      {"partitions", partitions_suite},
      {"orthopoly", orthopoly_suite}};
  Report report;
  bool found = false;
  for (const auto& [name, run] : suites) {
    if (suite == "all" || suite == name) {
      run(report, config);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
  return report;
}

}  // namespace aqfock::verify

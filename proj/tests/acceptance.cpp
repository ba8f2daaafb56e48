// Acceptance run: one pass/fail line per criterion. Exit status is nonzero
// when any criterion fails.

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "aqfock/coxeter_b.hpp"
#include "aqfock/operators.hpp"
#include "aqfock/orthopoly.hpp"
#include "aqfock/partitions.hpp"
#include "aqfock/qsymbols.hpp"
#include "aqfock/text_output.hpp"

using namespace aqfock;
namespace cb = aqfock::coxeter_b;
namespace pt = aqfock::partitions;
namespace op = aqfock::orthopoly;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

const std::vector<double> kGrid{-0.9, -0.5, 0.0, 0.5, 0.9};

InvolutiveSpace swap2() { return InvolutiveSpace::basis_swap(2, {{1, 2}}); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double max_entry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void for_grid(const std::function<void(double, double)>& f) {
  for (double a : kGrid) {
    for (double q : kGrid) f(a, q);
  }
}

Vector unit(Rng& rng, std::size_t d, bool real = false) {
  Vector v = random_vector(d, rng, real);
  return v / v.norm();
}

// ---------------------------------------------------------------------------

Outcome positivity() {
  double worst = 1e300;
  for_grid([&](double a, double q) {
    for (int n = 1; n <= 5; ++n) worst = std::min(worst, positivity_report(n, {a, q}, swap2()).min_eigenvalue);
  });
  return {worst > 1e-10, "min eigenvalue " + num(worst) + " over 25 (alpha,q), n<=5"};
}

Outcome factorization() {
  Rng rng(kDefaultSeed);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const DeformParams p{random_uniform(rng, -0.95, 0.95), random_uniform(rng, -0.95, 0.95)};
    for (int n = 1; n <= 4; ++n) {
      worst = std::max(worst, max_entry(p_operator_recursive(n, p, swap2()) - p_operator_direct(n, p, swap2())));
    }
  }
  return {worst <= 1e-12, "max entry gap " + num(worst) + ", 10 random (alpha,q), n<=4"};
}

Outcome annihilator_routes() {
  Rng rng(kDefaultSeed);
  double routes = 0.0;
  double adjoint = 0.0;
  for_grid([&](double a, double q) {
    const FockModel model(swap2(), {a, q});
    for (int m = 1; m <= 5; ++m) {
      const Vector x = random_vector(2, rng);
      routes = std::max(routes, ops::annihilator_route_residual(x, m, model, rng, 4));
      adjoint = std::max(adjoint, ops::adjoint_check(x, m, model, rng, 4, ops::AnnihilationRoute::ViaR));
      adjoint = std::max(adjoint, ops::adjoint_check(x, m, model, rng, 4, ops::AnnihilationRoute::ViaNumber));
    }
  });
  return {routes <= 1e-10 && adjoint <= 1e-10, "route gap " + num(routes) + ", adjoint residual " + num(adjoint)};
}

Outcome commutation() {
  Rng rng(kDefaultSeed);
  double worst = 0.0;
  for_grid([&](double a, double q) {
    const FockModel model(swap2(), {a, q});
    worst = std::max(worst, ops::commutator_residual(unit(rng, 2), unit(rng, 2), 5, model));
  });
  return {worst <= 1e-11, "operator residual " + num(worst) + " on levels 0..4"};
}

Outcome triple_moments() {
  Rng rng(kDefaultSeed);
  const auto space = swap2();
  const Vector x = (Vector::Unit(2, 0) + Vector::Unit(2, 1)) / std::sqrt(2.0);  // xbar = x
  double single = 0.0;
  double m4 = 0.0;
  double mixed = 0.0;
  for_grid([&](double a, double q) {
    const FockModel model(space, {a, q});
    const auto jac = op::qmp_moments(a, q, self_duality(x, space), 8);
    for (int k = 0; k <= 8; ++k) {
      const double o = ops::vacuum_moment_power(x, k, model).real();
      const double p = pt::moment_pair_sum(std::vector<Vector>(static_cast<std::size_t>(k), x), {a, q}, space).colored;
      const double j = jac[static_cast<std::size_t>(k)];
      single = std::max({single, std::abs(o - p), std::abs(o - j), std::abs(p - j)});
      if (k == 4) m4 = std::max(m4, std::abs(o - (1 + a) * (2 + a + q + a * q + a * q * q)));
    }
    for (int n = 1; n <= 6; ++n) {
      std::vector<Vector> v;
      for (int j = 0; j < n; ++j) v.push_back(unit(rng, 2, true));
      mixed = std::max(mixed, std::abs(ops::vacuum_moment(v, model).real() - pt::moment_pair_sum(v, {a, q}, space).colored));
    }
  });
  return {single <= 1e-10 && m4 <= 1e-10 && mixed <= 1e-10,
          "k<=8 three-route gap " + num(single) + ", m4 closed form " + num(m4) + ", mixed words n<=6 " + num(mixed)};
}

Outcome wick() {
  Rng rng(kDefaultSeed);
  const auto space = swap2();
  double worst = 0.0;
  for_grid([&](double a, double q) {
    const FockModel model(space, {a, q});
    for (int tuple = 0; tuple < 5; ++tuple) {
      for (int n = 1; n <= 5; ++n) {
        std::vector<Vector> v;
        for (int j = 0; j < n; ++j) v.push_back(random_vector(2, rng, true));
        for (const auto& eps : all_epsilon_patterns(n)) {
          worst = std::max(worst, max_abs_diff(pt::wick_vector(eps, v, {a, q}, space), ops::apply_word(eps, v, model)));
        }
      }
    }
  });

  using Q = boost::multiprecision::cpp_rational;
  long long exact_mismatch = 0;
  for (const auto& [a, q] : std::vector<std::pair<Q, Q>>{{Q(1, 2), Q(-1, 3)}, {Q(-7, 9), Q(4, 5)}, {Q(3, 1), Q(0)}}) {
    pt::RealData<Q> data;
    data.alpha = a;
    data.q = q;
    data.involution = {{Q(0), Q(1)}, {Q(1), Q(0)}};
    data.x = {{Q(1), Q(2)}, {Q(-1, 3), Q(1)}, {Q(3, 2), Q(0)}, {Q(1, 4), Q(-2)}, {Q(5), Q(1, 6)}};
    for (int n = 1; n <= 5; ++n) {
      pt::RealData<Q> sub = data;
      sub.x.resize(static_cast<std::size_t>(n));
      for (const auto& eps : all_epsilon_patterns(n)) {
        if (pt::wick_colored(eps, sub).levels != pt::wick_uncolored(eps, sub).levels) ++exact_mismatch;
      }
    }
  }
  return {worst <= 1e-11 && exact_mismatch == 0,
          "operator gap " + num(worst) + " over all eps, n<=5; exact colored/uncolored mismatches " +
              std::to_string(exact_mismatch)};
}

Outcome norm_theorem() {
  std::string detail;
  bool ok = true;

  // Case 1 at m = 6, d = 2.
  double case1 = 0.0;
  const auto signs = InvolutiveSpace::diagonal_signs({1, -1});
  for (const auto& [a, q, x] : std::vector<std::tuple<double, double, Vector>>{
           {0.5, -0.5, Vector::Unit(2, 0)}, {0.9, 0.0, Vector::Unit(2, 0)}, {-0.5, -0.3, Vector::Unit(2, 1)}}) {
    const FockModel model(signs, {a, q});
    const ops::NormBounds nb = ops::norm_bounds(x, {a, q}, signs);
    if (nb.which != ops::NormCase::One) ok = false;
    case1 = std::max(case1, std::abs(ops::creation_norm(x, 6, model) - nb.upper));
  }
  ok = ok && case1 <= 1e-8;
  detail += "case1 gap " + num(case1);

  // Case 3 at m = 40, q = 0.5, d = 1.
  double case3 = 0.0;
  const auto id1 = InvolutiveSpace::identity(1);
  const Vector one = Vector::Ones(1);
  for (double a : {-0.5, 0.0, 0.3, 0.5}) {
    const FockModel model(id1, {a, 0.5});
    case3 = std::max(case3, std::abs(ops::creation_norm(one, 40, model) - std::sqrt(2.0)));
  }
  ok = ok && case3 <= 1e-4;
  detail += ", case3 gap at m=40 " + num(case3);

  // Cases 2, 4, 5: the upper bound and the tensor-power lower bound at every
  // m <= 12 (d = 1) and m <= 6 (d = 2). The theorem's lower bound concerns the
  // full norm, which truncations only approach from below, so its deficit is
  // required to shrink between m = 12 and m = 24 on the d = 1 grids.
  double upper = 0.0;
  double below_tensor = 0.0;
  double deficit12 = 0.0;
  double deficit24 = 0.0;
  int growing = 0;
  int checked = 0;
  auto sweep = [&](const InvolutiveSpace& space, const Vector& x, int m_max, bool deep) {
    for_grid([&](double a, double q) {
      const ops::NormBounds nb = ops::norm_bounds(x, {a, q}, space);
      if (nb.exact) return;
      const FockModel model(space, {a, q});
      double v = 0.0;
      for (int m = 1; m <= m_max; ++m) {
        v = ops::creation_norm(x, m, model);
        upper = std::max(upper, v - nb.upper);
        below_tensor = std::max(below_tensor, ops::creation_lower_bound(x, m, {a, q}, space) - v);
        ++checked;
      }
      if (!deep) return;
      const double d12 = std::max(nb.lower - v, 0.0);
      const double d24 = std::max(nb.lower - ops::creation_norm(x, 24, model), 0.0);
      deficit12 = std::max(deficit12, d12);
      deficit24 = std::max(deficit24, d24);
      if (d12 > 1e-10 && !(d24 < d12)) ++growing;
    });
  };
  sweep(id1, one, 12, true);
  sweep(InvolutiveSpace::diagonal_signs({-1}), one, 12, true);
  const Vector x2 = Vector::Unit(2, 0);
  sweep(signs, x2, 6, false);
  sweep(swap2(), (Vector::Unit(2, 0) + Vector::Unit(2, 1)) / std::sqrt(2.0), 6, false);
  ok = ok && upper <= 1e-10 && below_tensor <= 1e-10 && growing == 0;
  detail += ", cases 2/4/5 excess over upper " + num(std::max(upper, 0.0)) + ", below tensor bound " +
            num(std::max(below_tensor, 0.0)) + " (" + std::to_string(checked) +
            " truncations); theorem lower bound deficit " + num(deficit12) + " at m=12, " + num(deficit24) +
            " at m=24, not shrinking at " + std::to_string(growing);
  return {ok, detail};
}

Outcome lemma() {
  Rng rng(kDefaultSeed);
  double tpn = 0.0;
  int violations = 0;
  int violations_neg_q = 0;
  int abs_form_violations = 0;
  for_grid([&](double a, double q) {
    const DeformParams p{a, q};
    const FockModel model(swap2(), p);
    const Vector x = random_vector(2, rng);
    for (int n = 1; n <= 5; ++n) {
      const FockVector f = FockVector::homogeneous(2, n, tensor_power(x, n));
      const double direct = inner_aq(f, f, p, swap2()).real();
      tpn = std::max(tpn, std::abs(tensor_power_norm(x, n, p, swap2()) - direct) / direct);
      const double norm = Eigen::JacobiSVD<Matrix>(model.r(n)).singularValues()(0);
      const double factor = 1.0 + std::abs(a) * std::pow(std::abs(q), n - 1);
      if (norm > factor * op::q_number(n, q) + 1e-12) {
        ++violations;
        if (q < 0) ++violations_neg_q;
      }
      if (norm > factor * op::q_number(n, std::abs(q)) + 1e-12) ++abs_form_violations;
    }
  });
  return {tpn <= 1e-11 && violations == 0,
          "tensor power norm rel gap " + num(tpn) + "; R norm bound (1+|a||q|^{n-1})[n]_q violated at " +
              std::to_string(violations) + " of 125 points (" + std::to_string(violations_neg_q) +
              " with q<0); with [n]_{|q|}: " + std::to_string(abs_form_violations)};
}

Outcome measure() {
  double moments = 0.0;
  double moments_95 = 0.0;
  double mass = 0.0;
  double orth = 0.0;
  for (double a : {-0.4, 0.0, 0.7}) {
    for (double q : {-0.7, 0.0, 0.5, 0.7, 0.95}) {
      const op::DensitySpec spec{a, q};
      const auto quad = op::quadrature_moments(spec, 8);
      const auto jac = op::qmp_moments(a, q, 1.0, 8);
      for (int k = 0; k <= 8; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double gap = std::abs(quad[i] - jac[i]) / std::max(1.0, std::abs(jac[i]));
        (q == 0.95 ? moments_95 : moments) = std::max(q == 0.95 ? moments_95 : moments, gap);
      }
      mass = std::max(mass, std::abs(quad[0] - 1.0));
      const auto polys = op::qmp_polynomials(a, q, 1.0, 5);
      for (int m = 0; m <= 5; ++m) {
        for (int n = m + 1; n <= 5; ++n) {
          const auto& pm = polys[static_cast<std::size_t>(m)];
          const auto& pn = polys[static_cast<std::size_t>(n)];
          orth = std::max(orth, std::abs(op::integrate([&](double t) { return op::evaluate(pm, t) * op::evaluate(pn, t); }, spec)));
        }
      }
    }
  }
  return {moments <= 1e-6 && moments_95 <= 1e-4 && mass <= 1e-7 && orth <= 1e-6,
          "moment gap " + num(moments) + " (|q|<=0.7), " + num(moments_95) + " (q=0.95); mass " + num(mass) +
              "; orthogonality " + num(orth)};
}

Outcome special_cases() {
  const FockModel model(InvolutiveSpace::identity(1), {0.0, 0.0});
  const Vector one = Vector::Ones(1);
  double catalan = 0.0;
  const std::vector<double> expected{1, 2, 5, 14};
  for (int j = 1; j <= 4; ++j) {
    const int k = 2 * j;
    const double e = expected[static_cast<std::size_t>(j - 1)];
    catalan = std::max({catalan, std::abs(ops::vacuum_moment_power(one, k, model).real() - e),
                        std::abs(pt::moment_pair_sum(std::vector<Vector>(static_cast<std::size_t>(k), one), {0, 0},
                                                     InvolutiveSpace::identity(1)).colored - e),
                        std::abs(op::qmp_moments(0, 0, 1, 8)[static_cast<std::size_t>(k)] - e)});
  }

  Rng rng(kDefaultSeed);
  double t_formula = 0.0;
  for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (int n = 2; n <= 8; n += 2) {
      std::vector<Vector> v;
      for (int j = 0; j < n; ++j) v.push_back(random_vector(2, rng, true));
      const double rhs = std::pow(t, n / 2) *
                         pt::moment_pair_sum(v, {(1 - t) / t, 0.0}, InvolutiveSpace::identity(2)).colored;
      t_formula = std::max(t_formula, std::abs(pt::t_moment_sum(v, t) - rhs));
    }
  }

  double bernoulli = 0.0;
  for (double a : {-0.5, 0.0, 0.6}) {
    const auto limit = op::bernoulli_limit(a);
    const auto near = op::qmp_moments(a, -1.0 + 1e-6, 1.0, 6);
    for (int k = 0; k <= 6; ++k) bernoulli = std::max(bernoulli, std::abs(near[static_cast<std::size_t>(k)] - limit.moment(k)));
  }
  return {catalan <= 1e-12 && t_formula <= 1e-12 && bernoulli <= 1e-5,
          "Catalan gap " + num(catalan) + ", t-formula gap " + num(t_formula) + ", Bernoulli gap " + num(bernoulli)};
}

Outcome traciality() {
  double printed = 0.0;
  double witness = 0.0;
  double at_zero = 0.0;
  for_grid([&](double a, double q) {
    for (int s : {1, -1}) {
      for (int t : {1, -1}) {
        const ops::TraceDefect td = ops::trace_defect({a, q}, s, t);
        printed = std::max(printed, std::abs(td.measured - td.printed_formula));
        witness = std::max(witness, std::abs(td.witness - td.unit_formula));
        if (a == 0.0) at_zero = std::max({at_zero, std::abs(td.measured), std::abs(td.witness)});
      }
    }
  });
  return {printed <= 1e-12 && at_zero <= 1e-12,
          "measured vs 4ta(1-q^2)(1+sa) gap " + num(printed) + "; zero at alpha=0 " + num(at_zero) +
              "; witness x1=x2=e1, x3=x4=e2 vs ta(1-q^2)(1+sa) gap " + num(witness)};
}

Outcome group_layer() {
  long long failures = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto e = cb::SignedPermutation::identity(n);
    auto power = [](cb::SignedPermutation a, int k) {
      cb::SignedPermutation p = cb::SignedPermutation::identity(a.rank());
      for (int j = 0; j < k; ++j) p = p * a;
      return p;
    };
    for (int i = 0; i < n; ++i) {
      if (power(cb::generator(n, i), 2) != e) ++failures;
      for (int j = i + 1; j < n; ++j) {
        const int order = (i == 0 && j == 1) ? 4 : (j == i + 1 ? 3 : 2);
        if (power(cb::generator(n, i) * cb::generator(n, j), order) != e) ++failures;
      }
    }
  }
  long long words = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& s : cb::enumerate_group(n)) {
      for (const auto& w : cb::all_reduced_words(s)) {
        if (w.stats() != cb::length_stats(s)) ++words;
      }
    }
  }
  long long cosets = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto reps = cb::stumbo_reps(n);
    std::vector<std::size_t> hits(reps.size(), 0);
    for (const auto& s : cb::enumerate_group(n)) {
      const auto dec = cb::coset_decompose(s);
      const auto k = static_cast<std::size_t>(dec.index);
      ++hits[k];
      if (cb::embed(dec.sub, n) * cb::evaluate(reps[k], n) != s) ++cosets;
      const auto ls = cb::length_stats(s);
      const auto ss = cb::length_stats(dec.sub);
      if (ls.l1 != ss.l1 + reps[k].stats().l1 || ls.l2 != ss.l2 + reps[k].stats().l2) ++cosets;
    }
    for (std::size_t h : hits) {
      if (h != cb::group_order(n - 1)) ++cosets;
    }
  }
  return {failures == 0 && words == 0 && cosets == 0,
          "braid failures " + std::to_string(failures) + ", reduced-word disagreements " + std::to_string(words) +
              ", coset failures " + std::to_string(cosets)};
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double time_limit = 0.0;  // seconds; 0 for none
  };
  const std::vector<Criterion> criteria{
      {"positivity of P", positivity, 30.0},
      {"factorization P = (P (x) I) R", factorization, 10.0},
      {"two-route annihilator and adjointness", annihilator_routes},
      {"commutation relation", commutation},
      {"triple moment agreement", triple_moments},
      {"Wick formula", wick},
      {"creation norm theorem", norm_theorem},
      {"tensor power norm and R bound", lemma},
      {"measure consistency", measure, 60.0},
      {"special cases", special_cases},
      {"traciality defect formula", traciality},
      {"group layer", group_layer},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].time_limit > 0.0 && seconds > criteria[i].time_limit) {
      outcome.passed = false;
      outcome.detail += "; over the " + num(criteria[i].time_limit) + "s budget";
    }
    if (!outcome.passed) ++failed;
    std::printf("criterion %2zu: %s  %s: %s [%.2fs]\n", i + 1, outcome.passed ? "PASS" : "FAIL",
                criteria[i].name.c_str(), outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

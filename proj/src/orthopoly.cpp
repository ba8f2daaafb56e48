#include "aqfock/orthopoly.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aqfock/errors.hpp"

namespace aqfock::orthopoly {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

void require_open_unit(double q, const char* where) {
  if (!(std::abs(q) < 1.0)) throw std::invalid_argument(std::string(where) + ": requires |q| < 1");
}

}  // namespace

// ---------------------------------------------------------------------------
// q-symbols

double q_number(int n, double q) {
  if (n < 0) throw std::invalid_argument("q_number: negative n");
  double sum = 0.0;
  double power = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= q;
  }
  return sum;
}

double q_number_real(double x, double q) {
  if (q == 1.0) return x;
  if (!(q > 0.0)) throw std::invalid_argument("q_number_real: requires q > 0 for non-integer exponents");
  return -std::expm1(x * std::log(q)) / (1.0 - q);
}

double q_factorial(int n, double q) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative n");
  double out = 1.0;
  for (int k = 1; k <= n; ++k) out *= q_number(k, q);
  return out;
}

double q_pochhammer(double s, double q, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative n");
  double out = 1.0;
  double power = 1.0;
  for (int k = 0; k < n; ++k) {
    out *= 1.0 - s * power;
    power *= q;
  }
  return out;
}

double q_pochhammer_inf(double s, double q) {
  require_open_unit(q, "q_pochhammer_inf");
  double out = 1.0;
  double term = s;
  while (std::abs(term) >= 1e-16) {
    out *= 1.0 - term;
    term *= q;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials and Jacobi parameters

double evaluate(const Polynomial& p, double t) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

JacobiParams qmp_jacobi(double alpha, double q, double c, int count) {
  if (count < 0) throw std::invalid_argument("qmp_jacobi: negative count");
  JacobiParams j;
  j.c = c;
  for (int n = 1; n <= count; ++n) j.gamma.push_back(q_number(n, q) * (1.0 + alpha * c * ipow(q, n - 1)));
  j.beta.assign(static_cast<std::size_t>(count) + 1, 0.0);
  return j;
}

std::vector<Polynomial> polynomials_from_jacobi(const JacobiParams& jacobi, int n_max) {
  if (n_max < 0) throw std::invalid_argument("polynomials_from_jacobi: negative degree");
  if (n_max >= 2 && static_cast<int>(jacobi.gamma.size()) < n_max - 1) {
    throw std::invalid_argument("polynomials_from_jacobi: not enough Jacobi parameters");
  }
  auto beta = [&jacobi](int n) {
    return static_cast<std::size_t>(n) < jacobi.beta.size() ? jacobi.beta[static_cast<std::size_t>(n)] : 0.0;
  };
  std::vector<Polynomial> p{Polynomial{1.0}};
  for (int n = 0; n < n_max; ++n) {
    Polynomial next(static_cast<std::size_t>(n) + 2, 0.0);
    const Polynomial& cur = p[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];
      next[i] -= beta(n) * cur[i];
    }
    if (n >= 1) {
      const double g = jacobi.gamma[static_cast<std::size_t>(n - 1)];
      const Polynomial& prev = p[static_cast<std::size_t>(n - 1)];
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= g * prev[i];
    }
    p.push_back(std::move(next));
  }
  return p;
}

std::vector<Polynomial> qmp_polynomials(double alpha, double q, double c, int n_max) {
  return polynomials_from_jacobi(qmp_jacobi(alpha, q, c, std::max(n_max, 1)), n_max);
}

std::vector<double> moments_from_jacobi(const JacobiParams& jacobi, int k_max) {
  if (k_max < 0 || k_max > kMomentCap) {
    throw std::invalid_argument("moments_from_jacobi: order must lie in [0, " + std::to_string(kMomentCap) + "]");
  }
  const int needed = k_max / 2;
  if (static_cast<int>(jacobi.gamma.size()) < needed) {
    throw std::invalid_argument("moments_from_jacobi: not enough Jacobi parameters");
  }
  for (int n = 0; n < needed; ++n) {
    if (jacobi.gamma[static_cast<std::size_t>(n)] < 0.0) {
      throw std::invalid_argument("moments_from_jacobi: gamma_" + std::to_string(n) +
                                  " is negative (inadmissible parameters)");
    }
  }
  // v_k = T^k e_0 on a chain of needed + 2 sites; m_k = v_k[0].
  const std::size_t size = static_cast<std::size_t>(needed) + 2;
  std::vector<double> offdiag(size - 1, 0.0);
  for (std::size_t n = 0; n < offdiag.size() && n < jacobi.gamma.size(); ++n) {
    offdiag[n] = std::sqrt(std::max(jacobi.gamma[n], 0.0));
  }
  auto beta = [&jacobi](std::size_t n) { return n < jacobi.beta.size() ? jacobi.beta[n] : 0.0; };
  std::vector<double> v(size, 0.0);
  v[0] = 1.0;
  std::vector<double> moments{1.0};
  for (int k = 1; k <= k_max; ++k) {
    std::vector<double> w(size, 0.0);
    for (std::size_t i = 0; i < size; ++i) {
      w[i] += beta(i) * v[i];
      if (i + 1 < size) w[i] += offdiag[i] * v[i + 1];
      if (i > 0) w[i] += offdiag[i - 1] * v[i - 1];
    }
    v = std::move(w);
    moments.push_back(v[0]);
  }
  return moments;
}

std::vector<double> qmp_moments(double alpha, double q, double c, int k_max) {
  return moments_from_jacobi(qmp_jacobi(alpha, q, c, k_max / 2 + 1), k_max);
}

// ---------------------------------------------------------------------------
// Cauchy transform

cplx cauchy_transform(cplx z, const JacobiParams& jacobi, double radius, double gamma_tail) {
  if (z.imag() == 0.0 && std::abs(z.real()) <= radius) {
    throw DomainError("cauchy_transform: real z = " + std::to_string(z.real()) +
                      " lies on the support; the continued fraction is not determined there");
  }
  cplx tail = 0.0;
  if (gamma_tail > 0.0) {
    // Constant chain: G = 1/(z - g G), the root that decays like 1/z.
    const cplx s = std::sqrt(z * z - 4.0 * gamma_tail);
    const cplx w1 = (z - s) / (2.0 * gamma_tail);
    const cplx w2 = (z + s) / (2.0 * gamma_tail);
    tail = std::abs(w1) <= std::abs(w2) ? w1 : w2;
  }
  auto beta = [&jacobi](std::size_t n) { return n < jacobi.beta.size() ? jacobi.beta[n] : 0.0; };
  // G_n = 1/(z - beta_n - gamma_n G_{n+1}); G_depth is the tail (or 1/(z - beta_depth)).
  const std::size_t depth = jacobi.gamma.size();
  cplx value = gamma_tail > 0.0 ? tail : 1.0 / (z - beta(depth));
  for (std::size_t n = depth; n-- > 0;) value = 1.0 / (z - beta(n) - jacobi.gamma[n] * value);
  return value;
}

cplx qmp_cauchy_transform(cplx z, double alpha, double q, double c, int depth, bool terminate) {
  require_open_unit(q, "qmp_cauchy_transform");
  if (depth < 1) throw std::invalid_argument("qmp_cauchy_transform: depth must be >= 1");
  const JacobiParams j = qmp_jacobi(alpha, q, c, depth);
  return cauchy_transform(z, j, 2.0 / std::sqrt(1.0 - q), terminate ? 1.0 / (1.0 - q) : 0.0);
}

double stieltjes_density(double t, double alpha, double q, double eta, int depth, double c) {
  if (!(eta > 0.0)) throw std::invalid_argument("stieltjes_density: eta must be positive");
  return -qmp_cauchy_transform(cplx(t, eta), alpha, q, c, depth, true).imag() / kPi;
}

// ---------------------------------------------------------------------------
// Density

int product_terms(double q) {
  require_open_unit(q, "product_terms");
  if (q == 0.0) return 1;
  // Every factor differs from 1 by at most about 6 |q|^k on the support.
  const double k = std::log(6e17) / -std::log(std::abs(q));
  return std::max(1, static_cast<int>(std::ceil(k)));
}

double DensitySpec::support_radius() const { return 2.0 / std::sqrt(1.0 - q); }

int DensitySpec::resolved_terms() const { return terms > 0 ? terms : product_terms(q); }

cplx g_factor(double t, cplx b, double q, int k) {
  const double qk = ipow(q, k);
  return 1.0 - b * t * std::sqrt(1.0 - q) * qk + b * b * qk * qk;
}

double pair_factor(double t, double b2, double q, int k) {
  const double q2k = ipow(q, 2 * k);
  const double a = 1.0 + b2 * q2k;
  return a * a - b2 * t * t * (1.0 - q) * q2k;
}

double density(double t, const DensitySpec& spec) {
  const double q = spec.q;
  const double alpha = spec.alpha;
  require_open_unit(q, "density");
  if (!(alpha > -1.0)) throw std::invalid_argument("density: requires alpha > -1");
  const double radius = spec.support_radius();
  if (!(std::abs(t) < radius)) return 0.0;

  const int terms = spec.resolved_terms();
  // The k = 0 numerator pair for b = +-1 is (1-q)(R^2 - t^2); it cancels the
  // inverse square root and leaves (1-q) sqrt(R^2 - t^2).
  double value = q_pochhammer(q, q, terms) * q_pochhammer(-alpha, q, terms) * (1.0 - q) *
                 std::sqrt(radius * radius - t * t) / (2.0 * kPi);
  for (int k = 0; k < terms; ++k) {
    const double denominator = pair_factor(t, alpha, q, k);
    if (!(denominator > 0.0)) {
      throw DomainError("density: denominator factor k = " + std::to_string(k) + " is not positive at t = " +
                        std::to_string(t));
    }
    double numerator = pair_factor(t, q, q, k);
    if (k >= 1) numerator *= pair_factor(t, 1.0, q, k);
    value *= numerator / denominator;
  }
  return value;
}

double integrate(const std::function<double(double)>& f, const DensitySpec& spec, double tolerance) {
  const double radius = spec.support_radius();
  const DensitySpec resolved{spec.alpha, spec.q, spec.resolved_terms()};
  auto integrand = [&](double theta) {
    const double t = radius * std::cos(theta);
    return f(t) * density(t, resolved) * radius * std::sin(theta);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, kPi, 15, tolerance);
}

std::vector<double> quadrature_moments(const DensitySpec& spec, int k_max) {
  std::vector<double> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(integrate([k](double t) { return ipow(t, k); }, spec));
  return out;
}

// ---------------------------------------------------------------------------
// Limits

double AtomicMeasure::moment(int k) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) sum += weights[i] * ipow(atoms[i], k);
  return sum;
}

AtomicMeasure bernoulli_limit(double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("bernoulli_limit: requires alpha > -1");
  const double a = std::sqrt(1.0 + alpha);
  return AtomicMeasure{{-a, a}, {0.5, 0.5}};
}

double meixner_lambda(double q, MeixnerScaling scaling) {
  const double root = std::sqrt(1.0 - q);
  return scaling == MeixnerScaling::TwoSqrt ? 2.0 * root : root / 2.0;
}

std::vector<Polynomial> meixner_limit_polys(double gamma_param, double q, int n_max, MeixnerScaling scaling) {
  if (!(gamma_param > 0.0)) throw std::invalid_argument("meixner_limit_polys: gamma must be positive");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("meixner_limit_polys: requires q in (0, 1)");
  const double alpha = -std::pow(q, 2.0 * gamma_param);
  const double lambda = meixner_lambda(q, scaling);
  std::vector<Polynomial> polys = qmp_polynomials(alpha, q, 1.0, n_max);
  for (std::size_t n = 0; n < polys.size(); ++n) {
    for (std::size_t j = 0; j < polys[n].size(); ++j) {
      polys[n][j] *= std::pow(lambda, static_cast<double>(j) - static_cast<double>(n));
    }
  }
  return polys;
}

std::vector<Polynomial> meixner_polys(double gamma_param, int n_max) {
  JacobiParams j;
  for (int n = 1; n <= std::max(n_max, 1); ++n) j.gamma.push_back(0.25 * n * (n + 2.0 * gamma_param - 1.0));
  return polynomials_from_jacobi(j, n_max);
}

MeixnerGap meixner_limit_check(double gamma_param, int n_max, double q) {
  const std::vector<Polynomial> limit = meixner_polys(gamma_param, n_max);
  auto gap = [&](MeixnerScaling scaling) {
    const std::vector<Polynomial> qs = meixner_limit_polys(gamma_param, q, n_max, scaling);
    double worst = 0.0;
    for (std::size_t n = 0; n < limit.size(); ++n) {
      for (std::size_t j = 0; j < limit[n].size(); ++j) worst = std::max(worst, std::abs(qs[n][j] - limit[n][j]));
    }
    return worst;
  };
  return MeixnerGap{q, gap(MeixnerScaling::TwoSqrt), gap(MeixnerScaling::HalfSqrt)};
}

}  // namespace aqfock::orthopoly

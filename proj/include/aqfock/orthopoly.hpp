#pragma once

// q-Meixner-Pollaczek polynomials and their orthogonality measure: Jacobi
// parameters, moments, the continued-fraction Cauchy transform, the
// closed-form density and its degenerate limits.

#include <functional>
#include <vector>

#include "aqfock/numeric.hpp"
#include "aqfock/qsymbols.hpp"

namespace aqfock::orthopoly {

/// Coefficients c_0, ..., c_n of c_0 + c_1 t + ... + c_n t^n.
using Polynomial = std::vector<double>;

double evaluate(const Polynomial& p, double t);

/// gamma_0, gamma_1, ... with beta_n = 0 throughout.
struct JacobiParams {
  std::vector<double> gamma;
  std::vector<double> beta;  // all zero; kept so the recurrence reads in full
  double c = 1.0;
};

/// gamma_{n-1} = [n]_q (1 + alpha c q^{n-1}), n = 1..count.
JacobiParams qmp_jacobi(double alpha, double q, double c, int count);

/// Monic P_0..P_N from t P_n = P_{n+1} + beta_n P_n + gamma_{n-1} P_{n-1}.
std::vector<Polynomial> polynomials_from_jacobi(const JacobiParams& jacobi, int n_max);

/// P_0^{(alpha,q)}, ..., P_N^{(alpha,q)} with alpha replaced by alpha c.
std::vector<Polynomial> qmp_polynomials(double alpha, double q, double c, int n_max);

inline constexpr int kMomentCap = 64;

/// m_0..m_K as <e_0, T^k e_0> for the tridiagonal Jacobi matrix T. Needs
/// K/2 gammas; throws std::invalid_argument on a negative gamma among them.
std::vector<double> moments_from_jacobi(const JacobiParams& jacobi, int k_max);

/// Convenience: moments of mu_{alpha c, q}.
std::vector<double> qmp_moments(double alpha, double q, double c, int k_max);

/// 1 / (z - gamma_0 / (z - gamma_1 / ...)) evaluated bottom-up over
/// jacobi.gamma. With gamma_tail > 0 the last level is closed by the Cauchy
/// transform of the semicircle with constant parameter gamma_tail instead of
/// by zero. Throws DomainError for real z inside [-radius, radius].
cplx cauchy_transform(cplx z, const JacobiParams& jacobi, double radius, double gamma_tail = 0.0);

/// Cauchy transform of mu_{alpha c, q} at the given depth, with the
/// 1/(1-q) square-root terminator when `terminate` is set.
cplx qmp_cauchy_transform(cplx z, double alpha, double q, double c, int depth, bool terminate = true);

/// -Im G(t + i eta) / pi.
double stieltjes_density(double t, double alpha, double q, double eta, int depth, double c = 1.0);

/// Number of factors kept in the infinite products for a given q.
int product_terms(double q);

struct DensitySpec {
  double alpha = 0.0;
  double q = 0.0;
  int terms = 0;  // product truncation K; 0 selects product_terms(q)

  double support_radius() const;
  int resolved_terms() const;
};

/// g(t, b; q) factor k: 1 - b t sqrt(1-q) q^k + b^2 q^{2k}, for complex b.
cplx g_factor(double t, cplx b, double q, int k);

/// g-factor of b times g-factor of -b as a real expression in b^2:
/// (1 + b^2 q^{2k})^2 - b^2 t^2 (1-q) q^{2k}.
double pair_factor(double t, double b2, double q, int k);

/// Density of mu_{alpha,q} at t; zero outside the open support. Throws
/// DomainError if a denominator factor is not positive on the support. For
/// alpha > 1 the law also has atoms and this is only its continuous part.
double density(double t, const DensitySpec& spec);

/// Integral of f(t) against mu_{alpha,q}, by Gauss-Kronrod in t = R cos(theta).
double integrate(const std::function<double(double)>& f, const DensitySpec& spec, double tolerance = 1e-13);

std::vector<double> quadrature_moments(const DensitySpec& spec, int k_max);

/// Two-point law (delta_a + delta_{-a})/2, a = sqrt(1 + alpha).
struct AtomicMeasure {
  std::vector<double> atoms;
  std::vector<double> weights;

  double moment(int k) const;
};

AtomicMeasure bernoulli_limit(double alpha);

/// The two dilations compared in the q -> 1 Meixner limit.
enum class MeixnerScaling { TwoSqrt, HalfSqrt };  // lambda = 2 sqrt(1-q) or sqrt(1-q)/2

double meixner_lambda(double q, MeixnerScaling scaling);

/// Q_n^{(g,q)}(t) = P_n^{(alpha,q)}(lambda t) / lambda^n with alpha = -q^{2g}.
std::vector<Polynomial> meixner_limit_polys(double gamma_param, double q, int n_max,
                                            MeixnerScaling scaling = MeixnerScaling::TwoSqrt);

/// Q_n^{(g)} from t Q_n = Q_{n+1} + n (n + 2g - 1) / 4 Q_{n-1}.
std::vector<Polynomial> meixner_polys(double gamma_param, int n_max);

struct MeixnerGap {
  double q = 0.0;
  double two_sqrt = 0.0;   // max coefficient gap, lambda = 2 sqrt(1-q)
  double half_sqrt = 0.0;  // max coefficient gap, lambda = sqrt(1-q)/2
};

MeixnerGap meixner_limit_check(double gamma_param, int n_max, double q);

}  // namespace aqfock::orthopoly

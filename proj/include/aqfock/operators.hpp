#pragma once

// Creation, annihilation and Gaussian operators of type B on the truncated
// Fock space, with the checks that tie them together.

#include <functional>
#include <optional>
#include <vector>

#include "aqfock/epsilon.hpp"
#include "aqfock/fock_core.hpp"
#include "aqfock/random.hpp"

namespace aqfock::ops {

enum class OperatorKind { Create, Annihilate, Gauss, Number, Custom };

/// Which formula realizes B(x): r(x) R^(n), or r_q(x) + alpha l_q(xbar) q^{N-1}.
enum class AnnihilationRoute { ViaR, ViaNumber };

/// An operator on FockVectors. Create raises the top degree by one,
/// annihilate lowers it by one, gauss raises it by one.
class FockOperator {
 public:
  FockOperator(OperatorKind kind, std::optional<Vector> x, std::function<FockVector(const FockVector&)> action)
      : kind_(kind), x_(std::move(x)), action_(std::move(action)) {}

  OperatorKind kind() const { return kind_; }
  const std::optional<Vector>& vector() const { return x_; }

  FockVector operator()(const FockVector& f) const { return action_(f); }

 private:
  OperatorKind kind_;
  std::optional<Vector> x_;
  std::function<FockVector(const FockVector&)> action_;
};

// Level-wise application --------------------------------------------------

/// B*(x) f = f (x) x, levelwise; B*(x) Omega = x.
FockVector apply_create(const Vector& x, const FockVector& f);

/// Free right annihilator r(x) on one level: contracts the last leg with x.
Vector free_annihilate(const Vector& x, const Vector& level_n, std::size_t d);

FockVector apply_annihilate_via_r(const Vector& x, const FockModel& model, const FockVector& f);
FockVector apply_annihilate_via_number(const Vector& x, const FockModel& model, const FockVector& f);
FockVector apply_annihilate(const Vector& x, const FockModel& model, const FockVector& f,
                            AnnihilationRoute route = AnnihilationRoute::ViaR);

/// N f = n f on level n.
FockVector apply_number(const FockVector& f);

FockOperator create(const Vector& x);
/// `model` must outlive the returned operator.
FockOperator annihilate_via_r(const Vector& x, const FockModel& model);
FockOperator annihilate_via_number(const Vector& x, const FockModel& model);
FockOperator gaussian(const Vector& x, const FockModel& model, AnnihilationRoute route = AnnihilationRoute::ViaR);
FockOperator number_operator();

// Level blocks --------------------------------------------------------------

/// B*(x): H^{(x)n} -> H^{(x)(n+1)}, the d^{n+1} x d^n matrix I (x) x.
Matrix create_block(const Vector& x, int n);

/// B(x): H^{(x)n} -> H^{(x)(n-1)} for n >= 1.
Matrix annihilate_block(const Vector& x, int n, const FockModel& model,
                        AnnihilationRoute route = AnnihilationRoute::ViaR);

/// Block matrix over levels 0..m; level boundaries at `offsets`.
struct TruncatedMatrix {
  int m = 0;
  std::size_t d = 0;
  std::vector<Eigen::Index> offsets;  // size m + 2; level n occupies [offsets[n], offsets[n+1])
  Matrix matrix;

  Eigen::Index size() const { return offsets.back(); }
};

TruncatedMatrix creation_matrix(const Vector& x, int m, std::size_t d);
TruncatedMatrix annihilation_matrix(const Vector& x, int m, const FockModel& model,
                                    AnnihilationRoute route = AnnihilationRoute::ViaR);
TruncatedMatrix gaussian_matrix(const Vector& x, int m, const FockModel& model,
                                AnnihilationRoute route = AnnihilationRoute::ViaR);
/// Block-diagonal P = (+)_n P^(n), the Gram matrix of <.,.>_{alpha,q}.
TruncatedMatrix gram_matrix(int m, const FockModel& model);

/// max |P G - (P G)^*| entrywise: self-adjointness of G in the deformed geometry.
double gaussian_selfadjoint_residual(const Vector& x, int m, const FockModel& model);

// Checks ----------------------------------------------------------------------

/// max over `trials` random (f, g) of |<f, B(x) g> - <B*(x) f, g>|, both in
/// <.,.>_{alpha,q} with f, g of degree m, relative to max(1, |<B*(x) f, g>|).
double adjoint_check(const Vector& x, int m, const FockModel& model, Rng& rng, int trials = 8,
                     AnnihilationRoute route = AnnihilationRoute::ViaR);

/// max over random f of the largest level discrepancy between the two
/// annihilator routes.
double annihilator_route_residual(const Vector& x, int m, const FockModel& model, Rng& rng, int trials = 8);

/// Spectral norm, maximised over levels n = 0..m-1, of
/// B(x)B*(y) - q B*(y)B(x) - (<x,y> + alpha <x,ybar> q^{2n}) on level n.
double commutator_residual(const Vector& x, const Vector& y, int m, const FockModel& model);

// Moments ---------------------------------------------------------------------

/// B^{eps(n)}(x_n) ... B^{eps(1)}(x_1) Omega; index 1 acts first.
FockVector apply_word(const EpsilonPattern& eps, const std::vector<Vector>& vectors, const FockModel& model,
                      AnnihilationRoute route = AnnihilationRoute::ViaR);

/// <Omega, B^{eps(n)}(x_n) ... B^{eps(1)}(x_1) Omega>_{alpha,q}.
cplx mixed_vacuum_moment(const EpsilonPattern& eps, const std::vector<Vector>& vectors, const FockModel& model,
                         AnnihilationRoute route = AnnihilationRoute::ViaR);

/// <Omega, G(x_k) ... G(x_1) Omega>_{alpha,q}, vectors[0] acting first. Levels
/// that cannot return to Omega in the remaining steps are discarded.
cplx vacuum_moment(const std::vector<Vector>& vectors, const FockModel& model,
                   AnnihilationRoute route = AnnihilationRoute::ViaR);

/// <Omega, G(x)^k Omega>.
cplx vacuum_moment_power(const Vector& x, int k, const FockModel& model);

// Norms -----------------------------------------------------------------------

/// Norm of B*(x) compressed to (+)_{n<=m} in the <.,.>_{alpha,q} geometry:
/// max over n < m of || P_{n+1}^{1/2} (I (x) x) P_n^{-1/2} ||.
double creation_norm(const Vector& x, int m, const FockModel& model);

/// Per-level block norms, index n = 0..m-1.
std::vector<double> creation_level_norms(const Vector& x, int m, const FockModel& model);

/// Norm of B*(x) on the span of x^{(x)n}, n < m; equals creation_norm for d = 1.
double creation_norm_tensor_powers(const Vector& x, int m, const DeformParams& params,
                                   const InvolutiveSpace& space);

/// sqrt(||x^{(x)n}||^2 / ||x^{(x)(n-1)}||^2), a lower bound for ||B*(x)||.
double creation_lower_bound(const Vector& x, int n, const DeformParams& params, const InvolutiveSpace& space);

/// The five parameter regimes of the creation-norm theorem.
enum class NormCase { One = 1, Two = 2, Three = 3, Four = 4, Five = 5 };

struct NormBounds {
  NormCase which = NormCase::Five;
  double lower = 0.0;
  double upper = 0.0;
  bool strict_lower = false;  // case 4
  bool exact = false;         // cases 1 and 3: lower == upper
};

NormBounds norm_bounds(const Vector& x, const DeformParams& params, const InvolutiveSpace& space);

// Traciality ------------------------------------------------------------------

struct TraceDefect {
  double measured = 0.0;         // x1 = x3 = e1, x2 = x4 = e2
  double witness = 0.0;          // x1 = x2 = e1, x3 = x4 = e2
  double printed_formula = 0.0;  // 4 t alpha (1 - q^2)(1 + s alpha)
  double unit_formula = 0.0;     // t alpha (1 - q^2)(1 + s alpha)
};

/// On C^2 with J = diag(s, t) and e1, e2 the standard basis, the cyclic-shift
/// difference <Omega, G(x1)G(x2)G(x3)G(x4) Omega> - <Omega, G(x2)G(x3)G(x4)G(x1) Omega>
/// for two choices of (x1, ..., x4). With x1 = x3 and x2 = x4 the two words are
/// reverses of each other, so `measured` vanishes by reversal symmetry;
/// `witness` is the choice that detects non-traciality.
TraceDefect trace_defect(const DeformParams& params, int s, int t);

}  // namespace aqfock::ops

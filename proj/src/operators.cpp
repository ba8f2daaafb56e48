#include "aqfock/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aqfock/qsymbols.hpp"

namespace aqfock::ops {

namespace {

using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Index level_size(std::size_t d, int n) { return static_cast<Eigen::Index>(upow(d, n)); }

void require_dim(const Vector& x, std::size_t d, const char* where) {
  if (x.size() != static_cast<Eigen::Index>(d)) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

/// Contracts leg k (1-based) of a level-n tensor with y: sum_b conj(y_b) v[a, b, c].
Vector contract_leg(const Vector& v, int n, std::size_t d, int k, const Vector& y) {
  const Eigen::Index left = level_size(d, k - 1);
  const Eigen::Index right = level_size(d, n - k);
  const auto dd = static_cast<Eigen::Index>(d);
  Vector out = Vector::Zero(left * right);
  for (Eigen::Index a = 0; a < left; ++a) {
    for (Eigen::Index b = 0; b < dd; ++b) {
      const cplx w = std::conj(y(b));
      if (w == cplx(0.0)) continue;
      out.segment(a * right, right) += w * v.segment((a * dd + b) * right, right);
    }
  }
  return out;
}

/// Matrix of contract_leg: I_{d^{k-1}} (x) y^* (x) I_{d^{n-k}}.
Matrix contract_leg_matrix(int n, std::size_t d, int k, const Vector& y) {
  const Eigen::Index left = level_size(d, k - 1);
  const Eigen::Index right = level_size(d, n - k);
  return kron(kron(Matrix::Identity(left, left), Matrix(y.adjoint())), Matrix::Identity(right, right));
}

/// Level-n part of r_q(x) + alpha l_q(xbar) q^{n-1}.
Vector annihilate_number_level(const Vector& x, const Vector& xbar, const Vector& v, int n, std::size_t d,
                               const DeformParams& p) {
  Vector out = Vector::Zero(level_size(d, n - 1));
  const double tail = p.alpha * ipow(p.q, n - 1);
  for (int k = 1; k <= n; ++k) {
    const double right_weight = ipow(p.q, n - k);
    if (right_weight != 0.0) out += right_weight * contract_leg(v, n, d, k, x);
    const double left_weight = tail * ipow(p.q, k - 1);
    if (left_weight != 0.0) out += left_weight * contract_leg(v, n, d, k, xbar);
  }
  return out;
}

FockVector lowered(const FockVector& f) { return FockVector(f.dim(), std::max(f.max_degree() - 1, 0)); }

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

std::vector<Eigen::Index> level_offsets(std::size_t d, int m) {
  std::vector<Eigen::Index> off{0};
  for (int n = 0; n <= m; ++n) off.push_back(off.back() + level_size(d, n));
  return off;
}

TruncatedMatrix empty_truncated(std::size_t d, int m) {
  if (m < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  TruncatedMatrix t;
  t.m = m;
  t.d = d;
  t.offsets = level_offsets(d, m);
  t.matrix = Matrix::Zero(t.size(), t.size());
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Application

FockVector apply_create(const Vector& x, const FockVector& f) {
  const std::size_t d = f.dim();
  require_dim(x, d, "apply_create");
  FockVector out(d, f.max_degree() + 1);
  for (int n = 0; n <= f.max_degree(); ++n) out.level(n + 1) = kron(f.level(n), x);
  return out;
}

Vector free_annihilate(const Vector& x, const Vector& level_n, std::size_t d) {
  require_dim(x, d, "free_annihilate");
  const auto dd = static_cast<Eigen::Index>(d);
  if (level_n.size() % dd != 0) throw std::invalid_argument("free_annihilate: level size is not a multiple of d");
  Eigen::Map<const RowMajor> legs(level_n.data(), level_n.size() / dd, dd);
  return legs * x.conjugate();
}

FockVector apply_annihilate_via_r(const Vector& x, const FockModel& model, const FockVector& f) {
  const std::size_t d = f.dim();
  require_dim(x, d, "apply_annihilate");
  FockVector out = lowered(f);
  for (int n = 1; n <= f.max_degree(); ++n) out.level(n - 1) = free_annihilate(x, model.r(n) * f.level(n), d);
  return out;
}

FockVector apply_annihilate_via_number(const Vector& x, const FockModel& model, const FockVector& f) {
  const std::size_t d = f.dim();
  require_dim(x, d, "apply_annihilate");
  const Vector xbar = model.space().involute(x);
  FockVector out = lowered(f);
  for (int n = 1; n <= f.max_degree(); ++n) {
    out.level(n - 1) = annihilate_number_level(x, xbar, f.level(n), n, d, model.params());
  }
  return out;
}

FockVector apply_annihilate(const Vector& x, const FockModel& model, const FockVector& f, AnnihilationRoute route) {
  return route == AnnihilationRoute::ViaR ? apply_annihilate_via_r(x, model, f)
                                          : apply_annihilate_via_number(x, model, f);
}

FockVector apply_number(const FockVector& f) {
  FockVector out = f;
  for (int n = 0; n <= f.max_degree(); ++n) out.level(n) *= static_cast<double>(n);
  return out;
}

FockOperator create(const Vector& x) {
  return FockOperator(OperatorKind::Create, x, [x](const FockVector& f) { return apply_create(x, f); });
}

FockOperator annihilate_via_r(const Vector& x, const FockModel& model) {
  return FockOperator(OperatorKind::Annihilate, x,
                      [x, &model](const FockVector& f) { return apply_annihilate_via_r(x, model, f); });
}

FockOperator annihilate_via_number(const Vector& x, const FockModel& model) {
  return FockOperator(OperatorKind::Annihilate, x,
                      [x, &model](const FockVector& f) { return apply_annihilate_via_number(x, model, f); });
}

FockOperator gaussian(const Vector& x, const FockModel& model, AnnihilationRoute route) {
  return FockOperator(OperatorKind::Gauss, x, [x, &model, route](const FockVector& f) {
    return apply_create(x, f) + apply_annihilate(x, model, f, route);
  });
}

FockOperator number_operator() { return FockOperator(OperatorKind::Number, std::nullopt, apply_number); }

// ---------------------------------------------------------------------------
// Blocks and truncated matrices

Matrix create_block(const Vector& x, int n) {
  if (n < 0) throw std::invalid_argument("create_block: negative level");
  const auto size = level_size(static_cast<std::size_t>(x.size()), n);
  return kron(Matrix::Identity(size, size), Matrix(x));
}

Matrix annihilate_block(const Vector& x, int n, const FockModel& model, AnnihilationRoute route) {
  if (n < 1) throw std::invalid_argument("annihilate_block: level must be >= 1");
  const std::size_t d = model.dim();
  require_dim(x, d, "annihilate_block");
  if (route == AnnihilationRoute::ViaR) return contract_leg_matrix(n, d, n, x) * model.r(n);
  const Vector xbar = model.space().involute(x);
  const DeformParams& p = model.params();
  Matrix out = Matrix::Zero(level_size(d, n - 1), level_size(d, n));
  const double tail = p.alpha * ipow(p.q, n - 1);
  for (int k = 1; k <= n; ++k) {
    out += ipow(p.q, n - k) * contract_leg_matrix(n, d, k, x);
    out += tail * ipow(p.q, k - 1) * contract_leg_matrix(n, d, k, xbar);
  }
  return out;
}

TruncatedMatrix creation_matrix(const Vector& x, int m, std::size_t d) {
  require_dim(x, d, "creation_matrix");
  TruncatedMatrix t = empty_truncated(d, m);
  for (int n = 0; n < m; ++n) {
    const auto r = static_cast<std::size_t>(n + 1);
    const auto c = static_cast<std::size_t>(n);
    t.matrix.block(t.offsets[r], t.offsets[c], level_size(d, n + 1), level_size(d, n)) = create_block(x, n);
  }
  return t;
}

TruncatedMatrix annihilation_matrix(const Vector& x, int m, const FockModel& model, AnnihilationRoute route) {
  const std::size_t d = model.dim();
  TruncatedMatrix t = empty_truncated(d, m);
  for (int n = 1; n <= m; ++n) {
    const auto r = static_cast<std::size_t>(n - 1);
    const auto c = static_cast<std::size_t>(n);
    t.matrix.block(t.offsets[r], t.offsets[c], level_size(d, n - 1), level_size(d, n)) =
        annihilate_block(x, n, model, route);
  }
  return t;
}

TruncatedMatrix gaussian_matrix(const Vector& x, int m, const FockModel& model, AnnihilationRoute route) {
  TruncatedMatrix t = creation_matrix(x, m, model.dim());
  t.matrix += annihilation_matrix(x, m, model, route).matrix;
  return t;
}

TruncatedMatrix gram_matrix(int m, const FockModel& model) {
  const std::size_t d = model.dim();
  TruncatedMatrix t = empty_truncated(d, m);
  for (int n = 0; n <= m; ++n) {
    const auto i = static_cast<std::size_t>(n);
    t.matrix.block(t.offsets[i], t.offsets[i], level_size(d, n), level_size(d, n)) = model.p(n);
  }
  return t;
}

double gaussian_selfadjoint_residual(const Vector& x, int m, const FockModel& model) {
  const Matrix pg = gram_matrix(m, model).matrix * gaussian_matrix(x, m, model).matrix;
  return (pg - pg.adjoint()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Checks

double adjoint_check(const Vector& x, int m, const FockModel& model, Rng& rng, int trials,
                     AnnihilationRoute route) {
  if (m < 1) throw std::invalid_argument("adjoint_check: m must be >= 1");
  const std::size_t d = model.dim();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const FockVector f = random_fock_vector(d, m, rng, false);
    const FockVector g = random_fock_vector(d, m, rng, false);
    const cplx lhs = model.inner(f, apply_annihilate(x, model, g, route));
    const cplx rhs = model.inner(apply_create(x, f), g);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return worst;
}

double annihilator_route_residual(const Vector& x, int m, const FockModel& model, Rng& rng, int trials) {
  const std::size_t d = model.dim();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const FockVector f = random_fock_vector(d, m, rng, false);
    worst = std::max(worst, max_abs_diff(apply_annihilate_via_r(x, model, f), apply_annihilate_via_number(x, model, f)));
  }
  return worst;
}

double commutator_residual(const Vector& x, const Vector& y, int m, const FockModel& model) {
  if (m < 1) throw std::invalid_argument("commutator_residual: m must be >= 1");
  const std::size_t d = model.dim();
  require_dim(y, d, "commutator_residual");
  const DeformParams& p = model.params();
  const cplx xy = x.dot(y);
  const cplx xybar = x.dot(model.space().involute(y));
  double worst = 0.0;
  for (int n = 0; n < m; ++n) {
    const Eigen::Index size = level_size(d, n);
    Matrix lhs = annihilate_block(x, n + 1, model) * create_block(y, n);
    if (n >= 1) lhs -= p.q * create_block(y, n - 1) * annihilate_block(x, n, model);
    lhs -= (xy + p.alpha * ipow(p.q, 2 * n) * xybar) * Matrix::Identity(size, size);
    worst = std::max(worst, spectral_norm(lhs));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Moments

FockVector apply_word(const EpsilonPattern& eps, const std::vector<Vector>& vectors, const FockModel& model,
                      AnnihilationRoute route) {
  if (eps.size() != vectors.size()) throw std::invalid_argument("apply_word: pattern and vectors differ in length");
  FockVector state = FockVector::vacuum(model.dim());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    state = eps[i] == Eps::Create ? apply_create(vectors[i], state)
                                  : apply_annihilate(vectors[i], model, state, route);
  }
  return state;
}

cplx mixed_vacuum_moment(const EpsilonPattern& eps, const std::vector<Vector>& vectors, const FockModel& model,
                         AnnihilationRoute route) {
  return apply_word(eps, vectors, model, route).vacuum_component();
}

cplx vacuum_moment(const std::vector<Vector>& vectors, const FockModel& model, AnnihilationRoute route) {
  const auto k = static_cast<int>(vectors.size());
  FockVector state = FockVector::vacuum(model.dim());
  for (int j = 0; j < k; ++j) {
    const Vector& x = vectors[static_cast<std::size_t>(j)];
    FockVector next = apply_create(x, state) + apply_annihilate(x, model, state, route);
    // After this step k - j - 1 operators remain; higher levels cannot reach Omega.
    const int remaining = k - j - 1;
    state = next.resized(std::min(next.max_degree(), remaining));
  }
  return state.vacuum_component();
}

cplx vacuum_moment_power(const Vector& x, int k, const FockModel& model) {
  if (k < 0) throw std::invalid_argument("vacuum_moment_power: negative order");
  return vacuum_moment(std::vector<Vector>(static_cast<std::size_t>(k), x), model);
}

// ---------------------------------------------------------------------------
// Norms

std::vector<double> creation_level_norms(const Vector& x, int m, const FockModel& model) {
  if (x.norm() == 0.0) throw std::invalid_argument("creation_norm: x must be nonzero");
  require_dim(x, model.dim(), "creation_norm");
  std::vector<double> norms;
  norms.reserve(static_cast<std::size_t>(std::max(m, 0)));
  for (int n = 0; n < m; ++n) {
    norms.push_back(spectral_norm(model.p_sqrt(n + 1) * create_block(x, n) * model.p_inv_sqrt(n)));
  }
  return norms;
}

double creation_norm(const Vector& x, int m, const FockModel& model) {
  const std::vector<double> norms = creation_level_norms(x, m, model);
  return norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
}

double creation_lower_bound(const Vector& x, int n, const DeformParams& params, const InvolutiveSpace& space) {
  if (n < 1) throw std::invalid_argument("creation_lower_bound: n must be >= 1");
  const double below = tensor_power_norm(x, n - 1, params, space);
  return std::sqrt(tensor_power_norm(x, n, params, space) / below);
}

double creation_norm_tensor_powers(const Vector& x, int m, const DeformParams& params,
                                   const InvolutiveSpace& space) {
  double best = 0.0;
  for (int n = 1; n <= m; ++n) best = std::max(best, creation_lower_bound(x, n, params, space));
  return best;
}

NormBounds norm_bounds(const Vector& x, const DeformParams& params, const InvolutiveSpace& space) {
  const double norm2 = x.squaredNorm();
  if (norm2 == 0.0) throw std::invalid_argument("norm_bounds: x must be nonzero");
  const double a = params.alpha;
  const double q = params.q;
  const double ac = a * self_duality(x, space);
  const double norm = std::sqrt(norm2);
  const double q_bound = norm / std::sqrt(1.0 - q);
  const double general_upper = std::sqrt((1.0 + std::abs(a)) / (1.0 - q)) * norm;

  NormBounds b;
  if (q <= 0.0 && ac >= 0.0) {
    b.which = NormCase::One;
    b.lower = b.upper = std::sqrt(norm2 + ac);
    b.exact = true;
  } else if (q <= 0.0) {
    b.which = NormCase::Two;
    b.lower = q_bound;
    b.upper = norm;
  } else if (std::abs(a) <= q) {
    b.which = NormCase::Three;
    b.lower = b.upper = q_bound;
    b.exact = true;
  } else if (q < ac / norm2) {
    b.which = NormCase::Four;
    b.lower = q_bound;
    b.upper = general_upper;
    b.strict_lower = true;
  } else {
    b.which = NormCase::Five;
    b.lower = q_bound;
    b.upper = general_upper;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Traciality

TraceDefect trace_defect(const DeformParams& params, int s, int t) {
  params.validate();
  const FockModel model(InvolutiveSpace::diagonal_signs({s, t}), params);
  const Vector e1 = Vector::Unit(2, 0);
  const Vector e2 = Vector::Unit(2, 1);

  // <Omega, G(x1)G(x2)G(x3)G(x4) Omega> - <Omega, G(x2)G(x3)G(x4)G(x1) Omega>;
  // vacuum_moment takes the rightmost factor first.
  auto defect = [&model](const Vector& x1, const Vector& x2, const Vector& x3, const Vector& x4) {
    return (vacuum_moment({x4, x3, x2, x1}, model) - vacuum_moment({x1, x4, x3, x2}, model)).real();
  };

  const double a = params.alpha;
  const double q = params.q;
  TraceDefect out;
  out.measured = defect(e1, e2, e1, e2);
  out.witness = defect(e1, e1, e2, e2);
  out.unit_formula = t * a * (1.0 - q * q) * (1.0 + s * a);
  out.printed_formula = 4.0 * out.unit_formula;
  return out;
}

}  // namespace aqfock::ops

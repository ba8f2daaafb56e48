#include "aqfock/fock_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aqfock/errors.hpp"
#include "aqfock/qsymbols.hpp"

namespace aqfock {

namespace cb = coxeter_b;

namespace {

constexpr double kConstructionTolerance = 1e-12;

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// ---------------------------------------------------------------------------
// InvolutiveSpace

InvolutiveSpace::InvolutiveSpace(RealMatrix involution) : involution_(std::move(involution)) {
  if (involution_.rows() == 0 || involution_.rows() != involution_.cols()) {
    throw std::invalid_argument("involution must be a nonempty square matrix");
  }
  if ((involution_ - involution_.transpose()).cwiseAbs().maxCoeff() > kConstructionTolerance) {
    throw std::invalid_argument("involution is not symmetric (J != J^T)");
  }
  const RealMatrix square = involution_ * involution_;
  const RealMatrix id = RealMatrix::Identity(involution_.rows(), involution_.cols());
  if ((square - id).cwiseAbs().maxCoeff() > kConstructionTolerance) {
    throw std::invalid_argument("involution does not square to the identity (J^2 != I)");
  }
}

InvolutiveSpace InvolutiveSpace::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return InvolutiveSpace(RealMatrix::Identity(n, n));
}

InvolutiveSpace InvolutiveSpace::basis_swap(std::size_t d, const std::vector<std::pair<int, int>>& pairs) {
  const auto n = static_cast<Eigen::Index>(d);
  // Built as the product of the transpositions; overlapping pairs therefore
  // produce a matrix that fails the involution check instead of being fixed up.
  RealMatrix j = RealMatrix::Identity(n, n);
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1 || a > static_cast<int>(d) || b > static_cast<int>(d) || a == b) {
      throw std::invalid_argument("basis swap pair (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") out of range for dimension " + std::to_string(d));
    }
    RealMatrix t = RealMatrix::Identity(n, n);
    t(a - 1, a - 1) = 0.0;
    t(b - 1, b - 1) = 0.0;
    t(a - 1, b - 1) = 1.0;
    t(b - 1, a - 1) = 1.0;
    j = j * t;
  }
  return InvolutiveSpace(std::move(j));
}

InvolutiveSpace InvolutiveSpace::diagonal_signs(const std::vector<int>& signs) {
  RealMatrix j = RealMatrix::Zero(static_cast<Eigen::Index>(signs.size()), static_cast<Eigen::Index>(signs.size()));
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw std::invalid_argument("diagonal involution entries must be +-1");
    j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = signs[i];
  }
  return InvolutiveSpace(std::move(j));
}

Vector InvolutiveSpace::involute(const Vector& x) const {
  if (x.size() != involution_.rows()) throw std::invalid_argument("involute: dimension mismatch");
  return involution_.cast<cplx>() * x;
}

// ---------------------------------------------------------------------------
// DeformParams

bool DeformParams::admissible() const {
  if (!std::isfinite(alpha) || !std::isfinite(q)) return false;
  if (q == 0.0) return alpha > -1.0;
  return alpha > -1.0 && alpha < 1.0 && q > -1.0 && q < 1.0;
}

void DeformParams::validate() const {
  if (admissible()) return;
  throw std::invalid_argument("inadmissible parameters (alpha=" + std::to_string(alpha) +
                              ", q=" + std::to_string(q) +
                              "): require alpha, q in (-1,1), or q = 0 with alpha > -1");
}

// ---------------------------------------------------------------------------
// FockVector

FockVector::FockVector(std::size_t d, int max_degree) : d_(d) {
  if (d == 0) throw std::invalid_argument("FockVector: dimension must be positive");
  if (max_degree < 0) throw std::invalid_argument("FockVector: negative degree");
  levels_.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 0; n <= max_degree; ++n) {
    levels_.push_back(Vector::Zero(static_cast<Eigen::Index>(upow(d, n))));
  }
}

FockVector FockVector::vacuum(std::size_t d, int max_degree) {
  FockVector v(d, max_degree);
  v.levels_[0](0) = 1.0;
  return v;
}

FockVector FockVector::homogeneous(std::size_t d, int n, Vector coefficients) {
  if (coefficients.size() != static_cast<Eigen::Index>(upow(d, n))) {
    throw std::invalid_argument("homogeneous: coefficient size must be d^n");
  }
  FockVector v(d, n);
  v.levels_[static_cast<std::size_t>(n)] = std::move(coefficients);
  return v;
}

FockVector FockVector::resized(int max_degree) const {
  FockVector out(d_, max_degree);
  for (int n = 0; n <= std::min(max_degree, this->max_degree()); ++n) out.level(n) = level(n);
  return out;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.d_ != d_) throw std::invalid_argument("FockVector: dimension mismatch");
  if (other.max_degree() > max_degree()) *this = resized(other.max_degree());
  for (int n = 0; n <= other.max_degree(); ++n) level(n) += other.level(n);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  if (other.d_ != d_) throw std::invalid_argument("FockVector: dimension mismatch");
  if (other.max_degree() > max_degree()) *this = resized(other.max_degree());
  for (int n = 0; n <= other.max_degree(); ++n) level(n) -= other.level(n);
  return *this;
}

FockVector& FockVector::operator*=(cplx s) {
  for (auto& l : levels_) l *= s;
  return *this;
}

double max_abs_diff(const FockVector& a, const FockVector& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("FockVector: dimension mismatch");
  double worst = 0.0;
  const int top = std::max(a.max_degree(), b.max_degree());
  for (int n = 0; n <= top; ++n) {
    const auto size = static_cast<Eigen::Index>(upow(a.d_, n));
    const Vector va = n <= a.max_degree() ? a.level(n) : Vector::Zero(size);
    const Vector vb = n <= b.max_degree() ? b.level(n) : Vector::Zero(size);
    if (size > 0) worst = std::max(worst, (va - vb).cwiseAbs().maxCoeff());
  }
  return worst;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
FockVector operator*(cplx s, FockVector v) { return v *= s; }

Vector tensor_power(const Vector& x, int n) {
  Vector out = Vector::Ones(1);
  for (int k = 0; k < n; ++k) out = kron(out, x);
  return out;
}

Vector tensor_product(const std::vector<Vector>& factors) {
  Vector out = Vector::Ones(1);
  for (const Vector& f : factors) out = kron(out, f);
  return out;
}

// ---------------------------------------------------------------------------
// Group action

LevelMap sigma_action(const cb::SignedPermutation& sigma, const InvolutiveSpace& space) {
  const int n = sigma.rank();
  const std::size_t d = space.dim();
  const auto size = static_cast<Eigen::Index>(upow(d, n));
  const cb::SignedPermutation inv = sigma.inverse();
  const Matrix j = space.involution().cast<cplx>();

  // Leg i of the output is fed by leg source[i], through J when flip[i].
  std::vector<int> source(static_cast<std::size_t>(n));
  std::vector<bool> flip(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int s = inv(i);
    source[static_cast<std::size_t>(i - 1)] = std::abs(s) - 1;
    flip[static_cast<std::size_t>(i - 1)] = s < 0;
  }

  LevelMap m = LevelMap::Zero(size, size);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (Eigen::Index col = 0; col < size; ++col) {
    auto rest = static_cast<std::size_t>(col);
    for (int leg = n - 1; leg >= 0; --leg) {
      digits[static_cast<std::size_t>(leg)] = static_cast<int>(rest % d);
      rest /= d;
    }
    Vector column = Vector::Ones(1);
    for (int leg = 0; leg < n; ++leg) {
      const int idx = digits[static_cast<std::size_t>(source[static_cast<std::size_t>(leg)])];
      Vector factor = flip[static_cast<std::size_t>(leg)] ? Vector(j.col(idx))
                                                          : Vector(Vector::Unit(static_cast<Eigen::Index>(d), idx));
      column = kron(column, factor);
    }
    m.col(col) = column;
  }
  return m;
}

LevelMap generator_action(int n, int i, const InvolutiveSpace& space) {
  if (n < 1 || i < 0 || i >= n) throw std::invalid_argument("generator_action: index out of range");
  const std::size_t d = space.dim();
  if (i == 0) {
    const auto rest = static_cast<Eigen::Index>(upow(d, n - 1));
    return kron(Matrix(space.involution().cast<cplx>()), Matrix::Identity(rest, rest));
  }
  // Swap legs i and i+1 (1-based): x_1..x_{i-1} (x) [swap] (x) x_{i+2}..x_n.
  const auto dd = static_cast<Eigen::Index>(d * d);
  Matrix swap = Matrix::Zero(dd, dd);
  for (Eigen::Index a = 0; a < static_cast<Eigen::Index>(d); ++a) {
    for (Eigen::Index b = 0; b < static_cast<Eigen::Index>(d); ++b) {
      swap(b * static_cast<Eigen::Index>(d) + a, a * static_cast<Eigen::Index>(d) + b) = 1.0;
    }
  }
  const auto left = static_cast<Eigen::Index>(upow(d, i - 1));
  const auto right = static_cast<Eigen::Index>(upow(d, n - i - 1));
  return kron(kron(Matrix::Identity(left, left), swap), Matrix::Identity(right, right));
}

LevelMap sigma_action_by_word(const cb::SignedPermutation& sigma, const InvolutiveSpace& space) {
  const int n = sigma.rank();
  const auto size = static_cast<Eigen::Index>(upow(space.dim(), n));
  LevelMap m = LevelMap::Identity(size, size);
  for (int letter : cb::reduced_word(sigma, cb::kMaxRank).letters) m = m * generator_action(n, letter, space);
  return m;
}

// ---------------------------------------------------------------------------
// Symmetrization operators

LevelMap p_operator_direct(int n, const DeformParams& params, const InvolutiveSpace& space, int rank_cap) {
  if (n < 0) throw std::invalid_argument("p_operator_direct: negative level");
  if (n == 0) return LevelMap::Identity(1, 1);
  const auto size = static_cast<Eigen::Index>(upow(space.dim(), n));
  LevelMap p = LevelMap::Zero(size, size);
  for (const cb::SignedPermutation& sigma : cb::enumerate_group(n, rank_cap)) {
    const cb::LengthStats s = cb::length_stats(sigma, rank_cap);
    const double weight = ipow(params.alpha, s.l1) * ipow(params.q, s.l2);
    if (weight == 0.0) continue;
    p += weight * sigma_action(sigma, space);
  }
  return p;
}

LevelMap r_operator(int n, const DeformParams& params, const InvolutiveSpace& space) {
  if (n < 1) throw std::invalid_argument("r_operator: level must be >= 1");
  const auto size = static_cast<Eigen::Index>(upow(space.dim(), n));
  const double a = params.alpha;
  const double q = params.q;

  auto product = [n](int from, int to) {
    // pi_from pi_{from-1} ... pi_to (descending) or ascending when from < to.
    cb::SignedPermutation g = cb::SignedPermutation::identity(n);
    const int step = from >= to ? -1 : 1;
    for (int i = from;; i += step) {
      g = cb::compose(g, cb::generator(n, i));
      if (i == to) break;
    }
    return g;
  };

  LevelMap r = LevelMap::Identity(size, size);
  for (int k = 1; k <= n - 1; ++k) r += ipow(q, k) * sigma_action(product(n - 1, n - k), space);

  const double outer = a * ipow(q, n - 1);
  if (outer != 0.0) {
    const cb::SignedPermutation head = product(n - 1, 0);  // pi_{n-1} ... pi_1 pi_0
    LevelMap inner = sigma_action(head, space);
    for (int k = 1; k <= n - 1; ++k) {
      inner += ipow(q, k) * sigma_action(cb::compose(head, product(1, k)), space);
    }
    r += outer * inner;
  }
  return r;
}

LevelMap r_operator_from_reps(int n, const DeformParams& params, const InvolutiveSpace& space) {
  if (n < 1) throw std::invalid_argument("r_operator_from_reps: level must be >= 1");
  const auto size = static_cast<Eigen::Index>(upow(space.dim(), n));
  LevelMap r = LevelMap::Zero(size, size);
  for (const cb::GeneratorWord& w : cb::stumbo_reps(n)) {
    const cb::LengthStats s = w.stats();
    r += ipow(params.alpha, s.l1) * ipow(params.q, s.l2) * sigma_action(cb::evaluate(w, n), space);
  }
  return r;
}

LevelMap p_operator_recursive(int n, const DeformParams& params, const InvolutiveSpace& space) {
  if (n < 0) throw std::invalid_argument("p_operator_recursive: negative level");
  const auto d = static_cast<Eigen::Index>(space.dim());
  LevelMap p = LevelMap::Identity(1, 1);
  for (int level = 1; level <= n; ++level) {
    p = kron(p, Matrix::Identity(d, d)) * r_operator(level, params, space);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Inner products

cplx inner_00(const FockVector& f, const FockVector& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("inner_00: dimension mismatch");
  cplx sum = 0.0;
  for (int n = 0; n <= std::min(f.max_degree(), g.max_degree()); ++n) sum += f.level(n).dot(g.level(n));
  return sum;
}

cplx inner_aq(const FockVector& f, const FockVector& g, const DeformParams& params, const InvolutiveSpace& space) {
  if (f.dim() != g.dim() || f.dim() != space.dim()) throw std::invalid_argument("inner_aq: dimension mismatch");
  cplx sum = 0.0;
  for (int n = 0; n <= std::min(f.max_degree(), g.max_degree()); ++n) {
    sum += f.level(n).dot(p_operator_recursive(n, params, space) * g.level(n));
  }
  return sum;
}

PositivityReport positivity_report(int n, const DeformParams& params, const InvolutiveSpace& space) {
  const LevelMap p = p_operator_direct(n, params, space);
  const LevelMap herm = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  PositivityReport report;
  report.min_eigenvalue = ev.minCoeff();
  report.kernel_dim = static_cast<int>((ev.array() < kKernelTolerance).count());
  return report;
}

double self_duality(const Vector& x, const InvolutiveSpace& space) {
  return x.dot(space.involute(x)).real();
}

double tensor_power_norm(const Vector& x, int n, const DeformParams& params, const InvolutiveSpace& space) {
  const double norm2 = x.squaredNorm();
  if (norm2 == 0.0) throw std::invalid_argument("tensor_power_norm: x must be nonzero");
  if (n < 0) throw std::invalid_argument("tensor_power_norm: negative level");
  const double c = self_duality(x, space) / norm2;
  return orthopoly::q_factorial(n, params.q) * orthopoly::q_pochhammer(-params.alpha * c, params.q, n) *
         std::pow(norm2, n);
}

// ---------------------------------------------------------------------------
// FockModel

FockModel::FockModel(InvolutiveSpace space, DeformParams params) : space_(std::move(space)), params_(params) {}

const LevelMap& FockModel::r(int n) const {
  std::lock_guard lock(mutex_);
  auto& slot = r_cache_[n];
  if (!slot) slot = std::make_unique<LevelMap>(r_operator(n, params_, space_));
  return *slot;
}

const LevelMap& FockModel::p(int n) const {
  if (n < 0) throw std::invalid_argument("FockModel::p: negative level");
  {
    std::lock_guard lock(mutex_);
    auto found = p_cache_.find(n);
    if (found != p_cache_.end()) return *found->second;
  }
  LevelMap value;
  if (n == 0) {
    value = LevelMap::Identity(1, 1);
  } else {
    const auto d = static_cast<Eigen::Index>(dim());
    value = kron(p(n - 1), Matrix::Identity(d, d)) * r(n);
  }
  std::lock_guard lock(mutex_);
  auto& slot = p_cache_[n];
  if (!slot) slot = std::make_unique<LevelMap>(std::move(value));
  return *slot;
}

const FockModel::Whitening& FockModel::whitening(int n) const {
  {
    std::lock_guard lock(mutex_);
    auto found = w_cache_.find(n);
    if (found != w_cache_.end()) return *found->second;
  }
  const LevelMap& pn = p(n);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (pn + pn.adjoint()));
  const Eigen::VectorXd ev = solver.eigenvalues();
  if (ev.minCoeff() <= kKernelTolerance) {
    throw DomainError("P^(" + std::to_string(n) + ") is not strictly positive (min eigenvalue " +
                      std::to_string(ev.minCoeff()) + ")");
  }
  const Matrix& v = solver.eigenvectors();
  auto w = std::make_unique<Whitening>();
  w->sqrt = v * ev.cwiseSqrt().cast<cplx>().asDiagonal() * v.adjoint();
  w->inv_sqrt = v * ev.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() * v.adjoint();
  std::lock_guard lock(mutex_);
  auto& slot = w_cache_[n];
  if (!slot) slot = std::move(w);
  return *slot;
}

const LevelMap& FockModel::p_sqrt(int n) const { return whitening(n).sqrt; }
const LevelMap& FockModel::p_inv_sqrt(int n) const { return whitening(n).inv_sqrt; }

cplx FockModel::inner(const FockVector& f, const FockVector& g) const {
  if (f.dim() != dim() || g.dim() != dim()) throw std::invalid_argument("FockModel::inner: dimension mismatch");
  cplx sum = 0.0;
  for (int n = 0; n <= std::min(f.max_degree(), g.max_degree()); ++n) sum += f.level(n).dot(p(n) * g.level(n));
  return sum;
}

}  // namespace aqfock

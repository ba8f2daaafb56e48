#pragma once

// Involutive Hilbert space C^d, the Sigma(n) action on tensor powers, the
// type-B symmetrization operator P^(n) and its right factor R^(n), and the
// deformed inner product on the truncated full Fock space.
//
// Tensor convention: leg 1 is the slowest-varying index, so the coefficient
// of e_{i_1} (x) ... (x) e_{i_n} sits at ((i_1 d + i_2) d + ...) + i_n.

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "aqfock/coxeter_b.hpp"
#include "aqfock/numeric.hpp"

namespace aqfock {

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Matrix of an operator on a single level H^{(x)n}; d^n x d^n.
using LevelMap = Matrix;

/// C^d with a self-adjoint involution x -> J x, J real symmetric with J^2 = I.
class InvolutiveSpace {
 public:
  /// Throws std::invalid_argument unless J = J^T and J^2 = I to 1e-12.
  explicit InvolutiveSpace(RealMatrix involution);

  static InvolutiveSpace identity(std::size_t d);
  /// Swaps e_a <-> e_b for each (a, b), 1-based; other basis vectors fixed.
  static InvolutiveSpace basis_swap(std::size_t d, const std::vector<std::pair<int, int>>& pairs);
  /// J = diag(signs), entries +-1.
  static InvolutiveSpace diagonal_signs(const std::vector<int>& signs);

  std::size_t dim() const { return static_cast<std::size_t>(involution_.rows()); }
  const RealMatrix& involution() const { return involution_; }

  Vector involute(const Vector& x) const;

 private:
  RealMatrix involution_;
};

/// x -> x-bar, the complex-linear extension of the real involution.
inline Vector involute(const InvolutiveSpace& space, const Vector& x) { return space.involute(x); }

/// Deformation parameters. Admissible: (alpha, q) in (-1,1)^2, or q = 0 with
/// alpha > -1.
struct DeformParams {
  double alpha = 0.0;
  double q = 0.0;

  bool admissible() const;
  /// Throws std::invalid_argument with an explanation when not admissible.
  void validate() const;
};

/// Finitely supported element of the full Fock space, truncated at degree m.
class FockVector {
 public:
  FockVector(std::size_t d, int max_degree);

  static FockVector vacuum(std::size_t d, int max_degree = 0);
  /// A single homogeneous tensor at level n.
  static FockVector homogeneous(std::size_t d, int n, Vector coefficients);

  std::size_t dim() const { return d_; }
  int max_degree() const { return static_cast<int>(levels_.size()) - 1; }

  Vector& level(int n) { return levels_.at(static_cast<std::size_t>(n)); }
  const Vector& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }

  /// Coefficient of Omega.
  cplx vacuum_component() const { return levels_.front()(0); }

  /// Copy truncated or zero-extended to `max_degree`.
  FockVector resized(int max_degree) const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(cplx s);

  /// max_n max_i |a_n(i) - b_n(i)|, missing levels treated as zero.
  friend double max_abs_diff(const FockVector& a, const FockVector& b);

 private:
  std::size_t d_;
  std::vector<Vector> levels_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(cplx s, FockVector v);

/// Kronecker products; the left factor is the slower index.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// x^{(x)n}; n = 0 gives the scalar 1.
Vector tensor_power(const Vector& x, int n);

/// x_1 (x) ... (x) x_n.
Vector tensor_product(const std::vector<Vector>& factors);

/// Matrix of sigma on H^{(x)n} from the closed form: output leg i receives
/// x_{|sigma^{-1}(i)|}, involuted iff sigma^{-1}(i) < 0.
LevelMap sigma_action(const coxeter_b::SignedPermutation& sigma, const InvolutiveSpace& space);

/// Same matrix, as the product of generator matrices along a reduced word.
LevelMap sigma_action_by_word(const coxeter_b::SignedPermutation& sigma, const InvolutiveSpace& space);

/// Matrix of the generator pi_i on H^{(x)n}.
LevelMap generator_action(int n, int i, const InvolutiveSpace& space);

/// P^(n) = sum over Sigma(n) of alpha^{l1} q^{l2} sigma. P^(0) = 1.
LevelMap p_operator_direct(int n, const DeformParams& params, const InvolutiveSpace& space,
                           int rank_cap = coxeter_b::kDefaultRankCap);

/// R^(n) = 1 + sum_k q^k pi_{n-1}...pi_{n-k}
///       + alpha q^{n-1} pi_{n-1}...pi_1 pi_0 (1 + sum_k q^k pi_1...pi_k).
LevelMap r_operator(int n, const DeformParams& params, const InvolutiveSpace& space);

/// R^(n) as sum_k alpha^{l1(w(k))} q^{l2(w(k))} w(k) over the minimal coset
/// representatives.
LevelMap r_operator_from_reps(int n, const DeformParams& params, const InvolutiveSpace& space);

/// P^(n) = (P^(n-1) (x) I) R^(n), recursing down to P^(0) = 1.
LevelMap p_operator_recursive(int n, const DeformParams& params, const InvolutiveSpace& space);

/// sum_n <f_n, g_n>.
cplx inner_00(const FockVector& f, const FockVector& g);

/// sum_n <f_n, P^(n) g_n>; conjugate-linear in f.
cplx inner_aq(const FockVector& f, const FockVector& g, const DeformParams& params,
              const InvolutiveSpace& space);

struct PositivityReport {
  double min_eigenvalue = 0.0;
  int kernel_dim = 0;
};

inline constexpr double kKernelTolerance = 1e-10;

PositivityReport positivity_report(int n, const DeformParams& params, const InvolutiveSpace& space);

/// ||x^{(x)n}||^2_{alpha,q} = [n]_q! (-alpha <x,xbar>/||x||^2; q)_n ||x||^{2n}.
/// Throws std::invalid_argument for x = 0.
double tensor_power_norm(const Vector& x, int n, const DeformParams& params, const InvolutiveSpace& space);

/// <x, xbar>, real because J is real symmetric.
double self_duality(const Vector& x, const InvolutiveSpace& space);

/// Per-level cache of P^(n), R^(n) and the whitening maps P^{+-1/2} for one
/// (space, params) pair. Thread-safe; matrices are built on first use.
class FockModel {
 public:
  FockModel(InvolutiveSpace space, DeformParams params);

  const InvolutiveSpace& space() const { return space_; }
  const DeformParams& params() const { return params_; }
  std::size_t dim() const { return space_.dim(); }

  const LevelMap& r(int n) const;
  const LevelMap& p(int n) const;
  /// P^(n)^{1/2} and P^(n)^{-1/2} from the Hermitian eigendecomposition.
  const LevelMap& p_sqrt(int n) const;
  const LevelMap& p_inv_sqrt(int n) const;

  cplx inner(const FockVector& f, const FockVector& g) const;

 private:
  struct Whitening {
    LevelMap sqrt;
    LevelMap inv_sqrt;
  };
  const Whitening& whitening(int n) const;

  InvolutiveSpace space_;
  DeformParams params_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<LevelMap>> r_cache_;
  mutable std::map<int, std::unique_ptr<LevelMap>> p_cache_;
  mutable std::map<int, std::unique_ptr<Whitening>> w_cache_;
};

}  // namespace aqfock

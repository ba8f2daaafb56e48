#include <doctest.h>

#include "aqfock/operators.hpp"
#include "aqfock/orthopoly.hpp"
#include "aqfock/qsymbols.hpp"

using namespace aqfock;
using namespace aqfock::ops;

namespace {

InvolutiveSpace swap2() { return InvolutiveSpace::basis_swap(2, {{1, 2}}); }

Vector unit(Rng& rng, std::size_t d, bool real = false) {
  Vector v = random_vector(d, rng, real);
  return v / v.norm();
}

}  // namespace

TEST_CASE("creation appends a leg") {
  Rng rng(1);
  const Vector x = random_vector(2, rng);
  const Vector y = random_vector(2, rng);
  const FockVector omega = FockVector::vacuum(2);
  CHECK((apply_create(x, omega).level(1) - x).norm() == 0.0);
  const FockVector fx = FockVector::homogeneous(2, 1, x);
  CHECK((apply_create(y, fx).level(2) - kron(x, y)).norm() < 1e-15);
  const cplx lambda(0.3, -1.2);
  CHECK(max_abs_diff(apply_create(lambda * x, fx), lambda * apply_create(x, fx)) < 1e-15);
}

TEST_CASE("annihilation on low levels") {
  Rng rng(2);
  const auto space = swap2();
  const DeformParams p{0.35, -0.4};
  const FockModel model(space, p);
  const Vector x = random_vector(2, rng);
  const Vector y = random_vector(2, rng);
  const FockVector omega = FockVector::vacuum(2);
  CHECK(apply_annihilate(x, model, omega).level(0).norm() == 0.0);
  const cplx expected = x.dot(y) + 0.35 * x.dot(space.involute(y));
  for (auto route : {AnnihilationRoute::ViaR, AnnihilationRoute::ViaNumber}) {
    const FockVector out = apply_annihilate(x, model, FockVector::homogeneous(2, 1, y), route);
    CHECK(std::abs(out.vacuum_component() - expected) < 1e-14);
  }
}

TEST_CASE("two annihilation routes agree") {
  Rng rng(3);
  for (double a : {-0.9, 0.0, 0.7}) {
    for (double q : {-0.5, 0.0, 0.8}) {
      const FockModel model(swap2(), {a, q});
      CHECK(annihilator_route_residual(random_vector(2, rng), 5, model, rng) < 1e-12);
    }
  }
}

TEST_CASE("q = 0 annihilator is the free one; alpha = 0 drops the involution term") {
  Rng rng(4);
  const Vector x = random_vector(2, rng);
  const FockVector f = random_fock_vector(2, 4, rng);
  const FockModel free(swap2(), {0.6, 0.0});
  for (int n = 2; n <= 4; ++n) {
    const Vector got = apply_annihilate(x, free, f).level(n - 1);
    CHECK((got - free_annihilate(x, f.level(n), 2)).norm() < 1e-13);
  }
  // alpha = 0: r_q(x) = sum_k q^{n-k} (contract leg k), checked on level 2.
  const FockModel qmodel(swap2(), {0.0, 0.5});
  const Vector level2 = f.level(2);
  Vector expected = Vector::Zero(2);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      expected(i) += std::conj(x(j)) * level2(i * 2 + j);        // leg 2, weight q^0
      expected(j) += 0.5 * std::conj(x(i)) * level2(i * 2 + j);  // leg 1, weight q^1
    }
  }
  CHECK((apply_annihilate(x, qmodel, FockVector::homogeneous(2, 2, level2)).level(1) - expected).norm() < 1e-14);
}

TEST_CASE("adjointness in the deformed geometry") {
  Rng rng(5);
  CHECK(adjoint_check(random_vector(2, rng), 4, FockModel(swap2(), {0.0, 0.0}), rng) < 1e-12);
  for (int trial = 0; trial < 4; ++trial) {
    const DeformParams p{random_uniform(rng, -0.9, 0.9), random_uniform(rng, -0.9, 0.9)};
    const FockModel model(swap2(), p);
    const Vector x = random_vector(2, rng);
    CHECK(adjoint_check(x, 4, model, rng) < 1e-10);
    CHECK(adjoint_check(cplx(0, 1) * x, 4, model, rng) < 1e-10);
  }
}

TEST_CASE("commutation relation") {
  Rng rng(6);
  for (double a : {-0.5, 0.0, 0.9}) {
    for (double q : {-0.9, 0.0, 0.5}) {
      const FockModel model(swap2(), {a, q});
      CHECK(commutator_residual(unit(rng, 2), unit(rng, 2), 5, model) < 1e-11);
    }
  }
}

TEST_CASE("Gaussian on tensor powers") {
  const auto space = InvolutiveSpace::identity(2);
  const DeformParams p{0.4, 0.3};
  const FockModel model(space, p);
  const Vector x = Vector::Unit(2, 0);
  CHECK((gaussian(x, model)(FockVector::vacuum(2)).level(1) - x).norm() < 1e-15);
  for (int n = 1; n <= 4; ++n) {
    const FockVector out = gaussian(x, model)(FockVector::homogeneous(2, n, tensor_power(x, n)));
    const double coeff = orthopoly::q_number(n, 0.3) * (1.0 + 0.4 * std::pow(0.3, n - 1));
    CHECK((out.level(n + 1) - tensor_power(x, n + 1)).norm() < 1e-13);
    CHECK((out.level(n - 1) - coeff * tensor_power(x, n - 1)).norm() < 1e-13);
  }
  CHECK(gaussian_selfadjoint_residual(x, 5, model) < 1e-12);
}

TEST_CASE("vacuum moments") {
  const auto space = InvolutiveSpace::identity(1);
  const Vector x = Vector::Ones(1);
  for (double a : {-0.4, 0.0, 0.7}) {
    for (double q : {-0.7, 0.0, 0.5}) {
      const FockModel model(space, {a, q});
      CHECK(vacuum_moment_power(x, 2, model).real() == doctest::Approx(1 + a));
      CHECK(vacuum_moment_power(x, 4, model).real() ==
            doctest::Approx((1 + a) * (2 + a + q + a * q + a * q * q)).epsilon(1e-13));
      CHECK(std::abs(vacuum_moment_power(x, 5, model)) < 1e-15);
    }
  }
}

TEST_CASE("mixed vacuum moments") {
  Rng rng(7);
  const auto space = swap2();
  const FockModel model(space, {0.25, 0.6});
  const Vector x = random_vector(2, rng);
  const Vector y = random_vector(2, rng);
  const cplx expected = y.dot(x) + 0.25 * y.dot(space.involute(x));
  CHECK(std::abs(mixed_vacuum_moment(parse_epsilon("*1"), {x, y}, model) - expected) < 1e-14);
  CHECK(std::abs(mixed_vacuum_moment(parse_epsilon("**"), {x, y}, model)) == 0.0);
  CHECK(std::abs(mixed_vacuum_moment(parse_epsilon("1*"), {x, y}, model)) == 0.0);
}

TEST_CASE("norm theorem case selection and bounds") {
  const auto id1 = InvolutiveSpace::identity(1);
  const auto neg1 = InvolutiveSpace::diagonal_signs({-1});
  const Vector x = Vector::Ones(1);
  CHECK(norm_bounds(x, {0.5, -0.3}, id1).which == NormCase::One);
  CHECK(norm_bounds(x, {0.5, -0.3}, neg1).which == NormCase::Two);
  CHECK(norm_bounds(x, {0.3, 0.5}, id1).which == NormCase::Three);
  CHECK(norm_bounds(x, {0.8, 0.3}, id1).which == NormCase::Four);
  CHECK(norm_bounds(x, {0.8, 0.3}, neg1).which == NormCase::Five);

  // Case 1 is attained at m = 1.
  const FockModel m1(id1, {0.5, -0.3});
  CHECK(creation_norm(x, 1, m1) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
  CHECK(creation_norm(x, 6, m1) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));

  // Case 3: monotone approach to 1/sqrt(1-q) from below.
  const FockModel m3(id1, {0.3, 0.5});
  double prev = 0.0;
  for (int m = 1; m <= 20; ++m) {
    const double v = creation_norm(x, m, m3);
    CHECK(v >= prev - 1e-14);
    CHECK(v <= std::sqrt(2.0) + 1e-12);
    prev = v;
  }
  CHECK(creation_norm(x, 40, m3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
}

TEST_CASE("d = 1 norms equal the tensor-power computation") {
  const auto space = InvolutiveSpace::identity(1);
  const DeformParams p{-0.6, 0.4};
  const FockModel model(space, p);
  const Vector x = Vector::Ones(1);
  for (int m = 1; m <= 8; ++m) {
    CHECK(creation_norm(x, m, model) == doctest::Approx(creation_norm_tensor_powers(x, m, p, space)).epsilon(1e-12));
  }
}

TEST_CASE("traciality defect") {
  for (int s : {1, -1}) {
    for (int t : {1, -1}) {
      const TraceDefect zero = trace_defect({0.0, 0.4}, s, t);
      CHECK(std::abs(zero.measured) < 1e-14);
      CHECK(std::abs(zero.witness) < 1e-14);
      for (double a : {-0.5, 0.5}) {
        for (double q : {-0.5, 0.0, 0.5}) {
          const TraceDefect td = trace_defect({a, q}, s, t);
          CHECK(std::abs(td.measured) < 1e-13);
          CHECK(td.witness == doctest::Approx(td.unit_formula).epsilon(1e-12));
          CHECK(td.printed_formula == doctest::Approx(4.0 * td.unit_formula));
        }
      }
    }
  }
  const TraceDefect ex = trace_defect({0.5, 0.0}, 1, 1);
  CHECK(ex.printed_formula == doctest::Approx(3.0));
  CHECK(ex.witness == doctest::Approx(0.75));
}

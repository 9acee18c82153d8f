#include "doctest.h"
#include "support.hpp"

#include "divlab/divergence.hpp"
#include "divlab/errors.hpp"
#include "divlab/perturbation.hpp"

#include <cmath>

using namespace divlab;
using testing::diag_state;
using testing::rng_for;

TEST_CASE("perturbed states") {
  const PerturbedState ps = perturbed_state(diag_state({0.5, 0.5}), HermitianOperator::diagonal({0.0, -std::log(2.0)}));
  CHECK((ps.result.op().matrix() - HermitianOperator::diagonal({0.5, 0.25}).matrix()).norm() < 1e-14);
  CHECK(ps.log_partition == doctest::Approx(std::log(0.75)).epsilon(1e-14));

  Rng rng = rng_for(0, 80);
  const PositiveFunctional phi = random_faithful_state(3, rng).scaled(2.0);
  const PerturbedState zero = perturbed_state(phi, HermitianOperator::zero(3));
  CHECK((zero.result.op().matrix() - phi.op().matrix()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(zero.log_partition == doctest::Approx(std::log(2.0)).epsilon(1e-13));

  const PerturbedState shift = perturbed_state(phi, HermitianOperator::identity(3) * 0.7);
  CHECK((shift.result.op().matrix() - std::exp(0.7) * phi.op().matrix()).cwiseAbs().maxCoeff() < 1e-13);

  try {
    perturbed_state(diag_state({1.0, 0.0}), HermitianOperator::zero(2));
    FAIL("singular phi accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFaithful);
  }
}

TEST_CASE("matrix exponential and log") {
  for (int t = 0; t < 10; ++t) {
    Rng rng = rng_for(t, 81);
    const HermitianOperator h = random_hermitian(3, rng);
    const ComplexMatrix oracle = h.matrix().exp();
    CHECK((hermitian_exp(h).matrix() - oracle).cwiseAbs().maxCoeff() < 1e-12 * oracle.norm());
    CHECK(log_trace_exp(h) == doctest::Approx(std::log(oracle.trace().real())).epsilon(1e-12));
    const PositiveFunctional p = random_faithful_state(3, rng);
    CHECK((faithful_log(p).matrix() - testing::oracle_log(p.op().matrix())).cwiseAbs().maxCoeff() < 1e-10);
  }
  CHECK(log_trace_exp(HermitianOperator::diagonal({800.0, 0.0})) == doctest::Approx(800.0));
}

TEST_CASE("entropy decomposition") {
  Rng rng = rng_for(0, 82);
  const PositiveFunctional rho = random_state(3, rng);
  const PositiveFunctional phi = random_faithful_state(3, rng);
  CHECK(entropy_decomposition_check(rho, phi, HermitianOperator::zero(3)).residual == 0.0);
  CHECK(entropy_decomposition_check(rho, phi, HermitianOperator::identity(3) * 1.3).residual <= 1e-10);
  for (int t = 0; t < 20; ++t) {
    Rng r = rng_for(t, 83);
    const PositiveFunctional a = random_state(2 + t % 3, r, 1 + t % 2);
    const PositiveFunctional b = random_faithful_state(2 + t % 3, r);
    CHECK(entropy_decomposition_check(a, b, random_hermitian(2 + t % 3, r)).residual <= 1e-10);
  }
}

TEST_CASE("Petz variational formula") {
  const PositiveFunctional omega = diag_state({0.5, 0.5});
  const PositiveFunctional phi = diag_state({0.75, 0.25});
  PetzOptions opt;
  opt.start = PetzStart::Zero;
  const PetzResult r = petz_variational_entropy(omega, phi, opt);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-8));
  // The maximizer is diag(ln(2/3), ln 2) up to a multiple of the identity.
  const double shift = r.maximizer(0, 0).real() - std::log(2.0 / 3.0);
  CHECK(r.maximizer(1, 1).real() - shift == doctest::Approx(std::log(2.0)).epsilon(1e-5));
  for (double g : r.history) CHECK(g <= 0.5 * std::log(4.0 / 3.0) + 1e-12);

  const PetzResult same = petz_variational_entropy(phi, phi, opt);
  CHECK(std::abs(same.value) < 1e-10);
  CHECK(std::abs(same.maximizer(0, 0) - same.maximizer(1, 1)) < 1e-5);

  const PetzResult singular = petz_variational_entropy(diag_state({1.0, 0.0}), phi);
  CHECK(singular.regularized);
  CHECK(singular.value <= relative_entropy(diag_state({1.0, 0.0}), phi) + 1e-12);
  CHECK(singular.value == doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-6));

  for (int t = 0; t < 10; ++t) {
    Rng rng = rng_for(t, 84);
    const PositiveFunctional o = random_faithful_state(3, rng);
    const PositiveFunctional p = random_faithful_state(3, rng);
    const PetzResult pr = petz_variational_entropy(o, p, opt);
    CHECK(pr.iterations <= 500);
    CHECK(std::abs(pr.value - relative_entropy(o, p)) <= 1e-6);
    CHECK(petz_objective(o, p, pr.maximizer) == doctest::Approx(pr.value).epsilon(1e-12));
  }
}

TEST_CASE("Umegaki consistency") {
  for (int t = 0; t < 10; ++t) {
    Rng rng = rng_for(t, 85);
    const PositiveFunctional phi = random_faithful_state(3, rng);
    CHECK(umegaki_check(random_faithful_state(3, rng), phi) <= 1e-9);
    CHECK(umegaki_check(phi, random_hermitian(3, rng)) <= 1e-9);
  }
  CHECK(umegaki_check(diag_state({0.5, 0.5}), HermitianOperator::zero(2)) == 0.0);
}

TEST_CASE("Gibbs minimum") {
  for (int t = 0; t < 5; ++t) {
    Rng rng = rng_for(t, 86);
    const PositiveFunctional phi = random_faithful_state(3, rng);
    const HermitianOperator h = random_hermitian(3, rng);
    const GibbsMinimum g = gibbs_minimum(phi, h);
    CHECK(g.converged);
    CHECK(g.value == doctest::Approx(g.closed_form).epsilon(1e-8));
    CHECK(g.minimizer.trace() == doctest::Approx(1.0));
  }
}

#include "doctest.h"
#include "support.hpp"

#include "divlab/divergence.hpp"
#include "divlab/errors.hpp"
#include "divlab/extended_real.hpp"
#include "divlab/fclass.hpp"
#include "divlab/variational.hpp"

#include <cmath>

using namespace divlab;
using testing::diag_state;
using testing::rng_for;

namespace {
const double kCommuting = 0.5 * std::log(4.0 / 3.0);
}

TEST_CASE("closed-form inner minimum") {
  const ModularSpectrum scalar = relative_modular_spectrum(diag_state({1.0}), diag_state({1.0}));
  CHECK(inner_minimum(scalar, 1.0) == doctest::Approx(0.5));

  const ModularSpectrum c = relative_modular_spectrum(diag_state({0.5, 0.5}), diag_state({0.75, 0.25}));
  CHECK(inner_minimum(c, 1.0) == doctest::Approx(0.3 + 1.0 / 6.0).epsilon(1e-12));

  double prev = kInf;
  for (double s : {1e-2, 1.0, 1e2, 1e4, 1e8}) {
    const double m = inner_minimum(c, s);
    CHECK(m < prev);
    prev = m;
  }
  CHECK(prev < 1e-8);

  try {
    inner_minimum(c, 0.0);
    FAIL("s = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
  CHECK_THROWS_AS(inner_minimum(c, -1.0), Error);
}

TEST_CASE("numeric inner minimum matches the closed form") {
  for (int t = 0; t < 20; ++t) {
    Rng rng = rng_for(t, 50);
    const Index d = 2 + t % 3;
    const PositiveFunctional rho = random_state(d, rng, 1 + t % d);
    const PositiveFunctional sigma = random_state(d, rng, 1 + (t / 2) % d);
    const ModularSpectrum spec = relative_modular_spectrum(rho, sigma);
    for (double s : {0.1, 1.0, 7.0}) {
      const double closed = inner_minimum(spec, s);
      const InnerMinimizer direct = inner_minimum_numeric(rho, sigma, s, NumericMode::Direct);
      CHECK(direct.value == doctest::Approx(closed).epsilon(1e-9));
      CHECK(inner_objective(rho, sigma, s, direct.x) == doctest::Approx(direct.value).epsilon(1e-12));
      // The minimizer beats perturbations of itself.
      const ComplexMatrix bump = 1e-3 * complex_gaussian(d, d, rng);
      CHECK(inner_objective(rho, sigma, s, direct.x + bump) >= direct.value - 1e-12);
    }
  }
  Rng rng = rng_for(0, 51);
  const PositiveFunctional rho = random_faithful_state(3, rng);
  const PositiveFunctional sigma = random_faithful_state(3, rng);
  const InnerMinimizer cg = inner_minimum_numeric(rho, sigma, 2.0, NumericMode::ConjugateGradient);
  CHECK(cg.value == doctest::Approx(inner_minimum(relative_modular_spectrum(rho, sigma), 2.0)).epsilon(1e-9));
  CHECK(cg.iterations > 0);
}

TEST_CASE("inner minimum with zero rho") {
  const PositiveFunctional zero = make_functional(HermitianOperator::zero(2));
  const InnerMinimizer m = inner_minimum_numeric(zero, diag_state({0.75, 0.25}), 1.0);
  CHECK(std::abs(m.value) < 1e-12);
  CHECK(inner_minimum(relative_modular_spectrum(zero, diag_state({0.75, 0.25})), 1.0) == 0.0);
}

TEST_CASE("variational value converges to the spectral value") {
  const ConvexFunctionSpec tl = catalog_lookup("t_log_t");
  const VariationalResult r = variational_Sf(tl, diag_state({0.5, 0.5}), diag_state({0.75, 0.25}));
  CHECK(std::abs(r.value - kCommuting) <= 1e-3);
  CHECK(r.value <= kCommuting + 1e-9);
  CHECK(r.report.monotone);
  CHECK_FALSE(r.report.declared_infinite);
  CHECK(r.report.n_schedule.front() == 1);
  CHECK(r.report.n_schedule.back() == 1 << 14);
  CHECK(r.report.n_schedule.size() == r.report.values.size());
  CHECK(r.report.quadrature_nodes > 0);

  for (const auto& f : standard_catalog(0.5)) {
    CAPTURE(f.name);
    for (int t = 0; t < 4; ++t) {
      Rng rng = rng_for(t, 52);
      const PositiveFunctional rho = random_faithful_state(3, rng, kWellConditionedMix);
      const PositiveFunctional sigma = random_faithful_state(3, rng, kWellConditionedMix);
      const double exact = standard_f_divergence(f, rho, sigma);
      const VariationalResult v = variational_Sf(f, rho, sigma);
      CHECK(std::abs(v.value - exact) <= std::max(1e-3, 1e-3 * std::abs(exact)));
      CHECK(v.report.monotone);
      const double closed = variational_value_at_n(f, rho, sigma, 8, InnerSolver::ClosedForm);
      const double numeric = variational_value_at_n(f, rho, sigma, 8, InnerSolver::Numeric);
      CHECK(numeric == doctest::Approx(closed).epsilon(1e-8));
    }
  }
}

TEST_CASE("variational value detects infinity") {
  const VariationalResult r =
      variational_Sf(catalog_lookup("t_log_t"), diag_state({1.0, 0.0}), diag_state({0.0, 1.0}));
  CHECK(is_plus_inf(r.value));
  CHECK(r.report.declared_infinite);
}

TEST_CASE("kosaki formula") {
  const PositiveFunctional rho = diag_state({0.75, 0.25});
  const PositiveFunctional sigma = diag_state({0.5, 0.5});
  const ConvexFunctionSpec nl = catalog_lookup("neg_log");
  for (int n : {1, 2, 8, 64}) {
    CHECK(kosaki_entropy(rho, sigma, n) == doctest::Approx(variational_value_at_n(nl, rho, sigma, n)).epsilon(1e-9));
  }
  CHECK(std::abs(kosaki_entropy(rho, sigma, 1 << 20) - kCommuting) < 1e-4);

  Rng rng = rng_for(3, 53);
  const PositiveFunctional r2 = random_faithful_state(3, rng);
  const PositiveFunctional s2 = random_state(3, rng, 2);
  for (int n : {2, 16, 256}) {
    CHECK(kosaki_entropy(r2, s2, n) == doctest::Approx(variational_value_at_n(nl, r2, s2, n)).epsilon(1e-9));
  }
}

TEST_CASE("divergence heuristic") {
  std::vector<double> log_growth;
  for (int k = 0; k < 10; ++k) log_growth.push_back(0.5 * k * std::log(2.0));
  CHECK(looks_divergent(log_growth, 1e12));
  std::vector<double> converging;
  for (int k = 0; k < 10; ++k) converging.push_back(1.0 - std::pow(0.5, k));
  CHECK_FALSE(looks_divergent(converging, 1e12));
  CHECK(looks_divergent({1.0, 2e12, 3e12}, 1e12));
}

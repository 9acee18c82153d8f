#include "doctest.h"
#include "support.hpp"

#include "divlab/channels.hpp"
#include "divlab/divergence.hpp"
#include "divlab/errors.hpp"
#include "divlab/fclass.hpp"
#include "divlab/renyi.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace divlab;
using testing::diag_state;
using testing::plus_state;
using testing::rng_for;

namespace {
std::vector<HermitianOperator> computational_basis() {
  return {HermitianOperator::diagonal({1.0, 0.0}), HermitianOperator::diagonal({0.0, 1.0})};
}
}  // namespace

TEST_CASE("channel examples") {
  const Channel deph = pinching_channel(computational_basis());
  CHECK(deph.trace_preserving());
  CHECK(deph.unital());
  CHECK((apply_channel_predual(deph, plus_state()).op().matrix() - HermitianOperator::diagonal({0.5, 0.5}).matrix())
            .norm() < 1e-15);

  Rng rng = rng_for(0, 70);
  const PositiveFunctional p = random_state(3, rng);
  CHECK((apply_channel_predual(identity_channel(3), p).op().matrix() - p.op().matrix()).norm() < 1e-15);

  RealMatrix bell = RealMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const PositiveFunctional b = testing::from_real(bell);
  for (bool second : {true, false}) {
    const PositiveFunctional red = apply_channel_predual(partial_trace_channel(2, 2, second), b);
    CHECK(red.dim() == 2);
    CHECK((red.op().matrix() - HermitianOperator::diagonal({0.5, 0.5}).matrix()).norm() < 1e-14);
  }
  CHECK(partial_trace_channel(2, 3).trace_preserving());
  CHECK(partial_trace_channel(2, 3).output_dim() == 2);

  try {
    apply_channel_predual(identity_channel(2), p);
    FAIL("dimension mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionError);
  }
  CHECK_THROWS_AS(Channel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}), Error);
}

TEST_CASE("random channels") {
  const Channel a = random_cptp(3, 2, 4, 11);
  const Channel b = random_cptp(3, 2, 4, 11);
  REQUIRE(a.kraus().size() == 4);
  for (std::size_t k = 0; k < a.kraus().size(); ++k) CHECK((a.kraus()[k].array() == b.kraus()[k].array()).all());
  CHECK(a.trace_preserving());
  CHECK(a.completeness_residual() < 1e-12);
  CHECK(a.input_dim() == 3);
  CHECK(a.output_dim() == 2);

  const Channel u = random_cptp(3, 3, 1, 5);
  REQUIRE(u.kraus().size() == 1);
  const ComplexMatrix& k = u.kraus()[0];
  CHECK((k.adjoint() * k - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((k * k.adjoint() - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(u.unital());

  for (int t = 0; t < 20; ++t) {
    Rng rng = rng_for(t, 71);
    const PositiveFunctional p = random_state(3, rng);
    const Channel ch = random_cptp(3, 1 + t % 4, 3, 100 + t);
    CHECK(apply_channel_predual(ch, p).trace() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("data processing on a few instances") {
  const ConvexFunctionSpec tl = catalog_lookup("t_log_t");
  for (int t = 0; t < 20; ++t) {
    Rng rng = rng_for(t, 72);
    const PositiveFunctional rho = random_state(3, rng);
    const PositiveFunctional sigma = random_faithful_state(3, rng);
    const Channel ch = random_cptp(3, 2, 3, 500 + t);
    const double before = standard_f_divergence(tl, rho, sigma);
    const double after = standard_f_divergence(tl, apply_channel_predual(ch, rho), apply_channel_predual(ch, sigma));
    CHECK(after <= before + 1e-9);
    CHECK(d_alpha(apply_channel_predual(ch, rho), apply_channel_predual(ch, sigma), 0.5) <=
          d_alpha(rho, sigma, 0.5) + 1e-9);
  }
}

TEST_CASE("subalgebra restriction") {
  Rng rng = rng_for(1, 73);
  const ComplexMatrix u = random_unitary(2, rng);
  const ComplexMatrix e = u.col(0) * u.col(0).adjoint();
  const std::vector<HermitianOperator> part = {HermitianOperator::symmetrize(e),
                                               HermitianOperator::symmetrize(ComplexMatrix::Identity(2, 2) - e)};
  const PositiveFunctional sigma = random_state(2, rng);
  const PositiveFunctional r = restrict_to_subalgebra(sigma, part);
  const RealVector ev = r.spectrum().eigenvalues;
  const double se = sigma.expectation(part[0]);
  const double sp = sigma.expectation(part[1]);
  CHECK(ev(0) == doctest::Approx(std::min(se, sp)).epsilon(1e-12));
  CHECK(ev(1) == doctest::Approx(std::max(se, sp)).epsilon(1e-12));

  const PositiveFunctional full = restrict_to_subalgebra(plus_state(), computational_basis());
  CHECK((full.op().matrix() - HermitianOperator::diagonal({0.5, 0.5}).matrix()).norm() < 1e-15);
  const std::vector<HermitianOperator> trivial = {HermitianOperator::identity(2)};
  CHECK((restrict_to_subalgebra(sigma, trivial).op().matrix() - sigma.op().matrix()).norm() < 1e-15);
}

TEST_CASE("channel JSON") {
  const Channel a = random_cptp(2, 2, 2, 3);
  const Channel b = channel_from_json(channel_to_json(a));
  REQUIRE(b.kraus().size() == 2);
  for (std::size_t k = 0; k < 2; ++k) CHECK((a.kraus()[k] - b.kraus()[k]).norm() == 0.0);

  const nlohmann::json j = {{"kraus", {{{"re", {{1.0, 0.0}, {0.0, 1.0}}}}}}};
  CHECK(channel_from_json(j).trace_preserving());
  CHECK_THROWS_AS(channel_from_json(nlohmann::json::object()), Error);
  CHECK_THROWS_AS(channel_from_json({{"kraus", nlohmann::json::array()}}), Error);

  const char* path = "channel_roundtrip.json";
  {
    std::ofstream out(path);
    out << channel_to_json(a).dump();
  }
  CHECK(read_channel_file(path).kraus().size() == 2);
  std::remove(path);
}

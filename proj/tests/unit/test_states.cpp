#include "doctest.h"
#include "support.hpp"

#include "divlab/errors.hpp"
#include "divlab/states.hpp"

#include <cstdio>
#include <fstream>

using namespace divlab;
using testing::diag_state;
using testing::rng_for;

TEST_CASE("make_functional") {
  CHECK(diag_state({0.5, 0.5}).trace() == doctest::Approx(1.0));
  const PositiveFunctional zero = make_functional(HermitianOperator::zero(2));
  CHECK(zero.trace() == 0.0);
  CHECK_FALSE(zero.is_faithful());

  const PositiveFunctional clipped = diag_state({-1e-13, 1.0});
  CHECK(clipped.op()(0, 0).real() == 0.0);
  CHECK(clipped.spectrum().eigenvalues.minCoeff() == 0.0);

  try {
    diag_state({-0.01, 1.0});
    FAIL("negative functional accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPositive);
  }
}

TEST_CASE("direct sums") {
  const PositiveFunctional s = direct_sum(diag_state({1.0}), diag_state({1.0}));
  CHECK((s.op().matrix() - ComplexMatrix::Identity(2, 2)).norm() == 0.0);

  const PositiveFunctional p = diag_state({0.5, 0.0});
  const PositiveFunctional q = diag_state({0.0, 0.3});
  const HermitianOperator sup = direct_sum(p, q).support();
  const RealVector expected = (RealVector(4) << 1, 0, 0, 1).finished();
  CHECK((sup.matrix().diagonal().real() - expected).norm() < 1e-14);

  for (int t = 0; t < 10; ++t) {
    Rng rng = rng_for(t, 10);
    const PositiveFunctional a = random_state(2 + t % 3, rng).scaled(0.7);
    const PositiveFunctional b = random_state(1 + t % 2, rng).scaled(1.9);
    const PositiveFunctional ab = direct_sum(a, b);
    CHECK(ab.trace() == doctest::Approx(a.trace() + b.trace()).epsilon(1e-12));
    CHECK(ab.dim() == a.dim() + b.dim());
    // Spectra concatenate.
    RealVector joint(ab.dim());
    joint << a.spectrum().eigenvalues, b.spectrum().eigenvalues;
    std::sort(joint.data(), joint.data() + joint.size());
    CHECK((joint - ab.spectrum().eigenvalues).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("compressions") {
  const PositiveFunctional half = diag_state({0.5, 0.5});
  const PositiveFunctional same = compress(half, HermitianOperator::identity(2));
  CHECK((same.op().matrix() - half.op().matrix()).norm() < 1e-15);

  const PositiveFunctional c = compress(half, HermitianOperator::diagonal({1.0, 0.0}));
  CHECK(c.dim() == 1);
  CHECK(c.trace() == doctest::Approx(0.5));
  CHECK(compress(testing::plus_state(), HermitianOperator::diagonal({1.0, 0.0})).trace() == doctest::Approx(0.5));

  try {
    compress(half, HermitianOperator::diagonal({0.5, 0.0}));
    FAIL("non-projection accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidProjection);
  }

  for (int t = 0; t < 20; ++t) {
    Rng rng = rng_for(t, 11);
    const Index d = 2 + t % 4;
    const PositiveFunctional p = random_state(d, rng);
    const HermitianOperator e = random_projection(d, 1 + t % d, rng);
    CHECK(compress(p, e).trace() <= p.trace() + 1e-12);
  }
}

TEST_CASE("classical distributions") {
  CHECK(ClassicalDistribution({0.25, 0.75}).total() == doctest::Approx(1.0));
  CHECK_THROWS_AS(ClassicalDistribution({0.5, -0.1}), Error);
}

TEST_CASE("state JSON round trip") {
  const nlohmann::json j = {{"dim", 2}, {"re", {{0.5, 0.0}, {0.0, 0.5}}}, {"im", {{0.0, 0.25}, {-0.25, 0.0}}}};
  const PositiveFunctional p = state_from_json(j);
  CHECK(p.op()(0, 1) == Complex(0.0, 0.25));
  const PositiveFunctional q = state_from_json(state_to_json(p));
  CHECK((q.op().matrix() - p.op().matrix()).norm() == 0.0);

  const nlohmann::json no_im = {{"dim", 2}, {"re", {{0.75, 0.0}, {0.0, 0.25}}}};
  CHECK(state_from_json(no_im).trace() == doctest::Approx(1.0));

  const nlohmann::json wrong_dim = {{"dim", 3}, {"re", {{1.0, 0.0}, {0.0, 0.0}}}};
  CHECK_THROWS_AS(state_from_json(wrong_dim), Error);
  const nlohmann::json not_psd = {{"dim", 2}, {"re", {{1.0, 2.0}, {2.0, 1.0}}}};
  CHECK_THROWS_AS(state_from_json(not_psd), Error);
  const nlohmann::json missing = {{"dim", 2}};
  CHECK_THROWS_AS(state_from_json(missing), Error);

  const char* path = "states_roundtrip.json";
  {
    std::ofstream out(path);
    out << state_to_json(p).dump();
  }
  CHECK((read_state_file(path).op().matrix() - p.op().matrix()).norm() == 0.0);
  std::remove(path);
  CHECK_THROWS_AS(read_state_file("does/not/exist.json"), Error);
}

#include "doctest.h"

#include "divlab/errors.hpp"
#include "divlab/extended_real.hpp"
#include "divlab/report.hpp"

#include <cmath>

using namespace divlab;

TEST_CASE("extended real formatting") {
  CHECK(format_extended(kInf) == "+inf");
  CHECK(format_extended(-kInf) == "-inf");
  CHECK(parse_extended("+inf") == kInf);
  CHECK(parse_extended("inf") == kInf);
  CHECK(parse_extended("-inf") == -kInf);
  for (double x : {0.0, 1.0, -2.5, 0.1438410362258904, 1e-300, 6.02e23}) {
    CHECK(parse_extended(format_extended(x)) == x);
  }
  CHECK(format_extended(0.125, 12) == "0.125");
  CHECK_THROWS_AS(parse_extended("abc"), Error);
  CHECK_THROWS_AS(parse_extended("1.0x"), Error);
  CHECK_THROWS_AS(parse_extended("nan"), Error);
  CHECK_THROWS_AS(format_extended(std::nan("")), Error);
}

TEST_CASE("extended arithmetic helpers") {
  CHECK(boundary_product(kInf, 0.0) == 0.0);
  CHECK(boundary_product(kInf, 0.3) == kInf);
  CHECK(boundary_product(2.0, 0.25) == 0.5);
  CHECK(ext_close(kInf, kInf, 0.0));
  CHECK_FALSE(ext_close(kInf, 1e308, 1.0));
  CHECK(ext_close(1.0, 1.0 + 1e-12, 1e-10));
}

TEST_CASE("JSON sentinels") {
  CHECK(extended_to_json(kInf) == "+inf");
  CHECK(extended_to_json(1.5) == 1.5);
  CHECK(extended_from_json(nlohmann::json("+inf")) == kInf);
  CHECK(extended_from_json(nlohmann::json(2)) == 2.0);
  CHECK_THROWS_AS(extended_from_json(nlohmann::json::array()), Error);
}

TEST_CASE("report round trip") {
  RunReport r;
  r.command = "compute";
  r.inputs = {{"f", "t_log_t"}};
  r.results = {{"spectral", kInf}, {"variational", 0.25}};
  r.suite_outcomes = {{"dpi", "monotone", 10, 1e-12, 1e-9, true}, {"dpi", "other", 10, kInf, 1e-9, false}};
  r.seed = 42;
  r.wall_time = 0.5;
  CHECK_FALSE(r.all_passed());

  const nlohmann::json j = report_to_json(r);
  CHECK(j.at("results").at(0).at("value") == "+inf");
  const RunReport back = report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.command == "compute");
  CHECK(back.results.size() == 2);
  CHECK(back.results[0].value == kInf);
  CHECK(back.results[1].value == 0.25);
  CHECK(back.suite_outcomes.size() == 2);
  CHECK(back.suite_outcomes[1].max_violation == kInf);
  CHECK_FALSE(back.suite_outcomes[1].passed);
  CHECK(back.seed == 42);
  CHECK(back.inputs == r.inputs);
  CHECK(report_to_json(back) == j);

  CHECK_THROWS_AS(report_from_json(nlohmann::json::object()), Error);
}

#include "doctest.h"
#include "gsw/properties.hpp"

using namespace gsw;

namespace {

void check_report(const PropertyReport& r) {
  CAPTURE(r.name);
  CAPTURE(r.worst_violation);
  CHECK(r.passed());
  CHECK(r.failures <= r.trials);
  CHECK(r.trials > 0);
}

}  // namespace

TEST_CASE("metric axioms hold for the shared-slice estimators") {
  check_report(check_metric_axioms(Method::sw, DefiningFunctionSpec::linear(2), 50, 1));
  check_report(check_metric_axioms(Method::gsw, DefiningFunctionSpec::polynomial(2, 3), 50, 1));
  check_report(check_metric_axioms(Method::gsw, DefiningFunctionSpec::circular(2, 1.0), 50, 1));
  check_report(check_metric_axioms(Method::max_sw, DefiningFunctionSpec::linear(2), 20, 1));
  check_report(check_metric_axioms(Method::max_gsw, DefiningFunctionSpec::polynomial(2, 3), 10, 1));
}

TEST_CASE("a single degenerate trial passes") {
  const auto r = check_metric_axioms(Method::sw, DefiningFunctionSpec::linear(2), 1, 3);
  CHECK(r.trials == 1);
  CHECK(r.passed());
}

TEST_CASE("gradient checks") {
  for (const auto& spec : {DefiningFunctionSpec::linear(2), DefiningFunctionSpec::polynomial(2, 3)}) {
    const auto reports = check_gradients(spec, 30, 2);
    CHECK(reports.size() == 3);
    for (const auto& r : reports) {
      check_report(r);
      CHECK(r.excluded == 0);
    }
  }
  const auto linear = check_gradients(DefiningFunctionSpec::linear(2), 30, 2);
  CHECK(linear[0].worst_violation < 1e-6);
  // Every tenth circular trial probes a point near x = r theta and is excluded.
  for (const auto& r : check_gradients(DefiningFunctionSpec::circular(2, 1.0), 30, 2)) {
    check_report(r);
    if (r.name.find("flow") == std::string::npos) CHECK(r.excluded >= 3);
  }
}

TEST_CASE("bounds") {
  const auto reports = check_bounds(30, 4);
  CHECK(reports.size() == 5);
  for (const auto& r : reports) check_report(r);
}

TEST_CASE("method names") {
  CHECK(parse_method("max-sw") == Method::max_sw);
  CHECK(parse_method("max_gsw") == Method::max_gsw);
  CHECK(to_string(Method::gsw) == "gsw");
  CHECK_THROWS_AS(parse_method("kl"), std::invalid_argument);
}

#include "doctest.h"
#include "shellforge/errors.hpp"
#include "shellforge/harness.hpp"

using namespace shellforge;

TEST_CASE("canonical_form is invariant under relabelling") {
  const Clutter a(5, 3, {0b00111, 0b01011});
  // Swap vertices 0 and 4.
  const Clutter b(5, 3, {0b10110, 0b11010});
  CHECK(harness::canonical_form(a) == harness::canonical_form(b));
  const Clutter c(5, 3, {0b00111, 0b11100});
  CHECK_FALSE(harness::canonical_form(a) == harness::canonical_form(c));
}

TEST_CASE("verify_theorem small dimensions") {
  harness::TheoremRun d1 = harness::verify_theorem(1);
  CHECK(d1.clutters == 63);
  CHECK(d1.violations == 0);
  CHECK(d1.shellable == 60);  // all but the three pairs of disjoint edges
  harness::TheoremRun d2 = harness::verify_theorem(2);
  CHECK(d2.clutters == 1023);
  CHECK(d2.violations == 0);
  CHECK_THROWS_AS(harness::verify_theorem(4), ArgumentError);
}

TEST_CASE("sharpness with zero budget is inconclusive") {
  harness::SharpnessOptions opt;
  opt.budget_seconds = 0.0;
  harness::SharpnessRun run = harness::search_sharpness(opt);
  CHECK_FALSE(run.found);
  CHECK(run.candidates == 0);
  CHECK(harness::report_for(run, opt).get("verdict") == "inconclusive");
}

TEST_CASE("sharpness search is reproducible") {
  harness::SharpnessOptions opt;
  opt.budget_seconds = 120.0;
  opt.seed = 3;
  harness::SharpnessRun a = harness::search_sharpness(opt);
  harness::SharpnessRun b = harness::search_sharpness(opt);
  REQUIRE(a.found);
  CHECK(a.revalidated);
  CHECK(a.witness == b.witness);
  CHECK(a.stuck_order == b.stuck_order);
  CHECK(harness::report_for(a, opt).format() == harness::report_for(b, opt).format());
}

TEST_CASE("simon report") {
  harness::SimonRun run = harness::check_skeleton(4, 3);
  CHECK(run.certificate.verdict == Verdict::Extendable);
  CHECK(harness::report_for(run).get("facets") == "1");
}

#include <doctest.h>

#include <cmath>

#include "monocomp/bounds.hpp"
#include "monocomp/errors.hpp"
#include "monocomp/rng.hpp"

using namespace monocomp;

namespace {

// Independent extended-precision evaluation of the sparseness fraction:
// ((1/3) c^c / (e^(1+c) d^c))^(1/(c-1)), done in log space throughout.
long double delta_reference(long double d, long double c) {
  const long double log_base =
      -logl(3.0L) + c * logl(c) - (1.0L + c) - c * logl(d);
  return expl(log_base / (c - 1.0L));
}

long double bound_reference(long double c1, long double c2, long double k) {
  return (k / 2.0L - 1.0L) * (sqrtl(c1 / c2) - 1.0L);
}

double rel_err(double got, long double want) {
  return static_cast<double>(fabsl(static_cast<long double>(got) - want) / fabsl(want));
}

}  // namespace

TEST_CASE("sparseness fraction matches extended-precision evaluation") {
  // 50 pseudo-random (d, c) pairs across the admissible domain.
  Rng rng(splitmix64(20250819));
  for (int t = 0; t < 50; ++t) {
    const double d = 2.0 + static_cast<double>(bounded(rng, 29));  // 2..30
    const double cmax = std::min(d - 0.05, 6.0);
    const double u = static_cast<double>(bounded(rng, 1u << 20)) / (1u << 20);
    const double c = 1.1 + u * (cmax - 1.1);
    CAPTURE(d);
    CAPTURE(c);
    const double got = sparseness_delta(d, c);
    CHECK(rel_err(got, delta_reference(d, c)) <= 1e-12);
  }
}

TEST_CASE("sparseness fraction frozen values") {
  // Degree 5 with c = 5/4 and c = 9/8: the two thresholds used by the
  // regular-model constants at r = 2.
  CHECK(sparseness_delta(5, 1.25) ==
        doctest::Approx(1.4878689728814536e-09).epsilon(1e-12));
  CHECK(sparseness_delta(5, 1.125) ==
        doctest::Approx(9.3253777449243713e-18).epsilon(1e-12));
}

TEST_CASE("sparseness fraction domain checks") {
  CHECK_THROWS_AS((void)sparseness_delta(5, 1.0), config_error);
  CHECK_THROWS_AS((void)sparseness_delta(5, 0.5), config_error);
  CHECK_THROWS_AS((void)sparseness_delta(2, 2.0), config_error);  // needs d > c
  CHECK_THROWS_AS((void)sparseness_delta(5, 5.5), config_error);
  CHECK_NOTHROW((void)sparseness_delta(5, 4.999));
}

TEST_CASE("long cycle bound matches extended-precision evaluation") {
  Rng rng(splitmix64(77001122));
  for (int t = 0; t < 50; ++t) {
    const double u1 = static_cast<double>(bounded(rng, 1u << 20)) / (1u << 20);
    const double u2 = static_cast<double>(bounded(rng, 1u << 20)) / (1u << 20);
    const double c2 = 1.0 + u2;                       // (1, 2)
    const double c1 = c2 + 0.01 + u1 * 2.0;           // above c2
    const double k = 3.0 + static_cast<double>(bounded(rng, 1'000'000));
    CAPTURE(c1);
    CAPTURE(c2);
    CAPTURE(k);
    const CycleBound b = long_cycle_bound(c1, c2, k);
    CHECK(rel_err(b.value, bound_reference(c1, c2, k)) <= 1e-12);
    CHECK(b.hypothesis_holds == (b.value >= 2.0));
  }
}

TEST_CASE("long cycle bound frozen value and status") {
  const CycleBound b = long_cycle_bound(1.25, 1.125, 100);
  CHECK(b.value == doctest::Approx(2.6505351160835322).epsilon(1e-12));
  CHECK(b.hypothesis_holds);

  const CycleBound small = long_cycle_bound(1.25, 1.125, 10);
  CHECK_FALSE(small.hypothesis_holds);  // (10/2 - 1) * 0.054 ~ 0.22

  CHECK_THROWS_AS((void)long_cycle_bound(1.1, 1.2, 10), config_error);
  CHECK_THROWS_AS((void)long_cycle_bound(1.2, 0.0, 10), config_error);
  CHECK_THROWS_AS((void)long_cycle_bound(1.2, 1.1, 0), config_error);
}

TEST_CASE("regular-model constants") {
  for (int r = 2; r <= 6; ++r) {
    const CycleLawConstants k = regular_cycle_constants(r);
    CHECK(k.r == r);
    CHECK(k.degree == 2 * r + 1);
    CHECK(k.c1 == doctest::Approx(1.0 + 1.0 / (2 * r)).epsilon(1e-15));
    CHECK(k.c2 == doctest::Approx(1.0 + 1.0 / (4 * r)).epsilon(1e-15));
    CHECK(rel_err(k.delta, delta_reference(k.degree, 1.0L + 0.25L / r)) <= 1e-12);

    // guaranteed_length is the bound evaluated at k = delta * n
    const double n = 1e20;  // far enough out that the bound is positive
    const long double expect =
        bound_reference(k.c1, k.c2, static_cast<long double>(k.delta) * 1e20L);
    CHECK(rel_err(k.guaranteed_length(n), expect) <= 1e-10);
  }
  CHECK_THROWS_AS((void)regular_cycle_constants(0), config_error);
}

TEST_CASE("digraph-sum constants") {
  for (int r = 2; r <= 6; ++r) {
    const CycleLawConstants k = kout_cycle_constants(r);
    CHECK(k.r == r);
    CHECK(k.degree == r + 1);
    CHECK(k.c1 == doctest::Approx(1.0 + 1.0 / r).epsilon(1e-15));
    CHECK(k.c2 == doctest::Approx(1.0 + 1.0 / (2 * r)).epsilon(1e-15));
    CHECK(rel_err(k.delta, delta_reference(k.degree, 1.0L + 0.5L / r)) <= 1e-12);
  }
  CHECK_THROWS_AS((void)kout_cycle_constants(1), config_error);
}

TEST_CASE("guaranteed length is negative at modest sizes") {
  // The admissible fraction delta(5, 1.125) is about 9.3e-18, so the
  // guarantee only activates once delta*n/2 exceeds 1, i.e. for n beyond
  // roughly 2.1e17; every simulable size sits far below that.
  const CycleLawConstants k = regular_cycle_constants(2);
  CHECK(k.guaranteed_length(1e6) < 0.0);
  CHECK(k.guaranteed_length(1e10) < 0.0);
  CHECK(k.guaranteed_length(1e17) < 0.0);
  CHECK(k.guaranteed_length(1e18) > 0.0);
  CHECK(k.guaranteed_length(1e20) > 0.0);
}

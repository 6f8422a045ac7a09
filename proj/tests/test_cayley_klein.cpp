#include <doctest.h>

#include <cmath>

#include "dageom/cayley_klein.hpp"
#include "dageom/sampling.hpp"

using dageom::Cx;
using dageom::Proj;
using dageom::Rat;

namespace {
const double kPi = 4.0 * std::atan(1.0);
}

TEST_CASE("cross ratio basics") {
  CHECK(dageom::cross_ratio<Rat>(Rat(5), Rat(5), Rat(0), Rat(1)) == Rat(1));
  // ((2-1)(3-4))/((3-1)(2-4)) = 1/4
  CHECK(dageom::cross_ratio<Rat>(Rat(2), Rat(3), Rat(1), Rat(4)) == Rat(1, 4));
  // swap of the first pair inverts
  dageom::RatSampler rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rat a = rng.rat(), b = rng.rat(), c = rng.rat(), d = rng.rat();
    if (a == c || a == d || b == c || b == d || a == b || c == d) continue;
    CHECK(dageom::cross_ratio<Rat>(a, b, c, d) *
              dageom::cross_ratio<Rat>(b, a, c, d) ==
          Rat(1));
  }
}

TEST_CASE("cross ratio with points at infinity") {
  using PR = Proj<Rat>;
  // an infinite argument cancels its two occurrences
  const auto cr = dageom::cross_ratio<Rat>(PR::infinity(), PR(Rat(2)), PR(Rat(1)),
                                           PR(Rat(3)));
  REQUIRE(cr.is_finite());
  CHECK(cr.value() == Rat(-1));  // (b-d)/(b-c) = (2-3)/(2-1)

  CHECK(dageom::cross_ratio<Rat>(PR::infinity(), PR::infinity(), PR(Rat(0)),
                                 PR(Rat(1)))
            .value() == Rat(1));

  // coincident pair {a, c} sends the ratio to zero, {a, d} to infinity
  CHECK(dageom::cross_ratio<Rat>(PR(Rat(1)), PR(Rat(2)), PR(Rat(1)), PR(Rat(3)))
            .value() == Rat(0));
  CHECK(!dageom::cross_ratio<Rat>(PR(Rat(1)), PR(Rat(2)), PR(Rat(3)), PR(Rat(1)))
             .is_finite());

  CHECK_THROWS_WITH_AS(
      dageom::cross_ratio<Rat>(PR(Rat(1)), PR(Rat(1)), PR(Rat(1)), PR(Rat(2))),
      "degenerate cross ratio", std::domain_error);
}

TEST_CASE("Laguerre angle") {
  CHECK(std::abs(dageom::laguerre_angle(1.0, 0.0) - kPi / 4) < 1e-14);
  CHECK(dageom::laguerre_angle(0.7, 0.7) == 0.0);
  CHECK(std::abs(dageom::laguerre_angle(0.0, 1.0) + kPi / 4) < 1e-14);

  // Cr(1,0;i,-i) = i
  const Cx i_unit(0.0, 1.0);
  const Cx cr = dageom::cross_ratio<Cx>(Cx(1.0), Cx(0.0), i_unit, -i_unit);
  CHECK(std::abs(cr - i_unit) < 1e-15);

  dageom::RatSampler rng(9);
  for (int i = 0; i < 100; ++i) {
    const double ml = rng.real(-10.0, 10.0), mm = rng.real(-10.0, 10.0);
    const Cx cr2 = dageom::cross_ratio<Cx>(Cx(ml), Cx(mm), i_unit, -i_unit);
    const double phi = std::atan(ml) - std::atan(mm);
    CHECK(std::abs(cr2 - std::exp(Cx(0.0, 2.0 * phi))) < 1e-12);
  }
}

TEST_CASE("CK angle in a real configuration") {
  const dageom::CKConfig<Rat> cfg(Rat(2), Rat(-2));
  CHECK(dageom::ck_angle(Rat(1), Rat(1), cfg) == 0.0);
  CHECK(dageom::ck_angle(Rat(1), Rat(0), cfg) ==
        doctest::Approx(std::log(1.0 / 3.0)).epsilon(1e-15));
  CHECK(dageom::ck_angle(Rat(1), Rat(0), cfg) ==
        doctest::Approx(-dageom::ck_angle(Rat(0), Rat(1), cfg)).epsilon(1e-15));

  CHECK_THROWS_WITH_AS(dageom::ck_angle(Rat(2), Rat(0), cfg),
                       "isotropic direction", std::domain_error);
  // slopes in different components leave the positive branch
  CHECK_THROWS_WITH_AS(dageom::ck_angle(Rat(0), Rat(3), cfg),
                       "outside positive component", std::domain_error);
  CHECK_THROWS_AS(dageom::CKConfig<Rat>(Rat(1), Rat(1)), std::invalid_argument);
}

TEST_CASE("CK axiom suite passes on a rational configuration") {
  const dageom::CKConfig<Rat> cfg(Rat(2), Rat(-2));
  const auto report = dageom::ck_axiom_suite(cfg, 50, 987);
  CHECK(report.all_pass());
  CHECK(report.axioms.size() == 5);
  for (const auto& ax : report.axioms) CHECK(ax.cases > 0);
  CHECK(report.worst_residual() < 1e-10);

  // wide draws land outside the component under test and are rejected
  CHECK(report.rejected > 0);

  const auto empty = dageom::ck_axiom_suite(cfg, 0, 987);
  for (const auto& ax : empty.axioms) CHECK(ax.cases == 0);
}

TEST_CASE("CK bisector") {
  CHECK(dageom::ck_bisector(0.7, 0.7, 2.0, -2.0) == 0.7);

  const double mid = dageom::ck_bisector(0.0, 1.0, 2.0, -2.0);
  CHECK(mid == doctest::Approx(4.0 - 2.0 * std::sqrt(3.0)).epsilon(1e-12));
  const dageom::CKConfig<double> cfg(2.0, -2.0);
  CHECK(std::abs(dageom::ck_angle(0.0, mid, cfg) -
                 dageom::ck_angle(mid, 1.0, cfg)) < 1e-12);

  // repeated bisection yields the quarter angle
  const double q = dageom::ck_bisector(0.0, mid, 2.0, -2.0);
  CHECK(std::abs(dageom::ck_angle(0.0, q, cfg) -
                 0.25 * dageom::ck_angle(0.0, 1.0, cfg)) < 1e-10);

  CHECK_THROWS_AS(dageom::ck_bisector(0.0, 3.0, 2.0, -2.0),
                  std::invalid_argument);
}

TEST_CASE("isotropic tangent slopes") {
  const auto data = dageom::isotropic_slopes(1.0, 1.0);
  CHECK(data.s == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(data.u == doctest::Approx(1.0 / data.s).epsilon(1e-15));

  const auto small = dageom::isotropic_slopes(1.0, 1e-3);
  CHECK(small.s == doctest::Approx(2e3).epsilon(1e-3));
  CHECK(small.u == doctest::Approx(5e-4).epsilon(1e-3));

  // tangency: the double-root condition has vanishing discriminant
  for (double t : {1.0, 0.25, 1e-2}) {
    const auto d = dageom::isotropic_slopes(2.0, t);
    const double disc = d.s * d.s - 4.0 * 2.0 * (t + 1.0 / (t * t));
    CHECK(std::abs(disc) <= 1e-10 * d.s * d.s);
  }

  CHECK_THROWS_WITH_AS(dageom::isotropic_slopes(1.0, -2.0),
                       "no real isotropic pair", std::domain_error);
  CHECK_THROWS_AS(dageom::isotropic_slopes(1.0, 0.0), std::invalid_argument);

  // the alternative apex level gives the same degeneration
  const auto alt = dageom::isotropic_slopes(1.0, 1e-3, dageom::IsotropicApex::Inverse);
  CHECK(alt.s == doctest::Approx(2.0 * std::sqrt(1e-3 + 1e3)).epsilon(1e-12));
}

TEST_CASE("normalized parabolic angle approaches the slope difference") {
  const double v = dageom::parabolic_angle_normalized(3.0, 1.0, 1.0, 1e-3);
  CHECK(std::abs(v - 2.0) < 1e-5);
  CHECK(dageom::parabolic_angle_normalized(0.7, 0.7, 1.0, 1e-3) == 0.0);

  CHECK_THROWS_WITH_AS(dageom::parabolic_angle_normalized(0.0, 1.0, 1.0, 1e-3),
                       "zero slope", std::domain_error);
  // continuous extension through the infinite reciprocal
  const double h = dageom::parabolic_angle_normalized(0.0, 1.0, 1.0, 1e-3, true);
  CHECK(std::abs(h - (-1.0)) < 1e-5);

  // halving the half-gap divides the error by about four
  const auto rows = dageom::angle_limit_probe(3.0, 1.0, 1.0, 1e-4, 3);
  REQUIRE(rows.size() == 4);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].ratio_to_previous > 0.2);
    CHECK(rows[k].ratio_to_previous < 0.32);
  }
  CHECK(rows.back().error < 1e-8);

  // the alternative apex produces the same limit
  const double va = dageom::parabolic_angle_normalized(
      3.0, 1.0, 1.0, 1e-5, false, dageom::IsotropicApex::Inverse);
  CHECK(std::abs(va - 2.0) < 1e-4);
}

TEST_CASE("dual degenerate angle") {
  CHECK(dageom::dual_degenerate_angle(Rat(2), Rat(1)) == Rat(-1, 2));
  CHECK(dageom::dual_degenerate_angle(Rat(5), Rat(5)) == Rat(0));
  CHECK(dageom::dual_degenerate_angle(Rat(2), Rat(3)) ==
        -dageom::dual_degenerate_angle(Rat(3), Rat(2)));
  CHECK_THROWS_WITH_AS(dageom::dual_degenerate_angle(Rat(0), Rat(1)),
                       "zero slope", std::domain_error);
}

TEST_CASE("CK chord distance") {
  auto [d, ci] = dageom::ck_distance_chord(1.0, 0.75, 0.0, 2.0);
  CHECK(d == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(ci.delta == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ci.x_u == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ci.x_v == doctest::Approx(1.5).epsilon(1e-15));

  auto [d_swapped, ci2] = dageom::ck_distance_chord(1.0, 0.75, 2.0, 0.0);
  CHECK(d_swapped == doctest::Approx(d).epsilon(1e-15));
  CHECK(ci2.b == -2.0);

  CHECK_THROWS_WITH_AS(dageom::ck_distance_chord(1.0, 2.0, 0.0, 2.0),
                       "chord misses Q_t", std::domain_error);
  CHECK_THROWS_AS(dageom::ck_distance_chord(1.0, -0.5, 0.0, 2.0),
                  std::invalid_argument);
}

TEST_CASE("small deviation of the chord ratio") {
  const double a1 = dageom::deviation_extract(1.0, 0.01, 0.0, 2.0);
  CHECK(a1 == doctest::Approx(5.031e-3).epsilon(1e-3));
  // agrees with the direct ratio formula
  const double delta = std::sqrt(4.0 - 4.0 * 0.01);
  CHECK(a1 == doctest::Approx((2.0 - delta) / (2.0 + delta) * 400.0 - 1.0)
                  .epsilon(1e-9));

  const double a2 = dageom::deviation_extract(1.0, 0.005, 0.0, 2.0);
  CHECK(a2 / a1 == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("distance degeneration probe") {
  const auto table = dageom::ck_distance_limit_probe(
      1.0, 0.0, 2.0, dageom::default_t_schedule());
  REQUIRE(!table.expansion.empty());
  CHECK(table.target == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  // errors shrink monotonically along the schedule
  for (std::size_t k = 1; k < table.expansion.size(); ++k)
    CHECK(table.expansion[k].error < table.expansion[k - 1].error);
  CHECK(table.expansion.back().value ==
        doctest::Approx(std::log(4.0)).epsilon(1e-6));

  // b = 1 drives the limit value to zero
  const auto unit = dageom::ck_distance_limit_probe(1.0, 0.0, 1.0, {1e-6});
  REQUIRE(unit.expansion.size() == 1);
  CHECK(std::abs(unit.expansion.front().value) < 1e-3);

  // the archived candidate never leaves zero
  for (const auto& row : table.candidate) CHECK(row.value == 0.0);

  // inadmissible entries are skipped, not evaluated
  const auto skipped = dageom::ck_distance_limit_probe(1.0, 0.0, 0.5, {0.1, 1e-3});
  CHECK(skipped.skipped == 1);
  CHECK(skipped.expansion.size() == 1);

  CHECK(dageom::ck_distance_limit_probe(1.0, 0.0, 2.0, {}).expansion.empty());
}

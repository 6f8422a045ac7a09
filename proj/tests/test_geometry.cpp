#include <doctest.h>

#include "dageom/geometry.hpp"
#include "dageom/sampling.hpp"

using dageom::Rat;
using P = dageom::Point<Rat>;
using Tri = dageom::DATriangle<Rat>;
using dageom::Vertex;

TEST_CASE("slope of a segment") {
  CHECK(*dageom::slope(P{0, 0}, P{2, 6}) == Rat(3));
  CHECK(!dageom::slope(P{1, 5}, P{1, 9}).has_value());
  CHECK(*dageom::slope(P{0, 0}, P{3, 0}) == Rat(0));
  CHECK_THROWS_WITH_AS(dageom::slope(P{1, 1}, P{1, 1}), "degenerate segment",
                       std::invalid_argument);
}

TEST_CASE("degenerate norm") {
  CHECK(dageom::da_norm(P{1, 5}, P{4, -2}) == Rat(3));
  CHECK(dageom::da_norm(P{2, 0}, P{2, 99}) == Rat(0));
  CHECK(dageom::da_norm(P{-1, 0}, P{-5, 3}) == Rat(4));
}

TEST_CASE("oriented angle is the slope difference") {
  CHECK(dageom::oriented_angle(P{0, 0}, P{1, 3}, P{1, 1}).value == Rat(2));
  // collinear arms vanish
  CHECK(dageom::oriented_angle(P{0, 0}, P{1, 2}, P{2, 4}).value == Rat(0));
  // a singular arm counts as slope zero
  CHECK(dageom::oriented_angle(P{2, Rat(-1, 4)}, P{0, Rat(1, 4)}, P{2, 7}).value ==
        Rat(-1, 4));
  CHECK_THROWS_AS(dageom::oriented_angle(P{0, 0}, P{0, 0}, P{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("oriented angle axioms") {
  dageom::RatSampler rng(5);
  for (int i = 0; i < 300; ++i) {
    const P y{rng.rat(), rng.rat()};
    auto arm = [&] {
      for (;;) {
        P q{rng.rat(), rng.rat()};
        if (!(q == y)) return q;
      }
    };
    const P x1 = arm(), x2 = arm(), x3 = arm();
    CHECK(dageom::oriented_angle(y, x1, x2).value ==
          -dageom::oriented_angle(y, x2, x1).value);
    CHECK(dageom::oriented_angle(y, x1, x2).value +
              dageom::oriented_angle(y, x2, x3).value ==
          dageom::oriented_angle(y, x1, x3).value);
    // scaling a ray does not move the angle
    const Rat mu = rng.positive_rat();
    const P x1s{y.x + mu * (x1.x - y.x), y.y + mu * (x1.y - y.y)};
    CHECK(dageom::oriented_angle(y, x1s, x2).value ==
          dageom::oriented_angle(y, x1, x2).value);
  }
}

TEST_CASE("vanishing characterizes equal slopes") {
  dageom::RatSampler rng(6);
  for (int i = 0; i < 200; ++i) {
    const P y{rng.rat(), rng.rat()};
    P x{y.x + rng.nonzero_rat(), rng.rat()};
    P z{y.x + rng.nonzero_rat(), rng.rat()};
    const bool zero = dageom::oriented_angle(y, x, z).value == Rat(0);
    const bool same_slope = *dageom::slope(y, x) == *dageom::slope(y, z);
    CHECK(zero == same_slope);
  }
}

TEST_CASE("triangle invariants") {
  CHECK_THROWS_WITH_AS(Tri(P{1, 0}, P{1, 5}, P{3, 1}),
                       "vertices share a singular line", std::invalid_argument);

  // inscribed in y = x^2 over x = 0, 1, 3
  const Tri t(P{0, 0}, P{1, 1}, P{3, 9});
  CHECK(dageom::interior_angle(t, Vertex::A).value == Rat(2));
  CHECK(dageom::interior_angle(t, Vertex::B).value == Rat(-3));
  CHECK(dageom::interior_angle(t, Vertex::C).value == Rat(1));

  CHECK(dageom::triangle_equality_check(t));
  CHECK(dageom::triangle_equality_check(Tri(P{0, 4}, P{2, -1}, P{5, 2})));
}

TEST_CASE("vertex angle with a singular arm keeps the sloped magnitude") {
  // arm YX singular, arm YZ of slope 5
  const auto a = dageom::vertex_angle(P{2, 0}, P{2, 3}, P{3, 5});
  CHECK(a.value == Rat(5));
}

TEST_CASE("interior angle structure on random triangles") {
  dageom::RatSampler rng(7);
  for (int i = 0; i < 300; ++i) {
    P a{rng.rat(), rng.rat()}, b{rng.rat(), rng.rat()}, c{rng.rat(), rng.rat()};
    if (a.x == b.x || b.x == c.x || a.x == c.x) {
      --i;
      continue;
    }
    const Tri t(a, b, c);
    const Rat ta = dageom::interior_angle(t, Vertex::A).value;
    const Rat tb = dageom::interior_angle(t, Vertex::B).value;
    const Rat tc = dageom::interior_angle(t, Vertex::C).value;
    CHECK(ta + tb + tc == Rat(0));
    CHECK(dageom::triangle_equality_check(t));
    // the negative angle sits at the middle vertex
    const int negatives = (ta < Rat(0)) + (tb < Rat(0)) + (tc < Rat(0));
    const bool degenerate = ta == Rat(0) || tb == Rat(0) || tc == Rat(0);
    if (!degenerate) CHECK(negatives == 1);
  }
}

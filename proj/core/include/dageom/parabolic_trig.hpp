#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>

#include "dageom/geometry.hpp"
#include "dageom/inner_product.hpp"

namespace dageom {

// Parabolic trigonometry of a nonzero difference angle theta:
//   cosp theta = sgn(theta), sinp theta = theta,
//   tanp theta = theta, cotp theta = 1/theta.
template <class S>
struct PTrigValue {
  int cosp;  // -1 or +1
  S sinp;
  S tanp;
  S cotp;
};

// tanp extends to 0 by definition; cosp and cotp do not.
template <class S>
inline const S tanp_zero = S(0);

template <class S>
PTrigValue<S> ptrig(const S& theta) {
  if (theta == S(0))
    throw std::domain_error("parabolic trig undefined at 0");
  return {sgn(theta), theta, theta, S(1) / theta};
}

// Point (theta/kappa, theta^2/kappa) on y = kappa x^2; the chord from the
// origin has slope theta.
template <class S>
Point<S> embed_angle(const S& theta, const S& kappa) {
  if (kappa == S(0)) throw std::invalid_argument("kappa must be nonzero");
  return {theta / kappa, theta * theta / kappa};
}

namespace detail {

template <class S>
struct TriangleData {
  S a, b, c;        // side norms |BC|, |CA|, |AB|
  int ca, cb, cc;   // cosp of the interior angles
};

template <class S>
TriangleData<S> triangle_data(const DATriangle<S>& t) {
  return {da_norm(t.B, t.C), da_norm(t.C, t.A), da_norm(t.A, t.B),
          ptrig(interior_angle(t, Vertex::A).value).cosp,
          ptrig(interior_angle(t, Vertex::B).value).cosp,
          ptrig(interior_angle(t, Vertex::C).value).cosp};
}

}  // namespace detail

// a = b cosp(theta_C) + c cosp(theta_B), and the two cyclic companions.
template <class S>
bool first_cosine_law_check(const DATriangle<S>& t) {
  auto d = detail::triangle_data(t);
  return d.a == d.b * S(d.cc) + d.c * S(d.cb) &&
         d.b == d.c * S(d.ca) + d.a * S(d.cc) &&
         d.c == d.a * S(d.cb) + d.b * S(d.ca);
}

// a^2 = b^2 + c^2 - 2bc cosp(theta_A), plus the reduction that folds it
// into the first law: cosp A = -cosp B cosp C.
template <class S>
bool second_cosine_law_check(const DATriangle<S>& t) {
  auto d = detail::triangle_data(t);
  const bool law = d.a * d.a ==
                   d.b * d.b + d.c * d.c - S(2) * d.b * d.c * S(d.ca);
  const bool reduction = d.ca + d.cb * d.cc == 0;
  return law && reduction;
}

namespace detail {

// Sorted x-coordinates of a triangle inscribed in y = kappa x^2.
template <class S>
std::array<S, 3> inscribed_coords(const DATriangle<S>& t, const S& kappa) {
  if (kappa == S(0)) throw std::invalid_argument("kappa must be nonzero");
  for (const Point<S>* p : {&t.A, &t.B, &t.C}) {
    if (p->y != kappa * p->x * p->x)
      throw std::domain_error("not inscribed");
  }
  std::array<S, 3> xs{t.A.x, t.B.x, t.C.x};
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace detail

// Area kappa/2 (b-a)(c-b)(c-a) of a triangle inscribed in y = kappa x^2.
template <class S>
S da_area(const DATriangle<S>& t, const S& kappa) {
  auto [a, b, c] = detail::inscribed_coords(t, kappa);
  return kappa / S(2) * (b - a) * (c - b) * (c - a);
}

template <class S>
struct BrocardResult {
  S u;        // shift parameter
  S omega1;   // kappa * u
  S omega2;   // -kappa * u
  Point<S> P1;
  Point<S> P2;
};

namespace detail {

// Chord of y = kappa x^2 through the curve points above x = r and x = s:
// y = kappa (r + s) x - kappa r s.
template <class S>
SlopeLine<S> chord(const S& kappa, const S& r, const S& s) {
  return SlopeLine<S>::sloped(kappa * (r + s), -kappa * r * s);
}

template <class S>
S sloped_intersection_x(const SlopeLine<S>& l, const SlopeLine<S>& m) {
  return (m.intercept() - l.intercept()) / (l.slope() - m.slope());
}

}  // namespace detail

// Equal-angle points of a triangle inscribed in y = kappa x^2. The shift
// parameter u moves vertex x-coordinates; each point is pinned by two
// independent chord intersections which must agree. The first point sees
// each vertex paired with the next one shifted by +u, the second with the
// previous one shifted by -u.
template <class S>
BrocardResult<S> brocard(const DATriangle<S>& t, const S& kappa) {
  auto [a, b, c] = detail::inscribed_coords(t, kappa);

  const S denom = a * a + b * b + c * c - a * b - b * c - c * a;
  if (denom <= S(0)) throw std::logic_error("degenerate shift denominator");
  const S u = (b - a) * (c - b) * (c - a) / denom;

  auto meet = [&](const SlopeLine<S>& l1, const SlopeLine<S>& l2,
                  const SlopeLine<S>& l3) {
    const S x_first = detail::sloped_intersection_x(l1, l2);
    const S x_second = detail::sloped_intersection_x(l2, l3);
    if (x_first != x_second)
      throw std::logic_error("equal-angle intersections disagree");
    return Point<S>{x_first, l2.y_at(x_first)};
  };

  const Point<S> p1 = meet(detail::chord(kappa, b, c + u),
                           detail::chord(kappa, c, a + u),
                           detail::chord(kappa, a, b + u));
  const Point<S> p2 = meet(detail::chord(kappa, c, b - u),
                           detail::chord(kappa, a, c - u),
                           detail::chord(kappa, b, a - u));

  return {u, kappa * u, -kappa * u, p1, p2};
}

// tanp/cotp/sinp^2 expressions of the first equal-angle value in terms of
// side norms and area.
template <class S>
bool brocard_identities_check(const DATriangle<S>& t, const S& kappa) {
  const BrocardResult<S> br = brocard(t, kappa);
  const S area = da_area(t, kappa);
  auto d = detail::triangle_data(t);
  const S sumsq = d.a * d.a + d.b * d.b + d.c * d.c;
  const S sumcross =
      d.a * d.a * d.b * d.b + d.b * d.b * d.c * d.c + d.c * d.c * d.a * d.a;

  const S omega = br.omega1;
  const bool tanp_ok = omega * sumsq == S(4) * area;
  const bool sinp_ok = omega * omega * sumcross == S(4) * area * area;

  const S cot_sum = S(1) / interior_angle(t, Vertex::A).value +
                    S(1) / interior_angle(t, Vertex::B).value +
                    S(1) / interior_angle(t, Vertex::C).value;
  const bool cotp_ok = S(1) / omega == cot_sum;

  return tanp_ok && sinp_ok && cotp_ok;
}

// |u||v| sinp(slope(u) - slope(v)); zero when either vector is singular.
template <class S>
S alternating_product(const DAVector<S>& u, const DAVector<S>& v) {
  if ((u.dx == S(0) && u.dy == S(0)) || (v.dx == S(0) && v.dy == S(0)))
    throw std::invalid_argument("zero vector");
  if (u.dx == S(0) || v.dx == S(0)) return S(0);
  const S theta = u.dy / u.dx - v.dy / v.dx;
  return da_norm(u) * da_norm(v) * theta;
}

// Angle between two non-singular free vectors under the vertex sign rule:
// magnitude |slope(u) - slope(v)|, sign sgn(dx_u dx_v). This is the angle
// for which <u,v> = |u||v| cosp(theta).
template <class S>
DifferenceAngle<S> vector_angle(const DAVector<S>& u, const DAVector<S>& v) {
  using std::abs;
  if (u.dx == S(0) || v.dx == S(0))
    throw std::domain_error("singular vector has no slope");
  const S mag = abs(u.dy / u.dx - v.dy / v.dx);
  return {sgn(u.dx * v.dx) < 0 ? -mag : mag};
}

}  // namespace dageom

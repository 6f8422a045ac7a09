#pragma once

#include <stdexcept>
#include <utility>

#include "dageom/focal.hpp"
#include "dageom/geometry.hpp"

namespace dageom {

// Displacement vector. The norm |v| = |dx| degenerates on the singular
// direction; {dx = 0} is the null space of the induced inner product.
template <class S>
struct DAVector {
  S dx{};
  S dy{};

  friend DAVector operator+(const DAVector& a, const DAVector& b) {
    return {a.dx + b.dx, a.dy + b.dy};
  }
  friend DAVector operator-(const DAVector& a, const DAVector& b) {
    return {a.dx - b.dx, a.dy - b.dy};
  }
  DAVector operator-() const { return {-dx, -dy}; }
};

template <class S>
DAVector<S> displacement(const Point<S>& from, const Point<S>& to) {
  return {to.x - from.x, to.y - from.y};
}

template <class S>
S da_norm(const DAVector<S>& v) {
  using std::abs;
  return abs(v.dx);
}

// Polarization of the degenerate norm: (|u+v|^2 - |u|^2 - |v|^2) / 2.
template <class S>
S da_inner(const DAVector<S>& u, const DAVector<S>& v) {
  const S su = da_norm(u), sv = da_norm(v), suv = da_norm(u + v);
  return (suv * suv - su * su - sv * sv) / S(2);
}

// Induced product on the quotient by the null space: dx_u * dx_v.
template <class S>
S quotient_inner(const DAVector<S>& u, const DAVector<S>& v) {
  return u.dx * v.dx;
}

// |AB|^2 + |AC|^2 = 2(|AM|^2 + |MB|^2) with M the midpoint of BC.
template <class S>
bool parallelogram_check(const DATriangle<S>& t) {
  const Point<S> m{(t.B.x + t.C.x) / S(2), (t.B.y + t.C.y) / S(2)};
  const S ab = da_norm(t.A, t.B), ac = da_norm(t.A, t.C);
  const S am = da_norm(t.A, m), mb = da_norm(m, t.B);
  return ab * ab + ac * ac == S(2) * (am * am + mb * mb);
}

// Equality always holds: |<OA,OB>| = |OA||OB|.
template <class S>
bool cauchy_schwarz_check(const Point<S>& a, const Point<S>& b,
                          const Point<S>& o) {
  using std::abs;
  const DAVector<S> oa = displacement(o, a), ob = displacement(o, b);
  return abs(da_inner(oa, ob)) == da_norm(oa) * da_norm(ob);
}

// <u,v> + <v,w> + <w,u> = -(|u|^2+|v|^2+|w|^2)/2 for the edge vectors
// u = BC, v = CA, w = AB.
template <class S>
std::pair<S, S> cyclic_inner_identity(const DATriangle<S>& t) {
  const DAVector<S> u = displacement(t.B, t.C);
  const DAVector<S> v = displacement(t.C, t.A);
  const DAVector<S> w = displacement(t.A, t.B);
  const S lhs = da_inner(u, v) + da_inner(v, w) + da_inner(w, u);
  const S nu = da_norm(u), nv = da_norm(v), nw = da_norm(w);
  const S rhs = -(nu * nu + nv * nv + nw * nw) / S(2);
  return {lhs, rhs};
}

// Squared form of a^2+b^2+c^2 = 2 sqrt(a^2b^2 + b^2c^2 + c^2a^2).
template <class S>
bool positive_cyclic_check(const DATriangle<S>& t) {
  const S a = da_norm(t.B, t.C), b = da_norm(t.C, t.A), c = da_norm(t.A, t.B);
  const S q = a * a + b * b + c * c;
  return q * q == S(4) * (a * a * b * b + b * b * c * c + c * c * a * a);
}

// Constant-inner-product locus {X : <OA,OX> = c}: always a singular line.
template <class S>
SlopeLine<S> isoptic_line(const Point<S>& a, const S& c, const Point<S>& o) {
  if (a.x == o.x) throw std::domain_error("A in singular direction from O");
  return SlopeLine<S>::singular(o.x + c / (a.x - o.x));
}

// q|CA|^2 + p|CB|^2  vs  |AB| (|CS|^2 + pq), for a cevian foot S strictly
// inside AB in x; p = |AS|, q = |SB|.
template <class S>
std::pair<S, S> stewart_check(const DATriangle<S>& t, const Point<S>& s) {
  using std::abs;
  if (!((t.A.x < s.x && s.x < t.B.x) || (t.B.x < s.x && s.x < t.A.x)))
    throw std::domain_error("cevian foot outside segment");
  const S p = abs(s.x - t.A.x);
  const S q = abs(t.B.x - s.x);
  const S ca = da_norm(t.C, t.A), cb = da_norm(t.C, t.B);
  const S ab = da_norm(t.A, t.B), cs = abs(s.x - t.C.x);
  return {q * ca * ca + p * cb * cb, ab * (cs * cs + p * q)};
}

// Same identity rebuilt through the circumparabola: the cevian CS meets it
// again at D, the power of S gives |SD| = pq/s, and the four points on the
// parabola close up via the Ptolemy relation.
template <class S>
std::pair<S, S> stewart_via_power(const DATriangle<S>& t, const Point<S>& sp) {
  using std::abs;
  if (!((t.A.x < sp.x && sp.x < t.B.x) || (t.B.x < sp.x && sp.x < t.A.x)))
    throw std::domain_error("cevian foot outside segment");
  if (sp.x == t.C.x) throw std::domain_error("cevian in singular direction");

  const Parabola<S> circ = Parabola<S>::circumscribing(t);

  // Foot of the cevian on the chord AB of the circumparabola.
  const S ab_slope = (t.B.y - t.A.y) / (t.B.x - t.A.x);
  const Point<S> s{sp.x, t.A.y + ab_slope * (sp.x - t.A.x)};

  const S m = (t.C.y - s.y) / (t.C.x - s.x);
  // C is one chord point of the cevian; Vieta gives the other.
  const S xd = S(2) * circ.h() + m / circ.kappa() - t.C.x;

  const S p = abs(s.x - t.A.x);
  const S q = abs(t.B.x - s.x);
  const S len_cs = abs(s.x - t.C.x);
  const S sd = abs(xd - s.x);
  const S ad = abs(xd - t.A.x);
  const S bd = abs(xd - t.B.x);

  // Power of the interior point S, and the two induced side ratios.
  if (sd * len_cs != p * q)
    throw std::logic_error("power identity violated at cevian foot");
  if (ad * len_cs != p * da_norm(t.B, t.C) ||
      bd * len_cs != q * da_norm(t.C, t.A))
    throw std::logic_error("similar-triangle ratios violated");

  const S lhs = len_cs * (ad * da_norm(t.B, t.C) + bd * da_norm(t.C, t.A));
  const S rhs = len_cs * da_norm(t.A, t.B) * (len_cs + sd);
  return {lhs, rhs};
}

}  // namespace dageom

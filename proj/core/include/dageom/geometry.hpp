#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "dageom/scalar.hpp"

namespace dageom {

// The standard frame puts the projective reference line on the x-axis and
// the singular direction on the y-axis. Lines parallel to the singular
// direction ("singular lines") have no slope.

template <class S>
struct Point {
  S x{};
  S y{};

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// A line representable by slope/intercept, or a singular (constant-x) line.
template <class S>
class SlopeLine {
 public:
  static SlopeLine sloped(S slope, S intercept) {
    SlopeLine l;
    l.singular_ = false;
    l.a_ = std::move(slope);
    l.b_ = std::move(intercept);
    return l;
  }
  static SlopeLine singular(S x0) {
    SlopeLine l;
    l.singular_ = true;
    l.a_ = std::move(x0);
    return l;
  }

  bool is_singular() const { return singular_; }
  const S& slope() const { require(!singular_); return a_; }
  const S& intercept() const { require(!singular_); return b_; }
  const S& x0() const { require(singular_); return a_; }

  S y_at(const S& x) const { require(!singular_); return a_ * x + b_; }

  friend bool operator==(const SlopeLine& l, const SlopeLine& m) {
    if (l.singular_ != m.singular_) return false;
    if (l.singular_) return l.a_ == m.a_;
    return l.a_ == m.a_ && l.b_ == m.b_;
  }

 private:
  SlopeLine() = default;
  static void require(bool ok) {
    if (!ok) throw std::logic_error("wrong slope-line kind");
  }
  bool singular_ = false;
  S a_{};  // slope, or x0 when singular
  S b_{};  // intercept
};

// Signed slope difference; the straight angle is 0.
template <class S>
struct DifferenceAngle {
  S value{};
};

// Three points with pairwise distinct x-coordinates: no two vertices may
// share a singular line.
template <class S>
struct DATriangle {
  Point<S> A;
  Point<S> B;
  Point<S> C;

  DATriangle(Point<S> a, Point<S> b, Point<S> c)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    if (A.x == B.x || B.x == C.x || A.x == C.x)
      throw std::invalid_argument("vertices share a singular line");
  }
};

enum class Vertex { A, B, C };

// Slope of segment PQ, or nullopt for a singular segment.
template <class S>
std::optional<S> slope(const Point<S>& p, const Point<S>& q) {
  if (p == q) throw std::invalid_argument("degenerate segment");
  if (p.x == q.x) return std::nullopt;
  return (q.y - p.y) / (q.x - p.x);
}

// |x_Q - x_P|. Zero for distinct points on a common singular line.
template <class S>
S da_norm(const Point<S>& p, const Point<S>& q) {
  using std::abs;
  return abs(q.x - p.x);
}

namespace detail {

// A singular arm counts as slope 0.
template <class S>
S arm_slope(const Point<S>& vertex, const Point<S>& tip) {
  auto m = slope(vertex, tip);
  return m ? *m : S(0);
}

}  // namespace detail

// Oriented difference angle at Y between arms YX and YZ: Slp(YX) - Slp(YZ).
template <class S>
DifferenceAngle<S> oriented_angle(const Point<S>& y, const Point<S>& x,
                                  const Point<S>& z) {
  return {detail::arm_slope(y, x) - detail::arm_slope(y, z)};
}

// Angle between two arms leaving a common vertex, with the triangle sign
// rule: magnitude |Slp(YX) - Slp(YZ)|, sign sgn((x_X-x_Y)(x_Z-x_Y)).
template <class S>
DifferenceAngle<S> vertex_angle(const Point<S>& y, const Point<S>& x,
                                const Point<S>& z) {
  using std::abs;
  S mag = abs(detail::arm_slope(y, x) - detail::arm_slope(y, z));
  int sign = sgn((x.x - y.x) * (z.x - y.x));
  return {sign < 0 ? -mag : mag};
}

template <class S>
DifferenceAngle<S> interior_angle(const DATriangle<S>& t, Vertex v) {
  switch (v) {
    case Vertex::A: return vertex_angle(t.A, t.B, t.C);
    case Vertex::B: return vertex_angle(t.B, t.C, t.A);
    case Vertex::C: return vertex_angle(t.C, t.A, t.B);
  }
  throw std::logic_error("bad vertex");
}

// In x-order, the two short sides sum exactly to the long side.
template <class S>
bool triangle_equality_check(const DATriangle<S>& t) {
  S ab = da_norm(t.A, t.B);
  S bc = da_norm(t.B, t.C);
  S ca = da_norm(t.C, t.A);
  return ab + bc == ca || bc + ca == ab || ca + ab == bc;
}

}  // namespace dageom

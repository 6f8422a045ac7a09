#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dageom/geometry.hpp"
#include "dageom/scalar.hpp"

namespace dageom {

// Axis-parallel parabola y = kappa (x - h)^2 + k.
template <class S>
class Parabola {
 public:
  Parabola(S kappa, S h, S k)
      : kappa_(std::move(kappa)), h_(std::move(h)), k_(std::move(k)) {
    if (kappa_ == S(0)) throw std::invalid_argument("kappa must be nonzero");
  }

  const S& kappa() const { return kappa_; }
  const S& h() const { return h_; }
  const S& k() const { return k_; }

  S y_at(const S& x) const { return kappa_ * (x - h_) * (x - h_) + k_; }
  bool contains(const Point<S>& p) const { return p.y == y_at(p.x); }
  Point<S> point_at(const S& x) const { return {x, y_at(x)}; }

  Point<S> focus() const { return {h_, k_ + S(1) / (S(4) * kappa_)}; }
  S directrix_y() const { return k_ - S(1) / (S(4) * kappa_); }

  static Parabola from_focus_directrix(const Point<S>& f, const S& directrix_y) {
    if (f.y == directrix_y)
      throw std::domain_error("focus on directrix level");
    S kappa = S(1) / (S(2) * (f.y - directrix_y));
    return Parabola(kappa, f.x, (f.y + directrix_y) / S(2));
  }

  // The unique parabola through three points with pairwise distinct x.
  static Parabola circumscribing(const DATriangle<S>& t) {
    const S d1 = (t.B.y - t.A.y) / (t.B.x - t.A.x);
    const S d2 = (t.C.y - t.A.y) / (t.C.x - t.A.x);
    const S a = (d2 - d1) / (t.C.x - t.B.x);
    if (a == S(0)) throw std::domain_error("collinear vertices");
    const S b = d1 - a * (t.A.x + t.B.x);
    const S c = t.A.y - a * t.A.x * t.A.x - b * t.A.x;
    // y = a x^2 + b x + c  ->  vertex form
    return Parabola(a, -b / (S(2) * a), c - b * b / (S(4) * a));
  }

  friend bool operator==(const Parabola& p, const Parabola& q) {
    return p.kappa_ == q.kappa_ && p.h_ == q.h_ && p.k_ == q.k_;
  }

 private:
  S kappa_, h_, k_;
};

// Normalized focus/base configuration: F off the singular line through A,
// and not at the directrix level of A.
template <class S>
struct FocalFrame {
  Point<S> F;
  Point<S> A;
  S q_hat;  // (y_F - y_A) / 2
  S x_hat;  // x_A - x_F

  FocalFrame(Point<S> focus, Point<S> base)
      : F(std::move(focus)), A(std::move(base)) {
    q_hat = (F.y - A.y) / S(2);
    x_hat = A.x - F.x;
    if (x_hat == S(0)) throw std::domain_error("F on L_A");
    if (q_hat == S(0)) throw std::domain_error("focus on directrix level");
  }
};

enum class CurveSide { Interior, OnCurve, Exterior };

inline const char* to_string(CurveSide s) {
  switch (s) {
    case CurveSide::Interior: return "interior";
    case CurveSide::OnCurve: return "on-curve";
    case CurveSide::Exterior: return "exterior";
  }
  return "?";
}

template <class S>
struct PowerResult {
  S value;
  CurveSide position;
};

// Focal function 1 - 4 q_hat y_hat / x_hat^2 for P on the singular line
// through A, with y_hat measured from the midlevel of A and F.
template <class S>
S focal_function(const FocalFrame<S>& frame, const Point<S>& p) {
  if (p.x != frame.A.x)
    throw std::domain_error("P not on singular line through A");
  const S y_hat = p.y - (frame.A.y + frame.F.y) / S(2);
  return S(1) - S(4) * frame.q_hat * y_hat / (frame.x_hat * frame.x_hat);
}

// The unique zero of the focal function on L_A, in global coordinates.
template <class S>
Point<S> solve_focal(const FocalFrame<S>& frame) {
  const S y_hat = frame.x_hat * frame.x_hat / (S(4) * frame.q_hat);
  return {frame.A.x, y_hat + (frame.A.y + frame.F.y) / S(2)};
}

// Sweeps A along the directrix; the solutions trace the parabola with the
// given focus and directrix.
template <class S>
std::vector<Point<S>> focal_locus(const Point<S>& f, const S& directrix_y,
                                  const std::vector<S>& xs) {
  if (f.y == directrix_y) throw std::domain_error("focus on directrix level");
  std::vector<Point<S>> out;
  out.reserve(xs.size());
  for (const S& x : xs)
    out.push_back(solve_focal(FocalFrame<S>(f, Point<S>{x, directrix_y})));
  return out;
}

// (x_P - h)^2 - (y_P - k)/kappa, signed so that the focal side is negative.
template <class S>
PowerResult<S> parabolic_power(const Parabola<S>& c, const Point<S>& p) {
  const S dx = p.x - c.h();
  const S value = dx * dx - (p.y - c.k()) / c.kappa();
  CurveSide side = CurveSide::OnCurve;
  if (value > S(0)) side = CurveSide::Exterior;
  else if (value < S(0)) side = CurveSide::Interior;
  return {value, side};
}

namespace detail {

// Coefficients of kappa x^2 + bx + c = 0 for the chord cut by the line of
// slope m through p; returns (sum, product) of roots via Vieta.
template <class S>
std::pair<S, S> secant_root_sum_product(const Parabola<S>& c,
                                        const Point<S>& p, const S& m) {
  // kappa (x-h)^2 + k = y_P + m (x - x_P)
  const S kappa = c.kappa();
  const S b = -(S(2) * kappa * c.h() + m);
  const S cc = kappa * c.h() * c.h() + c.k() - p.y + m * p.x;
  return {-b / kappa, cc / kappa};
}

template <class S>
S secant_discriminant(const Parabola<S>& c, const Point<S>& p, const S& m) {
  return m * m + S(4) * c.kappa() * m * (c.h() - p.x) +
         S(4) * c.kappa() * (p.y - c.k());
}

}  // namespace detail

// Product of signed x-offsets from P to the two chord points of the secant
// with slope m. Tangency counts doubly; a missing chord is rejected.
template <class S>
S secant_power_product(const Parabola<S>& c, const Point<S>& p, const S& m) {
  if (detail::secant_discriminant(c, p, m) < S(0))
    throw std::domain_error("secant misses parabola");
  auto [sum, prod] = detail::secant_root_sum_product(c, p, m);
  return prod - p.x * sum + p.x * p.x;
}

// The equal-power line of two parabolas (their common chord; the common
// tangent in the tangency case).
template <class S>
SlopeLine<S> radical_axis(const Parabola<S>& c1, const Parabola<S>& c2) {
  if (c1 == c2) throw std::domain_error("coincident curves");

  // Classify the intersection pattern.
  const S qa = c1.kappa() - c2.kappa();
  const S qb = S(2) * (c2.kappa() * c2.h() - c1.kappa() * c1.h());
  const S qc = c1.kappa() * c1.h() * c1.h() - c2.kappa() * c2.h() * c2.h() +
               c1.k() - c2.k();
  if (qa == S(0)) {
    if (qb == S(0)) throw std::domain_error("disjoint parabolas");
  } else if (qb * qb - S(4) * qa * qc < S(0)) {
    throw std::domain_error("disjoint parabolas");
  }

  // Power difference is linear: cx*x + cy*y + c0 = 0.
  const S cx = S(2) * (c2.h() - c1.h());
  const S cy = S(1) / c2.kappa() - S(1) / c1.kappa();
  const S c0 = c1.h() * c1.h() - c2.h() * c2.h() + c1.k() / c1.kappa() -
               c2.k() / c2.kappa();
  if (cy == S(0)) return SlopeLine<S>::singular(-c0 / cx);
  return SlopeLine<S>::sloped(-cx / cy, -c0 / cy);
}

namespace detail {

template <class S>
Point<S> line_intersection(const SlopeLine<S>& l, const SlopeLine<S>& m) {
  if (l.is_singular() && m.is_singular())
    throw std::domain_error("no finite radical center");
  if (l.is_singular()) return {l.x0(), m.y_at(l.x0())};
  if (m.is_singular()) return {m.x0(), l.y_at(m.x0())};
  if (l.slope() == m.slope())
    throw std::domain_error("no finite radical center");
  const S x = (m.intercept() - l.intercept()) / (l.slope() - m.slope());
  return {x, l.y_at(x)};
}

}  // namespace detail

// Common point of the three pairwise radical axes.
template <class S>
Point<S> radical_center(const Parabola<S>& c1, const Parabola<S>& c2,
                        const Parabola<S>& c3) {
  auto a12 = radical_axis(c1, c2);
  auto a23 = radical_axis(c2, c3);
  return detail::line_intersection(a12, a23);
}

// Ptolemy identity for four increasing x-coordinates of points on c:
// |AC||BD| = |AB||CD| + |AD||BC|.
template <class S>
bool da_ptolemy_check(const std::array<S, 4>& xs, const Parabola<S>& c) {
  (void)c;  // quadruple is read as x-coordinates of points on c
  const S& w = xs[0];
  const S& x = xs[1];
  const S& y = xs[2];
  const S& z = xs[3];
  if (!(w < x && x < y && y < z))
    throw std::invalid_argument("coordinates not increasing");
  return (y - w) * (z - x) == (x - w) * (z - y) + (z - w) * (y - x);
}

}  // namespace dageom

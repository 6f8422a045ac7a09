#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dageom/scalar.hpp"

namespace dageom {

// Point of the projective line over S: a finite value or the point at
// infinity, stored as (v : 1) or (1 : 0).
template <class S>
class Proj {
 public:
  Proj(S v) : finite_(true), v_(std::move(v)) {}
  static Proj infinity() { return Proj(); }

  bool is_finite() const { return finite_; }
  const S& value() const {
    if (!finite_) throw std::logic_error("value of infinite point");
    return v_;
  }

  friend bool operator==(const Proj& a, const Proj& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }

 private:
  Proj() : finite_(false) {}
  bool finite_;
  S v_{};
};

namespace detail {

// Determinant of the homogeneous pair; reduces to p - q for finite points.
template <class S>
S proj_det(const Proj<S>& p, const Proj<S>& q) {
  if (!p.is_finite() && !q.is_finite()) return S(0);
  if (!p.is_finite()) return S(1);
  if (!q.is_finite()) return S(0) - S(1);
  return p.value() - q.value();
}

}  // namespace detail

// Cr(a,b;c,d) = ((a-c)/(b-c)) / ((a-d)/(b-d)) on the projective line.
// An infinite argument cancels its two occurrences; a 0/0 configuration is
// rejected.
template <class S>
Proj<S> cross_ratio(const Proj<S>& a, const Proj<S>& b, const Proj<S>& c,
                    const Proj<S>& d) {
  const S num = detail::proj_det(a, c) * detail::proj_det(b, d);
  const S den = detail::proj_det(b, c) * detail::proj_det(a, d);
  if (num == S(0) && den == S(0))
    throw std::domain_error("degenerate cross ratio");
  if (den == S(0)) return Proj<S>::infinity();
  return Proj<S>(num / den);
}

// Finite-argument convenience; the result must be finite as well.
template <class S>
S cross_ratio(const S& a, const S& b, const S& c, const S& d) {
  auto cr = cross_ratio(Proj<S>(a), Proj<S>(b), Proj<S>(c), Proj<S>(d));
  if (!cr.is_finite()) throw std::domain_error("infinite cross ratio");
  return cr.value();
}

// Euclidean angle between two slope directions as a logarithmic cross
// ratio against the reference directions i and -i.
Flt laguerre_angle(Flt m_l, Flt m_m);

// Angle scale and isotropic directions of a Cayley-Klein geometry.
template <class S>
struct CKConfig {
  S t1;
  S t2;
  S lambda;

  CKConfig(S isotropic1, S isotropic2, S scale = S(1))
      : t1(std::move(isotropic1)), t2(std::move(isotropic2)),
        lambda(std::move(scale)) {
    if (t1 == t2) throw std::invalid_argument("isotropic directions coincide");
    if (lambda == S(0)) throw std::invalid_argument("lambda must be nonzero");
  }
};

// Exact cross ratio of two line slopes against the isotropic pair.
template <class S>
S ck_cross_ratio(const S& m1, const S& m2, const CKConfig<S>& cfg) {
  if (m1 == cfg.t1 || m1 == cfg.t2 || m2 == cfg.t1 || m2 == cfg.t2)
    throw std::domain_error("isotropic direction");
  return ((m1 - cfg.t1) * (m2 - cfg.t2)) / ((m1 - cfg.t2) * (m2 - cfg.t1));
}

// lambda * log Cr, restricted to the positive-cross-ratio domain.
template <class S>
Flt ck_angle(const S& m1, const S& m2, const CKConfig<S>& cfg) {
  const S cr = ck_cross_ratio(m1, m2, cfg);
  if (!(cr > S(0))) throw std::domain_error("outside positive component");
  return to_double(cfg.lambda) * std::log(to_double(cr));
}

// Slope bisecting the CK angle between m1 and m2; both slopes must lie in
// the same real component cut out by the isotropic slopes.
Flt ck_bisector(Flt m1, Flt m2, Flt t1, Flt t2);

template <class S>
Flt ck_bisector(const S& m1, const S& m2, const CKConfig<S>& cfg) {
  return ck_bisector(to_double(m1), to_double(m2), to_double(cfg.t1),
                     to_double(cfg.t2));
}

struct AxiomCheck {
  std::string name;
  long cases = 0;
  long failures = 0;
  double worst_residual = 0.0;
};

struct CKAxiomReport {
  std::vector<AxiomCheck> axioms;
  long rejected = 0;  // draws outside the component under test

  bool all_pass() const {
    for (const auto& a : axioms)
      if (a.failures > 0) return false;
    return true;
  }
  double worst_residual() const {
    double w = 0.0;
    for (const auto& a : axioms) w = std::max(w, a.worst_residual);
    return w;
  }
};

// Runs the angle axioms A1-A5 against a rational configuration:
// A1-A3 exactly at the cross-ratio level (and after the logarithm in
// floating point), A4 structurally on rays, A5 through bisector
// round-trips. samples counts checked triples per real component.
CKAxiomReport ck_axiom_suite(const CKConfig<Rat>& cfg, long samples,
                             std::uint64_t seed);

enum class IsotropicApex { InverseSquare, Inverse };

// Tangent slopes +-s drawn from the apex (0, -1/t^2) (or (0, -1/t)) to the
// absolute conic y = kappa x^2 + t, and the reciprocal half-gap u = 1/s.
struct IsotropicData {
  Flt kappa = 0;
  Flt t = 0;
  Flt s = 0;
  Flt u = 0;
};

IsotropicData isotropic_slopes(Flt kappa, Flt t,
                               IsotropicApex apex = IsotropicApex::InverseSquare);

// log Cr(1/m1, 1/m2; u, -u) / (-2u): the normalized reciprocal-slope cross
// ratio whose limit is the slope difference m1 - m2. With
// allow_horizontal, a zero slope enters as the infinite reciprocal.
Flt parabolic_angle_from_halfgap(Flt m1, Flt m2, Flt u,
                                 bool allow_horizontal = false);

Flt parabolic_angle_normalized(Flt m1, Flt m2, Flt kappa, Flt t,
                               bool allow_horizontal = false,
                               IsotropicApex apex = IsotropicApex::InverseSquare);

// Contrasting degenerate angle from origin-based isotropic lines:
// 1/m1 - 1/m2.
template <class S>
S dual_degenerate_angle(const S& m1, const S& m2) {
  if (m1 == S(0) || m2 == S(0)) throw std::domain_error("zero slope");
  return S(1) / m1 - S(1) / m2;
}

// Chord data of the secant through two points of y = kappa x^2 against the
// absolute y = kappa x^2 + t.
struct ChordIntersection {
  Flt b = 0;      // x_B - x_A
  Flt delta = 0;  // sqrt(b^2 - 4t/kappa)
  Flt x_u = 0;
  Flt x_v = 0;
};

// CK distance |log((b - Delta)/(b + Delta))| between two points of the
// limit parabola, measured against the absolute conic at level t.
std::pair<Flt, ChordIntersection> ck_distance_chord(Flt kappa, Flt t, Flt xa,
                                                    Flt xb);

// First-order deviation alpha_t of the small intersection ratio from
// t/(kappa b^2); alpha_t = O(t).
Flt deviation_extract(Flt kappa, Flt t, Flt xa, Flt xb);

// One probe record of a degeneration limit.
struct ConvergenceRow {
  Flt t = 0;
  Flt value = 0;
  Flt error = 0;
  Flt ratio_to_previous = 0;  // NaN on the first row
};

// Evaluates the normalized parabolic angle while halving the half-gap u,
// starting from u(t0); each row reports the t realizing its u.
std::vector<ConvergenceRow> angle_limit_probe(Flt m1, Flt m2, Flt kappa,
                                              Flt t0, int refinements,
                                              bool allow_horizontal = false);

// t = 1e-1 * 2^-k, k = 0..20.
std::vector<Flt> default_t_schedule();

struct DistanceLimitTable {
  // Asserted expansion d_t - log(1/t) - log kappa -> 2 log |b|.
  std::vector<ConvergenceRow> expansion;
  // Archived candidate |alpha_t - beta_t|/2 vs the norm |b|; recorded, not
  // asserted.
  std::vector<ConvergenceRow> candidate;
  Flt target = 0;  // 2 log |b|
  int skipped = 0;
};

DistanceLimitTable ck_distance_limit_probe(Flt kappa, Flt xa, Flt xb,
                                           const std::vector<Flt>& t_schedule);

}  // namespace dageom

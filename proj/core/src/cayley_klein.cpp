#include "dageom/cayley_klein.hpp"

#include <cmath>
#include <limits>

#include "dageom/sampling.hpp"

namespace dageom {

namespace {

constexpr Flt kNaN = std::numeric_limits<Flt>::quiet_NaN();

}  // namespace

Flt laguerre_angle(Flt m_l, Flt m_m) {
  const Cx i(0.0, 1.0);
  const auto cr = cross_ratio<Cx>(Cx(m_l), Cx(m_m), i, -i);
  const Cx phi = cx_log(cr) / (Cx(2.0) * i);
  return phi.real();
}

namespace {

// Real components cut out of the slope line by the isotropic pair.
enum class Component { Below, Between, Above };

Component component_of(Flt m, Flt lo, Flt hi) {
  if (m < lo) return Component::Below;
  if (m > hi) return Component::Above;
  return Component::Between;
}

}  // namespace

Flt ck_bisector(Flt m1, Flt m2, Flt t1, Flt t2) {
  const Flt lo = std::min(t1, t2);
  const Flt hi = std::max(t1, t2);
  if (m1 == t1 || m1 == t2 || m2 == t1 || m2 == t2)
    throw std::domain_error("isotropic direction");
  if (component_of(m1, lo, hi) != component_of(m2, lo, hi))
    throw std::invalid_argument("slopes in different components");
  if (m1 == m2) return m1;

  // Cr(m1,m;t1,t2) = Cr(m,m2;t1,t2) cross-multiplies to
  // alpha (m-t2)^2 = beta (m-t1)^2 with alpha, beta of equal sign inside a
  // component, so |m-t2| = r |m-t1| with r = sqrt(beta/alpha).
  const Flt alpha = (m1 - t1) * (m2 - t1);
  const Flt beta = (m1 - t2) * (m2 - t2);
  const Flt r = std::sqrt(beta / alpha);

  const Flt inner_lo = std::min(m1, m2);
  const Flt inner_hi = std::max(m1, m2);
  auto admissible = [&](Flt m) {
    return std::isfinite(m) && m >= inner_lo && m <= inner_hi;
  };

  const Flt plus = (t2 + r * t1) / (1.0 + r);
  const Flt minus = (t2 - r * t1) / (1.0 - r);

  Flt m = kNaN;
  if (admissible(plus)) m = plus;
  if (admissible(minus)) {
    if (!std::isnan(m) && minus != plus)
      throw std::logic_error("bisector selection failed");
    if (std::isnan(m)) m = minus;
  }
  if (std::isnan(m)) throw std::logic_error("bisector selection failed");

  // A couple of secant steps sharpen the root beyond the closed form.
  auto g = [&](Flt x) {
    return std::log(((m1 - t1) * (x - t2)) / ((m1 - t2) * (x - t1))) -
           std::log(((x - t1) * (m2 - t2)) / ((x - t2) * (m2 - t1)));
  };
  Flt x0 = m, f0 = g(x0);
  const Flt h = (inner_hi - inner_lo) * 1e-9 + 1e-12;
  Flt x1 = std::min(inner_hi, x0 + h), f1 = g(x1);
  for (int it = 0; it < 3 && f1 != f0; ++it) {
    const Flt x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!admissible(x2)) break;
    x0 = x1; f0 = f1;
    x1 = x2; f1 = g(x2);
  }
  return std::abs(g(m)) <= std::abs(f1) ? m : x1;
}

CKAxiomReport ck_axiom_suite(const CKConfig<Rat>& cfg, long samples,
                             std::uint64_t seed) {
  CKAxiomReport report;
  report.axioms = {{"A1 antisymmetry"}, {"A2 additivity"}, {"A3 vanishing"},
                   {"A4 scaling invariance"}, {"A5 bisection"}};
  AxiomCheck& a1 = report.axioms[0];
  AxiomCheck& a2 = report.axioms[1];
  AxiomCheck& a3 = report.axioms[2];
  AxiomCheck& a4 = report.axioms[3];
  AxiomCheck& a5 = report.axioms[4];

  if (samples <= 0) return report;

  RatSampler rng(seed);
  const Rat lo = std::min(cfg.t1, cfg.t2);
  const Rat hi = std::max(cfg.t1, cfg.t2);
  const Rat width = hi - lo;

  auto in_component = [&](const Rat& m, int comp) {
    switch (comp) {
      case 0: return m < lo;
      case 1: return lo < m && m < hi;
      default: return m > hi;
    }
  };

  // Draws cover a band around both isotropic values; draws landing outside
  // the component under test are rejected, not failed.
  const Rat span = width + Rat(4);
  auto wide_sample = [&]() {
    return (lo - span) + rng.unit_open(4096) * (width + span + span);
  };

  auto note = [](AxiomCheck& ax, bool ok, double residual) {
    ax.cases++;
    if (!ok) ax.failures++;
    ax.worst_residual = std::max(ax.worst_residual, residual);
  };

  const CKConfig<Rat>& k = cfg;
  const double lambda = to_double(cfg.lambda);

  for (int comp = 0; comp < 3; ++comp) {
    long done = 0;
    while (done < samples) {
      const Rat a = wide_sample();
      const Rat b = wide_sample();
      const Rat c = wide_sample();
      if (!in_component(a, comp) || !in_component(b, comp) ||
          !in_component(c, comp)) {
        report.rejected++;
        continue;
      }
      if (a == b || b == c || a == c) continue;
      done++;

      // A1: Cr(a,b) Cr(b,a) = 1 exactly; angles negate after the log.
      const Rat cr_ab = ck_cross_ratio(a, b, k);
      const Rat cr_ba = ck_cross_ratio(b, a, k);
      const double ang_ab = lambda * std::log(to_double(cr_ab));
      const double ang_ba = lambda * std::log(to_double(cr_ba));
      const double res_a1 = std::abs(ang_ab + ang_ba);
      note(a1, cr_ab * cr_ba == Rat(1) && res_a1 <= 1e-12, res_a1);

      // A2: Cr(a,b) Cr(b,c) = Cr(a,c) exactly; angles add after the log.
      const Rat cr_bc = ck_cross_ratio(b, c, k);
      const Rat cr_ac = ck_cross_ratio(a, c, k);
      const double ang_bc = lambda * std::log(to_double(cr_bc));
      const double ang_ac = lambda * std::log(to_double(cr_ac));
      const double res_a2 = std::abs(ang_ab + ang_bc - ang_ac);
      note(a2, cr_ab * cr_bc == cr_ac && res_a2 <= 1e-12, res_a2);

      // A3: Cr(a,a) = 1; and Cr(a,b) = 1 forces a = b, through the exact
      // factorization num - den = (a - b)(t1 - t2).
      const bool vanish = ck_cross_ratio(a, a, k) == Rat(1);
      const Rat num = (a - k.t1) * (b - k.t2);
      const Rat den = (a - k.t2) * (b - k.t1);
      const bool factor_ok = num - den == (a - b) * (k.t1 - k.t2);
      const bool reverse = (cr_ab == Rat(1)) == (a == b);
      note(a3, vanish && factor_ok && reverse, 0.0);

      // A4: rescaling a ray leaves its slope, hence the angle, unchanged.
      const Rat scale = rng.positive_rat(40, 12);
      const Rat rescaled = (a * scale) / scale;
      note(a4, rescaled == a && ck_cross_ratio(rescaled, b, k) == cr_ab, 0.0);

      // A5: equal half-angles at the bisector, then at the quarter point.
      const double da = to_double(a), db = to_double(b);
      const double t1 = to_double(k.t1), t2 = to_double(k.t2);
      const double mid = ck_bisector(da, db, t1, t2);
      auto angle = [&](double x, double y) {
        return lambda *
               std::log(((x - t1) * (y - t2)) / ((x - t2) * (y - t1)));
      };
      const double half_gap = std::abs(angle(da, mid) - angle(mid, db));
      note(a5, half_gap < 1e-12, half_gap);
      const double quarter = ck_bisector(da, mid, t1, t2);
      const double dyadic =
          std::abs(angle(da, quarter) - 0.25 * angle(da, db));
      note(a5, dyadic < 1e-10, dyadic);
    }
  }
  return report;
}

IsotropicData isotropic_slopes(Flt kappa, Flt t, IsotropicApex apex) {
  if (t == 0.0) throw std::invalid_argument("t must be nonzero");
  const Flt level = apex == IsotropicApex::InverseSquare ? 1.0 / (t * t)
                                                         : 1.0 / t;
  const Flt radicand = kappa * (t + level);
  if (!(radicand > 0.0)) throw std::domain_error("no real isotropic pair");
  IsotropicData data;
  data.kappa = kappa;
  data.t = t;
  data.s = 2.0 * std::sqrt(radicand);
  data.u = 1.0 / data.s;
  return data;
}

Flt parabolic_angle_from_halfgap(Flt m1, Flt m2, Flt u, bool allow_horizontal) {
  if (!(u > 0.0)) throw std::invalid_argument("half-gap must be positive");
  if (!allow_horizontal && (m1 == 0.0 || m2 == 0.0))
    throw std::domain_error("zero slope");

  // log Cr(1/m1, 1/m2; u, -u) with Cr expanded into its four factors:
  //   (1 - m1 u)(1 + m2 u) / ((1 + m1 u)(1 - m2 u)).
  // A zero slope contributes nothing, which is the continuous extension of
  // the reciprocal-slope cross ratio through the infinite reciprocal.
  const Flt x1 = m1 * u;
  const Flt x2 = m2 * u;
  if (x1 == 1.0 || x1 == -1.0 || x2 == 1.0 || x2 == -1.0)
    throw std::domain_error("isotropic direction");

  Flt log_cr;
  if (std::abs(x1) < 1.0 && std::abs(x2) < 1.0) {
    // All factors positive: per-factor log1p avoids losing the O(u) signal
    // to rounding of the assembled ratio.
    log_cr = std::log1p(-x1) - std::log1p(x1) + std::log1p(x2) - std::log1p(-x2);
  } else {
    const Flt cr = ((1.0 - x1) * (1.0 + x2)) / ((1.0 + x1) * (1.0 - x2));
    if (!(cr > 0.0)) throw std::domain_error("outside positive component");
    log_cr = std::log(cr);
  }
  return log_cr / (-2.0 * u);
}

Flt parabolic_angle_normalized(Flt m1, Flt m2, Flt kappa, Flt t,
                               bool allow_horizontal, IsotropicApex apex) {
  return parabolic_angle_from_halfgap(m1, m2, isotropic_slopes(kappa, t, apex).u,
                                      allow_horizontal);
}

namespace {

// Inverts u(t) near t -> 0+: solves t + level(t) = 1/(4 kappa u^2) for the
// small positive root.
Flt solve_t_for_halfgap(Flt kappa, Flt u, IsotropicApex apex) {
  const Flt target = 1.0 / (4.0 * kappa * u * u);
  const bool square = apex == IsotropicApex::InverseSquare;
  Flt t = square ? 1.0 / std::sqrt(target) : 1.0 / target;
  for (int it = 0; it < 60; ++it) {
    const Flt level = square ? 1.0 / (t * t) : 1.0 / t;
    const Flt f = t + level - target;
    const Flt df = 1.0 - (square ? 2.0 / (t * t * t) : 1.0 / (t * t));
    const Flt step = f / df;
    t -= step;
    if (std::abs(step) <= 1e-16 * t) break;
  }
  return t;
}

}  // namespace

std::vector<ConvergenceRow> angle_limit_probe(Flt m1, Flt m2, Flt kappa,
                                              Flt t0, int refinements,
                                              bool allow_horizontal) {
  const Flt target = m1 - m2;
  const Flt u0 = isotropic_slopes(kappa, t0).u;
  std::vector<ConvergenceRow> rows;
  rows.reserve(refinements + 1);
  for (int k = 0; k <= refinements; ++k) {
    const Flt u = std::ldexp(u0, -k);
    ConvergenceRow row;
    row.t = k == 0 ? t0 : solve_t_for_halfgap(kappa, u, IsotropicApex::InverseSquare);
    row.value = parabolic_angle_from_halfgap(m1, m2, u, allow_horizontal);
    row.error = std::abs(row.value - target);
    row.ratio_to_previous =
        rows.empty() ? kNaN : row.error / rows.back().error;
    rows.push_back(row);
  }
  return rows;
}

std::vector<Flt> default_t_schedule() {
  std::vector<Flt> ts;
  ts.reserve(21);
  for (int k = 0; k <= 20; ++k) ts.push_back(std::ldexp(0.1, -k));
  return ts;
}

std::pair<Flt, ChordIntersection> ck_distance_chord(Flt kappa, Flt t, Flt xa,
                                                    Flt xb) {
  if (xa == xb) throw std::invalid_argument("coincident chord points");
  if (t == 0.0 || t * kappa < 0.0)
    throw std::invalid_argument("t must have the sign of kappa");
  const Flt b = xb - xa;
  const Flt radicand = b * b - 4.0 * t / kappa;
  if (!(radicand > 0.0)) throw std::domain_error("chord misses Q_t");

  ChordIntersection ci;
  ci.b = b;
  ci.delta = std::sqrt(radicand);
  ci.x_u = (xa + xb - ci.delta) / 2.0;
  ci.x_v = (xa + xb + ci.delta) / 2.0;

  // |log((b - Delta)/(b + Delta))| via the cancellation-free small ratio
  // (|b| - Delta)(|b| + Delta) = 4t/kappa.
  const Flt mag = std::abs(b);
  const Flt small_ratio = (4.0 * t / kappa) / ((mag + ci.delta) * (mag + ci.delta));
  return {-std::log(small_ratio), ci};
}

Flt deviation_extract(Flt kappa, Flt t, Flt xa, Flt xb) {
  auto [d, ci] = ck_distance_chord(kappa, t, xa, xb);
  (void)d;
  const Flt mag = std::abs(ci.b);
  return 4.0 * mag * mag / ((mag + ci.delta) * (mag + ci.delta)) - 1.0;
}

DistanceLimitTable ck_distance_limit_probe(Flt kappa, Flt xa, Flt xb,
                                           const std::vector<Flt>& t_schedule) {
  DistanceLimitTable table;
  const Flt b = std::abs(xb - xa);
  table.target = 2.0 * std::log(b);
  for (Flt t : t_schedule) {
    if (t == 0.0 || t * kappa < 0.0 || b * b - 4.0 * t / kappa <= 0.0) {
      table.skipped++;
      continue;
    }
    auto [d, ci] = ck_distance_chord(kappa, t, xa, xb);
    (void)ci;

    ConvergenceRow row;
    row.t = t;
    row.value = d + std::log(t) - std::log(kappa);
    row.error = std::abs(row.value - table.target);
    row.ratio_to_previous = table.expansion.empty()
                                ? kNaN
                                : row.error / table.expansion.back().error;
    table.expansion.push_back(row);

    // The two chord-ratio deviations coincide, so the candidate quantity
    // |alpha - beta|/2 stays at zero instead of approaching |b|.
    const Flt alpha = deviation_extract(kappa, t, xa, xb);
    const Flt beta = alpha;
    ConvergenceRow cand;
    cand.t = t;
    cand.value = 0.5 * std::abs(alpha - beta);
    cand.error = std::abs(cand.value - b);
    cand.ratio_to_previous = table.candidate.empty()
                                 ? kNaN
                                 : cand.error / table.candidate.back().error;
    table.candidate.push_back(cand);
  }
  return table;
}

}  // namespace dageom

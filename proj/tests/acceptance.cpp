// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is fixed here, not configurable.

#include <chrono>
#include <cstdio>
#include <string>

#include "dageom/cayley_klein.hpp"
#include "dageom/focal.hpp"
#include "dageom/inner_product.hpp"
#include "dageom/parabolic_trig.hpp"
#include "dageom/verify.hpp"

namespace {

constexpr std::uint64_t kSeed = 20250810;
int failures = 0;

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void report(int criterion, const std::string& what, bool ok, double ms) {
  std::printf("[%s] criterion %2d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL",
              criterion, what.c_str(), ms);
  if (!ok) failures++;
}

bool suite_ok(const dageom::verify::RunReport& r, double budget_ms) {
  return r.failures == 0 && r.cases > 0 && r.elapsed_ms < budget_ms;
}

}  // namespace

int main() {
  using namespace dageom;
  const double t_start = now_ms();

  {
    const auto r = verify::focal_suite(500, kSeed);
    report(1, "focal equation zeros and exact parabolic locus, 500 configs",
           suite_ok(r, 5000), r.elapsed_ms);
  }
  {
    const auto r = verify::power_suite(300, kSeed + 1);
    report(2, "secant-independent power, closed form and sign, 300 pairs",
           suite_ok(r, 10000), r.elapsed_ms);
  }
  {
    const auto r = verify::radical_suite(200, kSeed + 2);
    report(3, "radical axes concurrent with equal powers, 200 triples",
           suite_ok(r, 10000), r.elapsed_ms);
  }
  {
    const auto para = verify::parallelogram_suite(1000, kSeed + 3);
    const auto stew = verify::stewart_suite(1000, kSeed + 4);
    const auto trig = verify::trig_suite(1000, kSeed + 5);
    const double ms = para.elapsed_ms + stew.elapsed_ms + trig.elapsed_ms;
    const bool ok = para.failures == 0 && stew.failures == 0 &&
                    trig.failures == 0 && ms < 30000;
    report(4,
           "identity suites exact on 1000 rational triangles each "
           "(parallelogram, cyclic, cosine laws, angle sum, triangle "
           "equality, Stewart both routes, Ptolemy)",
           ok, ms);
  }
  {
    const double t0 = now_ms();
    const auto r = verify::brocard_suite(500, kSeed + 6);
    bool ok = suite_ok(r, 5000);

    // worked instance: kappa = 1, x-coordinates 0, 1, 3
    const DATriangle<Rat> t(Point<Rat>{0, 0}, Point<Rat>{1, 1},
                            Point<Rat>{3, 9});
    const auto br = brocard(t, Rat(1));
    ok = ok && br.u == Rat(6, 7) && br.omega1 == Rat(6, 7) &&
         br.omega2 == Rat(-6, 7) && br.P1.x == Rat(9, 7);
    report(5, "equal-angle point: exact intersections and trig identities, "
              "500 inscribed triangles",
           ok, now_ms() - t0);
  }
  {
    const auto r = verify::laguerre_suite(100, kSeed + 7);
    report(6, "slope-angle cross ratio matches e^{2i phi}, 100 pairs",
           r.failures == 0 && r.cases > 0, r.elapsed_ms);
  }
  {
    const double t0 = now_ms();
    const CKConfig<Rat> cfg(Rat(2), Rat(-2));
    const auto ax = ck_axiom_suite(cfg, 500, kSeed + 8);
    report(7, "CK angle axioms exact at the cross-ratio level, 500 triples "
              "per component; bisector 1e-12, dyadic 1e-10",
           ax.all_pass(), now_ms() - t0);
  }
  {
    const auto r = verify::angle_limit_suite();
    report(8, "angle degeneration second order: ratios in [0.2, 0.32], "
              "final error < 1e-8",
           r.failures == 0, r.elapsed_ms);
  }
  {
    const auto r = verify::distance_limit_suite();
    report(9, "distance degeneration: alpha linear in t, expansion error "
              "< 1e-3 at t = 1e-6 (candidate archived, not asserted)",
           r.failures == 0, r.elapsed_ms);
  }
  {
    const double t0 = now_ms();
    const DATriangle<Rat> t(Point<Rat>{0, 0}, Point<Rat>{3, 9},
                            Point<Rat>{5, 25});
    auto [lhs, rhs] = stewart_check(t, Point<Rat>{1, 3});
    const Rat p = 1, q = 2;
    const Rat ca = da_norm(t.C, t.A), cb = da_norm(t.C, t.B);
    const Rat literal = (q * ca) * (q * ca) + (p * cb) * (p * cb);
    const bool ok =
        lhs == Rat(54) && rhs == Rat(54) && literal == Rat(104) && literal != rhs;
    report(10, "cevian identity: side-weighted form holds (54 = 54), "
               "exponents-inside-products variant fails on the witness",
           ok, now_ms() - t0);
  }

  const double total = now_ms() - t_start;
  const bool in_budget = total < 60000;
  std::printf("%d/10 criteria passed, total %.0f ms%s\n", 10 - failures, total,
              in_budget ? "" : " (over 60 s budget)");
  if (!in_budget) failures++;
  return failures == 0 ? 0 : 1;
}

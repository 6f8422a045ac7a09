#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dageom::verify {

// Outcome of one randomized verification suite. Exact checks contribute
// zero residual; floating-point side checks report their worst normalized
// residual.
struct RunReport {
  std::string suite;
  long cases = 0;
  long failures = 0;
  double worst_residual = 0.0;
  double elapsed_ms = 0.0;
  std::vector<std::string> notes;
};

// Focal-equation suite: zeroes of the focal function and the parabolic
// locus they sweep out.
RunReport focal_suite(long cases, std::uint64_t seed);

// Parabolic-power suite: secant independence, the closed form, the sign
// classification, and the focal-function factorization.
RunReport power_suite(long cases, std::uint64_t seed);

// Radical suite: equal powers along pairwise axes and exact concurrency at
// the center.
RunReport radical_suite(long cases, std::uint64_t seed);

// Inner-product suite: parallelogram law, polarization, Cauchy-Schwarz
// equality, cyclic identities, isoptics.
RunReport parallelogram_suite(long cases, std::uint64_t seed);

// Stewart suite: the cevian identity, its circumparabola route, the
// Ptolemy identity, and the misprinted-exponent witness.
RunReport stewart_suite(long cases, std::uint64_t seed);

// Triangle/trig suite: angle axioms, sign structure, angle sum, triangle
// equality, both cosine laws, the cosp form of the inner product.
RunReport trig_suite(long cases, std::uint64_t seed);

// Equal-angle point suite: constructive agreement, positivity, and the
// three trigonometric identities.
RunReport brocard_suite(long cases, std::uint64_t seed);

// Slope-angle suite over the complex reference directions.
RunReport laguerre_suite(long cases, std::uint64_t seed);

// CK angle axioms over random rational configurations, plus the dual
// degenerate angle.
RunReport ck_axioms_suite(long cases, std::uint64_t seed);

// Degeneration limits: second-order convergence of the normalized angle
// and the verifiable distance expansions.
RunReport angle_limit_suite();
RunReport distance_limit_suite();

// Named CLI suites: all | power | parallelogram | stewart | trig |
// brocard | ck-axioms | limits. Throws std::invalid_argument for unknown
// names.
std::vector<RunReport> run_named(const std::string& name, long cases,
                                 std::uint64_t seed);

}  // namespace dageom::verify

// da-geom: command line front end for the difference-angle geometry kernel.
//
// Exact subcommands (focal, power, radical, triangle, inner, brocard) parse
// every numeric flag as an exact rational ("p/q", integer, or plain
// decimal) and print rationals as strings, so results can be checked
// without rounding. The ck subcommands work in floating point.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dageom/cayley_klein.hpp"
#include "dageom/focal.hpp"
#include "dageom/geometry.hpp"
#include "dageom/inner_product.hpp"
#include "dageom/parabolic_trig.hpp"
#include "dageom/verify.hpp"

namespace {

using dageom::Rat;
using json = nlohmann::ordered_json;
using RPoint = dageom::Point<Rat>;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(dageom::parse_rat(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

RPoint parse_point(const std::string& text) {
  auto parts = parse_rat_list(text);
  if (parts.size() != 2)
    throw std::invalid_argument("expected x,y pair: " + text);
  return {parts[0], parts[1]};
}

dageom::Parabola<Rat> parse_parabola(const std::string& text) {
  auto parts = parse_rat_list(text);
  if (parts.size() != 3)
    throw std::invalid_argument("expected kappa,h,k triple: " + text);
  return {parts[0], parts[1], parts[2]};
}

json rat_json(const Rat& r) { return r.str(); }

json point_json(const RPoint& p) {
  return json::array({rat_json(p.x), rat_json(p.y)});
}

json line_json(const dageom::SlopeLine<Rat>& l) {
  json j;
  if (l.is_singular()) {
    j["kind"] = "singular";
    j["x0"] = rat_json(l.x0());
  } else {
    j["kind"] = "sloped";
    j["slope"] = rat_json(l.slope());
    j["intercept"] = rat_json(l.intercept());
  }
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------- focal

struct FocalArgs {
  std::string focus;
  std::string directrix;
  std::string xs;
  std::string point;
};

int run_focal(const FocalArgs& args) {
  const RPoint f = parse_point(args.focus);
  const Rat y0 = dageom::parse_rat(args.directrix);
  const auto parabola = dageom::Parabola<Rat>::from_focus_directrix(f, y0);

  json out;
  out["command"] = "focal";
  out["focus"] = point_json(f);
  out["directrix"] = rat_json(y0);
  out["parabola"] = {{"kappa", rat_json(parabola.kappa())},
                     {"vertex", json::array({rat_json(parabola.h()),
                                             rat_json(parabola.k())})}};

  std::vector<Rat> xs;
  if (!args.xs.empty()) xs = parse_rat_list(args.xs);
  if (!args.point.empty()) xs.push_back(dageom::parse_rat(args.point));

  json points = json::array();
  for (const RPoint& p : dageom::focal_locus(f, y0, xs))
    points.push_back(point_json(p));
  out["points"] = points;
  emit(out);
  return kExitOk;
}

// ---------------------------------------------------------------- power

struct PowerArgs {
  std::string parabola;
  std::string point;
  std::string slopes;
};

int run_power(const PowerArgs& args) {
  const auto c = parse_parabola(args.parabola);
  const RPoint p = parse_point(args.point);
  const auto power = dageom::parabolic_power(c, p);

  json out;
  out["command"] = "power";
  out["parabola"] = {{"kappa", rat_json(c.kappa())},
                     {"vertex", json::array({rat_json(c.h()), rat_json(c.k())})}};
  out["point"] = point_json(p);
  out["value"] = rat_json(power.value);
  out["position"] = dageom::to_string(power.position);

  if (!args.slopes.empty()) {
    json secants = json::array();
    for (const Rat& m : parse_rat_list(args.slopes)) {
      const Rat product = dageom::secant_power_product(c, p, m);
      secants.push_back(
          {{"slope", rat_json(m)}, {"product", rat_json(product)}});
    }
    out["secants"] = secants;
  }
  emit(out);
  return kExitOk;
}

// --------------------------------------------------------------- radical

struct RadicalArgs {
  std::string p1;
  std::string p2;
  std::string p3;
};

int run_radical(const RadicalArgs& args) {
  const auto c1 = parse_parabola(args.p1);
  const auto c2 = parse_parabola(args.p2);

  json out;
  out["command"] = "radical";
  if (args.p3.empty()) {
    out["axis"] = line_json(dageom::radical_axis(c1, c2));
    emit(out);
    return kExitOk;
  }

  const auto c3 = parse_parabola(args.p3);
  out["axes"] = json::array({line_json(dageom::radical_axis(c1, c2)),
                             line_json(dageom::radical_axis(c2, c3)),
                             line_json(dageom::radical_axis(c1, c3))});
  const RPoint center = dageom::radical_center(c1, c2, c3);
  out["center"] = point_json(center);
  out["powers"] = json::array({rat_json(dageom::parabolic_power(c1, center).value),
                               rat_json(dageom::parabolic_power(c2, center).value),
                               rat_json(dageom::parabolic_power(c3, center).value)});
  emit(out);
  return kExitOk;
}

// -------------------------------------------------------------- triangle

struct TriangleArgs {
  std::string a;
  std::string b;
  std::string c;
};

int run_triangle(const TriangleArgs& args) {
  const dageom::DATriangle<Rat> t(parse_point(args.a), parse_point(args.b),
                                  parse_point(args.c));

  const Rat ta = dageom::interior_angle(t, dageom::Vertex::A).value;
  const Rat tb = dageom::interior_angle(t, dageom::Vertex::B).value;
  const Rat tc = dageom::interior_angle(t, dageom::Vertex::C).value;
  auto [cyc_lhs, cyc_rhs] = dageom::cyclic_inner_identity(t);

  json out;
  out["command"] = "triangle";
  out["vertices"] = json::array({point_json(t.A), point_json(t.B),
                                 point_json(t.C)});
  out["sides"] = {{"a", rat_json(dageom::da_norm(t.B, t.C))},
                  {"b", rat_json(dageom::da_norm(t.C, t.A))},
                  {"c", rat_json(dageom::da_norm(t.A, t.B))}};
  out["interior_angles"] = {{"A", rat_json(ta)},
                            {"B", rat_json(tb)},
                            {"C", rat_json(tc)}};
  out["angle_sum"] = rat_json(ta + tb + tc);
  out["triangle_equality"] = dageom::triangle_equality_check(t);
  out["parallelogram_law"] = dageom::parallelogram_check(t);
  out["positive_cyclic"] = dageom::positive_cyclic_check(t);
  out["cyclic_inner"] = {{"lhs", rat_json(cyc_lhs)},
                         {"rhs", rat_json(cyc_rhs)}};
  out["first_cosine_law"] = dageom::first_cosine_law_check(t);
  out["second_cosine_law"] = dageom::second_cosine_law_check(t);
  emit(out);
  return kExitOk;
}

// ----------------------------------------------------------------- inner

struct InnerArgs {
  std::string u;
  std::string v;
};

int run_inner(const InnerArgs& args) {
  const RPoint pu = parse_point(args.u);
  const RPoint pv = parse_point(args.v);
  const dageom::DAVector<Rat> u{pu.x, pu.y};
  const dageom::DAVector<Rat> v{pv.x, pv.y};

  using std::abs;
  json out;
  out["command"] = "inner";
  out["inner"] = rat_json(dageom::da_inner(u, v));
  out["quotient_inner"] = rat_json(dageom::quotient_inner(u, v));
  out["norm_u"] = rat_json(dageom::da_norm(u));
  out["norm_v"] = rat_json(dageom::da_norm(v));
  out["cauchy_schwarz_equality"] =
      abs(dageom::da_inner(u, v)) == dageom::da_norm(u) * dageom::da_norm(v);
  out["alternating"] = rat_json(dageom::alternating_product(u, v));
  emit(out);
  return kExitOk;
}

// --------------------------------------------------------------- brocard

struct BrocardArgs {
  std::string kappa;
  std::string coords;
};

int run_brocard(const BrocardArgs& args) {
  const Rat kappa = dageom::parse_rat(args.kappa);
  const auto coords = parse_rat_list(args.coords);
  if (coords.size() != 3)
    throw std::invalid_argument("expected three x-coordinates");
  auto lift = [&](const Rat& x) { return RPoint{x, kappa * x * x}; };
  const dageom::DATriangle<Rat> t(lift(coords[0]), lift(coords[1]),
                                  lift(coords[2]));

  const auto br = dageom::brocard(t, kappa);
  json out;
  out["command"] = "brocard";
  out["kappa"] = rat_json(kappa);
  out["u"] = rat_json(br.u);
  out["omega1"] = rat_json(br.omega1);
  out["omega2"] = rat_json(br.omega2);
  out["p1"] = point_json(br.P1);
  out["p2"] = point_json(br.P2);
  out["area"] = rat_json(dageom::da_area(t, kappa));
  out["identities"] = dageom::brocard_identities_check(t, kappa);
  emit(out);
  return kExitOk;
}

// -------------------------------------------------------------------- ck

json row_json(const dageom::ConvergenceRow& r) {
  return {{"t", r.t},
          {"value", r.value},
          {"error", r.error},
          {"ratio", r.ratio_to_previous}};
}

void emit_rows_csv(const std::vector<dageom::ConvergenceRow>& rows) {
  std::cout << "t,value,error,ratio\n";
  for (const auto& r : rows)
    std::cout << fmt17(r.t) << ',' << fmt17(r.value) << ',' << fmt17(r.error)
              << ',' << fmt17(r.ratio_to_previous) << "\n";
}

void emit_scalar(const std::string& format, const char* sub, double value) {
  if (format == "csv") {
    std::cout << "value\n" << fmt17(value) << "\n";
    return;
  }
  emit(json{{"command", "ck"}, {"sub", sub}, {"value", value}});
}

struct CkState {
  std::string format = "json";
  std::string m1, m2, t1, t2;
  std::string lambda = "1";
  double kappa = 1.0;
  double t = 0.0;
  double xa = 0.0, xb = 0.0;
  double t0 = 1e-2;
  int refinements = 8;
  bool allow_horizontal = false;
  std::string schedule;
  int rc = kExitOk;
};

void ck_angle_cmd(CkState& st) {
  const dageom::CKConfig<Rat> cfg(dageom::parse_rat(st.t1),
                                  dageom::parse_rat(st.t2),
                                  dageom::parse_rat(st.lambda));
  const Rat m1 = dageom::parse_rat(st.m1), m2 = dageom::parse_rat(st.m2);
  const double value = dageom::ck_angle(m1, m2, cfg);
  if (st.format == "csv") {
    std::cout << "value\n" << fmt17(value) << "\n";
    return;
  }
  emit(json{{"command", "ck"},
            {"sub", "angle"},
            {"cross_ratio", rat_json(dageom::ck_cross_ratio(m1, m2, cfg))},
            {"value", value}});
}

void ck_laguerre_cmd(CkState& st) {
  emit_scalar(st.format, "laguerre",
              dageom::laguerre_angle(std::stod(st.m1), std::stod(st.m2)));
}

void ck_bisector_cmd(CkState& st) {
  const double t1 = std::stod(st.t1), t2 = std::stod(st.t2);
  const double m1 = std::stod(st.m1), m2 = std::stod(st.m2);
  const double mid = dageom::ck_bisector(m1, m2, t1, t2);
  const dageom::CKConfig<double> cfg(t1, t2);
  const double residual = std::abs(dageom::ck_angle(m1, mid, cfg) -
                                   dageom::ck_angle(mid, m2, cfg));
  if (st.format == "csv") {
    std::cout << "value,residual\n" << fmt17(mid) << ',' << fmt17(residual)
              << "\n";
    return;
  }
  emit(json{{"command", "ck"},
            {"sub", "bisector"},
            {"value", mid},
            {"residual", residual}});
}

void ck_distance_cmd(CkState& st) {
  auto [d, ci] = dageom::ck_distance_chord(st.kappa, st.t, st.xa, st.xb);
  if (st.format == "csv") {
    std::cout << "value\n" << fmt17(d) << "\n";
    return;
  }
  emit(json{{"command", "ck"},
            {"sub", "distance"},
            {"value", d},
            {"chord", {{"b", ci.b},
                       {"delta", ci.delta},
                       {"xu", ci.x_u},
                       {"xv", ci.x_v}}}});
}

void ck_limit_angle_cmd(CkState& st) {
  const double m1 = std::stod(st.m1), m2 = std::stod(st.m2);
  const auto rows = dageom::angle_limit_probe(m1, m2, st.kappa, st.t0,
                                              st.refinements,
                                              st.allow_horizontal);
  if (st.format == "csv") {
    emit_rows_csv(rows);
    return;
  }
  json jrows = json::array();
  for (const auto& r : rows) jrows.push_back(row_json(r));
  emit(json{{"command", "ck"},
            {"sub", "limit-angle"},
            {"target", m1 - m2},
            {"rows", jrows}});
}

void ck_limit_distance_cmd(CkState& st) {
  std::vector<double> schedule;
  if (st.schedule.empty()) {
    schedule = dageom::default_t_schedule();
  } else {
    std::size_t pos = 0;
    while (pos <= st.schedule.size()) {
      const std::size_t comma = st.schedule.find(',', pos);
      schedule.push_back(std::stod(st.schedule.substr(
          pos, comma == std::string::npos ? comma : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  const auto table =
      dageom::ck_distance_limit_probe(st.kappa, st.xa, st.xb, schedule);
  if (st.format == "csv") {
    emit_rows_csv(table.expansion);
    return;
  }
  json exp_rows = json::array(), cand_rows = json::array();
  for (const auto& r : table.expansion) exp_rows.push_back(row_json(r));
  for (const auto& r : table.candidate) cand_rows.push_back(row_json(r));
  emit(json{{"command", "ck"},
            {"sub", "limit-distance"},
            {"target", table.target},
            {"skipped", table.skipped},
            {"rows", exp_rows},
            {"candidate_rows", cand_rows}});
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  long cases = 500;
  std::optional<std::uint64_t> seed;
};

int run_verify(const VerifyArgs& args) {
  std::uint64_t seed = 12345;
  if (const char* env = std::getenv("DA_GEOM_SEED"))
    seed = std::strtoull(env, nullptr, 10);
  if (args.seed) seed = *args.seed;

  const auto reports = dageom::verify::run_named(args.suite, args.cases, seed);

  json out = json::array();
  long failures = 0;
  for (const auto& r : reports) {
    json jr{{"suite", r.suite},
            {"cases", r.cases},
            {"failures", r.failures},
            {"worst_residual", r.worst_residual}};
    if (!r.notes.empty()) jr["notes"] = r.notes;
    out.push_back(jr);
    failures += r.failures;
    std::fprintf(stderr,
                 "suite %-14s %6ld cases, %3ld failures, worst residual "
                 "%.3g, %.1f ms\n",
                 r.suite.c_str(), r.cases, r.failures, r.worst_residual,
                 r.elapsed_ms);
  }
  emit(out);
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"difference-angle geometry kernel"};
  app.require_subcommand(1);

  FocalArgs focal_args;
  auto* focal = app.add_subcommand("focal", "focal equation and locus");
  focal->add_option("--focus", focal_args.focus, "focus point fx,fy")
      ->required();
  focal->add_option("--directrix", focal_args.directrix, "directrix level")
      ->required();
  focal->add_option("--xs", focal_args.xs, "comma-separated sample x values");
  focal->add_option("--point", focal_args.point, "single base x value");

  PowerArgs power_args;
  auto* power = app.add_subcommand("power", "parabolic power of a point");
  power->add_option("--parabola", power_args.parabola, "kappa,h,k")->required();
  power->add_option("--point", power_args.point, "point x,y")->required();
  power->add_option("--slopes", power_args.slopes,
                    "secant slopes for the product check");

  RadicalArgs radical_args;
  auto* radical = app.add_subcommand("radical", "radical axis and center");
  radical->add_option("--p1", radical_args.p1, "kappa,h,k")->required();
  radical->add_option("--p2", radical_args.p2, "kappa,h,k")->required();
  radical->add_option("--p3", radical_args.p3, "kappa,h,k");

  TriangleArgs triangle_args;
  auto* triangle = app.add_subcommand("triangle", "triangle identities");
  triangle->add_option("--a", triangle_args.a, "vertex x,y")->required();
  triangle->add_option("--b", triangle_args.b, "vertex x,y")->required();
  triangle->add_option("--c", triangle_args.c, "vertex x,y")->required();

  InnerArgs inner_args;
  auto* inner = app.add_subcommand("inner", "inner and alternating products");
  inner->add_option("--u", inner_args.u, "vector dx,dy")->required();
  inner->add_option("--v", inner_args.v, "vector dx,dy")->required();

  BrocardArgs brocard_args;
  auto* brocard = app.add_subcommand("brocard", "equal-angle point");
  brocard->add_option("--kappa", brocard_args.kappa, "curve coefficient")
      ->required();
  brocard->add_option("--coords", brocard_args.coords,
                      "x-coordinates a,b,c on y = kappa x^2")
      ->required();

  CkState ck_state;
  auto* ck = app.add_subcommand("ck", "Cayley-Klein angles and distances");
  ck->require_subcommand(1);
  ck->fallthrough();
  ck->add_option("--format", ck_state.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* ck_angle = ck->add_subcommand("angle", "log cross-ratio angle");
  ck_angle->fallthrough();
  ck_angle->add_option("--m1", ck_state.m1)->required();
  ck_angle->add_option("--m2", ck_state.m2)->required();
  ck_angle->add_option("--t1", ck_state.t1)->required();
  ck_angle->add_option("--t2", ck_state.t2)->required();
  ck_angle->add_option("--lambda", ck_state.lambda);

  auto* ck_laguerre = ck->add_subcommand("laguerre", "Euclidean slope angle");
  ck_laguerre->fallthrough();
  ck_laguerre->add_option("--m1", ck_state.m1)->required();
  ck_laguerre->add_option("--m2", ck_state.m2)->required();

  auto* ck_bisector = ck->add_subcommand("bisector", "CK angle bisector");
  ck_bisector->fallthrough();
  ck_bisector->add_option("--m1", ck_state.m1)->required();
  ck_bisector->add_option("--m2", ck_state.m2)->required();
  ck_bisector->add_option("--t1", ck_state.t1)->required();
  ck_bisector->add_option("--t2", ck_state.t2)->required();

  auto* ck_distance = ck->add_subcommand("distance", "CK chord distance");
  ck_distance->fallthrough();
  ck_distance->add_option("--kappa", ck_state.kappa)->required();
  ck_distance->add_option("--xa", ck_state.xa)->required();
  ck_distance->add_option("--xb", ck_state.xb)->required();
  ck_distance->add_option("--t", ck_state.t)->required();

  auto* ck_la = ck->add_subcommand("limit-angle", "angle degeneration table");
  ck_la->fallthrough();
  ck_la->add_option("--m1", ck_state.m1)->required();
  ck_la->add_option("--m2", ck_state.m2)->required();
  ck_la->add_option("--kappa", ck_state.kappa);
  ck_la->add_option("--t0", ck_state.t0);
  ck_la->add_option("--refinements", ck_state.refinements);
  ck_la->add_flag("--allow-horizontal", ck_state.allow_horizontal);

  auto* ck_ld =
      ck->add_subcommand("limit-distance", "distance degeneration table");
  ck_ld->fallthrough();
  ck_ld->add_option("--kappa", ck_state.kappa);
  ck_ld->add_option("--xa", ck_state.xa)->required();
  ck_ld->add_option("--xb", ck_state.xb)->required();
  ck_ld->add_option("--schedule", ck_state.schedule,
                    "comma-separated t values (default 0.1 * 2^-k)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "randomized identity suites");
  verify->add_option("--suite", verify_args.suite,
                     "all|power|parallelogram|stewart|trig|brocard|"
                     "ck-axioms|limits");
  verify->add_option("--cases", verify_args.cases, "cases per suite");
  std::uint64_t seed_flag = 0;
  auto* seed_opt = verify->add_option("--seed", seed_flag, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*focal) return run_focal(focal_args);
    if (*power) return run_power(power_args);
    if (*radical) return run_radical(radical_args);
    if (*triangle) return run_triangle(triangle_args);
    if (*inner) return run_inner(inner_args);
    if (*brocard) return run_brocard(brocard_args);
    if (*ck) {
      if (*ck_angle) ck_angle_cmd(ck_state);
      else if (*ck_laguerre) ck_laguerre_cmd(ck_state);
      else if (*ck_bisector) ck_bisector_cmd(ck_state);
      else if (*ck_distance) ck_distance_cmd(ck_state);
      else if (*ck_la) ck_limit_angle_cmd(ck_state);
      else if (*ck_ld) ck_limit_distance_cmd(ck_state);
      return ck_state.rc;
    }
    if (*verify) {
      if (*seed_opt) verify_args.seed = seed_flag;
      return run_verify(verify_args);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

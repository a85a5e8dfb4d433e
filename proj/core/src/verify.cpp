#include "equitangent/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "equitangent/dodecagon.hpp"
#include "equitangent/io.hpp"
#include "equitangent/loci.hpp"
#include "equitangent/torus.hpp"

namespace equitangent {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------

Outcome angle_table() {
  constexpr double kTol = 1e-9;
  const DodecagonParams p{1.0, deg_to_rad(2.0), deg_to_rad(3.0)};
  const Dodecagon d = build_dodecagon(p);
  const auto states = chord_motion(d);
  const auto expected = symbolic_angle_table(p, derived_angles(d));
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const StateAngles got = state_angles(states[k]);
    worst = std::max({worst, std::abs(got.beta - expected[k].beta),
                      std::abs(got.alpha - expected[k].alpha)});
  }
  return {worst <= kTol, "max |error| = " + fmt("%.3g", worst) + " rad over 8 pairs"};
}

Outcome discrete_inequality() {
  constexpr int kSamplesPerStep = 10000;
  const Dodecagon d = build_dodecagon({});
  const auto states = chord_motion(d);
  double min_gap = std::numeric_limits<double>::infinity();
  double max_sum = 0.0;
  bool ok = true;
  auto check = [&](const ChordState& s) {
    const StateAngles a = state_angles(s);
    min_gap = std::min(min_gap, a.alpha - a.beta);
    max_sum = std::max(max_sum, a.alpha + a.beta);
    ok &= a.beta < a.alpha && a.alpha + a.beta < kPi;
  };
  for (const auto& s : states) check(s);
  const auto fine = interpolate_motion(states, kSamplesPerStep + 1);
  for (const auto& s : fine) check(s);
  return {ok && min_gap > 0.0, std::to_string(states.size()) + " states + " +
                                   std::to_string(fine.size()) + " samples, min(alpha-beta) = " +
                                   fmt("%.6g", rad_to_deg(min_gap)) + " deg, max(alpha+beta) = " +
                                   fmt("%.6g", rad_to_deg(max_sum)) + " deg"};
}

Outcome derived_inequality() {
  bool ok = true;
  std::string detail;
  for (double phi_deg : {0.5, 1.0, 2.0, 4.0}) {
    const DodecagonParams p{1.0, deg_to_rad(phi_deg), deg_to_rad(1.5 * phi_deg)};
    try {
      const DerivedAngles a = derived_angles(build_dodecagon(p));
      ok &= p.phi < a.theta && p.phi < a.delta;
      detail += "phi=" + fmt("%g", phi_deg) + ": theta=" + fmt("%.4f", rad_to_deg(a.theta)) +
                " delta=" + fmt("%.4f", rad_to_deg(a.delta)) + "; ";
    } catch (const GeometryError& e) {
      ok = false;
      detail += "phi=" + fmt("%g", phi_deg) + ": " + e.what() + "; ";
    }
  }
  return {ok, detail};
}

std::vector<Point> smoothed_star_walk(const Dodecagon& d, const PiecewiseCircularCurve& smoothed) {
  const auto fine = interpolate_motion(chord_motion(d), 64);
  return closed_polyline(smoothed_star(d.polygon(), smoothed, fine), 1e-12);
}

Outcome headline_certificate() {
  constexpr int kSamples = 10000;
  const Dodecagon d = build_dodecagon({});
  const auto smoothed = smooth(d.polygon(), 1e-3, 1e3);
  const auto cert = certify_walk(ConvexBody{smoothed}, smoothed_star_walk(d, smoothed), kSamples);
  return {cert.min_defect > 0.0 && cert.all_same_sign && cert.triangle_ok,
          std::to_string(cert.samples.size()) + " samples, min(L_left-L_right) = " +
              fmt("%.6g", cert.min_defect) + ", min(alpha-beta) = " +
              fmt("%.4g", rad_to_deg(cert.min_angle_gap)) + " deg"};
}

Outcome star_pairing() {
  constexpr double kTol = 1e-9;
  const Dodecagon d = build_dodecagon({});
  const auto states = chord_motion(d);
  const auto star = outer_star(states);
  const auto smoothed = smooth(d.polygon(), 1e-3, 1e3);
  double worst = 0.0;
  double min_split = std::numeric_limits<double>::infinity();
  for (int b = 0; b < kBlocks; ++b) {
    for (int k = 0; k < 8; k += 2) {
      const std::size_t i = static_cast<std::size_t>(b * kStatesPerBlock + k);
      worst = std::max(worst, distance(star[i], star[i + 1]));
      const auto a = smooth_chord(d.polygon(), smoothed, states[i]).apex;
      const auto c = smooth_chord(d.polygon(), smoothed, states[i + 1]).apex;
      if (a && c) min_split = std::min(min_split, distance(*a, *c));
      else min_split = 0.0;
    }
  }
  return {worst <= kTol * d.params().side && min_split > kTol * d.params().side,
          "polygon pairs within " + fmt("%.3g", worst) + ", smoothed pairs apart by >= " +
              fmt("%.3g", min_split)};
}

std::string census(const std::vector<LocusComponent>& comps) {
  int counts[4] = {0, 0, 0, 0};
  for (const auto& c : comps) ++counts[static_cast<int>(c.kind)];
  return std::to_string(counts[1]) + " boundary_to_infinity + " + std::to_string(counts[0]) +
         " boundary_to_boundary + " + std::to_string(counts[2]) + " infinity_to_infinity + " +
         std::to_string(counts[3]) + " closed";
}

Outcome triangle_census() {
  constexpr int kResolution = 1024;
  constexpr double kCells = 2.0;
  const ConvexPolygon tri({{0.0, 0.0}, {4.0, 0.0}, {0.5, 1.0}});
  const ScalarField field = equitangent_field(ConvexBody{tri});
  const auto traced = trace_locus(field, kResolution);
  const auto exact = triangle_locus_exact(tri, field.domain);
  const double cell = field.domain.width() / kResolution;
  double worst = 0.0;
  for (const auto& c : traced) worst = std::max(worst, max_distance_to(exact, c.points));
  const std::string expected = "4 boundary_to_infinity + 1 boundary_to_boundary + 0 infinity_to_infinity + 0 closed";
  const bool ok = census(traced) == expected && census(exact) == expected && worst <= kCells * cell;
  return {ok, "traced: " + census(traced) + "; exact: " + census(exact) +
                  "; max distance to exact = " + fmt("%.3g", worst / cell) + " cells"};
}

Outcome isoptic_points() {
  constexpr double kTol = 1e-3;
  const ConvexBody ellipse{SupportOval::ellipse(2.0, 1.0)};
  bool ok = true;
  std::string detail;
  for (double phi : {kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0}) {
    const auto pts = equal_tangent_points_on_isoptic(ellipse, phi);
    ok &= pts.size() >= 4;
    detail += "phi=" + fmt("%.4f", phi) + ": " + std::to_string(pts.size()) + " points; ";
    if (phi == kPi / 2.0) {
      double circle_err = 0.0, axis_err = 0.0;
      for (const Point& p : pts) {
        circle_err = std::max(circle_err, std::abs(norm(p) - std::sqrt(5.0)));
        axis_err = std::max(axis_err, std::min(std::abs(p.x), std::abs(p.y)));
      }
      ok &= pts.size() == 4 && circle_err <= kTol && axis_err <= kTol;
      detail += "off circle " + fmt("%.2g", circle_err) + ", off axes " + fmt("%.2g", axis_err) + "; ";
    }
  }
  return {ok, detail};
}

// Sign changes of consecutive differences of f over n cyclic samples; the
// independent count used to confirm the extremum finders.
template <class F>
int brute_force_extrema(F&& f, double period, int n, double* range) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = f(period * i / n);
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  *range = *hi - *lo;
  int changes = 0;
  int last = 0;
  for (int i = 0; i <= n; ++i) {
    const double d = v[(i + 1) % n] - v[i % n];
    const int s = d > 1e-13 ? 1 : (d < -1e-13 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last && i < n + 1) ++changes;
    last = s;
  }
  return changes;
}

Outcome limit_theorems() {
  constexpr int kOracleSamples = 1000000;
  const SupportOval ellipse = SupportOval::ellipse(2.0, 1.0);
  const SupportOval trefoil = SupportOval::fourier(1.0, {{0.0, 0.0}, {0.0, 0.0}, {0.1, 0.0}});
  auto count_or_degenerate = [](auto&& fn) -> std::pair<int, std::string> {
    try {
      const int n = static_cast<int>(fn().size());
      return {n, std::to_string(n)};
    } catch (const GeometryError& e) {
      return {-1, std::string("none (") + e.what() + ")"};
    }
  };
  const auto ev = count_or_degenerate([&] { return vertices(ellipse); });
  const auto ed = count_or_degenerate([&] { return diameters(ellipse); });
  const auto tv = count_or_degenerate([&] { return vertices(trefoil); });
  const auto td = count_or_degenerate([&] { return diameters(trefoil); });

  double range = 0.0;
  const int oracle_tv = brute_force_extrema([&](double t) { return trefoil.radius_of_curvature(t); },
                                            kTwoPi, kOracleSamples, &range);
  const int oracle_td = brute_force_extrema(
      [&](double t) { return trefoil.eval(t).h + trefoil.eval(t + kPi).h; }, kPi, kOracleSamples, &range);
  const double width_range = range;

  const bool ok = ev.first == 4 && ed.first == 2 && tv.first == 6 && td.first == 3;
  return {ok, "ellipse: " + ev.second + " vertices, " + ed.second +
                  " diameters; perturbed oval: " + tv.second + " vertices (oracle " +
                  std::to_string(oracle_tv) + "), " + td.second + " diameters (oracle: " +
                  std::to_string(oracle_td) + " width extrema, width range " +
                  fmt("%.3g", width_range) + ")"};
}

Outcome torus_loops() {
  constexpr int kGrid = 512;
  const Dodecagon d = build_dodecagon({});
  const auto smoothed = smooth(d.polygon(), 1e-3, 1e3);
  const ConvexBody pcc{smoothed};
  const auto pcc_loops = trace_torus_curve(pcc, kGrid);
  const auto pcc_essential = essential_loops(pcc_loops);

  const TorusLoop bridge = walk_to_torus(pcc, smoothed_star_walk(d, smoothed), 4000);
  const bool bridge_ok = bridge.class_p == 1 && bridge.class_q == 1;

  const ConvexBody ellipse{SupportOval::ellipse(2.0, 1.0)};
  const auto loops = trace_torus_curve(ellipse, kGrid);
  const auto essential = essential_loops(loops);
  // Oracle: reflections in the axes pair theta with -theta and pi - theta.
  const double cell = kTwoPi / kGrid;
  double off_reflection = 0.0;
  for (const auto& l : essential) {
    for (const Point& st : l.points) {
      const double a = std::abs(wrap_signed(st.x + st.y));
      const double b = std::abs(wrap_signed(st.x + st.y - kPi));
      off_reflection = std::max(off_reflection, std::min(a, b));
    }
  }
  const TorusLoop diagonal = diagonal_loop(kTwoPi, kGrid);
  int min_cross = std::numeric_limits<int>::max();
  for (const auto& l : essential) min_cross = std::min(min_cross, count_intersections(diagonal, l));
  if (essential.empty()) min_cross = 0;

  const bool ok = pcc_essential.empty() && bridge_ok && essential.size() == 2 &&
                  off_reflection <= 2.0 * cell && min_cross >= 2;
  return {ok, "smoothed dodecagon: " + std::to_string(pcc_essential.size()) + " essential of " +
                  std::to_string(pcc_loops.size() - 1) + " loops, walk class (" +
                  std::to_string(bridge.class_p) + "," + std::to_string(bridge.class_q) +
                  "); ellipse: " + std::to_string(essential.size()) +
                  " essential, off reflection pairs " + fmt("%.2g", off_reflection / cell) +
                  " cells, diagonal crossings >= " + std::to_string(min_cross)};
}

SupportOval random_oval(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto range = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  if (unit(rng) < 0.5) {
    return SupportOval::ellipse(range(0.5, 3.0), range(0.5, 3.0))
        .rotated(range(0.0, kTwoPi))
        .translated({range(-1.0, 1.0), range(-1.0, 1.0)});
  }
  const double c0 = range(1.0, 2.0);
  std::vector<std::pair<double, double>> harmonics{{range(-0.5, 0.5), range(-0.5, 0.5)}};
  for (int k = 2; k <= 5; ++k) {
    const double bound = 0.9 * c0 / (8.0 * (k * k - 1));
    harmonics.emplace_back(range(-bound, bound), range(-bound, bound));
  }
  return SupportOval::fourier(c0, std::move(harmonics));
}

Point random_exterior(const SupportOval& oval, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double dir = kTwoPi * unit(rng);
  const double gap = oval.diameter() * (0.05 + 2.95 * unit(rng));
  return unit_vector(dir) * (oval.eval(dir).h + gap);
}

std::string determinism_snapshot() {
  std::ostringstream out;
  const ConvexBody ellipse{SupportOval::ellipse(2.0, 1.0)};
  std::vector<Point> circle;
  for (int i = 0; i < 360; ++i) circle.push_back(unit_vector(kTwoPi * i / 360) * 3.0);
  write_certificate_csv(out, certify_walk(ellipse, circle, 500));
  const ConvexPolygon tri({{0.0, 0.0}, {4.0, 0.0}, {0.5, 1.0}});
  write_locus_csv(out, trace_locus(equitangent_field(ConvexBody{tri}), 128));
  write_torus_csv(out, trace_torus_curve(ellipse, 128));
  out << body_to_json(ConvexBody{smooth(build_dodecagon({}).polygon(), 1e-3, 1e3)});
  return out.str();
}

Outcome property_suites() {
  constexpr int kOvals = 1000;
  constexpr double kSinesTol = 1e-6;
  constexpr int kPairs = 10000;
  constexpr double kAntisymmetryTol = 1e-9;
  std::mt19937_64 rng(0);

  double worst_sines = 0.0;
  for (int i = 0; i < kOvals; ++i) {
    const SupportOval oval = random_oval(rng);
    const Point apex = random_exterior(oval, rng);
    const TangentProbe p = tangent_probe(ConvexBody{oval}, apex);
    const double chord = distance(p.left.point, p.right.point);
    const double r1 = p.left.length / std::sin(p.alpha);
    const double r2 = p.right.length / std::sin(p.beta);
    const double r3 = chord / std::sin(p.visual_angle());
    const double ref = std::max({r1, r2, r3});
    worst_sines = std::max({worst_sines, std::abs(r1 - r2) / ref, std::abs(r1 - r3) / ref,
                            std::abs(r2 - r3) / ref});
  }

  double worst_anti = 0.0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int per_body = 100;
  for (int b = 0; b < kPairs / per_body; ++b) {
    const TorusField f = torus_field(ConvexBody{random_oval(rng)});
    for (int k = 0; k < per_body; ++k) {
      const double s = f.period * unit(rng);
      const double t = s + f.period * (0.02 + 0.96 * unit(rng));
      worst_anti = std::max(worst_anti, std::abs(f.g(s, t) + f.g(t, s)));
    }
  }

  const bool same = determinism_snapshot() == determinism_snapshot();
  return {worst_sines <= kSinesTol && worst_anti <= kAntisymmetryTol && same,
          "law of sines worst relative gap " + fmt("%.3g", worst_sines) + " over " +
              std::to_string(kOvals) + " ovals; antisymmetry worst " + fmt("%.3g", worst_anti) +
              " over " + std::to_string(kPairs) + " pairs; reruns " +
              (same ? "byte-identical" : "differ")};
}

struct CheckDef {
  const char* title;
  double budget;
  Outcome (*run)();
};

const CheckDef kChecks[kCheckCount] = {
    {"angle table reproduction", 1.0, angle_table},
    {"discrete inequality along the motion", 10.0, discrete_inequality},
    {"derived angles exceed phi", 1.0, derived_inequality},
    {"smoothed body certificate", 30.0, headline_certificate},
    {"star points coincide in pairs", 0.0, star_pairing},
    {"triangle locus census", 0.0, triangle_census},
    {"equal tangents on isoptics", 0.0, isoptic_points},
    {"curvature vertices and diameters", 0.0, limit_theorems},
    {"essential loops on the torus", 60.0, torus_loops},
    {"property suites", 0.0, property_suites},
};

}  // namespace

CheckResult run_check(int id) {
  if (id < 1 || id > kCheckCount) {
    throw GeometryError(ErrorKind::invalid_parameters, "check id must be in 1.." + std::to_string(kCheckCount));
  }
  const CheckDef& def = kChecks[id - 1];
  CheckResult r;
  r.id = id;
  r.title = def.title;
  r.budget_seconds = def.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = def.run();
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.budget_seconds > 0.0 && r.seconds > r.budget_seconds) {
    r.pass = false;
    r.detail += "; over the " + fmt("%g", r.budget_seconds) + " s budget";
  }
  return r;
}

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id));
  return out;
}

std::string format_check(const CheckResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.title +
         "  (" + fmt("%.2f", r.seconds) + " s)  " + r.detail;
}

}  // namespace equitangent

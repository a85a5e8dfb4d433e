// equitangent: command-line front end.
//
// Exit codes: 0 when the checked claim holds, 1 when it fails or the input is
// degenerate, 2 on usage errors (bad flags, bad parameters, unwritable paths).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "equitangent/dodecagon.hpp"
#include "equitangent/io.hpp"
#include "equitangent/loci.hpp"
#include "equitangent/svg.hpp"
#include "equitangent/torus.hpp"
#include "equitangent/verify.hpp"

using namespace equitangent;

namespace {

constexpr int kVerified = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

// Writes to `path`, or to stdout when it is empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

std::string fixed(double v, int digits = 6) {
  if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

const char* kind_color(LocusKind k) {
  switch (k) {
    case LocusKind::boundary_to_infinity: return "#1f77b4";
    case LocusKind::boundary_to_boundary: return "#d62728";
    case LocusKind::infinity_to_infinity: return "#2ca02c";
    case LocusKind::closed: return "#9467bd";
  }
  return "black";
}

std::string census(const std::vector<LocusComponent>& comps) {
  int counts[4] = {0, 0, 0, 0};
  for (const auto& c : comps) ++counts[static_cast<int>(c.kind)];
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (!out.empty()) out += ", ";
    out += std::to_string(counts[k]) + " " + to_string(static_cast<LocusKind>(k));
  }
  return out;
}

std::string locus_svg(const ConvexBody& body, const Box& box, const std::vector<LocusComponent>& comps) {
  SvgFigure fig(box.lo, box.hi);
  fig.outline(body_outline(body), "black", "#eeeeee");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    fig.path(comps[i].points, comps[i].kind == LocusKind::closed, kind_color(comps[i].kind), 1.5, "none",
             "component-" + std::to_string(i));
  }
  return fig.str();
}

// Star walk of a builtin dodecagon spec, on the polygon or on its smoothing.
std::vector<Point> star_walk(const BuiltinDodecagon& spec) {
  const Dodecagon d = build_dodecagon(spec.params);
  if (!spec.smoothed) return closed_polyline(outer_star(chord_motion(d)), 1e-12);
  const auto smoothed = smooth(d.polygon(), spec.r_small, spec.R_large);
  const auto fine = interpolate_motion(chord_motion(d), 64);
  return closed_polyline(smoothed_star(d.polygon(), smoothed, fine), 1e-12);
}

std::vector<Point> parse_walk(const std::string& walk, const std::string& body_spec) {
  if (walk == "star") {
    const auto d = parse_dodecagon_spec(body_spec);
    if (!d) throw UsageError("--walk star needs a dodecagon or smoothed-dodecagon body");
    return star_walk(*d);
  }
  if (walk.rfind("circle:", 0) == 0) {
    const auto p = parse_numbers(walk.substr(7));
    if (p.size() != 1 && p.size() != 3) throw UsageError("--walk circle:R or circle:R,cx,cy");
    const Point c = p.size() == 3 ? Point{p[1], p[2]} : Point{0.0, 0.0};
    std::vector<Point> out;
    const int n = 720;
    for (int i = 0; i < n; ++i) out.push_back(c + unit_vector(kTwoPi * i / n) * p[0]);
    return out;
  }
  if (walk.rfind("polyline:", 0) == 0) {
    const auto p = parse_numbers(walk.substr(9));
    if (p.size() < 6 || p.size() % 2 != 0) throw UsageError("--walk polyline:x0,y0,x1,y1,x2,y2,...");
    std::vector<Point> out;
    for (std::size_t i = 0; i < p.size(); i += 2) out.push_back({p[i], p[i + 1]});
    return out;
  }
  throw UsageError("unknown walk '" + walk + "' (star, circle:R[,cx,cy], polyline:...)");
}

// --- subcommands -----------------------------------------------------------

struct ConstructArgs {
  double phi = 2.0, psi = 3.0, side = 1.0;
  std::string smooth_radii, out, svg;
};

int run_construct(const ConstructArgs& a) {
  const DodecagonParams params{a.side, deg_to_rad(a.phi), deg_to_rad(a.psi)};
  const Dodecagon d = build_dodecagon(params);
  const DerivedAngles derived = derived_angles(d);
  const auto states = chord_motion(d);
  ConvexBody body = d.polygon();
  if (!a.smooth_radii.empty()) {
    const auto r = parse_numbers(a.smooth_radii);
    if (r.size() != 2) throw UsageError("--smooth r,R");
    body = smooth(d.polygon(), r[0], r[1]);
  }
  emit(a.out, body_to_json(body));
  if (!a.out.empty()) {
    std::cout << "theta " << fixed(rad_to_deg(derived.theta)) << " deg, delta "
              << fixed(rad_to_deg(derived.delta)) << " deg\n";
  }
  if (!a.svg.empty()) {
    const auto star = outer_star(states);
    const auto outline = body_outline(body);
    const auto [lo, hi] = SvgFigure::bounds({outline, star}, 0.05);
    SvgFigure fig(lo, hi);
    fig.outline(outline, "black", "#f4f4f4");
    for (const auto& s : states) fig.path({s.first, s.second}, false, "#999999", 0.5);
    fig.path(closed_polyline(star, 1e-12), true, "#d62728", 1.0, "none", "star");
    for (int k = 0; k < kStatesPerBlock; ++k) {
      fig.dot(star[k], 2.0, "#d62728");
      fig.label(star[k], std::to_string(k + 1), 11.0);
    }
    write_file(a.svg, fig.str());
  }
  return kVerified;
}

struct CertifyArgs {
  std::string body = "smoothed-dodecagon", walk = "star", csv;
  int samples = 10000;
};

int run_certify(const CertifyArgs& a) {
  const ConvexBody body = parse_body_spec(a.body);
  const auto walk = parse_walk(a.walk, a.body);
  const WalkCertificate cert = certify_walk(body, walk, a.samples);
  if (!a.csv.empty()) {
    std::ostringstream out;
    write_certificate_csv(out, cert);
    write_file(a.csv, out.str());
  }
  const char* verdict = cert.degenerate ? "degenerate" : (cert.all_same_sign ? "strict" : "not strict");
  std::cout << "samples " << cert.samples.size() << ", min defect " << format_number(cert.min_defect)
            << ", max defect " << format_number(cert.max_defect) << ", min(alpha-beta) "
            << fixed(rad_to_deg(cert.min_angle_gap)) << " deg, zero crossings " << cert.zero_crossings
            << ", " << verdict << "\n";
  return cert.all_same_sign ? kVerified : kFalsified;
}

struct MotionArgs {
  double phi = 2.0, psi = 3.0, side = 1.0;
  int samples_per_step = 2;
  std::string csv;
};

int run_motion(const MotionArgs& a) {
  const Dodecagon d = build_dodecagon({a.side, deg_to_rad(a.phi), deg_to_rad(a.psi)});
  const auto states = interpolate_motion(chord_motion(d), a.samples_per_step);
  std::ostringstream out;
  write_motion_csv(out, states, a.samples_per_step);
  emit(a.csv, out.str());
  return kVerified;
}

struct LocusArgs {
  std::string body, box, csv, svg;
  int resolution = 512;
};

int run_locus(const LocusArgs& a) {
  const ConvexBody body = parse_body_spec(a.body);
  std::optional<Box> box;
  if (!a.box.empty()) {
    const auto b = parse_numbers(a.box);
    if (b.size() != 4) throw UsageError("--box x0,y0,x1,y1");
    box = Box{{b[0], b[1]}, {b[2], b[3]}};
  }
  const ScalarField field = equitangent_field(body, box);
  const auto comps = trace_locus(field, a.resolution);
  if (!a.csv.empty()) {
    std::ostringstream out;
    write_locus_csv(out, comps);
    write_file(a.csv, out.str());
  }
  if (!a.svg.empty()) write_file(a.svg, locus_svg(body, field.domain, comps));
  std::cout << comps.size() << " components: " << census(comps) << "\n";
  return kVerified;
}

struct IsopticArgs {
  std::string body, csv, svg;
  double angle = 90.0;
  int resolution = 1024;
};

int run_isoptic(const IsopticArgs& a) {
  const ConvexBody body = parse_body_spec(a.body);
  const double phi = deg_to_rad(a.angle);
  const auto curve = isoptic(body, phi, a.resolution);
  const auto marks = equal_tangent_points_on_isoptic(body, phi, 4 * a.resolution);
  if (!a.csv.empty()) {
    std::ostringstream out;
    write_isoptic_csv(out, curve, marks);
    write_file(a.csv, out.str());
  }
  if (!a.svg.empty()) {
    const auto outline = body_outline(body);
    const auto [lo, hi] = SvgFigure::bounds({outline, curve}, 0.05);
    SvgFigure fig(lo, hi);
    fig.outline(outline, "black", "#eeeeee");
    fig.path(curve, true, "#1f77b4", 1.5, "none", "isoptic");
    for (const Point& p : marks) fig.dot(p, 3.0, "#d62728");
    write_file(a.svg, fig.str());
  }
  std::cout << marks.size() << " equal-tangent points\n";
  for (const Point& p : marks) std::cout << "  " << fixed(p.x) << " " << fixed(p.y) << "\n";
  return marks.size() >= 4 ? kVerified : kFalsified;
}

struct TorusArgs {
  std::string body, csv, svg;
  int grid = 512;
};

int run_torus(const TorusArgs& a) {
  const ConvexBody body = parse_body_spec(a.body);
  const auto loops = trace_torus_curve(body, a.grid);
  if (!a.csv.empty()) {
    std::ostringstream out;
    write_torus_csv(out, loops);
    write_file(a.csv, out.str());
  }
  const double P = loops.back().period;
  if (!a.svg.empty()) {
    SvgFigure fig({0.0, 0.0}, {P, P}, 600.0);
    fig.outline({{0.0, 0.0}, {P, 0.0}, {P, P}, {0.0, P}}, "black");
    for (std::size_t i = 0; i < loops.size(); ++i) {
      // Break the polyline wherever it wraps around the square.
      std::vector<std::vector<Point>> pieces(1);
      const auto& pts = loops[i].points;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k > 0 && (std::abs(pts[k].x - pts[k - 1].x) > 0.5 * P || std::abs(pts[k].y - pts[k - 1].y) > 0.5 * P)) {
          pieces.emplace_back();
        }
        pieces.back().push_back(pts[k]);
      }
      const char* color = loops[i].synthetic ? "#999999" : (is_essential(loops[i]) ? "#d62728" : "#1f77b4");
      fig.path(pieces, color, 1.0, "loop-" + std::to_string(i));
    }
    write_file(a.svg, fig.str());
  }
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const auto& l = loops[i];
    std::cout << "loop " << i << ": class (" << l.class_p << "," << l.class_q << "), " << l.points.size()
              << " points" << (l.synthetic ? ", diagonal" : "") << (l.through_band ? ", closed through band" : "")
              << "\n";
  }
  std::cout << essential_loops(loops).size() << " essential loops\n";
  return kVerified;
}

struct TriangleArgs {
  std::string vertices, csv, svg;
  int resolution = 1024;
};

int run_triangle(const TriangleArgs& a) {
  const auto v = parse_numbers(a.vertices);
  if (v.size() != 6) throw UsageError("--vertices x0,y0,x1,y1,x2,y2");
  const ConvexPolygon tri({{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}});
  const ScalarField field = equitangent_field(ConvexBody{tri});
  const auto traced = trace_locus(field, a.resolution);
  const auto exact = triangle_locus_exact(tri, field.domain);
  const double cell = field.domain.width() / a.resolution;
  double worst = 0.0;
  for (const auto& c : traced) worst = std::max(worst, max_distance_to(exact, c.points));
  if (!a.csv.empty()) {
    std::ostringstream out;
    write_locus_csv(out, traced);
    write_file(a.csv, out.str());
  }
  if (!a.svg.empty()) write_file(a.svg, locus_svg(ConvexBody{tri}, field.domain, traced));
  std::cout << "traced: " << census(traced) << "\n"
            << "exact:  " << census(exact) << "\n"
            << "max distance to exact: " << fixed(worst / cell, 3) << " cells\n";
  return census(traced) == census(exact) && worst <= 2.0 * cell ? kVerified : kFalsified;
}

int run_verify_all(const std::vector<int>& only) {
  bool all = true;
  for (int id = 1; id <= kCheckCount; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const CheckResult r = run_check(id);
    std::cout << format_check(r) << "\n" << std::flush;
    all &= r.pass;
  }
  return all ? kVerified : kFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal tangent segments to convex bodies: construction, certificates and loci"};
  app.require_subcommand(1);
  const auto resolution = CLI::Range(64, 4096);
  int rc = kVerified;

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build the dodecagon (optionally smoothed); JSON body and SVG figure");
  c->add_option("--phi", construct.phi, "angle phi in degrees")->capture_default_str();
  c->add_option("--psi", construct.psi, "angle psi in degrees")->capture_default_str();
  c->add_option("--side", construct.side, "hexagon side")->capture_default_str();
  c->add_option("--smooth", construct.smooth_radii, "small and large radii r,R");
  c->add_option("--out", construct.out, "body JSON path (default stdout)");
  c->add_option("--svg", construct.svg, "figure path");
  c->callback([&] { rc = run_construct(construct); });

  CertifyArgs certify;
  auto* cf = app.add_subcommand("certify", "Probe a body along a closed walk; exit 0 iff one tangent is always shorter");
  cf->add_option("--body", certify.body, "body spec or JSON path")->capture_default_str();
  cf->add_option("--walk", certify.walk, "star | circle:R[,cx,cy] | polyline:x0,y0,...")->capture_default_str();
  cf->add_option("--samples", certify.samples, "walk samples")->check(CLI::Range(3, 10000000))->capture_default_str();
  cf->add_option("--csv", certify.csv, "per-sample CSV path");
  cf->callback([&] { rc = run_certify(certify); });

  MotionArgs motion;
  auto* m = app.add_subcommand("motion", "Chord motion states as CSV");
  m->add_option("--phi", motion.phi, "angle phi in degrees")->capture_default_str();
  m->add_option("--psi", motion.psi, "angle psi in degrees")->capture_default_str();
  m->add_option("--side", motion.side, "hexagon side")->capture_default_str();
  m->add_option("--samples-per-step", motion.samples_per_step, "states per step including both ends")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  m->add_option("--csv", motion.csv, "CSV path (default stdout)");
  m->callback([&] { rc = run_motion(motion); });

  LocusArgs locus;
  auto* l = app.add_subcommand("locus", "Trace the locus of apexes with equal tangent segments");
  l->add_option("--body", locus.body, "body spec or JSON path")->required();
  l->add_option("--resolution", locus.resolution, "grid cells per side")->check(resolution)->capture_default_str();
  l->add_option("--box", locus.box, "x0,y0,x1,y1 (default: 6 diameters around the body)");
  l->add_option("--csv", locus.csv, "CSV path");
  l->add_option("--svg", locus.svg, "SVG path");
  l->callback([&] { rc = run_locus(locus); });

  IsopticArgs iso;
  auto* i = app.add_subcommand("isoptic", "Isoptic curve and its equal-tangent points");
  i->add_option("--body", iso.body, "body spec or JSON path")->required();
  i->add_option("--angle", iso.angle, "view angle in degrees")->check(CLI::Range(0.0, 180.0))->capture_default_str();
  i->add_option("--resolution", iso.resolution, "curve samples")->check(resolution)->capture_default_str();
  i->add_option("--csv", iso.csv, "CSV path");
  i->add_option("--svg", iso.svg, "SVG path");
  i->callback([&] { rc = run_isoptic(iso); });

  TorusArgs torus;
  auto* t = app.add_subcommand("torus", "Equal-tangent pairs on the parameter torus and essential loops");
  t->add_option("--body", torus.body, "smooth body spec or JSON path")->required();
  t->add_option("--grid", torus.grid, "grid cells per side")->check(CLI::Range(128, 4096))->capture_default_str();
  t->add_option("--csv", torus.csv, "CSV path");
  t->add_option("--svg", torus.svg, "SVG path");
  t->callback([&] { rc = run_torus(torus); });

  TriangleArgs triangle;
  auto* tr = app.add_subcommand("triangle", "Traced and exact locus for a triangle");
  tr->add_option("--vertices", triangle.vertices, "x0,y0,x1,y1,x2,y2")->required();
  tr->add_option("--resolution", triangle.resolution, "grid cells per side")->check(resolution)->capture_default_str();
  tr->add_option("--csv", triangle.csv, "CSV path");
  tr->add_option("--svg", triangle.svg, "SVG path");
  tr->callback([&] { rc = run_triangle(triangle); });

  std::vector<int> only;
  auto* v = app.add_subcommand("verify-all", "Run the end-to-end checks, one line each");
  v->add_option("--only", only, "check ids to run")->check(CLI::Range(1, kCheckCount))->delimiter(',');
  v->callback([&] { rc = run_verify_all(only); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.kind() == ErrorKind::invalid_parameters || e.kind() == ErrorKind::invalid_body;
    return usage ? kUsage : kFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFalsified;
  }
  return rc;
}

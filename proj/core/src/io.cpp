#include "equitangent/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace equitangent {

namespace {

using nlohmann::json;

[[noreturn]] void bad_body(const std::string& why) {
  throw GeometryError(ErrorKind::invalid_body, "bad body description: " + why);
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

std::string after_colon(const std::string& s) {
  const auto pos = s.find(':');
  return pos == std::string::npos ? std::string() : s.substr(pos + 1);
}

SupportOval oval_from_params(const std::string& kind, const std::vector<double>& p) {
  if (kind == "ellipse") {
    if (p.size() != 2) bad_body("ellipse needs params [a, b]");
    return SupportOval::ellipse(p[0], p[1]);
  }
  if (kind == "fourier") {
    if (p.empty() || p.size() % 2 != 1) bad_body("fourier needs params [c0, a1, b1, ...]");
    std::vector<std::pair<double, double>> harmonics;
    for (std::size_t i = 1; i + 1 < p.size(); i += 2) harmonics.emplace_back(p[i], p[i + 1]);
    return SupportOval::fourier(p[0], std::move(harmonics));
  }
  bad_body("unknown support kind '" + kind + "'");
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw GeometryError(ErrorKind::invalid_parameters, "empty number in list '" + text + "'");
    }
    item = item.substr(first, last - first + 1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw GeometryError(ErrorKind::invalid_parameters, "not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

ConvexBody body_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad_body(e.what());
  }
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "polygon") {
      std::vector<Point> vs;
      for (const auto& v : j.at("vertices")) {
        if (v.size() != 2) bad_body("vertex must be [x, y]");
        vs.push_back({v[0].get<double>(), v[1].get<double>()});
      }
      return ConvexPolygon(std::move(vs));
    }
    if (type == "pcc") {
      std::vector<CircleArc> arcs;
      for (const auto& a : j.at("arcs")) {
        const std::string orient = a.value("orient", std::string("ccw"));
        if (orient != "ccw" && orient != "cw") bad_body("orient must be ccw or cw");
        arcs.push_back({{a.at("cx").get<double>(), a.at("cy").get<double>()}, a.at("r").get<double>(),
                        a.at("a0").get<double>(), a.at("a1").get<double>(),
                        orient == "ccw" ? Orientation::ccw : Orientation::cw});
      }
      return PiecewiseCircularCurve(std::move(arcs));
    }
    if (type == "support") {
      SupportOval oval =
          oval_from_params(j.at("kind").get<std::string>(), j.at("params").get<std::vector<double>>());
      if (j.contains("rotation")) oval = oval.rotated(j.at("rotation").get<double>());
      if (j.contains("center")) {
        const auto c = j.at("center").get<std::vector<double>>();
        if (c.size() != 2) bad_body("center must be [x, y]");
        oval = oval.translated({c[0], c[1]});
      }
      return oval;
    }
    bad_body("unknown type '" + type + "'");
  } catch (const json::exception& e) {
    bad_body(e.what());
  }
}

std::string body_to_json(const ConvexBody& body) {
  json j;
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>) {
          j["type"] = "polygon";
          json vs = json::array();
          for (const Point& p : b.vertices()) vs.push_back({p.x, p.y});
          j["vertices"] = vs;
        } else if constexpr (std::is_same_v<T, PiecewiseCircularCurve>) {
          j["type"] = "pcc";
          json arcs = json::array();
          for (const auto& a : b.arcs()) {
            arcs.push_back({{"cx", a.center.x},
                            {"cy", a.center.y},
                            {"r", a.radius},
                            {"a0", a.start_angle},
                            {"a1", a.end_angle},
                            {"orient", a.orientation == Orientation::ccw ? "ccw" : "cw"}});
          }
          j["arcs"] = arcs;
        } else {
          j["type"] = "support";
          j["kind"] = b.kind() == SupportOval::Kind::ellipse ? "ellipse" : "fourier";
          j["params"] = b.params();
          if (b.rotation() != 0.0) j["rotation"] = b.rotation();
          if (b.center().x != 0.0 || b.center().y != 0.0) j["center"] = {b.center().x, b.center().y};
        }
      },
      body);
  return j.dump(2) + "\n";
}

std::optional<BuiltinDodecagon> parse_dodecagon_spec(const std::string& spec) {
  const std::string args = after_colon(spec);
  BuiltinDodecagon out;
  if (spec == "dodecagon" || starts_with(spec, "dodecagon:")) {
    if (!args.empty()) {
      const auto p = parse_numbers(args);
      if (p.size() != 2) bad_body("dodecagon:phi_deg,psi_deg");
      out.params.phi = deg_to_rad(p[0]);
      out.params.psi = deg_to_rad(p[1]);
    }
    return out;
  }
  if (spec == "smoothed-dodecagon" || starts_with(spec, "smoothed-dodecagon:")) {
    out.smoothed = true;
    if (!args.empty()) {
      const auto p = parse_numbers(args);
      if (p.size() != 4) bad_body("smoothed-dodecagon:phi_deg,psi_deg,r_small,R_large");
      out.params.phi = deg_to_rad(p[0]);
      out.params.psi = deg_to_rad(p[1]);
      out.r_small = p[2];
      out.R_large = p[3];
    }
    return out;
  }
  return std::nullopt;
}

ConvexBody parse_body_spec(const std::string& spec) {
  const std::string args = after_colon(spec);
  if (starts_with(spec, "ellipse:")) {
    const auto p = parse_numbers(args);
    if (p.size() != 2) bad_body("ellipse:a,b");
    return SupportOval::ellipse(p[0], p[1]);
  }
  if (starts_with(spec, "circle:")) {
    const auto p = parse_numbers(args);
    if (p.size() != 1) bad_body("circle:r");
    return SupportOval::circle(p[0]);
  }
  if (starts_with(spec, "fourier:")) return oval_from_params("fourier", parse_numbers(args));
  if (starts_with(spec, "polygon:")) {
    const auto p = parse_numbers(args);
    if (p.size() < 6 || p.size() % 2 != 0) bad_body("polygon:x0,y0,x1,y1,...");
    std::vector<Point> vs;
    for (std::size_t i = 0; i < p.size(); i += 2) vs.push_back({p[i], p[i + 1]});
    return ConvexPolygon(std::move(vs));
  }
  if (const auto d = parse_dodecagon_spec(spec)) {
    const Dodecagon poly = build_dodecagon(d->params);
    if (!d->smoothed) return poly.polygon();
    return smooth(poly.polygon(), d->r_small, d->R_large);
  }
  std::ifstream in(spec);
  if (!in) bad_body("unknown body '" + spec + "' (not a builtin and not a readable file)");
  std::stringstream ss;
  ss << in.rdbuf();
  return body_from_json(ss.str());
}

void write_certificate_csv(std::ostream& out, const WalkCertificate& cert) {
  out << "sample_index,x,y,alpha_rad,beta_rad,len_left,len_right,defect\n";
  for (const auto& s : cert.samples) {
    out << s.index << ',' << format_number(s.apex.x) << ',' << format_number(s.apex.y) << ','
        << format_number(s.alpha) << ',' << format_number(s.beta) << ',' << format_number(s.len_left)
        << ',' << format_number(s.len_right) << ',' << format_number(s.defect()) << '\n';
  }
}

void write_locus_csv(std::ostream& out, const std::vector<LocusComponent>& components) {
  out << "component_id,kind,x,y\n";
  for (std::size_t id = 0; id < components.size(); ++id) {
    for (const Point& p : components[id].points) {
      out << id << ',' << to_string(components[id].kind) << ',' << format_number(p.x) << ','
          << format_number(p.y) << '\n';
    }
  }
}

void write_torus_csv(std::ostream& out, const std::vector<TorusLoop>& loops) {
  out << "loop_id,class_p,class_q,s,t\n";
  for (std::size_t id = 0; id < loops.size(); ++id) {
    for (const Point& p : loops[id].points) {
      out << id << ',' << loops[id].class_p << ',' << loops[id].class_q << ',' << format_number(p.x)
          << ',' << format_number(p.y) << '\n';
    }
  }
}

void write_isoptic_csv(std::ostream& out, const std::vector<Point>& curve,
                       const std::vector<Point>& equal_tangent) {
  out << "kind,x,y\n";
  for (const Point& p : curve) out << "isoptic," << format_number(p.x) << ',' << format_number(p.y) << '\n';
  for (const Point& p : equal_tangent) {
    out << "equal_tangent," << format_number(p.x) << ',' << format_number(p.y) << '\n';
  }
}

void write_motion_csv(std::ostream& out, const std::vector<ChordState>& states, int samples_per_step) {
  if (samples_per_step < 2) {
    throw GeometryError(ErrorKind::invalid_parameters, "samples_per_step must be >= 2");
  }
  const std::size_t per_step = static_cast<std::size_t>(samples_per_step - 1);
  const std::size_t per_block = 8 * per_step + 1;
  out << "state,block,position,first_x,first_y,second_x,second_y,apex_x,apex_y,beta_rad,alpha_rad\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    const ChordState& s = states[i];
    const double position = 1.0 + static_cast<double>(i % per_block) / static_cast<double>(per_step);
    out << i << ',' << i / per_block << ',' << format_number(position) << ','
        << format_number(s.first.x) << ',' << format_number(s.first.y) << ','
        << format_number(s.second.x) << ',' << format_number(s.second.y) << ',';
    if (const auto apex = state_apex(s)) {
      const StateAngles a = state_angles(s);
      out << format_number(apex->x) << ',' << format_number(apex->y) << ',' << format_number(a.beta)
          << ',' << format_number(a.alpha) << '\n';
    } else {
      out << ",,,\n";
    }
  }
}

std::vector<Point> body_outline(const ConvexBody& body, int samples_per_piece) {
  if (const auto* poly = std::get_if<ConvexPolygon>(&body)) return poly->vertices();
  std::vector<Point> out;
  if (const auto* pcc = std::get_if<PiecewiseCircularCurve>(&body)) {
    for (const auto& arc : pcc->arcs()) {
      for (int i = 0; i < samples_per_piece; ++i) {
        out.push_back(arc.point_at_angle(arc.angle_at(static_cast<double>(i) / samples_per_piece)));
      }
    }
    return out;
  }
  const auto& oval = std::get<SupportOval>(body);
  const int n = 8 * samples_per_piece;
  for (int i = 0; i < n; ++i) out.push_back(oval.point(kTwoPi * i / n));
  return out;
}

}  // namespace equitangent

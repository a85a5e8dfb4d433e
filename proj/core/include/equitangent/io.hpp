#pragma once

// Body serialization, command-line body specs and CSV writers.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "equitangent/bodies.hpp"
#include "equitangent/dodecagon.hpp"
#include "equitangent/loci.hpp"
#include "equitangent/torus.hpp"

namespace equitangent {

// {"type":"polygon","vertices":[[x,y],...]}
// {"type":"pcc","arcs":[{"cx":..,"cy":..,"r":..,"a0":..,"a1":..,"orient":"ccw"},...]}
// {"type":"support","kind":"ellipse"|"fourier","params":[...]}
// Support bodies may add "rotation" (radians) and "center" [x, y].
// Throws GeometryError(invalid_body) on malformed input.
ConvexBody body_from_json(const std::string& text);
std::string body_to_json(const ConvexBody& body);

// Builtin names and inline bodies, or a path to a JSON file:
//   ellipse:a,b   circle:r   fourier:c0,a1,b1,a2,b2,...   polygon:x0,y0,x1,y1,...
//   dodecagon[:phi_deg,psi_deg]   smoothed-dodecagon[:phi_deg,psi_deg,r_small,R_large]
ConvexBody parse_body_spec(const std::string& spec);

struct BuiltinDodecagon {
  DodecagonParams params;
  bool smoothed = false;
  double r_small = 1e-3;
  double R_large = 1e3;
};

// The dodecagon part of the grammar above; nullopt for every other spec.
std::optional<BuiltinDodecagon> parse_dodecagon_spec(const std::string& spec);

// Comma-separated reals; throws GeometryError(invalid_parameters) otherwise.
std::vector<double> parse_numbers(const std::string& text);

// Shortest round-trip text for a double.
std::string format_number(double v);

void write_certificate_csv(std::ostream& out, const WalkCertificate& cert);
void write_locus_csv(std::ostream& out, const std::vector<LocusComponent>& components);
void write_torus_csv(std::ostream& out, const std::vector<TorusLoop>& loops);
// kind is "isoptic" for curve samples and "equal_tangent" for the marked apexes.
void write_isoptic_csv(std::ostream& out, const std::vector<Point>& curve,
                       const std::vector<Point>& equal_tangent);
// One row per state of interpolate_motion(..., samples_per_step). position runs
// from 1 to 9 through the nine states of a block; apex columns are empty when
// the support lines are parallel.
void write_motion_csv(std::ostream& out, const std::vector<ChordState>& states, int samples_per_step = 2);

// Closed polyline approximating the boundary.
std::vector<Point> body_outline(const ConvexBody& body, int samples_per_piece = 32);

}  // namespace equitangent

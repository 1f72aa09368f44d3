#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hilb/diagnose.hpp"
#include "hilb/form.hpp"
#include "hilb/modla.hpp"
#include "hilb/monomial_ideal.hpp"
#include "hilb/points.hpp"
#include "hilb/seq.hpp"

namespace hilb::fixtures {

// --- shared constructions -------------------------------------------------

/// (x^3, x^2 y^2, x^2 y z^2, z^5) plus all degree-7 monomials, minimalized:
/// an Artinian ideal in three variables with h = (1,3,6,9,11,11,11), a socle
/// element in degree 4, and no weak Lefschetz property.
mono::MonomialIdeal wlp_families_ideal();

/// x^4 t - y^4 z and z^6 - x t^5: the Chardin-D'Cruz complete intersection
/// of type (5,6) in four variables whose radical has much larger regularity.
std::vector<Form> cd_generators();

/// x^3, y^3, z^4 in four variables: a complete intersection of type (3,3,4).
std::vector<Form> ci334_generators();

/// First difference of the Hilbert function of the degree-25 smooth curve in
/// the Chardin-D'Cruz construction, through degree 21.
HilbertSeq not_decr_type_delta();

/// First difference for 352 points split across the two degree-16 curves on
/// a quadric (their union is a complete intersection of type (2,16)).
HilbertSeq two_sextics_delta();

/// Ten points [s^2 : st : t^2] on the conic xz - y^2.
points::PointSet conic_points();

/// Three collinear points plus one off the line: a uniform-position violation.
points::PointSet collinear_quad();

/// Diagnosis inputs for the bundled case studies.  The reducedness flag is
/// optional input data: leaving it unset keeps the general-position rules
/// silent and isolates the UPP rule.
diagnose::Input not_decr_type_input(bool include_reduced);
diagnose::Input two_sextics_input();
diagnose::Input cant_extend_input();
diagnose::Input ci334_input();

// --- bundled fixture runner -------------------------------------------------

struct Outcome {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass
};

struct Fixture {
  std::string name;
  std::string description;
  std::string source;  // where the expected values come from
  // Returns an empty string on success, a failure description otherwise.
  std::function<std::string(const modla::EngineConfig&)> run;
};

const std::vector<Fixture>& all();

/// Runs every fixture whose name contains `only` (all when empty).
std::vector<Outcome> run_fixtures(const std::string& only,
                                  const modla::EngineConfig& cfg);

}  // namespace hilb::fixtures

#pragma once

#include <nlohmann/json_fwd.hpp>

#include "hilb/diagnose.hpp"
#include "hilb/form.hpp"
#include "hilb/fpform.hpp"
#include "hilb/gotzmann.hpp"
#include "hilb/macaulay.hpp"
#include "hilb/modla.hpp"
#include "hilb/monomial_ideal.hpp"
#include "hilb/points.hpp"
#include "hilb/seq.hpp"

namespace hilb::io {

using json = nlohmann::json;

// Sequences: {"values": [...], "tail": "constant"|"zero"} with the tail
// optional; a bare array is accepted on input.
json to_json(const HilbertSeq& s);
HilbertSeq seq_from_json(const json& j);

// Monomial ideals: {"n": 3, "gens": [[3,0,0], ...]}.
json to_json(const mono::MonomialIdeal& I);
mono::MonomialIdeal ideal_from_json(const json& j);

// Forms: {"n": 4, "terms": [{"e": [4,0,0,1], "c": "1"}, ...]} with exact
// rational coefficients as strings.
json to_json(const Form& f);
Form form_from_json(const json& j);
std::vector<Form> forms_from_json(const json& j);
json to_json(const FpForm& f);

// Points: {"ambient": 3, "points": [["1","0","0","0"], ...]}.
json to_json(const points::PointSet& z);
points::PointSet points_from_json(const json& j);

json to_json(const macaulay::BinomialExpansion& e);
json to_json(const macaulay::OSequenceVerdict& v);
json to_json(const std::vector<macaulay::GrowthVerdict>& v);
json to_json(const gotzmann::GotzmannPolynomial& p);
json to_json(const mono::BettiDiagram& b);
json to_json(const modla::LefschetzReport& r);
json to_json(const modla::FittedPolynomial& f);
json to_json(const points::UppResult& r);

json to_json(const diagnose::Report& r);
diagnose::Input diagnose_input_from_json(const json& j);

}  // namespace hilb::io

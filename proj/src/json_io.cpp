#include "hilb/json_io.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace hilb::io {

namespace {

Tail tail_from_string(const std::string& s) {
  if (s == "zero") return Tail::zero;
  if (s == "constant") return Tail::constant;
  throw std::invalid_argument("unknown tail kind: " + s);
}

mpq_class rational_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace

json to_json(const HilbertSeq& s) {
  json j;
  j["values"] = s.values();
  if (s.tail() == Tail::zero) j["tail"] = "zero";
  if (s.tail() == Tail::constant) j["tail"] = "constant";
  return j;
}

HilbertSeq seq_from_json(const json& j) {
  if (j.is_array())
    return HilbertSeq(j.get<std::vector<std::int64_t>>(), Tail::none);
  Tail tail = Tail::none;
  if (j.contains("tail")) tail = tail_from_string(j.at("tail").get<std::string>());
  return HilbertSeq(j.at("values").get<std::vector<std::int64_t>>(), tail);
}

json to_json(const mono::MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(g.e);
  return json{{"n", I.vars()}, {"gens", gens}};
}

mono::MonomialIdeal ideal_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<mono::Monomial> gens;
  for (const auto& e : j.at("gens"))
    gens.push_back(mono::Monomial{e.get<Exponents>()});
  return mono::MonomialIdeal::minimalize(n, std::move(gens));
}

json to_json(const Form& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back(json{{"e", e}, {"c", c.get_str()}});
  return json{{"n", f.vars()}, {"degree", f.degree()}, {"terms", terms}};
}

Form form_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const auto& terms = j.at("terms");
  if (terms.empty()) return Form(n, j.value("degree", 0));
  Form f(n, total_degree(terms.front().at("e").get<Exponents>()));
  for (const auto& t : terms)
    f.add_term(t.at("e").get<Exponents>(),
               rational_from_string(t.at("c").is_string()
                                        ? t.at("c").get<std::string>()
                                        : t.at("c").dump()));
  return f;
}

std::vector<Form> forms_from_json(const json& j) {
  std::vector<Form> forms;
  if (j.is_array()) {
    for (const auto& e : j) forms.push_back(form_from_json(e));
  } else if (j.contains("forms")) {
    for (const auto& e : j.at("forms")) forms.push_back(form_from_json(e));
  } else {
    forms.push_back(form_from_json(j));
  }
  return forms;
}

json to_json(const FpForm& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back(json{{"e", e}, {"c", std::to_string(c)}});
  return json{{"prime", std::to_string(f.prime())},
              {"n", f.vars()},
              {"degree", f.degree()},
              {"terms", terms}};
}

json to_json(const points::PointSet& z) {
  json pts = json::array();
  for (const auto& p : z.pts()) {
    json row = json::array();
    for (const auto& c : p) row.push_back(c.get_str());
    pts.push_back(row);
  }
  return json{{"ambient", z.ambient()}, {"points", pts}};
}

points::PointSet points_from_json(const json& j) {
  const int ambient = j.at("ambient").get<int>();
  std::vector<std::vector<mpq_class>> pts;
  for (const auto& row : j.at("points")) {
    std::vector<mpq_class> p;
    for (const auto& c : row)
      p.push_back(rational_from_string(c.is_string() ? c.get<std::string>()
                                                     : c.dump()));
    pts.push_back(std::move(p));
  }
  return points::PointSet(ambient, std::move(pts));
}

json to_json(const macaulay::BinomialExpansion& e) {
  json terms = json::array();
  for (const auto& t : e.terms)
    terms.push_back(json{{"top", t.top.get_str()}, {"level", t.level}});
  return json{{"level", e.level}, {"terms", terms},
              {"value", e.value().get_str()}};
}

json to_json(const macaulay::OSequenceVerdict& v) {
  json j{{"ok", v.ok}};
  if (v.violation) {
    j["violation"] = json{{"degree", v.violation->degree},
                          {"value", v.violation->value},
                          {"bound", v.violation->bound.get_str()},
                          {"next", v.violation->next},
                          {"in_first_difference", v.violation->in_first_difference},
                          {"reason", v.violation->reason}};
  }
  return j;
}

json to_json(const std::vector<macaulay::GrowthVerdict>& verdicts) {
  json j = json::array();
  for (const auto& v : verdicts) {
    json e{{"degree", v.degree},
           {"value", v.value},
           {"bound", v.bound.get_str()},
           {"is_maximal", v.is_maximal}};
    if (v.next) e["next"] = *v.next;
    j.push_back(std::move(e));
  }
  return j;
}

json to_json(const gotzmann::GotzmannPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  json terms = json::array();
  for (const auto& t : p.expansion().terms)
    terms.push_back(json{{"top", t.top.get_str()}, {"level", t.level}});
  return json{{"anchor_degree", p.anchor_degree()},
              {"terms", terms},
              {"dimension", p.dimension()},
              {"degree", p.scheme_degree().get_str()},
              {"coefficients", coeffs},
              {"polynomial", p.str()}};
}

json to_json(const mono::BettiDiagram& b) {
  json entries = json::array();
  for (const auto& [key, v] : b.entries())
    entries.push_back(json{{"col", key.first}, {"row", key.second}, {"value", v}});
  return json{{"totals", b.totals()}, {"entries", entries}};
}

json to_json(const modla::LefschetzReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(json{{"t", row.t},
                        {"dim_from", row.dim_from},
                        {"dim_to", row.dim_to},
                        {"rank", row.rank},
                        {"max_rank", row.max_rank},
                        {"ok", row.ok}});
  return json{{"form_degree", r.form_degree}, {"pass", r.pass}, {"rows", rows}};
}

json to_json(const modla::FittedPolynomial& f) {
  json coeffs = json::array();
  for (const auto& c : f.coefficients) coeffs.push_back(c.get_str());
  json samples = json::array();
  for (const auto& [t, v] : f.samples) samples.push_back(json{{"t", t}, {"h", v}});
  return json{{"degree", f.degree},
              {"dimension", f.degree},
              {"leading", f.leading.get_str()},
              {"scheme_degree", f.scheme_degree.get_str()},
              {"coefficients", coeffs},
              {"samples", samples}};
}

json to_json(const points::UppResult& r) {
  json j{{"pass", r.pass}};
  if (r.witness) j["witness"] = *r.witness;
  if (r.witness_h) j["witness_h"] = to_json(*r.witness_h);
  if (r.expected_h) j["expected_h"] = to_json(*r.expected_h);
  return j;
}

json to_json(const diagnose::Report& rep) {
  json flats = json::array();
  for (const auto& f : rep.flats) {
    json rules = json::array();
    for (const auto& r : f.rules) {
      json hyps = json::array();
      for (const auto& h : r.hypotheses) {
        const char* st = h.status == diagnose::HypStatus::holds   ? "holds"
                         : h.status == diagnose::HypStatus::fails ? "fails"
                                                                  : "unknown";
        hyps.push_back(json{{"name", h.name}, {"status", st}});
      }
      json concl = json::array();
      for (auto c : r.conclusions) concl.push_back(diagnose::to_string(c));
      rules.push_back(json{{"id", r.id},
                           {"name", r.name},
                           {"evaluable", r.evaluable},
                           {"fired", r.fired},
                           {"hypotheses", hyps},
                           {"conclusions", concl},
                           {"predictions", r.predictions},
                           {"notes", r.notes}});
    }
    flats.push_back(json{{"d", f.d},
                         {"s", f.s},
                         {"second_difference", f.second_difference},
                         {"rules", rules}});
  }
  return json{{"flats", flats}, {"warnings", rep.warnings}};
}

diagnose::Input diagnose_input_from_json(const json& j) {
  diagnose::Input in;
  in.ambient_n = j.at("ambient_n").get<int>();
  in.delta_h = seq_from_json(j.at("delta_h"));
  if (j.contains("delta2_h")) in.delta2_h = seq_from_json(j.at("delta2_h"));
  if (j.contains("r2")) in.r2 = j.at("r2").get<int>();
  if (j.contains("r3")) in.r3 = j.at("r3").get<int>();
  if (j.contains("upp")) in.upp = j.at("upp").get<bool>();
  if (j.contains("wlp")) in.wlp = j.at("wlp").get<bool>();
  if (j.contains("reduced")) in.reduced = j.at("reduced").get<bool>();
  if (j.contains("h1_vanishes")) in.h1_vanishes = j.at("h1_vanishes").get<bool>();
  return in;
}

}  // namespace hilb::io

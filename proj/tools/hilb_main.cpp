// hilb: Hilbert-function toolkit.
//
// Growth bounds, persistence polynomials, monomial-ideal computations,
// modular rank computations on ideals of general forms and point sets, and
// a rule engine that reads base-locus structure off h-vector flats.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "hilb/diagnose.hpp"
#include "hilb/fixtures.hpp"
#include "hilb/gotzmann.hpp"
#include "hilb/json_io.hpp"
#include "hilb/macaulay.hpp"
#include "hilb/modla.hpp"
#include "hilb/monomial_ideal.hpp"
#include "hilb/points.hpp"
#include "hilb/seq.hpp"

using json = nlohmann::json;
using namespace hilb;

namespace {

struct GlobalOpts {
  std::uint64_t prime = fp::kPrimes[0];
  std::uint64_t seed = 0;
  int confirmations = 2;
  int tmax = -1;  // -1: operation-specific default
  int cap = 40;
  bool json_out = false;

  modla::EngineConfig engine() const {
    modla::EngineConfig cfg;
    cfg.prime = prime;
    cfg.seed = seed;
    cfg.confirmations = confirmations;
    cfg.degree_cap = cap;
    return cfg;
  }
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void emit(const json& j, bool json_out, const std::string& text) {
  if (json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// Input selector for the rank-engine commands: exactly one of a forms file,
// a monomial-ideal file, or a points file.
struct SourceOpts {
  std::string forms_path, ideal_path, points_path;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--forms", forms_path, "forms JSON file");
    auto* b = cmd->add_option("--ideal", ideal_path, "monomial-ideal JSON file");
    auto* c = cmd->add_option("--points", points_path, "point-set JSON file");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  struct Loaded {
    std::unique_ptr<modla::SliceSource> src;
    std::unique_ptr<points::PointSet> keep_points;
    std::vector<Form> keep_forms;
  };

  Loaded load() const {
    Loaded out;
    if (!forms_path.empty()) {
      out.keep_forms = io::forms_from_json(load_json(forms_path));
      if (out.keep_forms.empty()) throw std::runtime_error("no forms given");
      out.src = std::make_unique<modla::GeneratorSource>(
          out.keep_forms.front().vars(), out.keep_forms);
    } else if (!ideal_path.empty()) {
      auto I = io::ideal_from_json(load_json(ideal_path));
      out.keep_forms = I.generator_forms();
      out.src = std::make_unique<modla::GeneratorSource>(I.vars(), out.keep_forms);
    } else if (!points_path.empty()) {
      out.keep_points = std::make_unique<points::PointSet>(
          io::points_from_json(load_json(points_path)));
      out.src = std::make_unique<points::PointSource>(*out.keep_points);
    } else {
      throw CLI::ValidationError("one of --forms/--ideal/--points is required");
    }
    return out;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-function toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--prime", g.prime, "rank-engine prime (62-bit)");
  app.add_option("--seed", g.seed, "base seed for all randomness");
  app.add_option("--confirmations", g.confirmations,
                 "independent runs required to accept an answer");
  app.add_option("--tmax", g.tmax, "top degree for degreewise operations");
  app.add_option("--cap", g.cap, "degree cap for vanishing searches");
  app.add_flag("--json", g.json_out, "machine-readable output");

  // -- macaulay ------------------------------------------------------------
  auto* mac = app.add_subcommand("macaulay", "growth bounds and O-sequences");
  mac->require_subcommand(1);
  std::string mac_c, mac_seq_path;
  int mac_i = 1;

  auto* mac_expand = mac->add_subcommand("expand", "i-binomial expansion");
  mac_expand->add_option("c", mac_c)->required();
  mac_expand->add_option("i", mac_i)->required();
  mac_expand->callback([&] {
    auto ex = macaulay::binomial_expansion(mpz_class(mac_c), mac_i);
    std::string text;
    for (const auto& t : ex.terms) {
      if (!text.empty()) text += " + ";
      text += "C(" + t.top.get_str() + "," + std::to_string(t.level) + ")";
    }
    emit(io::to_json(ex), g.json_out, mac_c + " = " + text + "\n");
  });

  auto* mac_growth = mac->add_subcommand("growth", "Macaulay bound c^<i>");
  mac_growth->add_option("c", mac_c)->required();
  mac_growth->add_option("i", mac_i)->required();
  mac_growth->callback([&] {
    mpz_class b = macaulay::growth(mpz_class(mac_c), mac_i);
    emit(json{{"growth", b.get_str()}}, g.json_out, b.get_str() + "\n");
  });

  auto* mac_check = mac->add_subcommand("check", "O-sequence verdict");
  mac_check->add_option("seq", mac_seq_path, "sequence JSON file")->required();
  mac_check->callback([&] {
    HilbertSeq s = io::seq_from_json(load_json(mac_seq_path));
    auto v = macaulay::is_o_sequence(s);
    auto dv = macaulay::is_differentiable_o_sequence(s);
    json j{{"o_sequence", io::to_json(v)}, {"differentiable", io::to_json(dv)}};
    std::string text = std::string("O-sequence: ") + (v.ok ? "yes" : "no");
    if (!v.ok && v.violation)
      text += " (" + v.violation->reason + " at degree " +
              std::to_string(v.violation->degree) + ")";
    text += std::string("; differentiable: ") + (dv.ok ? "yes" : "no");
    if (v.ok && !dv.ok && dv.violation)
      text += " (first difference fails at degree " +
              std::to_string(dv.violation->degree) + ")";
    emit(j, g.json_out, text + "\n");
    if (v.ok && g.json_out) {
      // growth table on demand only in JSON mode
    }
  });

  // -- gotzmann --------------------------------------------------------------
  auto* gotz = app.add_subcommand("gotzmann", "persistence polynomial");
  gotz->require_subcommand(1);
  std::string gz_c;
  int gz_d = 1;
  auto* gz_poly = gotz->add_subcommand("poly", "polynomial after maximal growth");
  gz_poly->add_option("c", gz_c)->required();
  gz_poly->add_option("d", gz_d)->required();
  gz_poly->callback([&] {
    gotzmann::GotzmannPolynomial p(mpz_class(gz_c), gz_d);
    std::string text = "p(x) = " + p.str() + "\ndimension " +
                       std::to_string(p.dimension()) + ", degree " +
                       p.scheme_degree().get_str() + "\n";
    emit(io::to_json(p), g.json_out, text);
  });

  // -- mono ------------------------------------------------------------------
  auto* mono_cmd = app.add_subcommand("mono", "monomial-ideal computations");
  mono_cmd->require_subcommand(1);
  std::string mono_ideal_path, mono_seq_path;
  int mono_n = 3;

  auto* mono_hf = mono_cmd->add_subcommand("hf", "Hilbert function of R/I");
  mono_hf->add_option("--ideal", mono_ideal_path)->required();
  mono_hf->callback([&] {
    auto I = io::ideal_from_json(load_json(mono_ideal_path));
    int tmax = g.tmax >= 0 ? g.tmax : 12;
    HilbertSeq h = mono::hilbert_function(I, tmax);
    emit(io::to_json(h), g.json_out, h.str() + "\n");
  });

  auto* mono_lex = mono_cmd->add_subcommand("lex", "lex-segment ideal");
  mono_lex->add_option("--seq", mono_seq_path)->required();
  mono_lex->add_option("-n,--vars", mono_n, "variable count");
  mono_lex->callback([&] {
    HilbertSeq s = io::seq_from_json(load_json(mono_seq_path));
    auto L = mono::lex_ideal(s, mono_n);
    std::string text;
    for (const auto& u : L.generators()) text += u.str() + "\n";
    emit(io::to_json(L), g.json_out, text);
  });

  auto* mono_betti = mono_cmd->add_subcommand("betti", "Eliahou-Kervaire diagram");
  mono_betti->add_option("--ideal", mono_ideal_path)->required();
  mono_betti->callback([&] {
    auto I = io::ideal_from_json(load_json(mono_ideal_path));
    auto b = mono::ek_betti(I);
    emit(io::to_json(b), g.json_out, b.render());
  });

  auto* mono_socle = mono_cmd->add_subcommand("socle", "socle of R/I");
  mono_socle->add_option("--ideal", mono_ideal_path)->required();
  mono_socle->callback([&] {
    auto I = io::ideal_from_json(load_json(mono_ideal_path));
    auto socle = mono::socle_monomials(I);
    json j = json::array();
    std::string text;
    for (const auto& u : socle) {
      j.push_back(json{{"degree", u.degree()}, {"monomial", u.e}});
      text += std::to_string(u.degree()) + ": " + u.str() + "\n";
    }
    emit(j, g.json_out, text);
  });

  auto* mono_lift = mono_cmd->add_subcommand("lift", "distraction to points");
  mono_lift->add_option("--ideal", mono_ideal_path)->required();
  mono_lift->callback([&] {
    auto I = io::ideal_from_json(load_json(mono_ideal_path));
    auto lifted = mono::distraction_points(I);
    json gens = json::array();
    for (const auto& f : lifted.lifted_gens) gens.push_back(io::to_json(f));
    json j{{"points", io::to_json(lifted.points)}, {"gens", gens}};
    std::string text = std::to_string(lifted.points.size()) + " points\n";
    for (const auto& f : lifted.lifted_gens) text += f.str() + "\n";
    emit(j, g.json_out, text);
  });

  // -- rank-engine commands --------------------------------------------------
  auto add_source_cmd = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    return cmd;
  };

  SourceOpts rnum_src, wlp_src, slp_src, trunc_src, alpha_src;
  int rnum_m = 1, wlp_m = 0, slp_m = 0, slp_d = 2, trunc_d = 1;
  std::optional<std::pair<int, int>> trunc_range;
  int trunc_lo = -1, trunc_hi = -1;

  auto* rnum = add_source_cmd("rnum", "reduction number r_m");
  rnum_src.attach(rnum);
  rnum->add_option("-m", rnum_m, "number of general linear forms")->required();
  rnum->callback([&] {
    auto loaded = rnum_src.load();
    int r = modla::reduction_number(*loaded.src, rnum_m, g.engine());
    emit(json{{"m", rnum_m}, {"r", r}}, g.json_out,
         "r_" + std::to_string(rnum_m) + " = " + std::to_string(r) + "\n");
  });

  auto* wlp = add_source_cmd("wlp", "weak Lefschetz test");
  wlp_src.attach(wlp);
  wlp->add_option("-m", wlp_m, "generic linears to reach an Artinian reduction");
  wlp->callback([&] {
    auto loaded = wlp_src.load();
    int tmax = g.tmax >= 0 ? g.tmax : 2 * g.cap;
    auto rep = modla::wlp_test(*loaded.src, wlp_m, tmax, g.engine());
    std::string text = rep.pass ? "WLP: PASS\n" : "WLP: FAIL\n";
    for (const auto& r : rep.rows)
      text += "  t=" + std::to_string(r.t) + ": " + std::to_string(r.dim_from) +
              " -> " + std::to_string(r.dim_to) + ", rank " +
              std::to_string(r.rank) + "/" + std::to_string(r.max_rank) +
              (r.ok ? "" : "  [deficient]") + "\n";
    emit(io::to_json(rep), g.json_out, text);
  });

  auto* slp = add_source_cmd("slp", "strong Lefschetz test for one degree");
  slp_src.attach(slp);
  slp->add_option("-m", slp_m, "generic linears to reach an Artinian reduction");
  slp->add_option("-d,--degree", slp_d, "degree of the multiplier form");
  slp->callback([&] {
    auto loaded = slp_src.load();
    int tmax = g.tmax >= 0 ? g.tmax : 2 * g.cap;
    auto rep = modla::slp_test(*loaded.src, slp_m, slp_d, tmax, g.engine());
    emit(io::to_json(rep), g.json_out,
         std::string(rep.pass ? "SLP(" : "SLP(") + std::to_string(slp_d) +
             "): " + (rep.pass ? "PASS" : "FAIL") + "\n");
  });

  auto* trunc = add_source_cmd("truncpoly",
                               "Hilbert polynomial of the truncated ideal");
  trunc_src.attach(trunc);
  trunc->add_option("-d", trunc_d, "truncation degree")->required();
  trunc->add_option("--lo", trunc_lo, "first sample degree");
  trunc->add_option("--hi", trunc_hi, "last sample degree");
  trunc->callback([&] {
    auto loaded = trunc_src.load();
    if (trunc_lo >= 0 && trunc_hi >= 0)
      trunc_range = std::make_pair(trunc_lo, trunc_hi);
    auto fit = modla::truncated_ideal_polynomial(*loaded.src, trunc_d,
                                                 trunc_range, g.engine());
    std::string text = "degree " + std::to_string(fit.degree) +
                       " (dimension), scheme degree " +
                       fit.scheme_degree.get_str() + "\n";
    emit(io::to_json(fit), g.json_out, text);
  });

  auto* alpha = add_source_cmd("alpha", "initial degree of the ideal");
  alpha_src.attach(alpha);
  alpha->callback([&] {
    auto loaded = alpha_src.load();
    int a = modla::initial_degree(*loaded.src, g.engine());
    emit(json{{"alpha", a}}, g.json_out, std::to_string(a) + "\n");
  });

  // -- points ------------------------------------------------------------------
  auto* pts = app.add_subcommand("points", "point-set computations");
  pts->require_subcommand(1);
  std::string pts_path;
  int pts_d = 1;
  bool pts_sampled = false;

  auto* pts_hf = pts->add_subcommand("hf", "Hilbert function and h-vector");
  pts_hf->add_option("--points", pts_path)->required();
  pts_hf->callback([&] {
    auto z = io::points_from_json(load_json(pts_path));
    HilbertSeq h = points::h_vector(z, g.engine());
    emit(json{{"h_vector", io::to_json(h)}}, g.json_out,
         "h-vector: " + h.str() + "\n");
  });

  auto* pts_upp = pts->add_subcommand("upp", "uniform position test");
  pts_upp->add_option("--points", pts_path)->required();
  pts_upp->add_flag("--sampled", pts_sampled, "sample subsets instead of full scan");
  pts_upp->callback([&] {
    auto z = io::points_from_json(load_json(pts_path));
    points::UppOptions opt;
    opt.exhaustive = !pts_sampled;
    auto res = points::upp_test(z, opt, g.engine());
    std::string text = res.pass ? "UPP: PASS\n" : "UPP: FAIL\n";
    if (!res.pass && res.witness) {
      text += "  witness subset:";
      for (int i : *res.witness) text += " " + std::to_string(i);
      text += "\n";
    }
    emit(io::to_json(res), g.json_out, text);
  });

  auto* pts_forms = pts->add_subcommand("forms", "basis of the degree-d slice");
  pts_forms->add_option("--points", pts_path)->required();
  pts_forms->add_option("-d", pts_d)->required();
  pts_forms->callback([&] {
    auto z = io::points_from_json(load_json(pts_path));
    auto forms = points::degree_forms(z, pts_d, g.engine());
    json j = json::array();
    std::string text;
    for (const auto& f : forms) {
      j.push_back(io::to_json(f));
      text += f.str() + "\n";
    }
    emit(j, g.json_out, text);
  });

  auto* pts_gcd = pts->add_subcommand("gcd", "GCD of the degree-d slice");
  pts_gcd->add_option("--points", pts_path)->required();
  pts_gcd->add_option("-d", pts_d)->required();
  pts_gcd->callback([&] {
    auto z = io::points_from_json(load_json(pts_path));
    auto forms = points::degree_forms(z, pts_d, g.engine());
    if (forms.empty()) throw std::runtime_error("the slice is zero");
    auto gcd = points::gcd_of_forms(forms, g.seed);
    emit(io::to_json(gcd), g.json_out,
         "gcd (degree " + std::to_string(gcd.degree()) + "): " + gcd.str() + "\n");
  });

  // -- diagnose -----------------------------------------------------------------
  auto* diag = app.add_subcommand("diagnose", "apply the base-locus rules");
  std::string diag_path;
  diag->add_option("input", diag_path, "diagnosis input JSON")->required();
  diag->callback([&] {
    auto in = io::diagnose_input_from_json(load_json(diag_path));
    auto rep = diagnose::diagnose(in);
    emit(io::to_json(rep), g.json_out, diagnose::render(rep));
  });

  // -- fixtures -----------------------------------------------------------------
  auto* fix = app.add_subcommand("fixtures", "bundled case-study suite");
  fix->require_subcommand(1);
  auto* fix_run = fix->add_subcommand("run", "run the bundled fixtures");
  std::string fix_only;
  fix_run->add_option("--only", fix_only, "substring filter on fixture names");
  fix_run->callback([&] {
    auto outcomes = fixtures::run_fixtures(fix_only, g.engine());
    bool all_pass = true;
    json j = json::array();
    for (const auto& o : outcomes) {
      all_pass = all_pass && o.pass;
      j.push_back(json{{"name", o.name}, {"pass", o.pass}, {"detail", o.detail}});
      if (!g.json_out)
        std::cout << (o.pass ? "PASS " : "FAIL ") << o.name
                  << (o.detail.empty() ? "" : "  (" + o.detail + ")") << "\n";
    }
    if (g.json_out) std::cout << j.dump(2) << "\n";
    if (!all_pass) throw std::runtime_error("fixture failures");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const json::parse_error& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

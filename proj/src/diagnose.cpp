#include "hilb/diagnose.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilb::diagnose {

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::saturated: return "saturated";
    case Conclusion::curve_of_degree_s: return "curve-of-degree-s";
    case Conclusion::d_regular: return "d-regular";
    case Conclusion::reduced: return "reduced";
    case Conclusion::unmixed: return "unmixed";
    case Conclusion::irreducible: return "irreducible";
    case Conclusion::z_contained_in_c: return "Z-contained-in-C";
    case Conclusion::two_dim_scheme_of_degree_s:
      return "2-dim-scheme-of-degree-s";
  }
  return "?";
}

std::vector<std::string> FlatReport::fired_ids() const {
  std::vector<std::string> ids;
  for (const auto& r : rules)
    if (r.fired) ids.push_back(r.id);
  return ids;
}

std::vector<Conclusion> FlatReport::conclusions() const {
  std::vector<Conclusion> out;
  for (const auto& r : rules) {
    if (!r.fired) continue;
    for (Conclusion c : r.conclusions)
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

std::vector<std::pair<int, std::int64_t>> find_flats(const HilbertSeq& d) {
  std::vector<std::pair<int, std::int64_t>> flats;
  for (std::size_t t = 0; t + 1 < d.size(); ++t)
    if (d[t] > 0 && d[t] == d[t + 1])
      flats.emplace_back(static_cast<int>(t), d[t]);
  return flats;
}

bool decreasing_type(const HilbertSeq& delta_h) {
  const auto& v = delta_h.values();
  bool dropped = false;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::int64_t cur = v[t];
    const std::int64_t next = t + 1 < v.size() ? v[t + 1] : 0;
    if (cur <= 0) break;
    if (next < cur)
      dropped = true;
    else if (dropped)
      return false;
  }
  return true;
}

namespace {

HypStatus status_of(std::optional<bool> flag) {
  if (!flag.has_value()) return HypStatus::unknown;
  return *flag ? HypStatus::holds : HypStatus::fails;
}

HypStatus status_of(bool fact) {
  return fact ? HypStatus::holds : HypStatus::fails;
}

void finalize(RuleOutcome& r) {
  r.evaluable = true;
  r.fired = true;
  for (const auto& h : r.hypotheses) {
    if (h.status == HypStatus::unknown) r.evaluable = false;
    if (h.status != HypStatus::holds) r.fired = false;
  }
  if (!r.fired) {
    r.conclusions.clear();
    r.predictions.clear();
  }
}

const char* kFormulaNote =
    "Hilbert-function relations between Z, the curve part and the residual "
    "are asserted to exist, not computed";

void rules_for_delta_flat(const Input& in, FlatReport& flat) {
  const int d = flat.d;
  const std::int64_t s = flat.s;
  const bool plane = in.ambient_n == 3;
  const bool d_ge_s = d >= s;
  const HypStatus above_r2 =
      in.r2 ? status_of(d > *in.r2) : HypStatus::unknown;

  {
    RuleOutcome r{"R1", "Davis (plane GCD)"};
    r.hypotheses = {{"ambient is the plane (n = 3)", status_of(plane)},
                    {"d >= s", status_of(d_ge_s)}};
    r.conclusions = {Conclusion::curve_of_degree_s};
    if (in.reduced == true) r.conclusions.push_back(Conclusion::reduced);
    r.predictions = {"the degree-d and degree-(d+1) slices share a GCD of degree s"};
    r.notes = {kFormulaNote};
    finalize(r);
    flat.rules.push_back(std::move(r));
  }
  {
    RuleOutcome r{"R2", "BGM (curve from maximal growth)"};
    r.hypotheses = {{"d >= s", status_of(d_ge_s)},
                    {"Z reduced", status_of(in.reduced)}};
    r.conclusions = {Conclusion::saturated, Conclusion::curve_of_degree_s,
                     Conclusion::reduced, Conclusion::d_regular};
    r.notes = {kFormulaNote};
    finalize(r);
    flat.rules.push_back(std::move(r));
  }
  {
    RuleOutcome r{"R3", "AM (curve from reduction number)"};
    r.hypotheses = {{"d > r2", above_r2}, {"Z reduced", status_of(in.reduced)}};
    r.conclusions = {Conclusion::saturated, Conclusion::curve_of_degree_s,
                     Conclusion::d_regular};
    if (in.h1_vanishes == true) {
      r.conclusions.push_back(Conclusion::reduced);
      r.notes.push_back("reducedness granted by the h^1 vanishing hypothesis");
    } else if (!in.h1_vanishes.has_value()) {
      r.notes.push_back(
          "with h^1 of the reduced curve vanishing in degree d-1, the curve "
          "would also be reduced");
    }
    r.notes.push_back(kFormulaNote);
    finalize(r);
    flat.rules.push_back(std::move(r));
  }
  {
    RuleOutcome r{"R4", "BGM-UPP (irreducible curve)"};
    r.hypotheses = {{"d >= s", status_of(d_ge_s)},
                    {"Z has UPP", status_of(in.upp)}};
    r.conclusions = {Conclusion::saturated, Conclusion::curve_of_degree_s,
                     Conclusion::reduced,   Conclusion::d_regular,
                     Conclusion::unmixed,   Conclusion::irreducible,
                     Conclusion::z_contained_in_c};
    finalize(r);
    flat.rules.push_back(std::move(r));
  }
  {
    RuleOutcome r{"R5", "AM-UPP (unmixed curve from reduction number)"};
    r.hypotheses = {{"d > r2", above_r2}, {"Z has UPP", status_of(in.upp)}};
    r.conclusions = {Conclusion::saturated, Conclusion::curve_of_degree_s,
                     Conclusion::d_regular, Conclusion::unmixed,
                     Conclusion::z_contained_in_c};
    if (in.h1_vanishes == true) {
      r.conclusions.push_back(Conclusion::reduced);
      r.notes.push_back("reducedness granted by the h^1 vanishing hypothesis");
    }
    finalize(r);
    flat.rules.push_back(std::move(r));
  }
  {
    RuleOutcome r{"R6", "decreasing-type continuation"};
    HypStatus strict_drop = HypStatus::unknown;
    if (static_cast<std::size_t>(d) + 2 < in.delta_h.size() ||
        in.delta_h.can_extend()) {
      strict_drop = status_of(in.delta_h.value_at(d + 1) >
                              in.delta_h.value_at(d + 2));
    }
    r.hypotheses = {{"Z has UPP", status_of(in.upp)},
                    {"d >= s", status_of(d_ge_s)},
                    {"delta h(d+1) > delta h(d+2)", strict_drop}};
    r.predictions = {
        "delta h strictly decreases from degree d+1 until it reaches 0"};
    finalize(r);
    flat.rules.push_back(std::move(r));
  }
}

void rule_for_delta2_flat(const Input& in, FlatReport& flat) {
  const int d = flat.d;
  RuleOutcome r{"R7", "surface from second difference"};
  HypStatus below_r2 = in.r2 ? status_of(*in.r2 > d) : HypStatus::unknown;
  HypStatus above_r3 = in.r3 ? status_of(d > *in.r3) : HypStatus::unknown;
  r.hypotheses = {{"ambient space P^(n-1) with n > 3", status_of(in.ambient_n > 3)},
                  {"Z has WLP", status_of(in.wlp)},
                  {"r2 > d", below_r2},
                  {"d > r3", above_r3}};
  r.conclusions = {Conclusion::saturated,
                   Conclusion::two_dim_scheme_of_degree_s,
                   Conclusion::d_regular};
  finalize(r);
  flat.rules.push_back(std::move(r));
}

}  // namespace

Report diagnose(const Input& in) {
  if (in.ambient_n < 2)
    throw std::invalid_argument("diagnose: ambient_n must be at least 2");
  if (in.delta2_h) {
    HilbertSeq expect = difference(in.delta_h, 1);
    if (in.delta2_h->size() > expect.size())
      throw std::invalid_argument("diagnose: delta2_h longer than delta_h");
    for (std::size_t t = 0; t < in.delta2_h->size(); ++t)
      if ((*in.delta2_h)[t] != expect[t])
        throw std::invalid_argument(
            "diagnose: delta2_h is not the difference of delta_h");
  }

  Report rep;
  for (auto [d, s] : find_flats(in.delta_h)) {
    FlatReport flat;
    flat.d = d;
    flat.s = s;
    rules_for_delta_flat(in, flat);

    // R6 contradiction check: the prediction is refutable from the window.
    for (const auto& r : flat.rules) {
      if (r.id != "R6" || !r.fired) continue;
      for (std::size_t t = static_cast<std::size_t>(d) + 1;
           t + 1 < in.delta_h.size(); ++t) {
        if (in.delta_h[t] > 0 && in.delta_h[t + 1] >= in.delta_h[t]) {
          rep.warnings.push_back(
              "data contradicts the decreasing-type continuation after the "
              "flat at d=" + std::to_string(d));
          break;
        }
      }
    }
    rep.flats.push_back(std::move(flat));
  }

  if (in.delta2_h) {
    for (auto [d, s] : find_flats(*in.delta2_h)) {
      FlatReport flat;
      flat.d = d;
      flat.s = s;
      flat.second_difference = true;
      rule_for_delta2_flat(in, flat);
      rep.flats.push_back(std::move(flat));
    }
  }

  // Plane UPP sanity: a UPP h-vector in the plane must be of decreasing type.
  if (in.upp == true && in.ambient_n == 3 && !decreasing_type(in.delta_h))
    rep.warnings.push_back(
        "no UPP set of points in the plane can have this h-vector "
        "(decreasing-type violation)");

  // d >= s forces d > r2; flag supplied data that disagrees.
  if (in.r2) {
    for (const auto& flat : rep.flats) {
      if (flat.second_difference) continue;
      if (flat.d >= flat.s && flat.d <= *in.r2)
        rep.warnings.push_back(
            "inconsistent data: flat at d=" + std::to_string(flat.d) +
            " has d >= s, which forces d > r2, but r2 = " +
            std::to_string(*in.r2) + " was supplied");
    }
  }
  return rep;
}

std::string render(const Report& rep) {
  std::ostringstream os;
  int delta_flats = 0;
  for (const auto& f : rep.flats)
    if (!f.second_difference) ++delta_flats;
  os << "flats found: " << delta_flats << " in delta h, "
     << rep.flats.size() - delta_flats << " in delta^2 h\n";
  for (const auto& f : rep.flats) {
    os << "\nflat" << (f.second_difference ? " (second difference)" : "")
       << " at d=" << f.d << ", s=" << f.s << "\n";
    for (const auto& r : f.rules) {
      os << "  " << r.id << " " << r.name << ": ";
      if (r.fired)
        os << "FIRES";
      else if (r.evaluable)
        os << "does not apply";
      else
        os << "not evaluable (missing inputs)";
      os << "\n";
      for (const auto& h : r.hypotheses) {
        const char* st = h.status == HypStatus::holds   ? "holds"
                         : h.status == HypStatus::fails ? "fails"
                                                        : "unknown";
        os << "      - " << h.name << ": " << st << "\n";
      }
      if (r.fired) {
        os << "      conclusions:";
        for (std::size_t i = 0; i < r.conclusions.size(); ++i) {
          std::string c = to_string(r.conclusions[i]);
          if (r.conclusions[i] == Conclusion::curve_of_degree_s)
            c = "curve of degree " + std::to_string(f.s);
          if (r.conclusions[i] == Conclusion::two_dim_scheme_of_degree_s)
            c = "2-dimensional subscheme of degree " + std::to_string(f.s);
          if (r.conclusions[i] == Conclusion::d_regular)
            c = std::to_string(f.d) + "-regular";
          os << (i ? ", " : " ") << c;
        }
        os << "\n";
        for (const auto& p : r.predictions) os << "      predicts: " << p << "\n";
      }
      for (const auto& n : r.notes) os << "      note: " << n << "\n";
    }
  }
  os << "\nwarnings: " << (rep.warnings.empty() ? "none" : "") << "\n";
  for (const auto& w : rep.warnings) os << "  ! " << w << "\n";
  return os.str();
}

}  // namespace hilb::diagnose

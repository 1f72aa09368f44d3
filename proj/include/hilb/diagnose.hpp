#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilb/seq.hpp"

namespace hilb::diagnose {

/// Everything the rule engine may consume.  Optional fields left unset mark
/// the rules needing them "not evaluable" instead of failed.
struct Input {
  int ambient_n = 0;     // variable count; the space is P^(n-1)
  HilbertSeq delta_h;    // first difference of the Hilbert function
  std::optional<HilbertSeq> delta2_h;
  std::optional<int> r2, r3;       // reduction numbers
  std::optional<bool> upp;         // uniform position
  std::optional<bool> wlp;         // weak Lefschetz (Artinian reduction)
  std::optional<bool> reduced;     // Z reduced
  std::optional<bool> h1_vanishes; // h^1 of the reduced curve in degree d-1
};

enum class Conclusion {
  saturated,
  curve_of_degree_s,
  d_regular,
  reduced,
  unmixed,
  irreducible,
  z_contained_in_c,
  two_dim_scheme_of_degree_s,
};
std::string to_string(Conclusion c);

enum class HypStatus { holds, fails, unknown };

struct Hypothesis {
  std::string name;
  HypStatus status = HypStatus::unknown;
};

struct RuleOutcome {
  std::string id;    // R1..R8
  std::string name;
  bool evaluable = false;  // no required hypothesis left unknown
  bool fired = false;      // every hypothesis holds
  std::vector<Hypothesis> hypotheses;
  std::vector<Conclusion> conclusions;   // granted only when fired
  std::vector<std::string> predictions;  // non-base-locus consequences
  std::vector<std::string> notes;
};

struct FlatReport {
  int d = 0;
  std::int64_t s = 0;
  bool second_difference = false;  // a flat of delta2 rather than delta
  std::vector<RuleOutcome> rules;

  std::vector<std::string> fired_ids() const;
  std::vector<Conclusion> conclusions() const;  // union over fired rules
};

struct Report {
  std::vector<FlatReport> flats;  // ordered by degree
  std::vector<std::string> warnings;
};

/// All degrees d with delta[d] = delta[d+1] = s > 0 inside the window.
std::vector<std::pair<int, std::int64_t>> find_flats(const HilbertSeq& delta_h);

/// Once the sequence strictly decreases it must keep strictly decreasing
/// until it reaches zero.
bool decreasing_type(const HilbertSeq& delta_h);

Report diagnose(const Input& input);

std::string render(const Report& report);

}  // namespace hilb::diagnose

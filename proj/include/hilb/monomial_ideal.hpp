#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilb/form.hpp"
#include "hilb/grading.hpp"
#include "hilb/points.hpp"
#include "hilb/seq.hpp"

namespace hilb::mono {

struct Monomial {
  Exponents e;

  int degree() const { return total_degree(e); }
  bool divides(const Monomial& o) const;
  /// Largest 1-based variable index with a positive exponent (x_1 > ... > x_n).
  int max_index() const;
  std::string str() const;
  bool operator==(const Monomial&) const = default;
};

/// Minimal monomial generators over n variables, sorted by degree and then
/// by descending lex within a degree.
class MonomialIdeal {
 public:
  static MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

  int vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Exponents& e) const;  // divisibility by some generator
  bool is_zero_ideal() const { return gens_.empty(); }

  /// Generators as single-term rational forms (rank-engine input).
  std::vector<Form> generator_forms() const;

 private:
  MonomialIdeal(int n, std::vector<Monomial> gens)
      : n_(n), gens_(std::move(gens)) {}
  int n_;
  std::vector<Monomial> gens_;
};

/// dim (R/I)_t for t = 0..t_max by standard-monomial counting.
HilbertSeq hilbert_function(const MonomialIdeal& I, int t_max);

/// The lex-segment ideal realizing a finite O-sequence (zero-extended).
/// Throws std::domain_error citing the violating degree otherwise.
MonomialIdeal lex_ideal(const HilbertSeq& s, int n);

/// Exchange property: for every generator u and j < max_index(u), the
/// monomial x_j * u / x_max(u) stays in the ideal.
bool is_stable(const MonomialIdeal& I);

/// Graded Betti numbers of R/I, columns by homological degree, rows by
/// (internal degree - column).
class BettiDiagram {
 public:
  void add(int col, int row, long long v);
  long long at(int col, int row) const;
  const std::map<std::pair<int, int>, long long>& entries() const {
    return entries_;
  }
  int columns() const { return cols_; }
  int max_row() const { return max_row_; }
  std::vector<long long> totals() const;
  std::string render() const;  // dash-for-zero table

 private:
  std::map<std::pair<int, int>, long long> entries_;  // (col, row) -> rank
  int cols_ = 0;
  int max_row_ = 0;
};

/// Eliahou-Kervaire resolution of a stable monomial ideal: each generator u
/// of degree D contributes C(max_index(u)-1, i) to column i+1, row D-1.
/// Throws std::domain_error on non-stable input.
BettiDiagram ek_betti(const MonomialIdeal& I);

bool is_artinian(const MonomialIdeal& I);

/// Standard monomials annihilated by every variable, grouped by degree.
/// Requires an Artinian ideal.
std::vector<Monomial> socle_monomials(const MonomialIdeal& I);
std::vector<int> socle_degrees(const MonomialIdeal& I);

struct Distraction {
  points::PointSet points;        // one point [1 : a] per standard monomial x^a
  std::vector<Form> lifted_gens;  // x^a -> prod_i prod_{k<a_i} (x_i - k x_0)
};

/// Lifts an Artinian monomial ideal to a reduced point set one dimension up
/// whose h-vector is the Hilbert function of R/I.  Integer nodes 0,1,2,...
/// are used on every variable.
Distraction distraction_points(const MonomialIdeal& I);

}  // namespace hilb::mono

#pragma once

// Local cohomology of face rings: the decomposition of H^i_m(K[Δ]) over the
// faces ν of Δ with multiplicity dim H̃^{i-1-|ν|}(link ν), its Z^n-graded
// Hilbert function, depth and the Cohen-Macaulay property, and the count of
// Frobenius-stable submodules.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "froblab/simplicial.hpp"

namespace froblab {

using MultiDegree = std::vector<int>;

/// Variables with strictly negative (resp. positive) entries.
Face negative_support(const MultiDegree& theta);
Face positive_support(const MultiDegree& theta);

class HochsterTable {
 public:
  using Key = std::pair<int, Face>;

  HochsterTable() = default;
  HochsterTable(Residue p, std::map<Key, std::size_t> entries)
      : p_(p), entries_(std::move(entries)) {}

  Residue prime() const { return p_; }
  /// Nonzero multiplicities only, ordered by index then face.
  const std::map<Key, std::size_t>& entries() const { return entries_; }
  std::size_t multiplicity(int i, Face nu) const;
  /// Faces with a nonzero multiplicity at index i.
  std::vector<std::pair<Face, std::size_t>> at(int i) const;
  std::set<int> indices() const;

  friend bool operator==(const HochsterTable&, const HochsterTable&) = default;

 private:
  Residue p_ = 2;
  std::map<Key, std::size_t> entries_;
};

HochsterTable decomposition(const SimplicialComplex& c, Residue p);

/// dim_K [H^i_m(K[Δ])]_θ read off the table: nonzero only if θ has no positive
/// entry and ν = neg(θ) is a face.
std::size_t graded_dim(const HochsterTable& table, const SimplicialComplex& c, int i,
                       const MultiDegree& theta);
std::size_t graded_dim(const SimplicialComplex& c, Residue p, int i, const MultiDegree& theta);

inline constexpr int kDefaultOracleBound = 64;

/// Cohomology of the θ-graded strand of the Čech complex on x_0..x_{n-1},
/// built directly from the faces σ with ν ⊆ σ and σ ∪ π ∈ Δ. Independent of
/// links and of the table. Returns index -> dimension, zeros omitted.
std::map<int, std::size_t> cech_graded_oracle(const SimplicialComplex& c, Residue p,
                                              const MultiDegree& theta,
                                              int bound = kDefaultOracleBound);

struct DepthInfo {
  int depth = 0;
  int dim = 0;
  bool is_cm = false;        // depth == dim, from the table
  bool reisner_cm = false;   // every link has cohomology only in its top degree
  bool consistent() const { return is_cm == reisner_cm; }
};

/// Link condition: for every face σ, H̃^j(link σ) = 0 for j != dim link σ.
bool reisner_condition(const SimplicialComplex& c, Residue p);

DepthInfo depth_and_cm(const SimplicialComplex& c, Residue p);
DepthInfo depth_and_cm(const HochsterTable& table, const SimplicialComplex& c);

/// Number of F-stable submodules of H^i: product over ν of the number of
/// subspaces of F_p^{m(i,ν)}.
std::uint64_t fh_count(const HochsterTable& table, int i);
/// Throws UnsupportedField unless field_order is prime.
std::uint64_t fh_count(const SimplicialComplex& c, std::uint64_t field_order, int i);

/// All θ in [lo, hi]^n in lexicographic order.
std::vector<MultiDegree> degree_box(std::size_t n, int lo, int hi);

struct OracleMismatch {
  MultiDegree theta;
  int index = 0;
  std::size_t table_dim = 0;
  std::size_t oracle_dim = 0;
};

struct OracleComparison {
  std::size_t degrees_checked = 0;
  std::vector<OracleMismatch> mismatches;
  bool agrees() const { return mismatches.empty(); }
};

/// graded_dim against cech_graded_oracle for every θ in [lo, hi]^n and every
/// index. Degrees are split across worker threads.
OracleComparison compare_with_oracle(const SimplicialComplex& c, Residue p, int lo = -3,
                                     int hi = 1);

}  // namespace froblab

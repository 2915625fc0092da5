#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "froblab/gfp_linalg.hpp"
#include "froblab/polyfp.hpp"

namespace froblab {

/// Echelon form of the degree-d piece I_d of a homogeneous ideal, built from
/// the Macaulay rows g·m (deg g + deg m = d). Multiples of monomial generators
/// are unit rows and are applied by discarding their columns. Columns are the
/// degree-d monomials in descending lex order; rows are stored sparsely.
class GradedPiece {
 public:
  GradedPiece(const GradedIdealBasis& ideal, std::uint64_t degree);

  std::uint64_t degree() const { return degree_; }
  std::size_t ambient_dim() const { return columns_.size(); }
  std::size_t ideal_dim() const { return killed_count_ + rows_.size(); }
  std::size_t quotient_dim() const { return ambient_dim() - ideal_dim(); }

  /// Monomials that are neither killed nor pivots; a basis of S_d / I_d.
  const std::vector<Monomial>& standard_monomials() const { return standard_; }

  /// Unique representative of r + I_d supported on the standard monomials.
  PolynomialFp normal_form(const PolynomialFp& r) const;
  bool contains(const PolynomialFp& r) const;
  /// Coordinates of r + I_d in the standard-monomial basis.
  std::vector<Residue> quotient_coordinates(const PolynomialFp& r) const;
  /// Polynomial with the given standard-monomial coordinates.
  PolynomialFp from_coordinates(const std::vector<Residue>& coords) const;

 private:
  struct SparseRow {
    std::vector<std::uint32_t> cols;
    std::vector<Residue> vals;
  };

  std::vector<Residue> dense(const PolynomialFp& r) const;
  void reduce_dense(std::vector<Residue>& acc) const;
  void insert(std::vector<Residue>& acc);

  Residue p_ = 2;
  std::size_t n_vars_ = 0;
  std::uint64_t degree_ = 0;
  std::vector<Monomial> columns_;
  std::map<Monomial, std::uint32_t> index_;
  std::vector<bool> killed_;
  std::size_t killed_count_ = 0;
  std::vector<std::int32_t> pivot_row_;
  std::vector<SparseRow> rows_;
  std::vector<Monomial> standard_;
  std::vector<std::uint32_t> standard_cols_;
};

}  // namespace froblab

#include "froblab/macaulay.hpp"

#include <algorithm>

#include "froblab/errors.hpp"

namespace froblab {

GradedPiece::GradedPiece(const GradedIdealBasis& ideal, std::uint64_t degree)
    : p_(ideal.prime()), n_vars_(ideal.n_vars()), degree_(degree) {
  if (!ideal.is_homogeneous()) {
    throw UnsupportedInput("graded pieces require homogeneous generators");
  }
  columns_ = monomials_of_degree(n_vars_, degree_);
  for (std::uint32_t c = 0; c < columns_.size(); ++c) index_.emplace(columns_[c], c);
  killed_.assign(columns_.size(), false);
  pivot_row_.assign(columns_.size(), -1);

  std::vector<const PolynomialFp*> others;
  for (const auto& g : ideal.generators()) {
    if (g.total_degree() > degree_) continue;
    if (g.is_monomial()) {
      const Monomial& m = g.terms().begin()->first;
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (!killed_[c] && m.divides(columns_[c])) {
          killed_[c] = true;
          ++killed_count_;
        }
      }
    } else {
      others.push_back(&g);
    }
  }

  std::vector<Residue> acc(columns_.size(), 0);
  for (const PolynomialFp* g : others) {
    for (const auto& m : monomials_of_degree(n_vars_, degree_ - g->total_degree())) {
      std::fill(acc.begin(), acc.end(), 0);
      for (const auto& [t, c] : g->terms()) {
        const auto col = index_.at(t * m);
        if (!killed_[col]) acc[col] = c;
      }
      insert(acc);
    }
  }

  for (std::uint32_t c = 0; c < columns_.size(); ++c) {
    if (!killed_[c] && pivot_row_[c] < 0) {
      standard_.push_back(columns_[c]);
      standard_cols_.push_back(c);
    }
  }
}

void GradedPiece::insert(std::vector<Residue>& acc) {
  for (std::size_t c = 0; c < acc.size(); ++c) {
    if (acc[c] == 0) continue;
    if (pivot_row_[c] >= 0) {
      const auto& row = rows_[static_cast<std::size_t>(pivot_row_[c])];
      const std::uint64_t neg = p_ - acc[c];
      for (std::size_t k = 0; k < row.cols.size(); ++k) {
        auto& e = acc[row.cols[k]];
        e = static_cast<Residue>((e + neg * row.vals[k]) % p_);
      }
      continue;
    }
    const std::uint64_t inv = inverse_mod(acc[c], p_);
    SparseRow row;
    for (std::size_t k = c; k < acc.size(); ++k) {
      if (acc[k] == 0) continue;
      row.cols.push_back(static_cast<std::uint32_t>(k));
      row.vals.push_back(static_cast<Residue>(acc[k] * inv % p_));
    }
    pivot_row_[c] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(row));
    return;
  }
}

std::vector<Residue> GradedPiece::dense(const PolynomialFp& r) const {
  if (r.prime() != p_ || r.n_vars() != n_vars_) throw DimensionMismatch("polynomial ring differs");
  std::vector<Residue> acc(columns_.size(), 0);
  for (const auto& [m, c] : r.terms()) {
    if (m.degree() != degree_) {
      throw UnsupportedInput("polynomial is not homogeneous of degree " + std::to_string(degree_));
    }
    acc[index_.at(m)] = c;
  }
  return acc;
}

void GradedPiece::reduce_dense(std::vector<Residue>& acc) const {
  for (std::size_t c = 0; c < acc.size(); ++c) {
    if (acc[c] == 0) continue;
    if (killed_[c]) {
      acc[c] = 0;
      continue;
    }
    if (pivot_row_[c] < 0) continue;
    const auto& row = rows_[static_cast<std::size_t>(pivot_row_[c])];
    const std::uint64_t neg = p_ - acc[c];
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      auto& e = acc[row.cols[k]];
      e = static_cast<Residue>((e + neg * row.vals[k]) % p_);
    }
  }
}

PolynomialFp GradedPiece::normal_form(const PolynomialFp& r) const {
  auto acc = dense(r);
  reduce_dense(acc);
  PolynomialFp out(p_, n_vars_);
  for (auto c : standard_cols_) {
    if (acc[c] != 0) out.add_term(columns_[c], acc[c]);
  }
  return out;
}

bool GradedPiece::contains(const PolynomialFp& r) const {
  auto acc = dense(r);
  reduce_dense(acc);
  return std::all_of(acc.begin(), acc.end(), [](Residue e) { return e == 0; });
}

std::vector<Residue> GradedPiece::quotient_coordinates(const PolynomialFp& r) const {
  auto acc = dense(r);
  reduce_dense(acc);
  std::vector<Residue> out;
  out.reserve(standard_cols_.size());
  for (auto c : standard_cols_) out.push_back(acc[c]);
  return out;
}

PolynomialFp GradedPiece::from_coordinates(const std::vector<Residue>& coords) const {
  if (coords.size() != standard_.size()) throw DimensionMismatch("coordinate vector length");
  PolynomialFp out(p_, n_vars_);
  for (std::size_t k = 0; k < coords.size(); ++k) out.add_term(standard_[k], coords[k]);
  return out;
}

}  // namespace froblab

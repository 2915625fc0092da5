#pragma once

// Exact dense linear algebra over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace froblab {

using Residue = std::uint32_t;

/// Largest admissible modulus (exclusive); keeps every product in 32 bits.
inline constexpr std::uint32_t kMaxPrime = 1u << 15;

bool is_prime(std::uint64_t n);

/// Throws InvalidParameters unless p is a prime below kMaxPrime.
void require_prime(std::uint64_t p);

Residue reduce_mod(std::int64_t value, Residue p);
Residue inverse_mod(Residue a, Residue p);
Residue pow_mod(Residue a, std::uint64_t e, Residue p);

class GfpMatrix {
 public:
  GfpMatrix() = default;
  /// Zero matrix.
  GfpMatrix(Residue p, std::size_t rows, std::size_t cols);

  static GfpMatrix identity(Residue p, std::size_t n);
  /// Entries are reduced modulo p; ragged input throws DimensionMismatch.
  static GfpMatrix from_rows(Residue p, const std::vector<std::vector<std::int64_t>>& rows);

  Residue prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores value mod p.
  void set(std::size_t r, std::size_t c, std::int64_t value);

  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  GfpMatrix transpose() const;
  GfpMatrix operator*(const GfpMatrix& rhs) const;
  /// Matrix-vector product, v treated as a column.
  std::vector<Residue> apply(std::span<const Residue> v) const;

  /// Appends the rows of `below` (same prime and column count).
  GfpMatrix stacked(const GfpMatrix& below) const;

  friend bool operator==(const GfpMatrix&, const GfpMatrix&) = default;

 private:
  Residue p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

struct RrefResult {
  GfpMatrix reduced;  // nonzero rows first, then zero rows
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const GfpMatrix& m);
std::size_t rank(const GfpMatrix& m);

/// A subspace of F_p^n stored as a reduced row-echelon basis without zero rows.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Residue p, std::size_t ambient_dim);
  static Subspace full(Residue p, std::size_t ambient_dim);
  /// Row span of `generators`.
  static Subspace span(const GfpMatrix& generators);
  static Subspace span(Residue p, std::size_t ambient_dim,
                       const std::vector<std::vector<Residue>>& vectors);

  Residue prime() const { return basis_.prime(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const GfpMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Residue> v) const;
  bool contains(const Subspace& other) const;

  /// Reduces v against the basis; the result is zero iff v lies in the subspace.
  std::vector<Residue> residual(std::span<const Residue> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Total order for use in ordered containers.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Subspace(GfpMatrix basis, std::size_t ambient_dim, std::vector<std::size_t> pivots);

  std::size_t ambient_dim_ = 0;
  GfpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : m v = 0} in F_p^{cols}.
Subspace kernel_basis(const GfpMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Image of a subspace of F_p^{cols} under m (as a subspace of F_p^{rows}).
Subspace image_of(const GfpMatrix& m, const Subspace& s);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1u << 16;

/// Every subspace of F_p^dim exactly once, ordered by dimension then pivot set.
/// Throws CapacityExceeded when p^dim exceeds `cap`.
std::vector<Subspace> enumerate_subspaces(Residue p, std::size_t dim,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// Number of k-dimensional subspaces of F_q^n. Throws Error on 64-bit overflow.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);
/// Sum over k of gaussian_binomial(n, k, q).
std::uint64_t num_subspaces(std::uint64_t q, std::uint64_t n);

}  // namespace froblab

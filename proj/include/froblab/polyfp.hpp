#pragma once

// Multivariate polynomials over F_p, monomial ideals and homogeneous ideal
// membership decided one graded piece at a time.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "froblab/gfp_linalg.hpp"

namespace froblab {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n_vars) : exps_(n_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  static Monomial variable(std::size_t n_vars, std::size_t j, std::uint32_t power = 1);

  std::size_t n_vars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t j) const { return exps_[j]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t degree() const;
  bool is_one() const;
  bool is_square_free() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exponent-wise difference; requires other to divide *this.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(std::uint32_t k) const;
  /// Support as a monomial: every positive exponent replaced by 1.
  Monomial radical() const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Lexicographic with x0 > x1 > ...
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> exps_;
};

class PolynomialFp {
 public:
  using TermMap = std::map<Monomial, Residue, std::greater<>>;  // leading term first

  PolynomialFp() = default;
  PolynomialFp(Residue p, std::size_t n_vars) : p_(p), n_vars_(n_vars) {}
  static PolynomialFp constant(Residue p, std::size_t n_vars, std::int64_t c);
  static PolynomialFp monomial(Residue p, const Monomial& m, std::int64_t c = 1);
  static PolynomialFp variable(Residue p, std::size_t n_vars, std::size_t j);

  Residue prime() const { return p_; }
  std::size_t n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Residue coefficient(const Monomial& m) const;

  /// Adds c·m, dropping the term if the coefficient vanishes.
  void add_term(const Monomial& m, std::int64_t c);

  std::uint64_t total_degree() const;  // 0 for the zero polynomial
  bool is_homogeneous() const;         // the zero polynomial counts as homogeneous
  bool is_monomial() const { return terms_.size() == 1; }

  PolynomialFp operator+(const PolynomialFp& o) const;
  PolynomialFp operator-(const PolynomialFp& o) const;
  PolynomialFp operator*(const PolynomialFp& o) const;
  PolynomialFp operator*(const Monomial& m) const;
  PolynomialFp scaled(std::int64_t c) const;
  PolynomialFp pow(std::uint64_t k) const;
  /// r^q for q a power of p: exponents scale by q, prime-field coefficients stay.
  PolynomialFp frobenius(std::uint64_t q) const;

  friend bool operator==(const PolynomialFp&, const PolynomialFp&) = default;

  /// Canonical text: terms in lex order, e.g. "x0^3 + 2*x1*x2".
  std::string to_string() const;

 private:
  void require_compatible(const PolynomialFp& o) const;

  Residue p_ = 2;
  std::size_t n_vars_ = 0;
  TermMap terms_;
};

/// Parses "x0^3 + x1^3 - 2*x2*x0". Letters x, y, z, w alone stand for x0..x3.
/// n_vars = 0 means infer from the largest index used. Coefficients reduce mod p.
PolynomialFp parse_polynomial(const std::string& text, Residue p, std::size_t n_vars = 0);
/// Largest variable index used in the text plus one.
std::size_t infer_variable_count(const std::string& text);

/// Throws InvalidParameters unless q = p^e for some e >= 0.
void require_power_of(std::uint64_t q, std::uint64_t p);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Generators are reduced to the minimal antichain.
  MonomialIdeal(std::size_t n_vars, std::vector<Monomial> generators);
  static MonomialIdeal zero(std::size_t n_vars) { return MonomialIdeal(n_vars, {}); }
  static MonomialIdeal unit(std::size_t n_vars) { return MonomialIdeal(n_vars, {Monomial(n_vars)}); }
  /// The homogeneous maximal ideal (x0, ..., x_{n-1}).
  static MonomialIdeal maximal(std::size_t n_vars);
  static MonomialIdeal generated_by_variables(std::size_t n_vars,
                                              const std::vector<std::size_t>& vars);

  std::size_t n_vars() const { return n_vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_square_free() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  MonomialIdeal frobenius_power(std::uint64_t q, std::uint64_t p) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b);

  std::string to_string() const;

 private:
  std::size_t n_vars_ = 0;
  std::vector<Monomial> gens_;  // sorted, antichain under divisibility
};

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : J) = {f : f·J ⊆ I}.
MonomialIdeal monomial_colon(const MonomialIdeal& i, const MonomialIdeal& j);

/// Minimal primes of a square-free monomial ideal, each generated by variables.
/// The zero ideal has the single minimal prime (0); the unit ideal has none.
std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& squarefree);

/// Generators of a (usually homogeneous) ideal in F_p[x0..x_{n-1}].
class GradedIdealBasis {
 public:
  GradedIdealBasis() = default;
  GradedIdealBasis(Residue p, std::size_t n_vars, std::vector<PolynomialFp> generators,
                   std::uint64_t degree_cap);

  Residue prime() const { return p_; }
  std::size_t n_vars() const { return n_vars_; }
  const std::vector<PolynomialFp>& generators() const { return gens_; }
  std::uint64_t degree_cap() const { return degree_cap_; }
  bool is_homogeneous() const;

  /// Generators raised to the q-th power.
  GradedIdealBasis frobenius_power(std::uint64_t q) const;

 private:
  Residue p_ = 2;
  std::size_t n_vars_ = 0;
  std::vector<PolynomialFp> gens_;
  std::uint64_t degree_cap_ = 0;
};

/// Exact membership r ∈ I for homogeneous r and homogeneous generators, decided
/// in the graded piece of degree deg(r). Throws UnsupportedInput for
/// non-homogeneous input and DegreeOverflow when deg(r) > degree_cap.
bool ideal_membership_bounded(const PolynomialFp& r, const GradedIdealBasis& ideal,
                              std::uint64_t degree_cap);

/// The F_p-linear splitting of Frobenius on a polynomial ring:
/// Σ c_a x^a ↦ Σ_{p | a} c_a x^{a/p}.
PolynomialFp standard_monomial_splitting(const PolynomialFp& r);
/// Splitting applied to a single monomial; nullopt when it maps to zero.
std::optional<Monomial> monomial_split(const Monomial& m, std::uint32_t p);

/// All monomials of total degree d in n variables, in descending lex order.
std::vector<Monomial> monomials_of_degree(std::size_t n_vars, std::uint64_t d);

}  // namespace froblab

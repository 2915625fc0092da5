#pragma once

// Graded hypersurfaces R = F_p[x_0..x_{n-1}]/(f) with a homogeneous system of
// linear parameters l_1..l_d (d = n - 1). The top local cohomology H^d_m(R) is
// modelled as the direct limit of R/(l^t) along multiplication by l_1⋯l_d;
// ⟨r; l^t⟩ denotes the image of r. Every membership question is decided in a
// single graded piece.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "froblab/polyfp.hpp"

namespace froblab {

class GradedHypersurface {
 public:
  /// Throws UnsupportedInput unless f is homogeneous and nonzero and every
  /// parameter is a linear form; InvalidParameters unless there are n - 1
  /// parameters and R/(params) has finite length.
  GradedHypersurface(PolynomialFp f, std::vector<PolynomialFp> params);

  /// Parameters x_1..x_{n-1}; requires f to contain x_0^{deg f}.
  static GradedHypersurface with_default_params(PolynomialFp f);

  Residue prime() const { return f_.prime(); }
  std::size_t n_vars() const { return f_.n_vars(); }
  const PolynomialFp& f() const { return f_; }
  const std::vector<PolynomialFp>& params() const { return params_; }
  std::size_t dim() const { return params_.size(); }

  /// (l_1^t, ..., l_d^t, f).
  GradedIdealBasis level_ideal(std::uint64_t t) const;
  /// Degree of the socle of R/(l^t): d(t - 1) + deg f - 1.
  std::uint64_t socle_degree(std::uint64_t t) const;
  /// l_1⋯l_d.
  PolynomialFp param_product() const;

 private:
  PolynomialFp f_;
  std::vector<PolynomialFp> params_;
};

/// True iff f^{p-1} has a monomial with every exponent below p.
bool fedder_fpure_principal(const GradedHypersurface& h);

/// Basis of the socle of R/(l^t), as polynomials in normal form.
std::vector<PolynomialFp> socle_basis(const GradedHypersurface& h, std::uint64_t t);

/// True iff the p-th powers of a socle basis at level t stay linearly
/// independent modulo (l^{pt}) + (f).
bool f_injective_top(const GradedHypersurface& h, std::uint64_t t);

struct LocalCohomClass {
  PolynomialFp r;
  std::uint64_t t = 1;
};

/// Representative reduced modulo (l^t) + (f) in its degree.
LocalCohomClass normalize(const GradedHypersurface& h, const LocalCohomClass& u);
bool class_is_zero(const GradedHypersurface& h, const LocalCohomClass& u);
/// Compares after moving both classes to a common level.
bool classes_equal(const GradedHypersurface& h, const LocalCohomClass& u, const LocalCohomClass& v);
/// ⟨r; l^t⟩ = ⟨(l_1⋯l_d)^k r; l^{t+k}⟩.
LocalCohomClass raise_level(const GradedHypersurface& h, const LocalCohomClass& u, std::uint64_t k);
/// ⟨r; l^t⟩ ↦ ⟨r^p; l^{pt}⟩.
LocalCohomClass frobenius(const GradedHypersurface& h, const LocalCohomClass& u);

struct TightClosureVerdict {
  bool consistent = true;
  /// Last exponent checked when consistent, first failing exponent otherwise.
  std::uint32_t e = 0;

  std::string to_string() const;
};

/// Default degree cap 3·p²·t·deg f.
std::uint64_t default_degree_cap(const GradedHypersurface& h, std::uint64_t t);

/// Checks c·r^q ∈ (l^{qt}) + (f) for q = p, ..., p^{e_max}. One-sided: a
/// consistent verdict does not prove that u lies in the tight closure of 0.
/// Throws InvalidParameters if c vanishes modulo f and DegreeOverflow beyond
/// the degree cap (0 selects the default).
TightClosureVerdict tight_closure_zero_bounded(const GradedHypersurface& h,
                                               const LocalCohomClass& u, const PolynomialFp& c,
                                               std::uint32_t e_max, std::uint64_t degree_cap = 0);

struct SimplicityProbe {
  std::optional<LocalCohomClass> witness;
  /// "frobenius-kills", "bounded-tight-closure" or empty.
  std::string reason;
  /// Multiplier used for the bounded tight-closure route.
  std::optional<PolynomialFp> multiplier;
};

/// Looks among socle classes at level t for a proper nonzero F-stable span:
/// one that F kills, or one passing the bounded tight-closure check with some
/// variable as multiplier.
SimplicityProbe rf_simplicity_probe(const GradedHypersurface& h, std::uint64_t t,
                                    std::uint32_t e_max, std::uint64_t degree_cap = 0);

}  // namespace froblab

#include "froblab/hypersurface.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "froblab/errors.hpp"
#include "froblab/macaulay.hpp"

namespace froblab {

GradedHypersurface::GradedHypersurface(PolynomialFp f, std::vector<PolynomialFp> params)
    : f_(std::move(f)), params_(std::move(params)) {
  if (f_.is_zero()) throw UnsupportedInput("f must be nonzero");
  if (!f_.is_homogeneous()) throw UnsupportedInput("f must be homogeneous");
  if (f_.total_degree() == 0) throw UnsupportedInput("f must be a non-unit");
  if (params_.size() + 1 != f_.n_vars()) {
    throw InvalidParameters("expected " + std::to_string(f_.n_vars() - 1) + " parameters, got " +
                            std::to_string(params_.size()));
  }
  for (const auto& l : params_) {
    if (l.prime() != f_.prime() || l.n_vars() != f_.n_vars()) {
      throw DimensionMismatch("parameter lives in a different ring");
    }
    if (l.is_zero() || !l.is_homogeneous() || l.total_degree() != 1) {
      throw UnsupportedInput("parameters must be nonzero linear forms");
    }
  }
  // R/(l) is finite iff it vanishes in degree deg f, the degree just above
  // the socle of the complete intersection (l, f).
  GradedPiece top(level_ideal(1), f_.total_degree());
  if (top.quotient_dim() != 0) {
    throw InvalidParameters("parameters do not form a system of parameters for R");
  }
}

GradedHypersurface GradedHypersurface::with_default_params(PolynomialFp f) {
  const std::size_t n = f.n_vars();
  if (n == 0) throw UnsupportedInput("f must involve at least one variable");
  if (f.is_zero()) throw UnsupportedInput("f must be nonzero");
  if (f.coefficient(Monomial::variable(n, 0, static_cast<std::uint32_t>(f.total_degree()))) == 0) {
    throw InvalidParameters("f has no x0^deg term; supply parameters explicitly");
  }
  std::vector<PolynomialFp> params;
  for (std::size_t j = 1; j < n; ++j) params.push_back(PolynomialFp::variable(f.prime(), n, j));
  return GradedHypersurface(std::move(f), std::move(params));
}

GradedIdealBasis GradedHypersurface::level_ideal(std::uint64_t t) const {
  std::vector<PolynomialFp> gens;
  for (const auto& l : params_) gens.push_back(l.pow(t));
  gens.push_back(f_);
  return GradedIdealBasis(prime(), n_vars(), std::move(gens), 0);
}

std::uint64_t GradedHypersurface::socle_degree(std::uint64_t t) const {
  return dim() * (t - 1) + f_.total_degree() - 1;
}

PolynomialFp GradedHypersurface::param_product() const {
  auto out = PolynomialFp::constant(prime(), n_vars(), 1);
  for (const auto& l : params_) out = out * l;
  return out;
}

bool fedder_fpure_principal(const GradedHypersurface& h) {
  const Residue p = h.prime();
  const auto power = h.f().pow(p - 1);
  for (const auto& [m, c] : power.terms()) {
    bool small = true;
    for (std::size_t j = 0; j < m.n_vars() && small; ++j) small = m[j] < p;
    if (small) return true;
  }
  return false;
}

namespace {

void require_level(std::uint64_t t) {
  if (t == 0) throw InvalidParameters("level t must be positive");
}

}  // namespace

std::vector<PolynomialFp> socle_basis(const GradedHypersurface& h, std::uint64_t t) {
  require_level(t);
  const auto ideal = h.level_ideal(t);
  const Residue p = h.prime();
  const std::size_t n = h.n_vars();
  std::vector<PolynomialFp> out;
  auto above = std::make_unique<GradedPiece>(ideal, 0);
  for (std::uint64_t k = 0; k <= h.socle_degree(t); ++k) {
    auto here = std::move(above);
    above = std::make_unique<GradedPiece>(ideal, k + 1);
    const auto& basis = here->standard_monomials();
    if (basis.empty()) continue;
    const std::size_t next = above->quotient_dim();
    // Stacked multiplication maps A_k -> A_{k+1}, one block per variable.
    GfpMatrix mult(p, n * next, basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto coords = above->quotient_coordinates(
            PolynomialFp::monomial(p, basis[col] * Monomial::variable(n, j)));
        for (std::size_t r = 0; r < next; ++r) mult.set(j * next + r, col, coords[r]);
      }
    }
    const auto ker = kernel_basis(mult);
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      const auto row = ker.basis().row(r);
      out.push_back(here->from_coordinates(std::vector<Residue>(row.begin(), row.end())));
    }
  }
  return out;
}

bool f_injective_top(const GradedHypersurface& h, std::uint64_t t) {
  const auto socle = socle_basis(h, t);
  const auto ideal = h.level_ideal(h.prime() * t);
  std::map<std::uint64_t, std::vector<std::vector<Residue>>> images;
  std::map<std::uint64_t, std::unique_ptr<GradedPiece>> pieces;
  for (const auto& s : socle) {
    const auto image = s.frobenius(h.prime());
    const auto deg = image.total_degree();
    auto& piece = pieces[deg];
    if (!piece) piece = std::make_unique<GradedPiece>(ideal, deg);
    images[deg].push_back(piece->quotient_coordinates(image));
  }
  for (const auto& [deg, vecs] : images) {
    const auto dim = pieces[deg]->quotient_dim();
    if (dim == 0) return false;
    if (Subspace::span(h.prime(), dim, vecs).dim() != vecs.size()) return false;
  }
  return true;
}

LocalCohomClass normalize(const GradedHypersurface& h, const LocalCohomClass& u) {
  require_level(u.t);
  if (u.r.is_zero()) return u;
  GradedPiece piece(h.level_ideal(u.t), u.r.total_degree());
  return {piece.normal_form(u.r), u.t};
}

bool class_is_zero(const GradedHypersurface& h, const LocalCohomClass& u) {
  return normalize(h, u).r.is_zero();
}

LocalCohomClass raise_level(const GradedHypersurface& h, const LocalCohomClass& u, std::uint64_t k) {
  return {u.r * h.param_product().pow(k), u.t + k};
}

bool classes_equal(const GradedHypersurface& h, const LocalCohomClass& u, const LocalCohomClass& v) {
  require_level(u.t);
  require_level(v.t);
  const std::uint64_t s = std::max(u.t, v.t);
  const auto a = raise_level(h, u, s - u.t);
  const auto b = raise_level(h, v, s - v.t);
  // Different internal degrees can only agree when both classes vanish.
  if (!a.r.is_zero() && !b.r.is_zero() && a.r.total_degree() != b.r.total_degree()) {
    return class_is_zero(h, a) && class_is_zero(h, b);
  }
  return class_is_zero(h, {a.r - b.r, s});
}

LocalCohomClass frobenius(const GradedHypersurface& h, const LocalCohomClass& u) {
  return {u.r.frobenius(h.prime()), u.t * h.prime()};
}

std::string TightClosureVerdict::to_string() const {
  return consistent ? "consistent-up-to-" + std::to_string(e) : "fails-at-" + std::to_string(e);
}

std::uint64_t default_degree_cap(const GradedHypersurface& h, std::uint64_t t) {
  const std::uint64_t p = h.prime();
  return 3 * p * p * t * h.f().total_degree();
}

TightClosureVerdict tight_closure_zero_bounded(const GradedHypersurface& h,
                                               const LocalCohomClass& u, const PolynomialFp& c,
                                               std::uint32_t e_max, std::uint64_t degree_cap) {
  require_level(u.t);
  if (!c.is_homogeneous() || !u.r.is_homogeneous()) {
    throw UnsupportedInput("class representative and multiplier must be homogeneous");
  }
  GradedIdealBasis principal(h.prime(), h.n_vars(), {h.f()}, 0);
  if (c.is_zero() || GradedPiece(principal, c.total_degree()).contains(c)) {
    throw InvalidParameters("multiplier vanishes modulo f");
  }
  if (degree_cap == 0) degree_cap = default_degree_cap(h, u.t);
  TightClosureVerdict verdict;
  if (u.r.is_zero()) {
    verdict.e = e_max;
    return verdict;
  }
  std::uint64_t q = 1;
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    q *= h.prime();
    const auto target = c * u.r.frobenius(q);
    if (!ideal_membership_bounded(target, h.level_ideal(q * u.t), degree_cap)) {
      return {false, e};
    }
  }
  verdict.e = e_max;
  return verdict;
}

SimplicityProbe rf_simplicity_probe(const GradedHypersurface& h, std::uint64_t t,
                                    std::uint32_t e_max, std::uint64_t degree_cap) {
  const auto socle = socle_basis(h, t);
  SimplicityProbe probe;
  for (const auto& s : socle) {
    const LocalCohomClass u{s, t};
    if (class_is_zero(h, frobenius(h, u))) {
      probe.witness = u;
      probe.reason = "frobenius-kills";
      return probe;
    }
  }
  GradedIdealBasis principal(h.prime(), h.n_vars(), {h.f()}, 0);
  for (std::size_t j = 0; j < h.n_vars(); ++j) {
    const auto c = PolynomialFp::variable(h.prime(), h.n_vars(), j);
    if (GradedPiece(principal, 1).contains(c)) continue;
    for (const auto& s : socle) {
      const LocalCohomClass u{s, t};
      if (tight_closure_zero_bounded(h, u, c, e_max, degree_cap).consistent) {
        probe.witness = u;
        probe.reason = "bounded-tight-closure";
        probe.multiplier = c;
        return probe;
      }
    }
  }
  return probe;
}

}  // namespace froblab

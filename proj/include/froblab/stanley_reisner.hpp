#pragma once

// The face ring K[Δ] = S / I_Δ over a prime field.

#include <vector>

#include "froblab/polyfp.hpp"
#include "froblab/simplicial.hpp"

namespace froblab {

/// Square-free monomials of the minimal non-faces.
MonomialIdeal nonface_ideal(const SimplicialComplex& c);

/// One prime per facet σ, generated by the variables outside σ. Same order as
/// c.facets().
std::vector<MonomialIdeal> facet_primes(const SimplicialComplex& c);

class FaceRing {
 public:
  FaceRing(SimplicialComplex complex, Residue p);

  const SimplicialComplex& complex() const { return complex_; }
  Residue prime() const { return p_; }
  std::size_t n_vars() const { return complex_.n_vertices(); }
  const MonomialIdeal& ideal() const { return ideal_; }
  int krull_dim() const { return complex_.dimension() + 1; }
  std::vector<MonomialIdeal> minimal_primes() const { return facet_primes(complex_); }

 private:
  SimplicialComplex complex_;
  Residue p_;
  MonomialIdeal ideal_;
};

/// (I^{[p]} : I); the Fedder test asks whether it escapes m^{[p]}.
MonomialIdeal fedder_colon(const FaceRing& ring);

/// True iff (I_Δ^{[p]} : I_Δ) is not contained in (x_0^p, ..., x_{n-1}^p).
bool fedder_fpure_monomial(const FaceRing& ring);

/// True iff T(j · x^a) ∈ J + I_Δ for every generator j of J and every a with
/// all a_k < p, T being the standard monomial splitting. Equivalently T maps J
/// into J + I_Δ.
bool splitting_containment_check(const FaceRing& ring, const MonomialIdeal& j);

}  // namespace froblab

#include "froblab/stanley_reisner.hpp"

#include "froblab/errors.hpp"

namespace froblab {

MonomialIdeal nonface_ideal(const SimplicialComplex& c) {
  const std::size_t n = c.n_vertices();
  if (n > 24) throw CapacityExceeded("non-face enumeration is limited to 24 vertices");
  std::vector<Monomial> gens;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const Face s = Face::from_mask(mask);
    if (c.contains(s)) continue;
    bool minimal = true;
    for (int v : s.vertices()) {
      if (!c.contains(s.without(v))) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<std::uint32_t> exps(n, 0);
    for (int v : s.vertices()) exps[static_cast<std::size_t>(v)] = 1;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<MonomialIdeal> facet_primes(const SimplicialComplex& c) {
  std::vector<MonomialIdeal> out;
  for (auto f : c.facets()) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < c.n_vertices(); ++v) {
      if (!f.contains(static_cast<int>(v))) vars.push_back(v);
    }
    out.push_back(MonomialIdeal::generated_by_variables(c.n_vertices(), vars));
  }
  return out;
}

FaceRing::FaceRing(SimplicialComplex complex, Residue p)
    : complex_(std::move(complex)), p_(p), ideal_(nonface_ideal(complex_)) {
  require_prime(p);
  if (complex_.is_void()) throw InvalidParameters("the void complex has no face ring");
}

MonomialIdeal fedder_colon(const FaceRing& ring) {
  const auto& i = ring.ideal();
  return monomial_colon(i.frobenius_power(ring.prime(), ring.prime()), i);
}

bool fedder_fpure_monomial(const FaceRing& ring) {
  const auto colon = fedder_colon(ring);
  const auto bracket = MonomialIdeal::maximal(ring.n_vars()).frobenius_power(ring.prime(), ring.prime());
  for (const auto& g : colon.generators()) {
    if (!bracket.contains(g)) return true;
  }
  return false;
}

bool splitting_containment_check(const FaceRing& ring, const MonomialIdeal& j) {
  const std::size_t n = ring.n_vars();
  if (j.n_vars() != n) throw DimensionMismatch("ideal lives in a different ring");
  const auto p = ring.prime();
  const auto target = ideal_sum(j, ring.ideal());
  // Exponent vectors a with 0 <= a_k < p.
  std::vector<std::uint32_t> a(n, 0);
  while (true) {
    const Monomial shift(a);
    for (const auto& g : j.generators()) {
      if (auto image = monomial_split(g * shift, p); image && !target.contains(*image)) {
        return false;
      }
    }
    std::size_t k = 0;
    while (k < n && ++a[k] == p) a[k++] = 0;
    if (k == n) break;
  }
  return true;
}

}  // namespace froblab

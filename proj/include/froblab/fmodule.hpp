#pragma once

// Finite windows of the Z^n-graded modules H^i_m(K[Δ]) with their x_j- and
// Frobenius actions. A basis element is γ ⊗ x^{-w}: a class γ in the
// multiplicity space of a summand supported on ν, and a monomial with negative
// exponents exactly on ν. Degree θ = -w.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "froblab/gfp_linalg.hpp"
#include "froblab/hochster.hpp"
#include "froblab/polyfp.hpp"
#include "froblab/simplicial.hpp"

namespace froblab {

/// One summand: `multiplicity` copies of the simple module supported on ν.
/// F acts on the multiplicity space through `frobenius` (identity for the
/// summands of a face ring).
struct FComponent {
  Face support;
  std::size_t multiplicity = 0;
  GfpMatrix frobenius;
};

struct BasisElement {
  std::size_t component = 0;
  std::size_t class_index = 0;
  std::vector<std::uint32_t> w;  // magnitudes of the negative exponents

  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

using Element = std::map<BasisElement, Residue>;

class FModuleTruncation {
 public:
  FModuleTruncation(Residue p, std::size_t n_vars, int index, std::uint32_t depth,
                    std::vector<FComponent> components);

  Residue prime() const { return p_; }
  std::size_t n_vars() const { return n_vars_; }
  int index() const { return index_; }
  /// T: exponents of basis elements range over [-T, -1].
  std::uint32_t depth() const { return depth_; }
  /// p·T: the window that F maps the basis into.
  std::uint32_t extended_depth() const { return p_ * depth_; }
  const std::vector<FComponent>& components() const { return components_; }

  /// Basis of the depth-T window, grouped by component then class.
  std::vector<BasisElement> basis() const;
  std::size_t basis_size() const;

  /// Basis of the graded piece in degree θ (any depth), in canonical order.
  std::vector<BasisElement> piece_basis(const MultiDegree& theta) const;
  MultiDegree degree_of(const BasisElement& b) const;

 private:
  Residue p_;
  std::size_t n_vars_;
  int index_;
  std::uint32_t depth_;
  std::vector<FComponent> components_;
};

/// The window of H^i_m(K[Δ]) built from the decomposition table. Throws
/// InvalidParameters for i outside [0, dim Δ + 1] or T = 0.
FModuleTruncation build_truncation(const SimplicialComplex& c, Residue p, int i,
                                   std::uint32_t depth);

Element apply_x(const FModuleTruncation& t, std::size_t j, const Element& v);
Element apply_F(const FModuleTruncation& t, const Element& v);
Element scale(const Element& v, Residue c, Residue p);
Element add(const Element& a, const Element& b, Residue p);

/// M ↦ M⟨x^{-1}⟩ with a new last variable: every summand gains the new
/// variable in its support; F and the multiplicity data are unchanged.
FModuleTruncation adjoin_inverse_variable(const FModuleTruncation& t);

/// A single summand with ν = ∅ on which F acts as zero.
FModuleTruncation zero_frobenius_fixture(Residue p, std::size_t n_vars);

/// A graded subspace assignment θ ↦ U_θ over the box [-pT, 0]^n; only
/// nonzero pieces are stored. Coordinates follow piece_basis(θ).
struct Profile {
  std::map<MultiDegree, Subspace> pieces;

  bool is_zero() const { return pieces.empty(); }
  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Smallest profile containing the homogeneous generators and closed under
/// every x_j and under F (θ ↦ pθ while pθ stays in the box).
Profile f_stable_span(const FModuleTruncation& t, const std::vector<Element>& generators,
                      std::uint64_t cap = kDefaultEnumerationCap);

struct EnumerationResult {
  std::uint64_t count = 0;
  /// Filled only when count <= cap.
  std::vector<Profile> profiles;
  /// Profiles whose pieces inside the depth-T window vary with θ for a fixed ν.
  std::uint64_t unstable = 0;
  std::uint64_t nodes_visited = 0;
};

/// All profiles satisfying x_j U_θ ⊆ U_{θ+e_j} and F U_θ ⊆ U_{pθ} within the
/// box. Throws CapacityExceeded once the search visits more than cap nodes.
EnumerationResult enumerate_f_stable_submodules(const FModuleTruncation& t,
                                                std::uint64_t cap = kDefaultEnumerationCap);

struct AntinilpotenceResult {
  bool holds = true;
  /// V ⊆ V' with F not injective on V'/V.
  std::optional<std::pair<Profile, Profile>> witness;
};

AntinilpotenceResult check_antinilpotent(const FModuleTruncation& t,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// x^a annihilates the profile, for every a with each a_j < pT and |a| <= cap.
/// Larger exponents are left out because they only see the edge of the window.
MonomialIdeal annihilator_up_to_cap(const FModuleTruncation& t, const Profile& profile,
                                    std::uint64_t degree_cap = 0);

/// Composition data from the Fitting split of F on each multiplicity space.
struct LyubeznikFactor {
  enum class Kind { Injective, Nilpotent };
  Face support;
  Kind kind = Kind::Injective;
  std::size_t dim = 0;
};

struct LyubeznikProfile {
  std::vector<LyubeznikFactor> factors;
  std::size_t length() const { return factors.size(); }
  bool anti_nilpotent() const;
};

LyubeznikProfile lyubeznik_profile(const FModuleTruncation& t);

std::string to_string(LyubeznikFactor::Kind kind);

}  // namespace froblab

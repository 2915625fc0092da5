#pragma once

// Finite abstract simplicial complexes and their reduced cohomology over F_p.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "froblab/gfp_linalg.hpp"

namespace froblab {

/// Vertex labels are limited to this many so that a face fits in one word.
inline constexpr std::size_t kMaxVertices = 64;

/// A set of vertex labels, stored as a bit mask.
class Face {
 public:
  constexpr Face() = default;
  static constexpr Face from_mask(std::uint64_t mask) {
    Face f;
    f.mask_ = mask;
    return f;
  }
  /// Duplicates are collapsed; labels must be < kMaxVertices.
  static Face from_vertices(const std::vector<int>& vertices);

  std::uint64_t mask() const { return mask_; }
  std::size_t size() const;
  int dimension() const { return static_cast<int>(size()) - 1; }
  bool empty() const { return mask_ == 0; }
  bool contains(int v) const { return (mask_ >> v) & 1u; }
  bool is_subset_of(Face other) const { return (mask_ & ~other.mask_) == 0; }
  bool disjoint_from(Face other) const { return (mask_ & other.mask_) == 0; }

  Face with(int v) const { return from_mask(mask_ | (std::uint64_t{1} << v)); }
  Face without(int v) const { return from_mask(mask_ & ~(std::uint64_t{1} << v)); }
  Face operator|(Face o) const { return from_mask(mask_ | o.mask_); }
  Face operator-(Face o) const { return from_mask(mask_ & ~o.mask_); }

  /// Sorted ascending.
  std::vector<int> vertices() const;
  /// Number of vertices of this face smaller than v.
  std::size_t position_of(int v) const;

  std::string to_string() const;

  /// Orders by size, then lexicographically by sorted vertex list.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b);
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::uint64_t mask_ = 0;
};

class SimplicialComplex {
 public:
  /// The void complex on zero vertices (no faces at all).
  SimplicialComplex() = default;

  /// Validates labels and vertex coverage, reduces the facets to an antichain.
  static SimplicialComplex from_facets(std::size_t n_vertices,
                                       const std::vector<std::vector<int>>& facets);
  /// Like from_facets but vertices need not be covered (links, subcomplexes).
  static SimplicialComplex from_faces_unchecked(std::size_t n_vertices, std::vector<Face> facets);

  /// The complex {∅} whose only face is the empty face.
  static SimplicialComplex empty_complex(std::size_t n_vertices = 0);
  static SimplicialComplex void_complex(std::size_t n_vertices = 0);
  /// The full simplex on n vertices.
  static SimplicialComplex simplex(std::size_t n_vertices);

  std::size_t n_vertices() const { return n_vertices_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }
  /// Maximum facet dimension; -1 for {∅} and -2 for the void complex.
  int dimension() const;

  bool contains(Face f) const;

  /// faces()[d + 1] holds the faces of dimension d, each list sorted.
  std::vector<std::vector<Face>> faces() const;
  std::size_t face_count() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(std::size_t n, std::vector<Face> facets);

  std::size_t n_vertices_ = 0;
  std::vector<Face> facets_;  // antichain, sorted
};

/// Facet-list text: one facet per line, whitespace-separated labels, '#' comments.
SimplicialComplex parse_facet_list(std::istream& in);
SimplicialComplex parse_facet_list(const std::string& text);
std::string format_facet_list(const SimplicialComplex& c);

/// Faces τ disjoint from σ with σ ∪ τ in c. Throws NotAFace.
SimplicialComplex link(const SimplicialComplex& c, Face sigma);

/// Adds a new apex vertex (label n) to every facet.
SimplicialComplex cone(const SimplicialComplex& c);

/// Vertex v is renamed perm[v].
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& perm);

struct CohomologyProfile {
  Residue p = 2;
  std::map<int, std::size_t> dims;    // degree j >= -1 -> dim H̃^j; zeros omitted
  std::map<int, Subspace> cocycles;   // filled on request: kernel of the coboundary out of degree j

  std::size_t dim(int j) const {
    auto it = dims.find(j);
    return it == dims.end() ? 0 : it->second;
  }
  bool vanishes() const { return dims.empty(); }
};

/// Reduced simplicial cohomology with F_p coefficients, from the coboundary
/// matrices of the augmented cochain complex.
CohomologyProfile reduced_cohomology(const SimplicialComplex& c, Residue p,
                                     bool with_cocycles = false);

/// Reduced homology dimensions computed from boundary matrices. Over a field
/// these agree with the cohomology dimensions.
std::map<int, std::size_t> reduced_homology_dims(const SimplicialComplex& c, Residue p);

/// Coboundary δ^j : C^j -> C^{j+1} of the augmented complex, rows indexed by
/// the (j+1)-faces and columns by the j-faces, in faces() order.
GfpMatrix coboundary_matrix(const std::vector<Face>& source, const std::vector<Face>& target,
                            Residue p);

}  // namespace froblab

#include "froblab/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_set>

#include "froblab/errors.hpp"

namespace froblab {

Face Face::from_vertices(const std::vector<int>& vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= kMaxVertices) {
      throw Error("vertex label " + std::to_string(v) + " out of range");
    }
    mask |= std::uint64_t{1} << v;
  }
  return from_mask(mask);
}

std::size_t Face::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::size_t Face::position_of(int v) const {
  const std::uint64_t below = v == 0 ? 0 : (mask_ & ((std::uint64_t{1} << v) - 1));
  return static_cast<std::size_t>(std::popcount(below));
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::strong_ordering operator<=>(const Face& a, const Face& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto va = a.vertices();
  const auto vb = b.vertices();
  return std::lexicographical_compare_three_way(va.begin(), va.end(), vb.begin(), vb.end());
}

namespace {

std::vector<Face> to_antichain(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < faces.size() && maximal; ++j) {
      if (faces[i].is_subset_of(faces[j])) maximal = false;
    }
    if (maximal) out.push_back(faces[i]);
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Face> facets)
    : n_vertices_(n), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::from_facets(std::size_t n_vertices,
                                                 const std::vector<std::vector<int>>& facets) {
  if (n_vertices > kMaxVertices) throw Error("too many vertices (limit 64)");
  std::vector<Face> faces;
  std::uint64_t covered = 0;
  for (const auto& f : facets) {
    for (int v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= n_vertices) {
        throw InvalidParameters("vertex label " + std::to_string(v) + " out of range for " +
                                 std::to_string(n_vertices) + " vertices");
      }
    }
    faces.push_back(Face::from_vertices(f));
    covered |= faces.back().mask();
  }
  for (std::size_t v = 0; v < n_vertices; ++v) {
    if (((covered >> v) & 1u) == 0) {
      throw InvalidParameters("vertex " + std::to_string(v) + " lies in no facet");
    }
  }
  return SimplicialComplex(n_vertices, to_antichain(std::move(faces)));
}

SimplicialComplex SimplicialComplex::from_faces_unchecked(std::size_t n_vertices,
                                                          std::vector<Face> facets) {
  return SimplicialComplex(n_vertices, to_antichain(std::move(facets)));
}

SimplicialComplex SimplicialComplex::empty_complex(std::size_t n_vertices) {
  return SimplicialComplex(n_vertices, {Face{}});
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t n_vertices) {
  return SimplicialComplex(n_vertices, {});
}

SimplicialComplex SimplicialComplex::simplex(std::size_t n_vertices) {
  if (n_vertices > kMaxVertices) throw Error("too many vertices (limit 64)");
  const std::uint64_t all =
      n_vertices == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_vertices) - 1;
  return SimplicialComplex(n_vertices, {Face::from_mask(all)});
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (auto f : facets_) d = std::max(d, f.dimension());
  return d;
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [f](Face g) { return f.is_subset_of(g); });
}

std::vector<std::vector<Face>> SimplicialComplex::faces() const {
  std::unordered_set<std::uint64_t> seen;
  for (auto facet : facets_) {
    // All submasks of the facet mask, including the empty one.
    const std::uint64_t m = facet.mask();
    for (std::uint64_t s = m;; s = (s - 1) & m) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::vector<Face>> out(static_cast<std::size_t>(std::max(dimension() + 2, 0)));
  for (auto mask : seen) {
    auto f = Face::from_mask(mask);
    out[f.size()].push_back(f);
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t n = 0;
  for (const auto& level : faces()) n += level.size();
  return n;
}

SimplicialComplex parse_facet_list(std::istream& in) {
  std::vector<std::vector<int>> facets;
  std::string line;
  int max_label = -1;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<int> facet;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long v = -1;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0 || v >= static_cast<long>(kMaxVertices)) {
        throw ParseError("line " + std::to_string(lineno) + ": bad vertex label '" + tok + "'");
      }
      facet.push_back(static_cast<int>(v));
      max_label = std::max(max_label, static_cast<int>(v));
    }
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw ParseError("facet list is empty");
  try {
    return SimplicialComplex::from_facets(static_cast<std::size_t>(max_label + 1), facets);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

SimplicialComplex parse_facet_list(const std::string& text) {
  std::istringstream in(text);
  return parse_facet_list(in);
}

std::string format_facet_list(const SimplicialComplex& c) {
  std::string out;
  for (auto f : c.facets()) {
    bool first = true;
    for (int v : f.vertices()) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

SimplicialComplex link(const SimplicialComplex& c, Face sigma) {
  if (!c.contains(sigma)) throw NotAFace(sigma.to_string() + " is not a face");
  std::vector<Face> facets;
  for (auto f : c.facets()) {
    if (sigma.is_subset_of(f)) facets.push_back(f - sigma);
  }
  return SimplicialComplex::from_faces_unchecked(c.n_vertices(), std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& c) {
  const int apex = static_cast<int>(c.n_vertices());
  if (c.n_vertices() + 1 > kMaxVertices) throw Error("too many vertices (limit 64)");
  std::vector<Face> facets;
  for (auto f : c.facets()) facets.push_back(f.with(apex));
  return SimplicialComplex::from_faces_unchecked(c.n_vertices() + 1, std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& perm) {
  if (perm.size() != c.n_vertices()) throw DimensionMismatch("permutation size");
  std::vector<Face> facets;
  for (auto f : c.facets()) {
    std::vector<int> vs;
    for (int v : f.vertices()) vs.push_back(perm[static_cast<std::size_t>(v)]);
    facets.push_back(Face::from_vertices(vs));
  }
  return SimplicialComplex::from_faces_unchecked(c.n_vertices(), std::move(facets));
}

namespace {

std::size_t index_of(const std::vector<Face>& sorted, Face f) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

GfpMatrix coboundary_matrix(const std::vector<Face>& source, const std::vector<Face>& target,
                            Residue p) {
  GfpMatrix d(p, target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const Face s = source[col];
    for (std::size_t row = 0; row < target.size(); ++row) {
      const Face t = target[row];
      if (!s.is_subset_of(t)) continue;
      const int v = (t - s).vertices().front();
      const bool odd = t.position_of(v) % 2 == 1;
      d.set(row, col, odd ? -1 : 1);
    }
  }
  return d;
}

CohomologyProfile reduced_cohomology(const SimplicialComplex& c, Residue p, bool with_cocycles) {
  CohomologyProfile prof;
  prof.p = p;
  const auto levels = c.faces();
  if (levels.empty()) return prof;  // void complex
  // levels[k] holds (k-1)-dimensional faces, i.e. cochain degree j = k - 1.
  const std::size_t top = levels.size();
  std::vector<std::size_t> ranks(top, 0);  // ranks[k] = rank of δ out of levels[k]
  std::vector<GfpMatrix> deltas(top);
  for (std::size_t k = 0; k + 1 < top; ++k) {
    deltas[k] = coboundary_matrix(levels[k], levels[k + 1], p);
    ranks[k] = rank(deltas[k]);
  }
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t rank_in = k == 0 ? 0 : ranks[k - 1];
    const std::size_t d = levels[k].size() - ranks[k] - rank_in;
    const int j = static_cast<int>(k) - 1;
    if (d != 0) prof.dims[j] = d;
    if (with_cocycles) {
      prof.cocycles[j] = k + 1 < top ? kernel_basis(deltas[k])
                                     : Subspace::full(p, levels[k].size());
    }
  }
  return prof;
}

std::map<int, std::size_t> reduced_homology_dims(const SimplicialComplex& c, Residue p) {
  std::map<int, std::size_t> out;
  const auto levels = c.faces();
  if (levels.empty()) return out;
  const std::size_t top = levels.size();
  // ranks[k] = rank of ∂ : C_k -> C_{k-1}, built row-by-face independently of δ.
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    GfpMatrix boundary(p, levels[k - 1].size(), levels[k].size());
    for (std::size_t col = 0; col < levels[k].size(); ++col) {
      const auto vs = levels[k][col].vertices();
      for (std::size_t pos = 0; pos < vs.size(); ++pos) {
        const auto row = index_of(levels[k - 1], levels[k][col].without(vs[pos]));
        boundary.set(row, col, pos % 2 == 0 ? 1 : -1);
      }
    }
    ranks[k] = rank(boundary);
  }
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t d = levels[k].size() - ranks[k] - ranks[k + 1];
    if (d != 0) out[static_cast<int>(k) - 1] = d;
  }
  return out;
}

}  // namespace froblab

#include "corpus.hpp"

#include <fstream>

#include "froblab/errors.hpp"

namespace froblab::corpus {

SimplicialComplex load(const std::string& name) {
  const std::string path = std::string(FROBLAB_CORPUS_DIR) + "/" + name + ".facets";
  std::ifstream in(path);
  if (!in) throw ParseError("missing corpus file " + path);
  return parse_facet_list(in);
}

std::vector<NamedComplex> small_complexes(std::size_t max_vertices) {
  std::vector<NamedComplex> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const std::uint64_t faces = (std::uint64_t{1} << n) - 1;  // nonempty subsets, mask k+1
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << faces); ++pick) {
      std::vector<Face> chosen;
      std::uint64_t covered = 0;
      for (std::uint64_t k = 0; k < faces; ++k) {
        if ((pick >> k) & 1u) {
          chosen.push_back(Face::from_mask(k + 1));
          covered |= k + 1;
        }
      }
      if (covered != full) continue;
      bool antichain = true;
      for (std::size_t a = 0; a < chosen.size() && antichain; ++a) {
        for (std::size_t b = 0; b < chosen.size() && antichain; ++b) {
          antichain = a == b || !chosen[a].is_subset_of(chosen[b]);
        }
      }
      if (!antichain) continue;
      std::vector<std::vector<int>> facets;
      std::string name = "n" + std::to_string(n) + ":";
      for (auto f : chosen) {
        facets.push_back(f.vertices());
        name += f.to_string();
      }
      out.push_back({name, SimplicialComplex::from_facets(n, facets)});
    }
  }
  return out;
}

std::vector<NamedComplex> bundled() {
  auto out = small_complexes(4);
  out.push_back({"empty", SimplicialComplex::empty_complex(0)});
  for (const auto& name : kNamed) out.push_back({name, load(name)});
  return out;
}

}  // namespace froblab::corpus

#include "froblab/hochster.hpp"

#include <algorithm>
#include <cstdlib>

#include "froblab/errors.hpp"
#include "froblab/parallel.hpp"

namespace froblab {

Face negative_support(const MultiDegree& theta) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    if (theta[j] < 0) mask |= std::uint64_t{1} << j;
  }
  return Face::from_mask(mask);
}

Face positive_support(const MultiDegree& theta) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    if (theta[j] > 0) mask |= std::uint64_t{1} << j;
  }
  return Face::from_mask(mask);
}

std::size_t HochsterTable::multiplicity(int i, Face nu) const {
  auto it = entries_.find({i, nu});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::pair<Face, std::size_t>> HochsterTable::at(int i) const {
  std::vector<std::pair<Face, std::size_t>> out;
  for (const auto& [key, mult] : entries_) {
    if (key.first == i) out.emplace_back(key.second, mult);
  }
  return out;
}

std::set<int> HochsterTable::indices() const {
  std::set<int> out;
  for (const auto& [key, mult] : entries_) out.insert(key.first);
  return out;
}

HochsterTable decomposition(const SimplicialComplex& c, Residue p) {
  require_prime(p);
  std::vector<Face> all;
  for (const auto& level : c.faces()) all.insert(all.end(), level.begin(), level.end());
  std::vector<CohomologyProfile> profiles(all.size());
  parallel_for(all.size(), [&](std::size_t k) { profiles[k] = reduced_cohomology(link(c, all[k]), p); });

  std::map<HochsterTable::Key, std::size_t> entries;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const int size = static_cast<int>(all[k].size());
    for (const auto& [j, d] : profiles[k].dims) {
      entries[{j + 1 + size, all[k]}] = d;
    }
  }
  return HochsterTable(p, std::move(entries));
}

std::size_t graded_dim(const HochsterTable& table, const SimplicialComplex& c, int i,
                       const MultiDegree& theta) {
  if (theta.size() != c.n_vertices()) throw DimensionMismatch("degree has wrong length");
  if (!positive_support(theta).empty()) return 0;
  const Face nu = negative_support(theta);
  if (!c.contains(nu)) return 0;
  return table.multiplicity(i, nu);
}

std::size_t graded_dim(const SimplicialComplex& c, Residue p, int i, const MultiDegree& theta) {
  return graded_dim(decomposition(c, p), c, i, theta);
}

std::map<int, std::size_t> cech_graded_oracle(const SimplicialComplex& c, Residue p,
                                              const MultiDegree& theta, int bound) {
  if (theta.size() != c.n_vertices()) throw DimensionMismatch("degree has wrong length");
  for (int t : theta) {
    if (std::abs(t) > bound) throw CapacityExceeded("degree entry exceeds oracle bound");
  }
  const Face nu = negative_support(theta);
  const Face pi = positive_support(theta);
  // Terms of the strand: one copy of K for each face σ ⊇ ν with σ ∪ π a face,
  // placed in cohomological degree |σ|.
  std::vector<std::vector<Face>> terms(c.n_vertices() + 1);
  for (const auto& level : c.faces()) {
    for (auto sigma : level) {
      if (nu.is_subset_of(sigma) && c.contains(sigma | pi)) terms[sigma.size()].push_back(sigma);
    }
  }
  std::vector<std::size_t> ranks(terms.size() + 1, 0);  // ranks[i] = rank of d : C^i -> C^{i+1}
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (terms[i].empty() || terms[i + 1].empty()) continue;
    GfpMatrix d(p, terms[i + 1].size(), terms[i].size());
    for (std::size_t col = 0; col < terms[i].size(); ++col) {
      const Face s = terms[i][col];
      for (std::size_t row = 0; row < terms[i + 1].size(); ++row) {
        const Face t = terms[i + 1][row];
        if (!s.is_subset_of(t)) continue;
        const int v = (t - s).vertices().front();
        // Localization map K[Δ]_{x(σ)} -> K[Δ]_{x(σ ∪ v)} with the Čech sign.
        d.set(row, col, s.position_of(v) % 2 == 0 ? 1 : -1);
      }
    }
    ranks[i] = rank(d);
  }
  std::map<int, std::size_t> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::size_t rank_in = i == 0 ? 0 : ranks[i - 1];
    const std::size_t dim = terms[i].size() - ranks[i] - rank_in;
    if (dim != 0) out[static_cast<int>(i)] = dim;
  }
  return out;
}

bool reisner_condition(const SimplicialComplex& c, Residue p) {
  for (const auto& level : c.faces()) {
    for (auto sigma : level) {
      const auto lk = link(c, sigma);
      const auto prof = reduced_cohomology(lk, p);
      for (const auto& [j, d] : prof.dims) {
        if (j != lk.dimension()) return false;
      }
    }
  }
  return true;
}

DepthInfo depth_and_cm(const HochsterTable& table, const SimplicialComplex& c) {
  DepthInfo info;
  info.dim = c.dimension() + 1;
  const auto idx = table.indices();
  info.depth = idx.empty() ? info.dim : *idx.begin();
  info.is_cm = info.depth == info.dim;
  info.reisner_cm = reisner_condition(c, table.prime());
  return info;
}

DepthInfo depth_and_cm(const SimplicialComplex& c, Residue p) {
  return depth_and_cm(decomposition(c, p), c);
}

std::uint64_t fh_count(const HochsterTable& table, int i) {
  std::uint64_t count = 1;
  for (const auto& [nu, mult] : table.at(i)) {
    const auto factor = num_subspaces(table.prime(), mult);
    if (count > UINT64_MAX / factor) throw Error("submodule count overflows 64 bits");
    count *= factor;
  }
  return count;
}

std::uint64_t fh_count(const SimplicialComplex& c, std::uint64_t field_order, int i) {
  if (!is_prime(field_order)) {
    throw UnsupportedField("submodule counts are only available over a prime field, not F_" +
                           std::to_string(field_order));
  }
  return fh_count(decomposition(c, static_cast<Residue>(field_order)), i);
}

std::vector<MultiDegree> degree_box(std::size_t n, int lo, int hi) {
  std::vector<MultiDegree> out;
  if (lo > hi) return out;
  MultiDegree theta(n, lo);
  while (true) {
    out.push_back(theta);
    std::size_t k = n;
    while (k > 0 && theta[k - 1] == hi) theta[--k] = lo;
    if (k == 0) break;
    ++theta[k - 1];
  }
  return out;
}

OracleComparison compare_with_oracle(const SimplicialComplex& c, Residue p, int lo, int hi) {
  const auto table = decomposition(c, p);
  const auto box = degree_box(c.n_vertices(), lo, hi);
  const int top = static_cast<int>(c.n_vertices());
  std::vector<std::vector<OracleMismatch>> found(box.size());
  parallel_for(box.size(), [&](std::size_t k) {
    const auto oracle = cech_graded_oracle(c, p, box[k]);
    for (int i = 0; i <= top; ++i) {
      const auto expected = graded_dim(table, c, i, box[k]);
      auto it = oracle.find(i);
      const std::size_t got = it == oracle.end() ? 0 : it->second;
      if (expected != got) found[k].push_back({box[k], i, expected, got});
    }
  });
  OracleComparison result;
  result.degrees_checked = box.size();
  for (auto& f : found) result.mismatches.insert(result.mismatches.end(), f.begin(), f.end());
  return result;
}

}  // namespace froblab

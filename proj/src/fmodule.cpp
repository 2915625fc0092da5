#include "froblab/fmodule.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "froblab/errors.hpp"

namespace froblab {

FModuleTruncation::FModuleTruncation(Residue p, std::size_t n_vars, int index,
                                     std::uint32_t depth, std::vector<FComponent> components)
    : p_(p), n_vars_(n_vars), index_(index), depth_(depth), components_(std::move(components)) {
  require_prime(p);
  if (depth_ == 0) throw InvalidParameters("truncation depth must be positive");
  for (const auto& c : components_) {
    if (c.frobenius.rows() != c.multiplicity || c.frobenius.cols() != c.multiplicity) {
      throw DimensionMismatch("Frobenius matrix does not match the multiplicity");
    }
    if (c.support.mask() >> n_vars_ != 0) throw DimensionMismatch("support uses unknown variables");
  }
}

namespace {

// Calls fn(w) for every w with w_j in [1, depth] on the support and 0 elsewhere.
template <typename Fn>
void for_each_window(Face support, std::size_t n, std::uint32_t depth, Fn&& fn) {
  const auto verts = support.vertices();
  std::vector<std::uint32_t> w(n, 0);
  for (int v : verts) w[static_cast<std::size_t>(v)] = 1;
  while (true) {
    fn(w);
    std::size_t k = 0;
    while (k < verts.size()) {
      auto& e = w[static_cast<std::size_t>(verts[k])];
      if (e < depth) {
        ++e;
        break;
      }
      e = 1;
      ++k;
    }
    if (k == verts.size()) break;
  }
}

}  // namespace

std::vector<BasisElement> FModuleTruncation::basis() const {
  std::vector<BasisElement> out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (std::size_t k = 0; k < components_[c].multiplicity; ++k) {
      for_each_window(components_[c].support, n_vars_, depth_,
                      [&](const std::vector<std::uint32_t>& w) { out.push_back({c, k, w}); });
    }
  }
  return out;
}

std::size_t FModuleTruncation::basis_size() const {
  std::size_t total = 0;
  for (const auto& c : components_) {
    std::size_t per = c.multiplicity;
    for (std::size_t k = 0; k < c.support.size(); ++k) per *= depth_;
    total += per;
  }
  return total;
}

std::vector<BasisElement> FModuleTruncation::piece_basis(const MultiDegree& theta) const {
  if (theta.size() != n_vars_) throw DimensionMismatch("degree has wrong length");
  std::vector<BasisElement> out;
  if (!positive_support(theta).empty()) return out;
  const Face nu = negative_support(theta);
  std::vector<std::uint32_t> w(n_vars_);
  for (std::size_t j = 0; j < n_vars_; ++j) w[j] = static_cast<std::uint32_t>(-theta[j]);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (components_[c].support != nu) continue;
    for (std::size_t k = 0; k < components_[c].multiplicity; ++k) out.push_back({c, k, w});
  }
  return out;
}

MultiDegree FModuleTruncation::degree_of(const BasisElement& b) const {
  MultiDegree theta(n_vars_);
  for (std::size_t j = 0; j < n_vars_; ++j) theta[j] = -static_cast<int>(b.w[j]);
  return theta;
}

FModuleTruncation build_truncation(const SimplicialComplex& c, Residue p, int i,
                                   std::uint32_t depth) {
  if (i < 0 || i > c.dimension() + 1) {
    throw InvalidParameters("cohomological index " + std::to_string(i) + " outside [0, " +
                            std::to_string(c.dimension() + 1) + "]");
  }
  const auto table = decomposition(c, p);
  std::vector<FComponent> comps;
  for (const auto& [nu, mult] : table.at(i)) {
    comps.push_back({nu, mult, GfpMatrix::identity(p, mult)});
  }
  return FModuleTruncation(p, c.n_vertices(), i, depth, std::move(comps));
}

Element add(const Element& a, const Element& b, Residue p) {
  Element out = a;
  for (const auto& [e, c] : b) {
    auto& slot = out[e];
    slot = static_cast<Residue>((slot + c) % p);
    if (slot == 0) out.erase(e);
  }
  return out;
}

Element scale(const Element& v, Residue c, Residue p) {
  Element out;
  c %= p;
  if (c == 0) return out;
  for (const auto& [e, x] : v) out.emplace(e, static_cast<Residue>(std::uint64_t{x} * c % p));
  return out;
}

Element apply_x(const FModuleTruncation& t, std::size_t j, const Element& v) {
  if (j >= t.n_vars()) throw DimensionMismatch("variable index out of range");
  Element out;
  for (const auto& [b, c] : v) {
    if (!t.components().at(b.component).support.contains(static_cast<int>(j))) continue;
    if (b.w[j] == 1) continue;
    BasisElement image = b;
    --image.w[j];
    out = add(out, {{image, c}}, t.prime());
  }
  return out;
}

Element apply_F(const FModuleTruncation& t, const Element& v) {
  const Residue p = t.prime();
  Element out;
  for (const auto& [b, c] : v) {
    const auto& comp = t.components().at(b.component);
    std::vector<std::uint32_t> w = b.w;
    for (auto& e : w) e *= p;
    for (std::size_t k = 0; k < comp.multiplicity; ++k) {
      const Residue phi = comp.frobenius(k, b.class_index);
      if (phi == 0) continue;
      out = add(out, {{BasisElement{b.component, k, w}, static_cast<Residue>(std::uint64_t{phi} * c % p)}}, p);
    }
  }
  return out;
}

FModuleTruncation adjoin_inverse_variable(const FModuleTruncation& t) {
  const int apex = static_cast<int>(t.n_vars());
  std::vector<FComponent> comps;
  for (const auto& c : t.components()) comps.push_back({c.support.with(apex), c.multiplicity, c.frobenius});
  return FModuleTruncation(t.prime(), t.n_vars() + 1, t.index() + 1, t.depth(), std::move(comps));
}

FModuleTruncation zero_frobenius_fixture(Residue p, std::size_t n_vars) {
  return FModuleTruncation(p, n_vars, 0, 1, {FComponent{Face{}, 1, GfpMatrix(p, 1, 1)}});
}

namespace {

struct Node {
  MultiDegree theta;
  std::vector<BasisElement> basis;
  std::map<BasisElement, std::size_t> position;
  bool in_window = false;  // all |θ_j| <= T, so pθ is still in the box
};

struct Edge {
  std::size_t from;
  std::size_t to;
  GfpMatrix map;  // piece(from) -> piece(to)
};

// Degrees of the box [-pT, 0]^n carrying a nonzero piece, with every nonzero
// x_j and F map between them.
struct DegreeGraph {
  std::vector<Node> nodes;
  std::map<MultiDegree, std::size_t> index;
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> out_edges;
  std::vector<std::vector<std::size_t>> in_edges;
  // F target of each window node (if that degree has a piece) and its matrix.
  std::vector<std::optional<std::size_t>> f_target;
  std::vector<GfpMatrix> f_map;

  std::vector<Residue> coordinates(std::size_t node, const Element& v) const {
    std::vector<Residue> out(nodes[node].basis.size(), 0);
    for (const auto& [b, c] : v) {
      auto it = nodes[node].position.find(b);
      if (it == nodes[node].position.end()) throw Error("element leaves the expected graded piece");
      out[it->second] = c;
    }
    return out;
  }
};

GfpMatrix action_matrix(const DegreeGraph& g, std::size_t from, std::size_t to, Residue p,
                        const std::function<Element(const Element&)>& act) {
  const auto& src = g.nodes[from];
  GfpMatrix m(p, g.nodes[to].basis.size(), src.basis.size());
  for (std::size_t col = 0; col < src.basis.size(); ++col) {
    const auto image = g.coordinates(to, act({{src.basis[col], 1}}));
    for (std::size_t row = 0; row < image.size(); ++row) m.set(row, col, image[row]);
  }
  return m;
}

DegreeGraph build_graph(const FModuleTruncation& t, std::uint64_t cap) {
  DegreeGraph g;
  const std::size_t n = t.n_vars();
  const std::uint32_t deep = t.extended_depth();
  std::vector<Face> supports;
  for (const auto& c : t.components()) {
    if (c.multiplicity > 0 && std::find(supports.begin(), supports.end(), c.support) == supports.end()) {
      supports.push_back(c.support);
    }
  }
  std::sort(supports.begin(), supports.end());
  for (auto nu : supports) {
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < nu.size(); ++k) {
      size *= deep;
      if (size > cap) throw CapacityExceeded("degree box exceeds the enumeration cap");
    }
    if (g.nodes.size() + size > cap) throw CapacityExceeded("degree box exceeds the enumeration cap");
    for_each_window(nu, n, deep, [&](const std::vector<std::uint32_t>& w) {
      Node node;
      node.theta.resize(n);
      node.in_window = true;
      for (std::size_t j = 0; j < n; ++j) {
        node.theta[j] = -static_cast<int>(w[j]);
        if (w[j] > t.depth()) node.in_window = false;
      }
      node.basis = t.piece_basis(node.theta);
      for (std::size_t k = 0; k < node.basis.size(); ++k) node.position.emplace(node.basis[k], k);
      g.index.emplace(node.theta, g.nodes.size());
      g.nodes.push_back(std::move(node));
    });
  }

  const Residue p = t.prime();
  const std::size_t count = g.nodes.size();
  g.out_edges.resize(count);
  g.in_edges.resize(count);
  g.f_target.resize(count);
  g.f_map.resize(count);
  auto add_edge = [&](std::size_t a, std::size_t b, GfpMatrix m) {
    if (m.is_zero()) return;
    g.out_edges[a].push_back(g.edges.size());
    g.in_edges[b].push_back(g.edges.size());
    g.edges.push_back({a, b, std::move(m)});
  };
  for (std::size_t a = 0; a < count; ++a) {
    const auto& theta = g.nodes[a].theta;
    for (std::size_t j = 0; j < n; ++j) {
      if (theta[j] >= 0) continue;
      auto up = theta;
      ++up[j];
      auto it = g.index.find(up);
      if (it == g.index.end()) continue;
      add_edge(a, it->second, action_matrix(g, a, it->second, p,
                                            [&](const Element& v) { return apply_x(t, j, v); }));
    }
    if (!g.nodes[a].in_window) continue;
    auto scaled = theta;
    for (auto& e : scaled) e *= static_cast<int>(p);
    auto it = g.index.find(scaled);
    if (it == g.index.end()) continue;
    g.f_target[a] = it->second;
    g.f_map[a] = action_matrix(g, a, it->second, p, [&](const Element& v) { return apply_F(t, v); });
    add_edge(a, it->second, g.f_map[a]);
  }
  return g;
}

// {v : m v ∈ w}.
Subspace preimage(const GfpMatrix& m, const Subspace& w) {
  if (w.dim() == w.ambient_dim()) return Subspace::full(m.prime(), m.cols());
  if (w.dim() == 0) return kernel_basis(m);
  // Rows of `annihilator` cut out w, so v is in the preimage iff they kill m v.
  const auto annihilator = kernel_basis(w.basis());
  return kernel_basis(annihilator.basis() * m);
}

// Lower and upper bounds for every node of one connected block.
struct Bounds {
  std::vector<Subspace> lo;
  std::vector<Subspace> hi;
};

class ProfileSearch {
 public:
  ProfileSearch(const DegreeGraph& g, Residue p, std::uint64_t cap) : g_(g), p_(p), cap_(cap) {}

  // Every consistent assignment of the block, as one subspace per node.
  std::vector<std::vector<Subspace>> run(const std::vector<std::size_t>& block) {
    block_ = block;
    solutions_.clear();
    Bounds b;
    for (auto v : block_) {
      b.lo.push_back(Subspace::zero(p_, g_.nodes[v].basis.size()));
      b.hi.push_back(Subspace::full(p_, g_.nodes[v].basis.size()));
    }
    local_.clear();
    for (std::size_t k = 0; k < block_.size(); ++k) local_[block_[k]] = k;
    search(std::move(b));
    return std::move(solutions_);
  }

  std::uint64_t nodes_visited() const { return visited_; }

 private:
  const std::vector<Subspace>& candidates(std::size_t dim) {
    auto it = cache_.find(dim);
    if (it == cache_.end()) it = cache_.emplace(dim, enumerate_subspaces(p_, dim, cap_)).first;
    return it->second;
  }

  bool propagate(Bounds& b, std::vector<std::size_t> work) {
    while (!work.empty()) {
      const std::size_t k = work.back();
      work.pop_back();
      const std::size_t v = block_[k];
      for (auto e : g_.out_edges[v]) {
        const auto& edge = g_.edges[e];
        const std::size_t tk = local_.at(edge.to);
        auto lo = subspace_sum(b.lo[tk], image_of(edge.map, b.lo[k]));
        if (!(lo == b.lo[tk])) {
          if (!b.hi[tk].contains(lo)) return false;
          b.lo[tk] = std::move(lo);
          work.push_back(tk);
        }
      }
      for (auto e : g_.in_edges[v]) {
        const auto& edge = g_.edges[e];
        const std::size_t sk = local_.at(edge.from);
        auto hi = subspace_intersection(b.hi[sk], preimage(edge.map, b.hi[k]));
        if (!(hi == b.hi[sk])) {
          if (!hi.contains(b.lo[sk])) return false;
          b.hi[sk] = std::move(hi);
          work.push_back(sk);
        }
      }
    }
    return true;
  }

  void search(Bounds b) {
    std::size_t pick = block_.size();
    for (std::size_t k = 0; k < block_.size(); ++k) {
      if (!(b.lo[k] == b.hi[k])) {
        pick = k;
        break;
      }
    }
    if (pick == block_.size()) {
      solutions_.push_back(std::move(b.lo));
      return;
    }
    for (const auto& u : candidates(b.lo[pick].ambient_dim())) {
      if (!u.contains(b.lo[pick]) || !b.hi[pick].contains(u)) continue;
      if (++visited_ > cap_) throw CapacityExceeded("submodule search exceeded its cap");
      Bounds next = b;
      next.lo[pick] = u;
      next.hi[pick] = u;
      if (propagate(next, {pick})) search(std::move(next));
    }
  }

  const DegreeGraph& g_;
  Residue p_;
  std::uint64_t cap_;
  std::uint64_t visited_ = 0;
  std::vector<std::size_t> block_;
  std::map<std::size_t, std::size_t> local_;
  std::map<std::size_t, std::vector<Subspace>> cache_;
  std::vector<std::vector<Subspace>> solutions_;
};

// Connected blocks of the degree graph, each sorted.
std::vector<std::vector<std::size_t>> blocks_of(const DegreeGraph& g) {
  std::vector<std::size_t> parent(g.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) parent[find(e.from)] = find(e.to);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

struct BlockSolutions {
  std::vector<std::size_t> nodes;
  std::vector<std::vector<Subspace>> solutions;
};

struct SearchOutcome {
  DegreeGraph graph;
  std::vector<BlockSolutions> blocks;
  std::uint64_t visited = 0;
};

SearchOutcome search_all(const FModuleTruncation& t, std::uint64_t cap) {
  SearchOutcome out;
  out.graph = build_graph(t, cap);
  ProfileSearch search(out.graph, t.prime(), cap);
  for (auto& block : blocks_of(out.graph)) {
    auto sols = search.run(block);
    out.blocks.push_back({std::move(block), std::move(sols)});
  }
  out.visited = search.nodes_visited();
  return out;
}

bool block_is_stable(const DegreeGraph& g, const BlockSolutions& b, std::size_t s) {
  std::map<Face, const Subspace*> seen;
  for (std::size_t k = 0; k < b.nodes.size(); ++k) {
    const auto& node = g.nodes[b.nodes[k]];
    if (!node.in_window) continue;
    auto [it, fresh] = seen.emplace(negative_support(node.theta), &b.solutions[s][k]);
    if (!fresh && !(*it->second == b.solutions[s][k])) return false;
  }
  return true;
}

void write_block(const DegreeGraph& g, const BlockSolutions& b, std::size_t s, Profile& out) {
  for (std::size_t k = 0; k < b.nodes.size(); ++k) {
    if (b.solutions[s][k].dim() > 0) out.pieces.emplace(g.nodes[b.nodes[k]].theta, b.solutions[s][k]);
  }
}

}  // namespace

Profile f_stable_span(const FModuleTruncation& t, const std::vector<Element>& generators,
                      std::uint64_t cap) {
  const auto g = build_graph(t, cap);
  const Residue p = t.prime();
  std::vector<Subspace> span(g.nodes.size());
  for (std::size_t v = 0; v < g.nodes.size(); ++v) span[v] = Subspace::zero(p, g.nodes[v].basis.size());
  std::vector<std::size_t> work;
  for (const auto& gen : generators) {
    if (gen.empty()) continue;
    const auto theta = t.degree_of(gen.begin()->first);
    auto it = g.index.find(theta);
    if (it == g.index.end()) throw InvalidParameters("generator lies outside the degree box");
    const auto coords = g.coordinates(it->second, gen);  // throws if not homogeneous
    auto grown = subspace_sum(span[it->second], Subspace::span(p, coords.size(), {coords}));
    if (!(grown == span[it->second])) {
      span[it->second] = std::move(grown);
      work.push_back(it->second);
    }
  }
  while (!work.empty()) {
    const std::size_t v = work.back();
    work.pop_back();
    for (auto e : g.out_edges[v]) {
      const auto& edge = g.edges[e];
      auto grown = subspace_sum(span[edge.to], image_of(edge.map, span[v]));
      if (!(grown == span[edge.to])) {
        span[edge.to] = std::move(grown);
        work.push_back(edge.to);
      }
    }
  }
  Profile out;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    if (span[v].dim() > 0) out.pieces.emplace(g.nodes[v].theta, span[v]);
  }
  return out;
}

EnumerationResult enumerate_f_stable_submodules(const FModuleTruncation& t, std::uint64_t cap) {
  const auto outcome = search_all(t, cap);
  EnumerationResult result;
  result.nodes_visited = outcome.visited;
  result.count = 1;
  std::uint64_t stable = 1;
  for (const auto& b : outcome.blocks) {
    const std::uint64_t n = b.solutions.size();
    std::uint64_t n_stable = 0;
    for (std::size_t s = 0; s < n; ++s) n_stable += block_is_stable(outcome.graph, b, s);
    if (result.count > UINT64_MAX / n) throw CapacityExceeded("submodule count overflows 64 bits");
    result.count *= n;
    stable *= n_stable;
  }
  result.unstable = result.count - stable;
  if (result.count > cap) return result;

  // Mixed-radix walk over one solution per block.
  std::vector<std::size_t> choice(outcome.blocks.size(), 0);
  for (std::uint64_t k = 0; k < result.count; ++k) {
    Profile profile;
    for (std::size_t b = 0; b < outcome.blocks.size(); ++b) {
      write_block(outcome.graph, outcome.blocks[b], choice[b], profile);
    }
    result.profiles.push_back(std::move(profile));
    for (std::size_t b = 0; b < choice.size(); ++b) {
      if (++choice[b] < outcome.blocks[b].solutions.size()) break;
      choice[b] = 0;
    }
  }
  return result;
}

AntinilpotenceResult check_antinilpotent(const FModuleTruncation& t, std::uint64_t cap) {
  const auto outcome = search_all(t, cap);
  const auto& g = outcome.graph;
  // F is injective on V'/V at θ iff {v ∈ V'_θ : F v ∈ V_{pθ}} = V_θ. Each
  // condition involves a single block, so pairs are checked block by block and
  // a failing pair is extended by zero.
  for (const auto& b : outcome.blocks) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < b.nodes.size(); ++k) local[b.nodes[k]] = k;
    for (std::size_t s = 0; s < b.solutions.size(); ++s) {
      for (std::size_t s2 = 0; s2 < b.solutions.size(); ++s2) {
        const auto& small = b.solutions[s];
        const auto& large = b.solutions[s2];
        bool nested = true;
        for (std::size_t k = 0; k < b.nodes.size() && nested; ++k) nested = large[k].contains(small[k]);
        if (!nested) continue;
        for (std::size_t k = 0; k < b.nodes.size(); ++k) {
          const std::size_t v = b.nodes[k];
          if (!g.nodes[v].in_window) continue;
          std::size_t kept;
          if (g.f_target[v]) {
            const auto target = local.find(*g.f_target[v]);
            const Subspace bottom = target == local.end()
                                        ? Subspace::zero(t.prime(), g.nodes[*g.f_target[v]].basis.size())
                                        : small[target->second];
            kept = subspace_intersection(large[k], preimage(g.f_map[v], bottom)).dim();
          } else {
            kept = large[k].dim();
          }
          if (kept != small[k].dim()) {
            Profile lo, hi;
            write_block(g, b, s, lo);
            write_block(g, b, s2, hi);
            return {false, std::make_pair(std::move(lo), std::move(hi))};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

MonomialIdeal annihilator_up_to_cap(const FModuleTruncation& t, const Profile& profile,
                                    std::uint64_t degree_cap) {
  const std::size_t n = t.n_vars();
  const std::uint32_t bound = t.extended_depth() - 1;
  if (degree_cap == 0) degree_cap = std::uint64_t{bound} * n;
  // x^a kills γ ⊗ x^{-w} iff a leaves ν or reaches the exponent -1 wall.
  auto kills = [&](const std::vector<std::uint32_t>& a) {
    for (const auto& [theta, piece] : profile.pieces) {
      const Face nu = negative_support(theta);
      bool dies = false;
      for (std::size_t j = 0; j < n && !dies; ++j) {
        if (a[j] == 0) continue;
        dies = !nu.contains(static_cast<int>(j)) || a[j] >= static_cast<std::uint32_t>(-theta[j]);
      }
      if (!dies) return false;
    }
    return true;
  };
  std::vector<Monomial> gens;
  std::vector<std::uint32_t> a(n, 0);
  while (true) {
    const std::uint64_t deg = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    if (deg <= degree_cap && kills(a)) gens.emplace_back(a);
    std::size_t k = 0;
    while (k < n && a[k] == bound) a[k++] = 0;
    if (k == n) break;
    ++a[k];
  }
  return MonomialIdeal(n, std::move(gens));
}

bool LyubeznikProfile::anti_nilpotent() const {
  return std::none_of(factors.begin(), factors.end(), [](const LyubeznikFactor& f) {
    return f.kind == LyubeznikFactor::Kind::Nilpotent && f.dim > 0;
  });
}

LyubeznikProfile lyubeznik_profile(const FModuleTruncation& t) {
  LyubeznikProfile out;
  for (const auto& c : t.components()) {
    if (c.multiplicity == 0) continue;
    // Fitting: F^m splits the multiplicity space into an invertible part
    // (image) and a nilpotent part (kernel).
    GfpMatrix power = GfpMatrix::identity(t.prime(), c.multiplicity);
    for (std::size_t k = 0; k < c.multiplicity; ++k) power = power * c.frobenius;
    const std::size_t r = rank(power);
    if (r > 0) out.factors.push_back({c.support, LyubeznikFactor::Kind::Injective, r});
    if (r < c.multiplicity) {
      out.factors.push_back({c.support, LyubeznikFactor::Kind::Nilpotent, c.multiplicity - r});
    }
  }
  return out;
}

std::string to_string(LyubeznikFactor::Kind kind) {
  return kind == LyubeznikFactor::Kind::Injective ? "injective" : "nilpotent";
}

}  // namespace froblab

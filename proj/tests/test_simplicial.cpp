#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "froblab/errors.hpp"
#include "froblab/simplicial.hpp"

using namespace froblab;

TEST(Face, SetOperations) {
  const auto f = Face::from_vertices({2, 0, 2});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.vertices(), (std::vector<int>{0, 2}));
  EXPECT_EQ(f.to_string(), "{0,2}");
  EXPECT_TRUE(Face::from_vertices({0}).is_subset_of(f));
  EXPECT_TRUE(f.disjoint_from(Face::from_vertices({1, 3})));
  EXPECT_EQ(f.with(1), Face::from_vertices({0, 1, 2}));
  EXPECT_EQ(f.without(0), Face::from_vertices({2}));
  EXPECT_EQ(f.position_of(2), 1u);
  EXPECT_EQ(Face{}.dimension(), -1);
  EXPECT_LT(Face::from_vertices({3}), Face::from_vertices({0, 1}));
  EXPECT_LT(Face::from_vertices({0, 2}), Face::from_vertices({1, 2}));
}

TEST(Complex, FacetsReduceToAntichain) {
  const auto c = SimplicialComplex::from_facets(3, {{0, 1}, {0}, {2}, {1, 0}});
  EXPECT_EQ(c.facets().size(), 2u);
  EXPECT_EQ(c.dimension(), 1);
  EXPECT_TRUE(c.contains(Face::from_vertices({1})));
  EXPECT_FALSE(c.contains(Face::from_vertices({1, 2})));
  EXPECT_THROW(SimplicialComplex::from_facets(3, {{0, 1}}), InvalidParameters);
  EXPECT_THROW(SimplicialComplex::from_facets(2, {{0, 5}}), InvalidParameters);
}

TEST(Complex, Conventions) {
  EXPECT_EQ(SimplicialComplex::empty_complex().dimension(), -1);
  EXPECT_EQ(SimplicialComplex::void_complex().dimension(), -2);
  EXPECT_EQ(SimplicialComplex::simplex(3).face_count(), 8u);
  EXPECT_EQ(corpus::load("triangle_boundary").face_count(), 7u);
  EXPECT_EQ(corpus::load("rp2_six").face_count(), 1u + 6 + 15 + 10);
}

TEST(FacetFile, ParseAndFormat) {
  const auto c = parse_facet_list("# circle\n0 1\n1 2  # an edge\n\n2 0\n");
  EXPECT_EQ(c, corpus::load("triangle_boundary"));
  EXPECT_EQ(parse_facet_list(format_facet_list(c)), c);
  EXPECT_THROW(parse_facet_list(""), ParseError);
  EXPECT_THROW(parse_facet_list("# only a comment\n"), ParseError);
  EXPECT_THROW(parse_facet_list("0 x\n"), ParseError);
  EXPECT_THROW(parse_facet_list("0 -1\n"), ParseError);
  EXPECT_THROW(parse_facet_list("0\n2\n"), ParseError);  // vertex 1 uncovered
}

TEST(Link, Examples) {
  const auto circle = corpus::load("triangle_boundary");
  const auto lk = link(circle, Face::from_vertices({0}));
  EXPECT_EQ(lk.facets(), (std::vector<Face>{Face::from_vertices({1}), Face::from_vertices({2})}));
  EXPECT_TRUE(link(circle, Face::from_vertices({0, 1})).is_empty_complex());
  EXPECT_EQ(link(circle, Face{}), circle);
  EXPECT_THROW(link(circle, Face::from_vertices({0, 1, 2})), NotAFace);
}

TEST(Cohomology, KnownSpaces) {
  EXPECT_EQ(reduced_cohomology(corpus::load("triangle_boundary"), 2).dims, (std::map<int, std::size_t>{{1, 1}}));
  EXPECT_EQ(reduced_cohomology(corpus::load("two_points"), 3).dims, (std::map<int, std::size_t>{{0, 1}}));
  EXPECT_EQ(reduced_cohomology(SimplicialComplex::empty_complex(2), 2).dims,
            (std::map<int, std::size_t>{{-1, 1}}));
  EXPECT_TRUE(reduced_cohomology(SimplicialComplex::simplex(4), 5).vanishes());
  const auto rp2 = corpus::load("rp2_six");
  EXPECT_EQ(reduced_cohomology(rp2, 2).dims, (std::map<int, std::size_t>{{1, 1}, {2, 1}}));
  EXPECT_TRUE(reduced_cohomology(rp2, 3).vanishes());
  EXPECT_TRUE(reduced_cohomology(rp2, 5).vanishes());
}

TEST(Cohomology, CocyclesAreRequested) {
  const auto prof = reduced_cohomology(corpus::load("triangle_boundary"), 3, true);
  ASSERT_TRUE(prof.cocycles.count(1));
  EXPECT_EQ(prof.cocycles.at(1).dim(), 3u);  // every 1-cochain is a cocycle
}

TEST(Cohomology, EulerCharacteristic) {
  for (const auto& [name, c] : corpus::bundled()) {
    long faces = 0;
    const auto levels = c.faces();
    for (std::size_t k = 0; k < levels.size(); ++k) {
      faces += (k % 2 == 1 ? 1 : -1) * static_cast<long>(levels[k].size());  // k = dim + 1
    }
    for (Residue p : {2u, 3u}) {
      long alt = 0;
      for (const auto& [j, d] : reduced_cohomology(c, p).dims) {
        alt += (j % 2 == 0 ? 1 : -1) * static_cast<long>(d);
      }
      EXPECT_EQ(alt, faces) << name;
    }
  }
}

TEST(Cohomology, HomologyAgrees) {
  for (const auto& [name, c] : corpus::bundled()) {
    for (Residue p : {2u, 3u}) EXPECT_EQ(reduced_cohomology(c, p).dims, reduced_homology_dims(c, p)) << name;
  }
}

TEST(Cohomology, ConesAreAcyclic) {
  for (const auto& [name, c] : corpus::bundled()) {
    if (c.is_empty_complex()) continue;
    EXPECT_TRUE(reduced_cohomology(cone(c), 2).vanishes()) << name;
  }
}

TEST(Cohomology, RelabelingInvariance) {
  for (const auto& [name, c] : corpus::bundled()) {
    std::vector<int> perm(c.n_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    if (perm.size() > 2) std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    EXPECT_EQ(reduced_cohomology(relabel(c, perm), 2).dims, reduced_cohomology(c, 2).dims) << name;
  }
}

TEST(Coboundary, SquaresToZero) {
  const auto c = corpus::load("rp2_six");
  const auto levels = c.faces();
  for (Residue p : {2u, 3u, 5u}) {
    for (std::size_t k = 0; k + 2 < levels.size(); ++k) {
      const auto d1 = coboundary_matrix(levels[k], levels[k + 1], p);
      const auto d2 = coboundary_matrix(levels[k + 1], levels[k + 2], p);
      EXPECT_TRUE((d2 * d1).is_zero());
    }
  }
}

TEST(Complex, FaceListings) {
  EXPECT_EQ(SimplicialComplex::simplex(1).faces(),
            (std::vector<std::vector<Face>>{{Face{}}, {Face::from_vertices({0})}}));
  const auto two = corpus::load("two_points").faces();
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[1], (std::vector<Face>{Face::from_vertices({0}), Face::from_vertices({1})}));
  const auto tri = corpus::load("triangle_boundary").faces();
  ASSERT_EQ(tri.size(), 3u);
  EXPECT_EQ(tri[0].size(), 1u);
  EXPECT_EQ(tri[1].size(), 3u);
  EXPECT_EQ(tri[2].size(), 3u);
  EXPECT_TRUE(reduced_cohomology(SimplicialComplex::simplex(3), 7).vanishes());
}

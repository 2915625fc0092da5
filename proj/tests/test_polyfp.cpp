#include <gtest/gtest.h>

#include <random>

#include "froblab/errors.hpp"
#include "froblab/macaulay.hpp"
#include "froblab/polyfp.hpp"

using namespace froblab;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

PolynomialFp random_homogeneous(std::mt19937& rng, Residue p, std::size_t n, std::uint64_t d,
                                std::size_t terms) {
  const auto all = monomials_of_degree(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<Residue> coef(1, p - 1);
  PolynomialFp r(p, n);
  for (std::size_t k = 0; k < terms; ++k) r.add_term(all[pick(rng)], coef(rng));
  return r;
}

// Independent membership: rank of the dense Macaulay matrix with and without r.
bool dense_member(const PolynomialFp& r, const GradedIdealBasis& ideal) {
  const auto d = r.total_degree();
  const auto cols = monomials_of_degree(ideal.n_vars(), d);
  std::map<Monomial, std::size_t> index;
  for (std::size_t c = 0; c < cols.size(); ++c) index[cols[c]] = c;
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : ideal.generators()) {
    if (g.total_degree() > d) continue;
    for (const auto& m : monomials_of_degree(ideal.n_vars(), d - g.total_degree())) {
      std::vector<std::int64_t> row(cols.size(), 0);
      const auto product = g * m;
      for (const auto& [t, c] : product.terms()) row[index.at(t)] = c;
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::int64_t> target(cols.size(), 0);
  for (const auto& [t, c] : r.terms()) target[index.at(t)] = c;
  if (rows.empty()) return r.is_zero();
  const auto before = rank(GfpMatrix::from_rows(ideal.prime(), rows));
  rows.push_back(target);
  return rank(GfpMatrix::from_rows(ideal.prime(), rows)) == before;
}

}  // namespace

TEST(Monomial, Arithmetic) {
  const auto a = mono({2, 0, 1});
  const auto b = mono({1, 1, 0});
  EXPECT_EQ(a * b, mono({3, 1, 1}));
  EXPECT_EQ(lcm(a, b), mono({2, 1, 1}));
  EXPECT_EQ(gcd(a, b), mono({1, 0, 0}));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_THROW(a / b, Error);
  EXPECT_TRUE(mono({1, 0, 1}).divides(a));
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(a.radical(), mono({1, 0, 1}));
  EXPECT_FALSE(a.is_square_free());
  EXPECT_EQ(a.to_string(), "x0^2*x2");
  EXPECT_EQ(Monomial(2).to_string(), "1");
  EXPECT_GT(mono({1, 0}), mono({0, 5}));
}

TEST(Polynomial, ParseAndPrint) {
  const auto f = parse_polynomial("x^3+y^3+z^3", 7);
  EXPECT_EQ(f.n_vars(), 3u);
  EXPECT_EQ(f.to_string(), "x0^3 + x1^3 + x2^3");
  EXPECT_EQ(parse_polynomial(f.to_string(), 7), f);
  EXPECT_EQ(parse_polynomial("3 x0 x1 - 10*x1^2", 7).to_string(), "3*x0*x1 + 4*x1^2");
  EXPECT_EQ(parse_polynomial("x0 - x0", 5).is_zero(), true);
  EXPECT_EQ(parse_polynomial("x1", 5, 4).n_vars(), 4u);
  EXPECT_EQ(infer_variable_count("x0 + x3^2"), 4u);
  EXPECT_THROW(parse_polynomial("x0 +", 5), ParseError);
  EXPECT_THROW(parse_polynomial("x0 ^", 5), ParseError);
  EXPECT_THROW(parse_polynomial("q", 5), ParseError);
  EXPECT_THROW(parse_polynomial("x3", 5, 2), ParseError);
}

TEST(Polynomial, ArithmeticAndDegree) {
  const auto f = parse_polynomial("x + y", 3, 2);
  EXPECT_EQ(f.pow(3), parse_polynomial("x^3 + y^3", 3, 2));
  EXPECT_EQ((f * f).to_string(), "x0^2 + 2*x0*x1 + x1^2");
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_FALSE(parse_polynomial("x + y^2", 3, 2).is_homogeneous());
  EXPECT_EQ(parse_polynomial("x^2*y + 1", 3).total_degree(), 3u);
  EXPECT_EQ(f - f, PolynomialFp(3, 2));
  EXPECT_EQ(f.scaled(3), PolynomialFp(3, 2));
}

TEST(Polynomial, FrobeniusComposition) {
  std::mt19937 rng(3);
  for (Residue p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto r = random_homogeneous(rng, p, 3, 1 + trial % 3, 4);
      EXPECT_EQ(r.frobenius(p), r.pow(p));
      EXPECT_EQ(r.frobenius(p).frobenius(p), r.frobenius(std::uint64_t{p} * p));
      EXPECT_EQ(r.frobenius(1), r);
    }
  }
  EXPECT_THROW(parse_polynomial("x", 3).frobenius(6), InvalidParameters);
}

TEST(MonomialIdeal, MinimalGeneratorsAndOps) {
  const MonomialIdeal i(3, {mono({1, 1, 0}), mono({2, 1, 0}), mono({0, 1, 1})});
  EXPECT_EQ(i.generators().size(), 2u);
  EXPECT_TRUE(i.contains(mono({3, 2, 0})));
  EXPECT_FALSE(i.contains(mono({3, 0, 3})));
  EXPECT_TRUE(i.is_square_free());
  EXPECT_EQ(i.to_string(), "(x0*x1, x1*x2)");
  EXPECT_EQ(MonomialIdeal::zero(2).to_string(), "(0)");
  EXPECT_TRUE(MonomialIdeal::unit(2).is_unit());
  EXPECT_EQ(i.frobenius_power(4, 2), MonomialIdeal(3, {mono({4, 4, 0}), mono({0, 4, 4})}));

  const auto primes = minimal_primes(i);
  ASSERT_EQ(primes.size(), 2u);
  EXPECT_NE(std::find(primes.begin(), primes.end(), MonomialIdeal::generated_by_variables(3, {1})), primes.end());
  EXPECT_NE(std::find(primes.begin(), primes.end(), MonomialIdeal::generated_by_variables(3, {0, 2})), primes.end());
  EXPECT_EQ(minimal_primes(MonomialIdeal::zero(2)), std::vector<MonomialIdeal>{MonomialIdeal::zero(2)});
  EXPECT_TRUE(minimal_primes(MonomialIdeal::unit(2)).empty());
  EXPECT_THROW(minimal_primes(MonomialIdeal(1, {mono({2})})), UnsupportedInput);
}

TEST(MonomialIdeal, IntersectionOfPrimesIsRadical) {
  const auto i = MonomialIdeal(3, {mono({1, 1, 0}), mono({0, 1, 1})});
  auto meet = MonomialIdeal::unit(3);
  for (const auto& q : minimal_primes(i)) meet = ideal_intersection(meet, q);
  EXPECT_EQ(meet, i);
}

TEST(MonomialIdeal, ColonLaws) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Monomial> gi, gj;
    for (int k = 0; k < 3; ++k) gi.push_back(mono({e(rng), e(rng), e(rng)}));
    for (int k = 0; k < 2; ++k) gj.push_back(mono({e(rng), e(rng), e(rng)}));
    const MonomialIdeal i(3, gi), j(3, gj);
    const auto colon = monomial_colon(i, j);
    EXPECT_TRUE(i.contains(ideal_product(j, colon)));
    EXPECT_TRUE(colon.contains(i));
    const auto both = ideal_intersection(i, j);
    EXPECT_TRUE(i.contains(both));
    EXPECT_TRUE(j.contains(both));
    EXPECT_TRUE(ideal_sum(i, j).contains(i));
  }
  EXPECT_TRUE(monomial_colon(MonomialIdeal(2, {mono({1, 0})}), MonomialIdeal::zero(2)).is_unit());
}

TEST(Membership, SparseMatchesDense) {
  std::mt19937 rng(2024);
  for (Residue p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<PolynomialFp> gens;
      for (int k = 0; k < 2; ++k) gens.push_back(random_homogeneous(rng, p, 3, 2, 3));
      gens.push_back(PolynomialFp::monomial(p, mono({0, 0, 3})));
      const GradedIdealBasis ideal(p, 3, gens, 10);
      for (std::uint64_t d = 2; d <= 5; ++d) {
        const auto r = random_homogeneous(rng, p, 3, d, 1 + trial % 4);
        EXPECT_EQ(ideal_membership_bounded(r, ideal, 10), dense_member(r, ideal));
        // Products with the generators always land in the ideal.
        const auto inside = gens[0] * random_homogeneous(rng, p, 3, d, 2);
        EXPECT_TRUE(ideal_membership_bounded(inside, ideal, 10));
      }
    }
  }
}

TEST(Membership, FermatExamples) {
  // Checked against a Gröbner basis computation in an independent CAS.
  for (auto [p, expect] : std::vector<std::pair<Residue, bool>>{{7, false}, {5, true}, {2, true}, {11, true}, {13, false}}) {
    const auto f = parse_polynomial("x^3+y^3+z^3", p);
    const GradedIdealBasis ideal(p, 3, {f, parse_polynomial("y", p, 3).pow(p), parse_polynomial("z", p, 3).pow(p)}, 0);
    EXPECT_EQ(ideal_membership_bounded(PolynomialFp::monomial(p, mono({2 * p, 0, 0})), ideal, 100), expect) << p;
  }
  const auto f7 = parse_polynomial("x^3+y^3+z^3", 7);
  EXPECT_EQ(f7.pow(6).coefficient(mono({6, 6, 6})), 6u);
}

TEST(Membership, Errors) {
  const GradedIdealBasis ideal(3, 2, {parse_polynomial("x", 3, 2)}, 0);
  EXPECT_THROW(ideal_membership_bounded(parse_polynomial("x + y^2", 3, 2), ideal, 10), UnsupportedInput);
  EXPECT_THROW(ideal_membership_bounded(parse_polynomial("y^20", 3, 2), ideal, 10), DegreeOverflow);
  EXPECT_TRUE(ideal_membership_bounded(PolynomialFp(3, 2), ideal, 10));
}

TEST(GradedPiece, QuotientCoordinates) {
  const GradedIdealBasis ideal(2, 2, {parse_polynomial("x^2 + x*y", 2, 2)}, 0);
  const GradedPiece piece(ideal, 2);
  EXPECT_EQ(piece.ambient_dim(), 3u);
  EXPECT_EQ(piece.quotient_dim(), 2u);
  const auto r = parse_polynomial("x^2", 2, 2);
  EXPECT_EQ(piece.normal_form(r), piece.normal_form(parse_polynomial("x*y", 2, 2)));
  EXPECT_EQ(piece.from_coordinates(piece.quotient_coordinates(r)), piece.normal_form(r));
}

TEST(Splitting, Semilinearity) {
  std::mt19937 rng(8);
  for (Residue p : {2u, 3u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = random_homogeneous(rng, p, 3, 1 + trial % 2, 2);
      PolynomialFp r(p, 3);
      for (std::uint64_t d = 0; d <= 4; ++d) r = r + random_homogeneous(rng, p, 3, d, 2);
      EXPECT_EQ(standard_monomial_splitting(s.frobenius(p) * r), s * standard_monomial_splitting(r));
      EXPECT_EQ(standard_monomial_splitting(s.frobenius(p)), s);
    }
  }
  EXPECT_EQ(monomial_split(mono({4, 2}), 2), mono({2, 1}));
  EXPECT_FALSE(monomial_split(mono({3, 2}), 2).has_value());
}

TEST(Monomials, CountsAndOrder) {
  EXPECT_EQ(monomials_of_degree(3, 4).size(), 15u);
  EXPECT_EQ(monomials_of_degree(1, 7).size(), 1u);
  EXPECT_EQ(monomials_of_degree(4, 0).size(), 1u);
  const auto ms = monomials_of_degree(3, 2);
  EXPECT_TRUE(std::is_sorted(ms.rbegin(), ms.rend()));
  EXPECT_NO_THROW(require_power_of(27, 3));
  EXPECT_THROW(require_power_of(12, 3), InvalidParameters);
}

TEST(MonomialIdeal, FrobeniusPowerExamples) {
  const MonomialIdeal xy(2, {mono({1, 1})});
  EXPECT_EQ(xy.frobenius_power(1, 2), xy);
  EXPECT_EQ(xy.frobenius_power(2, 2), MonomialIdeal(2, {mono({2, 2})}));
  EXPECT_EQ(MonomialIdeal(2, {mono({2, 0}), mono({0, 1})}).frobenius_power(3, 3),
            MonomialIdeal(2, {mono({6, 0}), mono({0, 3})}));
  EXPECT_THROW(xy.frobenius_power(6, 2), InvalidParameters);
}

TEST(Membership, SmallExamples) {
  const GradedIdealBasis ideal(5, 2, {parse_polynomial("x^2", 5, 2), parse_polynomial("y", 5, 2)}, 0);
  EXPECT_TRUE(ideal_membership_bounded(parse_polynomial("x^2", 5, 2), ideal, 10));
  const GradedIdealBasis square(5, 2, {parse_polynomial("x^2", 5, 2)}, 0);
  EXPECT_FALSE(ideal_membership_bounded(parse_polynomial("x", 5, 2), square, 10));
}

TEST(Membership, FermatHigherLevels) {
  // Checked against a Gröbner basis computation in an independent CAS.
  const auto f = parse_polynomial("x^3+y^3+z^3", 7);
  const auto y = parse_polynomial("y", 7, 3);
  const auto z = parse_polynomial("z", 7, 3);
  const GradedIdealBasis level7(7, 3, {f, y.pow(7), z.pow(7)}, 0);
  EXPECT_FALSE(ideal_membership_bounded(parse_polynomial("x^14", 7, 3), level7, 100));
  EXPECT_TRUE(ideal_membership_bounded(parse_polynomial("x^15", 7, 3), level7, 100));
  EXPECT_FALSE(ideal_membership_bounded(parse_polynomial("x", 7, 3), level7, 100));
  const GradedIdealBasis level14(7, 3, {f, y.pow(14), z.pow(14)}, 0);
  EXPECT_FALSE(ideal_membership_bounded(parse_polynomial("x^2*y*z", 7, 3).pow(7), level14, 100));
  const GradedIdealBasis level49(7, 3, {f, y.pow(49), z.pow(49)}, 0);
  EXPECT_TRUE(ideal_membership_bounded(parse_polynomial("x^99", 7, 3), level49, 200));
  EXPECT_FALSE(ideal_membership_bounded(parse_polynomial("x^98", 7, 3), level49, 200));
}

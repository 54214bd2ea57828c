#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "sublat/constructs.hpp"
#include "sublat/errors.hpp"

namespace {

using sublat::gf::Field;
using sublat::gf::Index;
using sublat::lin::Vector;
namespace cs = sublat::constructs;
namespace lattice = sublat::lattice;
namespace props = sublat::props;

// Exhaustive search over nonzero k-tuples, k = 2..p.
std::uint32_t mq_brute_force(const Field& f) {
  const auto q = f.q();
  for (std::uint32_t k = 2; k <= f.p(); ++k) {
    std::vector<Index> t(k, 1);
    while (true) {
      Index s = 0;
      for (auto a : t) s = f.add(s, f.mul(a, a));
      if (s == 0) return k;
      std::size_t i = 0;
      while (i < k && ++t[i] == q) t[i++] = 1;
      if (i == k) break;
    }
  }
  return 0;
}

bool squares_vanish(const Field& f, const std::vector<Index>& w) {
  Index s = 0;
  for (auto a : w) s = f.add(s, f.mul(a, a));
  return s == 0;
}

std::vector<Vector> standard_basis(const Field& f, std::size_t m) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(Vector::unit(f, m, i));
  return out;
}

std::vector<Vector> ones_minus_unit(const Field& f, std::size_t m) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Index> v(m, 1);
    v[i] = 0;
    out.emplace_back(f, v);
  }
  return out;
}

}  // namespace

TEST(Mq, ReferenceValuesAndWitnesses) {
  const std::map<std::uint32_t, std::uint32_t> expected = {{2, 2}, {3, 3}, {4, 2},  {5, 2},  {7, 3}, {8, 2},
                                                           {9, 2}, {11, 3}, {13, 2}, {16, 2}, {17, 2}};
  for (const auto& [q, m] : expected) {
    const auto f = Field::of_order(q);
    const auto r = cs::compute_mq(f);
    EXPECT_EQ(r.m_q, m) << q;
    EXPECT_EQ(r.m_q, mq_brute_force(f)) << q;
    EXPECT_EQ(r.witness.size(), r.m_q);
    EXPECT_TRUE(squares_vanish(f, r.witness));
    for (auto a : r.witness) EXPECT_NE(a, 0u);
    EXPECT_TRUE(r.bounds_hold);
    EXPECT_GT(r.m_q, 1u);
    EXPECT_LE(r.m_q, f.p());
  }
  EXPECT_EQ(cs::compute_mq(Field::of_order(9)).witness, (std::vector<Index>{1, 3}));
  EXPECT_EQ(cs::compute_mq(Field::of_order(3)).witness, (std::vector<Index>{1, 1, 1}));
  EXPECT_EQ(cs::compute_mq(Field::of_order(7)).witness, (std::vector<Index>{1, 3, 2}));
}

TEST(Mq, IsotropyThreshold) {
  // find_isotropic is absent exactly below m(q).
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 9u, 11u}) {
    const auto f = Field::of_order(q);
    const auto mq = cs::compute_mq(f).m_q;
    for (std::size_t m = 1; m <= std::min<std::size_t>(f.p(), 3); ++m)
      EXPECT_EQ(sublat::lin::find_isotropic(f, m).has_value(), m >= mq) << q << "," << m;
  }
}

TEST(Mq, MinusOneSquareCharacterization) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u, 29u}) {
    const auto f = Field::of_order(q);
    bool minus_one_square = false;
    for (Index a = 1; a < q; ++a) minus_one_square |= f.mul(a, a) == f.neg(1);
    EXPECT_EQ(cs::compute_mq(f).m_q == 2, minus_one_square) << q;
  }
}

TEST(Bounds, Examples) {
  const auto b7 = cs::thm5_bounds(7);
  EXPECT_TRUE(b7.first_applies);
  EXPECT_EQ(b7.first_bound, 6u);
  EXPECT_TRUE(b7.second_applies);
  EXPECT_EQ(b7.second_bound, 3u);
  EXPECT_FALSE(b7.corollary_applies);
  const auto b2 = cs::thm5_bounds(2);
  EXPECT_FALSE(b2.first_applies || b2.second_applies || b2.corollary_applies);
  const auto b5 = cs::thm5_bounds(5);
  EXPECT_TRUE(b5.second_applies);
  EXPECT_EQ(b5.second_bound, 2u);
  EXPECT_THROW(cs::thm5_bounds(9), sublat::NonPrimeCharacteristic);
}

TEST(Bounds, WitnessesAreIsotropicAndBoundsHold) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    const auto f = Field::of_order(p);
    const auto b = cs::thm5_bounds(p);
    const auto mq = cs::compute_mq(f).m_q;
    if (b.first_applies) {
      EXPECT_TRUE(sublat::lin::is_isotropic(Vector(f, b.first_witness))) << p;
      EXPECT_GE(b.first_bound, mq);
    }
    if (b.second_applies) {
      EXPECT_TRUE(sublat::lin::is_isotropic(Vector(f, b.second_witness))) << p;
      EXPECT_GE(b.second_bound, mq);
    }
    if (b.corollary_applies) EXPECT_TRUE(b.first_applies) << p;
  }
}

TEST(OrthogonalBasis, Examples) {
  const auto f2 = Field::of_order(2);
  const auto f3 = Field::of_order(3);
  EXPECT_TRUE(cs::is_orthogonal_basis(standard_basis(f3, 3)));
  // The all-ones-minus-unit family is orthogonal iff p | m - 2.
  EXPECT_TRUE(cs::is_orthogonal_basis(ones_minus_unit(f2, 4)));
  EXPECT_FALSE(cs::is_orthogonal_basis(ones_minus_unit(f2, 3)));
  EXPECT_FALSE(cs::is_orthogonal_basis(ones_minus_unit(f3, 4)));
  EXPECT_TRUE(cs::is_orthogonal_basis(ones_minus_unit(f3, 5)));
  EXPECT_FALSE(cs::is_orthogonal_basis(std::vector<Vector>{Vector(f3, {1, 1}), Vector(f3, {1, 1})}));
  EXPECT_THROW(cs::is_orthogonal_basis(std::vector<Vector>{Vector(f3, {1, 1})}), sublat::DimensionMismatch);
}

TEST(BooleanSubalgebra, StandardBasisGrid) {
  for (auto [q, m] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {4, 3}, {2, 4}}) {
    const auto f = Field::of_order(q);
    const auto L = lattice::build_lattice(f, m);
    const auto basis = standard_basis(f, m);
    const auto b = cs::boolean_subalgebra(L, basis);
    EXPECT_EQ(b.by_subset.size(), std::size_t{1} << m);
    EXPECT_TRUE(b.power_set_isomorphism);
    EXPECT_TRUE(b.complement_identity);
    EXPECT_TRUE(b.poset.is_subuniverse);
    EXPECT_TRUE(b.poset.orthomodular_as_poset.holds);
    EXPECT_TRUE(cs::find_isomorphism(b.poset.order, cs::boolean_algebra(m), true).has_value());
  }
}

TEST(BooleanSubalgebra, FigureTwoAtoms) {
  const auto f = Field::of_order(3);
  const auto L = lattice::build_lattice(f, 2);
  const auto b = cs::boolean_subalgebra(L, standard_basis(f, 2));
  EXPECT_EQ(b.poset.elements, (std::vector<std::uint32_t>{0, 1, 2, 5}));
}

TEST(BooleanSubalgebra, NonStandardBasis) {
  const auto f = Field::of_order(2);
  const auto L = lattice::build_lattice(f, 4);
  const auto b = cs::boolean_subalgebra(L, ones_minus_unit(f, 4));
  EXPECT_TRUE(b.power_set_isomorphism);
  EXPECT_TRUE(b.complement_identity);
}

TEST(BooleanSubalgebra, RejectsNonOrthogonal) {
  const auto f = Field::of_order(2);
  const auto L = lattice::build_lattice(f, 3);
  EXPECT_THROW(cs::boolean_subalgebra(L, ones_minus_unit(f, 3)), sublat::NotOrthogonalBasis);
}

TEST(HorizontalSum, SmallCases) {
  const auto mo2 = cs::horizontal_sum(cs::boolean_algebra(2, "a"), cs::boolean_algebra(2, "b"));
  EXPECT_EQ(mo2.size(), 6u);
  EXPECT_EQ(props::recognize_MOn(mo2), 2u);
  EXPECT_TRUE(props::check_orthomodular(mo2).holds);

  const auto sum32 = cs::horizontal_sum(cs::boolean_algebra(3, "a"), cs::boolean_algebra(2, "b"));
  EXPECT_EQ(sum32.size(), 10u);
  EXPECT_TRUE(props::check_orthomodular(sum32).holds);
  EXPECT_FALSE(props::check_modular(sum32).holds);
  EXPECT_EQ(sum32.atoms().size(), 5u);
}

TEST(HorizontalSum, Errors) {
  EXPECT_THROW(cs::horizontal_sum(cs::boolean_algebra(2, "a"), cs::boolean_algebra(1, "b")), sublat::TrivialInput);
  EXPECT_THROW(cs::horizontal_sum(cs::boolean_algebra(2, "a"), cs::boolean_algebra(2, "a")),
               sublat::OverlapViolation);
  const auto L22 = props::OrthoLattice::from_subspace_lattice(lattice::build_lattice(Field::of_order(2), 2));
  EXPECT_THROW(cs::horizontal_sum(L22, cs::boolean_algebra(2, "b")), sublat::DomainError);
}

TEST(HorizontalSum, OrthomodularSummandsGiveOrthomodularSum) {
  const auto l32 = props::OrthoLattice::from_subspace_lattice(lattice::build_lattice(Field::of_order(3), 2));
  const auto again = props::OrthoLattice::from_subspace_lattice(lattice::build_lattice(Field::of_order(3), 2));
  const auto s1 = cs::horizontal_sum(l32, cs::boolean_algebra(3, "b"));
  EXPECT_TRUE(props::check_orthomodular(s1).holds);
  EXPECT_EQ(s1.size(), 6u + 6u);
  EXPECT_THROW(cs::horizontal_sum(l32, again), sublat::OverlapViolation);
}

TEST(HorizontalSumSubposet, EightPointCube) {
  const auto L = lattice::build_lattice(Field::of_order(2), 3);
  const auto hs = cs::horizontal_sum_subposet(L);
  const auto at = [&](std::vector<std::vector<sublat::gf::Index>> rows) {
    std::vector<Vector> vs;
    for (auto& r : rows) vs.emplace_back(L.field(), std::move(r));
    return L.require_index(sublat::lin::rref(L.field(), 3, vs));
  };
  std::vector<std::uint32_t> expected = {at({}), at({{0, 0, 1}}), at({{0, 1, 0}}), at({{1, 0, 0}}),
                                         at({{0, 0, 1}, {0, 1, 0}}), at({{0, 0, 1}, {1, 0, 0}}),
                                         at({{0, 1, 0}, {1, 0, 0}}), L.top(), at({{1, 1, 1}}),
                                         at({{1, 0, 1}, {0, 1, 1}})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(hs.poset.elements, expected);
  EXPECT_TRUE(hs.poset.orthomodular_as_poset.holds);
  EXPECT_FALSE(hs.poset.is_subuniverse);
  ASSERT_TRUE(hs.poset.closure_witness.has_value());
  EXPECT_EQ(hs.poset.closure_witness->op, "+");
  EXPECT_TRUE(hs.matches_horizontal_sum);
  EXPECT_EQ(hs.w, at({{1, 1, 1}}));
  EXPECT_EQ(hs.w_perp, at({{1, 0, 1}, {0, 1, 1}}));
  const auto parent = props::OrthoLattice::from_subspace_lattice(lattice::build_lattice(Field::of_order(2), 3));
  EXPECT_FALSE(props::check_orthomodular(parent).holds);
}

TEST(HorizontalSumSubposet, SubuniverseExactlyWhenMIsTwo) {
  for (auto [q, m] : {std::pair{3, 2}, {5, 2}, {7, 2}, {4, 3}, {3, 4}, {5, 3}, {2, 3}, {3, 5}}) {
    const auto hs = cs::horizontal_sum_subposet(Field::of_order(q), m);
    EXPECT_EQ(hs.poset.is_subuniverse, m == 2) << q << "," << m;
    EXPECT_TRUE(hs.poset.orthomodular_as_poset.holds) << q << "," << m;
    EXPECT_TRUE(hs.matches_horizontal_sum) << q << "," << m;
  }
  const auto L32 = lattice::build_lattice(Field::of_order(3), 2);
  EXPECT_EQ(cs::horizontal_sum_subposet(L32).poset.elements.size(), L32.size());
}

TEST(HorizontalSumSubposet, RefusesWhenPDividesM) {
  EXPECT_THROW(cs::horizontal_sum_subposet(Field::of_order(2), 2), sublat::HypothesisViolated);
  EXPECT_THROW(cs::horizontal_sum_subposet(Field::of_order(3), 3), sublat::HypothesisViolated);
  EXPECT_THROW(cs::horizontal_sum_subposet(Field::of_order(3), 1), sublat::HypothesisViolated);
}

TEST(M2, PrimeFields) {
  const auto r5 = cs::m2_theorem_check(Field::of_order(5));
  ASSERT_TRUE(r5.divisible.has_value());
  EXPECT_EQ(*r5.divisible, (std::pair<std::uint32_t, std::uint32_t>{1, 2}));
  EXPECT_FALSE(r5.orthomodular);
  EXPECT_TRUE(r5.consistent);

  const auto r3 = cs::m2_theorem_check(Field::of_order(3));
  EXPECT_EQ(r3.pairs.size(), 1u);
  EXPECT_FALSE(r3.divisible.has_value());
  EXPECT_TRUE(r3.orthomodular);
  EXPECT_EQ(r3.mon, 2u);
  EXPECT_TRUE(r3.consistent);

  const auto r13 = cs::m2_theorem_check(Field::of_order(13));
  ASSERT_TRUE(r13.divisible.has_value());
  EXPECT_EQ(*r13.divisible, (std::pair<std::uint32_t, std::uint32_t>{2, 3}));
  EXPECT_FALSE(r13.orthomodular);

  for (std::uint32_t p : {2u, 7u, 11u, 17u, 19u, 23u}) EXPECT_TRUE(cs::m2_theorem_check(Field::of_order(p)).consistent);
}

TEST(M2, ExtensionFieldsOnlyUseTheImplication) {
  const auto r9 = cs::m2_theorem_check(Field::of_order(9));
  EXPECT_FALSE(r9.predicted_orthomodular.has_value());
  EXPECT_FALSE(r9.orthomodular);
  EXPECT_EQ(r9.mn, 10u);
  EXPECT_TRUE(r9.consistent);
  EXPECT_EQ(cs::m2_theorem_check(Field::of_order(4)).mn, 5u);
}

TEST(Isomorphism, DistinguishesShapes) {
  const auto mo2 = cs::horizontal_sum(cs::boolean_algebra(2, "a"), cs::boolean_algebra(2, "b"));
  const auto L32 = props::OrthoLattice::from_subspace_lattice(lattice::build_lattice(Field::of_order(3), 2));
  const auto L22 = props::OrthoLattice::from_subspace_lattice(lattice::build_lattice(Field::of_order(2), 2));
  EXPECT_TRUE(cs::find_isomorphism(mo2, L32, true).has_value());
  EXPECT_FALSE(cs::find_isomorphism(mo2, L22, false).has_value());
  EXPECT_FALSE(cs::find_isomorphism(cs::boolean_algebra(3), mo2, false).has_value());
}

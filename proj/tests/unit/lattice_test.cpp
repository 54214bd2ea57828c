#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "sublat/errors.hpp"
#include "sublat/lattice.hpp"

namespace {

using sublat::gf::Field;
namespace lattice = sublat::lattice;
namespace lin = sublat::lin;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Number of ordered linearly independent d-tuples over q^m, divided by those
// inside a fixed d-space: the textbook count of d-dimensional subspaces.
std::uint64_t gaussian_oracle(std::uint64_t q, unsigned m, unsigned d) {
  std::uint64_t num = 1, den = 1;
  for (unsigned i = 0; i < d; ++i) {
    num *= ipow(q, m) - ipow(q, i);
    den *= ipow(q, d) - ipow(q, i);
  }
  return num / den;
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(Lattice, GaussianCountAgainstOracle) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u})
    for (unsigned m = 0; m <= 5; ++m)
      for (unsigned d = 0; d <= m; ++d) EXPECT_EQ(lattice::gaussian_count(q, m, d), gaussian_oracle(q, m, d));
  EXPECT_EQ(lattice::gaussian_count(3, 2, 1), 4u);
  EXPECT_EQ(lattice::gaussian_count(2, 3, 1), 7u);
  EXPECT_EQ(lattice::gaussian_count(2, 3, 2), 7u);
  EXPECT_THROW(lattice::gaussian_count(2, 3, 4), sublat::DomainError);
}

TEST(Lattice, ClosedFormCountsAndErrors) {
  EXPECT_EQ(lattice::atom_count(3, 2), 4u);
  EXPECT_EQ(lattice::atom_count(2, 3), 7u);
  EXPECT_EQ(lattice::upper_covers_count(2, 3, 1), 3u);
  EXPECT_EQ(lattice::lower_covers_count(2, 3, 2), 3u);
  EXPECT_EQ(lattice::total_subspaces(2, 3), 16u);
  EXPECT_EQ(lattice::total_subspaces(5, 4), 1120u);
  EXPECT_THROW(lattice::upper_covers_count(2, 3, 3), sublat::DomainError);
  EXPECT_THROW(lattice::lower_covers_count(2, 3, 0), sublat::DomainError);
}

TEST(Lattice, ElementOrderMatchesPublishedLetters) {
  const auto L = lattice::build_lattice(Field::of_order(3), 2);
  ASSERT_EQ(L.size(), 6u);
  EXPECT_EQ(L.element(1).to_string(), "<(0,1)>");
  EXPECT_EQ(L.element(2).to_string(), "<(1,0)>");
  EXPECT_EQ(L.element(3).to_string(), "<(1,1)>");
  EXPECT_EQ(L.element(4).to_string(), "<(1,2)>");
  EXPECT_EQ(L.perp(1), 2u);
  EXPECT_EQ(L.perp(3), 4u);
  EXPECT_EQ(L.perp(L.bottom()), L.top());
}

TEST(Lattice, TrivialSizes) {
  const auto L = lattice::build_lattice(Field::of_order(2), 1);
  EXPECT_EQ(L.size(), 2u);
  EXPECT_EQ(L.atoms(), std::vector<std::uint32_t>{1});
  EXPECT_THROW(lattice::build_lattice(Field::of_order(2), 0), sublat::DimensionMismatch);
}

TEST(Lattice, CapExceededCarriesCount) {
  try {
    lattice::build_lattice(Field::of_order(2), 3, 10);
    FAIL() << "expected CapExceeded";
  } catch (const sublat::CapExceeded& e) {
    EXPECT_EQ(e.requested(), 16u);
    EXPECT_EQ(e.cap(), 10u);
  }
  EXPECT_THROW(lattice::build_lattice(Field::of_order(7), 5), sublat::CapExceeded);
}

class BuiltLattice : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(BuiltLattice, StructureAgreesWithLinearAlgebra) {
  const auto [q, m] = GetParam();
  const auto L = lattice::build_lattice(Field::of_order(q), m);
  ASSERT_EQ(L.size(), lattice::total_subspaces(q, m));
  EXPECT_EQ(lattice::count_profile(L), lattice::expected_profile(q, m));

  for (std::uint32_t i = 0; i < L.size(); ++i) {
    EXPECT_EQ(L.index_of(L.element(i)), i);
    if (i) EXPECT_LT(L.element(i - 1), L.element(i));
    EXPECT_EQ(L.element(L.perp(i)), lin::orthocomplement(L.element(i)));
  }

  const auto reduction = lattice::transitive_reduction(L);
  for (std::uint32_t b = 0; b < L.size(); ++b) {
    auto lc = L.lower_covers(b);
    std::vector<std::uint32_t> mine(lc.begin(), lc.end());
    std::sort(mine.begin(), mine.end());
    auto want = reduction[b];
    std::sort(want.begin(), want.end());
    EXPECT_EQ(mine, want) << b;
  }

  // Pairwise checks are quadratic; stride through larger lattices.
  const std::uint32_t stride = L.size() > 200 ? 7 : 1;
  for (std::uint32_t a = 0; a < L.size(); a += stride) {
    for (std::uint32_t b = 0; b < L.size(); ++b) {
      const auto& u = L.element(a);
      const auto& w = L.element(b);
      ASSERT_EQ(L.leq(a, b), u.is_subspace_of(w));
      ASSERT_EQ(L.element(L.join(a, b)), lin::sum(u, w));
      ASSERT_EQ(L.element(L.meet(a, b)), lin::intersect(u, w));
    }
  }

  const auto chain = lattice::chain_condition_check(L);
  EXPECT_TRUE(chain.holds);
  for (std::uint32_t i = 0; i < L.size(); ++i) EXPECT_EQ(chain.height.at(i), L.dim(i));
}

INSTANTIATE_TEST_SUITE_P(Grid, BuiltLattice,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4},
                                           std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 3}, std::pair{5, 3},
                                           std::pair{9, 2}, std::pair{3, 4}),
                         [](const auto& info) {
                           return "q" + std::to_string(info.param.first) + "m" + std::to_string(info.param.second);
                         });

TEST(Lattice, ExhaustiveTopAndBottomLaws) {
  const auto L = lattice::build_lattice(Field::of_order(4), 3);
  for (std::uint32_t a = 0; a < L.size(); ++a) {
    EXPECT_EQ(L.join(a, L.bottom()), a);
    EXPECT_EQ(L.meet(a, L.top()), a);
    EXPECT_EQ(L.join(a, a), a);
  }
}

TEST(Lattice, DotExportOfTheEightPointPlane) {
  const auto L = lattice::build_lattice(Field::of_order(2), 3);
  const auto dot = lattice::export_dot(L, {.show_basis = true, .show_perp = true});
  EXPECT_EQ(dot.rfind("digraph L {", 0), 0u);
  EXPECT_EQ(count_matches(dot, R"(u\d+ \[label=)"), 16u);
  EXPECT_EQ(count_matches(dot, R"(u\d+ -> u\d+;)"), 35u);
  EXPECT_EQ(count_matches(dot, R"(rank=same)"), 4u);
  // 16 elements pair off under perp; {0}/V and the 7 atom/coatom pairs.
  EXPECT_EQ(count_matches(dot, R"(style=dashed)"), 8u);
  EXPECT_NE(dot.find("<(0,1,1)>"), std::string::npos);
  EXPECT_EQ(dot, lattice::export_dot(L, {.show_basis = true, .show_perp = true}));
}

TEST(Lattice, DotExportPlain) {
  const auto L = lattice::build_lattice(Field::of_order(3), 2);
  const auto dot = lattice::export_dot(L);
  EXPECT_EQ(count_matches(dot, R"(u\d+ -> u\d+;)"), 8u);
  EXPECT_EQ(dot.find("<("), std::string::npos);
}

TEST(Lattice, RequireIndexRejectsForeignSubspace) {
  const auto L = lattice::build_lattice(Field::of_order(3), 2);
  EXPECT_THROW(L.require_index(lin::Subspace::full(Field::of_order(3), 3)), sublat::DomainError);
}

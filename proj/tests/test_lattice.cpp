#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "toroidal/lattice.hpp"
#include "toroidal/oracle.hpp"

using namespace toroidal;

namespace {

std::vector<ExponentVector> random_generators(std::mt19937_64& rng, std::size_t dim,
                                              std::size_t count, int lo, int hi) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < count; ++i) {
    ExponentVector v(dim);
    for (auto& x : v) x = Int((long)(rng() % (std::uint64_t)(hi - lo + 1)) + lo);
    gens.push_back(v);
  }
  return gens;
}

}  // namespace

TEST_CASE("canonical_basis collapses dependent generators") {
  auto b = canonical_basis({ev({2, 4}), ev({1, 2})});
  REQUIRE(b == std::vector<ExponentVector>{ev({1, 2})});
}

TEST_CASE("canonical_basis of empty list is the zero subgroup") {
  REQUIRE(canonical_basis({}).empty());
  REQUIRE(SubLattice::zero(2).rank() == 0);
}

TEST_CASE("canonical_basis spans the same subgroup as the generators") {
  std::vector<ExponentVector> gens{ev({2, 1}), ev({1, 2}), ev({1, 1})};
  SubLattice L(2, gens);
  REQUIRE(L.rank() == 2);
  // mutual membership between basis and generators
  for (const auto& g : gens) REQUIRE(L.contains(g));
  SubLattice from_basis(2, L.basis());
  for (const auto& g : gens) REQUIRE(from_basis.contains(g));
  for (const auto& b : L.basis()) {
    SubLattice from_gens(2, gens);
    REQUIRE(from_gens.contains(b));
  }
}

TEST_CASE("contains: rational but not integral combination is rejected") {
  SubLattice L(2, {ev({2, 1}), ev({1, 2})});
  REQUIRE_FALSE(L.contains(ev({1, 1})));  // 2a+b=1, a+2b=1 has a=b=1/3
  REQUIRE(L.contains(ev({3, 3})));
  REQUIRE(SubLattice::zero(2).contains(ev({0, 0})));
}

TEST_CASE("contains rejects mismatched dimensions") {
  SubLattice L(2, {ev({1, 0})});
  REQUIRE_THROWS_AS(L.contains(ev({1, 0, 0})), Error);
  REQUIRE_THROWS_AS(SubLattice(2, {ev({1, 0, 0})}), Error);
}

TEST_CASE("quotient: index-3 sublattice of the full plane") {
  SubLattice H(2, {ev({2, 1}), ev({1, 2}), ev({1, 1})});
  SubLattice A(2, {ev({2, 1}), ev({1, 2})});
  auto q = quotient(H, A);
  REQUIRE(q.finite);
  REQUIRE(q.elementary_divisors == std::vector<Int>{Int(3)});
  REQUIRE(q.order == 3);
  REQUIRE(q.length == 1);
}

TEST_CASE("quotient: trivial quotient") {
  SubLattice H(2, {ev({1, 0}), ev({0, 1})});
  auto q = quotient(H, H);
  REQUIRE(q.finite);
  REQUIRE(q.elementary_divisors.empty());
  REQUIRE(q.order == 1);
  REQUIRE(q.length == 0);
}

TEST_CASE("quotient: rank-deficient H with finite index") {
  SubLattice H(2, {ev({2, 0}), ev({0, 1})});
  SubLattice A(2, {ev({4, 0}), ev({0, 1})});
  auto q = quotient(H, A);
  REQUIRE(q.finite);
  REQUIRE(q.elementary_divisors == std::vector<Int>{Int(2)});
  REQUIRE(q.order == 2);
  REQUIRE(q.length == 1);
}

TEST_CASE("quotient: infinite when rank drops") {
  SubLattice H(2, {ev({1, 0}), ev({0, 1})});
  SubLattice A(2, {ev({2, 0})});
  auto q = quotient(H, A);
  REQUIRE_FALSE(q.finite);
}

TEST_CASE("quotient rejects A not inside H") {
  SubLattice H(2, {ev({2, 0}), ev({0, 2})});
  SubLattice A(2, {ev({1, 0})});
  REQUIRE_THROWS_AS(quotient(H, A), Error);
}

TEST_CASE("rank_of_monomials") {
  REQUIRE(rank_of_monomials({ev({1, 0, 0})}) == 1);
  REQUIRE(rank_of_monomials({ev({2, 1, 0}), ev({1, 2, 0}), ev({1, 1, 0})}) == 2);
  REQUIRE(rank_of_monomials({ev({1, 1, 1}), ev({2, 2, 2})}) == 1);
  REQUIRE(rank_of_monomials({}) == 0);
}

TEST_CASE("property: quotient(H,H) is trivial for random H") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 60; ++it) {
    std::size_t dim = 1 + rng() % 3;
    auto gens = random_generators(rng, dim, 1 + rng() % 3, -6, 6);
    SubLattice H(dim, gens);
    if (H.rank() == 0) continue;
    auto q = quotient(H, H);
    REQUIRE(q.finite);
    REQUIRE(q.order == 1);
  }
}

TEST_CASE("property: order and length shrink when A grows") {
  std::mt19937_64 rng(11);
  int done = 0;
  for (int it = 0; it < 400 && done < 80; ++it) {
    std::size_t dim = 1 + rng() % 3;
    auto hgens = random_generators(rng, dim, dim, -6, 6);
    SubLattice H(dim, hgens);
    if (H.rank() != dim) continue;
    // A' = small multiples of H's basis, A = multiples of A' basis: A <= A' <= H
    std::vector<ExponentVector> apgens, agens;
    for (const auto& b : H.basis()) {
      long m1 = 1 + (long)(rng() % 3), m2 = 1 + (long)(rng() % 3);
      ExponentVector w1(dim), w2(dim);
      for (std::size_t j = 0; j < dim; ++j) w1[j] = b[j] * m1, w2[j] = b[j] * m1 * m2;
      apgens.push_back(w1);
      agens.push_back(w2);
    }
    SubLattice Ap(dim, apgens), A(dim, agens);
    auto q_coarse = quotient(H, Ap);
    auto q_fine = quotient(H, A);
    REQUIRE(q_coarse.finite);
    REQUIRE(q_fine.finite);
    REQUIRE(q_coarse.order <= q_fine.order);
    REQUIRE(q_coarse.length <= q_fine.length);
    ++done;
  }
  REQUIRE(done == 80);
}

TEST_CASE("property: quotient order matches enumeration oracle") {
  REQUIRE(oracle_quotient({ev({1, 0}), ev({0, 1})}, {ev({2, 1}), ev({1, 2})}) == 3);
  REQUIRE(oracle_quotient({ev({2, 0}), ev({0, 1})}, {ev({4, 0}), ev({0, 1})}) == 2);
  REQUIRE(oracle_quotient({ev({1, 0}), ev({0, 1})}, {ev({1, 0}), ev({0, 1})}) == 1);

  std::mt19937_64 rng(13);
  int done = 0;
  for (int it = 0; it < 600 && done < 100; ++it) {
    std::size_t dim = 1 + rng() % 3;
    auto hgens = random_generators(rng, dim, 1 + rng() % 3, -6, 6);
    SubLattice H(dim, hgens);
    if (H.rank() == 0) continue;
    std::vector<ExponentVector> agens;
    for (const auto& b : H.basis()) {
      long m = 1 + (long)(rng() % 4);
      ExponentVector w(dim);
      for (std::size_t j = 0; j < dim; ++j) w[j] = b[j] * m;
      agens.push_back(w);
    }
    SubLattice A(dim, agens);
    auto q = quotient(H, A);
    REQUIRE(q.finite);
    REQUIRE(q.order == oracle_quotient(H.generators(), A.generators()));
    ++done;
  }
  REQUIRE(done == 100);
}

TEST_CASE("property: contains agrees with exhaustive search") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 120; ++it) {
    std::size_t dim = 1 + rng() % 3;
    auto gens = random_generators(rng, dim, 1 + rng() % 2, -4, 4);
    SubLattice L(dim, gens);
    ExponentVector v(dim);
    for (auto& x : v) x = Int((long)(rng() % 13) - 6);
    bool fast = L.contains(v);
    bool slow = oracle_contains(gens, v, 20);
    // the exhaustive search window is generous enough for these bounds
    REQUIRE(fast == slow);
  }
}

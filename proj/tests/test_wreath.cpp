#include <set>

#include "doctest.h"

#include "bkn/class_type.hpp"
#include "bkn/error.hpp"
#include "bkn/wreath.hpp"
#include "oracles.hpp"

using namespace bkn;

namespace {

// k=3 on 8 blocks
const std::vector<int> kOmega24 = {12, 10, 11, 20, 21, 19, 8,  7,  9,  1,  2,  3,
                                   16, 18, 17, 15, 14, 13, 5,  4,  6,  22, 23, 24};
// k=2 on 8 blocks
const std::vector<int> kOmega16 = {14, 13, 1, 2, 16, 15, 7, 8, 12, 11, 10, 9, 4, 3, 5, 6};
// k=3 on 6 blocks
const std::vector<int> kAlpha18 = {12, 10, 11, 5,  6,  4,  8, 7, 9,
                                   15, 13, 14, 16, 18, 17, 3, 2, 1};
const std::vector<int> kBeta18 = {4, 5, 6, 18, 17, 16, 8,  9,  7,
                                  1, 2, 3, 12, 11, 10, 15, 14, 13};
const std::vector<int> kAlphaBeta18 = {5,  6,  4,  1,  2,  3,  7,  9,  8,
                                       12, 10, 11, 14, 13, 15, 17, 18, 16};

WreathElement make_wreath(int k, const std::vector<std::vector<int>>& locals,
                          const std::vector<int>& outer) {
  std::vector<Perm> ls;
  for (const auto& l : locals) ls.emplace_back(l);
  return WreathElement(k, std::move(ls), Perm(outer));
}

}  // namespace

TEST_CASE("membership validation") {
  CHECK_NOTHROW(BlockPermutation(3, Perm({1, 3, 2, 6, 5, 4})));
  try {
    BlockPermutation(3, Perm({1, 3, 6, 2, 4, 6}));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_bijection);  // 6 repeats before blocks matter
  }
  try {
    BlockPermutation(3, Perm({1, 3, 4, 2, 5, 6}));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_block_preserving);
    CHECK(e.detail() == 1);
  }
  try {
    BlockPermutation(2, Perm({2, 1, 3}));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::dimension_mismatch);
  }
}

TEST_CASE("blocks permutation of the worked examples") {
  CHECK(BlockPermutation(3, Perm(kOmega24)).blocks_permutation() ==
        Perm({4, 7, 3, 1, 6, 5, 2, 8}));
  CHECK(BlockPermutation(3, Perm(kAlpha18)).blocks_permutation() ==
        Perm({4, 2, 3, 5, 6, 1}));
  CHECK(BlockPermutation(3, Perm(kBeta18)).blocks_permutation() ==
        Perm({2, 6, 3, 1, 4, 5}));
  CHECK(BlockPermutation(3, Perm(kOmega24)).blocks_permutation().cycle_string() ==
        "(1,4)(2,7)(3)(5,6)(8)");
}

TEST_CASE("normalized restrictions of the worked 6-block element") {
  const BlockPermutation a(3, Perm(kAlpha18));
  const std::vector<std::vector<int>> expected = {{3, 2, 1}, {2, 3, 1}, {2, 1, 3},
                                                  {3, 1, 2}, {3, 1, 2}, {1, 3, 2}};
  for (int i = 1; i <= 6; ++i) CHECK(a.restriction(i) == Perm(expected[i - 1]));
}

TEST_CASE("isomorphism images of the worked pair") {
  const BlockPermutation alpha(3, Perm(kAlpha18));
  const BlockPermutation beta(3, Perm(kBeta18));
  CHECK(psi(alpha) ==
        make_wreath(3,
                    {{3, 2, 1}, {2, 3, 1}, {2, 1, 3}, {3, 1, 2}, {3, 1, 2}, {1, 3, 2}},
                    {4, 2, 3, 5, 6, 1}));
  CHECK(psi(beta) ==
        make_wreath(3,
                    {{1, 2, 3}, {1, 2, 3}, {2, 3, 1}, {3, 2, 1}, {3, 2, 1}, {3, 2, 1}},
                    {2, 6, 3, 1, 4, 5}));
}

TEST_CASE("composition table and homomorphism on the worked pair") {
  const BlockPermutation alpha(3, Perm(kAlpha18));
  const BlockPermutation beta(3, Perm(kBeta18));
  const BlockPermutation ab = compose(alpha, beta);
  CHECK(ab.perm() == Perm(kAlphaBeta18));
  CHECK(psi(ab) ==
        make_wreath(3,
                    {{1, 2, 3}, {2, 3, 1}, {1, 3, 2}, {3, 1, 2}, {2, 1, 3}, {2, 3, 1}},
                    {2, 1, 3, 4, 5, 6}));
  CHECK(wreath_multiply(psi(alpha), psi(beta)) == psi(ab));
}

TEST_CASE("inverse of the worked element sends images back") {
  const BlockPermutation alpha(3, Perm(kAlpha18));
  const BlockPermutation inv = alpha.inverse();
  CHECK(inv.perm()(12) == 1);
  CHECK(inv.perm()(10) == 2);
  CHECK(inv.perm()(11) == 3);
  CHECK(compose(alpha, inv).is_identity());
  CHECK(wreath_inverse(psi(alpha)) == psi(inv));
}

TEST_CASE("round trips between the two presentations") {
  const BlockPermutation alpha(3, Perm(kAlpha18));
  const BlockPermutation beta(3, Perm(kBeta18));
  CHECK(phi(psi(alpha)) == alpha);
  CHECK(phi(psi(beta)) == beta);
  std::mt19937 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const BlockPermutation g = oracle::random_element(3, 5, rng);
    CHECK(phi(psi(g)) == g);
  }
}

TEST_CASE("psi is a homomorphism") {
  // exhaustively on a small group
  const auto group = oracle::brute_group(2, 2);
  REQUIRE(group.size() == 8);
  for (const auto& a : group)
    for (const auto& b : group)
      CHECK(psi(compose(a, b)) == wreath_multiply(psi(a), psi(b)));
  std::mt19937 rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const BlockPermutation a = oracle::random_element(3, 4, rng);
    const BlockPermutation b = oracle::random_element(3, 4, rng);
    CHECK(psi(compose(a, b)) == wreath_multiply(psi(a), psi(b)));
    CHECK(phi(wreath_multiply(psi(a), psi(b))) == compose(a, b));
  }
}

TEST_CASE("wreath element validation") {
  CHECK_THROWS_AS(WreathElement(2, {Perm({1, 2})}, Perm({1, 2})), Error);
  CHECK_THROWS_AS(WreathElement(2, {Perm({1, 2, 3}), Perm({1, 2})}, Perm({1, 2})),
                  Error);
  CHECK(wreath_identity(2, 3) == psi(BlockPermutation::identity(2, 3)));
}

TEST_CASE("type extraction on the worked examples") {
  const BlockPermutation w3(3, Perm(kOmega24));
  CHECK(type_of(w3) == ClassType::parse(3, "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}"));
  const BlockPermutation w2(2, Perm(kOmega16));
  CHECK(type_of(w2) == ClassType::parse(2, "{[1,1]:[3,2,1]; [2]:[2]}"));
  CHECK(w2.perm().cycle_string() == "(1,14,3)(2,13,4)(5,16,6,15)(7)(8)(9,12)(10,11)");
  const BlockPermutation a(3, Perm(kAlpha18));
  CHECK(type_of(a) == ClassType::parse(3, "{[1,1,1]:[4]; [2,1]:[1]; [3]:[1]}"));
  CHECK(type_of(BlockPermutation::identity(3, 4)) ==
        ClassType::parse(3, "{[1,1,1]:[1,1,1,1]}"));
}

TEST_CASE("the k=1 type is the cycle type") {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    const BlockPermutation g = oracle::random_element(1, 7, rng);
    const ClassType t = type_of(g);
    CHECK(t.slots().back() == g.perm().cycle_type());
  }
}

TEST_CASE("type extraction agrees with the raw cycle pattern") {
  for (auto [k, n] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    for (const auto& g : oracle::brute_group(k, n))
      CHECK(type_of(g) == oracle::type_from_cycle_pattern(g));
  }
  std::mt19937 rng(109);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + trial % 3, n = 3 + trial % 4;
    const BlockPermutation g = oracle::random_element(k, n, rng);
    CHECK(type_of(g) == oracle::type_from_cycle_pattern(g));
  }
}

TEST_CASE("slot partitions unite to the blocks cycle type") {
  std::mt19937 rng(113);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 4, n = 2 + trial % 5;
    const BlockPermutation g = oracle::random_element(k, n, rng);
    const ClassType t = type_of(g);
    CHECK(t.n() == n);
    Partition all;
    for (const Partition& s : t.slots()) all = union_of(all, s);
    CHECK(all == g.blocks_permutation().cycle_type());
  }
}

TEST_CASE("the type is a conjugation invariant") {
  for (const auto& g : oracle::brute_group(2, 2))
    for (const auto& h : oracle::brute_group(2, 2))
      CHECK(type_of(conjugate(g, h)) == type_of(g));
  std::mt19937 rng(127);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 2, n = 3 + trial % 3;
    const BlockPermutation g = oracle::random_element(k, n, rng);
    const BlockPermutation h = oracle::random_element(k, n, rng);
    CHECK(type_of(conjugate(g, h)) == type_of(g));
  }
}

TEST_CASE("equal type forces conjugacy in small groups") {
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto group = oracle::brute_group(k, n);
    for (const auto& g : group) {
      const BlockPermutation rep = representative(type_of(g));
      bool connected = false;
      for (const auto& h : group) {
        if (conjugate(rep, h) == g) {
          connected = true;
          break;
        }
      }
      CHECK(connected);
    }
  }
}

TEST_CASE("every disjoint cycle spans its block cycle a whole number of times") {
  std::mt19937 rng(131);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 3, n = 2 + trial % 5;
    const BlockPermutation g = oracle::random_element(k, n, rng);
    for (const auto& cyc : g.perm().cycles()) {
      std::set<int> blocks;
      for (int v : cyc) blocks.insert((v - 1) / k + 1);
      CHECK(cyc.size() % blocks.size() == 0);
    }
  }
}

TEST_CASE("extension fixes the new blocks and pads the type") {
  const BlockPermutation w(3, Perm(kOmega24));
  const BlockPermutation w9 = extend(w, 9);
  CHECK(w9.n() == 9);
  CHECK(type_of(w9) == ClassType::parse(3, "{[1,1,1]:[1,1]; [2,1]:[2,1]; [3]:[2,2]}"));
  CHECK(extend(w, 8) == w);
  for (int v = 25; v <= 27; ++v) CHECK(w9.perm()(v) == v);
  CHECK_THROWS_AS(extend(w, 7), Error);
  try {
    extend(w, 5);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::shrink_not_allowed);
  }
}

TEST_CASE("group enumeration is exhaustive, duplicate free and deterministic") {
  CHECK(group_order(2, 3) == 48);
  CHECK(group_order(3, 2) == 72);
  CHECK(group_order(1, 4) == 24);
  for (auto [k, n] : {std::pair{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
    std::vector<BlockPermutation> seen;
    enumerate_group(k, n, [&](const BlockPermutation& g) {
      seen.push_back(g);
      return true;
    });
    CHECK(BigInt(seen.size()) == group_order(k, n));
    const std::set<BlockPermutation> unique(seen.begin(), seen.end());
    CHECK(unique.size() == seen.size());
    const auto brute = oracle::brute_group(k, n);
    CHECK(std::set<BlockPermutation>(brute.begin(), brute.end()) == unique);
    std::vector<BlockPermutation> again;
    enumerate_group(k, n, [&](const BlockPermutation& g) {
      again.push_back(g);
      return true;
    });
    CHECK(again == seen);
  }
}

TEST_CASE("group enumeration respects the budget and early stop") {
  try {
    enumerate_group(2, 20, [](const BlockPermutation&) { return true; });
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
  CHECK_THROWS_AS(
      enumerate_group(2, 3, [](const BlockPermutation&) { return true; }, Budget{10}),
      Error);
  int count = 0;
  enumerate_group(2, 3, [&](const BlockPermutation&) { return ++count < 5; });
  CHECK(count == 5);
}

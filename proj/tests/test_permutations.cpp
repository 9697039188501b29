#include <numeric>
#include <random>

#include "doctest.h"

#include "bkn/error.hpp"
#include "bkn/permutation.hpp"

using namespace bkn;

namespace {

Perm random_perm(int m, std::mt19937& rng) {
  std::vector<int> img(static_cast<size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("one-line validation") {
  CHECK(Perm({2, 1, 3}).degree() == 3);
  CHECK_THROWS_AS(Perm({1, 1}), Error);
  CHECK_THROWS_AS(Perm({1, 3}), Error);
  CHECK_THROWS_AS(Perm({0, 1}), Error);
  try {
    Perm({2, 2, 3});
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_bijection);
    CHECK(e.detail() == 2);
  }
}

TEST_CASE("composition applies the right factor first") {
  const Perm a({2, 1, 3});  // (1,2)
  const Perm b({1, 3, 2});  // (2,3)
  CHECK(compose(a, b) == Perm({2, 3, 1}));  // (1,2,3)
  CHECK(compose(b, a) == Perm({3, 1, 2}));
  CHECK_THROWS_AS(compose(a, Perm({1, 2})), Error);
}

TEST_CASE("inverse and identity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Perm p = random_perm(1 + trial % 9, rng);
    CHECK(compose(p, p.inverse()) == Perm::identity(p.degree()));
    CHECK(compose(p.inverse(), p) == Perm::identity(p.degree()));
  }
  CHECK(Perm::identity(4).is_identity());
  CHECK_FALSE(Perm({2, 1}).is_identity());
}

TEST_CASE("one-line text round trip") {
  const Perm p({12, 10, 11, 5, 6, 4, 8, 7, 9, 15, 13, 14, 16, 18, 17, 3, 2, 1});
  CHECK(Perm::parse_one_line(p.one_line()) == p);
  CHECK(Perm::parse_one_line("2 1") == Perm({2, 1}));
  CHECK_THROWS_AS(Perm::parse_one_line("2 x 1"), Error);
  CHECK_THROWS_AS(Perm::parse_one_line("2 1 1"), Error);
  try {
    Perm::parse_one_line("2 1 3", 4);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::dimension_mismatch);
  }
}

TEST_CASE("cycle decomposition starts each cycle at its minimum") {
  const Perm p = Perm::from_cycles(8, {{1, 4}, {2, 7}, {5, 6}});
  CHECK(p == Perm({4, 7, 3, 1, 6, 5, 2, 8}));
  CHECK(p.cycle_string() == "(1,4)(2,7)(3)(5,6)(8)");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Perm q = random_perm(2 + trial % 10, rng);
    CHECK(Perm::from_cycles(q.degree(), q.cycles()) == q);
  }
}

TEST_CASE("cycle type of a worked 12-point permutation") {
  const Perm p = Perm::from_cycles(12, {{2, 4, 1, 6}, {3, 8, 10, 12}, {5}, {7, 9, 11}});
  CHECK(p.cycle_type() == Partition({4, 4, 3, 1}));
  CHECK(Perm::identity(5).cycle_type() == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("cycle type is a conjugation invariant") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Perm s = random_perm(7, rng), g = random_perm(7, rng);
    CHECK(compose(compose(g, s), g.inverse()).cycle_type() == s.cycle_type());
  }
}

TEST_CASE("cycle type parts sum to the degree") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Perm s = random_perm(1 + trial % 12, rng);
    CHECK(s.cycle_type().size() == s.degree());
  }
}

#include <set>

#include "doctest.h"

#include "bkn/conjugacy.hpp"
#include "bkn/error.hpp"
#include "oracles.hpp"

using namespace bkn;

TEST_CASE("class type text form round trip") {
  const ClassType t = ClassType::parse(3, "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}");
  CHECK(t.k() == 3);
  CHECK(t.n() == 8);
  CHECK(t.slot(Partition({2, 1})) == Partition({2, 1}));
  CHECK(t.to_string() == "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}");
  CHECK(ClassType::parse(3, t.to_string()) == t);
  CHECK(ClassType(2).to_string() == "{}");
  CHECK(ClassType::parse(2, "{}") == ClassType(2));
  CHECK(ClassType::parse(2, "{[2]:[2]; [1,1]:[1]}").to_string() ==
        "{[1,1]:[1]; [2]:[2]}");
  CHECK_THROWS_AS(ClassType::parse(2, "{[3]:[1]}"), Error);
  CHECK_THROWS_AS(ClassType::parse(2, "{[2]:[1]; [2]:[1]}"), Error);
  CHECK_THROWS_AS(ClassType::parse(2, "[2]:[1]"), Error);
  try {
    ClassType(2).slot(Partition({3}));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::wrong_k);
  }
}

TEST_CASE("class type enumeration counts and contents") {
  CHECK(enumerate_class_types(1, 4).size() == 5);
  CHECK(enumerate_class_types(1, 5).size() == 7);
  CHECK(enumerate_class_types(2, 2).size() == 5);
  CHECK(enumerate_class_types(2, 3).size() == 10);
  CHECK(enumerate_class_types(3, 2).size() == 9);
  for (auto [k, n] : {std::pair{1, 4}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 5}}) {
    const auto types = enumerate_class_types(k, n);
    const std::set<ClassType> unique(types.begin(), types.end());
    CHECK(unique.size() == types.size());
    for (const ClassType& t : types) {
      CHECK(t.k() == k);
      CHECK(t.n() == n);
    }
  }
}

TEST_CASE("the class partition of small groups matches both routes") {
  for (auto [k, n] : {std::pair{1, 4}, {2, 2}, {2, 3}, {3, 2}}) {
    const auto group = oracle::brute_group(k, n);
    const auto buckets = oracle::type_buckets(group);
    const auto orbits = oracle::conjugacy_classes(group);
    CHECK(buckets.size() == orbits.size());
    // every conjugation orbit is exactly one type bucket
    for (const auto& orbit : orbits) {
      const ClassType t = type_of(orbit.front());
      REQUIRE(buckets.count(t) == 1);
      const auto& bucket = buckets.at(t);
      CHECK(std::set<BlockPermutation>(orbit.begin(), orbit.end()) ==
            std::set<BlockPermutation>(bucket.begin(), bucket.end()));
    }
    // and the enumerated types are the realized ones
    const auto types = enumerate_class_types(k, n);
    CHECK(types.size() == buckets.size());
    for (const ClassType& t : types) {
      REQUIRE(buckets.count(t) == 1);
      CHECK(class_size(t) == BigInt(buckets.at(t).size()));
    }
  }
}

TEST_CASE("class size worked values") {
  CHECK(class_size(ClassType::parse(3, "{[3]:[2]}")) == 12);
  CHECK(class_size(ClassType::parse(2, "{[1,1]:[1]; [2]:[2]}")) == 6);
  CHECK(class_size(ClassType::parse(3, "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}")) ==
        19595520);
  CHECK(class_size(ClassType::parse(2, "{[1,1]:[3,2,1]; [2]:[2]}")) == 53760);
  CHECK(class_size(ClassType::parse(3, "{[1,1,1]:[1,1,1]}")) == 1);
}

TEST_CASE("the two-symbol and three-symbol forms match the general formula") {
  for (int n = 0; n <= 6; ++n)
    for (const ClassType& t : enumerate_class_types(2, n)) {
      const auto [lambda, delta] = k2_view(t);
      CHECK(class_size_k2(lambda, delta) == class_size(t));
    }
  for (int n = 0; n <= 5; ++n)
    for (const ClassType& t : enumerate_class_types(3, n)) {
      const auto [alpha, beta, gamma] = k3_view(t);
      CHECK(class_size_k3(alpha, beta, gamma) == class_size(t));
    }
  CHECK(class_size_k2(Partition({3, 2, 1}), Partition({2})) == 53760);
}

TEST_CASE("views demand the right k") {
  CHECK_THROWS_AS(k2_view(ClassType(3)), Error);
  CHECK_THROWS_AS(k3_view(ClassType(2)), Error);
  try {
    k3_view(ClassType::parse(2, "{[2]:[1]; [1,1]:[1]}"));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::wrong_k);
  }
}

TEST_CASE("class sizes sum to the group order") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 5; ++n) {
      BigInt sum = 0;
      for (const ClassType& t : enumerate_class_types(k, n)) sum += class_size(t);
      CHECK(sum == group_order(k, n));
    }
}

TEST_CASE("proper families and padding") {
  const ClassType padded = ClassType::parse(2, "{[1,1]:[3,1,1]; [2]:[2]}");
  const ProperClassFamily fam = proper_family(padded);
  CHECK(fam.base() == ClassType::parse(2, "{[1,1]:[3]; [2]:[2]}"));
  CHECK(fam.min_n() == 5);
  CHECK(pad(fam, 7) == ClassType::parse(2, "{[1,1]:[3,1,1]; [2]:[2]}"));
  CHECK(pad(fam, 5) == fam.base());
  CHECK(proper_family(pad(fam, 9)) == fam);
  CHECK_THROWS_AS(pad(fam, 4), Error);
  try {
    ProperClassFamily{padded};
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_proper);
  }
  try {
    pad(fam, 2);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_small);
  }
}

TEST_CASE("extended class size equals the padded class size") {
  for (int k = 1; k <= 3; ++k)
    for (int m = 0; m <= 4; ++m)
      for (const ClassType& t : enumerate_class_types(k, m)) {
        if (!t.is_proper()) continue;
        const ProperClassFamily fam(t);
        for (int n = m; n <= m + 4; ++n)
          CHECK(extended_class_size(fam, n) == class_size(pad(fam, n)));
      }
}

TEST_CASE("extended class size worked values") {
  const ProperClassFamily transpositions(ClassType::parse(1, "{[1]:[2]}"));
  for (int n = 2; n <= 9; ++n)
    CHECK(extended_class_size(transpositions, n) == BigInt(n) * (n - 1) / 2);
  const ProperClassFamily swaps(ClassType::parse(2, "{[2]:[2]}"));
  CHECK(extended_class_size(swaps, 4) == 12);
  CHECK_THROWS_AS(extended_class_size(swaps, 1), Error);
}

TEST_CASE("representatives land in their class") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 4; ++n)
      for (const ClassType& t : enumerate_class_types(k, n)) {
        const BlockPermutation rep = representative(t);
        CHECK(rep.k() == k);
        CHECK(rep.n() == n);
        CHECK(type_of(rep) == t);
      }
  const ClassType big = ClassType::parse(3, "{[1,1,1]:[2,1]; [2,1]:[2]; [3]:[1]}");
  CHECK(type_of(representative(big)) == big);
}

TEST_CASE("representative worked values") {
  CHECK(representative(ClassType::parse(2, "{[2]:[1]}")).perm() == Perm({2, 1}));
  const BlockPermutation six = representative(ClassType::parse(3, "{[3]:[2]}"));
  CHECK(six.perm().cycle_string() == "(1,4,2,5,3,6)");
}

TEST_CASE("class element generation matches the brute buckets") {
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto buckets = oracle::type_buckets(oracle::brute_group(k, n));
    for (const auto& [t, bucket] : buckets) {
      std::vector<BlockPermutation> gen;
      class_elements(t, [&](const BlockPermutation& g) {
        gen.push_back(g);
        return true;
      });
      CHECK(gen.size() == bucket.size());
      CHECK(std::set<BlockPermutation>(gen.begin(), gen.end()) ==
            std::set<BlockPermutation>(bucket.begin(), bucket.end()));
      REQUIRE(!gen.empty());
      CHECK(gen.front() == representative(t));
    }
  }
}

TEST_CASE("class element generation: count, types and determinism at larger sizes") {
  for (const char* text : {"{[1,1,1]:[1,1]; [2,1]:[1]; [3]:[1]}",
                           "{[1,1,1]:[2]; [2,1]:[1,1]; [3]:[1]}",
                           "{[2,1]:[3,2]}", "{[3]:[2,2,1]}"}) {
    const ClassType t = ClassType::parse(3, text);
    BigInt count = 0;
    bool first = true;
    class_elements(t, [&](const BlockPermutation& g) {
      if (first) {
        CHECK(g == representative(t));
        first = false;
      }
      CHECK(type_of(g) == t);
      ++count;
      return true;
    });
    CHECK(count == class_size(t));
  }
}

TEST_CASE("class element generation respects the budget and early stop") {
  const ClassType t = ClassType::parse(2, "{[1,1]:[1,1,1,1,1,1]; [2]:[2]}");
  try {
    class_elements(t, [](const BlockPermutation&) { return true; }, Budget{10});
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
  int count = 0;
  class_elements(ClassType::parse(2, "{[1,1]:[2,1]}"),
                 [&](const BlockPermutation&) { return ++count < 3; });
  CHECK(count == 3);
}

TEST_CASE("class record rendering") {
  const auto rec =
      class_record_json(ClassType::parse(3, "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}"));
  CHECK(rec.dump() ==
        R"({"k":3,"n":8,"type":{"[1,1,1]":"[1]","[2,1]":"[2,1]","[3]":"[2,2]"},"size":"19595520"})");
}

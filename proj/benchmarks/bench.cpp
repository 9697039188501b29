// Microbenchmarks for the hot paths: type extraction, class streaming,
// class-sum products, and the brute-force baseline they replace.
#include <benchmark/benchmark.h>

#include <vector>

#include "bkn/center.hpp"
#include "bkn/conjugacy.hpp"
#include "bkn/wreath.hpp"

namespace {

using namespace bkn;

const std::vector<int> kOmega24 = {12, 10, 11, 20, 21, 19, 8,  7,  9,  1,  2,  3,
                                   16, 18, 17, 15, 14, 13, 5,  4,  6,  22, 23, 24};

ClassType padded_case(const char* text, int n) {
  return pad(ProperClassFamily(ClassType::parse(3, text)), n);
}

void BM_type_of(benchmark::State& state) {
  const auto g = BlockPermutation::from_one_line(3, kOmega24);
  for (auto _ : state) {
    auto t = type_of(g);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_type_of);

void BM_class_size(benchmark::State& state) {
  const auto t = ClassType::parse(3, "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}");
  for (auto _ : state) {
    auto s = class_size(t);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_class_size);

void BM_enumerate_class_types(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = enumerate_class_types(3, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_enumerate_class_types)->DenseRange(4, 10, 2);

void BM_class_elements(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassType x = padded_case("{[2,1]:[1]; [3]:[1]}", n);
  long long count = 0;
  for (auto _ : state) {
    count = 0;
    class_elements(x, [&](const BlockPermutation&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
  state.counters["elements"] = static_cast<double>(count);
}
BENCHMARK(BM_class_elements)->DenseRange(4, 8, 1);

void BM_class_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassType x = padded_case("{[2,1]:[1]; [3]:[1]}", n);
  const ClassType y = padded_case("{[3]:[1]}", n);
  for (auto _ : state) {
    auto e = class_product(x, y);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_class_product)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

// The approach class_product replaces: fish the class out of the whole group.
void BM_brute_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ClassType x = padded_case("{[2,1]:[1]; [3]:[1]}", n);
  const ClassType y = padded_case("{[3]:[1]}", n);
  for (auto _ : state) {
    std::vector<BlockPermutation> cx;
    enumerate_group(3, n, [&](const BlockPermutation& g) {
      if (type_of(g) == x) cx.push_back(g);
      return true;
    });
    std::map<ClassType, BigInt> terms;
    for (const ClassType& z : enumerate_class_types(3, n)) {
      const BlockPermutation omega = representative(z);
      BigInt c = 0;
      for (const BlockPermutation& a : cx)
        if (type_of(compose(a.inverse(), omega)) == y) ++c;
      if (c != 0) terms.emplace(z, c);
    }
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_brute_product)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_enumerate_group(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    enumerate_group(3, n, [&](const BlockPermutation&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate_group)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

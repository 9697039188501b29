#include "bkn/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "bkn/error.hpp"

namespace bkn {

namespace {

// All S_k elements of cycle type rho, lexicographically by one-line form.
std::vector<Perm> class_in_sk(int k, const Partition& rho) {
  std::vector<Perm> out;
  std::vector<int> img(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) img[i] = i + 1;
  do {
    Perm p{std::vector<int>(img)};
    if (p.cycle_type() == rho) out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Perm least_of_type(int k, const Partition& rho) {
  std::vector<int> img(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) img[i] = i + 1;
  do {
    Perm p{std::vector<int>(img)};
    if (p.cycle_type() == rho) return p;
  } while (std::next_permutation(img.begin(), img.end()));
  fail(errc::wrong_k, "no element of cycle type " + rho.to_string() +
                          " in the symmetric group on " + std::to_string(k) +
                          " points");
}

}  // namespace

std::vector<ClassType> enumerate_class_types(int k, int n) {
  if (n < 0) fail(errc::parse_error, "n must be nonnegative");
  const std::vector<Partition> keys = enumerate_partitions(k);
  std::vector<ClassType> out;
  std::vector<Partition> slots(keys.size());
  std::function<void(size_t, int)> rec = [&](size_t slot, int remaining) {
    if (slot + 1 == slots.size()) {
      for (const Partition& p : enumerate_partitions(remaining)) {
        slots[slot] = p;
        out.emplace_back(k, slots);
      }
      return;
    }
    for (int s = remaining; s >= 0; --s)
      for (const Partition& p : enumerate_partitions(s)) {
        slots[slot] = p;
        rec(slot + 1, remaining - s);
      }
  };
  rec(0, n);
  return out;
}

BigInt class_size(const ClassType& x) {
  BigInt denom = 1;
  for (size_t i = 0; i < x.slot_keys().size(); ++i) {
    denom *= z(x.slots()[i]);
    denom *= ipow(z(x.slot_keys()[i]), x.slots()[i].length());
  }
  return exact_div(factorial(x.n()) * ipow(factorial(x.k()), x.n()), denom);
}

BigInt class_size_k2(const Partition& lambda, const Partition& delta) {
  const long long n = lambda.size() + delta.size();
  return exact_div(ipow(2, n) * factorial(n),
                   ipow(2, lambda.length() + delta.length()) * z(lambda) * z(delta));
}

BigInt class_size_k3(const Partition& alpha, const Partition& beta,
                     const Partition& gamma) {
  const long long n = alpha.size() + beta.size() + gamma.size();
  return exact_div(ipow(2, n - alpha.length() - beta.length()) *
                       ipow(3, n - alpha.length() - gamma.length()) * factorial(n),
                   z(alpha) * z(beta) * z(gamma));
}

std::pair<Partition, Partition> k2_view(const ClassType& x) {
  if (x.k() != 2)
    fail(errc::wrong_k, "k2 view of a class type with k=" + std::to_string(x.k()));
  return {x.slot(Partition({1, 1})), x.slot(Partition({2}))};
}

std::tuple<Partition, Partition, Partition> k3_view(const ClassType& x) {
  if (x.k() != 3)
    fail(errc::wrong_k, "k3 view of a class type with k=" + std::to_string(x.k()));
  return {x.slot(Partition({1, 1, 1})), x.slot(Partition({2, 1})),
          x.slot(Partition({3}))};
}

ProperClassFamily::ProperClassFamily(ClassType x) : x_(std::move(x)) {
  if (!x_.is_proper())
    fail(errc::not_proper, "fixed-block slot of " + x_.to_string() +
                               " has trivial cycles; strip them first");
}

ProperClassFamily proper_family(const ClassType& x) {
  const Partition ones(std::vector<int>(static_cast<size_t>(x.k()), 1));
  return ProperClassFamily(x.with_slot(ones, proper_part(x.slot(ones))));
}

ClassType pad(const ProperClassFamily& x, int n) {
  if (n < x.min_n())
    fail(errc::too_small, "cannot pad " + x.base().to_string() + " of size " +
                              std::to_string(x.min_n()) + " to n=" +
                              std::to_string(n));
  const Partition ones(std::vector<int>(static_cast<size_t>(x.k()), 1));
  const Partition filler(std::vector<int>(static_cast<size_t>(n - x.min_n()), 1));
  return x.base().with_slot(ones, union_of(x.base().slot(ones), filler));
}

BigInt extended_class_size(const ProperClassFamily& x, int n) {
  if (n < x.min_n())
    fail(errc::too_small, "no class of size family " + x.base().to_string() +
                              " below n=" + std::to_string(x.min_n()));
  const Partition ones(std::vector<int>(static_cast<size_t>(x.k()), 1));
  const Partition& fixed_slot = x.base().slot(ones);
  BigInt denom = z(fixed_slot) * factorial(n - x.min_n());
  for (size_t i = 0; i < x.base().slot_keys().size(); ++i) {
    if (x.base().slot_keys()[i] == ones) continue;
    denom *= z(x.base().slots()[i]);
    denom *= ipow(z(x.base().slot_keys()[i]), x.base().slots()[i].length());
  }
  return exact_div(
      factorial(n) * ipow(factorial(x.k()), x.min_n() - fixed_slot.length()),
      denom);
}

BlockPermutation representative(const ClassType& x) {
  const int k = x.k(), n = x.n();
  std::vector<int> img(static_cast<size_t>(k) * n);
  for (int v = 1; v <= k * n; ++v) img[v - 1] = v;
  int next_block = 1;
  for (size_t s = 0; s < x.slot_keys().size(); ++s) {
    if (x.slots()[s].empty()) continue;
    const Perm closing = least_of_type(k, x.slot_keys()[s]);
    for (int r : x.slots()[s].parts()) {
      const int b0 = next_block;
      next_block += r;
      for (int t = 0; t < r - 1; ++t)  // b0+t -> b0+t+1, identity local
        for (int c = 1; c <= k; ++c) img[k * (b0 + t - 1) + c - 1] = k * (b0 + t) + c;
      for (int c = 1; c <= k; ++c)     // closing edge b0+r-1 -> b0
        img[k * (b0 + r - 2) + c - 1] = k * (b0 - 1) + closing(c);
    }
  }
  return BlockPermutation::from_one_line(k, std::move(img));
}

void class_elements(const ClassType& x,
                    const std::function<bool(const BlockPermutation&)>& visit,
                    Budget budget) {
  const BigInt size = class_size(x);
  if (size > budget.visits)
    fail(errc::budget_exceeded, "class size " + size.str() +
                                    " exceeds enumeration budget " +
                                    std::to_string(budget.visits));
  const int k = x.k(), n = x.n();

  struct Job {
    size_t slot;
    int r;
  };
  std::vector<Job> jobs;
  for (size_t s = 0; s < x.slots().size(); ++s)
    for (int r : x.slots()[s].parts()) jobs.push_back({s, r});

  std::vector<std::vector<int>> sk;  // all of S_k, lex one-line forms
  {
    std::vector<int> img(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) img[i] = i + 1;
    do sk.push_back(img);
    while (std::next_permutation(img.begin(), img.end()));
  }
  std::vector<std::vector<Perm>> closers(x.slot_keys().size());
  for (const Job& j : jobs)
    if (closers[j.slot].empty())
      closers[j.slot] = class_in_sk(k, x.slot_keys()[j.slot]);

  std::vector<std::vector<int>> cycles(jobs.size());
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  std::vector<int> img(static_cast<size_t>(k) * n);
  bool stop = false;

  auto put_edge = [&](int src, int dst, const std::vector<int>& tau) {
    for (int c = 1; c <= k; ++c) img[k * (src - 1) + c - 1] = k * (dst - 1) + tau[c - 1];
  };

  // Fill the local maps of cycles c, c+1, ... and emit; free maps on all
  // edges but the last, whose map makes the cycle composite land in the
  // slot's class.
  std::function<void(size_t)> fill_cycle = [&](size_t c) {
    if (stop) return;
    if (c == cycles.size()) {
      if (!visit(BlockPermutation::from_one_line(k, img))) stop = true;
      return;
    }
    const auto& blocks = cycles[c];
    const int r = static_cast<int>(blocks.size());
    std::function<void(int, const Perm&)> edges = [&](int t, const Perm& prod) {
      if (stop) return;
      if (t == r - 1) {
        const Perm prod_inv = prod.inverse();
        for (const Perm& h : closers[jobs[c].slot]) {
          put_edge(blocks[r - 1], blocks[0], compose(h, prod_inv).images());
          fill_cycle(c + 1);
          if (stop) return;
        }
        return;
      }
      for (const auto& tau : sk) {
        put_edge(blocks[t], blocks[t + 1], tau);
        edges(t + 1, compose(Perm(tau), prod));
        if (stop) return;
      }
    };
    edges(0, Perm::identity(k));
  };

  // Split the blocks into cycles matching the jobs; identical jobs take
  // increasing leaders so each unordered assignment appears once.
  std::function<void(size_t, int)> choose_cycles = [&](size_t j, int prev_leader) {
    if (stop) return;
    if (j == jobs.size()) {
      fill_cycle(0);
      return;
    }
    const int r = jobs[j].r;
    const bool same_job =
        j > 0 && jobs[j - 1].slot == jobs[j].slot && jobs[j - 1].r == r;
    for (int leader = same_job ? prev_leader + 1 : 1; leader <= n; ++leader) {
      if (used[leader]) continue;
      used[leader] = 1;
      cycles[j].assign(1, leader);
      std::function<void(int)> pick = [&](int picked) {
        if (stop) return;
        if (picked == r - 1) {
          choose_cycles(j + 1, leader);
          return;
        }
        for (int b = leader + 1; b <= n; ++b) {
          if (used[b]) continue;
          used[b] = 1;
          cycles[j].push_back(b);
          pick(picked + 1);
          cycles[j].pop_back();
          used[b] = 0;
          if (stop) return;
        }
      };
      pick(0);
      used[leader] = 0;
      if (stop) return;
    }
  };
  choose_cycles(0, 0);
}

nlohmann::ordered_json class_record_json(const ClassType& x) {
  nlohmann::ordered_json type = nlohmann::ordered_json::object();
  for (size_t i = x.slot_keys().size(); i-- > 0;) {
    if (x.slots()[i].empty()) continue;
    type[x.slot_keys()[i].to_string()] = x.slots()[i].to_string();
  }
  nlohmann::ordered_json out;
  out["k"] = x.k();
  out["n"] = x.n();
  out["type"] = std::move(type);
  out["size"] = class_size(x).str();
  return out;
}

}  // namespace bkn

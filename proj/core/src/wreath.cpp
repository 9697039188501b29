#include "bkn/wreath.hpp"

#include <algorithm>
#include <sstream>

#include "bkn/error.hpp"

namespace bkn {

WreathElement::WreathElement(int k, std::vector<Perm> locals, Perm outer)
    : k_(k), locals_(std::move(locals)), outer_(std::move(outer)) {
  if (static_cast<int>(locals_.size()) != outer_.degree())
    fail(errc::dimension_mismatch,
         "need one local permutation per block: got " +
             std::to_string(locals_.size()) + " for n=" +
             std::to_string(outer_.degree()));
  for (const Perm& s : locals_)
    if (s.degree() != k_)
      fail(errc::dimension_mismatch,
           "local permutation degree " + std::to_string(s.degree()) +
               " does not match k=" + std::to_string(k_));
}

std::string WreathElement::to_string() const {
  std::ostringstream out;
  out << "((";
  for (size_t i = 0; i < locals_.size(); ++i) {
    if (i) out << ", ";
    out << locals_[i].one_line();
  }
  out << "); " << outer_.one_line() << ")";
  return out.str();
}

std::string WreathElement::cycle_form() const {
  std::ostringstream out;
  out << "((";
  for (size_t i = 0; i < locals_.size(); ++i) {
    if (i) out << ", ";
    out << (locals_[i].is_identity() ? "1" : locals_[i].cycle_string());
  }
  out << "); " << outer_.cycle_string() << ")";
  return out.str();
}

WreathElement psi(const BlockPermutation& g) {
  std::vector<Perm> locals;
  locals.reserve(static_cast<size_t>(g.n()));
  for (int i = 1; i <= g.n(); ++i) locals.push_back(g.restriction(i));
  return WreathElement(g.k(), std::move(locals), g.blocks_permutation());
}

BlockPermutation phi(const WreathElement& w) {
  const int k = w.k(), n = w.n();
  std::vector<int> img(static_cast<size_t>(k) * n);
  for (int a = 1; a <= n; ++a) {
    const int pa = w.outer()(a);
    const Perm& s = w.local(pa);
    for (int b = 1; b <= k; ++b) img[k * (a - 1) + b - 1] = k * (pa - 1) + s(b);
  }
  return BlockPermutation(k, Perm(std::move(img)));
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b) {
  if (a.k() != b.k() || a.n() != b.n())
    fail(errc::dimension_mismatch, "wreath product factors live in different groups");
  const Perm p_inv = a.outer().inverse();
  std::vector<Perm> locals;
  locals.reserve(static_cast<size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i)
    locals.push_back(compose(a.local(i), b.local(p_inv(i))));
  return WreathElement(a.k(), std::move(locals), compose(a.outer(), b.outer()));
}

WreathElement wreath_inverse(const WreathElement& a) {
  std::vector<Perm> locals;
  locals.reserve(static_cast<size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i)
    locals.push_back(a.local(a.outer()(i)).inverse());
  return WreathElement(a.k(), std::move(locals), a.outer().inverse());
}

WreathElement wreath_identity(int k, int n) {
  return WreathElement(k, std::vector<Perm>(static_cast<size_t>(n), Perm::identity(k)),
                       Perm::identity(n));
}

BigInt group_order(int k, int n) {
  return ipow(factorial(k), n) * factorial(n);
}

void enumerate_group(int k, int n,
                     const std::function<bool(const BlockPermutation&)>& visit,
                     Budget budget) {
  const BigInt order = group_order(k, n);
  if (order > budget.visits)
    fail(errc::budget_exceeded, "group order " + order.str() +
                                    " exceeds enumeration budget " +
                                    std::to_string(budget.visits));
  std::vector<int> outer(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) outer[i] = i + 1;
  std::vector<int> local_id(static_cast<size_t>(k));
  for (int b = 0; b < k; ++b) local_id[b] = b + 1;
  do {
    std::vector<std::vector<int>> locals(static_cast<size_t>(n), local_id);
    while (true) {
      std::vector<Perm> ls;
      ls.reserve(static_cast<size_t>(n));
      for (const auto& l : locals) ls.emplace_back(l);
      if (!visit(phi(WreathElement(k, std::move(ls), Perm(outer))))) return;
      // odometer over the local one-line forms, last block fastest;
      // next_permutation leaves an exhausted block sorted, i.e. reset
      int i = n - 1;
      while (i >= 0 && !std::next_permutation(locals[i].begin(), locals[i].end()))
        --i;
      if (i < 0) break;
    }
  } while (std::next_permutation(outer.begin(), outer.end()));
}

}  // namespace bkn

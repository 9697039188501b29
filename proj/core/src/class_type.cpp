#include "bkn/class_type.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bkn/error.hpp"

namespace bkn {

ClassType::ClassType(int k) : k_(k), keys_(enumerate_partitions(k)) {
  if (k < 1) fail(errc::parse_error, "k must be positive");
  slots_.resize(keys_.size());
}

ClassType::ClassType(int k, std::vector<Partition> slots_in_canonical_order)
    : ClassType(k) {
  if (slots_in_canonical_order.size() != keys_.size())
    fail(errc::dimension_mismatch,
         "expected one slot per partition of k=" + std::to_string(k));
  slots_ = std::move(slots_in_canonical_order);
  n_ = 0;
  for (const Partition& p : slots_) n_ += p.size();
}

const Partition& ClassType::slot(const Partition& rho) const {
  for (size_t i = 0; i < keys_.size(); ++i)
    if (keys_[i] == rho) return slots_[i];
  fail(errc::wrong_k, rho.to_string() + " is not a partition of k=" + std::to_string(k_));
}

ClassType ClassType::with_slot(const Partition& rho, Partition value) const {
  ClassType out = *this;
  for (size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] == rho) {
      out.n_ += value.size() - out.slots_[i].size();
      out.slots_[i] = std::move(value);
      return out;
    }
  }
  fail(errc::wrong_k, rho.to_string() + " is not a partition of k=" + std::to_string(k_));
}

bool ClassType::is_proper() const {
  return slots_.back().multiplicity(1) == 0;  // last key is (1^k)
}

std::string ClassType::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (size_t i = keys_.size(); i-- > 0;) {  // ascending: reverse canonical order
    if (slots_[i].empty()) continue;
    if (!first) out << "; ";
    first = false;
    out << keys_[i].to_string() << ':' << slots_[i].to_string();
  }
  out << '}';
  return out.str();
}

ClassType ClassType::parse(int k, const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_partition = [&]() -> Partition {
    skip_ws();
    if (i >= text.size() || text[i] != '[')
      fail(errc::parse_error, "expected '[' in class type: " + text);
    size_t start = i;
    while (i < text.size() && text[i] != ']') ++i;
    if (i >= text.size())
      fail(errc::parse_error, "unterminated partition in class type: " + text);
    ++i;
    return Partition::parse(text.substr(start, i - start));
  };
  skip_ws();
  if (i >= text.size() || text[i] != '{')
    fail(errc::parse_error, "class type must start with '{': " + text);
  ++i;
  ClassType out(k);
  std::vector<char> assigned(out.slot_keys().size(), 0);
  skip_ws();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    while (true) {
      Partition rho = read_partition();
      if (rho.size() != k)
        fail(errc::parse_error, "slot key " + rho.to_string() +
                                    " is not a partition of k=" + std::to_string(k));
      skip_ws();
      if (i >= text.size() || text[i] != ':')
        fail(errc::parse_error, "expected ':' in class type: " + text);
      ++i;
      Partition value = read_partition();
      const auto& keys = out.slot_keys();
      size_t idx = std::find(keys.begin(), keys.end(), rho) - keys.begin();
      if (assigned[idx])
        fail(errc::parse_error, "slot " + rho.to_string() + " assigned twice");
      assigned[idx] = 1;
      out = out.with_slot(rho, std::move(value));
      skip_ws();
      if (i < text.size() && text[i] == ';') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      fail(errc::parse_error, "expected ';' or '}' in class type: " + text);
    }
  }
  skip_ws();
  if (i != text.size())
    fail(errc::parse_error, "trailing characters after class type: " + text);
  return out;
}

ClassType type_of(const BlockPermutation& g) {
  const Perm& p = g.blocks_permutation();
  std::vector<std::vector<int>> slot_parts(enumerate_partitions(g.k()).size());
  ClassType out(g.k());
  const auto& keys = out.slot_keys();
  for (const auto& cyc : p.cycles()) {
    // composite of the normalized restrictions along the cycle, first
    // restriction outermost
    Perm composite = g.restriction(cyc[0]);
    for (size_t t = cyc.size(); t-- > 1;)
      composite = compose(composite, g.restriction(cyc[t]));
    const Partition rho = composite.cycle_type();
    size_t idx = std::find(keys.begin(), keys.end(), rho) - keys.begin();
    slot_parts[idx].push_back(static_cast<int>(cyc.size()));
  }
  std::vector<Partition> slots;
  slots.reserve(slot_parts.size());
  for (auto& parts : slot_parts) slots.emplace_back(std::move(parts));
  return ClassType(g.k(), std::move(slots));
}

}  // namespace bkn

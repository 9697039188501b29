#include "bkn/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "bkn/error.hpp"

namespace bkn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) fail(errc::parse_error, "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  for (int p : parts_) size_ += p;
}

int Partition::multiplicity(int part) const noexcept {
  int m = 0;
  for (int p : parts_)
    if (p == part) ++m;
  return m;
}

bool Partition::operator<(const Partition& o) const noexcept {
  if (size_ != o.size_) return size_ < o.size_;
  return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                      parts_.begin(), parts_.end());
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    fail(errc::parse_error, "partition must start with '[': " + text);
  ++i;
  std::vector<int> parts;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) fail(errc::parse_error, "expected part in partition: " + text);
      long v = std::stol(text.substr(start, i - start));
      if (v <= 0 || v > 1'000'000'000)
        fail(errc::parse_error, "partition part out of range: " + text);
      parts.push_back(static_cast<int>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail(errc::parse_error, "expected ',' or ']' in partition: " + text);
    }
  }
  skip_ws();
  if (i != text.size())
    fail(errc::parse_error, "trailing characters after partition: " + text);
  return Partition(std::move(parts));
}

BigInt z(const Partition& p) {
  BigInt r = 1;
  const auto& parts = p.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    long long mult = static_cast<long long>(j - i);
    r *= ipow(parts[i], mult);
    r *= factorial(mult);
    i = j;
  }
  return r;
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

Partition subtract(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  for (int p : b.parts()) {
    auto it = std::find(parts.begin(), parts.end(), p);
    if (it == parts.end())
      fail(errc::not_subtractable,
           "part " + std::to_string(p) + " of " + b.to_string() +
               " does not occur often enough in " + a.to_string(),
           p);
    parts.erase(it);
  }
  return Partition(std::move(parts));
}

Partition proper_part(const Partition& p) {
  std::vector<int> parts;
  for (int v : p.parts())
    if (v != 1) parts.push_back(v);
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int m) {
  if (m < 0) fail(errc::parse_error, "cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  // lexicographic descent: always place the largest part allowed next
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

}  // namespace bkn

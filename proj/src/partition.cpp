#include "altgraph/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "altgraph/numbers.hpp"

namespace altgraph {

namespace {

void check_canonical(int n, const std::vector<std::pair<int, int>>& parts) {
  long long sum = 0;
  int prev = 0;
  for (const auto& [m, t] : parts) {
    if (m <= prev) throw std::invalid_argument("parts must strictly increase");
    if (t < 1) throw std::invalid_argument("multiplicities must be >= 1");
    prev = m;
    sum += static_cast<long long>(m) * t;
  }
  if (n < 1 || sum != n)
    throw std::invalid_argument("parts do not sum to a positive n");
}

}  // namespace

PartitionType PartitionType::trivial(int n) {
  if (n < 1) throw std::invalid_argument("trivial: n must be positive");
  PartitionType t;
  t.n_ = n;
  t.parts_ = {{1, n}};
  return t;
}

PartitionType PartitionType::from_parts(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("from_parts: empty partition");
  std::sort(parts.begin(), parts.end());
  PartitionType t;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("from_parts: parts must be >= 1");
    if (!t.parts_.empty() && t.parts_.back().first == p) {
      ++t.parts_.back().second;
    } else {
      t.parts_.emplace_back(p, 1);
    }
    t.n_ += p;
  }
  return t;
}

PartitionType PartitionType::from_run_length(
    std::vector<std::pair<int, int>> parts_with_multiplicity) {
  PartitionType t;
  t.parts_ = std::move(parts_with_multiplicity);
  for (const auto& [m, mult] : t.parts_)
    t.n_ += m * mult;
  check_canonical(t.n_, t.parts_);
  return t;
}

int PartitionType::total_parts() const {
  int r = 0;
  for (const auto& [m, t] : parts_) r += t;
  return r;
}

bool PartitionType::is_trivial() const {
  return parts_.size() == 1 && parts_[0].first == 1;
}

std::uint64_t PartitionType::order() const {
  std::uint64_t o = 1;
  for (const auto& [m, t] : parts_) o = lcm_checked(o, static_cast<std::uint64_t>(m));
  return o;
}

int PartitionType::gcd_parts() const {
  int g = 0;
  for (const auto& [m, t] : parts_) g = std::gcd(g, m);
  return g;
}

PartitionType PartitionType::power(std::uint64_t a) const {
  if (a == 0) return trivial(n_);
  std::map<int, int> acc;
  for (const auto& [m, t] : parts_) {
    const int g = static_cast<int>(std::gcd(a, static_cast<std::uint64_t>(m)));
    acc[m / g] += t * g;
  }
  PartitionType r;
  r.n_ = n_;
  r.parts_.assign(acc.begin(), acc.end());
  return r;
}

bool PartitionType::is_proper_power_exponent(std::uint64_t a) const {
  const std::uint64_t o = order();
  const std::uint64_t g = std::gcd(a, o);
  return g != 1 && g != o;
}

std::vector<PartitionType> PartitionType::proper_powers() const {
  std::vector<PartitionType> result;
  const std::uint64_t o = order();
  for (std::uint64_t d : divisors_of(o)) {
    if (d == 1 || d == o) continue;
    result.push_back(power(d));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool PartitionType::is_alternating() const {
  return (n_ - total_parts()) % 2 == 0;
}

std::string PartitionType::to_string() const {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& [m, t] : parts_) {
    if (!first) out << ',';
    first = false;
    out << m;
    if (t > 1) out << '^' << t;
  }
  out << ']';
  return out.str();
}

PartitionType PartitionType::parse(const std::string& text) {
  const auto fail = [&]() -> void {
    throw std::invalid_argument("bad partition literal: " + text);
  };
  std::size_t i = 0;
  const auto read_int = [&]() -> int {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) fail();
    return std::stoi(text.substr(start, i - start));
  };
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') fail();
  i = 1;
  std::vector<std::pair<int, int>> parts;
  while (true) {
    const int m = read_int();
    int t = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      t = read_int();
    }
    parts.emplace_back(m, t);
    if (i >= text.size()) fail();
    if (text[i] == ']') {
      if (i + 1 != text.size()) fail();
      break;
    }
    if (text[i] != ',') fail();
    ++i;
  }
  return from_run_length(std::move(parts));
}

std::strong_ordering PartitionType::operator<=>(
    const PartitionType& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  // Compare the expanded ascending part sequences without materializing.
  std::size_t i = 0, j = 0;
  int li = 0, lj = 0;  // how many copies of the current run were consumed
  while (i < parts_.size() && j < other.parts_.size()) {
    if (auto c = parts_[i].first <=> other.parts_[j].first; c != 0) return c;
    const int a = parts_[i].second - li;
    const int b = other.parts_[j].second - lj;
    if (a < b) {
      ++i;
      li = 0;
      lj += a;
    } else if (b < a) {
      ++j;
      lj = 0;
      li += b;
    } else {
      ++i;
      ++j;
      li = lj = 0;
    }
  }
  return (i != parts_.size()) <=> (j != other.parts_.size());
}

namespace {

void enumerate_rec(int remaining, int min_part,
                   std::vector<std::pair<int, int>>& stack,
                   std::vector<PartitionType>& out) {
  if (remaining == 0) {
    out.push_back(PartitionType::from_run_length(stack));
    return;
  }
  for (int m = min_part; m <= remaining; ++m) {
    for (int t = 1; m * t <= remaining; ++t) {
      stack.emplace_back(m, t);
      enumerate_rec(remaining - m * t, m + 1, stack, out);
      stack.pop_back();
    }
  }
}

}  // namespace

std::vector<PartitionType> enumerate_types(int n, bool alternating_only,
                                           bool exclude_trivial) {
  if (n < 1) throw std::invalid_argument("enumerate_types: n must be >= 1");
  std::vector<PartitionType> all;
  std::vector<std::pair<int, int>> stack;
  enumerate_rec(n, 1, stack, all);
  std::sort(all.begin(), all.end());
  std::vector<PartitionType> result;
  result.reserve(all.size());
  for (auto& t : all) {
    if (exclude_trivial && t.is_trivial()) continue;
    if (alternating_only && !t.is_alternating()) continue;
    result.push_back(std::move(t));
  }
  return result;
}

}  // namespace altgraph

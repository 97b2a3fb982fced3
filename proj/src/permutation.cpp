#include "altgraph/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "altgraph/numbers.hpp"

namespace altgraph {

Permutation::Permutation(int degree) {
  if (degree < 1 || degree > 255)
    throw std::invalid_argument("degree must be in 1..255");
  table_.resize(degree);
  std::iota(table_.begin(), table_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > 255) throw std::invalid_argument("degree must be in 1..255");
  std::vector<bool> seen(n, false);
  Permutation p;
  p.table_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("image table is not a bijection of {1..n}");
    seen[v - 1] = true;
    p.table_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_table(std::vector<std::uint8_t> table) {
  Permutation p;
  p.table_ = std::move(table);
  return p;
}

int Permutation::image_of(int point) const {
  if (point < 1 || point > degree())
    throw std::out_of_range("point outside {1..n}");
  return table_[point - 1] + 1;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (table_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::images() const {
  std::vector<int> im(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) im[i] = table_[i] + 1;
  return im;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint8_t> t(a.degree());
  const auto& ta = a.table();
  const auto& tb = b.table();
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = ta[tb[i]];
  return Permutation::from_table(std::move(t));
}

Permutation inverse(const Permutation& x) {
  std::vector<std::uint8_t> t(x.degree());
  const auto& tx = x.table();
  for (std::size_t i = 0; i < t.size(); ++i) t[tx[i]] = static_cast<std::uint8_t>(i);
  return Permutation::from_table(std::move(t));
}

Permutation power(const Permutation& x, std::uint64_t k) {
  const int n = x.degree();
  const auto& t = x.table();
  std::vector<std::uint8_t> result(n);
  std::vector<bool> done(n, false);
  std::vector<std::uint8_t> cycle;
  for (int start = 0; start < n; ++start) {
    if (done[start]) continue;
    cycle.clear();
    int p = start;
    do {
      cycle.push_back(static_cast<std::uint8_t>(p));
      done[p] = true;
      p = t[p];
    } while (p != start);
    const std::size_t m = cycle.size();
    const std::size_t shift = static_cast<std::size_t>(k % m);
    for (std::size_t j = 0; j < m; ++j)
      result[cycle[j]] = cycle[(j + shift) % m];
  }
  return Permutation::from_table(std::move(result));
}

PartitionType cycle_type(const Permutation& x) {
  const int n = x.degree();
  const auto& t = x.table();
  std::vector<bool> done(n, false);
  std::vector<int> sizes;
  for (int start = 0; start < n; ++start) {
    if (done[start]) continue;
    int len = 0;
    int p = start;
    do {
      done[p] = true;
      ++len;
      p = t[p];
    } while (p != start);
    sizes.push_back(len);
  }
  return PartitionType::from_parts(std::move(sizes));
}

std::uint64_t order_of(const Permutation& x) {
  const int n = x.degree();
  const auto& t = x.table();
  std::vector<bool> done(n, false);
  std::uint64_t o = 1;
  for (int start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    int p = start;
    do {
      done[p] = true;
      ++len;
      p = t[p];
    } while (p != start);
    o = lcm_checked(o, len);
  }
  return o;
}

bool is_even(const Permutation& x) {
  const int n = x.degree();
  const auto& t = x.table();
  std::vector<bool> done(n, false);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (done[start]) continue;
    ++cycles;
    int p = start;
    do {
      done[p] = true;
      p = t[p];
    } while (p != start);
  }
  return (n - cycles) % 2 == 0;
}

std::vector<std::vector<int>> cycles_of(const Permutation& x) {
  const int n = x.degree();
  const auto& t = x.table();
  std::vector<bool> done(n, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < n; ++start) {
    if (done[start] || t[start] == start) {
      done[start] = true;
      continue;
    }
    std::vector<int> cycle;
    int p = start;
    do {
      done[p] = true;
      cycle.push_back(p + 1);
      p = t[p];
    } while (p != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::string to_cycle_string(const Permutation& x) {
  const auto cycles = cycles_of(x);
  if (cycles.empty()) return "id";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j) out << ' ';
      out << cycle[j];
    }
    out << ')';
  }
  return out.str();
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1 || degree > 255)
    throw std::invalid_argument("degree must be in 1..255");
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  const auto fail = [&]() -> void {
    throw std::invalid_argument("bad cycle notation: " + text);
  };
  skip_ws();
  if (text.compare(i, 2, "id") == 0) {
    i += 2;
    skip_ws();
    if (i != text.size()) fail();
    return Permutation(degree);
  }
  std::vector<std::uint8_t> t(degree);
  std::iota(t.begin(), t.end(), std::uint8_t{0});
  std::vector<bool> used(degree, false);
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') fail();
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start) fail();
      const int p = std::stoi(text.substr(start, i - start));
      if (p < 1 || p > degree || used[p - 1]) fail();
      used[p - 1] = true;
      cycle.push_back(p);
    }
    if (cycle.size() < 2) fail();
    for (std::size_t j = 0; j < cycle.size(); ++j)
      t[cycle[j] - 1] =
          static_cast<std::uint8_t>(cycle[(j + 1) % cycle.size()] - 1);
    any = true;
    skip_ws();
  }
  if (!any) fail();
  return Permutation::from_table(std::move(t));
}

std::uint64_t alternating_count(int n) {
  if (n < 1) throw std::invalid_argument("alternating_count: n must be >= 1");
  if (n <= 2) return 1;
  return factorial64(static_cast<unsigned>(n)) / 2;
}

std::uint64_t even_rank(const Permutation& x) {
  const int n = x.degree();
  if (n > 20) throw std::overflow_error("even_rank: degree too large");
  const auto& t = x.table();
  // Lehmer digits of the first n-2 positions; the last two are forced
  // by parity, so among even permutations the prefix determines the rank.
  std::uint64_t rank = 0;
  for (int i = 0; i + 2 < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (t[j] < t[i]) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) *
            (factorial64(static_cast<unsigned>(n - 1 - i)) / 2);
  }
  return rank;
}

Permutation even_unrank(int n, std::uint64_t rank) {
  if (n < 1 || n > 20) throw std::invalid_argument("even_unrank: bad degree");
  std::vector<int> digits(n, 0);
  std::uint64_t parity = 0;
  for (int i = 0; i + 2 < n; ++i) {
    const std::uint64_t h = factorial64(static_cast<unsigned>(n - 1 - i)) / 2;
    const std::uint64_t d = rank / h;
    if (d > static_cast<std::uint64_t>(n - 1 - i))
      throw std::out_of_range("even_unrank: rank too large");
    digits[i] = static_cast<int>(d);
    rank %= h;
    parity += d;
  }
  if (rank != 0) throw std::out_of_range("even_unrank: rank too large");
  if (n >= 2) digits[n - 2] = static_cast<int>(parity % 2);
  std::vector<std::uint8_t> avail(n);
  std::iota(avail.begin(), avail.end(), std::uint8_t{0});
  std::vector<std::uint8_t> t(n);
  for (int i = 0; i < n; ++i) {
    t[i] = avail[digits[i]];
    avail.erase(avail.begin() + digits[i]);
  }
  return Permutation::from_table(std::move(t));
}

}  // namespace altgraph

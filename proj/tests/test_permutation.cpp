#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "altgraph/alternating.hpp"
#include "altgraph/permutation.hpp"

using namespace altgraph;

namespace {

Permutation cyc(const std::string& text, int degree) {
  return parse_cycles(text, degree);
}

// Oracle for powers: k-fold composition.
Permutation power_by_composition(const Permutation& x, std::uint64_t k) {
  Permutation acc(x.degree());
  for (std::uint64_t i = 0; i < k; ++i) acc = compose(acc, x);
  return acc;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

}  // namespace

TEST_SUITE_BEGIN("permutation");

TEST_CASE("compose") {
  const Permutation x = cyc("(1 3 2)", 4);
  CHECK(compose(Permutation(4), x) == x);
  CHECK(compose(cyc("(1 2)", 2), cyc("(1 2)", 2)) == Permutation(2));
  CHECK(compose(cyc("(1 2 3)", 3), cyc("(1 2 3)", 3)) == cyc("(1 3 2)", 3));
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)),
                  std::invalid_argument);
}

TEST_CASE("power") {
  const Permutation x = cyc("(1 2 3 4)(5 6)", 6);
  CHECK(power(x, order_of(x)) == Permutation(6));
  CHECK(power(x, 2) == cyc("(1 3)(2 4)", 6));
  CHECK(power(x, 0) == Permutation(6));
  const Permutation nine = cyc("(1 2 3 4 5 6 7 8 9)", 9);
  CHECK(power(nine, 3) == cyc("(1 4 7)(2 5 8)(3 6 9)", 9));
  CHECK(power(nine, 3) == power_by_composition(nine, 3));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation p = random_permutation(1 + rng() % 9, rng);
    const std::uint64_t k = rng() % 25;
    CHECK(power(p, k) == power_by_composition(p, k));
  }
}

TEST_CASE("cycle type") {
  CHECK(cycle_type(Permutation(5)) == PartitionType::trivial(5));
  CHECK(cycle_type(cyc("(1 2)(3 4)", 8)) == PartitionType::parse("[1^4,2^2]"));
  CHECK(cycle_type(cyc("(1 2 3 4)(5 6 7 8)", 8)) ==
        PartitionType::parse("[4^2]"));
}

TEST_CASE("order") {
  CHECK(order_of(Permutation(3)) == 1);
  CHECK(order_of(cyc("(1 2)(3 4 5)", 5)) == 6);
  for_each_alternating(5, [](const Permutation& x) {
    std::uint64_t k = 1;
    Permutation y = x;
    while (!y.is_identity()) {
      y = compose(y, x);
      ++k;
    }
    CHECK(order_of(x) == k);
  });
}

TEST_CASE("parity") {
  CHECK(is_even(Permutation(4)));
  CHECK_FALSE(is_even(cyc("(1 2)", 2)));
  CHECK(is_even(cyc("(1 2)(3 4)", 4)));
}

TEST_CASE("cycle notation round trip") {
  CHECK(to_cycle_string(Permutation(6)) == "id");
  CHECK(to_cycle_string(cyc("(3 4)(1 2)", 5)) == "(1 2)(3 4)");
  CHECK(parse_cycles("id", 4) == Permutation(4));
  CHECK_THROWS_AS(parse_cycles("(1 2", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 5)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("()", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(3)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("", 4), std::invalid_argument);
  CHECK(parse_cycles("  (2 3) (1 4) ", 5) == parse_cycles("(1 4)(2 3)", 5));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation p = random_permutation(1 + rng() % 9, rng);
    CHECK(parse_cycles(to_cycle_string(p), p.degree()) == p);
  }
}

TEST_CASE("enumeration counts and order") {
  CHECK(alternating_count(1) == 1);
  CHECK(alternating_count(2) == 1);
  CHECK(alternating_count(3) == 3);
  CHECK(alternating_count(5) == 60);
  CHECK(alternating_count(9) == 181440);

  int count = 0;
  Permutation previous;
  for_each_alternating(3, [&](const Permutation& x) {
    CHECK(is_even(x));
    if (count > 0) CHECK(previous < x);  // lexicographic stream order
    previous = x;
    ++count;
  });
  CHECK(count == 3);

  std::size_t total = 0;
  for_each_alternating(9, [&](const Permutation&) { ++total; });
  CHECK(total == 181440);
}

TEST_CASE("enumeration capacity ceiling") {
  CHECK_THROWS_WITH_AS(AlternatingStream(11), doctest::Contains("ceiling 10"),
                       CapacityError);
  BuildLimits raised;
  raised.brute_force_ceiling = 11;
  CHECK_NOTHROW(AlternatingStream(11, raised));
}

TEST_CASE("even rank and unrank") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t expected_rank = 0;
    for_each_alternating(n, [&](const Permutation& x) {
      CHECK(even_rank(x) == expected_rank);
      CHECK(even_unrank(n, expected_rank) == x);
      ++expected_rank;
    });
    CHECK(expected_rank == alternating_count(n));
    CHECK_THROWS_AS(even_unrank(n, expected_rank), std::out_of_range);
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t r = rng() % alternating_count(9);
    CHECK(even_rank(even_unrank(9, r)) == r);
  }
}

TEST_CASE("cyclic classes") {
  const Permutation a = cyc("(1 2 3)", 5);
  const Permutation b = cyc("(1 3 2)", 5);
  CHECK(cyclic_class_of(a) == cyclic_class_of(b));
  CHECK(cyclic_class_of(a).order == 3);
  CHECK(cyclic_class_of(a).type == PartitionType::parse("[1^2,3]"));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation p = random_permutation(2 + rng() % 8, rng);
    const std::uint64_t o = order_of(p);
    const CyclicClass cls = cyclic_class_of(p);
    for (std::uint64_t k = 1; k <= o; ++k) {
      if (std::gcd(k, o) != 1) continue;
      CHECK(cyclic_class_of(power(p, k)) == cls);
    }
    // the representative generates the same subgroup
    CHECK(order_of(cls.representative) == o);
    bool found = false;
    for (std::uint64_t k = 1; k <= o; ++k)
      found |= power(cls.representative, k) == p;
    CHECK(found);
  }
}

TEST_CASE("five-cycle classes in A_5") {
  std::set<Permutation> representatives;
  for_each_alternating(5, [&](const Permutation& x) {
    if (cycle_type(x) == PartitionType::parse("[5]"))
      representatives.insert(canonical_generator(x));
  });
  CHECK(representatives.size() == 6);
}

TEST_SUITE_END();

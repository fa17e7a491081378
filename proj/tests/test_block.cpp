#include <doctest.h>

#include <random>

#include "blockfact/block.hpp"
#include "oracles.hpp"

using namespace blockfact;

TEST_CASE("cyclic group validation") {
  CHECK_THROWS_AS(CyclicGroup(0), InvalidParameter);
  CHECK_THROWS_AS(CyclicGroup(1), InvalidParameter);
  CHECK(CyclicGroup(2).order() == 2);
  CHECK(CyclicGroup(5).element_order(0) == 1);
  CHECK(CyclicGroup(5).element_order(2) == 5);
  CHECK(CyclicGroup(6).element_order(2) == 3);
  CHECK(CyclicGroup(6).element_order(3) == 2);
  CHECK(CyclicGroup(6).units() == std::vector<std::uint32_t>{1, 5});
}

TEST_CASE("parse: canonical grammar") {
  const CyclicGroup z5(5);
  const Block b = Block::parse(z5, "1^8 2 4^5");
  CHECK(b.mult() == std::vector<std::uint64_t>{0, 8, 1, 0, 5});
  CHECK(b.length() == 14);

  CHECK(Block::parse(z5, "") == Block::empty(z5));
  CHECK(Block::parse(z5, "  \t ") == Block::empty(z5));
  CHECK(Block::parse(z5, "1^8,2,4^5") == b);
  CHECK(Block::parse(z5, "4^5 2 1^8") == b);
  // repeated terms accumulate
  CHECK(Block::parse(z5, "1 1 1 2") == Block::parse(z5, "1^3 2"));

  CHECK_THROWS_AS(Block::parse(z5, "1^1"), NotZeroSum);
  CHECK_THROWS_AS(Block::parse(z5, "7^5"), ResidueOutOfRange);
  CHECK_THROWS_AS(Block::parse(z5, "5"), ResidueOutOfRange);
  CHECK_THROWS_AS(Block::parse(z5, "1^"), ParseError);
  CHECK_THROWS_AS(Block::parse(z5, "1^0 0"), ParseError);
  CHECK_THROWS_AS(Block::parse(z5, "x"), ParseError);
  CHECK_THROWS_AS(Block::parse(z5, "1^2x"), ParseError);
}

TEST_CASE("constructor validates the zero-sum condition") {
  const CyclicGroup z5(5);
  CHECK_THROWS_AS(Block(z5, {0, 1, 0, 0, 0}), NotZeroSum);
  CHECK_THROWS_AS(Block(z5, {0, 1, 1}), InvalidParameter);  // wrong size
  const Block ok(z5, {2, 0, 0, 0, 0});
  CHECK(ok.length() == 2);
}

TEST_CASE("text and serialized forms round-trip") {
  const CyclicGroup z5(5);
  const Block b = Block::parse(z5, "1^8 2 4^5");
  CHECK(b.text() == "1^8 2 4^5");
  CHECK(b.serialized() == "[5; 0, 8, 1, 0, 5]");
  CHECK(Block::from_serialized(b.serialized()) == b);
  CHECK(Block::empty(z5).text() == "");

  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const CyclicGroup g(2 + rng() % 9);
    const Block x = oracle::random_block(rng, g, 12, /*allow_zeros=*/true);
    CHECK(Block::parse(g, x.text()) == x);
    CHECK(Block::from_serialized(x.serialized()) == x);
  }
  CHECK_THROWS_AS(Block::from_serialized("[5; 0, 8, 1, 0]"), ParseError);
  CHECK_THROWS_AS(Block::from_serialized("[5; 0, 8, 1, 0, 5] junk"),
                  ParseError);
}

TEST_CASE("negation") {
  const CyclicGroup z5(5);
  const Block b = Block::parse(z5, "1^8 2 4^5");
  // g^8 (2g) (-g)^5 negates to (-g)^8 (-2g) g^5 = g^5 (3g) (4g)^8.
  CHECK(b.negated().mult() == std::vector<std::uint64_t>{0, 5, 0, 1, 8});
  CHECK(Block::empty(z5).negated() == Block::empty(z5));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const CyclicGroup g(2 + rng() % 9);
    const Block x = oracle::random_block(rng, g, 15, true);
    const Block neg = x.negated();
    CHECK(neg.length() == x.length());
    CHECK(neg.negated() == x);  // involution
    for (std::uint32_t r = 0; r < g.order(); ++r) {
      CHECK(neg.mult()[r] == x.mult()[(g.order() - r) % g.order()]);
    }
  }
}

TEST_CASE("strip_zeros") {
  const CyclicGroup z5(5);
  const Block a(z5, {3, 5, 0, 0, 5});
  const auto [t, rest] = a.strip_zeros();
  CHECK(t == 3);
  CHECK(rest.mult() == std::vector<std::uint64_t>{0, 5, 0, 0, 5});

  const Block b = Block::parse(z5, "1^8 2 4^5");
  CHECK(b.strip_zeros().first == 0);
  CHECK(b.strip_zeros().second == b);

  const CyclicGroup z3(3);
  const Block c(z3, {4, 0, 0});
  CHECK(c.strip_zeros().first == 4);
  CHECK(c.strip_zeros().second == Block::empty(z3));

  // re-adding the zeros reconstructs the block
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const CyclicGroup g(2 + rng() % 9);
    const Block x = oracle::random_block(rng, g, 15, true);
    const auto [zeros, stripped] = x.strip_zeros();
    std::vector<std::uint64_t> mult(g.order(), 0);
    mult[0] = zeros;
    CHECK(stripped * Block(g, mult) == x);
  }
}

TEST_CASE("relabeling by units") {
  const CyclicGroup z5(5);
  const Block b = Block::parse(z5, "1^5 4^5");
  CHECK(b.relabeled(1) == b);
  CHECK(b.relabeled(2) == Block::parse(z5, "2^5 3^5"));
  CHECK(b.relabeled(3) == Block::parse(z5, "2^5 3^5"));
  CHECK(b.relabeled(4) == b);
  CHECK_THROWS_AS(b.relabeled(0), InvalidParameter);
  CHECK_THROWS_AS(Block::parse(CyclicGroup(6), "1 5").relabeled(2),
                  InvalidParameter);
}

TEST_CASE("block ordering") {
  const CyclicGroup z3(3);
  const Block w = Block::parse(z3, "1^3");
  const Block nw = Block::parse(z3, "2^3");
  const Block v = Block::parse(z3, "1 2");
  CHECK(shortlex_less(v, w));    // shorter first
  CHECK(shortlex_less(w, nw));   // 1 1 1 before 2 2 2
  CHECK_FALSE(shortlex_less(w, w));
  CHECK(lex_less(nw, v));        // [0,0,3] < [0,1,1] on plain vectors
  CHECK(lex_less(v, w));

  const CyclicGroup z5(5);
  CHECK(shortlex_less(Block::parse(z5, "1^5 4^5"),
                      Block::parse(z5, "2^5 3^5")));
}

TEST_CASE("block product") {
  const CyclicGroup z5(5);
  const Block a = Block::parse(z5, "1^5");
  const Block b = Block::parse(z5, "4^5");
  CHECK(a * b == Block::parse(z5, "1^5 4^5"));
  CHECK(a * Block::empty(z5) == a);
  CHECK_THROWS_AS(a * Block::parse(CyclicGroup(3), "1 2"), InvalidParameter);
  CHECK(divides(a, a * b));
  CHECK_FALSE(divides(a * b, a));
}

TEST_CASE("length overflow is an error") {
  const CyclicGroup z2(2);
  CHECK_THROWS_AS(Block(z2, {UINT64_MAX, 2}), OverflowError);
  const Block big(z2, {UINT64_MAX - 1, 0});
  CHECK_THROWS_AS(big * Block(z2, {2, 0}), OverflowError);
}

TEST_CASE("subsequence sums") {
  const std::vector<std::uint64_t> ab{10, 30};
  const auto r = subsequence_sums(ab);
  CHECK(r.sums == std::set<std::uint64_t>{10, 30, 40});
  CHECK(r.sigma == 40);

  const std::vector<std::uint64_t> single{6};
  CHECK(subsequence_sums(single).sums == std::set<std::uint64_t>{6});
  CHECK(subsequence_sums(single).sigma == 6);

  const std::vector<std::uint64_t> dup{2, 2};
  CHECK(subsequence_sums(dup).sums == std::set<std::uint64_t>{2, 4});

  CHECK_THROWS_AS(subsequence_sums({}), EmptyInput);
  const std::vector<std::uint64_t> zero{1, 0};
  CHECK_THROWS_AS(subsequence_sums(zero), InvalidParameter);

  // brute-force cross-check on random small lists
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> values;
    const std::size_t m = 1 + rng() % 6;
    for (std::size_t i = 0; i < m; ++i) values.push_back(1 + rng() % 50);
    std::set<std::uint64_t> expected;
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (1ull << i)) s += values[i];
      }
      expected.insert(s);
    }
    CHECK(subsequence_sums(values).sums == expected);
  }
}

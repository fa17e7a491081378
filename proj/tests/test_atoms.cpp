#include <doctest.h>

#include <random>

#include "blockfact/atoms.hpp"
#include "blockfact/survey.hpp"
#include "oracles.hpp"
#include "residue_mask.hpp"

using namespace blockfact;

namespace {

std::vector<std::string> texts(const AtomTable& table) {
  std::vector<std::string> out;
  for (const Block& a : table.atoms()) out.push_back(a.text());
  return out;
}

}  // namespace

TEST_CASE("residue mask rotation matches the naive definition") {
  std::mt19937_64 rng(19);
  for (std::uint32_t n : {2u, 3u, 5u, 63u, 64u, 65u, 130u, 184u}) {
    for (int trial = 0; trial < 20; ++trial) {
      detail::ResidueMask mask(n);
      std::vector<bool> bits(n, false);
      for (std::uint32_t i = 0; i < n; ++i) {
        if (rng() % 3 == 0) {
          mask.set(i);
          bits[i] = true;
        }
      }
      const std::uint32_t r = static_cast<std::uint32_t>(rng() % n);
      const detail::ResidueMask rotated = mask.rotated(r);
      for (std::uint32_t i = 0; i < n; ++i) {
        CHECK(rotated.test((i + r) % n) == bits[i]);
      }
    }
  }
}

TEST_CASE("is_atom on the documented cases") {
  const CyclicGroup z3(3);
  const CyclicGroup z5(5);
  CHECK(is_atom(Block::parse(z3, "1^3")));
  CHECK_FALSE(is_atom(Block::parse(z5, "1^5 4^5")));  // contains "1 4"
  CHECK(is_atom(Block::parse(z5, "2 1^3")));
  CHECK(oracle::is_atom(Block::parse(z5, "2 1^3")));

  CHECK(is_atom(Block::parse(z5, "0")));
  CHECK_FALSE(is_atom(Block::parse(z5, "0^2")));
  CHECK_FALSE(is_atom(Block::parse(z5, "0 1 4")));
  CHECK_FALSE(is_atom(Block::empty(z5)));
  // longer than n can never be minimal
  CHECK_FALSE(is_atom(Block::parse(z5, "1^10 2^5")));
}

TEST_CASE("is_atom agrees with the exponential oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const CyclicGroup g(2 + rng() % 6);
    const Block x = oracle::random_block(rng, g, g.order() + 2, true);
    if (x.is_empty()) continue;
    CHECK(is_atom(x) == oracle::is_atom(x));
  }
}

TEST_CASE("global atom tables for tiny groups") {
  const AtomTable z3 = enumerate_atoms(CyclicGroup(3));
  CHECK(texts(z3) == std::vector<std::string>{"2^3", "1 2", "1^3", "0"});

  const AtomTable z2 = enumerate_atoms(CyclicGroup(2));
  CHECK(texts(z2) == std::vector<std::string>{"1^2", "0"});

  // atoms of full length n are exactly the g^n for generators g
  for (std::uint32_t n : {3u, 4u, 5u, 6u, 7u}) {
    const CyclicGroup group(n);
    const AtomTable table = enumerate_atoms(group);
    std::set<std::string> full_length;
    for (const Block& a : table.atoms()) {
      CHECK(a.length() <= n);
      if (a.length() == n) full_length.insert(a.text());
    }
    std::set<std::string> expected;
    for (std::uint32_t u : group.units()) {
      expected.insert(std::to_string(u) + "^" + std::to_string(n));
    }
    CHECK(full_length == expected);
  }
}

TEST_CASE("every table entry is an atom, and negation permutes the table") {
  for (std::uint32_t n : {2u, 3u, 4u, 5u, 6u, 7u}) {
    const AtomTable table = enumerate_atoms(CyclicGroup(n));
    std::set<std::vector<std::uint64_t>> negated;
    for (const Block& a : table.atoms()) {
      CHECK(is_atom(a));
      negated.insert(a.negated().mult());
    }
    CHECK(negated.size() == table.size());
    for (const Block& a : table.atoms()) {
      CHECK(negated.count(a.mult()) == 1);
    }
  }
}

TEST_CASE("small global tables match the exponential oracle exactly") {
  for (std::uint32_t n : {2u, 3u, 4u, 5u}) {
    const CyclicGroup group(n);
    // universe: every zero-sum block of length <= n (Davenport bound)
    std::set<std::vector<std::uint64_t>> expected;
    std::vector<std::uint64_t> current(n, 0);
    while (true) {
      if (oracle::vec_length(current) >= 1 &&
          oracle::vec_length(current) <= n &&
          oracle::vec_zero_sum(current, n)) {
        Block candidate(group, current);
        if (oracle::is_atom(candidate)) expected.insert(current);
      }
      std::uint32_t r = 0;
      while (r < n && current[r] == n) {
        current[r] = 0;
        ++r;
      }
      if (r == n) break;
      ++current[r];
    }
    const AtomTable table = enumerate_atoms(group);
    std::set<std::vector<std::uint64_t>> actual;
    for (const Block& a : table.atoms()) actual.insert(a.mult());
    CHECK(actual == expected);
  }
}

TEST_CASE("atoms_dividing on the documented cases") {
  const CyclicGroup z5(5);
  const Block x = Block::parse(z5, "1^5 4^5");
  const AtomTable table = atoms_dividing(x);
  CHECK(texts(table) == std::vector<std::string>{"4^5", "1 4", "1^5"});
  CHECK(table.cap().has_value());
  CHECK(*table.cap() == x);

  // an atom's only atomic divisor is itself
  const Block atom = Block::parse(z5, "2 1^3");
  CHECK(texts(atoms_dividing(atom)) == std::vector<std::string>{"1^3 2"});

  // exactly two atoms through the (2g) in g^8 (2g) (-g)^5
  const Block b = Block::parse(z5, "1^8 2 4^5");
  std::vector<std::string> through_2g;
  for (const Block& a : atoms_dividing(b).atoms()) {
    if (a.mult()[2] == 1) through_2g.push_back(a.text());
  }
  CHECK(through_2g == std::vector<std::string>{"2 4^2", "1^3 2"});
}

TEST_CASE("atoms_dividing equals the filtered global table") {
  for (std::uint32_t n : {3u, 4u, 5u, 6u, 7u}) {
    const CyclicGroup group(n);
    const AtomTable global = enumerate_atoms(group);
    SurveyConfig config{group, n + 2, std::nullopt, false};
    enumerate_blocks(config, [&](const Block& x) {
      const AtomTable direct = atoms_dividing(x);
      const AtomTable filtered = atoms_dividing(x, global);
      CHECK(direct.atoms() == filtered.atoms());
      return true;
    });
  }
  // spot check with large multiplicities
  const Block b = Block::parse(CyclicGroup(5), "1^40 2 4^37");
  CHECK(atoms_dividing(b).atoms() ==
        atoms_dividing(b, enumerate_atoms(CyclicGroup(5))).atoms());
}

TEST_CASE("atoms_dividing against the exponential oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const CyclicGroup g(2 + rng() % 5);
    const Block x = oracle::random_block(rng, g, 9, true);
    CHECK(atoms_dividing(x).atoms() == oracle::atoms_dividing(x));
  }
}

TEST_CASE("atom table validation rejects bad input") {
  const CyclicGroup z5(5);
  const Block v = Block::parse(z5, "1 4");
  const Block w = Block::parse(z5, "1^5");
  CHECK_THROWS_AS(AtomTable(z5, {w, v}), InvalidParameter);  // out of order
  CHECK_THROWS_AS(AtomTable(z5, {v, v}), InvalidParameter);  // duplicate
  CHECK_THROWS_AS(AtomTable(z5, {Block::parse(z5, "1^5 4^5")}),
                  InvalidParameter);  // not an atom
  CHECK_THROWS_AS(AtomTable(z5, {v}, Block::parse(z5, "2 3")),
                  InvalidParameter);  // exceeds cap
  const AtomTable ok(z5, {v, w});
  CHECK(ok.find(v) == 0);
  CHECK(ok.find(w) == 1);
  CHECK_FALSE(ok.find(Block::parse(z5, "2 3")).has_value());
}

TEST_CASE("atom count ceiling") {
  Limits limits;
  limits.max_atoms = 3;
  CHECK_THROWS_AS(enumerate_atoms(CyclicGroup(5), limits), ResourceLimit);
}

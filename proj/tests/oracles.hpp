#ifndef BLOCKFACT_TESTS_ORACLES_HPP_
#define BLOCKFACT_TESTS_ORACLES_HPP_

// Brute-force reference implementations used only by the tests. They are
// deliberately naive -- explicit sub-multiset odometers and exponential
// searches with no pruning, no bitmask tricks and no memoization -- so that
// they share no code path with the library routines they check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "blockfact/factorization.hpp"
#include "blockfact/metrics.hpp"

namespace oracle {

using blockfact::Block;
using blockfact::CyclicGroup;
using blockfact::DeltaSet;
using blockfact::Factorization;
using blockfact::LengthSet;

using Mult = std::vector<std::uint64_t>;

// Every sub-multiset of x (including empty and full), as multiplicity
// vectors, by plain odometer.
inline std::vector<Mult> sub_multisets(const Block& x) {
  const std::uint32_t n = x.order();
  std::vector<Mult> out;
  Mult current(n, 0);
  while (true) {
    out.push_back(current);
    std::uint32_t r = 0;
    while (r < n && current[r] == x.mult()[r]) {
      current[r] = 0;
      ++r;
    }
    if (r == n) break;
    ++current[r];
  }
  return out;
}

inline std::uint64_t vec_length(const Mult& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

inline bool vec_zero_sum(const Mult& m, std::uint32_t n) {
  std::uint64_t s = 0;
  for (std::uint32_t r = 0; r < n; ++r) s = (s + r * (m[r] % n)) % n;
  return s == 0;
}

// Anything with a zero-sum proper nonempty sub-multiset is not an atom.
inline bool is_atom(const Block& x) {
  if (x.is_empty()) return false;
  const std::uint32_t n = x.order();
  const std::uint64_t full = x.length();
  for (const Mult& sub : sub_multisets(x)) {
    const std::uint64_t len = vec_length(sub);
    if (len == 0 || len == full) continue;
    if (vec_zero_sum(sub, n)) return false;
  }
  return true;
}

inline std::vector<Block> atoms_dividing(const Block& x) {
  std::vector<Block> out;
  for (const Mult& sub : sub_multisets(x)) {
    if (vec_length(sub) == 0 || !vec_zero_sum(sub, x.order())) continue;
    Block candidate(x.group(), sub);
    if (is_atom(candidate)) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end(), blockfact::lex_less);
  return out;
}

// A factorization as a multiset of atom texts, the common currency for
// comparing the oracle with the engine.
using FactorKey = std::vector<std::pair<std::string, std::uint64_t>>;

inline FactorKey key_of(const Factorization& z) {
  FactorKey key;
  for (const auto& [index, count] : z.counts()) {
    key.emplace_back(z.table()->atom(index).text(), count);
  }
  std::sort(key.begin(), key.end());
  return key;
}

// All ways to write x as a multiset of atoms: walk the atom list in order,
// trying every count that keeps the residual nonnegative.
inline void factorize_rec(const Block& x, const std::vector<Block>& atoms,
                          std::size_t i, Mult& residual, FactorKey& current,
                          std::vector<FactorKey>& out) {
  if (vec_length(residual) == 0) {
    FactorKey key = current;
    std::sort(key.begin(), key.end());
    out.push_back(std::move(key));
    return;
  }
  if (i == atoms.size()) return;
  std::uint64_t cap = UINT64_MAX;
  for (std::uint32_t r = 0; r < x.order(); ++r) {
    if (atoms[i].mult()[r] != 0) {
      cap = std::min(cap, residual[r] / atoms[i].mult()[r]);
    }
  }
  for (std::uint64_t c = 0; c <= cap; ++c) {
    if (c > 0) {
      for (std::uint32_t r = 0; r < x.order(); ++r) {
        residual[r] -= atoms[i].mult()[r];
      }
      current.emplace_back(atoms[i].text(), c);
    }
    factorize_rec(x, atoms, i + 1, residual, current, out);
    if (c > 0) current.pop_back();
  }
  for (std::uint32_t r = 0; r < x.order(); ++r) {
    residual[r] += atoms[i].mult()[r] * cap;
  }
}

inline std::vector<FactorKey> factorizations(const Block& x) {
  std::vector<Block> atoms = atoms_dividing(x);
  Mult residual = x.mult();
  FactorKey current;
  std::vector<FactorKey> out;
  factorize_rec(x, atoms, 0, residual, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline LengthSet length_set(const Block& x) {
  LengthSet out;
  for (const FactorKey& key : factorizations(x)) {
    std::uint64_t len = 0;
    for (const auto& [text, count] : key) len += count;
    out.insert(len);
  }
  return out;
}

inline DeltaSet delta_set(const Block& x) {
  return blockfact::gaps(length_set(x));
}

// Least N whose distance-<=N subgraph is connected, by trying every
// candidate threshold with union-find.
inline std::uint64_t catenary(const std::vector<Factorization>& all) {
  if (all.size() <= 1) return 0;
  const std::size_t v = all.size();
  std::vector<std::vector<std::uint64_t>> d(v, std::vector<std::uint64_t>(v));
  std::vector<std::uint64_t> thresholds;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      d[i][j] = d[j][i] = blockfact::distance(all[i], all[j]);
      thresholds.push_back(d[i][j]);
    }
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  for (std::uint64_t t : thresholds) {
    std::vector<std::size_t> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find =
        [&](std::size_t a) -> std::size_t {
      return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        if (d[i][j] <= t) parent[find(i)] = find(j);
      }
    }
    bool connected = true;
    for (std::size_t i = 1; i < v; ++i) {
      if (find(i) != find(0)) connected = false;
    }
    if (connected) return t;
  }
  return thresholds.back();
}

// Deterministic pseudo-random zero-sum block: random multiplicities with
// one element appended to repair the sum.
inline Block random_block(std::mt19937_64& rng, CyclicGroup group,
                          std::uint64_t max_len, bool allow_zeros = false) {
  const std::uint32_t n = group.order();
  std::uniform_int_distribution<std::uint64_t> len_dist(0, max_len - 1);
  std::uniform_int_distribution<std::uint32_t> res_dist(allow_zeros ? 0 : 1,
                                                        n - 1);
  Mult mult(n, 0);
  const std::uint64_t len = len_dist(rng);
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i < len; ++i) {
    const std::uint32_t r = res_dist(rng);
    mult[r] += 1;
    sum = (sum + r) % n;
  }
  if (sum != 0) mult[n - sum] += 1;
  return Block(group, std::move(mult));
}

}  // namespace oracle

#endif  // BLOCKFACT_TESTS_ORACLES_HPP_

#include "blockfact/numerical.hpp"

#include <algorithm>
#include <numeric>

namespace blockfact {

namespace {

// Can `target` be written as a nonnegative combination of `gens`?
// Straight reachability table up to target.
bool representable(std::uint64_t target,
                   const std::vector<std::uint64_t>& gens) {
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (std::uint64_t v = 1; v <= target; ++v) {
    for (std::uint64_t g : gens) {
      if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

}  // namespace

NumericalMonoid::NumericalMonoid(std::vector<std::uint64_t> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw InvalidParameter("a numerical monoid needs at least one generator");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == 0) {
      throw InvalidParameter("generators must be positive");
    }
    if (i > 0 && generators_[i - 1] >= generators_[i]) {
      throw InvalidParameter("generators must be strictly increasing");
    }
  }
  std::uint64_t g = 0;
  for (std::uint64_t a : generators_) g = std::gcd(g, a);
  if (g != 1) {
    throw InvalidParameter("generators have gcd " + std::to_string(g) +
                           "; a numerical monoid must be primitive");
  }
  if (generators_.size() > 1) {
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      std::vector<std::uint64_t> others;
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i != j) others.push_back(generators_[i]);
      }
      if (representable(generators_[j], others)) {
        throw InvalidParameter("generator " + std::to_string(generators_[j]) +
                               " is redundant; the generating set is not "
                               "minimal");
      }
    }
  }
}

std::uint64_t nm_length(const NmFactorization& f) {
  std::uint64_t total = 0;
  for (std::uint64_t x : f) total = checked_add(total, x);
  return total;
}

namespace {

// Bounded recursion descending through the generators, largest first:
// the exponent of the current generator runs over 0..s/a, and the first
// generator must divide whatever remains.
void solve(const std::vector<std::uint64_t>& gens, std::size_t index,
           std::uint64_t remaining, NmFactorization& current,
           std::vector<NmFactorization>& out, std::uint64_t& nodes,
           const Limits& limits) {
  if (++nodes > limits.max_nodes) {
    throw ResourceLimit("factorization search exceeded " +
                        std::to_string(limits.max_nodes) + " nodes");
  }
  if (index == 0) {
    if (remaining % gens[0] == 0) {
      current[0] = remaining / gens[0];
      if (out.size() >= limits.max_factorizations) {
        throw ResourceLimit("more than " +
                            std::to_string(limits.max_factorizations) +
                            " factorizations");
      }
      out.push_back(current);
      current[0] = 0;
    }
    return;
  }
  const std::uint64_t a = gens[index];
  for (std::uint64_t x = 0; x <= remaining / a; ++x) {
    current[index] = x;
    solve(gens, index - 1, remaining - x * a, current, out, nodes, limits);
  }
  current[index] = 0;
}

}  // namespace

std::vector<NmFactorization> nm_factorizations(const NumericalMonoid& monoid,
                                               std::uint64_t s,
                                               const Limits& limits) {
  const auto& gens = monoid.generators();
  std::vector<NmFactorization> out;
  NmFactorization current(gens.size(), 0);
  std::uint64_t nodes = 0;
  solve(gens, gens.size() - 1, s, current, out, nodes, limits);
  std::sort(out.begin(), out.end());
  return out;
}

LengthSet nm_length_set(const NumericalMonoid& monoid, std::uint64_t s,
                        const Limits& limits) {
  LengthSet out;
  for (const NmFactorization& f : nm_factorizations(monoid, s, limits)) {
    out.insert(nm_length(f));
  }
  return out;
}

DeltaSet nm_delta_set(const NumericalMonoid& monoid, std::uint64_t s,
                      const Limits& limits) {
  return gaps(nm_length_set(monoid, s, limits));
}

NmScanReport nm_scan(const NumericalMonoid& monoid, std::uint64_t up_to,
                     const Limits& limits) {
  if (up_to < monoid.generators().front()) {
    throw InvalidParameter("scan bound " + std::to_string(up_to) +
                           " below the least generator");
  }
  NmScanReport report;
  report.generators = monoid.generators();
  report.up_to = up_to;
  for (std::uint64_t s = 0; s <= up_to; ++s) {
    const LengthSet lengths = nm_length_set(monoid, s, limits);
    if (lengths.empty()) continue;  // s not in the monoid
    ++report.elements_scanned;
    DeltaSet delta = gaps(lengths);
    report.delta_union.insert(delta.begin(), delta.end());
    if (!delta.empty()) report.realized.try_emplace(delta, s);
    report.per_element.emplace_back(s, std::move(delta));
  }
  return report;
}

}  // namespace blockfact

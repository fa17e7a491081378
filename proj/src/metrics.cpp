#include "blockfact/metrics.hpp"

#include <algorithm>
#include <vector>

#include "blockfact/survey.hpp"

namespace blockfact {

Factorization gcd_factorizations(const Factorization& z,
                                 const Factorization& zp) {
  if (!z.table()->same_atoms(*zp.table())) {
    throw TableMismatch("gcd of factorizations over different atom tables");
  }
  Factorization::Counts out;
  auto ia = z.counts().begin();
  auto ib = zp.counts().begin();
  while (ia != z.counts().end() && ib != zp.counts().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      out.emplace_back(ia->first, std::min(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return Factorization(z.table(), std::move(out));
}

std::uint64_t distance(const Factorization& z, const Factorization& zp) {
  if (!z.table()->same_atoms(*zp.table())) {
    throw TableMismatch("distance between factorizations over different atom tables");
  }
  if (!(z.recompose() == zp.recompose())) {
    throw DifferentElements("factorizations of different blocks have no distance");
  }
  const std::uint64_t shared = gcd_factorizations(z, zp).length();
  return std::max(z.length() - shared, zp.length() - shared);
}

namespace {

// Distance without the recomposition check, for use inside the complete
// graph of one block's factorization set.
std::uint64_t distance_unchecked(const Factorization& z,
                                 const Factorization& zp) {
  std::uint64_t shared = 0;
  auto ia = z.counts().begin();
  auto ib = zp.counts().begin();
  while (ia != z.counts().end() && ib != zp.counts().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      shared += std::min(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return std::max(z.length() - shared, zp.length() - shared);
}

}  // namespace

std::uint64_t catenary_degree(std::span<const Factorization> all,
                              const Limits& limits) {
  const std::size_t v = all.size();
  if (v <= 1) return 0;
  if (v > limits.max_graph_vertices) {
    throw ResourceLimit("factorization graph with " + std::to_string(v) +
                        " vertices exceeds the ceiling of " +
                        std::to_string(limits.max_graph_vertices));
  }
  // Prim's algorithm; the bottleneck of a minimum spanning tree equals the
  // least threshold at which the distance graph is connected.
  std::vector<std::uint64_t> best(v, UINT64_MAX);
  std::vector<bool> in_tree(v, false);
  best[0] = 0;
  std::uint64_t bottleneck = 0;
  for (std::size_t step = 0; step < v; ++step) {
    std::size_t next = v;
    for (std::size_t i = 0; i < v; ++i) {
      if (!in_tree[i] && (next == v || best[i] < best[next])) next = i;
    }
    in_tree[next] = true;
    bottleneck = std::max(bottleneck, best[next]);
    for (std::size_t i = 0; i < v; ++i) {
      if (!in_tree[i]) {
        best[i] = std::min(best[i], distance_unchecked(all[next], all[i]));
      }
    }
  }
  return bottleneck;
}

std::uint64_t catenary_degree(const Block& x, const Limits& limits) {
  std::vector<Factorization> all = factorizations(x, limits);
  return catenary_degree(all, limits);
}

CatenaryScan catenary_sup(CyclicGroup group, std::uint64_t max_len,
                          const Limits& limits) {
  SurveyConfig config{group, max_len, std::nullopt, true};
  CatenaryScan scan;
  enumerate_blocks(config, [&](const Block& x) {
    ++scan.blocks_scanned;
    const std::uint64_t c = catenary_degree(x, limits);
    if (c > scan.sup ||
        (c == scan.sup && scan.witness && shortlex_less(x, *scan.witness))) {
      scan.sup = c;
      scan.witness = x;
    }
    if (!scan.witness) scan.witness = x;
    return true;
  });
  return scan;
}

}  // namespace blockfact

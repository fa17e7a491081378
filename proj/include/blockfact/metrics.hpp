#ifndef BLOCKFACT_METRICS_HPP_
#define BLOCKFACT_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "blockfact/factorization.hpp"

namespace blockfact {

/// gcd(z, z'): componentwise minimum of atom counts. Throws TableMismatch
/// when the factorizations index different atom tables.
Factorization gcd_factorizations(const Factorization& z,
                                 const Factorization& zp);

/// d(z, z'): after cancelling gcd(z, z'), the larger of the two remaining
/// lengths. Requires the same atom table and, verified by recomposition,
/// the same factored block (DifferentElements otherwise).
std::uint64_t distance(const Factorization& z, const Factorization& zp);

/// Catenary degree of a precomputed factorization set: 0 for at most one
/// vertex, otherwise the bottleneck (maximum edge) of a minimum spanning
/// tree of the complete distance graph — equivalently the least N whose
/// distance-<=N subgraph is connected.
std::uint64_t catenary_degree(std::span<const Factorization> all,
                              const Limits& limits = {});

/// Catenary degree of a block: computes Z(x) first. ResourceLimit when
/// |Z(x)| exceeds limits.max_graph_vertices.
std::uint64_t catenary_degree(const Block& x, const Limits& limits = {});

/// Exhaustive scan of catenary degrees over nonempty zero-free blocks of
/// length <= max_len. The result is a lower bound for c(B(Z_n)) at any
/// finite bound. Scans orbit representatives only; relabeling by a unit
/// is a monoid automorphism, so it preserves every distance.
struct CatenaryScan {
  std::uint64_t sup = 0;
  std::optional<Block> witness;   ///< shortlex-least block attaining sup
  std::uint64_t blocks_scanned = 0;
};
CatenaryScan catenary_sup(CyclicGroup group, std::uint64_t max_len,
                          const Limits& limits = {});

}  // namespace blockfact

#endif  // BLOCKFACT_METRICS_HPP_

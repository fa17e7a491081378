#ifndef BLOCKFACT_ATOMS_HPP_
#define BLOCKFACT_ATOMS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "blockfact/block.hpp"

namespace blockfact {

/// Ceilings for every potentially explosive search. Exceeding one throws
/// ResourceLimit instead of returning a truncated result.
struct Limits {
  std::uint64_t max_nodes = 10'000'000;          ///< search-tree nodes
  std::uint64_t max_factorizations = 1'000'000;  ///< stored factorizations
  std::uint64_t max_atoms = 1'000'000;           ///< atoms per table
  std::uint64_t max_graph_vertices = 5'000;      ///< factorization-graph size
};

/// True iff x is an atom of B(Z_n): nonempty, zero-sum, with no proper
/// nonempty zero-sum subsequence. Decided by a subset-sum bitmask over
/// Z_n; any sequence longer than n fails immediately (Davenport bound).
bool is_atom(const Block& x);

/// An immutable table of atoms in strictly increasing lexicographic order
/// of multiplicity vectors. Ordering, absence of duplicates, atomicity of
/// every entry, and the cap bound are all re-validated on construction, so
/// a table parsed from an untrusted file is safe once it exists.
class AtomTable {
 public:
  AtomTable(CyclicGroup group, std::vector<Block> atoms,
            std::optional<Block> cap = std::nullopt);

  CyclicGroup group() const { return group_; }
  std::uint32_t order() const { return group_.order(); }

  const std::vector<Block>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const Block& atom(std::size_t index) const { return atoms_.at(index); }

  /// The constraining block for tables built by atoms_dividing.
  const std::optional<Block>& cap() const { return cap_; }

  /// Binary search by multiplicity vector.
  std::optional<std::size_t> find(const Block& atom) const;

  /// True iff the two tables index the same atoms of the same group
  /// (caps are irrelevant to index compatibility).
  bool same_atoms(const AtomTable& other) const;

 private:
  CyclicGroup group_;
  std::vector<Block> atoms_;
  std::optional<Block> cap_;
};

/// Enumerates every atom of B(Z_n). Depth-first over residues in
/// increasing order; a branch dies as soon as the partial sequence
/// acquires a proper nonempty zero-sum sub-multiset. Throws ResourceLimit
/// when limits.max_atoms is exceeded.
AtomTable enumerate_atoms(CyclicGroup group, const Limits& limits = {});

/// Enumerates the atoms dividing x, directly over supp(x) and without
/// building the global table. The result's cap() is x.
AtomTable atoms_dividing(const Block& x, const Limits& limits = {});

/// Same result as atoms_dividing(x), obtained by filtering an existing
/// global table instead of searching. Used as the second route of the
/// dual-route equivalence check.
AtomTable atoms_dividing(const Block& x, const AtomTable& global_table);

}  // namespace blockfact

#endif  // BLOCKFACT_ATOMS_HPP_

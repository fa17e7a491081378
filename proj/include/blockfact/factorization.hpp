#ifndef BLOCKFACT_FACTORIZATION_HPP_
#define BLOCKFACT_FACTORIZATION_HPP_

#include <cstdint>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "blockfact/atoms.hpp"
#include "blockfact/block.hpp"

namespace blockfact {

/// Sorted sets of factorization lengths and of gaps between consecutive
/// lengths.
using LengthSet = std::set<std::uint64_t>;
using DeltaSet = std::set<std::uint64_t>;

/// Gaps between consecutive elements; empty when |lengths| <= 1.
DeltaSet gaps(const LengthSet& lengths);

/// A factorization z of a block into atoms of a fixed table: a sorted list
/// of (atom index, positive count) pairs. Two factorizations are equal iff
/// their tables index the same atoms and the count lists agree.
class Factorization {
 public:
  using Counts = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

  Factorization(std::shared_ptr<const AtomTable> table, Counts counts);

  const std::shared_ptr<const AtomTable>& table() const { return table_; }
  const Counts& counts() const { return counts_; }

  /// Number of atoms counted with multiplicity: |z|.
  std::uint64_t length() const { return length_; }

  std::uint64_t count_of(std::uint32_t atom_index) const;

  /// The block this factorization multiplies out to.
  Block recompose() const;

  /// Human-readable form, e.g. "(1 4)^3 (1^5) (2 4^2)"; the empty
  /// factorization prints as "1".
  std::string text() const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.counts_ == b.counts_ && a.table_->same_atoms(*b.table_);
  }

 private:
  std::shared_ptr<const AtomTable> table_;
  Counts counts_;
  std::uint64_t length_;
};

/// Concatenation: counts added. Tables must index the same atoms.
Factorization operator*(const Factorization& a, const Factorization& b);

/// Every factorization of x over its own divisor-closed atom table
/// (atoms_dividing(x)). Complete, duplicate-free, sorted by count vector.
/// Throws ResourceLimit when the node or result ceiling is hit.
std::vector<Factorization> factorizations(const Block& x,
                                          const Limits& limits = {});

/// Every factorization of x with atom indices taken from the given table,
/// which must contain all atoms dividing x (a global table does). Useful
/// when factorizations of several blocks must share one index space.
std::vector<Factorization> factorizations(
    const Block& x, std::shared_ptr<const AtomTable> table,
    const Limits& limits = {});

/// L(x): achievable factorization lengths. Computed by a memoized search
/// over residual vectors, which is much cheaper than materializing Z(x);
/// the empty block yields {0}.
LengthSet length_set(const Block& x, const Limits& limits = {});

/// Delta(x): gaps of L(x).
DeltaSet delta_set(const Block& x, const Limits& limits = {});

}  // namespace blockfact

#endif  // BLOCKFACT_FACTORIZATION_HPP_

#ifndef BLOCKFACT_BLOCK_HPP_
#define BLOCKFACT_BLOCK_HPP_

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockfact/errors.hpp"

namespace blockfact {

/// The cyclic group Z_n, written additively on residues {0, ..., n-1}.
/// Residue 1 plays the role of the distinguished generator g; residue
/// n-1 is -g.
class CyclicGroup {
 public:
  /// Requires 2 <= n <= kMaxOrder.
  explicit CyclicGroup(std::uint32_t n);

  std::uint32_t order() const { return order_; }

  /// Multiplicative order of residue r, i.e. n / gcd(n, r); the order of
  /// residue 0 is 1.
  std::uint32_t element_order(std::uint32_t r) const;

  /// Residues u with gcd(u, n) = 1, ascending. These are exactly the
  /// generators of Z_n and the valid relabeling units.
  std::vector<std::uint32_t> units() const;

  friend bool operator==(CyclicGroup a, CyclicGroup b) {
    return a.order_ == b.order_;
  }

  static constexpr std::uint32_t kMaxOrder = 1u << 21;

 private:
  std::uint32_t order_;
};

/// A zero-sum sequence over Z_n, stored as a dense multiplicity vector:
/// mult[i] is the number of copies of residue i. The zero-sum invariant
/// (sum of i * mult[i] == 0 mod n) is validated on every construction.
///
/// Blocks are immutable values; all operations return new blocks.
class Block {
 public:
  /// Validates the zero-sum condition; throws NotZeroSum otherwise.
  /// mult must have exactly n entries.
  Block(CyclicGroup group, std::vector<std::uint64_t> mult);

  static Block empty(CyclicGroup group);

  /// Parses the canonical grammar: whitespace- or comma-separated terms
  /// `r^m` with the caret optional when m = 1, e.g. "1^8 2 4^5".
  /// Repeated terms for the same residue accumulate.
  static Block parse(CyclicGroup group, std::string_view text);

  /// Parses the serialized form "[n; m_0, m_1, ..., m_{n-1}]".
  static Block from_serialized(std::string_view text);

  CyclicGroup group() const { return CyclicGroup(order_); }
  std::uint32_t order() const { return order_; }

  const std::vector<std::uint64_t>& mult() const { return mult_; }
  std::uint64_t mult(std::uint32_t residue) const;

  /// Total number of elements (with multiplicity). Cached; construction
  /// fails with OverflowError if the sum does not fit in 64 bits.
  std::uint64_t length() const { return length_; }

  bool is_empty() const { return length_ == 0; }

  /// Support: residues with nonzero multiplicity, ascending.
  std::vector<std::uint32_t> support() const;

  /// -X: every element replaced by its inverse; mult[i] -> mult[(n-i) mod n].
  Block negated() const;

  /// Splits off the copies of residue 0: returns (t, block with mult[0] = 0)
  /// where t = mult[0].
  std::pair<std::uint64_t, Block> strip_zeros() const;

  /// Relabels residues by the group automorphism i -> u*i mod n.
  /// u must be a unit mod n.
  Block relabeled(std::uint64_t u) const;

  /// Canonical text, e.g. "1^8 2 4^5"; the empty block prints as "".
  std::string text() const;

  /// Canonical serialized form "[n; m_0, m_1, ..., m_{n-1}]".
  std::string serialized() const;

  friend bool operator==(const Block& a, const Block& b) {
    return a.order_ == b.order_ && a.mult_ == b.mult_;
  }

 private:
  std::uint32_t order_;
  std::vector<std::uint64_t> mult_;
  std::uint64_t length_;
};

/// Multiset union: adds multiplicity vectors. Groups must match.
Block operator*(const Block& a, const Block& b);

/// True iff a.mult <= x.mult componentwise (a divides x in F(G)).
bool divides(const Block& a, const Block& x);

/// Shortlex order: by length, then lexicographically on the expanded
/// non-decreasing residue sequence. "1^3" < "2^3", "1^5 4^5" < "2^5 3^5".
/// This is the order used for witness tie-breaking and for orbit
/// representatives.
bool shortlex_less(const Block& a, const Block& b);

/// Plain lexicographic order on multiplicity vectors; the order of atom
/// tables.
bool lex_less(const Block& a, const Block& b);

/// Subset sums of a nonempty list of positive integers.
struct SubsequenceSums {
  std::set<std::uint64_t> sums;  ///< sums over all nonempty subsets
  std::uint64_t sigma;           ///< total sum
};

/// Computes the set of all nonempty-subset sums (duplicates collapse) and
/// the total. Throws EmptyInput on an empty list, InvalidParameter if any
/// value is zero, OverflowError if a sum would wrap.
SubsequenceSums subsequence_sums(std::span<const std::uint64_t> values);

}  // namespace blockfact

#endif  // BLOCKFACT_BLOCK_HPP_

#include "blockfact/atoms.hpp"

#include <algorithm>
#include <utility>

#include "residue_mask.hpp"

namespace blockfact {

using detail::ResidueMask;

bool is_atom(const Block& x) {
  if (x.is_empty()) return false;
  const std::uint32_t n = x.order();
  if (x.length() > n) return false;  // Davenport: atoms have length <= n
  // x (zero-sum, nonempty) is an atom iff, after removing one copy of any
  // fixed element, no nonempty sub-multiset sums to zero: a proper zero-sum
  // part and its complement partition x, and one side misses that copy.
  std::vector<std::uint32_t> elements;
  elements.reserve(static_cast<std::size_t>(x.length()));
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint64_t k = 0; k < x.mult()[r]; ++k) elements.push_back(r);
  }
  ResidueMask sums(n);
  for (std::size_t i = 1; i < elements.size(); ++i) {
    const std::uint32_t r = elements[i];
    ResidueMask next = sums;
    next.or_with(sums.rotated(r));
    next.set(r);
    if (next.test(0)) return false;
    sums = std::move(next);
  }
  return true;
}

namespace {

// Depth-first enumeration of minimal zero-sum multisets whose multiplicity
// vector is bounded by `cap`. Residues are visited in increasing order and
// counts in increasing order, so atoms come out in lexicographic order of
// their multiplicity vectors.
//
// Two masks are carried along:
//   any    -- sums of all nonempty sub-multisets of the current prefix
//   proper -- sums of nonempty *proper* sub-multisets
// Adding one element e updates them as
//   any'    = any | (any + e) | {e}
//   proper' = any | (proper + e) | {e}     (empty prefix: proper' = {})
// The prefix is dead as soon as proper contains 0, and is emitted as an
// atom exactly when its total is 0 while proper still avoids 0.
class AtomSearch {
 public:
  AtomSearch(CyclicGroup group, std::vector<std::uint64_t> cap,
             std::uint64_t max_atoms)
      : group_(group),
        n_(group.order()),
        cap_(std::move(cap)),
        max_atoms_(max_atoms),
        counts_(n_, 0),
        any_(n_),
        proper_(n_) {
    for (std::uint32_t r = 0; r < n_; ++r) {
      if (cap_[r] != 0) support_.push_back(r);
    }
  }

  std::vector<Block> run() {
    descend(0);
    return std::move(out_);
  }

 private:
  struct Saved {
    ResidueMask any;
    ResidueMask proper;
  };

  // Returns false when the extended prefix is dead.
  bool add_element(std::uint32_t r) {
    saved_.push_back({any_, proper_});
    if (length_ == 0) {
      ResidueMask a(n_);
      a.set(r);
      any_ = std::move(a);
      // proper_ stays empty: a singleton has no proper nonempty part.
    } else {
      ResidueMask next_any = any_;
      next_any.or_with(any_.rotated(r));
      next_any.set(r);
      ResidueMask next_proper = any_;
      next_proper.or_with(proper_.rotated(r));
      next_proper.set(r);
      any_ = std::move(next_any);
      proper_ = std::move(next_proper);
    }
    counts_[r] += 1;
    length_ += 1;
    sum_ = (sum_ + r) % n_;
    return !proper_.test(0);
  }

  void remove_element(std::uint32_t r) {
    any_ = std::move(saved_.back().any);
    proper_ = std::move(saved_.back().proper);
    saved_.pop_back();
    counts_[r] -= 1;
    length_ -= 1;
    sum_ = (sum_ + n_ - r % n_) % n_;
  }

  void emit() {
    if (out_.size() >= max_atoms_) {
      throw ResourceLimit("atom table would exceed " +
                          std::to_string(max_atoms_) + " atoms");
    }
    out_.push_back(Block(group_, counts_));
  }

  void descend(std::size_t support_index) {
    if (support_index == support_.size()) return;
    const std::uint32_t r = support_[support_index];
    descend(support_index + 1);  // count 0 for this residue
    std::uint64_t added = 0;
    for (std::uint64_t c = 1; c <= cap_[r] && length_ < n_; ++c) {
      const bool alive = add_element(r);
      ++added;
      if (!alive) break;
      if (sum_ == 0) {
        emit();
        break;  // every extension contains this atom as a proper part
      }
      descend(support_index + 1);
    }
    while (added-- > 0) remove_element(r);
  }

  CyclicGroup group_;
  std::uint32_t n_;
  std::vector<std::uint64_t> cap_;
  std::uint64_t max_atoms_;
  std::vector<std::uint32_t> support_;

  std::vector<std::uint64_t> counts_;
  std::uint64_t length_ = 0;
  std::uint32_t sum_ = 0;
  ResidueMask any_;
  ResidueMask proper_;
  std::vector<Saved> saved_;
  std::vector<Block> out_;
};

}  // namespace

AtomTable::AtomTable(CyclicGroup group, std::vector<Block> atoms,
                     std::optional<Block> cap)
    : group_(group), atoms_(std::move(atoms)), cap_(std::move(cap)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Block& a = atoms_[i];
    if (a.order() != group_.order()) {
      throw InvalidParameter("atom over Z_" + std::to_string(a.order()) +
                             " in a table over Z_" +
                             std::to_string(group_.order()));
    }
    if (!is_atom(a)) {
      throw InvalidParameter("table entry \"" + a.text() + "\" is not an atom");
    }
    if (i > 0 && !lex_less(atoms_[i - 1], a)) {
      throw InvalidParameter("atom table not in strictly increasing order");
    }
    if (cap_ && !divides(a, *cap_)) {
      throw InvalidParameter("atom \"" + a.text() +
                             "\" exceeds the table's cap block");
    }
  }
}

std::optional<std::size_t> AtomTable::find(const Block& atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom, lex_less);
  if (it != atoms_.end() && *it == atom) {
    return static_cast<std::size_t>(it - atoms_.begin());
  }
  return std::nullopt;
}

bool AtomTable::same_atoms(const AtomTable& other) const {
  if (this == &other) return true;
  return group_ == other.group_ && atoms_ == other.atoms_;
}

AtomTable enumerate_atoms(CyclicGroup group, const Limits& limits) {
  const std::uint32_t n = group.order();
  std::vector<std::uint64_t> cap(n, 0);
  cap[0] = 1;
  for (std::uint32_t r = 1; r < n; ++r) cap[r] = group.element_order(r);
  AtomSearch search(group, std::move(cap), limits.max_atoms);
  return AtomTable(group, search.run());
}

AtomTable atoms_dividing(const Block& x, const Limits& limits) {
  const std::uint32_t n = x.order();
  CyclicGroup group = x.group();
  std::vector<std::uint64_t> cap(n, 0);
  cap[0] = std::min<std::uint64_t>(x.mult()[0], 1);
  for (std::uint32_t r = 1; r < n; ++r) {
    cap[r] = std::min<std::uint64_t>(x.mult()[r], group.element_order(r));
  }
  AtomSearch search(group, std::move(cap), limits.max_atoms);
  return AtomTable(group, search.run(), x);
}

AtomTable atoms_dividing(const Block& x, const AtomTable& global_table) {
  if (x.order() != global_table.order()) {
    throw InvalidParameter("block and atom table over different groups");
  }
  std::vector<Block> kept;
  for (const Block& a : global_table.atoms()) {
    if (divides(a, x)) kept.push_back(a);
  }
  return AtomTable(x.group(), std::move(kept), x);
}

}  // namespace blockfact

#include "blockfact/factorization.hpp"

#include <algorithm>
#include <unordered_map>

namespace blockfact {

DeltaSet gaps(const LengthSet& lengths) {
  DeltaSet out;
  if (lengths.size() < 2) return out;
  auto it = lengths.begin();
  std::uint64_t prev = *it++;
  for (; it != lengths.end(); ++it) {
    out.insert(*it - prev);
    prev = *it;
  }
  return out;
}

Factorization::Factorization(std::shared_ptr<const AtomTable> table,
                             Counts counts)
    : table_(std::move(table)), counts_(std::move(counts)), length_(0) {
  if (!table_) throw InvalidParameter("factorization without an atom table");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const auto& [index, count] = counts_[i];
    if (index >= table_->size()) {
      throw InvalidParameter("atom index " + std::to_string(index) +
                             " out of range");
    }
    if (count == 0) {
      throw InvalidParameter("factorization with a zero atom count");
    }
    if (i > 0 && counts_[i - 1].first >= index) {
      throw InvalidParameter("factorization counts not sorted by atom index");
    }
    length_ = checked_add(length_, count);
  }
}

std::uint64_t Factorization::count_of(std::uint32_t atom_index) const {
  auto it = std::lower_bound(
      counts_.begin(), counts_.end(), atom_index,
      [](const auto& entry, std::uint32_t key) { return entry.first < key; });
  if (it != counts_.end() && it->first == atom_index) return it->second;
  return 0;
}

Block Factorization::recompose() const {
  std::vector<std::uint64_t> mult(table_->order(), 0);
  for (const auto& [index, count] : counts_) {
    const Block& atom = table_->atom(index);
    for (std::uint32_t r = 0; r < table_->order(); ++r) {
      if (atom.mult()[r] != 0) {
        mult[r] = checked_add(mult[r], checked_mul(atom.mult()[r], count));
      }
    }
  }
  return Block(table_->group(), std::move(mult));
}

std::string Factorization::text() const {
  if (counts_.empty()) return "1";
  std::string out;
  for (const auto& [index, count] : counts_) {
    if (!out.empty()) out += ' ';
    out += '(' + table_->atom(index).text() + ')';
    if (count != 1) out += '^' + std::to_string(count);
  }
  return out;
}

Factorization operator*(const Factorization& a, const Factorization& b) {
  if (!a.table()->same_atoms(*b.table())) {
    throw TableMismatch("combining factorizations over different atom tables");
  }
  Factorization::Counts merged;
  auto ia = a.counts().begin();
  auto ib = b.counts().begin();
  while (ia != a.counts().end() || ib != b.counts().end()) {
    if (ib == b.counts().end() ||
        (ia != a.counts().end() && ia->first < ib->first)) {
      merged.push_back(*ia++);
    } else if (ia == a.counts().end() || ib->first < ia->first) {
      merged.push_back(*ib++);
    } else {
      merged.emplace_back(ia->first, checked_add(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return Factorization(a.table(), std::move(merged));
}

namespace {

// Shared scaffolding for the complete-enumeration and length-set searches:
// atoms usable for x, in table order, plus for each residue the last atom
// index that touches it (for the dead-branch prune).
struct SearchTable {
  std::shared_ptr<const AtomTable> table;   // index space of the results
  std::vector<std::uint32_t> usable;        // indices of atoms dividing x
  std::vector<std::size_t> last_touch;      // per residue, into `usable`

  SearchTable(const Block& x, std::shared_ptr<const AtomTable> t)
      : table(std::move(t)), last_touch(x.order(), SIZE_MAX) {
    for (std::uint32_t i = 0; i < table->size(); ++i) {
      if (divides(table->atom(i), x)) usable.push_back(i);
    }
    for (std::size_t u = 0; u < usable.size(); ++u) {
      for (std::uint32_t r : table->atom(usable[u]).support()) {
        last_touch[r] = u;
      }
    }
  }

  const Block& atom(std::size_t usable_index) const {
    return table->atom(usable[usable_index]);
  }
};

std::uint64_t max_count(const Block& atom,
                        const std::vector<std::uint64_t>& residual) {
  std::uint64_t cap = UINT64_MAX;
  for (std::uint32_t r : atom.support()) {
    cap = std::min(cap, residual[r] / atom.mult()[r]);
  }
  return cap;
}

void apply(const Block& atom, std::uint64_t count,
           std::vector<std::uint64_t>& residual, std::uint64_t& remaining) {
  for (std::uint32_t r : atom.support()) {
    residual[r] -= atom.mult()[r] * count;
  }
  remaining -= atom.length() * count;
}

void unapply(const Block& atom, std::uint64_t count,
             std::vector<std::uint64_t>& residual, std::uint64_t& remaining) {
  for (std::uint32_t r : atom.support()) {
    residual[r] += atom.mult()[r] * count;
  }
  remaining += atom.length() * count;
}

// First residue with residual > 0, or n when the residual is exhausted.
std::uint32_t first_nonzero(const std::vector<std::uint64_t>& residual) {
  for (std::uint32_t r = 0; r < residual.size(); ++r) {
    if (residual[r] != 0) return r;
  }
  return static_cast<std::uint32_t>(residual.size());
}

class CompleteEnumeration {
 public:
  CompleteEnumeration(const Block& x, SearchTable st, const Limits& limits)
      : st_(std::move(st)), limits_(limits),
        residual_(x.mult()), remaining_(x.length()) {}

  std::vector<Factorization> run() {
    descend(0);
    std::sort(out_.begin(), out_.end(),
              [](const Factorization& a, const Factorization& b) {
                return a.counts() < b.counts();
              });
    return std::move(out_);
  }

 private:
  void descend(std::size_t i) {
    if (++nodes_ > limits_.max_nodes) {
      throw ResourceLimit("factorization search exceeded " +
                          std::to_string(limits_.max_nodes) + " nodes");
    }
    if (remaining_ == 0) {
      if (out_.size() >= limits_.max_factorizations) {
        throw ResourceLimit("more than " +
                            std::to_string(limits_.max_factorizations) +
                            " factorizations");
      }
      out_.push_back(Factorization(st_.table, stack_));
      return;
    }
    if (i == st_.usable.size()) return;
    const std::uint32_t r = first_nonzero(residual_);
    if (st_.last_touch[r] == SIZE_MAX || st_.last_touch[r] < i) return;
    const Block& atom = st_.atom(i);
    const std::uint64_t cap = max_count(atom, residual_);
    for (std::uint64_t c = cap; c > 0; --c) {
      apply(atom, c, residual_, remaining_);
      stack_.emplace_back(st_.usable[i], c);
      descend(i + 1);
      stack_.pop_back();
      unapply(atom, c, residual_, remaining_);
    }
    descend(i + 1);  // count 0
  }

  SearchTable st_;
  Limits limits_;
  std::vector<std::uint64_t> residual_;
  std::uint64_t remaining_;
  std::uint64_t nodes_ = 0;
  Factorization::Counts stack_;
  std::vector<Factorization> out_;
};

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Memoized "what total counts finish off this residual" search. States are
// (next usable atom, residual vector); exact, not heuristic.
class LengthSearch {
 public:
  LengthSearch(SearchTable st, const Limits& limits)
      : st_(std::move(st)), limits_(limits) {
    memo_.resize(st_.usable.size() + 1);
  }

  LengthSet run(const Block& x) { return solve(0, x.mult()); }

 private:
  LengthSet solve(std::size_t i, const std::vector<std::uint64_t>& residual) {
    if (++nodes_ > limits_.max_nodes) {
      throw ResourceLimit("length-set search exceeded " +
                          std::to_string(limits_.max_nodes) + " nodes");
    }
    const std::uint32_t r = first_nonzero(residual);
    if (r == residual.size()) return {0};
    if (i == st_.usable.size()) return {};
    if (st_.last_touch[r] == SIZE_MAX || st_.last_touch[r] < i) return {};
    auto cached = memo_[i].find(residual);
    if (cached != memo_[i].end()) return cached->second;

    LengthSet result;
    const Block& atom = st_.atom(i);
    const std::uint64_t cap = max_count(atom, residual);
    std::vector<std::uint64_t> next = residual;
    for (std::uint64_t c = 0; c <= cap; ++c) {
      if (c > 0) {
        for (std::uint32_t rr : atom.support()) next[rr] -= atom.mult()[rr];
      }
      for (std::uint64_t tail : solve(i + 1, next)) {
        result.insert(checked_add(tail, c));
      }
    }
    memo_[i].emplace(residual, result);
    return result;
  }

  SearchTable st_;
  Limits limits_;
  std::uint64_t nodes_ = 0;
  std::vector<std::unordered_map<std::vector<std::uint64_t>, LengthSet,
                                 VectorHash>>
      memo_;
};

}  // namespace

std::vector<Factorization> factorizations(const Block& x,
                                          const Limits& limits) {
  auto table = std::make_shared<const AtomTable>(atoms_dividing(x, limits));
  return factorizations(x, std::move(table), limits);
}

std::vector<Factorization> factorizations(
    const Block& x, std::shared_ptr<const AtomTable> table,
    const Limits& limits) {
  if (x.order() != table->order()) {
    throw InvalidParameter("block and atom table over different groups");
  }
  SearchTable st(x, std::move(table));
  CompleteEnumeration search(x, std::move(st), limits);
  return search.run();
}

LengthSet length_set(const Block& x, const Limits& limits) {
  auto table = std::make_shared<const AtomTable>(atoms_dividing(x, limits));
  SearchTable st(x, std::move(table));
  LengthSearch search(std::move(st), limits);
  return search.run(x);
}

DeltaSet delta_set(const Block& x, const Limits& limits) {
  return gaps(length_set(x, limits));
}

}  // namespace blockfact

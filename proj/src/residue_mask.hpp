#ifndef BLOCKFACT_SRC_RESIDUE_MASK_HPP_
#define BLOCKFACT_SRC_RESIDUE_MASK_HPP_

#include <cstdint>
#include <vector>

namespace blockfact::detail {

// A set of residues mod n as a dynamic bitset. The only nontrivial
// operation is rotated(r), which maps bit s to bit (s + r) mod n; it is
// what "add one element of residue r to every sub-multiset" does to a
// set of achievable sums.
class ResidueMask {
 public:
  explicit ResidueMask(std::uint32_t n)
      : n_(n), words_((n + 63) / 64, 0) {}

  std::uint32_t size() const { return n_; }

  void set(std::uint32_t r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63); }

  bool test(std::uint32_t r) const {
    return (words_[r >> 6] >> (r & 63)) & 1;
  }

  void or_with(const ResidueMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }

  ResidueMask rotated(std::uint32_t r) const {
    r %= n_;
    ResidueMask out(n_);
    out.or_shifted_left(*this, r);
    if (r != 0) out.or_shifted_right(*this, n_ - r);
    out.trim();
    return out;
  }

  bool operator==(const ResidueMask& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

 private:
  // this |= (src << k), bits at positions >= n discarded by trim().
  void or_shifted_left(const ResidueMask& src, std::uint32_t k) {
    const std::size_t wk = k >> 6;
    const std::uint32_t bk = k & 63;
    for (std::size_t i = 0; i + wk < words_.size(); ++i) {
      std::uint64_t w = src.words_[i];
      if (w == 0) continue;
      words_[i + wk] |= w << bk;
      if (bk != 0 && i + wk + 1 < words_.size()) {
        words_[i + wk + 1] |= w >> (64 - bk);
      }
    }
  }

  // this |= (src >> k).
  void or_shifted_right(const ResidueMask& src, std::uint32_t k) {
    const std::size_t wk = k >> 6;
    const std::uint32_t bk = k & 63;
    for (std::size_t i = wk; i < words_.size(); ++i) {
      std::uint64_t w = src.words_[i] >> bk;
      if (bk != 0 && i + 1 < words_.size()) {
        w |= src.words_[i + 1] << (64 - bk);
      }
      words_[i - wk] |= w;
    }
  }

  void trim() {
    const std::uint32_t tail = n_ & 63;
    if (tail != 0) {
      words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
  }

  std::uint32_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace blockfact::detail

#endif  // BLOCKFACT_SRC_RESIDUE_MASK_HPP_

#include "blockfact/block.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace blockfact {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Parses one decimal uint64 starting at pos; advances pos past it.
std::uint64_t parse_u64(std::string_view s, std::size_t& pos,
                        const char* what) {
  std::uint64_t value = 0;
  const char* begin = s.data() + pos;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(std::string(what) + " does not fit in 64 bits");
  }
  if (ec != std::errc() || ptr == begin) {
    throw ParseError(std::string("expected ") + what + " in block text");
  }
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

}  // namespace

CyclicGroup::CyclicGroup(std::uint32_t n) : order_(n) {
  if (n < 2) {
    throw InvalidParameter("cyclic group order must be at least 2");
  }
  if (n > kMaxOrder) {
    throw InvalidParameter("cyclic group order " + std::to_string(n) +
                           " exceeds the supported maximum " +
                           std::to_string(kMaxOrder));
  }
}

std::uint32_t CyclicGroup::element_order(std::uint32_t r) const {
  if (r >= order_) {
    throw ResidueOutOfRange("residue " + std::to_string(r) +
                            " out of range for Z_" + std::to_string(order_));
  }
  if (r == 0) return 1;
  return order_ / static_cast<std::uint32_t>(gcd_u64(order_, r));
}

std::vector<std::uint32_t> CyclicGroup::units() const {
  std::vector<std::uint32_t> result;
  for (std::uint32_t u = 1; u < order_; ++u) {
    if (gcd_u64(u, order_) == 1) result.push_back(u);
  }
  return result;
}

Block::Block(CyclicGroup group, std::vector<std::uint64_t> mult)
    : order_(group.order()), mult_(std::move(mult)), length_(0) {
  if (mult_.size() != order_) {
    throw InvalidParameter("multiplicity vector has " +
                           std::to_string(mult_.size()) + " entries, expected " +
                           std::to_string(order_));
  }
  std::uint64_t sum_mod = 0;
  for (std::uint32_t i = 0; i < order_; ++i) {
    length_ = checked_add(length_, mult_[i]);
    sum_mod = (sum_mod + static_cast<std::uint64_t>(i) * (mult_[i] % order_)) %
              order_;
  }
  if (sum_mod != 0) {
    throw NotZeroSum("sequence sums to " + std::to_string(sum_mod) +
                     " mod " + std::to_string(order_));
  }
}

Block Block::empty(CyclicGroup group) {
  return Block(group, std::vector<std::uint64_t>(group.order(), 0));
}

Block Block::parse(CyclicGroup group, std::string_view text) {
  const std::uint32_t n = group.order();
  std::vector<std::uint64_t> mult(n, 0);
  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) {
      ++pos;
    }
  };
  skip_separators();
  while (pos < text.size()) {
    std::uint64_t residue = parse_u64(text, pos, "residue");
    if (residue >= n) {
      throw ResidueOutOfRange("residue " + std::to_string(residue) +
                              " out of range for Z_" + std::to_string(n));
    }
    std::uint64_t count = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      count = parse_u64(text, pos, "multiplicity");
      if (count == 0) throw ParseError("multiplicity must be positive");
    }
    if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
        text[pos] != ',') {
      throw ParseError(std::string("unexpected character '") + text[pos] +
                       "' in block text");
    }
    mult[static_cast<std::size_t>(residue)] =
        checked_add(mult[static_cast<std::size_t>(residue)], count);
    skip_separators();
  }
  return Block(group, std::move(mult));
}

Block Block::from_serialized(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "' in serialized block");
    }
    ++pos;
  };
  expect('[');
  skip_ws();
  std::uint64_t n = parse_u64(text, pos, "group order");
  expect(';');
  if (n < 2 || n > CyclicGroup::kMaxOrder) {
    throw ParseError("group order out of range in serialized block");
  }
  std::vector<std::uint64_t> mult;
  mult.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i > 0) expect(',');
    skip_ws();
    mult.push_back(parse_u64(text, pos, "multiplicity"));
  }
  expect(']');
  skip_ws();
  if (pos != text.size()) {
    throw ParseError("trailing characters after serialized block");
  }
  return Block(CyclicGroup(static_cast<std::uint32_t>(n)), std::move(mult));
}

std::uint64_t Block::mult(std::uint32_t residue) const {
  if (residue >= order_) {
    throw ResidueOutOfRange("residue " + std::to_string(residue) +
                            " out of range for Z_" + std::to_string(order_));
  }
  return mult_[residue];
}

std::vector<std::uint32_t> Block::support() const {
  std::vector<std::uint32_t> result;
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (mult_[i] != 0) result.push_back(i);
  }
  return result;
}

Block Block::negated() const {
  std::vector<std::uint64_t> out(order_, 0);
  for (std::uint32_t i = 0; i < order_; ++i) {
    out[(order_ - i) % order_] = mult_[i];
  }
  return Block(group(), std::move(out));
}

std::pair<std::uint64_t, Block> Block::strip_zeros() const {
  std::vector<std::uint64_t> out = mult_;
  std::uint64_t zeros = out[0];
  out[0] = 0;
  return {zeros, Block(group(), std::move(out))};
}

Block Block::relabeled(std::uint64_t u) const {
  if (u == 0 || gcd_u64(u, order_) != 1) {
    throw InvalidParameter("relabeling by " + std::to_string(u) +
                           ", which is not a unit mod " +
                           std::to_string(order_));
  }
  std::vector<std::uint64_t> out(order_, 0);
  for (std::uint32_t i = 0; i < order_; ++i) {
    out[static_cast<std::size_t>((u % order_) * i % order_)] = mult_[i];
  }
  return Block(group(), std::move(out));
}

std::string Block::text() const {
  std::string out;
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (mult_[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
    if (mult_[i] != 1) {
      out += '^';
      out += std::to_string(mult_[i]);
    }
  }
  return out;
}

std::string Block::serialized() const {
  std::string out = "[" + std::to_string(order_) + ";";
  for (std::uint32_t i = 0; i < order_; ++i) {
    out += i == 0 ? " " : ", ";
    out += std::to_string(mult_[i]);
  }
  out += "]";
  return out;
}

Block operator*(const Block& a, const Block& b) {
  if (a.order() != b.order()) {
    throw InvalidParameter("cannot combine blocks over Z_" +
                           std::to_string(a.order()) + " and Z_" +
                           std::to_string(b.order()));
  }
  std::vector<std::uint64_t> out(a.order(), 0);
  for (std::uint32_t i = 0; i < a.order(); ++i) {
    out[i] = checked_add(a.mult()[i], b.mult()[i]);
  }
  return Block(a.group(), std::move(out));
}

bool divides(const Block& a, const Block& x) {
  if (a.order() != x.order()) return false;
  for (std::uint32_t i = 0; i < a.order(); ++i) {
    if (a.mult()[i] > x.mult()[i]) return false;
  }
  return true;
}

bool shortlex_less(const Block& a, const Block& b) {
  if (a.order() != b.order()) {
    throw InvalidParameter("comparing blocks over different groups");
  }
  if (a.length() != b.length()) return a.length() < b.length();
  // Equal lengths: the expanded residue sequence of the block with more
  // copies of the first differing residue starts with the smaller entry.
  for (std::uint32_t i = 0; i < a.order(); ++i) {
    if (a.mult()[i] != b.mult()[i]) return a.mult()[i] > b.mult()[i];
  }
  return false;
}

bool lex_less(const Block& a, const Block& b) {
  if (a.order() != b.order()) {
    throw InvalidParameter("comparing blocks over different groups");
  }
  return a.mult() < b.mult();
}

SubsequenceSums subsequence_sums(std::span<const std::uint64_t> values) {
  if (values.empty()) {
    throw EmptyInput("subsequence sums of an empty list");
  }
  SubsequenceSums result;
  result.sigma = 0;
  for (std::uint64_t v : values) {
    if (v == 0) {
      throw InvalidParameter("subsequence sums require positive entries");
    }
    result.sigma = checked_add(result.sigma, v);
    std::set<std::uint64_t> next = result.sums;
    next.insert(v);
    for (std::uint64_t s : result.sums) next.insert(checked_add(s, v));
    result.sums = std::move(next);
  }
  return result;
}

}  // namespace blockfact

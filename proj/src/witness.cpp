#include "blockfact/witness.hpp"

#include <algorithm>

#include "blockfact/survey.hpp"

namespace blockfact {

namespace {

LengthSet expand_predicted(const std::vector<std::uint64_t>& b,
                           std::uint64_t m, std::uint64_t n) {
  LengthSet out;
  out.insert(3);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t size = 0;
    std::uint64_t sum = 0;
    for (std::uint64_t j = 0; j < m; ++j) {
      if (mask & (std::uint64_t{1} << j)) {
        ++size;
        sum += b[j + 1];
      }
    }
    out.insert(1 + size + n - sum);  // sum <= sigma < n
  }
  return out;
}

}  // namespace

ArchimedeanWitness build_witness(std::uint64_t m,
                                 std::optional<std::uint64_t> b0,
                                 std::optional<std::uint64_t> n) {
  if (m == 0) throw InvalidParameter("witness size m must be positive");
  if (m >= 40) {
    throw InvalidParameter("witness size m = " + std::to_string(m) +
                           " overflows 64-bit arithmetic");
  }
  const std::uint64_t base = b0.value_or(m + 1);
  if (base <= m) {
    throw InvalidParameter("b0 = " + std::to_string(base) +
                           " must exceed m = " + std::to_string(m));
  }

  std::vector<std::uint64_t> b{base};
  std::uint64_t prefix_sum = base;  // b_0 + ... + b_k
  for (std::uint64_t k = 0; k < m; ++k) {
    const std::uint64_t next =
        checked_add(checked_mul(2, prefix_sum), checked_mul(2, m));
    b.push_back(next);
    prefix_sum = checked_add(prefix_sum, next);
  }
  const std::uint64_t sigma = prefix_sum - base;

  const std::uint64_t order = n.value_or(checked_add(sigma, 2));
  if (order <= sigma) {
    throw InvalidParameter("group order " + std::to_string(order) +
                           " must exceed sigma = " + std::to_string(sigma));
  }
  if (order > CyclicGroup::kMaxOrder) {
    throw InvalidParameter("group order " + std::to_string(order) +
                           " exceeds the supported maximum");
  }

  CyclicGroup group(static_cast<std::uint32_t>(order));
  std::vector<std::uint64_t> mult(order, 0);
  mult[1] += 2 * order - sigma;
  mult[order - 1] += order;
  for (std::uint64_t i = 1; i <= m; ++i) mult[b[i] % order] += 1;

  ArchimedeanWitness w{m, std::move(b), sigma, order,
                       Block(group, std::move(mult)), {}};
  w.predicted_lengths = expand_predicted(w.b, m, order);
  return w;
}

LengthSet predicted_length_set(const ArchimedeanWitness& w) {
  return expand_predicted(w.b, w.m, w.n);
}

std::uint64_t predicted_delta_card(const ArchimedeanWitness& w) {
  const DeltaSet delta = gaps(predicted_length_set(w));
  // The band argument: the gap between the top of band k and the bottom of
  // band k-1 is b_k - (b_1 + ... + b_{k-1}) + (k - 2), and the growth of
  // the b_k makes these m values pairwise distinct.
  std::set<std::uint64_t> guaranteed;
  std::uint64_t below = 0;  // b_1 + ... + b_{k-1}
  for (std::uint64_t k = 1; k <= w.m; ++k) {
    const std::uint64_t gap = w.b[k] - below + k - 2;  // b_k > below + 2
    if (delta.count(gap) == 0 || !guaranteed.insert(gap).second) {
      throw Error("internal inconsistency in the predicted gap values of a "
                  "witness; this is a bug");
    }
    below += w.b[k];
  }
  return delta.size();
}

bool verify_witness(const ArchimedeanWitness& w, const Limits& limits) {
  return length_set(w.x, limits) == predicted_length_set(w);
}

std::optional<Block> singleton_witness(CyclicGroup group, std::uint64_t i,
                                       std::uint64_t max_len,
                                       const Limits& limits) {
  const std::uint32_t n = group.order();
  if (n < 3 || i < 1 || i > n - 2) {
    throw OutOfRange("target gap " + std::to_string(i) +
                     " outside {1, ..., " + std::to_string(n) + " - 2}");
  }
  if (i == n - 2 && 2ull * n <= max_len) {
    std::vector<std::uint64_t> mult(n, 0);
    mult[1] = n;
    mult[n - 1] = n;
    return Block(group, std::move(mult));  // the seed g^n (-g)^n
  }
  const DeltaSet target{i};
  std::optional<Block> found;
  SurveyConfig config{group, max_len, std::nullopt, false};
  enumerate_blocks(config, [&](const Block& x) {
    if (delta_set(x, limits) == target) {
      found = x;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace blockfact

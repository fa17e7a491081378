#ifndef BLOCKFACT_WITNESS_HPP_
#define BLOCKFACT_WITNESS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "blockfact/factorization.hpp"

namespace blockfact {

/// A constructed block over Z_n with at least m distinct delta values.
///
/// The data: b_0 > m, then b_{k+1} = 2(b_0 + ... + b_k) + 2m for
/// k = 0, ..., m-1; sigma = b_1 + ... + b_m (b_0 excluded); n > sigma; and
///   x = g^(2n - sigma) (-g)^n (b_1 g) ... (b_m g).
/// The sharp growth of the b_k makes all 2^m subset sums of {b_1,...,b_m}
/// distinct, which is what spreads the factorization lengths apart.
struct ArchimedeanWitness {
  std::uint64_t m;
  std::vector<std::uint64_t> b;  ///< b_0, ..., b_m
  std::uint64_t sigma;           ///< b_1 + ... + b_m
  std::uint64_t n;               ///< group order
  Block x;
  LengthSet predicted_lengths;
};

/// Builds the witness. Defaults: b0 = m+1 and n = sigma + 2 (the +2
/// keeps b_m g distinct from -g; any n > sigma is accepted). Throws
/// InvalidParameter when b0 <= m or n <= sigma.
ArchimedeanWitness build_witness(std::uint64_t m,
                                 std::optional<std::uint64_t> b0 = std::nullopt,
                                 std::optional<std::uint64_t> n = std::nullopt);

/// The closed-form length set {3} union {1 + |J| + n - sum_J b_j} over all
/// J inside {1, ..., m}, by direct expansion of the 2^m subsets.
LengthSet predicted_length_set(const ArchimedeanWitness& w);

/// |gaps(predicted_length_set)|. Also recomputes the m guaranteed gap
/// values b_k - (b_1 + ... + b_{k-1}) + (k - 2) and checks they are
/// pairwise distinct members, so the result is provably >= m.
std::uint64_t predicted_delta_card(const ArchimedeanWitness& w);

/// True iff the engine's length_set(w.x) equals the predicted set. The
/// factorization search runs over atoms dividing x only; the support of x
/// has just m + 2 residues, so this stays small even for n in the
/// thousands.
bool verify_witness(const ArchimedeanWitness& w, const Limits& limits = {});

/// A block with delta set exactly {i}, 1 <= i <= n-2. The seed family
/// g^n (-g)^n realizes {n-2} directly; other targets are found by bounded
/// scan in (length, shortlex) order. nullopt when no witness of length
/// <= max_len exists.
std::optional<Block> singleton_witness(CyclicGroup group, std::uint64_t i,
                                       std::uint64_t max_len,
                                       const Limits& limits = {});

}  // namespace blockfact

#endif  // BLOCKFACT_WITNESS_HPP_

#ifndef BLOCKFACT_NUMERICAL_HPP_
#define BLOCKFACT_NUMERICAL_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "blockfact/factorization.hpp"

namespace blockfact {

/// A primitive numerical monoid <a_1, ..., a_k> given by its minimal
/// generating set. Construction rejects non-increasing input, gcd != 1,
/// and any generator representable over the others.
class NumericalMonoid {
 public:
  explicit NumericalMonoid(std::vector<std::uint64_t> generators);

  const std::vector<std::uint64_t>& generators() const { return generators_; }

 private:
  std::vector<std::uint64_t> generators_;
};

/// One additive decomposition of an element: exponents (x_1, ..., x_k)
/// with sum x_i * a_i equal to the element; its length is sum x_i.
using NmFactorization = std::vector<std::uint64_t>;

std::uint64_t nm_length(const NmFactorization& f);

/// All nonnegative solutions of sum x_i a_i = s, sorted by exponent
/// vector; empty exactly when s is not in the monoid.
std::vector<NmFactorization> nm_factorizations(const NumericalMonoid& monoid,
                                               std::uint64_t s,
                                               const Limits& limits = {});

/// Lengths of nm_factorizations; empty when s is not in the monoid.
LengthSet nm_length_set(const NumericalMonoid& monoid, std::uint64_t s,
                        const Limits& limits = {});

/// Gaps of the length set.
DeltaSet nm_delta_set(const NumericalMonoid& monoid, std::uint64_t s,
                      const Limits& limits = {});

/// Delta sets of every monoid element in [0, up_to]. The scan is bound
/// limited: it proves which delta sets occur up to the bound, and nothing
/// about larger elements.
struct NmScanReport {
  std::vector<std::uint64_t> generators;
  std::uint64_t up_to = 0;
  DeltaSet delta_union;
  std::map<DeltaSet, std::uint64_t> realized;  ///< delta set -> least witness
  std::vector<std::pair<std::uint64_t, DeltaSet>> per_element;
  std::uint64_t elements_scanned = 0;
  bool bound_limited = true;
};
NmScanReport nm_scan(const NumericalMonoid& monoid, std::uint64_t up_to,
                     const Limits& limits = {});

}  // namespace blockfact

#endif  // BLOCKFACT_NUMERICAL_HPP_

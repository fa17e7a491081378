#ifndef BLOCKFACT_SURVEY_HPP_
#define BLOCKFACT_SURVEY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "blockfact/factorization.hpp"

namespace blockfact {

/// Scope of an exhaustive block scan.
struct SurveyConfig {
  CyclicGroup group;
  std::uint64_t max_len;                          ///< bound on |x|
  std::optional<std::set<std::uint32_t>> support; ///< restrict to B(G, S)
  bool quotient_by_units = false;  ///< one block per unit-relabeling orbit

  /// The default scan bound 2n+4: long enough for the g^n(-g)^n family
  /// (length 2n) and the classical |delta| = 2 witness over Z_5 (length 14).
  static SurveyConfig defaults(CyclicGroup group);

  /// Effective support: the configured set minus residue 0, or all of
  /// {1, ..., n-1}. Entries >= n throw OutOfRange.
  std::vector<std::uint32_t> effective_support() const;
};

/// Streams every nonempty zero-sum block x with |x| <= max_len, supp(x)
/// inside the configured support and mult[0] = 0, each exactly once, in
/// (length, shortlex) order. With quotient_by_units, only the shortlex
/// least block of each unit-orbit is emitted. The visitor returns false
/// to stop early.
void enumerate_blocks(const SurveyConfig& config,
                      const std::function<bool(const Block&)>& visit);

/// True iff T (a nonempty subset of {1, ..., n-2}) is ruled out by the
/// containment rule: n-2 in T but T != {n-2}.
bool corollary_excludes(std::uint32_t n, const DeltaSet& T);

enum class SubsetStatus { kRealized, kExcluded, kUnknown };

/// Outcome of a survey. "Unknown" is an honest verdict: nothing beyond
/// the witnesses found and the containment rule is ever claimed.
struct SurveyReport {
  explicit SurveyReport(SurveyConfig c) : config(std::move(c)) {}

  SurveyConfig config;

  std::map<DeltaSet, Block> realized;   ///< T -> shortlex-least witness
  DeltaSet delta_union;                 ///< union of all delta sets seen
  std::uint64_t max_delta_card = 0;
  std::optional<Block> max_delta_witness;

  std::uint64_t blocks_scanned = 0;
  std::uint64_t skipped_blocks = 0;     ///< blocks lost to ResourceLimit
  bool resource_limited = false;

  bool complete() const { return !resource_limited; }
  SubsetStatus status(const DeltaSet& T) const;

  /// All nonempty subsets of {1, ..., n-2}, ordered by (size, elements).
  /// Throws ResourceLimit when n-2 > 20 (the table would not fit anywhere).
  std::vector<DeltaSet> all_subsets() const;
};

/// Resumable survey state: the merged result of a prefix of the shard
/// list. Shards partition the block stream by least support residue.
struct SurveyProgress {
  std::vector<std::uint32_t> completed_shards;  ///< prefix, ascending
  SurveyReport partial;
};

/// Classifies every delta set occurring among the enumerated blocks.
/// Witnesses are re-verified on insertion; a per-block ResourceLimit is
/// recorded (skipped_blocks, resource_limited), never silently dropped.
///
/// Shards may run on `threads` workers; results merge in shard order, so
/// the report is byte-identical for any thread count. `resume` continues
/// from a completed-shard prefix; `on_progress` fires after each newly
/// merged shard (checkpointing hook).
SurveyReport survey(const SurveyConfig& config, const Limits& limits = {},
                    unsigned threads = 1,
                    const SurveyProgress* resume = nullptr,
                    const std::function<void(const SurveyProgress&)>&
                        on_progress = nullptr);

/// A block whose delta set contains n-2 together with something else,
/// contradicting the gap theorem. Expected to be empty.
struct GapTheoremViolation {
  Block block;
  DeltaSet delta;
};
std::vector<GapTheoremViolation> check_theorem_3_2(const SurveyConfig& config,
                                                   const Limits& limits = {});

/// A factorization z = W^r (-W)^s B V^q (r, s > 0, W = g^n, V = g(-g),
/// for some generator g) sitting at the bottom of an (n-2)-gap in L(u)
/// whose residual part B is nonempty. Expected to be empty.
struct ChainLemmaViolation {
  Block block;
  Factorization z;
  std::uint32_t generator;
};
std::vector<ChainLemmaViolation> check_lemma_3_1(CyclicGroup group,
                                                 std::uint64_t max_len,
                                                 const Limits& limits = {});

/// max |delta(x)| over the enumerated blocks, with a shortlex-least
/// witness; a lower bound for the group's true maximum.
std::pair<std::uint64_t, std::optional<Block>> lambda_lower_bound(
    const SurveyConfig& config, const Limits& limits = {});

}  // namespace blockfact

#endif  // BLOCKFACT_SURVEY_HPP_

#include "blockfact/survey.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace blockfact {

SurveyConfig SurveyConfig::defaults(CyclicGroup group) {
  return SurveyConfig{group, 2ull * group.order() + 4, std::nullopt, false};
}

std::vector<std::uint32_t> SurveyConfig::effective_support() const {
  const std::uint32_t n = group.order();
  std::vector<std::uint32_t> out;
  if (support) {
    for (std::uint32_t r : *support) {
      if (r >= n) {
        throw OutOfRange("support residue " + std::to_string(r) +
                         " out of range for Z_" + std::to_string(n));
      }
      if (r != 0) out.push_back(r);
    }
  } else {
    for (std::uint32_t r = 1; r < n; ++r) out.push_back(r);
  }
  return out;
}

namespace {

bool is_orbit_representative(const Block& x,
                             const std::vector<std::uint32_t>& units) {
  for (std::uint32_t u : units) {
    if (u == 1) continue;
    if (shortlex_less(x.relabeled(u), x)) return false;
  }
  return true;
}

// Emits the blocks of one scan in (length, shortlex) order. When
// min_support is set, only blocks whose least support residue equals it
// are emitted (the shard partition); the support list must already be
// trimmed to residues >= *min_support.
class BlockEnumerator {
 public:
  BlockEnumerator(const SurveyConfig& config,
                  std::vector<std::uint32_t> support,
                  std::optional<std::uint32_t> min_support,
                  const std::function<bool(const Block&)>& visit)
      : group_(config.group),
        n_(config.group.order()),
        max_len_(config.max_len),
        quotient_(config.quotient_by_units),
        units_(config.group.units()),
        support_(std::move(support)),
        min_support_(min_support),
        visit_(visit),
        counts_(n_, 0) {}

  void run() {
    if (support_.empty()) return;
    for (std::uint64_t len = 1; len <= max_len_; ++len) {
      if (!per_length(0, len, 0)) return;
    }
  }

 private:
  // Chooses counts_[support_[idx]]; remaining elements still to place.
  bool per_length(std::size_t idx, std::uint64_t remaining,
                  std::uint32_t sum_mod) {
    if (idx + 1 == support_.size()) {
      return take(idx, remaining, sum_mod, /*descend=*/false);
    }
    for (std::uint64_t c = remaining;; --c) {
      if (!take(idx, c, sum_mod, /*descend=*/true, remaining - c)) {
        return false;
      }
      if (c == 0) break;
    }
    return true;
  }

  bool take(std::size_t idx, std::uint64_t count, std::uint32_t sum_mod,
            bool descend, std::uint64_t remaining_after = 0) {
    const std::uint32_t r = support_[idx];
    if (idx == 0 && min_support_ && count == 0) {
      return true;  // shard requires residue *min_support_ to occur
    }
    counts_[r] = count;
    const std::uint32_t new_sum = static_cast<std::uint32_t>(
        (sum_mod + static_cast<std::uint64_t>(r) * (count % n_)) % n_);
    bool keep_going = true;
    if (descend) {
      keep_going = per_length(idx + 1, remaining_after, new_sum);
    } else if (new_sum == 0) {
      Block x(group_, counts_);
      if (!quotient_ || is_orbit_representative(x, units_)) {
        keep_going = visit_(x);
      }
    }
    counts_[r] = 0;
    return keep_going;
  }

  CyclicGroup group_;
  std::uint32_t n_;
  std::uint64_t max_len_;
  bool quotient_;
  std::vector<std::uint32_t> units_;
  std::vector<std::uint32_t> support_;
  std::optional<std::uint32_t> min_support_;
  const std::function<bool(const Block&)>& visit_;
  std::vector<std::uint64_t> counts_;
};

void enumerate_shard(const SurveyConfig& config, std::uint32_t shard,
                     const std::function<bool(const Block&)>& visit) {
  std::vector<std::uint32_t> support;
  for (std::uint32_t r : config.effective_support()) {
    if (r >= shard) support.push_back(r);
  }
  BlockEnumerator(config, std::move(support), shard, visit).run();
}

}  // namespace

void enumerate_blocks(const SurveyConfig& config,
                      const std::function<bool(const Block&)>& visit) {
  BlockEnumerator(config, config.effective_support(), std::nullopt, visit)
      .run();
}

bool corollary_excludes(std::uint32_t n, const DeltaSet& T) {
  if (n < 2) throw InvalidParameter("corollary_excludes requires n >= 2");
  if (T.empty()) throw OutOfRange("empty delta set has no realizability status");
  for (std::uint64_t t : T) {
    if (t < 1 || t > n - 2) {
      throw OutOfRange("delta value " + std::to_string(t) +
                       " outside {1, ..., " + std::to_string(n - 2) + "}");
    }
  }
  return T.count(n - 2) != 0 && T.size() > 1;
}

SubsetStatus SurveyReport::status(const DeltaSet& T) const {
  if (realized.count(T) != 0) return SubsetStatus::kRealized;
  if (corollary_excludes(config.group.order(), T)) {
    return SubsetStatus::kExcluded;
  }
  return SubsetStatus::kUnknown;
}

std::vector<DeltaSet> SurveyReport::all_subsets() const {
  const std::uint32_t n = config.group.order();
  const std::uint32_t width = n - 2;
  if (width > 20) {
    throw ResourceLimit("classification table over {1, ..., " +
                        std::to_string(width) + "} has 2^" +
                        std::to_string(width) + " rows");
  }
  std::vector<DeltaSet> out;
  for (std::uint64_t mask = 1; mask < (1ull << width); ++mask) {
    DeltaSet T;
    for (std::uint32_t b = 0; b < width; ++b) {
      if (mask & (1ull << b)) T.insert(b + 1);
    }
    out.push_back(std::move(T));
  }
  std::sort(out.begin(), out.end(), [](const DeltaSet& a, const DeltaSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

void add_block(SurveyReport& report, const Block& x, const DeltaSet& delta) {
  ++report.blocks_scanned;
  report.delta_union.insert(delta.begin(), delta.end());
  if (!delta.empty()) {
    auto it = report.realized.find(delta);
    if (it == report.realized.end()) {
      report.realized.emplace(delta, x);
    } else if (shortlex_less(x, it->second)) {
      it->second = x;
    }
  }
  if (!report.max_delta_witness || delta.size() > report.max_delta_card ||
      (delta.size() == report.max_delta_card &&
       shortlex_less(x, *report.max_delta_witness))) {
    report.max_delta_card = delta.size();
    report.max_delta_witness = x;
  }
}

void merge_reports(SurveyReport& dst, const SurveyReport& src) {
  for (const auto& [delta, witness] : src.realized) {
    auto it = dst.realized.find(delta);
    if (it == dst.realized.end()) {
      dst.realized.emplace(delta, witness);
    } else if (shortlex_less(witness, it->second)) {
      it->second = witness;
    }
  }
  dst.delta_union.insert(src.delta_union.begin(), src.delta_union.end());
  if (src.max_delta_witness &&
      (!dst.max_delta_witness || src.max_delta_card > dst.max_delta_card ||
       (src.max_delta_card == dst.max_delta_card &&
        shortlex_less(*src.max_delta_witness, *dst.max_delta_witness)))) {
    dst.max_delta_card = src.max_delta_card;
    dst.max_delta_witness = src.max_delta_witness;
  }
  dst.blocks_scanned += src.blocks_scanned;
  dst.skipped_blocks += src.skipped_blocks;
  dst.resource_limited = dst.resource_limited || src.resource_limited;
}

SurveyReport run_shard(const SurveyConfig& config, std::uint32_t shard,
                       const Limits& limits) {
  SurveyReport result{config};
  enumerate_shard(config, shard, [&](const Block& x) {
    try {
      add_block(result, x, delta_set(x, limits));
    } catch (const ResourceLimit&) {
      ++result.blocks_scanned;
      ++result.skipped_blocks;
      result.resource_limited = true;
    }
    return true;
  });
  return result;
}

}  // namespace

SurveyReport survey(const SurveyConfig& config, const Limits& limits,
                    unsigned threads, const SurveyProgress* resume,
                    const std::function<void(const SurveyProgress&)>&
                        on_progress) {
  const std::vector<std::uint32_t> shards = config.effective_support();

  SurveyProgress progress{{}, SurveyReport{config}};
  std::size_t first_pending = 0;
  if (resume) {
    if (resume->completed_shards.size() > shards.size()) {
      throw CorruptCheckpoint("checkpoint lists more shards than the config");
    }
    for (std::size_t i = 0; i < resume->completed_shards.size(); ++i) {
      if (resume->completed_shards[i] != shards[i]) {
        throw CorruptCheckpoint("checkpoint shard list is not a prefix of "
                                "the configured scan");
      }
    }
    progress = *resume;
    first_pending = resume->completed_shards.size();
  }

  const std::vector<std::uint32_t> pending(shards.begin() + first_pending,
                                           shards.end());
  std::vector<std::optional<SurveyReport>> slots(pending.size());

  if (threads <= 1 || pending.size() <= 1) {
    for (std::size_t k = 0; k < pending.size(); ++k) {
      slots[k] = run_shard(config, pending[k], limits);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr failure;
    auto work = [&] {
      while (true) {
        const std::size_t k = next.fetch_add(1);
        if (k >= pending.size()) return;
        try {
          SurveyReport shard_result = run_shard(config, pending[k], limits);
          std::lock_guard<std::mutex> lock(mu);
          slots[k] = std::move(shard_result);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const auto want = static_cast<unsigned>(
        std::min<std::size_t>(threads, pending.size()));
    pool.reserve(want);
    for (unsigned t = 0; t < want; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Merge strictly in shard order: the report is independent of how the
  // shard computations were scheduled.
  for (std::size_t k = 0; k < pending.size(); ++k) {
    merge_reports(progress.partial, *slots[k]);
    progress.completed_shards.push_back(pending[k]);
    if (on_progress) on_progress(progress);
  }
  progress.partial.config = config;
  return progress.partial;
}

std::vector<GapTheoremViolation> check_theorem_3_2(const SurveyConfig& config,
                                                   const Limits& limits) {
  const std::uint32_t n = config.group.order();
  if (n < 3) throw InvalidParameter("gap theorem check requires n >= 3");
  std::vector<GapTheoremViolation> violations;
  enumerate_blocks(config, [&](const Block& x) {
    DeltaSet d = delta_set(x, limits);
    if (d.count(n - 2) != 0 && d.size() != 1) {
      violations.push_back({x, std::move(d)});
    }
    return true;
  });
  return violations;
}

std::vector<ChainLemmaViolation> check_lemma_3_1(CyclicGroup group,
                                                 std::uint64_t max_len,
                                                 const Limits& limits) {
  const std::uint32_t n = group.order();
  if (n < 3) throw InvalidParameter("chain lemma check requires n >= 3");
  std::vector<ChainLemmaViolation> violations;

  // One (W, -W, V) triple per generator pair {g, n-g}; swapping g and n-g
  // only swaps the roles of W and -W.
  struct Triple {
    std::uint32_t g;
    Block w, neg_w, v;
  };
  std::vector<Triple> triples;
  for (std::uint32_t g : group.units()) {
    if (g > n - g) continue;
    std::vector<std::uint64_t> w(n, 0), negw(n, 0), v(n, 0);
    w[g] = n;
    negw[n - g] = n;
    v[g] = 1;
    v[n - g] = 1;
    triples.push_back({g, Block(group, std::move(w)),
                       Block(group, std::move(negw)),
                       Block(group, std::move(v))});
  }

  SurveyConfig config{group, max_len, std::nullopt, false};
  enumerate_blocks(config, [&](const Block& u) {
    const LengthSet lengths = length_set(u, limits);
    std::vector<std::uint64_t> lower_ends;  // smaller length of each (n-2)-gap
    if (lengths.size() >= 2) {
      auto it = lengths.begin();
      std::uint64_t prev = *it++;
      for (; it != lengths.end(); ++it) {
        if (*it - prev == n - 2) lower_ends.push_back(prev);
        prev = *it;
      }
    }
    if (lower_ends.empty()) return true;

    const std::vector<Factorization> all = factorizations(u, limits);
    const AtomTable& table = *all.front().table();
    for (const Triple& triple : triples) {
      const auto iw = table.find(triple.w);
      const auto inegw = table.find(triple.neg_w);
      if (!iw || !inegw) continue;
      const auto iv = table.find(triple.v);
      for (const Factorization& z : all) {
        if (std::find(lower_ends.begin(), lower_ends.end(), z.length()) ==
            lower_ends.end()) {
          continue;
        }
        if (z.count_of(static_cast<std::uint32_t>(*iw)) == 0 ||
            z.count_of(static_cast<std::uint32_t>(*inegw)) == 0) {
          continue;
        }
        // z = W^r (-W)^s B V^q with r, s > 0: the residual B may contain
        // nothing but copies of the prime 0.
        for (const auto& [index, count] : z.counts()) {
          if (index == *iw || index == *inegw) continue;
          if (iv && index == *iv) continue;
          const Block& atom = table.atom(index);
          if (atom.length() == atom.mult()[0]) continue;  // the atom "0"
          violations.push_back({u, z, triple.g});
          break;
        }
      }
    }
    return true;
  });
  return violations;
}

std::pair<std::uint64_t, std::optional<Block>> lambda_lower_bound(
    const SurveyConfig& config, const Limits& limits) {
  std::uint64_t best = 0;
  std::optional<Block> witness;
  enumerate_blocks(config, [&](const Block& x) {
    const DeltaSet d = delta_set(x, limits);
    if (!witness || d.size() > best ||
        (d.size() == best && shortlex_less(x, *witness))) {
      best = d.size();
      witness = x;
    }
    return true;
  });
  return {best, witness};
}

}  // namespace blockfact

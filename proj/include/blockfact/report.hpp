#ifndef BLOCKFACT_REPORT_HPP_
#define BLOCKFACT_REPORT_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include "blockfact/numerical.hpp"
#include "blockfact/survey.hpp"

namespace blockfact {

/// Writes `contents` to `path` via a temporary file in the same directory
/// followed by a rename, so readers never observe a partial file.
void atomic_write(const std::filesystem::path& path,
                  const std::string& contents);

/// An exclusive advisory lock (flock) on `path`.lock, released on
/// destruction. Throws IoError when another process holds it.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path);
  ~FileLock();
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
  std::filesystem::path lock_path_;
};

/// SHA-256 of the canonical JSON form of a survey config. Embedded in
/// checkpoints and reports so state from a different run is never mixed in.
std::string survey_config_hash(const SurveyConfig& config);

/// Survey report as pretty-printed JSON with a full classification table;
/// byte-identical for identical config, version and results.
std::string survey_report_json(const SurveyReport& report);

/// One CSV row per nonempty subset of {1, ..., n-2}.
std::string survey_report_csv(const SurveyReport& report);

/// Human-oriented rendering; not a stable format.
std::string survey_report_text(const SurveyReport& report);

/// Checkpoint file round trip. save is atomic; load validates the tool
/// version and config hash (VersionMismatch) and the structural integrity
/// of the state, re-verifying every stored witness (CorruptCheckpoint).
void save_checkpoint(const SurveyProgress& progress,
                     const std::filesystem::path& path);
SurveyProgress load_checkpoint(const std::filesystem::path& path,
                               const SurveyConfig& expected_config);

/// Continues a checkpointed survey to completion, starting fresh when the
/// file does not exist yet; a finished checkpoint just has its report
/// re-emitted. The checkpoint file is rewritten after every shard and
/// locked for the duration.
SurveyReport resume_survey(const std::filesystem::path& checkpoint_path,
                           const SurveyConfig& config,
                           const Limits& limits = {}, unsigned threads = 1);

/// The per-block report record, e.g.
/// {"n":5,"block":"1^8 2 4^5","lengths":[3,5,6],"delta":[1,2],
///  "num_factorizations":5} with an optional "catenary" field.
std::string factor_record_json(
    const Block& x, const LengthSet& lengths, const DeltaSet& delta,
    std::uint64_t num_factorizations,
    std::optional<std::uint64_t> catenary = std::nullopt);

/// {"gens":[7,10,12],"elt":56,"lengths":[5,6,8],"delta":[1,2],...}
std::string nm_record_json(const NumericalMonoid& monoid, std::uint64_t elt,
                           const LengthSet& lengths, const DeltaSet& delta,
                           std::uint64_t num_factorizations);

std::string nm_scan_summary_json(const NmScanReport& report);
std::string nm_scan_csv(const NmScanReport& report);

}  // namespace blockfact

#endif  // BLOCKFACT_REPORT_HPP_

#include "blockfact/report.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>

#include <json.hpp>

#include "blockfact/cache.hpp"
#include "blockfact/version.hpp"

namespace blockfact {

using ordered_json = nlohmann::ordered_json;

void atomic_write(const std::filesystem::path& path,
                  const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + tmp.string());
    out.write(contents.data(),
              static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("write failed on " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() +
                  ": " + ec.message());
  }
}

FileLock::FileLock(const std::filesystem::path& path)
    : fd_(-1), lock_path_(path) {
  lock_path_ += ".lock";
  fd_ = ::open(lock_path_.c_str(), O_CREAT | O_RDWR, 0644);
  if (fd_ < 0) {
    throw IoError("cannot open lock file " + lock_path_.string());
  }
  if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd_);
    fd_ = -1;
    throw IoError("another run holds the lock " + lock_path_.string());
  }
}

FileLock::~FileLock() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

namespace {

ordered_json config_json(const SurveyConfig& config) {
  ordered_json j;
  j["n"] = config.group.order();
  j["max_len"] = config.max_len;
  if (config.support) {
    j["support"] = std::vector<std::uint32_t>(config.support->begin(),
                                              config.support->end());
  } else {
    j["support"] = nullptr;
  }
  j["quotient_by_units"] = config.quotient_by_units;
  return j;
}

const char* status_name(SubsetStatus status) {
  switch (status) {
    case SubsetStatus::kRealized:
      return "realized";
    case SubsetStatus::kExcluded:
      return "excluded_by_corollary";
    case SubsetStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::string join_delta(const DeltaSet& delta) {
  std::string out;
  for (std::uint64_t d : delta) {
    if (!out.empty()) out += ' ';
    out += std::to_string(d);
  }
  return out;
}

ordered_json partial_json(const SurveyReport& report) {
  ordered_json j;
  ordered_json realized = ordered_json::array();
  for (const auto& [delta, witness] : report.realized) {
    ordered_json entry;
    entry["delta"] = delta;
    entry["witness"] = witness.text();
    realized.push_back(std::move(entry));
  }
  j["realized"] = std::move(realized);
  j["delta_union"] = report.delta_union;
  j["max_delta_card"] = report.max_delta_card;
  if (report.max_delta_witness) {
    j["max_delta_witness"] = report.max_delta_witness->text();
  } else {
    j["max_delta_witness"] = nullptr;
  }
  j["blocks_scanned"] = report.blocks_scanned;
  j["skipped_blocks"] = report.skipped_blocks;
  j["resource_limited"] = report.resource_limited;
  return j;
}

}  // namespace

std::string survey_config_hash(const SurveyConfig& config) {
  return sha256_hex(config_json(config).dump());
}

std::string survey_report_json(const SurveyReport& report) {
  ordered_json j;
  j["tool_version"] = kVersion;
  j["config"] = config_json(report.config);
  j["config_hash"] = survey_config_hash(report.config);
  ordered_json classification = ordered_json::array();
  for (const DeltaSet& T : report.all_subsets()) {
    ordered_json row;
    row["delta"] = T;
    const SubsetStatus status = report.status(T);
    row["status"] = status_name(status);
    if (status == SubsetStatus::kRealized) {
      row["witness"] = report.realized.at(T).text();
    }
    classification.push_back(std::move(row));
  }
  j["classification"] = std::move(classification);
  j["delta_union"] = report.delta_union;
  j["max_delta_card"] = report.max_delta_card;
  if (report.max_delta_witness) {
    j["max_delta_witness"] = report.max_delta_witness->text();
  } else {
    j["max_delta_witness"] = nullptr;
  }
  j["blocks_scanned"] = report.blocks_scanned;
  j["skipped_blocks"] = report.skipped_blocks;
  j["complete"] = report.complete();
  return j.dump(2) + "\n";
}

std::string survey_report_csv(const SurveyReport& report) {
  std::string out = "delta,status,witness\n";
  for (const DeltaSet& T : report.all_subsets()) {
    const SubsetStatus status = report.status(T);
    out += join_delta(T);
    out += ',';
    out += status_name(status);
    out += ',';
    if (status == SubsetStatus::kRealized) out += report.realized.at(T).text();
    out += '\n';
  }
  return out;
}

std::string survey_report_text(const SurveyReport& report) {
  std::string out = "survey of Z_" + std::to_string(report.config.group.order()) +
                    ", |x| <= " + std::to_string(report.config.max_len) + "\n";
  out += "blocks scanned: " + std::to_string(report.blocks_scanned) + "\n";
  for (const DeltaSet& T : report.all_subsets()) {
    const SubsetStatus status = report.status(T);
    out += "  {" + join_delta(T) + "}: ";
    out += status_name(status);
    if (status == SubsetStatus::kRealized) {
      out += "  witness " + report.realized.at(T).text();
    }
    out += '\n';
  }
  out += "delta union: {" + join_delta(report.delta_union) + "}\n";
  out += "max |delta|: " + std::to_string(report.max_delta_card);
  if (report.max_delta_witness) {
    out += "  witness " + report.max_delta_witness->text();
  }
  out += '\n';
  if (!report.complete()) {
    out += "WARNING: " + std::to_string(report.skipped_blocks) +
           " blocks skipped by resource limits; unknowns may be understated\n";
  }
  return out;
}

void save_checkpoint(const SurveyProgress& progress,
                     const std::filesystem::path& path) {
  ordered_json j;
  j["tool_version"] = kVersion;
  j["config"] = config_json(progress.partial.config);
  j["config_hash"] = survey_config_hash(progress.partial.config);
  j["completed_shards"] = progress.completed_shards;
  j["partial"] = partial_json(progress.partial);
  atomic_write(path, j.dump(2) + "\n");
}

SurveyProgress load_checkpoint(const std::filesystem::path& path,
                               const SurveyConfig& expected_config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint " + path.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptCheckpoint("checkpoint " + path.string() +
                            " is not valid JSON: " + e.what());
  }
  try {
    if (j.at("tool_version").get<std::string>() != kVersion) {
      throw VersionMismatch("checkpoint " + path.string() +
                            " was written by version " +
                            j.at("tool_version").get<std::string>());
    }
    if (j.at("config_hash").get<std::string>() !=
        survey_config_hash(expected_config)) {
      throw VersionMismatch("checkpoint " + path.string() +
                            " was written for a different config");
    }
    SurveyProgress progress{{}, SurveyReport{expected_config}};
    progress.completed_shards =
        j.at("completed_shards").get<std::vector<std::uint32_t>>();
    const auto& partial = j.at("partial");
    SurveyReport& report = progress.partial;
    for (const auto& entry : partial.at("realized")) {
      DeltaSet delta(entry.at("delta").begin(), entry.at("delta").end());
      Block witness = Block::parse(expected_config.group,
                                   entry.at("witness").get<std::string>());
      if (delta_set(witness) != delta) {
        throw CorruptCheckpoint("checkpoint witness \"" + witness.text() +
                                "\" does not realize its recorded delta set");
      }
      report.realized.emplace(std::move(delta), std::move(witness));
    }
    report.delta_union = DeltaSet(partial.at("delta_union").begin(),
                                  partial.at("delta_union").end());
    report.max_delta_card = partial.at("max_delta_card").get<std::uint64_t>();
    if (!partial.at("max_delta_witness").is_null()) {
      report.max_delta_witness = Block::parse(
          expected_config.group,
          partial.at("max_delta_witness").get<std::string>());
    }
    report.blocks_scanned = partial.at("blocks_scanned").get<std::uint64_t>();
    report.skipped_blocks = partial.at("skipped_blocks").get<std::uint64_t>();
    report.resource_limited = partial.at("resource_limited").get<bool>();
    return progress;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptCheckpoint("checkpoint " + path.string() +
                            " has a malformed field: " + e.what());
  }
}

SurveyReport resume_survey(const std::filesystem::path& checkpoint_path,
                           const SurveyConfig& config, const Limits& limits,
                           unsigned threads) {
  FileLock lock(checkpoint_path);
  std::optional<SurveyProgress> progress;
  if (std::filesystem::exists(checkpoint_path)) {
    progress = load_checkpoint(checkpoint_path, config);
  }
  return survey(config, limits, threads, progress ? &*progress : nullptr,
                [&](const SurveyProgress& p) {
                  save_checkpoint(p, checkpoint_path);
                });
}

std::string factor_record_json(const Block& x, const LengthSet& lengths,
                               const DeltaSet& delta,
                               std::uint64_t num_factorizations,
                               std::optional<std::uint64_t> catenary) {
  ordered_json j;
  j["n"] = x.order();
  j["block"] = x.text();
  j["lengths"] = lengths;
  j["delta"] = delta;
  j["num_factorizations"] = num_factorizations;
  if (catenary) j["catenary"] = *catenary;
  return j.dump() + "\n";
}

std::string nm_record_json(const NumericalMonoid& monoid, std::uint64_t elt,
                           const LengthSet& lengths, const DeltaSet& delta,
                           std::uint64_t num_factorizations) {
  ordered_json j;
  j["gens"] = monoid.generators();
  j["elt"] = elt;
  j["lengths"] = lengths;
  j["delta"] = delta;
  j["num_factorizations"] = num_factorizations;
  return j.dump() + "\n";
}

std::string nm_scan_summary_json(const NmScanReport& report) {
  ordered_json j;
  j["gens"] = report.generators;
  j["up_to"] = report.up_to;
  j["delta_union"] = report.delta_union;
  ordered_json realized = ordered_json::array();
  for (const auto& [delta, witness] : report.realized) {
    ordered_json entry;
    entry["delta"] = delta;
    entry["witness"] = witness;
    realized.push_back(std::move(entry));
  }
  j["realized"] = std::move(realized);
  j["elements_scanned"] = report.elements_scanned;
  j["bound_limited"] = report.bound_limited;
  return j.dump(2) + "\n";
}

std::string nm_scan_csv(const NmScanReport& report) {
  std::string out = "s,delta\n";
  for (const auto& [s, delta] : report.per_element) {
    out += std::to_string(s);
    out += ',';
    out += join_delta(delta);
    out += '\n';
  }
  return out;
}

}  // namespace blockfact

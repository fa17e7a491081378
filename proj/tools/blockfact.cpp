// Command-line front end: every subcommand parses into a plain config,
// dispatches to the library, and emits one deterministic report artifact.
// Exit status: 0 success, 1 input error, 2 resource limit.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockfact/cache.hpp"
#include "blockfact/metrics.hpp"
#include "blockfact/numerical.hpp"
#include "blockfact/report.hpp"
#include "blockfact/survey.hpp"
#include "blockfact/version.hpp"
#include "blockfact/witness.hpp"

namespace {

using blockfact::Block;
using blockfact::CyclicGroup;
using blockfact::DeltaSet;
using blockfact::LengthSet;
using blockfact::Limits;
using blockfact::SurveyConfig;
using ordered_json = nlohmann::ordered_json;

void emit(const std::string& contents, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << contents;
  } else {
    blockfact::atomic_write(out_path, contents);
  }
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("BLOCKFACT_CACHE_DIR")) return env;
  return "blockfact-cache";
}

struct CommonOptions {
  std::string out;
  std::string format = "json";
  Limits limits;

  void attach(CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--out", out, "write the report here (atomically)");
    if (with_format) {
      cmd->add_option("--format", format, "json, csv or text")
          ->check(CLI::IsMember({"json", "csv", "text"}));
    }
    cmd->add_option("--max-nodes", limits.max_nodes,
                    "search node ceiling before aborting");
    cmd->add_option("--max-factorizations", limits.max_factorizations,
                    "stored factorization ceiling");
    cmd->add_option("--max-atoms", limits.max_atoms, "atom table ceiling");
    cmd->add_option("--max-vertices", limits.max_graph_vertices,
                    "factorization graph ceiling");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization invariants in block monoids over finite cyclic "
               "groups and in numerical monoids"};
  app.set_version_flag("--version", std::string(blockfact::kVersion));
  app.require_subcommand(1);

  std::function<void()> action;

  // ---- atoms ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("atoms", "enumerate the atoms of B(Z_n)");
    auto n = std::make_shared<std::uint32_t>(0);
    auto cache_dir = std::make_shared<std::string>(default_cache_dir());
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("--n", *n, "group order")->required();
    cmd->add_option("--cache-dir", *cache_dir,
                    "atom cache directory (env BLOCKFACT_CACHE_DIR)");
    opts->attach(cmd);
    cmd->callback([n, cache_dir, opts, &action] {
      action = [=] {
        auto result = blockfact::cache_load_or_build(
            CyclicGroup(*n), *cache_dir, opts->limits);
        std::cerr << "[atoms] " << (result.loaded_from_cache ? "loaded" : "built")
                  << " " << result.table.size() << " atoms ("
                  << result.file.string() << ")\n";
        if (opts->format == "json") {
          ordered_json j;
          j["n"] = *n;
          j["count"] = result.table.size();
          ordered_json atoms = ordered_json::array();
          for (const Block& a : result.table.atoms()) atoms.push_back(a.text());
          j["atoms"] = std::move(atoms);
          emit(j.dump(2) + "\n", opts->out);
        } else {
          emit(blockfact::atom_cache_contents(result.table), opts->out);
        }
      };
    });
  }

  // ---- factor ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "factor", "length set and delta set of one block");
    auto n = std::make_shared<std::uint32_t>(0);
    auto text = std::make_shared<std::string>();
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("--n", *n, "group order")->required();
    cmd->add_option("--block", *text, "block text, e.g. \"1^8 2 4^5\"")
        ->required();
    opts->attach(cmd, /*with_format=*/false);
    cmd->callback([n, text, opts, &action] {
      action = [=] {
        const Block x = Block::parse(CyclicGroup(*n), *text);
        const auto all = blockfact::factorizations(x, opts->limits);
        const LengthSet lengths = blockfact::length_set(x, opts->limits);
        emit(blockfact::factor_record_json(x, lengths,
                                           blockfact::gaps(lengths),
                                           all.size()),
             opts->out);
      };
    });
  }

  // ---- survey ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "survey", "classify realizable delta sets of B(Z_n) up to a bound");
    auto n = std::make_shared<std::uint32_t>(0);
    auto max_len = std::make_shared<std::uint64_t>(0);
    auto support = std::make_shared<std::vector<std::uint32_t>>();
    auto quotient = std::make_shared<bool>(false);
    auto threads = std::make_shared<unsigned>(1);
    auto checkpoint = std::make_shared<std::string>();
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("--n", *n, "group order")->required();
    cmd->add_option("--max-len", *max_len, "length bound (default 2n+4)");
    cmd->add_option("--support", *support, "restrict to these residues")
        ->delimiter(',');
    cmd->add_flag("--quotient-units", *quotient,
                  "scan one block per unit-relabeling orbit");
    cmd->add_option("--threads", *threads, "worker threads over shards");
    cmd->add_option("--checkpoint", *checkpoint,
                    "checkpoint file; resumes when it already exists");
    opts->attach(cmd);
    cmd->callback([=, &action] {
      action = [=] {
        SurveyConfig config = SurveyConfig::defaults(CyclicGroup(*n));
        if (*max_len != 0) config.max_len = *max_len;
        if (!support->empty()) {
          config.support.emplace(support->begin(), support->end());
        }
        config.quotient_by_units = *quotient;
        blockfact::SurveyReport report =
            checkpoint->empty()
                ? blockfact::survey(config, opts->limits, *threads)
                : blockfact::resume_survey(*checkpoint, config, opts->limits,
                                           *threads);
        if (opts->format == "csv") {
          emit(blockfact::survey_report_csv(report), opts->out);
        } else if (opts->format == "text") {
          emit(blockfact::survey_report_text(report), opts->out);
        } else {
          emit(blockfact::survey_report_json(report), opts->out);
        }
        if (!report.complete()) {
          throw blockfact::ResourceLimit(
              std::to_string(report.skipped_blocks) +
              " blocks exceeded resource limits; report marked incomplete");
        }
      };
    });
  }

  // ---- check-thm32 ----------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "check-thm32",
        "exhaustively check: n-2 in delta(x) forces delta(x) = {n-2}");
    auto n = std::make_shared<std::uint32_t>(0);
    auto max_len = std::make_shared<std::uint64_t>(0);
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("--n", *n, "group order")->required();
    cmd->add_option("--max-len", *max_len, "length bound (default 2n+4)");
    opts->attach(cmd, /*with_format=*/false);
    cmd->callback([n, max_len, opts, &action] {
      action = [=] {
        SurveyConfig config = SurveyConfig::defaults(CyclicGroup(*n));
        if (*max_len != 0) config.max_len = *max_len;
        const auto violations =
            blockfact::check_theorem_3_2(config, opts->limits);
        ordered_json j;
        j["n"] = *n;
        j["max_len"] = config.max_len;
        ordered_json rows = ordered_json::array();
        for (const auto& v : violations) {
          ordered_json row;
          row["block"] = v.block.text();
          row["delta"] = v.delta;
          rows.push_back(std::move(row));
        }
        j["violations"] = std::move(rows);
        j["violation_count"] = violations.size();
        emit(j.dump(2) + "\n", opts->out);
      };
    });
  }

  // ---- check-lemma31 --------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "check-lemma31",
        "exhaustively check the W/-W residual structure at (n-2)-gaps");
    auto n = std::make_shared<std::uint32_t>(0);
    auto max_len = std::make_shared<std::uint64_t>(0);
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("--n", *n, "group order")->required();
    cmd->add_option("--max-len", *max_len, "length bound (default 2n+4)");
    opts->attach(cmd, /*with_format=*/false);
    cmd->callback([n, max_len, opts, &action] {
      action = [=] {
        const CyclicGroup group(*n);
        const std::uint64_t bound = *max_len != 0 ? *max_len : 2ull * *n + 4;
        const auto violations =
            blockfact::check_lemma_3_1(group, bound, opts->limits);
        ordered_json j;
        j["n"] = *n;
        j["max_len"] = bound;
        ordered_json rows = ordered_json::array();
        for (const auto& v : violations) {
          ordered_json row;
          row["block"] = v.block.text();
          row["factorization"] = v.z.text();
          row["generator"] = v.generator;
          rows.push_back(std::move(row));
        }
        j["violations"] = std::move(rows);
        j["violation_count"] = violations.size();
        emit(j.dump(2) + "\n", opts->out);
      };
    });
  }

  // ---- catenary -------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "catenary",
        "catenary degree of one block, or its max over all short blocks");
    auto n = std::make_shared<std::uint32_t>(0);
    auto text = std::make_shared<std::string>();
    auto max_len = std::make_shared<std::uint64_t>(0);
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("--n", *n, "group order")->required();
    auto* block_opt = cmd->add_option("--block", *text, "block text");
    cmd->add_option("--max-len", *max_len,
                    "scan every block up to this length instead")
        ->excludes(block_opt);
    opts->attach(cmd, /*with_format=*/false);
    cmd->callback([n, text, max_len, opts, &action] {
      action = [=] {
        const CyclicGroup group(*n);
        if (!text->empty()) {
          const Block x = Block::parse(group, *text);
          const auto all = blockfact::factorizations(x, opts->limits);
          const LengthSet lengths = blockfact::length_set(x, opts->limits);
          emit(blockfact::factor_record_json(
                   x, lengths, blockfact::gaps(lengths), all.size(),
                   blockfact::catenary_degree(all, opts->limits)),
               opts->out);
          return;
        }
        const std::uint64_t bound = *max_len != 0 ? *max_len : 2ull * *n + 4;
        const auto scan = blockfact::catenary_sup(group, bound, opts->limits);
        ordered_json j;
        j["n"] = *n;
        j["max_len"] = bound;
        j["catenary_sup"] = scan.sup;
        j["witness"] = scan.witness ? ordered_json(scan.witness->text())
                                    : ordered_json(nullptr);
        j["blocks_scanned"] = scan.blocks_scanned;
        j["bound_limited"] = true;  // a scan bound yields a lower bound
        emit(j.dump(2) + "\n", opts->out);
      };
    });
  }

  // ---- witness --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "witness", "construct a block with at least m distinct delta values");
    auto m = std::make_shared<std::uint64_t>(0);
    auto b0 = std::make_shared<std::uint64_t>(0);
    auto n = std::make_shared<std::uint64_t>(0);
    auto verify = std::make_shared<bool>(false);
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("m", *m, "number of guaranteed delta values")->required();
    cmd->add_option("--b0", *b0, "base of the growth sequence (default m+1)");
    cmd->add_option("--n", *n, "group order (default sigma+2)");
    cmd->add_flag("--verify", *verify,
                  "also compute the true length set and compare");
    opts->attach(cmd, /*with_format=*/false);
    cmd->callback([m, b0, n, verify, opts, &action] {
      action = [=] {
        const auto w = blockfact::build_witness(
            *m, *b0 != 0 ? std::optional<std::uint64_t>(*b0) : std::nullopt,
            *n != 0 ? std::optional<std::uint64_t>(*n) : std::nullopt);
        ordered_json j;
        j["m"] = w.m;
        j["b"] = w.b;
        j["sigma"] = w.sigma;
        j["n"] = w.n;
        j["block"] = w.x.text();
        j["predicted_lengths"] = w.predicted_lengths;
        j["predicted_delta"] = blockfact::gaps(w.predicted_lengths);
        j["predicted_delta_card"] = blockfact::predicted_delta_card(w);
        if (*verify) {
          const LengthSet actual = blockfact::length_set(w.x, opts->limits);
          j["lengths"] = actual;
          j["delta"] = blockfact::gaps(actual);
          j["verified"] = actual == w.predicted_lengths;
        }
        emit(j.dump(2) + "\n", opts->out);
      };
    });
  }

  // ---- nm -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "nm", "factorization invariants of one numerical monoid element");
    auto gens = std::make_shared<std::vector<std::uint64_t>>();
    auto elt = std::make_shared<std::uint64_t>(0);
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("--gens", *gens, "generators, e.g. 7,10,12")
        ->required()
        ->delimiter(',');
    cmd->add_option("--elt", *elt, "the element to factor")->required();
    opts->attach(cmd, /*with_format=*/false);
    cmd->callback([gens, elt, opts, &action] {
      action = [=] {
        const blockfact::NumericalMonoid monoid(*gens);
        const auto all = blockfact::nm_factorizations(monoid, *elt,
                                                      opts->limits);
        LengthSet lengths;
        for (const auto& f : all) lengths.insert(blockfact::nm_length(f));
        emit(blockfact::nm_record_json(monoid, *elt, lengths,
                                       blockfact::gaps(lengths), all.size()),
             opts->out);
      };
    });
  }

  // ---- nm-scan --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "nm-scan", "delta sets of every monoid element up to a bound");
    auto gens = std::make_shared<std::vector<std::uint64_t>>();
    auto up_to = std::make_shared<std::uint64_t>(500);
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("--gens", *gens, "generators, e.g. 4,6,15")
        ->required()
        ->delimiter(',');
    cmd->add_option("--up-to", *up_to, "scan bound (default 500)");
    opts->attach(cmd);
    cmd->callback([gens, up_to, opts, &action] {
      action = [=] {
        const blockfact::NumericalMonoid monoid(*gens);
        const auto report = blockfact::nm_scan(monoid, *up_to, opts->limits);
        if (opts->format == "csv") {
          emit(blockfact::nm_scan_csv(report), opts->out);
        } else {
          emit(blockfact::nm_scan_summary_json(report), opts->out);
        }
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    action();
  } catch (const blockfact::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const blockfact::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

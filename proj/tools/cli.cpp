#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "locarec/baseline.hpp"
#include "locarec/eval.hpp"
#include "locarec/ingest.hpp"
#include "locarec/kernels.hpp"
#include "locarec/peering.hpp"
#include "locarec/recommend.hpp"
#include "locarec/report_io.hpp"

namespace locarec::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr std::string_view kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Option groups shared by several subcommands

struct DatasetOptions {
  std::string data;
  std::string spec_file;
  std::string countries;
  std::size_t total_records = 0;
  double rating_bias = 0.0;
  std::uint64_t seed = 0;
  std::size_t items = 0;

  CLI::Option* data_opt = nullptr;
  CLI::Option* total_opt = nullptr;
  CLI::Option* bias_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* items_opt = nullptr;
  CLI::Option* countries_opt = nullptr;
  CLI::Option* spec_opt = nullptr;
};

void add_synthetic_options(CLI::App* cmd, DatasetOptions& o) {
  o.spec_opt = cmd->add_option("--spec", o.spec_file, "Synthetic spec file (key = value lines)")
                   ->envname("LOCAREC_SPEC");
  o.countries_opt = cmd->add_option("--countries", o.countries, "Users per country, e.g. DK:41,FR:26")
                        ->envname("LOCAREC_COUNTRIES");
  o.total_opt = cmd->add_option("--total-records", o.total_records, "Number of ratings to generate")
                    ->envname("LOCAREC_TOTAL_RECORDS");
  o.bias_opt = cmd->add_option("--rating-bias", o.rating_bias, "Probability of a same-country rating bump")
                   ->envname("LOCAREC_RATING_BIAS");
  o.seed_opt = cmd->add_option("--seed", o.seed, "Generator seed")->envname("LOCAREC_SEED");
  o.items_opt = cmd->add_option("--items", o.items, "Item catalog size")->envname("LOCAREC_ITEMS");
}

void add_dataset_options(CLI::App* cmd, DatasetOptions& o) {
  o.data_opt = cmd->add_option("--data", o.data, "Dataset CSV; omit to use a generated dataset")
                   ->envname("LOCAREC_DATA");
  add_synthetic_options(cmd, o);
  for (auto* opt : {o.spec_opt, o.countries_opt, o.total_opt, o.bias_opt, o.seed_opt, o.items_opt})
    o.data_opt->excludes(opt);
}

SyntheticSpec synthetic_spec(const DatasetOptions& o) {
  SyntheticSpec spec = o.spec_opt->count() ? load_spec_file(o.spec_file) : SyntheticSpec{};
  if (o.countries_opt->count()) spec.country_user_counts = parse_country_counts(o.countries);
  if (o.total_opt->count()) spec.total_records = o.total_records;
  if (o.bias_opt->count()) spec.rating_bias = o.rating_bias;
  if (o.seed_opt->count()) spec.seed = o.seed;
  if (o.items_opt->count()) spec.item_count = o.items;
  return spec;
}

struct LoadedDataset {
  Dataset dataset;
  std::optional<SyntheticSpec> spec;
};

LoadedDataset load_dataset(const DatasetOptions& o) {
  if (o.data_opt->count()) return {parse_csv(fs::path(o.data)).dataset, std::nullopt};
  SyntheticSpec spec = synthetic_spec(o);
  return {generate_synthetic(spec), spec};
}

struct PipelineOptions {
  double alpha = 0.0;
  double threshold = 0.5;
  std::string max_peers = "20";
  std::size_t top_n = 10;
  int min_peer_rating = 4;
  bool no_boost = false;
};

void add_pipeline_options(CLI::App* cmd, PipelineOptions& o, bool with_alpha) {
  if (with_alpha) {
    cmd->add_option("--alpha", o.alpha, "Boost added to same-country candidates")
        ->envname("LOCAREC_ALPHA")
        ->capture_default_str();
    cmd->add_flag("--no-boost", o.no_boost, "Use the location-free baseline pipeline (reported as alpha 0)");
  }
  cmd->add_option("--threshold", o.threshold, "Minimum boosted similarity for a peer")
      ->envname("LOCAREC_THRESHOLD")
      ->capture_default_str();
  cmd->add_option("--max-peers", o.max_peers, "Peer list cap, or 'unbounded'")
      ->envname("LOCAREC_MAX_PEERS")
      ->capture_default_str();
  cmd->add_option("--top-n", o.top_n, "Recommendation list length")->envname("LOCAREC_TOP_N")->capture_default_str();
  cmd->add_option("--min-peer-rating", o.min_peer_rating, "Lowest peer rating that counts as top rated")
      ->envname("LOCAREC_MIN_PEER_RATING")
      ->capture_default_str();
}

std::optional<std::size_t> parse_max_peers(const std::string& text) {
  if (text == "unbounded" || text == "none") return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw UsageError("--max-peers expects a positive integer or 'unbounded', got '" + text + "'");
  return value;
}

PeeringConfig peering_config(const PipelineOptions& o) {
  PeeringConfig c{o.no_boost ? 0.0 : o.alpha, o.threshold, parse_max_peers(o.max_peers)};
  c.validate();
  return c;
}

RecommendConfig recommend_config(const PipelineOptions& o) {
  if (o.top_n == 0) throw UsageError("--top-n must be positive");
  RecommendConfig c{o.top_n, o.min_peer_rating};
  c.validate();
  return c;
}

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    auto token = rest.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw UsageError("bad alpha '" + std::string(token) + "'");
      out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty()) throw UsageError("--alphas needs at least one value");
  return out;
}

// ---------------------------------------------------------------------------

json run_stanza(std::string_view command, const LoadedDataset& loaded, json config) {
  const Dataset& ds = loaded.dataset;
  return {{"tool", "locarec"},
          {"version", kVersion},
          {"command", command},
          {"seed", loaded.spec ? json(loaded.spec->seed) : json(nullptr)},
          {"synthetic", loaded.spec ? to_json(*loaded.spec) : json(nullptr)},
          {"dataset",
           {{"source", loaded.spec ? "synthetic" : "file"},
            {"fingerprint", dataset_fingerprint(ds)},
            {"users", ds.user_count()},
            {"items", ds.item_count()},
            {"records", ds.record_count()}}},
          {"config", std::move(config)}};
}

json pipeline_config_json(const PeeringConfig& p, const RecommendConfig& r) {
  json c = to_json(p);
  c.update(to_json(r));
  return c;
}

void write_text(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoFailure, "cannot write '" + path + "'");
  file << content;
  file.flush();
  if (!file) throw Error(ErrorCode::IoFailure, "write failed for '" + path + "'");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoFailure: return kIo;
    case ErrorCode::InvalidArgument: return kUsage;
    default: return kData;
  }
}

// ---------------------------------------------------------------------------
// Subcommands

struct IngestCmd {
  std::string input;
  std::string report_out;
  std::string format = "text";

  int run(std::ostream& out) const {
    const auto result = parse_csv(fs::path(input));
    const json report = to_json(result.report);
    if (!report_out.empty()) write_text(report_out, report.dump(2) + "\n", out);
    if (format == "json") {
      out << json{{"report", report},
                  {"dataset",
                   {{"users", result.dataset.user_count()},
                    {"items", result.dataset.item_count()},
                    {"records", result.dataset.record_count()},
                    {"fingerprint", dataset_fingerprint(result.dataset)}}}}
                 .dump(2)
          << '\n';
      return kOk;
    }
    const auto& r = result.report;
    out << fmt::format("rows_read={} rows_accepted={} duplicates_replaced={} rejected={}\n", r.rows_read,
                       r.rows_accepted, r.duplicates_replaced, r.rejected_rows.size());
    out << fmt::format("users={} items={} countries={} fingerprint={}\n", result.dataset.user_count(),
                       result.dataset.item_count(), result.dataset.countries().size(),
                       dataset_fingerprint(result.dataset));
    for (const auto& row : r.rejected_rows) out << fmt::format("rejected line {}: {}\n", row.line_number, to_string(row.reason));
    return kOk;
  }
};

struct GenerateCmd {
  DatasetOptions data;
  std::string output;

  int run(std::ostream& out, std::ostream& err) const {
    const SyntheticSpec spec = synthetic_spec(data);
    const Dataset ds = generate_synthetic(spec);
    write_text(output, export_csv_string(ds), out);
    err << fmt::format("generated users={} items={} records={} fingerprint={}\n", ds.user_count(), ds.item_count(),
                       ds.record_count(), dataset_fingerprint(ds));
    return kOk;
  }
};

struct RecommendCmd {
  DatasetOptions data;
  PipelineOptions pipeline;
  std::string user;
  std::string format = "json";
  std::string output;

  int run(std::ostream& out) const {
    const PeeringConfig pc = peering_config(pipeline);
    const RecommendConfig rc = recommend_config(pipeline);
    const LoadedDataset loaded = load_dataset(data);
    const UserId active(user);
    const PeerList peers = pipeline.no_boost
                               ? baseline::find_peers(loaded.dataset, active, pc.threshold, pc.max_peers)
                               : find_peers(loaded.dataset, active, pc);
    const Recommendation rec = recommend(loaded.dataset, peers, rc);
    json config = pipeline_config_json(pc, rc);
    config["user"] = user;
    const json stanza = run_stanza("recommend", loaded, std::move(config));

    if (format == "csv") {
      std::ostringstream csv;
      write_recommendation_csv(csv, rec, stanza);
      write_text(output, csv.str(), out);
    } else {
      write_text(output, json{{"run", stanza}, {"peers", to_json(peers)}, {"recommendation", to_json(rec)}}.dump(2) + "\n",
                 out);
    }
    return kOk;
  }
};

struct EvaluateCmd {
  DatasetOptions data;
  PipelineOptions pipeline;
  std::string format = "json";
  std::string output;
  unsigned jobs = 1;

  int run(std::ostream& out) const {
    const PeeringConfig pc = peering_config(pipeline);
    const RecommendConfig rc = recommend_config(pipeline);
    const LoadedDataset loaded = load_dataset(data);
    const EvalReport report = evaluate(loaded.dataset, pc, rc,
                                       {jobs, pipeline.no_boost ? Pipeline::BoostFree : Pipeline::Boosted});
    const json stanza = run_stanza("evaluate", loaded, pipeline_config_json(pc, rc));
    if (format == "csv") {
      std::ostringstream csv;
      write_summary_csv(csv, std::span(&report, 1), stanza);
      write_text(output, csv.str(), out);
    } else {
      write_text(output, json{{"run", stanza}, {"report", to_json(report)}}.dump(2) + "\n", out);
    }
    return kOk;
  }
};

struct SweepCmd {
  DatasetOptions data;
  PipelineOptions pipeline;
  std::string alphas;
  std::string out_dir;
  unsigned jobs = 1;

  int run(std::ostream& out) const {
    const std::vector<double> grid = parse_alphas(alphas);
    for (double a : grid)
      if (!(a >= 0.0)) throw UsageError("alphas must be >= 0");
    const PeeringConfig pc = peering_config(pipeline);
    const RecommendConfig rc = recommend_config(pipeline);
    const LoadedDataset loaded = load_dataset(data);

    const auto reports = sweep(loaded.dataset, grid, pc, rc, {jobs, Pipeline::Boosted});

    json config = pipeline_config_json(pc, rc);
    config.erase("alpha");
    config["alphas"] = grid;
    const json stanza = run_stanza("sweep", loaded, std::move(config));

    json report_list = json::array();
    json deltas = json::array();
    for (const auto& r : reports) {
      report_list.push_back(to_json(r));
      const auto d = report_delta(reports.front(), r);
      deltas.push_back({{"alpha", r.alpha}, {"peers_delta_pp", d.peers_delta_pp}, {"items_delta_pp", d.items_delta_pp}});
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create '" + out_dir + "': " + ec.message());
    const fs::path dir(out_dir);

    std::ostringstream summary;
    write_summary_csv(summary, reports, stanza);
    std::ostringstream plot;
    write_plot_csv(plot, reports, stanza);

    write_text((dir / "sweep.json").string(),
               json{{"run", stanza}, {"reports", report_list}, {"deltas_vs_first", deltas}}.dump(2) + "\n", out);
    write_text((dir / "summary.csv").string(), summary.str(), out);
    write_text((dir / "locality_vs_alpha.csv").string(), plot.str(), out);
    out << summary.str();
    return kOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Location-aware user-based collaborative filtering and locality evaluation", "locarec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string kernel = "auto";
  app.add_option("--kernel", kernel, "Similarity kernel: auto, scalar or avx2")
      ->envname("LOCAREC_KERNEL")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
      ->capture_default_str();

  IngestCmd ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Validate a dataset CSV and print the ingest report");
  ingest_cmd->add_option("input", ingest.input, "Dataset CSV")->required();
  ingest_cmd->add_option("--report", ingest.report_out, "Also write the report as JSON to this path");
  ingest_cmd->add_option("--format", ingest.format, "Output format")
      ->envname("LOCAREC_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));

  GenerateCmd generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded synthetic dataset as CSV");
  add_synthetic_options(generate_cmd, generate.data);
  generate_cmd->add_option("-o,--output", generate.output, "Output path (default stdout)");

  RecommendCmd rec;
  auto* rec_cmd = app.add_subcommand("recommend", "Recommend items for one user");
  add_dataset_options(rec_cmd, rec.data);
  add_pipeline_options(rec_cmd, rec.pipeline, true);
  rec_cmd->add_option("--user", rec.user, "Active user id")->required()->envname("LOCAREC_USER");
  rec_cmd->add_option("--format", rec.format, "json or csv")
      ->envname("LOCAREC_FORMAT")
      ->check(CLI::IsMember({"json", "csv"}));
  rec_cmd->add_option("-o,--output", rec.output, "Output path (default stdout)");

  EvaluateCmd eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Peers and item locality over all users");
  add_dataset_options(eval_cmd, eval.data);
  add_pipeline_options(eval_cmd, eval.pipeline, true);
  eval_cmd->add_option("--format", eval.format, "json or csv")
      ->envname("LOCAREC_FORMAT")
      ->check(CLI::IsMember({"json", "csv"}));
  eval_cmd->add_option("-o,--output", eval.output, "Output path (default stdout)");
  eval_cmd->add_option("--jobs", eval.jobs, "Worker threads (0 = all cores)")->envname("LOCAREC_JOBS");

  SweepCmd sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate over a list of alpha values");
  add_dataset_options(sweep_cmd, sw.data);
  add_pipeline_options(sweep_cmd, sw.pipeline, false);
  sweep_cmd->add_option("--alphas", sw.alphas, "Comma-separated alpha grid, e.g. 0,0.1,0.2,0.3")
      ->required()
      ->envname("LOCAREC_ALPHAS");
  sweep_cmd->add_option("--out-dir", sw.out_dir, "Directory for sweep.json, summary.csv, locality_vs_alpha.csv")
      ->required()
      ->envname("LOCAREC_OUT_DIR");
  sweep_cmd->add_option("--jobs", sw.jobs, "Worker threads (0 = all cores)")->envname("LOCAREC_JOBS");

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();  // program name
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  struct RestoreIsa {
    kernels::Isa saved = kernels::active_isa();
    ~RestoreIsa() { kernels::select_isa(saved); }
  } restore_isa;

  try {
    if (kernel != "auto") {
      const auto isa = *kernels::parse_isa(kernel);
      if (!kernels::select_isa(isa)) throw UsageError("kernel '" + kernel + "' is not available on this machine");
    }
    if (*ingest_cmd) return ingest.run(out);
    if (*generate_cmd) return generate.run(out, err);
    if (*rec_cmd) return rec.run(out);
    if (*eval_cmd) return eval.run(out);
    if (*sweep_cmd) return sw.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace locarec::cli

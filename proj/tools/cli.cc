/*
 * Copyright 2026 The adaudit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "adaudit/analysis_context.h"
#include "adaudit/crawler.h"
#include "adaudit/datastore.h"
#include "adaudit/domain.h"
#include "adaudit/fixture_transport.h"
#include "adaudit/http_server.h"
#include "adaudit/live_transport.h"
#include "adaudit/query_service.h"
#include "adaudit/reports.h"
#include "json.hpp"

namespace adaudit {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// Raised for operational failures; the message names the stage.
struct StageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  std::string data_dir = "adaudit-data";
  std::string format;
};

struct FetchFlags {
  std::string fixtures;
  bool live = false;
  std::string user_agent = CrawlConfig{}.user_agent;
  double timeout_s = 10;
  size_t max_domains = CrawlConfig{}.max_domains;
  size_t workers = CrawlConfig{}.workers;
  long delay_ms = 0;
};

struct AnalysisFlags {
  std::vector<std::string> verified;
  std::vector<std::string> misinformation;
  std::vector<std::string> piracy;
  std::vector<std::string> illegal;
  std::string ranks;
  std::string whois_dir;
  bool live_whois = false;
  std::string privacy_keywords;
  size_t distributed_threshold = 10;
  size_t overused_threshold = 2;
  bool keep_copies = false;
};

void AddFetchFlags(CLI::App* cmd, FetchFlags& f) {
  cmd->add_option("--fixtures", f.fixtures, "Replay files from a fixture tree");
  cmd->add_flag("--live", f.live, "Fetch from the network");
  cmd->add_option("--user-agent", f.user_agent, "User-Agent header");
  cmd->add_option("--timeout", f.timeout_s, "Per-request timeout in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-domains", f.max_domains, "Stop after this many domains")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", f.workers, "Concurrent fetches")->check(CLI::PositiveNumber);
  cmd->add_option("--delay-ms", f.delay_ms, "Minimum delay between requests to one host")
      ->check(CLI::NonNegativeNumber);
}

void AddAnalysisFlags(CLI::App* cmd, AnalysisFlags& f) {
  cmd->add_option("--verified", f.verified, "Verified ad-network list(s)");
  cmd->add_option("--misinformation", f.misinformation, "Fake-news domain list(s)");
  cmd->add_option("--piracy", f.piracy, "Piracy domain list(s)");
  cmd->add_option("--illegal", f.illegal, "Illegal-goods domain list(s)");
  cmd->add_option("--ranks", f.ranks, "Popularity ranking CSV (rank,domain)");
  cmd->add_option("--whois-dir", f.whois_dir, "Recorded WHOIS responses (<domain>.txt)");
  cmd->add_flag("--live-whois", f.live_whois, "Query WHOIS servers on port 43");
  cmd->add_option("--privacy-keywords", f.privacy_keywords, "Privacy keyword list");
  cmd->add_option("--threshold", f.distributed_threshold,
                  "Declarer count above which a distributed publisher id is flagged")
      ->check(CLI::Range(size_t{2}, std::numeric_limits<size_t>::max()));
  cmd->add_option("--overused-threshold", f.overused_threshold,
                  "Minimum declarers for the overused-id table")
      ->check(CLI::Range(size_t{2}, std::numeric_limits<size_t>::max()));
  cmd->add_flag("--keep-copies", f.keep_copies, "Do not exclude copied sellers.json files");
}

std::vector<fs::path> Paths(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

// Owns the WHOIS source referenced by the returned inputs.
struct LoadedInputs {
  AnalysisInputs inputs;
  std::unique_ptr<WhoisSource> whois;
};

LoadedInputs LoadInputs(const AnalysisFlags& f) {
  LoadedInputs l;
  l.inputs.verified = LoadDomainLists(Paths(f.verified));
  l.inputs.objectionable = LoadObjectionableLists(Paths(f.misinformation), Paths(f.piracy),
                                                  Paths(f.illegal));
  if (!f.ranks.empty()) l.inputs.ranks = LoadRankTable(f.ranks);
  l.inputs.privacy_keywords = f.privacy_keywords.empty()
                                  ? DefaultPrivacyKeywords()
                                  : LoadPrivacyKeywords(f.privacy_keywords);
  if (!f.whois_dir.empty()) {
    l.whois = std::make_unique<FixtureWhoisSource>(f.whois_dir);
  } else if (f.live_whois) {
    l.whois = std::make_unique<LiveWhoisSource>();
  }
  l.inputs.whois = l.whois.get();
  l.inputs.distributed_id_threshold = f.distributed_threshold;
  l.inputs.overused_id_threshold = f.overused_threshold;
  l.inputs.exclude_copied_files = !f.keep_copies;
  return l;
}

CrawlConfig ConfigFrom(const FetchFlags& f) {
  CrawlConfig c;
  c.user_agent = f.user_agent;
  c.timeout = std::chrono::milliseconds(static_cast<long>(f.timeout_s * 1000));
  c.max_domains = f.max_domains;
  c.workers = f.workers;
  c.per_host_delay = std::chrono::milliseconds(f.delay_ms);
  return c;
}

std::unique_ptr<Transport> MakeTransport(const FetchFlags& f,
                                         std::shared_ptr<PolitenessLimiter> limiter) {
  if (f.live == !f.fixtures.empty()) {
    throw StageError("exactly one of --fixtures or --live is required");
  }
  if (f.live) {
    LiveTransportOptions opts;
    opts.politeness = std::move(limiter);
    return std::make_unique<LiveTransport>(opts);
  }
  if (!fs::is_directory(f.fixtures)) {
    throw StageError("fixture directory not found: " + f.fixtures);
  }
  return std::make_unique<FixtureTransport>(f.fixtures);
}

fs::path StagedPath(const GlobalFlags& g, const std::string& out, const char* prefix,
                    const std::string& id) {
  if (!out.empty()) return out;
  return fs::path(g.data_dir) / "staged" / (std::string(prefix) + "-" + id + ".json");
}

void Summarize(std::ostream& out, const char* verb, const CrawlSnapshot& s,
               const fs::path& manifest) {
  out << verb << ": " << s.seed_count << " seeds, " << s.bodies.size() << " files, "
      << s.failures.size() << " failures" << (s.truncated ? " (truncated)" : "")
      << " -> " << manifest.string() << "\n";
}

json FindingsJson(const std::vector<ParseFinding>& findings) {
  json a = json::array();
  for (const auto& f : findings) {
    a.push_back({{"severity", SeverityName(f.severity)},
                 {"code", FindingCodeName(f.code)},
                 {"location", f.location.ToString()},
                 {"message", f.message}});
  }
  return a;
}

std::optional<std::string> ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

FileKind GuessKind(const std::string& target, const std::string& body) {
  std::string name = AsciiLower(fs::path(target).filename().string());
  if (name.find("sellers") != std::string::npos || name.ends_with(".json")) {
    return FileKind::kSellersJson;
  }
  if (name.find("ads") != std::string::npos) return FileKind::kAdsTxt;
  std::string_view t = TrimWhitespace(body);
  return !t.empty() && t.front() == '{' ? FileKind::kSellersJson : FileKind::kAdsTxt;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"adaudit: ads.txt / sellers.json supply-chain auditing"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "TOML/INI file with flag defaults");
  GlobalFlags g;
  app.add_option("--data-dir", g.data_dir, "Datastore directory");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "table"}));

  // crawl-ads
  auto* crawl_ads = app.add_subcommand("crawl-ads", "Fetch ads.txt for a seed list");
  std::string ads_seeds, ads_out;
  FetchFlags ads_fetch;
  crawl_ads->add_option("--seeds", ads_seeds, "Seed list (rank,domain CSV or one per line)")
      ->required();
  crawl_ads->add_option("--out", ads_out, "Staged manifest path");
  AddFetchFlags(crawl_ads, ads_fetch);

  // crawl-sellers
  auto* crawl_sellers =
      app.add_subcommand("crawl-sellers", "Recursively fetch sellers.json files");
  std::string sellers_seeds, sellers_out, aliases;
  std::vector<std::string> from_staged;
  FetchFlags sellers_fetch;
  int depth = CrawlConfig{}.max_recursion_depth;
  crawl_sellers->add_option("--seeds", sellers_seeds, "Seed network list");
  crawl_sellers->add_option("--from-staged", from_staged,
                            "Seed with the ad systems named in staged ads.txt crawls");
  crawl_sellers->add_option("--depth", depth, "Maximum recursion depth")
      ->check(CLI::PositiveNumber);
  crawl_sellers->add_option("--aliases", aliases, "Sellers.json URL alias map");
  crawl_sellers->add_option("--out", sellers_out, "Staged manifest path");
  AddFetchFlags(crawl_sellers, sellers_fetch);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Store staged crawls as one snapshot");
  std::vector<std::string> manifests;
  ingest->add_option("manifests", manifests, "Staged manifests")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Materialize analyses for a snapshot");
  std::string analyze_snapshot, export_records;
  AnalysisFlags analysis;
  analyze->add_option("--snapshot", analyze_snapshot, "Snapshot id (default latest)");
  analyze->add_option("--export-records", export_records, "Also write an NDJSON record dump");
  AddAnalysisFlags(analyze, analysis);

  // report
  auto* report = app.add_subcommand("report", "Write one analysis table");
  std::string report_kind, report_snapshot, report_out;
  std::vector<std::string> kind_names;
  for (auto k : AllReportKinds()) kind_names.emplace_back(ReportKindName(k));
  report->add_option("--kind", report_kind, "Report kind")
      ->required()
      ->check(CLI::IsMember(kind_names));
  report->add_option("--snapshot", report_snapshot, "Snapshot id (default latest)");
  report->add_option("--out", report_out, "Output path (default stdout)");

  // validate
  auto* validate = app.add_subcommand("validate", "Lint an ads.txt or sellers.json");
  std::string target, validate_kind, validate_fixtures;
  bool validate_live = false;
  validate->add_option("target", target, "File path, or a domain with --live")->required();
  validate->add_option("--kind", validate_kind, "ads.txt or sellers.json")
      ->check(CLI::IsMember({"ads.txt", "sellers.json"}));
  validate->add_flag("--live", validate_live, "Fetch the target domain's file");
  validate->add_option("--fixtures", validate_fixtures,
                       "With --live, replay from a fixture tree instead of the network");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  std::string bind = "127.0.0.1", port_file, static_dir, fetch_fixtures;
  std::string token_env = "ADAUDIT_ADMIN_TOKEN";
  int port = 8080;
  bool live_fetch = false;
  AnalysisFlags serve_analysis;
  serve->add_option("--bind", bind, "Bind address");
  serve->add_option("--port", port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--port-file", port_file, "Write the bound port here");
  serve->add_option("--static", static_dir, "Serve static assets from this directory");
  serve->add_option("--admin-token-env", token_env,
                    "Environment variable holding the admin token");
  serve->add_flag("--live-fetch", live_fetch, "Enable /api/v1/fetch over the network");
  serve->add_option("--fetch-fixtures", fetch_fixtures,
                    "Enable /api/v1/fetch against a fixture tree");
  AddAnalysisFlags(serve, serve_analysis);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  const char* stage = app.get_subcommands().front()->get_name().c_str();
  try {
    if (*crawl_ads) {
      auto seeds = LoadSeedList(ads_seeds);
      CrawlConfig config = ConfigFrom(ads_fetch);
      auto limiter = std::make_shared<PolitenessLimiter>(config.per_host_delay);
      auto transport = MakeTransport(ads_fetch, limiter);
      CrawlSnapshot s = CrawlAdsTxt(seeds.domains, config, *transport, limiter);
      s.Seal();
      BlobStore blobs(fs::path(g.data_dir) / "blobs");
      fs::path manifest = StagedPath(g, ads_out, "ads", s.snapshot_id);
      SaveStagedSnapshot(s, blobs, manifest);
      Summarize(out, "crawl-ads", s, manifest);
      return kExitOk;
    }

    if (*crawl_sellers) {
      std::set<std::string> seen;
      std::vector<std::string> seeds;
      auto add = [&](const std::string& d) {
        if (seen.insert(d).second) seeds.push_back(d);
      };
      if (!sellers_seeds.empty()) {
        for (const auto& d : LoadSeedList(sellers_seeds).domains) add(d);
      }
      BlobStore blobs(fs::path(g.data_dir) / "blobs");
      for (const auto& m : from_staged) {
        CrawlSnapshot staged = LoadStagedSnapshot(m, blobs);
        for (const auto& [domain, file] : staged.ads_files) {
          for (const auto& r : file.records) {
            if (IsValidDomain(r.ad_system_domain)) add(r.ad_system_domain);
          }
        }
      }
      if (seeds.empty()) throw StageError("no seeds: pass --seeds and/or --from-staged");
      CrawlConfig config = ConfigFrom(sellers_fetch);
      config.max_recursion_depth = depth;
      if (!aliases.empty()) config.sellers_path_aliases = LoadAliasMap(aliases);
      auto limiter = std::make_shared<PolitenessLimiter>(config.per_host_delay);
      auto transport = MakeTransport(sellers_fetch, limiter);
      CrawlSnapshot s = CrawlSellersRecursive(seeds, config, *transport, limiter);
      s.Seal();
      fs::path manifest = StagedPath(g, sellers_out, "sellers", s.snapshot_id);
      SaveStagedSnapshot(s, blobs, manifest);
      Summarize(out, "crawl-sellers", s, manifest);
      return kExitOk;
    }

    if (*ingest) {
      Datastore store(g.data_dir);
      std::optional<CrawlSnapshot> merged;
      for (const auto& m : manifests) {
        CrawlSnapshot s = LoadStagedSnapshot(m, store.blobs());
        merged = merged ? MergeSnapshots(*merged, s) : std::move(s);
      }
      std::string id = store.Ingest(*merged);
      out << id << "\n";
      return kExitOk;
    }

    if (*analyze) {
      Datastore store(g.data_dir);
      std::string id = analyze_snapshot;
      if (id.empty()) {
        auto latest = store.LatestSnapshotId();
        if (!latest) throw StageError("no snapshot ingested");
        id = *latest;
      }
      if (!store.HasSnapshot(id)) throw StageError("unknown snapshot " + id);
      LoadedInputs in = LoadInputs(analysis);
      auto ctx = AnalysisContext::Build(store.LoadSnapshot(id), in.inputs);
      store.SaveAnalysis(id, MaterializeAnalysis(*ctx));
      if (!export_records.empty()) {
        std::ofstream dump(export_records);
        if (!dump) throw StageError("cannot write " + export_records);
        store.ExportRecords(id, dump);
      }
      CorpusCounts c = CountCorpus(*ctx);
      if (g.format == "json") {
        out << json{{"snapshot_id", id},
                    {"pool_count", c.pool_count},
                    {"dark_pool_count", c.dark_pool_count},
                    {"mismatch_count", c.mismatch_count},
                    {"hidden_intermediary_count", c.hidden_intermediary_count},
                    {"verified_hidden_intermediary_count",
                     c.verified_hidden_intermediary_count}}
                   .dump()
            << "\n";
      } else {
        out << "analyze " << id << ": " << c.pool_count << " pools, " << c.dark_pool_count
            << " dark pools, " << c.mismatch_count << " mismatches, "
            << c.hidden_intermediary_count << " hidden intermediaries ("
            << c.verified_hidden_intermediary_count << " verified)\n";
      }
      return kExitOk;
    }

    if (*report) {
      Datastore store(g.data_dir);
      std::string id = report_snapshot;
      if (id.empty()) {
        auto latest = store.LatestSnapshotId();
        if (!latest) throw StageError("no snapshot ingested");
        id = *latest;
      }
      if (!store.HasSnapshot(id)) throw StageError("unknown snapshot " + id);
      auto doc = store.LoadAnalysis(id);
      if (!doc) throw StageError("snapshot " + id + " has not been analyzed");
      ReportKind kind = *ParseReportKind(report_kind);
      ReportTable table = ReportFromAnalysis(*doc, kind);
      std::ofstream file;
      if (!report_out.empty()) {
        file.open(report_out);
        if (!file) throw StageError("cannot write " + report_out);
      }
      std::ostream& dest = report_out.empty() ? out : file;
      if (g.format == "table" || g.format == "text") {
        WriteTextTable(table, dest);
      } else {
        WriteCsv(table, dest);
      }
      (report_out.empty() ? err : out) << report_kind << ": " << table.rows.size() << "\n";
      return kExitOk;
    }

    if (*validate) {
      std::string body;
      std::string domain = "file";
      std::optional<FileKind> kind;
      if (!validate_kind.empty()) kind = ParseFileKind(validate_kind);
      if (validate_live) {
        auto d = ParseDomain(target);
        if (!d) throw StageError("not a domain: " + target);
        domain = *d;
        FileKind k = kind.value_or(FileKind::kAdsTxt);
        kind = k;
        std::unique_ptr<Transport> t;
        if (!validate_fixtures.empty()) {
          t = std::make_unique<FixtureTransport>(validate_fixtures);
        } else {
          t = std::make_unique<LiveTransport>();
        }
        LiveFetchResult r = LiveFetchPassthrough(domain, k, CrawlConfig{}, *t);
        if (r.outcome.status != FetchStatus::kOk) {
          throw StageError("fetch failed: " + std::string(FetchStatusName(r.outcome.status)));
        }
        body = *r.outcome.body;
      } else {
        auto content = ReadFile(target);
        if (!content || fs::is_directory(target)) throw StageError("cannot read " + target);
        body = std::move(*content);
        if (!kind) kind = GuessKind(target, body);
      }
      std::vector<ParseFinding> findings;
      if (*kind == FileKind::kAdsTxt) {
        findings = ParseAdsTxt(domain, body).parse_findings;
      } else {
        SellersFile f = ParseSellersJson(domain, body);
        findings = f.parse_findings;
        auto lint = LintSellersFile(f);
        findings.insert(findings.end(), lint.begin(), lint.end());
      }
      size_t errors = 0;
      for (const auto& f : findings) errors += f.severity == Severity::kError;
      if (g.format == "json") {
        out << json{{"target", target},
                    {"kind", FileKindName(*kind)},
                    {"errors", errors},
                    {"warnings", findings.size() - errors},
                    {"findings", FindingsJson(findings)}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& f : findings) {
          out << f.location.ToString() << ": " << SeverityName(f.severity) << " "
              << FindingCodeName(f.code) << ": " << f.message << "\n";
        }
        out << findings.size() << " findings (" << errors << " errors)\n";
      }
      return errors ? kExitFindings : kExitOk;
    }

    if (*serve) {
      Datastore store(g.data_dir);
      LoadedInputs in = LoadInputs(serve_analysis);
      QueryServiceOptions opts;
      opts.inputs = in.inputs;
      if (const char* tok = std::getenv(token_env.c_str())) opts.admin_token = tok;
      opts.politeness = std::make_shared<PolitenessLimiter>(std::chrono::milliseconds(0));
      if (live_fetch) {
        LiveTransportOptions lo;
        lo.politeness = opts.politeness;
        opts.fetch_transport = std::make_shared<LiveTransport>(lo);
      } else if (!fetch_fixtures.empty()) {
        opts.fetch_transport = std::make_shared<FixtureTransport>(fetch_fixtures);
      }
      QueryService service(store, opts);
      std::optional<fs::path> assets;
      if (!static_dir.empty()) assets = static_dir;
      HttpServer server(service, assets);
      int bound = server.Bind(bind, port);
      if (bound < 0) throw StageError("cannot bind " + bind + ":" + std::to_string(port));
      if (!port_file.empty()) std::ofstream(port_file) << bound << "\n";
      out << "serving on http://" << bind << ":" << bound << "\n" << std::flush;

      sigset_t set;
      sigemptyset(&set);
      sigaddset(&set, SIGINT);
      sigaddset(&set, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &set, nullptr);
      std::jthread waiter([&] {
        int sig = 0;
        sigwait(&set, &sig);
        server.Stop();
      });
      server.Run();
      if (waiter.joinable()) {
        // Wake the waiter when the server stopped on its own.
        pthread_kill(waiter.native_handle(), SIGTERM);
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << stage << ": error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace adaudit

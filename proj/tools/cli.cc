// Copyright 2026 The holtrans Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <zlib.h>

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "holtrans/dkfile/document.h"
#include "holtrans/hol/error.h"
#include "holtrans/kernel/error.h"
#include "holtrans/kernel/signature.h"
#include "holtrans/opentheory/article.h"
#include "holtrans/opentheory/vm.h"
#include "holtrans/translate/article.h"
#include "holtrans/translate/base_signature.h"
#include "holtrans/translate/error.h"

namespace holtrans::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration<double>(to - from).count();
}

std::optional<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

bool WriteFile(const fs::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  return static_cast<bool>(out);
}

// The identity theorem |- (\x. x) = (\x. x) at a type variable A.
constexpr std::string_view kSelftestArticle = R"(# selftest: reflexivity of the identity
6
version
"x"
"A"
varType
var
0
def
0
ref
varTerm
absTerm
refl
nil
"="
const
"->"
typeOp
"->"
typeOp
"A"
varType
"A"
varType
nil
cons
cons
opType
2
def
"->"
typeOp
2
ref
"bool"
typeOp
nil
opType
nil
cons
cons
opType
nil
cons
cons
opType
constTerm
0
ref
0
ref
varTerm
absTerm
appTerm
0
ref
0
ref
varTerm
absTerm
appTerm
thm
)";

struct TranslateConfig {
  std::vector<std::string> inputs;
  std::string output_dir = ".";
  std::string mode = "q0";
  bool compress = false;
  bool no_sharing = false;
  std::optional<std::uint64_t> fuel;
  std::size_t share_min_size = 8;
  bool verbose = false;
};

// Output of one article, kept in memory until the whole run has succeeded.
struct Emitted {
  fs::path path;
  std::string text;
};

// Article, translation and kernel errors already name their code and
// location in what().
std::string Describe(const std::exception& e) {
  if (dynamic_cast<const dkfile::ParseError*>(&e) != nullptr) {
    return std::string("parse error at ") + e.what();
  }
  return e.what();
}

int DoTranslate(const TranslateConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.inputs.empty()) {
    err << "translate: no input articles\n";
    return kExitUsage;
  }
  const std::optional<translate::Mode> mode = translate::ParseMode(cfg.mode);
  if (!mode) {
    err << "translate: unknown mode '" << cfg.mode << "' (expected q0 or pts)\n";
    return kExitUsage;
  }
  kernel::Options kopt;
  kopt.fuel = cfg.fuel.value_or(DefaultFuel());

  std::set<std::string> modules;
  for (const std::string& in : cfg.inputs) {
    std::string m = translate::ModuleName(in);
    if (!modules.insert(m).second) {
      err << "translate: two inputs map to module '" << m << "'\n";
      return kExitUsage;
    }
  }

  const fs::path dir(cfg.output_dir);
  std::vector<Emitted> emitted;
  emitted.push_back({dir / (std::string(translate::kBaseModule) + ".dk"),
                     dkfile::Emit(translate::BaseDocument(*mode))});

  kernel::Signature sig = translate::BaseSignature(*mode, kopt);
  translate::TranslationEnv env(*mode);
  translate::Translator tr(env);
  std::vector<PackageStats> rows;

  for (const std::string& in : cfg.inputs) {
    std::optional<std::string> text = ReadFile(in);
    if (!text) {
      err << in << ": cannot read\n";
      return kExitUsage;
    }
    const std::string module = translate::ModuleName(in);
    PackageStats row;
    row.package = module;
    try {
      const Clock::time_point t0 = Clock::now();
      opentheory::VMState state = opentheory::Run(opentheory::ParseArticle(*text));
      translate::ArticleOptions options;
      options.compress = cfg.compress;
      options.sharing = !cfg.no_sharing;
      options.share.min_size = cfg.share_min_size;
      options.share.kernel = kopt;
      translate::TranslatedArticle result =
          translate::TranslateArticle(tr, state, module, sig, options);
      std::string dk = dkfile::Emit(result.doc);
      const Clock::time_point t1 = Clock::now();

      // Check the text that will be written, not the in-memory document.
      kernel::Signature next = sig;
      dkfile::Check(next, dkfile::Parse(dk), kopt);
      const Clock::time_point t2 = Clock::now();
      sig = std::move(next);

      row.input_bytes = text->size();
      row.output_bytes = dk.size();
      row.input_gzip = GzipSize(*text);
      row.output_gzip = GzipSize(dk);
      row.translate_seconds = Seconds(t0, t1);
      row.verify_seconds = Seconds(t1, t2);
      row.theorems = result.report.theorems;
      row.share_hits = result.report.share_hits;
      if (cfg.verbose) {
        out << in << ": " << result.report.theorems << " theorems, "
            << result.report.declarations << " declarations, "
            << result.report.share_definitions << " shared terms (" << result.report.share_hits
            << " uses)\n";
      }
      emitted.push_back({dir / (module + ".dk"), std::move(dk)});
    } catch (const std::exception& e) {
      err << in << ": " << Describe(e) << "\n";
      return kExitFailure;
    }
    rows.push_back(std::move(row));
  }

  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << cfg.output_dir << ": " << ec.message() << "\n";
    return kExitUsage;
  }
  for (const Emitted& e : emitted) {
    if (!WriteFile(e.path, e.text)) {
      err << e.path.string() << ": cannot write\n";
      return kExitUsage;
    }
  }
  std::ostringstream stats;
  WriteStats(stats, rows);
  if (!WriteFile(dir / kStatsFile, stats.str())) {
    err << (dir / kStatsFile).string() << ": cannot write\n";
    return kExitUsage;
  }
  out << "translated " << rows.size() << " article" << (rows.size() == 1 ? "" : "s") << " into "
      << dir.string() << " (" << translate::ModeName(*mode) << ")\n";
  return kExitOk;
}

int DoCheck(const std::vector<std::string>& files, std::optional<std::uint64_t> fuel,
            std::ostream& out, std::ostream& err) {
  if (files.empty()) {
    err << "check: no input files\n";
    return kExitUsage;
  }
  const std::string base_name = std::string(translate::kBaseModule) + ".dk";
  std::optional<fs::path> base;
  std::vector<fs::path> rest;
  for (const std::string& f : files) {
    if (!base && fs::path(f).filename() == base_name) {
      base = f;
    } else {
      rest.emplace_back(f);
    }
  }
  if (!base) {
    fs::path guess = fs::path(files.front()).parent_path() / base_name;
    if (!fs::exists(guess)) {
      err << "check: " << base_name << " not found next to " << files.front() << "\n";
      return kExitUsage;
    }
    base = guess;
  }

  kernel::Options kopt;
  kopt.fuel = fuel.value_or(DefaultFuel());
  kernel::Signature sig;
  std::size_t items = 0;
  std::vector<fs::path> order{*base};
  order.insert(order.end(), rest.begin(), rest.end());
  for (const fs::path& p : order) {
    std::optional<std::string> text = ReadFile(p);
    if (!text) {
      err << p.string() << ": cannot read\n";
      return kExitUsage;
    }
    try {
      dkfile::DkDocument doc = dkfile::Parse(*text);
      dkfile::Check(sig, doc, kopt);
      const dkfile::DocumentStats s = dkfile::Count(doc);
      items += s.declarations + s.definitions + s.rules;
    } catch (const std::exception& e) {
      err << p.string() << ": " << Describe(e) << "\n";
      return kExitFailure;
    }
  }
  out << "checked " << order.size() << " file" << (order.size() == 1 ? "" : "s") << ", "
      << items << " items\n";
  return kExitOk;
}

int DoStats(const std::string& dir, bool json, std::ostream& out, std::ostream& err) {
  std::vector<PackageStats> rows;
  const fs::path path = fs::path(dir) / kStatsFile;
  if (fs::exists(path)) {
    std::ifstream in(path);
    if (!in) {
      err << path.string() << ": cannot read\n";
      return kExitUsage;
    }
    try {
      rows = ReadStats(in);
    } catch (const std::exception& e) {
      err << path.string() << ": " << e.what() << "\n";
      return kExitUsage;
    }
  }
  out << (json ? FormatJson(rows) : FormatTable(rows));
  return kExitOk;
}

int DoSelftest(std::ostream& out, std::ostream& err) {
  bool ok = true;
  auto report = [&](std::string_view what, bool pass, const std::string& detail = {}) {
    out << (pass ? "ok     " : "FAILED ") << what;
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
    ok = ok && pass;
  };
  for (translate::Mode mode : {translate::Mode::kQ0, translate::Mode::kPts}) {
    const std::string tag(translate::ModeName(mode));
    try {
      kernel::Signature sig = translate::BaseSignature(mode);
      report(tag + " base signature", true, std::to_string(sig.rule_count()) + " rules");
      translate::TranslationEnv env(mode);
      translate::Translator tr(env);
      opentheory::VMState state =
          opentheory::Run(opentheory::ParseArticle(kSelftestArticle));
      translate::TranslatedArticle result =
          translate::TranslateArticle(tr, state, "selftest", sig);
      dkfile::Check(sig, dkfile::Parse(dkfile::Emit(result.doc)));
      report(tag + " identity article", result.report.theorems == 1);
    } catch (const std::exception& e) {
      report(tag + " pipeline", false, Describe(e));
    }
  }
  if (!ok) err << "selftest failed\n";
  return ok ? kExitOk : kExitFailure;
}

std::string Kb(std::uint64_t bytes) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << static_cast<double>(bytes) / 1000.0;
  return s.str();
}

std::string Fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::optional<double> GzipRatio(const PackageStats& total) {
  if (total.input_gzip == 0) return std::nullopt;
  return static_cast<double>(total.output_gzip) / static_cast<double>(total.input_gzip);
}

nlohmann::json ToJson(const PackageStats& r) {
  return {{"package", r.package},
          {"input_bytes", r.input_bytes},
          {"output_bytes", r.output_bytes},
          {"input_gzip", r.input_gzip},
          {"output_gzip", r.output_gzip},
          {"translate_seconds", r.translate_seconds},
          {"verify_seconds", r.verify_seconds},
          {"theorems", r.theorems},
          {"share_hits", r.share_hits}};
}

}  // namespace

void WriteStats(std::ostream& out, const std::vector<PackageStats>& rows) {
  for (const PackageStats& r : rows) {
    out << "package=" << r.package << " input_bytes=" << r.input_bytes
        << " output_bytes=" << r.output_bytes << " input_gzip=" << r.input_gzip
        << " output_gzip=" << r.output_gzip << " translate_seconds=" << Fixed(r.translate_seconds, 6)
        << " verify_seconds=" << Fixed(r.verify_seconds, 6) << " theorems=" << r.theorems
        << " share_hits=" << r.share_hits << "\n";
  }
}

std::vector<PackageStats> ReadStats(std::istream& in) {
  std::vector<PackageStats> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::map<std::string, std::string> kv;
    std::istringstream fields(line);
    std::string field;
    while (fields >> field) {
      const std::size_t eq = field.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error("line " + std::to_string(lineno) + ": expected key=value");
      }
      kv[field.substr(0, eq)] = field.substr(eq + 1);
    }
    auto num = [&](const char* key) -> std::uint64_t {
      auto it = kv.find(key);
      if (it == kv.end()) return 0;
      std::uint64_t v = 0;
      const std::string& s = it->second;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) {
        throw std::runtime_error("line " + std::to_string(lineno) + ": bad " + key);
      }
      return v;
    };
    auto real = [&](const char* key) -> double {
      auto it = kv.find(key);
      if (it == kv.end()) return 0;
      try {
        return std::stod(it->second);
      } catch (const std::exception&) {
        throw std::runtime_error("line " + std::to_string(lineno) + ": bad " + key);
      }
    };
    PackageStats r;
    r.package = kv["package"];
    r.input_bytes = num("input_bytes");
    r.output_bytes = num("output_bytes");
    r.input_gzip = num("input_gzip");
    r.output_gzip = num("output_gzip");
    r.translate_seconds = real("translate_seconds");
    r.verify_seconds = real("verify_seconds");
    r.theorems = num("theorems");
    r.share_hits = num("share_hits");
    rows.push_back(std::move(r));
  }
  return rows;
}

PackageStats Total(const std::vector<PackageStats>& rows) {
  PackageStats t;
  t.package = "Total";
  for (const PackageStats& r : rows) {
    t.input_bytes += r.input_bytes;
    t.output_bytes += r.output_bytes;
    t.input_gzip += r.input_gzip;
    t.output_gzip += r.output_gzip;
    t.translate_seconds += r.translate_seconds;
    t.verify_seconds += r.verify_seconds;
    t.theorems += r.theorems;
    t.share_hits += r.share_hits;
  }
  return t;
}

std::string FormatTable(const std::vector<PackageStats>& rows) {
  using Row = std::vector<std::string>;
  std::vector<Row> table;
  table.push_back({"Package", "OpenTheory", "Dedukti", "OpenTheory.gz", "Dedukti.gz",
                   "Translation", "Verification", "Theorems", "Shared"});
  auto add = [&](const PackageStats& r) {
    table.push_back({r.package, Kb(r.input_bytes), Kb(r.output_bytes), Kb(r.input_gzip),
                     Kb(r.output_gzip), Fixed(r.translate_seconds, 2),
                     Fixed(r.verify_seconds, 2), std::to_string(r.theorems),
                     std::to_string(r.share_hits)});
  };
  for (const PackageStats& r : rows) add(r);
  const PackageStats total = Total(rows);
  add(total);

  std::vector<std::size_t> width(table[0].size(), 0);
  for (const Row& r : table) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::size_t size_span = 0;
  for (std::size_t i = 1; i <= 4; ++i) size_span += width[i] + 2;
  std::size_t time_span = 0;
  for (std::size_t i = 5; i <= 6; ++i) time_span += width[i] + 2;

  std::ostringstream s;
  s << std::string(width[0], ' ') << std::left << std::setw(static_cast<int>(size_span))
    << "  Size (kB)" << std::setw(static_cast<int>(time_span)) << "Time (s)"
    << "Counts" << "\n";
  std::size_t total_width = 0;
  for (std::size_t w : width) total_width += w + 2;
  auto print_row = [&](const Row& r) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::ostringstream cell;
      if (i == 0) {
        cell << std::left << std::setw(static_cast<int>(width[i])) << r[i];
      } else {
        cell << "  " << std::right << std::setw(static_cast<int>(width[i])) << r[i];
      }
      line += cell.str();
    }
    s << line << "\n";
  };
  print_row(table[0]);
  s << std::string(total_width - 2, '-') << "\n";
  for (std::size_t i = 1; i + 1 < table.size(); ++i) print_row(table[i]);
  s << std::string(total_width - 2, '-') << "\n";
  print_row(table.back());
  const std::optional<double> ratio = GzipRatio(total);
  s << "gzip size ratio (Dedukti / OpenTheory): " << (ratio ? Fixed(*ratio, 2) : "n/a")
    << "\n";
  return s.str();
}

std::string FormatJson(const std::vector<PackageStats>& rows) {
  nlohmann::json j;
  j["packages"] = nlohmann::json::array();
  for (const PackageStats& r : rows) j["packages"].push_back(ToJson(r));
  const PackageStats total = Total(rows);
  j["total"] = ToJson(total);
  const std::optional<double> ratio = GzipRatio(total);
  j["gzip_ratio"] = ratio ? nlohmann::json(*ratio) : nlohmann::json(nullptr);
  return j.dump(2) + "\n";
}

std::uint64_t GzipSize(std::string_view data) {
  z_stream zs{};
  // windowBits 15 + 16 selects the gzip wrapper.
  if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 15 + 16, 8, Z_DEFAULT_STRATEGY) !=
      Z_OK) {
    throw std::runtime_error("deflateInit2 failed");
  }
  std::vector<unsigned char> buf(deflateBound(&zs, static_cast<uLong>(data.size())) + 32);
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = buf.data();
  zs.avail_out = static_cast<uInt>(buf.size());
  const int rc = deflate(&zs, Z_FINISH);
  const std::uint64_t size = zs.total_out;
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw std::runtime_error("deflate failed");
  return size;
}

std::uint64_t DefaultFuel() {
  const char* env = std::getenv("HOLTRANS_FUEL");
  if (env == nullptr) return kernel::kDefaultFuel;
  std::string_view s(env);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v == 0) return kernel::kDefaultFuel;
  return v;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translate OpenTheory articles to Dedukti and check the result", "holtrans"};
  app.require_subcommand(1);

  TranslateConfig tcfg;
  CLI::App* translate_cmd = app.add_subcommand("translate", "Translate articles to .dk files");
  translate_cmd->add_option("--mode", tcfg.mode, "Encoding of hol.dk: q0 or pts")
      ->check(CLI::IsMember({"q0", "pts"}));
  translate_cmd->add_flag("--compress", tcfg.compress, "Collapse conversion proofs");
  translate_cmd->add_flag("--no-sharing", tcfg.no_sharing, "Do not hoist repeated subterms");
  translate_cmd->add_option("--fuel", tcfg.fuel, "Reduction steps per kernel call")
      ->check(CLI::PositiveNumber);
  translate_cmd->add_option("--share-min-size", tcfg.share_min_size,
                            "Smallest subterm (in nodes) worth sharing");
  translate_cmd->add_option("-o,--output", tcfg.output_dir, "Output directory");
  translate_cmd->add_flag("-v,--verbose", tcfg.verbose, "Per-article summary");
  translate_cmd->add_option("files", tcfg.inputs, "Article files");

  std::vector<std::string> check_files;
  std::optional<std::uint64_t> check_fuel;
  CLI::App* check_cmd = app.add_subcommand("check", "Type-check .dk files after hol.dk");
  check_cmd->add_option("--fuel", check_fuel, "Reduction steps per kernel call")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("files", check_files, ".dk files, in dependency order");

  std::string stats_dir = ".";
  bool stats_json = false;
  CLI::App* stats_cmd = app.add_subcommand("stats", "Report the last translate run");
  stats_cmd->add_flag("--json", stats_json, "Machine-readable output");
  stats_cmd->add_option("dir", stats_dir, "Output directory of the run");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run built-in sanity checks");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "holtrans: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (translate_cmd->parsed()) return DoTranslate(tcfg, out, err);
    if (check_cmd->parsed()) return DoCheck(check_files, check_fuel, out, err);
    if (stats_cmd->parsed()) return DoStats(stats_dir, stats_json, out, err);
    if (selftest_cmd->parsed()) return DoSelftest(out, err);
  } catch (const std::exception& e) {
    err << "holtrans: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return Run(args, out, err);
}

}  // namespace holtrans::cli

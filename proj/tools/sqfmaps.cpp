// Command-line front end. Talks to the library only through the C API.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sqfmaps/sqfmaps.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kMaxRangeBound = 1u << 20;

struct UsageError {
  std::string message;
};

// Owns a string handed out by the C API.
struct ApiString {
  char* p = nullptr;
  ~ApiString() { sqf_string_free(p); }
};

struct Config {
  sqf_config* cfg = nullptr;
  Config() {
    if (sqf_config_new(&cfg) != SQF_OK) throw UsageError{sqf_last_error()};
  }
  ~Config() { sqf_config_free(cfg); }
};

void check(sqf_status s) {
  if (s != SQF_OK) throw UsageError{sqf_last_error()};
}

std::size_t parse_number(const std::string& s, const std::string& what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) throw UsageError{"bad " + what + " '" + s + "'"};
  return v;
}

// "a..b" or a single "a".
std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  std::size_t a = parse_number(s.substr(0, dots), "range");
  std::size_t b = dots == std::string::npos ? a : parse_number(s.substr(dots + 2), "range");
  if (a > b) throw UsageError{"empty range '" + s + "'"};
  if (b > kMaxRangeBound) throw UsageError{"range bound exceeds " + std::to_string(kMaxRangeBound)};
  return {a, b};
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

sqf_format parse_format(const std::string& s) {
  if (s == "text") return SQF_FORMAT_TEXT;
  if (s == "records") return SQF_FORMAT_RECORDS;
  return SQF_FORMAT_DOT;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError{"cannot write " + out_path};
  f << text;
  if (!f) throw UsageError{"cannot write " + out_path};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular maps with square-free Euler characteristic: families, analysis and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(sqf_version()));

  std::size_t cap = 200000;
  std::uint64_t seed = 0x5eed5eedULL;
  unsigned workers = 1;
  std::string format = "text";
  std::string out_path;
  bool show_time = false;
  app.add_option("--cap", cap, "Largest group the run may enumerate")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized internals");
  app.add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records", "dot"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_flag("--time", show_time, "Include wall time in verification output");

  auto* fam = app.add_subcommand("family", "Euler characteristic table for a family");
  std::string fam_name;
  std::string odd, even, primes, range;
  bool squarefree_only = false;
  fam->add_option("family", fam_name, "C31, C33 or C34")->required();
  auto* o_odd = fam->add_option("--odd", odd, "Odd n in a..b");
  auto* o_even = fam->add_option("--even", even, "Even n in a..b");
  auto* o_primes = fam->add_option("--primes", primes, "Prime n in a..b");
  auto* o_range = fam->add_option("--range", range, "Every n in a..b");
  o_odd->excludes(o_even, o_primes, o_range);
  o_even->excludes(o_primes, o_range);
  o_primes->excludes(o_range);
  fam->add_flag("--squarefree-only", squarefree_only, "Keep only rows with square-free chi");

  auto* map = app.add_subcommand("map", "Build one map of a family");
  std::string map_family;
  std::size_t map_n = 0;
  bool dot = false;
  map->add_option("family", map_family, "C31, C33 or C34")->required();
  map->add_option("n", map_n, "Family parameter")->required();
  map->add_flag("--dot", dot, "Emit the underlying graph in DOT (same as --format dot)");

  auto* ana = app.add_subcommand("analyze", "Structural report for a generator file");
  std::string genfile;
  ana->add_option("genfile", genfile, "Generator file")->required();

  auto* ver = app.add_subcommand("verify", "Run verification claims");
  std::string claim;
  std::size_t lmax = 2;
  std::string claim_help = "Claim id or 'all':";
  for (std::size_t i = 0; i < sqf_claim_count(); ++i) claim_help += std::string(" ") + sqf_claim_id(i);
  ver->add_option("claim", claim, claim_help)->required();
  ver->add_option("--lmax", lmax, "Largest l in parametrized checks")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Config c;
    check(sqf_config_set_cap(c.cfg, cap));
    check(sqf_config_set_seed(c.cfg, seed));
    check(sqf_config_set_workers(c.cfg, workers));
    check(sqf_config_set_show_time(c.cfg, show_time ? 1 : 0));
    sqf_format fmt = parse_format(format);
    ApiString out;
    int exit_code = kExitOk;

    if (fam->parsed()) {
      std::string sel;
      enum { Odd, Even, Primes, All } mode = All;
      if (*o_odd) sel = odd, mode = Odd;
      else if (*o_even) sel = even, mode = Even;
      else if (*o_primes) sel = primes, mode = Primes;
      else if (*o_range) sel = range, mode = All;
      else throw UsageError{"choose a range with --odd, --even, --primes or --range"};
      auto [a, b] = parse_range(sel);
      std::vector<std::size_t> ns;
      for (std::size_t n = a; n <= b; ++n) {
        if ((mode == Odd && n % 2 == 0) || (mode == Even && n % 2 == 1) || (mode == Primes && !is_prime(n))) continue;
        if (sqf_family_check(fam_name.c_str(), n) != SQF_OK)
          throw UsageError{fam_name + " n = " + std::to_string(n) + ": " + sqf_last_error()};
        ns.push_back(n);
      }
      if (ns.empty()) throw UsageError{"range '" + sel + "' selects no values"};
      check(sqf_family_table(c.cfg, fam_name.c_str(), ns.data(), ns.size(), squarefree_only ? 1 : 0, fmt, &out.p));
    } else if (map->parsed()) {
      if (dot) fmt = SQF_FORMAT_DOT;
      check(sqf_map(c.cfg, map_family.c_str(), map_n, fmt, &out.p));
    } else if (ana->parsed()) {
      sqf_group* g = nullptr;
      auto s = sqf_group_from_genfile_path(c.cfg, genfile.c_str(), &g);
      if (s != SQF_OK) {
        std::string msg = sqf_last_error();
        throw UsageError{s == SQF_ERR_PARSE ? genfile + ": " + msg : msg};
      }
      auto st = sqf_analyze(c.cfg, g, fmt, &out.p);
      sqf_group_free(g);
      check(st);
    } else if (ver->parsed()) {
      int refuted = 0;
      check(sqf_verify(c.cfg, claim.c_str(), lmax, fmt, &out.p, &refuted));
      if (refuted) exit_code = kExitRefuted;
    }
    emit(out.p ? out.p : "", out_path);
    return exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

#include "sqfmaps/sqfmaps.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "sqfmaps/analysis.hpp"
#include "sqfmaps/constructions.hpp"
#include "sqfmaps/errors.hpp"
#include "sqfmaps/genfile.hpp"
#include "sqfmaps/maps.hpp"
#include "sqfmaps/verifier.hpp"

struct sqf_config {
  std::size_t cap = sqf::kDefaultElementCap;
  std::uint64_t seed = sqf::kDefaultSeed;
  unsigned workers = 1;
  bool show_time = false;
};

struct sqf_group {
  sqf::PermGroup group;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_error_line = 0;

sqf_status fail(sqf_status s, const std::string& msg, std::size_t line = 0) {
  g_error = msg;
  g_error_line = line;
  return s;
}

// Runs `body`, translating library exceptions into status codes.
template <class F>
sqf_status guarded(F&& body) {
  g_error.clear();
  g_error_line = 0;
  try {
    body();
    return SQF_OK;
  } catch (const sqf::ParseError& e) {
    return fail(SQF_ERR_PARSE, e.what(), e.line());
  } catch (const sqf::InvalidArgument& e) {
    return fail(SQF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const sqf::CapExceeded& e) {
    return fail(SQF_ERR_CAP_EXCEEDED, e.what());
  } catch (const sqf::VerificationFailure& e) {
    return fail(SQF_ERR_VERIFICATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SQF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SQF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SQF_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

void require(bool cond, const char* what) {
  if (!cond) throw sqf::InvalidArgument(what);
}

const sqf_config& config_or_default(const sqf_config* cfg) {
  static const sqf_config defaults;
  return cfg ? *cfg : defaults;
}

sqf::Family family_of(const char* name) {
  require(name != nullptr, "family is null");
  auto f = sqf::parse_family(name);
  if (!f) throw sqf::InvalidArgument(std::string("unknown family '") + name + "' (expected C31, C33 or C34)");
  return *f;
}

void check_format(sqf_format fmt, bool dot_ok) {
  if (fmt == SQF_FORMAT_TEXT || fmt == SQF_FORMAT_RECORDS) return;
  if (fmt == SQF_FORMAT_DOT && dot_ok) return;
  throw sqf::InvalidArgument(fmt == SQF_FORMAT_DOT ? "dot format applies to map output only" : "unknown format");
}

std::string family_rows(const sqf_config& c, sqf::Family f, const std::vector<std::size_t>& ns, bool squarefree_only,
                        sqf_format fmt) {
  for (auto n : ns)
    if (auto err = sqf::family_parameter_error(f, n); !err.empty())
      throw sqf::InvalidArgument(sqf::to_string(f) + " n = " + std::to_string(n) + ": " + err);
  auto rows = sqf::emit_family_table(f, ns, c.cap, c.workers);
  std::string out;
  for (const auto& r : rows) {
    if (squarefree_only && !r.chi.squarefree) continue;
    if (fmt == SQF_FORMAT_TEXT) {
      out += std::to_string(r.n) + " | " + std::to_string(r.chi.value) + " | " + r.chi.dot() + " | " +
             (r.chi.squarefree ? "squarefree" : "not-squarefree") + "\n";
    } else {
      nlohmann::ordered_json j;
      j["record"] = "family_row";
      j["family"] = sqf::to_string(f);
      j["n"] = r.n;
      j["order"] = r.order;
      j["chi"] = r.chi.value;
      j["chi_factored"] = r.chi.dot();
      j["squarefree"] = r.chi.squarefree;
      out += j.dump() + "\n";
    }
  }
  return out;
}

std::string map_output(const sqf_config& c, sqf::Family f, std::size_t n, sqf_format fmt) {
  if (auto err = sqf::family_parameter_error(f, n); !err.empty()) throw sqf::InvalidArgument(err);
  // build_family enumerates X, of order 8n^2, for every family.
  const std::size_t order = n > (1u << 20) ? SIZE_MAX : 8 * n * n;
  if (order > c.cap)
    throw sqf::CapExceeded("group too large for desk-scale enumeration: order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(c.cap));
  auto inst = sqf::build_family(f, n);
  const auto& G = inst.group.group;
  auto s = sqf::summarize_map(G, inst.triple);
  std::vector<std::string> el;
  for (const auto& g : inst.triple.elements) el.push_back(g.to_string());
  const std::string name = sqf::to_string(f);
  if (fmt == SQF_FORMAT_DOT) {
    auto m = sqf::build_map(G, inst.triple);
    std::string out = "// " + name + " n=" + std::to_string(n) + ": V=" + std::to_string(s.vertices) +
                      " E=" + std::to_string(s.edges) + " F=" + std::to_string(s.faces) +
                      " chi=" + std::to_string(s.chi) + " (" + s.chi_factored + ") graph " + s.graph + "\n";
    return out + sqf::underlying_graph(m).to_dot(name + "_" + std::to_string(n));
  }
  if (fmt == SQF_FORMAT_RECORDS) {
    nlohmann::ordered_json j;
    j["record"] = "map";
    j["family"] = name;
    j["n"] = n;
    auto summary = nlohmann::ordered_json::parse(sqf::to_json(s));
    for (auto it = summary.begin(); it != summary.end(); ++it) j[it.key()] = it.value();
    j["triple"] = el;
    return j.dump() + "\n";
  }
  std::string out;
  out += "map " + name + " n=" + std::to_string(n) + "\n";
  out += "order: " + std::to_string(s.order) + "\n";
  out += "triple: " + el[0] + " " + el[1] + " " + el[2] + "\n";
  out += "vertices: " + std::to_string(s.vertices) + "\n";
  out += "edges: " + std::to_string(s.edges) + "\n";
  out += "faces: " + std::to_string(s.faces) + "\n";
  out += "valency: " + std::to_string(s.valency) + "\n";
  out += "face length: " + std::to_string(s.face_length) + "\n";
  out += "chi: " + std::to_string(s.chi) + " (" + s.chi_factored + ", " +
         (s.squarefree ? "squarefree" : "not-squarefree") + ")\n";
  out += "graph: " + s.graph + "\n";
  return out;
}

std::string verify_output(const sqf_config& c, const std::string& claim, std::size_t lmax, sqf_format fmt,
                          bool& refuted) {
  sqf::VerifyOptions opts;
  opts.lmax = lmax;
  opts.workers = c.workers;
  opts.seed = c.seed;
  opts.cap = c.cap;
  std::vector<sqf::VerificationReport> reports;
  if (claim == "all")
    reports = sqf::verify_all(opts);
  else
    reports.push_back(sqf::verify(claim, opts));
  std::size_t confirmed = 0, skipped = 0, failed = 0;
  std::string out;
  for (const auto& r : reports) {
    confirmed += r.status == sqf::VerifyStatus::Confirmed;
    skipped += r.status == sqf::VerifyStatus::Skipped;
    failed += r.status == sqf::VerifyStatus::Refuted;
    out += fmt == SQF_FORMAT_TEXT ? sqf::to_text(r, c.show_time) : sqf::to_record(r, c.show_time);
  }
  refuted = failed > 0;
  if (fmt == SQF_FORMAT_TEXT) {
    out += "summary: " + std::to_string(reports.size()) + (reports.size() == 1 ? " claim, " : " claims, ") + std::to_string(confirmed) + " confirmed, " +
           std::to_string(failed) + " refuted, " + std::to_string(skipped) + " skipped\n";
  } else {
    nlohmann::ordered_json j;
    j["record"] = "summary";
    j["claims"] = reports.size();
    j["confirmed"] = confirmed;
    j["refuted"] = failed;
    j["skipped"] = skipped;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* sqf_version(void) { return "1.0.0"; }
const char* sqf_last_error(void) { return g_error.c_str(); }
size_t sqf_last_error_line(void) { return g_error_line; }
void sqf_string_free(char* s) { std::free(s); }

sqf_status sqf_config_new(sqf_config** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = new sqf_config();
  });
}

void sqf_config_free(sqf_config* cfg) { delete cfg; }

sqf_status sqf_config_set_cap(sqf_config* cfg, size_t cap) {
  return guarded([&] {
    require(cfg != nullptr, "config is null");
    require(cap > 0, "cap must be positive");
    cfg->cap = cap;
  });
}

sqf_status sqf_config_set_seed(sqf_config* cfg, uint64_t seed) {
  return guarded([&] {
    require(cfg != nullptr, "config is null");
    cfg->seed = seed;
  });
}

sqf_status sqf_config_set_workers(sqf_config* cfg, unsigned workers) {
  return guarded([&] {
    require(cfg != nullptr, "config is null");
    require(workers >= 1, "workers must be at least 1");
    cfg->workers = workers;
  });
}

sqf_status sqf_config_set_show_time(sqf_config* cfg, int show_time) {
  return guarded([&] {
    require(cfg != nullptr, "config is null");
    cfg->show_time = show_time != 0;
  });
}

sqf_status sqf_group_from_genfile_text(const sqf_config* cfg, const char* text, sqf_group** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    auto f = sqf::parse_genfile(text);
    *out = new sqf_group{sqf::group_from_genfile(f, config_or_default(cfg).cap)};
  });
}

sqf_status sqf_group_from_genfile_path(const sqf_config* cfg, const char* path, sqf_group** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    auto f = sqf::load_genfile(path);
    *out = new sqf_group{sqf::group_from_genfile(f, config_or_default(cfg).cap)};
  });
}

void sqf_group_free(sqf_group* g) { delete g; }

sqf_status sqf_group_order(const sqf_group* g, size_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = g->group.order();
  });
}

sqf_status sqf_group_degree(const sqf_group* g, size_t* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = g->group.degree();
  });
}

sqf_status sqf_analyze(const sqf_config* cfg, const sqf_group* g, sqf_format fmt, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    check_format(fmt, false);
    const auto& c = config_or_default(cfg);
    auto r = sqf::analyze(g->group, {c.workers, c.seed});
    *out = dup(fmt == SQF_FORMAT_TEXT ? sqf::to_text(r) : sqf::to_record(r) + "\n");
  });
}

sqf_status sqf_family_check(const char* family, size_t n) {
  return guarded([&] {
    auto f = family_of(family);
    if (auto err = sqf::family_parameter_error(f, n); !err.empty()) throw sqf::InvalidArgument(err);
  });
}

sqf_status sqf_family_table(const sqf_config* cfg, const char* family, const size_t* ns, size_t count,
                            int squarefree_only, sqf_format fmt, char** out) {
  return guarded([&] {
    require(out != nullptr && (ns != nullptr || count == 0), "null argument");
    check_format(fmt, false);
    auto f = family_of(family);
    std::vector<std::size_t> v(ns, ns + count);
    *out = dup(family_rows(config_or_default(cfg), f, v, squarefree_only != 0, fmt));
  });
}

sqf_status sqf_map(const sqf_config* cfg, const char* family, size_t n, sqf_format fmt, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    check_format(fmt, true);
    *out = dup(map_output(config_or_default(cfg), family_of(family), n, fmt));
  });
}

size_t sqf_claim_count(void) { return sqf::claim_ids().size(); }

const char* sqf_claim_id(size_t i) {
  const auto& ids = sqf::claim_ids();
  return i < ids.size() ? ids[i].c_str() : nullptr;
}

sqf_status sqf_verify(const sqf_config* cfg, const char* claim, size_t lmax, sqf_format fmt, char** out,
                      int* refuted) {
  return guarded([&] {
    require(claim != nullptr && out != nullptr, "null argument");
    check_format(fmt, false);
    bool r = false;
    *out = dup(verify_output(config_or_default(cfg), claim, lmax, fmt, r));
    if (refuted) *refuted = r ? 1 : 0;
  });
}

}  // extern "C"

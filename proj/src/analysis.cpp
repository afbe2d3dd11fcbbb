#include "sqfmaps/analysis.hpp"

#include "json.hpp"
#include "sqfmaps/factor.hpp"

namespace sqf {

AnalysisReport analyze(const PermGroup& G, const AnalyzeOptions& opts) {
  AnalysisReport r;
  r.degree = G.degree();
  r.order = G.order();
  r.solvable = is_solvable(G);
  for (const auto& [p, e] : prime_factors(G.order())) {
    auto P = sylow(G, p, opts.seed).group;
    r.sylow.push_back({p, P.order(), recognize(P).to_string()});
  }
  r.hypothesis = satisfies_hypothesis(G, opts.seed);
  SearchOptions so{opts.workers};
  for (auto kind : {TripleKind::Regular, TripleKind::Reversing, TripleKind::RotaryPair}) {
    TripleSummary t;
    t.kind = kind;
    t.witness = find_any(G, kind, so, &t.stats);
    r.triples.push_back(std::move(t));
  }
  return r;
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string label(TripleKind k) { return k == TripleKind::RotaryPair ? "rotary pair" : to_string(k) + " triple"; }

}  // namespace

std::string to_text(const AnalysisReport& r) {
  std::string s;
  s += "order: " + std::to_string(r.order) + "\n";
  s += "degree: " + std::to_string(r.degree) + "\n";
  s += std::string("solvable: ") + (r.solvable ? "true" : "false") + "\n";
  for (const auto& p : r.sylow)
    s += "sylow " + std::to_string(p.prime) + ": order " + std::to_string(p.order) + ", " + p.tag + "\n";
  s += std::string("hypothesis: ") + (r.hypothesis.satisfied ? "true" : "false");
  if (r.hypothesis.primes.empty()) {
    s += " (vacuous)";
  } else if (!r.hypothesis.satisfied) {
    std::vector<std::string> bad;
    for (const auto& p : r.hypothesis.primes)
      if (!p.ok) bad.push_back(std::to_string(p.prime));
    s += " (fails at " + join(bad, ", ") + ")";
  }
  s += "\n";
  for (const auto& p : r.hypothesis.primes) {
    s += "  prime " + std::to_string(p.prime) + ": ";
    if (p.ok)
      s += p.witness_tag + " subgroup of order " + std::to_string(p.witness_order) + " <" +
           join(p.witness_generators, ", ") + ">\n";
    else
      s += "no cyclic or dihedral subgroup of index " + std::to_string(p.prime) + "\n";
  }
  const bool odd = r.order % 2 == 1;
  for (const auto& t : r.triples) {
    s += label(t.kind) + ": ";
    if (t.witness) {
      std::vector<std::string> el;
      for (const auto& g : t.witness->elements) el.push_back(g.to_string());
      s += "exists " + join(el, " ");
    } else {
      s += odd ? "none (odd order)" : "none";
    }
    s += " [search space " + std::to_string(t.stats.nominal) + ", visited " + std::to_string(t.stats.visited) + "]\n";
  }
  return s;
}

std::string to_record(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["record"] = "analysis";
  j["order"] = r.order;
  j["degree"] = r.degree;
  j["solvable"] = r.solvable;
  auto sy = nlohmann::ordered_json::array();
  for (const auto& p : r.sylow) sy.push_back({{"prime", p.prime}, {"order", p.order}, {"tag", p.tag}});
  j["sylow"] = sy;
  nlohmann::ordered_json h;
  h["satisfied"] = r.hypothesis.satisfied;
  auto ps = nlohmann::ordered_json::array();
  for (const auto& p : r.hypothesis.primes) {
    nlohmann::ordered_json o;
    o["prime"] = p.prime;
    o["ok"] = p.ok;
    o["witness"] = p.witness_tag;
    if (p.ok) {
      o["witness_order"] = p.witness_order;
      o["witness_generators"] = p.witness_generators;
    }
    ps.push_back(o);
  }
  h["primes"] = ps;
  j["hypothesis"] = h;
  auto ts = nlohmann::ordered_json::array();
  for (const auto& t : r.triples) {
    nlohmann::ordered_json o;
    o["kind"] = to_string(t.kind);
    o["exists"] = t.witness.has_value();
    if (t.witness) {
      std::vector<std::string> el;
      for (const auto& g : t.witness->elements) el.push_back(g.to_string());
      o["witness"] = el;
    }
    o["search_space"] = t.stats.nominal;
    o["visited"] = t.stats.visited;
    ts.push_back(o);
  }
  j["triples"] = ts;
  return j.dump();
}

}  // namespace sqf

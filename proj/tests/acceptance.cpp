// Acceptance gate: one PASS/FAIL line per criterion on stdout, details of
// failures on stderr. With an argument, runs only that criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "sqfmaps/catalog.hpp"
#include "sqfmaps/constructions.hpp"
#include "sqfmaps/maps.hpp"
#include "sqfmaps/triples.hpp"
#include "sqfmaps/verifier.hpp"

using namespace sqf;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> problems;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
};

std::size_t brute_involutions(const PermGroup& G) {
  std::size_t k = 0;
  for (const auto& g : G.elements()) k += !g.is_identity() && (g * g).is_identity();
  return k;
}

std::vector<std::size_t> valid_ns(Family f, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> ns;
  for (std::size_t n = lo; n <= hi; ++n)
    if (family_parameter_error(f, n).empty()) ns.push_back(n);
  return ns;
}

// 1. Published Euler characteristic tables.
Outcome family_tables() {
  Outcome o;
  struct Table {
    Family f;
    std::vector<std::size_t> ns;
    std::vector<std::int64_t> chi;
    std::vector<std::string> dot;
  };
  const std::vector<Table> tables{
      {Family::C31,
       {5, 13, 17, 29, 37, 41},
       {-10, -130, -238, -754, -1258, -1558},
       {"-2.5", "-2.5.13", "-2.7.17", "-2.13.29", "-2.17.37", "-2.19.41"}},
      {Family::C33,
       {2, 10, 14, 22, 26, 34},
       {2, -70, -154, -418, -598, -1054},
       {"2", "-2.5.7", "-2.7.11", "-2.11.19", "-2.13.23", "-2.17.31"}},
      {Family::C34,
       {3, 5, 7, 13, 17, 19, 23},
       {-3, -15, -35, -143, -255, -323, -483},
       {"-3", "-3.5", "-5.7", "-11.13", "-3.5.17", "-17.19", "-3.7.23"}},
  };
  for (const auto& t : tables) {
    auto rows = emit_family_table(t.f, t.ns);
    o.expect(rows.size() == t.ns.size(), to_string(t.f) + ": row count");
    for (std::size_t i = 0; i < rows.size() && i < t.ns.size(); ++i) {
      const auto tag = to_string(t.f) + " n=" + std::to_string(t.ns[i]);
      o.expect(rows[i].n == t.ns[i], tag + ": n");
      o.expect(rows[i].chi.value == t.chi[i], tag + ": chi " + std::to_string(rows[i].chi.value));
      o.expect(rows[i].chi.dot() == t.dot[i], tag + ": factored " + rows[i].chi.dot());
      o.expect(rows[i].chi.squarefree, tag + ": not flagged square-free");
    }
  }
  return o;
}

// 2 and 3. Every map of the three families for n <= 41.
Outcome family_maps(bool graphs) {
  Outcome o;
  for (auto f : {Family::C31, Family::C33, Family::C34})
    for (auto n : valid_ns(f, 2, 41)) {
      const auto tag = to_string(f) + " n=" + std::to_string(n);
      auto inst = build_family(f, n);
      auto m = build_map(inst.group.group, inst.triple);
      if (!graphs) {
        const auto nn = static_cast<std::int64_t>(n);
        const std::int64_t formula = f == Family::C34 ? -nn * (nn - 2) : -nn * (nn - 3);
        const auto counted = static_cast<std::int64_t>(m.vertices) - static_cast<std::int64_t>(m.edges) +
                             static_cast<std::int64_t>(m.faces);
        o.expect(counted == formula, tag + ": V-E+F = " + std::to_string(counted));
        o.expect(euler_characteristic_closed(inst.group.group, inst.triple).value == formula, tag + ": closed form");
        continue;
      }
      auto g = underlying_graph(m);
      if (f == Family::C34)
        o.expect(is_cartesian_square_of_cycle(g) == n, tag + ": not C_n x C_n");
      else
        o.expect(is_multicycle(g) == std::make_pair(n, n), tag + ": not C_n^(n)");
    }
  return o;
}

NamedGroup z4_circ_gl23() {
  auto GL = catalog::gl2(3);
  auto Z4 = catalog::cyclic(4);
  auto P = central_product(GL.group, Z4.group, {GL.at("minus1")}, {Z4.at("a").pow(2)});
  return {P.group, {}};
}

// 4. GL(2,3) and Z4 o GL(2,3) carry no regular triple.
Outcome lemma_6_2() {
  Outcome o;
  auto GL = catalog::gl2(3).group;
  auto K = z4_circ_gl23().group;
  o.expect(GL.order() == 48, "GL(2,3) order");
  o.expect(K.order() == 96, "Z4oGL(2,3) order");
  o.expect(!find_any(GL, TripleKind::Regular), "GL(2,3) has a regular triple");
  o.expect(!find_any(K, TripleKind::Regular), "Z4oGL(2,3) has a regular triple");
  o.expect(brute_involutions(K) == 19, "Z4oGL(2,3) involutions: " + std::to_string(brute_involutions(K)));
  o.expect(count_involutions(K) == 19, "count_involutions disagrees");
  return o;
}

// 5. (Z_{3^l} x Z3) : Z2 with inversion has no rotary pair; D18 has one.
Outcome lemma_6_3() {
  Outcome o;
  std::size_t m = 1;
  for (std::size_t l = 1; l <= 3; ++l) {
    m *= 3;
    auto A = catalog::abelian2(m, 3);
    auto G = semidirect_product(A.group, catalog::cyclic(2).group, {{A.at("a").inverse(), A.at("b").inverse()}}).group;
    o.expect(G.order() == 6 * m, "order at l=" + std::to_string(l));
    o.expect(!find_any(G, TripleKind::RotaryPair), "rotary pair at l=" + std::to_string(l));
  }
  auto D = catalog::dihedral(9).group;
  auto w = find_any(D, TripleKind::RotaryPair);
  o.expect(w && check_triple(D, w->elements, TripleKind::RotaryPair), "dihedral control has no rotary pair");
  return o;
}

void require_confirmed(Outcome& o, const VerificationReport& r) {
  o.expect(r.status == VerifyStatus::Confirmed, r.claim + " " + to_string(r.status));
  for (const auto& it : r.items)
    o.expect(it.ok, it.subject + ": expected " + it.expected + ", observed " + it.observed);
}

// 6. Existence flags of every 2-group in the index-2 classification.
Outcome prop_4_2() {
  Outcome o;
  VerifyOptions opts;
  opts.lmax = 2;
  auto r = verify_prop_4_2(opts);
  require_confirmed(o, r);
  o.expect(r.items.size() == 2 * prop41_cases().size() * 3, "item count " + std::to_string(r.items.size()));
  for (std::size_t l = 1; l <= 2; ++l) {
    auto Q = build_prop41("2.3", l).group;
    o.expect(find_any(Q, TripleKind::Reversing).has_value(), "QoZ4 reversing at l=" + std::to_string(l));
    o.expect(!find_any(Q, TripleKind::Regular).has_value(), "QoZ4 regular at l=" + std::to_string(l));
  }
  return o;
}

// 7. Hypothesis heredity over random subgroups and scanned quotients.
Outcome heredity() {
  Outcome o;
  auto r = verify("lemma-2.4");
  require_confirmed(o, r);
  bool sampled = false;
  for (const auto& it : r.items) sampled = sampled || it.subject.rfind("200 random", 0) == 0;
  o.expect(sampled, "no 200-subgroup sample item");
  return o;
}

// 8. The listed K groups carry their generating data.
Outcome k_groups() {
  Outcome o;
  const std::set<std::string> regular_cases{"1.1", "1.2", "1.5", "1.6", "2.4", "2.5"};
  for (std::size_t l = 1; l <= 2; ++l) {
    for (int table : {1, 2})
      for (const auto& c : table_cases(table))
        for (const auto& col : table_columns(table)) {
          if ((c == "1.7" || c == "2.3") && l < 2) continue;
          const bool listed_regular =
              regular_cases.count(c) > 0 && (col == "Z2^2" || (table == 1 && col == "Z2^3"));
          const bool listed_rotary = c != "1.5" && c != "1.6";
          if (!listed_regular && !listed_rotary) continue;
          auto G = build_table_group(table, c, col, l).group;
          const auto name = "case " + c + " " + table_entry_name(table, c, col, l);
          if (listed_regular) o.expect(find_any(G, TripleKind::Regular).has_value(), name + ": no regular triple");
          if (listed_rotary) o.expect(find_any(G, TripleKind::RotaryPair).has_value(), name + ": no rotary pair");
        }
    for (const auto& id : rotary_extra_ids())
      o.expect(find_any(build_rotary_extra(id, l).group, TripleKind::RotaryPair).has_value(),
               id + " l=" + std::to_string(l) + ": no rotary pair");
  }
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "family tables reproduced exactly", 30, family_tables},
      {2, "two-way Euler characteristic agreement for n <= 41", 120, [] { return family_maps(false); }},
      {3, "underlying graphs recognized for n <= 41", 120, [] { return family_maps(true); }},
      {4, "GL(2,3) and Z4oGL(2,3): no regular triple, 19 involutions", 5, lemma_6_2},
      {5, "(Z_{3^l}xZ3):Z2 has no rotary pair for l <= 3, dihedral control has one", 5, lemma_6_3},
      {6, "2-group existence flags at l = 1, 2", 60, prop_4_2},
      {7, "hypothesis heredity with zero violations", 120, heredity},
      {8, "listed K groups carry regular triples and rotary pairs at l = 1, 2", 120, k_groups},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failed = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) o.expect(false, "took " + std::to_string(secs) + " s");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << buf << ")" << std::endl;
    for (const auto& p : o.problems) std::cerr << "  " << c.id << ": " << p << "\n";
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}

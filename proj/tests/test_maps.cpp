#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "doctest.h"
#include "sqfmaps/catalog.hpp"
#include "sqfmaps/constructions.hpp"
#include "sqfmaps/errors.hpp"
#include "sqfmaps/maps.hpp"

using namespace sqf;

namespace {

MultiGraph shuffle_vertices(const MultiGraph& g, std::uint64_t seed) {
  std::vector<std::uint32_t> pi(g.vertex_count);
  for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = static_cast<std::uint32_t>(i);
  std::mt19937_64 rng(seed);
  std::shuffle(pi.begin(), pi.end(), rng);
  MultiGraph h;
  h.vertex_count = g.vertex_count;
  for (auto [u, v] : g.edges) h.edges.emplace_back(std::min(pi[u], pi[v]), std::max(pi[u], pi[v]));
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

// Oracle: count vertices, edges and faces by materializing every coset as a
// sorted element set, independently of the label-based build.
std::array<std::size_t, 3> naive_counts(const PermGroup& G, const GeneratingTriple& t) {
  auto count = [&](const PermGroup& H) {
    std::set<std::set<Permutation>> cs;
    for (const auto& g : G.elements()) {
      std::set<Permutation> c;
      for (const auto& h : H.elements()) c.insert(h * g);
      cs.insert(c);
    }
    return cs.size();
  };
  const auto& e = t.elements;
  return {count(subgroup(G, {e[0], e[1]})), count(subgroup(G, {e[0], e[2]})),
          count(subgroup(G, {e[1], e[2]}))};
}

}  // namespace

TEST_CASE("factorization and dot notation") {
  CHECK(factor(-10).dot() == "-2.5");
  CHECK(factor(-10).squarefree);
  CHECK_FALSE(factor(12).squarefree);
  CHECK(factor(12).dot() == "2^2.3");
  CHECK(factor(-143).dot() == "-11.13");
  CHECK(factor(-143).squarefree);
  CHECK(factor(0).zero_warning);
  CHECK_FALSE(factor(0).squarefree);
  CHECK(factor(0).dot() == "0");
  CHECK(factor(1).dot() == "1");
  CHECK(factor(-1).dot() == "-1");
  CHECK(factor(2).dot() == "2");
  for (std::int64_t k = -500; k <= 500; ++k) {
    if (k == 0) continue;
    auto f = factor(k);
    std::int64_t prod = f.sign;
    bool sq = true;
    for (auto [p, e] : f.primes) {
      for (unsigned i = 0; i < e; ++i) prod *= static_cast<std::int64_t>(p);
      sq = sq && e == 1;
    }
    CHECK(prod == k);
    // Oracle: no d^2 with d >= 2 divides k.
    bool oracle = true;
    for (std::int64_t d = 2; d * d <= std::abs(k); ++d) oracle = oracle && (k % (d * d) != 0);
    CHECK(f.squarefree == oracle);
    CHECK(sq == oracle);
  }
}

TEST_CASE("graph recognizers round trip") {
  for (std::size_t n = 3; n <= 50; ++n) {
    auto lam = 1 + n % 4;
    auto mc = is_multicycle(shuffle_vertices(multicycle(n, lam), n));
    REQUIRE(mc);
    CHECK(mc->first == n);
    CHECK(mc->second == lam);
    CHECK(is_cartesian_square_of_cycle(shuffle_vertices(cartesian_square_of_cycle(n), n)) == n);
  }
  CHECK(is_multicycle(multicycle(2, 2)) == std::make_pair(std::size_t{2}, std::size_t{2}));
  MultiGraph K4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  CHECK_FALSE(is_multicycle(K4));
  CHECK_FALSE(is_cartesian_square_of_cycle(K4));
  // Two disjoint triangles are 2-regular but not one cycle.
  MultiGraph two{6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}};
  CHECK_FALSE(is_multicycle(two));
  // A 4-regular graph on 16 vertices that is not C4 x C4: the circulant
  // with jumps 1 and 3 (16-cycle plus chords).
  MultiGraph circ{16, {}};
  for (std::uint32_t i = 0; i < 16; ++i)
    for (std::uint32_t j : {1u, 3u}) {
      auto k = (i + j) % 16;
      circ.edges.emplace_back(std::min(i, k), std::max(i, k));
    }
  std::sort(circ.edges.begin(), circ.edges.end());
  CHECK_FALSE(is_cartesian_square_of_cycle(circ));
  CHECK(graph_tag(multicycle(5, 5)) == "C5^(5)");
  CHECK(graph_tag(cartesian_square_of_cycle(4)) == "C4[]C4");
  auto d = multicycle(3, 2).to_dot();
  CHECK(std::count(d.begin(), d.end(), '-') == 2 * 6);
}

TEST_CASE("degenerate single-vertex map") {
  auto E = catalog::elementary_abelian(2, 2);
  GeneratingTriple t{TripleKind::Regular, {E.at("e0"), E.at("e0") * E.at("e1"), E.at("e1")}};
  auto m = build_map(E.group, t);
  CHECK(m.vertices == 1);
  CHECK(m.edges == 1);
  CHECK(m.faces == 1);
  CHECK(euler_characteristic_counted(m) == 1);
  CHECK(euler_characteristic_closed(E.group, t).value == 1);
  CHECK_THROWS_AS(underlying_graph(m), VerificationFailure);
  CHECK(summarize_map(E.group, t).graph == "other");
}

TEST_CASE("first family at n = 5") {
  auto inst = build_family(Family::C31, 5);
  const auto& G = inst.group.group;
  CHECK(G.order() == 100);
  auto m = build_map(G, inst.triple);
  CHECK(m.vertex_stabilizer.order() == 20);
  CHECK(m.edge_stabilizer.order() == 4);
  CHECK(m.face_stabilizer.order() == 10);
  CHECK(m.vertices == 5);
  CHECK(m.edges == 25);
  CHECK(m.faces == 10);
  auto oracle = naive_counts(G, inst.triple);
  CHECK(oracle == std::array<std::size_t, 3>{5, 25, 10});
  auto chi = euler_characteristic_closed(G, inst.triple);
  CHECK(chi.value == -10);
  CHECK(chi.dot() == "-2.5");
  CHECK(euler_characteristic_counted(m) == -10);
  auto g = underlying_graph(m);
  CHECK(is_multicycle(g) == std::make_pair(std::size_t{5}, std::size_t{5}));
  auto deg = g.degrees();
  std::size_t sum = 0;
  for (auto d : deg) sum += d;
  CHECK(sum == 2 * g.edges.size());
  // Quotient by <a> x <b> lands on the dihedral branch.
  auto N = subgroup(G, {inst.group.at("a"), inst.group.at("b")});
  auto r = quotient_behavior(G, inst.triple, N);
  CHECK(r.quotient_order == 4);
  CHECK(r.branch == QuotientReport::Branch::Dihedral);
  const auto& p = r.projected;
  CHECK(p[0] == p[2] * (p[0] * p[2]));
}

TEST_CASE("third family at n = 3 and n = 5") {
  auto inst = build_family(Family::C34, 3);
  CHECK(inst.group.group.order() == 72);
  auto s = summarize_map(inst.group.group, inst.triple);
  CHECK(s.valency == 4);
  CHECK(s.face_length == 6);
  CHECK(s.chi == -3);
  CHECK(s.graph == "C3[]C3");
  CHECK(s.vertices == 9);
  auto i5 = build_family(Family::C34, 5);
  auto m5 = build_map(i5.group.group, i5.triple);
  CHECK(is_cartesian_square_of_cycle(underlying_graph(m5)) == 5);
  CHECK(euler_characteristic_counted(m5) == -15);
}

TEST_CASE("second family at n = 2") {
  auto inst = build_family(Family::C33, 2);
  CHECK(inst.group.group.order() == 16);
  auto s = summarize_map(inst.group.group, inst.triple);
  CHECK(s.chi == 2);
  CHECK(s.chi_factored == "2");
  CHECK(s.squarefree);
  CHECK(s.vertices == 2);
  CHECK(s.graph == "C2^(2)");
  auto oracle = naive_counts(inst.group.group, inst.triple);
  CHECK(static_cast<std::int64_t>(oracle[0]) - static_cast<std::int64_t>(oracle[1]) +
            static_cast<std::int64_t>(oracle[2]) ==
        2);
}

TEST_CASE("closed-form laws and two-way agreement across the families") {
  for (std::size_t n = 2; n <= 15; ++n)
    for (auto f : {Family::C31, Family::C33, Family::C34}) {
      if (!family_parameter_error(f, n).empty()) continue;
      CAPTURE(to_string(f));
      CAPTURE(n);
      auto inst = build_family(f, n);
      auto m = build_map(inst.group.group, inst.triple);
      auto chi = euler_characteristic_closed(inst.group.group, inst.triple);
      CHECK(chi.value == euler_characteristic_counted(m));
      const auto nn = static_cast<std::int64_t>(n);
      CHECK(chi.value == (f == Family::C34 ? -nn * (nn - 2) : -nn * (nn - 3)));
      CHECK(m.valency() * m.vertices == 2 * m.edges);
      for (const auto& ev : m.edge_vertices) CHECK(ev.size() <= 2);
      for (const auto& ef : m.edge_faces) CHECK(ef.size() <= 2);
      if (f != Family::C34 && n >= 3) CHECK(is_multicycle(underlying_graph(m)) == std::make_pair(n, n));
      if (f == Family::C34) CHECK(m.face_length() == 2 * n);
    }
}

TEST_CASE("map summary JSON") {
  auto inst = build_family(Family::C31, 5);
  auto j = to_json(summarize_map(inst.group.group, inst.triple));
  CHECK(j.find("\"chi\":-10") != std::string::npos);
  CHECK(j.find("\"chi_factored\":\"-2.5\"") != std::string::npos);
  CHECK(j.find("\"graph\":\"C5^(5)\"") != std::string::npos);
}

TEST_CASE("build_map rejects invalid triples") {
  auto S4 = catalog::symmetric(4);
  auto t = S4.at("t");
  CHECK_THROWS_AS(build_map(S4.group, GeneratingTriple{TripleKind::Regular, {t, t, t}}), InvalidArgument);
}

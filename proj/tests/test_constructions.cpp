#include "doctest.h"
#include "sqfmaps/constructions.hpp"
#include "sqfmaps/errors.hpp"
#include "sqfmaps/maps.hpp"

using namespace sqf;

namespace {

std::size_t brute_involutions(const PermGroup& G) {
  std::size_t k = 0;
  for (const auto& g : G.elements()) k += !g.is_identity() && (g * g).is_identity();
  return k;
}

std::size_t brute_center(const PermGroup& G) {
  std::size_t k = 0;
  for (const auto& g : G.elements()) {
    bool c = true;
    for (const auto& h : G.generators()) c = c && g * h == h * g;
    k += c;
  }
  return k;
}

std::size_t pow_int(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("X and its relations") {
  for (std::size_t n : {2, 3, 4, 5, 7}) {
    auto X = build_X(n);
    CHECK(X.group.order() == 8 * n * n);
    const auto& a = X.at("a");
    const auto& s = X.at("s");
    const auto& sg = X.at("sigma");
    CHECK(a.order() == n);
    CHECK(X.at("b").order() == n);
    CHECK(conjugate(a, s) == a.inverse());
    CHECK(conjugate(X.at("b"), X.at("t")) == X.at("b").inverse());
    CHECK(conjugate(a, sg) == X.at("b"));
    CHECK(conjugate(s, sg) == X.at("t"));
    CHECK(subgroup(X.group, {a, X.at("b"), s, sg}).order() == 8 * n * n);
  }
  CHECK_THROWS_AS(build_X(1), InvalidArgument);
}

TEST_CASE("families: parameters, orders, membership in X") {
  CHECK_THROWS_WITH_AS(build_family(Family::C31, 4), "n must be odd", InvalidArgument);
  CHECK_THROWS_AS(build_family(Family::C34, 6), InvalidArgument);
  CHECK_THROWS_AS(build_family(Family::C33, 1), InvalidArgument);
  for (std::size_t n = 2; n <= 12; ++n) {
    auto X = build_X(n);
    for (auto f : {Family::C31, Family::C33, Family::C34}) {
      if (!family_parameter_error(f, n).empty()) continue;
      auto inst = build_family(f, n);
      CHECK(inst.group.group.order() == (f == Family::C34 ? 8 : 4) * n * n);
      CHECK(check_triple(inst.group.group, inst.triple.elements, TripleKind::Regular));
      for (const auto& g : inst.group.group.generators()) CHECK(X.group.contains(g));
    }
  }
  auto c31 = build_family(Family::C31, 5);
  CHECK(c31.group.group.order() == 100);
}

TEST_CASE("family tables reproduce the published values") {
  auto check_rows = [](Family f, std::vector<std::size_t> ns, std::vector<std::string> want) {
    auto rows = emit_family_table(f, ns);
    REQUIRE(rows.size() == want.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CAPTURE(ns[i]);
      CHECK(rows[i].chi.dot() == want[i]);
      CHECK(rows[i].chi.squarefree);
    }
  };
  check_rows(Family::C31, {5, 13, 17, 29, 37, 41},
             {"-2.5", "-2.5.13", "-2.7.17", "-2.13.29", "-2.17.37", "-2.19.41"});
  check_rows(Family::C33, {2, 10, 14, 22, 26, 34}, {"2", "-2.5.7", "-2.7.11", "-2.11.19", "-2.13.23", "-2.17.31"});
  check_rows(Family::C34, {3, 5, 7, 13, 17, 19, 23},
             {"-3", "-3.5", "-5.7", "-11.13", "-3.5.17", "-17.19", "-3.7.23"});
  auto r3 = emit_family_table(Family::C31, {3});
  CHECK(r3[0].chi.value == 0);
  CHECK_FALSE(r3[0].chi.squarefree);
  CHECK_THROWS_AS(emit_family_table(Family::C34, {41}, 1000), CapExceeded);
  auto par = emit_family_table(Family::C31, {5, 7, 9, 11}, kDefaultElementCap, 3);
  auto seq = emit_family_table(Family::C31, {5, 7, 9, 11});
  for (std::size_t i = 0; i < 4; ++i) CHECK(par[i].chi.value == seq[i].chi.value);
}

TEST_CASE("2-groups with a cyclic or dihedral subgroup of index 2") {
  for (std::size_t l = 1; l <= 3; ++l)
    for (const auto& c : prop41_cases()) {
      CAPTURE(c);
      CAPTURE(l);
      auto G = build_prop41(c, l).group;
      CHECK(G.order() == prop41_order(c, l));
      CHECK(is_p_group(G));
      CHECK(satisfies_hypothesis(G).satisfied);
    }
  auto m = build_prop41("1.3a", 1);
  CHECK(m.group.order() == 16);
  CHECK_FALSE(m.group.is_abelian());
  CHECK(conjugate(m.at("a"), m.at("b")) == m.at("a").pow(5));
  std::uint64_t exponent = 1;
  for (PermGroup::Index i = 0; i < m.group.order(); ++i) exponent = std::max(exponent, m.group.element_order(i));
  CHECK(exponent == 8);
  auto qz = build_prop41("2.3", 1).group;
  CHECK(count_involutions(qz) == brute_involutions(qz));
  CHECK(brute_involutions(qz) == 7);
  CHECK(recognize(build_prop41("2.2", 1).group).kind == IsoKind::DihedralTwisted);
  CHECK(recognize(build_prop41("1.3b", 2).group).kind == IsoKind::Semidihedral);
  CHECK_THROWS_AS(build_prop41("1.4", 1), InvalidArgument);
  CHECK_THROWS_AS(build_prop41("1.1a", 0), InvalidArgument);
}

TEST_CASE("odd p-groups with a cyclic subgroup of index p") {
  auto g = build_lemma43("3", 3, 2).group;
  CHECK(g.order() == 27);
  CHECK(brute_center(g) == 3);
  CHECK(center(g).order() == 3);
  CHECK(recognize(g) == IsoClassTag{IsoKind::ModularP, 3, 2});
  CHECK(build_lemma43("2", 5, 1).group.order() == 25);
  CHECK(build_lemma43("1", 7, 2).group.order() == 49);
  CHECK_THROWS_AS(build_lemma43("3", 3, 1), InvalidArgument);
  CHECK_THROWS_AS(build_lemma43("1", 4, 1), InvalidArgument);
  for (std::size_t p : {3, 5})
    for (std::size_t l = 1; l <= 2; ++l)
      for (const std::string c : {"1", "2", "3"}) {
        if (c == "3" && l < 2) continue;
        CHECK(satisfies_hypothesis(build_lemma43(c, p, l).group).satisfied);
      }
}

TEST_CASE("table entries: orders, named examples, hypothesis") {
  CHECK(isomorphic(build_table_group(1, "1.1", "Z2^2", 1).group, catalog::symmetric(4).group));
  CHECK(isomorphic(build_table_group(1, "1.1", "Q8", 1).group, catalog::gl2(3).group));
  auto d6a4 = build_table_group(2, "2.1", "Z2^2", 1).group;
  CHECK(d6a4.order() == 72);
  auto alt = direct_product(catalog::dihedral(3).group, catalog::alternating(4).group).group;
  CHECK(isomorphic(d6a4, alt));
  CHECK(isomorphic(build_table_group(1, "1.1", "Z2^3", 1).group,
                   direct_product(catalog::cyclic(2).group, catalog::symmetric(4).group).group));
  for (int table : {1, 2})
    for (std::size_t l = 1; l <= 2; ++l)
      for (const auto& c : table_cases(table))
        for (const auto& col : table_columns(table)) {
          if ((c == "1.7" || c == "2.3") && l < 2) {
            CHECK_THROWS_AS(build_table_group(table, c, col, l), InvalidArgument);
            continue;
          }
          CAPTURE(table_entry_name(table, c, col, l));
          auto G = build_table_group(table, c, col, l).group;
          const std::size_t f = col == "Z2^2" ? 4 : (col == "Z4oQ8" ? 16 : 8);
          std::size_t expect = table == 1 ? f * (c == "1.1" ? 6 : 2 * pow_int(3, l + 1))
                                          : f * pow_int(3, l) * ((c == "2.4" || c == "2.5") ? 12 : 6);
          CHECK(G.order() == expect);
          CHECK(satisfies_hypothesis(G).satisfied);
          CHECK(is_solvable(G));
        }
  CHECK_THROWS_AS(build_table_group(1, "1.8", "Q8", 1), InvalidArgument);
  CHECK_THROWS_AS(build_table_group(2, "2.1", "Z2^3", 1), InvalidArgument);
}

TEST_CASE("extra rotary groups") {
  CHECK(build_rotary_extra("Z2^3:Z7^l", 1).group.order() == 56);
  CHECK(build_rotary_extra("Z2^2:Z3^l", 2).group.order() == 36);
  CHECK(build_rotary_extra("Z2xZ2^2:Z3^l", 1).group.order() == 24);
  CHECK(build_rotary_extra("Z4o(Q8:Z3^l)", 1).group.order() == 48);
  CHECK(isomorphic(build_rotary_extra("Z2^2:Z3^l", 1).group, catalog::alternating(4).group));
}

#include <random>
#include <set>

#include "doctest.h"
#include "sqfmaps/catalog.hpp"
#include "sqfmaps/errors.hpp"
#include "sqfmaps/perm_group.hpp"

using namespace sqf;

namespace {

// Independent closure: repeated squaring of a set under multiplication by
// every member, no spanning tree, no hashing shortcuts.
std::set<std::vector<Point>> naive_closure(std::size_t deg, const std::vector<Permutation>& gens) {
  std::set<std::vector<Point>> seen;
  std::vector<Point> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<Point>(i);
  seen.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Point>> cur(seen.begin(), seen.end());
    for (const auto& x : cur)
      for (const auto& g : gens) {
        std::vector<Point> y(deg);
        for (std::size_t p = 0; p < deg; ++p) y[p] = g(x[p]);
        if (seen.insert(y).second) grew = true;
      }
  }
  return seen;
}

}  // namespace

TEST_CASE("composition acts left to right") {
  auto a = Permutation::parse(3, "(0 1)");
  auto b = Permutation::parse(3, "(1 2)");
  // 0 -> 1 -> 2, 1 -> 0, 2 -> 1.
  CHECK((a * b) == Permutation::parse(3, "(0 2 1)"));
  CHECK((a * b)(0) == b(a(0)));
  auto g = Permutation::parse(5, "(0 1 2)(3 4)");
  CHECK((Permutation::identity(5) * g) == g);
  CHECK((g * g.inverse()).is_identity());
  CHECK_THROWS_AS(compose(a, g), InvalidArgument);
}

TEST_CASE("element orders are lcm of cycle lengths") {
  CHECK(Permutation::identity(4).order() == 1);
  CHECK(Permutation::parse(2, "(0 1)").order() == 2);
  CHECK(Permutation::parse(5, "(0 1 2)(3 4)").order() == 6);
}

TEST_CASE("parsing and printing round trip") {
  auto g = Permutation::parse(6, "(0 4 2)(1 5)");
  CHECK(Permutation::parse(6, g.to_string()) == g);
  CHECK(Permutation::parse(3, "()").is_identity());
  CHECK(Permutation::identity(3).to_string() == "()");
  CHECK_THROWS(Permutation::parse(3, "(0 3)"));
  CHECK_THROWS(Permutation::parse(3, "(0 1 0)"));
  CHECK_THROWS(Permutation::parse(3, "(0 1"));
}

TEST_CASE("closure matches an independent enumeration") {
  std::vector<Permutation> gens{Permutation::parse(5, "(0 1 2 3 4)"),
                                Permutation::parse(5, "(1 4)(2 3)")};
  auto G = PermGroup::generate(5, gens);
  CHECK(G.order() == 10);
  auto oracle = naive_closure(5, gens);
  CHECK(oracle.size() == 10);
  for (const auto& e : G.elements()) {
    std::vector<Point> v(e.images().begin(), e.images().end());
    CHECK(oracle.count(v) == 1);
  }
  CHECK(PermGroup::generate(3, {Permutation::identity(3)}).order() == 1);
  CHECK(G.elements()[0].is_identity());
}

TEST_CASE("closure property and conjugation convention on random triples") {
  auto G = catalog::symmetric(5).group;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(G.order() - 1));
  for (int i = 0; i < 200; ++i) {
    const auto& a = G.element(pick(rng));
    const auto& b = G.element(pick(rng));
    const auto& c = G.element(pick(rng));
    CHECK(G.contains(a * b));
    CHECK(G.contains(a.inverse()));
    CHECK(conjugate(conjugate(a, b), c) == conjugate(a, b * c));
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}

TEST_CASE("element cap is enforced") {
  auto gens = catalog::symmetric(8).group.generators();
  CHECK_THROWS_AS(PermGroup::generate(8, gens, 1000), CapExceeded);
  try {
    PermGroup::generate(8, gens, 1000);
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("group too large for desk-scale enumeration") != std::string::npos);
  }
}

TEST_CASE("subgroups, cosets and Lagrange") {
  auto S4 = catalog::symmetric(4).group;
  auto H = subgroup(S4, {Permutation::parse(4, "(0 1 2 3)")});
  CHECK(H.order() == 4);
  auto cs = cosets(S4, H);
  CHECK(cs.size() == 6);
  std::set<Permutation> seen;
  for (const auto& c : cs)
    for (const auto& g : S4.elements())
      if (c.contains(g)) CHECK(seen.insert(g).second);
  CHECK(seen.size() == 24);
  CHECK(cosets(S4, S4).size() == 1);
  CHECK(cosets(S4, trivial_subgroup(S4)).size() == 24);
  CHECK_THROWS_AS(subgroup(H, {Permutation::parse(4, "(0 1)")}), InvalidArgument);
  // Coset equality: same subgroup, rep1 * rep2^-1 in H.
  Coset c1{H, Permutation::parse(4, "(0 1)")};
  Coset c2{H, Permutation::parse(4, "(0 1 2 3)") * Permutation::parse(4, "(0 1)")};
  CHECK(c1 == c2);
}

TEST_CASE("center, centralizer, normalizer, commutator subgroup") {
  auto Z = catalog::abelian2(4, 6).group;
  CHECK(center(Z).order() == Z.order());
  auto GL = catalog::gl2(3);
  CHECK(GL.group.order() == 48);
  // Oracle: count elements commuting with all 48 elements.
  std::size_t central = 0;
  for (const auto& g : GL.group.elements()) {
    bool ok = true;
    for (const auto& h : GL.group.elements())
      if (g * h != h * g) ok = false;
    central += ok;
  }
  CHECK(central == 2);
  CHECK(center(GL.group).order() == 2);
  CHECK(center(GL.group).contains(GL.at("minus1")));
  auto S4 = catalog::symmetric(4).group;
  CHECK(commutator_subgroup(S4).order() == 12);
  auto V = subgroup(S4, {Permutation::parse(4, "(0 1)(2 3)"), Permutation::parse(4, "(0 2)(1 3)")});
  CHECK(is_normal(S4, V));
  CHECK(normalizer(S4, V).order() == 24);
  auto t = Permutation::parse(4, "(0 1)");
  std::vector<Permutation> S{t};
  CHECK(centralizer(S4, S).order() == 4);
  // Z_5 : <x> with x inverting: the Z_5 lies in the derived subgroup.
  auto D10 = catalog::dihedral(5);
  CHECK(commutator_subgroup(D10.group).contains(D10.at("a")));
}

TEST_CASE("quotients") {
  auto S4 = catalog::symmetric(4).group;
  CHECK(quotient(S4, S4).order() == 1);
  auto V = subgroup(S4, {Permutation::parse(4, "(0 1)(2 3)"), Permutation::parse(4, "(0 2)(1 3)")});
  auto Q = quotient(S4, V);
  CHECK(Q.order() * V.order() == S4.order());
  auto D = catalog::dihedral(7);
  auto R = subgroup(D.group, {D.at("a")});
  CHECK(quotient(D.group, R).order() == 2);
  auto H = subgroup(S4, {Permutation::parse(4, "(0 1)")});
  CHECK_THROWS_AS(quotient(S4, H), InvalidArgument);
  auto GL = catalog::gl2(3).group;
  CHECK(quotient(GL, center(GL)).order() == 24);
}

TEST_CASE("product constructors") {
  auto Z2 = catalog::cyclic(2).group;
  auto K = direct_product(Z2, Z2);
  CHECK(K.group.order() == 4);
  CHECK(K.group.is_abelian());

  auto D10 = catalog::dihedral(5).group;
  auto W = wreath_by_s2(D10);
  CHECK(W.group.order() == 200);

  auto Q8 = catalog::quaternion8();
  auto Z4 = catalog::cyclic(4);
  auto C = central_product(Q8.group, Z4.group, {Q8.at("-1")}, {Z4.at("a").pow(2)});
  CHECK(C.group.order() == 16);
  CHECK(C.embed_first(Q8.at("-1")) == C.embed_second(Z4.at("a").pow(2)));
  // Identifying a non-central element is rejected.
  CHECK_THROWS_AS(central_product(Q8.group, Z4.group, {Q8.at("i")}, {Z4.at("a")}), InvalidArgument);

  // Z_7 : Z_3 with a -> a^2.
  auto Z7 = catalog::cyclic(7);
  auto Z3 = catalog::cyclic(3);
  auto F = semidirect_product(Z7.group, Z3.group, {{Z7.at("a").pow(2)}});
  CHECK(F.group.order() == 21);
  CHECK_FALSE(F.group.is_abelian());
  auto a = F.embed_first(Z7.at("a"));
  auto b = F.embed_second(Z3.at("a"));
  CHECK(conjugate(a, b) == a.pow(2));
  // a -> a^3 has order 6 in Aut(Z7), so Z3 cannot act that way.
  CHECK_THROWS_AS(semidirect_product(Z7.group, Z3.group, {{Z7.at("a").pow(3)}}), InvalidArgument);
  // Not an endomorphism.
  CHECK_THROWS_AS(semidirect_product(Z7.group, Z3.group, {{Permutation::identity(7)}}),
                  InvalidArgument);
}

TEST_CASE("catalog groups have the advertised orders and relations") {
  CHECK(catalog::dihedral(1).group.order() == 2);
  CHECK(catalog::dihedral(2).group.order() == 4);
  CHECK(catalog::dihedral(6).group.order() == 12);
  auto Q = catalog::quaternion(16);
  CHECK(Q.group.order() == 16);
  const auto& u = Q.at("u");
  const auto& v = Q.at("v");
  CHECK(u.order() == 8);
  CHECK(v * v == u.pow(4));
  CHECK(conjugate(u, v) == u.inverse());
  auto Q8 = catalog::quaternion8();
  CHECK(Q8.product({"i", "j", "k"}) == Q8.at("-1"));
  CHECK(catalog::elementary_abelian(2, 3).group.order() == 8);
  CHECK(catalog::alternating(4).group.order() == 12);
  CHECK(catalog::alternating(5).group.order() == 60);
  auto M = catalog::metacyclic(9, 3, 4, 0);
  CHECK(M.group.order() == 27);
  CHECK(conjugate(M.at("a"), M.at("b")) == M.at("a").pow(4));
  CHECK_THROWS_AS(catalog::metacyclic(9, 3, 3, 0), InvalidArgument);
}

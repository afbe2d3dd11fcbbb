#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "sqfmaps/perm_group.hpp"

namespace sqf {

// A group with a table of named elements, so that formulas such as y = abst
// can be written against names rather than raw permutations.
struct NamedGroup {
  PermGroup group;
  std::map<std::string, Permutation> names;

  const Permutation& at(const std::string& name) const;
  // Left-to-right product of named elements, e.g. product({"a","b","s","t"}).
  Permutation product(std::initializer_list<std::string> word) const;
};

// Standard families. Each returns named generators; see individual comments.
namespace catalog {

// Z_n on n points; names: "a".
NamedGroup cyclic(std::size_t n);
// D_{2n} of order 2n; names: "a" (rotation, order n), "s" (reflection).
// Natural action on n points for n >= 3, regular action for n <= 2.
NamedGroup dihedral(std::size_t n);
// Z_m : Z_k = <a> : <b> with b^-1 a b = a^r and b^k = a^c, as a regular
// action on m*k points. names: "a", "b".
NamedGroup metacyclic(std::size_t m, std::size_t k, std::size_t r, std::size_t c);
// Generalized quaternion of order 2^e (e >= 3): names "u" (order 2^(e-1)),
// "v" with v^2 = u^(2^(e-2)) and u^v = u^-1.
NamedGroup quaternion(std::size_t order);
// Q8 = {+-1, +-i, +-j, +-k}; names "i", "j", "k", "-1".
NamedGroup quaternion8();
// Z_p^k as a direct product of k copies of Z_p; names "e0", "e1", ...
NamedGroup elementary_abelian(std::size_t p, std::size_t k);
// Z_m x Z_n; names "a", "b".
NamedGroup abelian2(std::size_t m, std::size_t n);
// S_n natural action; names "c" (n-cycle), "t" (transposition (0 1)).
NamedGroup symmetric(std::size_t n);
// A_n natural action (n >= 3); names "c" = (0 1 2), "d" = (0 1 ... ) generators.
NamedGroup alternating(std::size_t n);
// GL(2, p) acting on the p^2 - 1 non-zero vectors of F_p^2; names "minus1"
// (-I), "e" = [[1,1],[0,1]], "w" = [[0,1],[1,0]], "d" = diag(-1, 1).
NamedGroup gl2(std::size_t p);

// Z_{p^l} : Z_p with a^b = a^(p^(l-1)+1); names "a", "b".
NamedGroup modular(std::size_t p, std::size_t l);
// Semidihedral group of order 2^k (k >= 4): a^b = a^(2^(k-2)-1).
NamedGroup semidihedral(std::size_t order);
// D_{2n} x Z_2; names "a", "s" (dihedral factor), "c" (the Z_2).
NamedGroup dihedral_times_z2(std::size_t n);
// D_{2m} : <c>, m = 2^(l+2), with (a, s)^c = (a^(m/2+1), s); names "a", "s", "c".
NamedGroup dihedral_twisted(std::size_t l);
// Q_{2^k} o Z_4 identifying the unique involutions; names "u", "v", "b".
NamedGroup quaternion_circ_z4(std::size_t quaternion_order);

}  // namespace catalog

}  // namespace sqf

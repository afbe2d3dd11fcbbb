#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqfmaps/perm_group.hpp"

namespace sqf {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

struct SylowSubgroup {
  std::uint64_t prime = 0;
  PermGroup group;
};

// Sylow p-subgroup by greedy growth: while P is not Sylow, adjoin an element
// of N_G(P) \ P whose p-th power lies in P. Candidates are visited in an order
// shuffled by `seed`. Returns the trivial subgroup when p does not divide |G|.
SylowSubgroup sylow(const PermGroup& G, std::uint64_t p, std::uint64_t seed = kDefaultSeed);

bool is_cyclic(const PermGroup& G);
// |G| = 2n, n >= 2, with <a> of index 2 and an involution t outside it
// inverting a. The Klein group counts; Z2 does not.
bool is_dihedral(const PermGroup& G);
// |G| = 2^e >= 8 with u of order |G|/2 and v outside <u>, v^2 = u^(|u|/2),
// u^v = u^-1.
bool is_generalized_quaternion(const PermGroup& G);
bool is_abelian(const PermGroup& G);
// Every Sylow subgroup normal.
bool is_nilpotent(const PermGroup& G, std::uint64_t seed = kDefaultSeed);
// Derived series reaches the trivial group within 20 steps.
bool is_solvable(const PermGroup& G);
bool is_p_group(const PermGroup& G);

// Intersection of all Sylow p-subgroups.
PermGroup o_p(const PermGroup& G, std::uint64_t p, std::uint64_t seed = kDefaultSeed);
// Join of O_p(G) over the primes dividing |G|.
PermGroup fitting(const PermGroup& G, std::uint64_t seed = kDefaultSeed);

// One representative index per conjugacy class, ascending.
std::vector<PermGroup::Index> conjugacy_class_reps(const PermGroup& G);
// Class label for each element index (labels are the class rep indices).
std::vector<PermGroup::Index> conjugacy_classes(const PermGroup& G);

// Count of elements of each order.
std::map<std::uint64_t, std::size_t> order_histogram(const PermGroup& G);

// Images in H of a small generating set of G (returned alongside) that
// extend to an isomorphism, or nullopt.
struct Isomorphism {
  std::vector<Permutation> source_generators;
  std::vector<Permutation> images;
};
std::optional<Isomorphism> find_isomorphism(const PermGroup& G, const PermGroup& H);
bool isomorphic(const PermGroup& G, const PermGroup& H);

// A subgroup of prime index in a p-group, cyclic or dihedral.
struct IndexWitness {
  enum class Kind { Cyclic, Dihedral };
  Kind kind = Kind::Cyclic;
  PermGroup subgroup;
};
std::optional<IndexWitness> index_p_witness(const PermGroup& P, std::uint64_t p);

struct PrimeReport {
  std::uint64_t prime = 0;
  std::size_t sylow_order = 0;
  bool ok = false;
  std::string witness_tag;  // "cyclic", "dihedral" or "none"
  std::size_t witness_order = 0;
  std::vector<std::string> witness_generators;  // cycle notation
};

struct HypothesisReport {
  bool satisfied = true;
  std::vector<PrimeReport> primes;
};

// Every Sylow subgroup has a cyclic or dihedral subgroup of prime index.
HypothesisReport satisfies_hypothesis(const PermGroup& G, std::uint64_t seed = kDefaultSeed);

enum class IsoKind {
  Cyclic,                 // Z_n; a = n
  Dihedral,               // D_{2n}; a = 2n (Klein is Dihedral 4)
  GeneralizedQuaternion,  // Q_{2^k}; a = 2^k
  ElemAbelian,            // Z_p^k, k >= 3; a = p, b = k
  CyclicTimesCyclicP,     // Z_{p^l} x Z_p; a = p, b = l
  ModularP,               // Z_{p^l} : Z_p, a^b = a^(p^(l-1)+1), l >= 2 (l >= 3 for p = 2)
  Semidihedral,           // Z_{2^(k-1)} : Z_2, a^b = a^(2^(k-2)-1), k >= 4; a = 2^k
  DihedralTimesZ2,        // D_{2n} x Z_2, 2n >= 8; a = 4n
  DihedralTwisted,        // D_{2^(l+3)} : Z_2, (a,b)^c = (a^(2^(l+1)+1), b); a = order
  QuaternionCircZ4,       // Q_{2^(l+2)} o Z_4; a = order
  Trivial,
  Other,
};

struct IsoClassTag {
  IsoKind kind = IsoKind::Other;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  std::string to_string() const;
  friend bool operator==(const IsoClassTag&, const IsoClassTag&) = default;
};

IsoClassTag recognize(const PermGroup& G);

}  // namespace sqf

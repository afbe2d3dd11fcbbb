#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfmaps/perm_group.hpp"

namespace sqf {

enum class TripleKind { Regular, Reversing, RotaryPair };

std::string to_string(TripleKind kind);
// Accepts "regular", "reversing", "rotary" (and "rotary-pair").
std::optional<TripleKind> parse_triple_kind(const std::string& s);

// (x, y, z) for Regular and Reversing, (alpha, z) for RotaryPair.
struct GeneratingTriple {
  TripleKind kind = TripleKind::Regular;
  std::vector<Permutation> elements;

  // Kind tag followed by the elements in cycle notation, one per line.
  std::string serialize() const;
};

// Regular:   x, y, z involutions, x != z commuting, <x, y, z> = G.
// Reversing: x, y, z involutions, <x, y, z> = G.
// RotaryPair: z an involution, <alpha, z> = G.
// Throws InvalidArgument when an element is not in G or the arity is wrong.
bool check_triple(const PermGroup& G, const std::vector<Permutation>& elements, TripleKind kind);

struct SearchOptions {
  unsigned workers = 1;
};

struct SearchStats {
  // Product of the candidate-set sizes before any pruning: |I|^3 for the
  // involution triples, |G| * |I| for rotary pairs.
  std::uint64_t nominal = 0;
  // Candidate tuples that reached the generation test.
  std::uint64_t visited = 0;
};

// First valid tuple in lexicographic order of element indices. The first
// coordinate ranges over conjugacy class representatives only; since the set
// of valid first coordinates is closed under conjugation and representatives
// are the least index of their class, the result is still the global
// lexicographic minimum.
std::optional<GeneratingTriple> find_any(const PermGroup& G, TripleKind kind,
                                         const SearchOptions& opts = {}, SearchStats* stats = nullptr);
bool exists(const PermGroup& G, TripleKind kind, const SearchOptions& opts = {},
            SearchStats* stats = nullptr);

std::size_t count_involutions(const PermGroup& G);

struct QuotientReport {
  enum class Branch { SameKind, Dihedral, Cyclic };
  Branch branch = Branch::SameKind;
  std::size_t quotient_order = 0;
  // Projected data satisfies the same kind's conditions in G/N.
  bool same_kind = false;
  // G/N is Z2 or dihedral (Regular/Reversing) or cyclic (RotaryPair).
  bool degenerate = false;
  std::vector<Permutation> projected;

  std::string branch_name() const;
};

// Projects the data to G/N. The degenerate branch is reported when it
// applies, otherwise the same-kind branch. Throws VerificationFailure when
// neither holds, InvalidArgument when N is not normal or the data is invalid.
QuotientReport quotient_behavior(const PermGroup& G, const GeneratingTriple& data, const PermGroup& N);

}  // namespace sqf

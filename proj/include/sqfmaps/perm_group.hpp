#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqfmaps/permutation.hpp"

namespace sqf {

inline constexpr std::size_t kDefaultElementCap = 200000;

// A finitely generated permutation group with its full element list.
//
// Elements are enumerated breadth-first from the identity by right
// multiplication with the generators, so elements()[0] is always the identity
// and every other element has a parent in the resulting spanning tree. The
// tree doubles as a word for each element, which is what homomorphism
// extension and product embeddings walk.
//
// Instances are immutable and cheap to copy (shared state).
class PermGroup {
 public:
  using Index = std::uint32_t;

  // Closure of `gens` on `degree` points. An empty generator list yields the
  // trivial group. Throws CapExceeded once the closure passes `cap` elements.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> gens,
                            std::size_t cap = kDefaultElementCap);

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const std::vector<Permutation>& elements() const noexcept;
  const Permutation& element(Index i) const { return elements()[i]; }

  std::optional<Index> index_of(const Permutation& g) const;
  bool contains(const Permutation& g) const { return index_of(g).has_value(); }
  // Throws InvalidArgument when g is not a member.
  Index require_index(const Permutation& g) const;

  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const;
  std::uint64_t element_order(Index a) const;
  // Index of element(a) * generators()[j], precomputed during enumeration.
  Index times_generator(Index a, std::size_t j) const;
  // Spanning-tree parent: element(a) = element(parent) * generators()[gen].
  // Undefined for the identity (a == 0).
  std::pair<Index, std::size_t> tree_parent(Index a) const;
  // Generator indices spelling element(a) left to right.
  std::vector<std::size_t> word(Index a) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool same_elements(const PermGroup& other) const;
  bool is_abelian() const;

  std::size_t cap() const noexcept;

 private:
  struct Impl;
  explicit PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Product of generator images along the word of `element` in `src`, as a
// permutation of `degree` points.
Permutation word_image(const PermGroup& src, PermGroup::Index element,
                       std::span<const Permutation> generator_images, std::size_t degree);

// Extends generators()[i] -> images[i] to a map src -> dst (images must lie in
// dst). Returns the image index of every element of src, or nullopt when the
// assignment does not define a homomorphism.
std::optional<std::vector<PermGroup::Index>> extend_homomorphism(
    const PermGroup& src, std::span<const Permutation> images, const PermGroup& dst);

// Right coset H g of H in G.
struct Coset {
  PermGroup subgroup;
  Permutation representative;

  bool contains(const Permutation& g) const;
  friend bool operator==(const Coset& a, const Coset& b);
};

// Closure of `gens` inside G; each generator must be a member.
PermGroup subgroup(const PermGroup& G, std::vector<Permutation> gens);
PermGroup trivial_subgroup(const PermGroup& G);
// Right cosets H g, in order of first appearance in G.elements().
std::vector<Coset> cosets(const PermGroup& G, const PermGroup& H);
// Label of the right coset H g for each element index of G.
std::vector<std::uint32_t> coset_labels(const PermGroup& G, const PermGroup& H);

PermGroup center(const PermGroup& G);
PermGroup centralizer(const PermGroup& G, std::span<const Permutation> S);
PermGroup normalizer(const PermGroup& G, const PermGroup& H);
PermGroup commutator_subgroup(const PermGroup& G);
PermGroup normal_closure(const PermGroup& G, std::vector<Permutation> gens);
PermGroup intersection(const PermGroup& G, const PermGroup& A, const PermGroup& B);
PermGroup conjugate_subgroup(const PermGroup& G, const PermGroup& H, const Permutation& g);
PermGroup join(const PermGroup& G, const PermGroup& A, const PermGroup& B);
bool is_normal(const PermGroup& G, const PermGroup& H);

// G acting on the right cosets of a normal subgroup N.
class QuotientGroup {
 public:
  QuotientGroup(PermGroup parent, PermGroup normal);

  const PermGroup& parent() const noexcept { return parent_; }
  const PermGroup& normal() const noexcept { return normal_; }
  // Faithful (regular) permutation model of parent / normal.
  const PermGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_.order(); }
  // Image of a parent element in group().
  Permutation project(const Permutation& g) const;

 private:
  PermGroup parent_;
  PermGroup normal_;
  std::vector<std::uint32_t> labels_;
  std::size_t count_ = 0;
  PermGroup group_;
};

QuotientGroup quotient(const PermGroup& G, const PermGroup& N);

// Group together with embeddings of its factors.
struct ProductGroup {
  PermGroup group;
  std::function<Permutation(const Permutation&)> embed_first;
  std::function<Permutation(const Permutation&)> embed_second;
};

// A x B acting on the disjoint union of the two point sets.
ProductGroup direct_product(const PermGroup& A, const PermGroup& B);

// A : B where B.generators()[j] acts on A by sending A.generators()[i] to
// action[j][i]. The model is the faithful action on (elements of A) + (points
// of B): A by right translation, B by the supplied automorphisms together with
// its own action. Throws InvalidArgument when an entry does not extend to an
// automorphism of A or the assignment is not a homomorphism B -> Aut(A).
ProductGroup semidirect_product(const PermGroup& A, const PermGroup& B,
                                const std::vector<std::vector<Permutation>>& action);

// (A x B) / {(c, phi(c)) : c in C1} where C1 = <c1_gens> <= Z(A) and
// phi(c1_gens[i]) = c2_images[i] generates C2 <= Z(B). Throws InvalidArgument
// unless phi is an isomorphism between central subgroups.
ProductGroup central_product(const PermGroup& A, const PermGroup& B,
                             const std::vector<Permutation>& c1_gens,
                             const std::vector<Permutation>& c2_images);

// A wr S2 on two copies of A's points. embed_first is the first-coordinate
// copy of A; embed_second maps any permutation of degree 2 onto the top group
// (only (0 1) and the identity are meaningful).
ProductGroup wreath_by_s2(const PermGroup& A);

// Right-regular permutation model of a group given by an abstract
// multiplication on {0, ..., order-1} with identity 0. The generated group is
// checked to have exactly `order` elements.
PermGroup from_multiplication(std::size_t order,
                              const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                              const std::vector<std::size_t>& generator_elements);

}  // namespace sqf

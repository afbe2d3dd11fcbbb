#include "sqfmaps/perm_group.hpp"

#include <algorithm>
#include <unordered_map>

#include "sqfmaps/errors.hpp"

namespace sqf {

using Index = PermGroup::Index;

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::size_t cap = kDefaultElementCap;
  std::vector<Permutation> gens;
  std::vector<Permutation> elems;
  std::unordered_map<Permutation, Index, PermutationHash> index;
  std::vector<Index> parent;
  std::vector<std::uint32_t> parent_gen;
  std::vector<Index> gen_mult;  // elems.size() * gens.size()
  std::vector<Index> inv;
  std::vector<std::uint64_t> orders;
};

PermGroup PermGroup::generate(std::size_t degree, std::vector<Permutation> gens,
                              std::size_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                            " does not match group degree " + std::to_string(degree));
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->cap = cap;
  impl->gens = std::move(gens);
  const std::size_t k = impl->gens.size();

  impl->elems.push_back(Permutation::identity(degree));
  impl->index.emplace(impl->elems.back(), 0);
  impl->parent.push_back(0);
  impl->parent_gen.push_back(0);
  for (std::size_t head = 0; head < impl->elems.size(); ++head) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation h = impl->elems[head] * impl->gens[j];
      auto [it, inserted] = impl->index.try_emplace(std::move(h), static_cast<Index>(impl->elems.size()));
      if (inserted) {
        if (impl->elems.size() >= cap)
          throw CapExceeded("group too large for desk-scale enumeration (cap " +
                            std::to_string(cap) + " elements)");
        impl->elems.push_back(it->first);
        impl->parent.push_back(static_cast<Index>(head));
        impl->parent_gen.push_back(static_cast<std::uint32_t>(j));
      }
      impl->gen_mult.push_back(it->second);
    }
  }

  const std::size_t n = impl->elems.size();
  impl->inv.resize(n);
  impl->orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    impl->inv[i] = impl->index.at(impl->elems[i].inverse());
    impl->orders[i] = impl->elems[i].order();
  }
  return PermGroup(std::move(impl));
}

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
std::size_t PermGroup::order() const noexcept { return impl_->elems.size(); }
std::size_t PermGroup::cap() const noexcept { return impl_->cap; }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return impl_->gens; }
const std::vector<Permutation>& PermGroup::elements() const noexcept { return impl_->elems; }

std::optional<Index> PermGroup::index_of(const Permutation& g) const {
  if (g.degree() != impl_->degree) return std::nullopt;
  auto it = impl_->index.find(g);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Index PermGroup::require_index(const Permutation& g) const {
  auto i = index_of(g);
  if (!i) throw InvalidArgument("element " + g.to_string() + " is not a member of the group");
  return *i;
}

Index PermGroup::multiply(Index a, Index b) const {
  return impl_->index.at(impl_->elems[a] * impl_->elems[b]);
}

Index PermGroup::inverse(Index a) const { return impl_->inv[a]; }
std::uint64_t PermGroup::element_order(Index a) const { return impl_->orders[a]; }

Index PermGroup::times_generator(Index a, std::size_t j) const {
  return impl_->gen_mult[static_cast<std::size_t>(a) * impl_->gens.size() + j];
}

std::pair<Index, std::size_t> PermGroup::tree_parent(Index a) const {
  return {impl_->parent[a], impl_->parent_gen[a]};
}

std::vector<std::size_t> PermGroup::word(Index a) const {
  std::vector<std::size_t> w;
  while (a != 0) {
    w.push_back(impl_->parent_gen[a]);
    a = impl_->parent[a];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree() || other.order() % order() != 0) return false;
  return std::all_of(impl_->gens.begin(), impl_->gens.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::same_elements(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

bool PermGroup::is_abelian() const {
  const auto& g = impl_->gens;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] * g[j] != g[j] * g[i]) return false;
  return true;
}

Permutation word_image(const PermGroup& src, Index element,
                       std::span<const Permutation> generator_images, std::size_t degree) {
  Permutation acc = Permutation::identity(degree);
  for (std::size_t j : src.word(element)) acc = acc * generator_images[j];
  return acc;
}

std::optional<std::vector<Index>> extend_homomorphism(const PermGroup& src,
                                                      std::span<const Permutation> images,
                                                      const PermGroup& dst) {
  const std::size_t k = src.generators().size();
  if (images.size() != k) throw InvalidArgument("image count does not match generator count");
  std::vector<Index> gen_img(k);
  for (std::size_t j = 0; j < k; ++j) {
    auto idx = dst.index_of(images[j]);
    if (!idx) return std::nullopt;
    gen_img[j] = *idx;
  }
  std::vector<Index> img(src.order());
  img[0] = 0;
  for (Index i = 1; i < src.order(); ++i) {
    auto [p, j] = src.tree_parent(i);
    img[i] = dst.multiply(img[p], gen_img[j]);
  }
  for (Index i = 0; i < src.order(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (img[src.times_generator(i, j)] != dst.multiply(img[i], gen_img[j])) return std::nullopt;
  return img;
}

bool Coset::contains(const Permutation& g) const {
  return subgroup.contains(g * representative.inverse());
}

bool operator==(const Coset& a, const Coset& b) {
  return a.subgroup.same_elements(b.subgroup) &&
         a.subgroup.contains(a.representative * b.representative.inverse());
}

PermGroup subgroup(const PermGroup& G, std::vector<Permutation> gens) {
  for (const auto& g : gens) G.require_index(g);
  return PermGroup::generate(G.degree(), std::move(gens), G.cap());
}

PermGroup trivial_subgroup(const PermGroup& G) {
  return PermGroup::generate(G.degree(), {}, G.cap());
}

std::vector<std::uint32_t> coset_labels(const PermGroup& G, const PermGroup& H) {
  if (!H.is_subgroup_of(G)) throw InvalidArgument("H is not a subgroup of G");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(G.order(), kUnset);
  std::uint32_t next = 0;
  for (Index g = 0; g < G.order(); ++g) {
    if (label[g] != kUnset) continue;
    for (const auto& h : H.elements()) label[G.require_index(h * G.element(g))] = next;
    ++next;
  }
  return label;
}

std::vector<Coset> cosets(const PermGroup& G, const PermGroup& H) {
  auto label = coset_labels(G, H);
  std::vector<Coset> out;
  for (Index g = 0; g < G.order(); ++g)
    if (label[g] == out.size()) out.push_back(Coset{H, G.element(g)});
  return out;
}

namespace {

bool commutes_with_all(const Permutation& g, std::span<const Permutation> S) {
  return std::all_of(S.begin(), S.end(), [&](const Permutation& s) { return g * s == s * g; });
}

// Builds a subgroup of G from a known-closed member set, choosing generators
// greedily so the generator list stays short.
PermGroup subgroup_from_members(const PermGroup& G, const std::vector<Index>& members) {
  std::vector<char> in_closure(G.order(), 0);
  in_closure[0] = 1;
  std::vector<Index> closure{0};
  std::vector<Index> gen_idx;
  for (Index m : members) {
    if (in_closure[m]) continue;
    gen_idx.push_back(m);
    for (std::size_t head = 0; head < closure.size(); ++head) {
      for (Index g : gen_idx) {
        Index h = G.multiply(closure[head], g);
        if (!in_closure[h]) {
          in_closure[h] = 1;
          closure.push_back(h);
        }
      }
    }
  }
  std::vector<Permutation> gens;
  for (Index g : gen_idx) gens.push_back(G.element(g));
  return PermGroup::generate(G.degree(), std::move(gens), G.cap());
}

}  // namespace

PermGroup center(const PermGroup& G) {
  std::vector<Index> members;
  for (Index g = 0; g < G.order(); ++g)
    if (commutes_with_all(G.element(g), G.generators())) members.push_back(g);
  return subgroup_from_members(G, members);
}

PermGroup centralizer(const PermGroup& G, std::span<const Permutation> S) {
  for (const auto& s : S) G.require_index(s);
  std::vector<Index> members;
  for (Index g = 0; g < G.order(); ++g)
    if (commutes_with_all(G.element(g), S)) members.push_back(g);
  return subgroup_from_members(G, members);
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
  if (!H.is_subgroup_of(G)) throw InvalidArgument("H is not a subgroup of G");
  std::vector<Index> members;
  for (Index g = 0; g < G.order(); ++g) {
    const auto& x = G.element(g);
    bool ok = std::all_of(H.generators().begin(), H.generators().end(),
                          [&](const Permutation& h) { return H.contains(conjugate(h, x)); });
    if (ok) members.push_back(g);
  }
  return subgroup_from_members(G, members);
}

PermGroup normal_closure(const PermGroup& G, std::vector<Permutation> gens) {
  PermGroup N = subgroup(G, gens);
  for (;;) {
    bool grown = false;
    for (const auto& n : std::vector<Permutation>(N.generators())) {
      for (const auto& g : G.generators()) {
        Permutation c = conjugate(n, g);
        if (!N.contains(c)) {
          gens.push_back(std::move(c));
          grown = true;
        }
      }
      if (grown) break;
    }
    if (!grown) return N;
    N = PermGroup::generate(G.degree(), gens, G.cap());
  }
}

PermGroup commutator_subgroup(const PermGroup& G) {
  std::vector<Permutation> comms;
  const auto& g = G.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Permutation c = commutator(g[i], g[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(G, std::move(comms));
}

PermGroup intersection(const PermGroup& G, const PermGroup& A, const PermGroup& B) {
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& big = A.order() <= B.order() ? B : A;
  std::vector<Index> members;
  for (const auto& x : small.elements())
    if (big.contains(x)) members.push_back(G.require_index(x));
  return subgroup_from_members(G, members);
}

PermGroup conjugate_subgroup(const PermGroup& G, const PermGroup& H, const Permutation& g) {
  std::vector<Permutation> gens;
  for (const auto& h : H.generators()) gens.push_back(conjugate(h, g));
  return subgroup(G, std::move(gens));
}

PermGroup join(const PermGroup& G, const PermGroup& A, const PermGroup& B) {
  std::vector<Permutation> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return subgroup(G, std::move(gens));
}

bool is_normal(const PermGroup& G, const PermGroup& H) {
  if (!H.is_subgroup_of(G)) return false;
  for (const auto& h : H.generators())
    for (const auto& g : G.generators())
      if (!H.contains(conjugate(h, g))) return false;
  return true;
}

QuotientGroup::QuotientGroup(PermGroup parent, PermGroup normal)
    : parent_(std::move(parent)), normal_(std::move(normal)), group_(PermGroup::generate(1, {})) {
  if (!is_normal(parent_, normal_)) throw InvalidArgument("subgroup is not normal");
  labels_ = coset_labels(parent_, normal_);
  count_ = parent_.order() / normal_.order();
  std::vector<Permutation> gens;
  for (const auto& g : parent_.generators()) gens.push_back(project(g));
  group_ = PermGroup::generate(count_, std::move(gens), parent_.cap());
}

Permutation QuotientGroup::project(const Permutation& g) const {
  Index gi = parent_.require_index(g);
  std::vector<Point> im(count_);
  std::vector<char> done(count_, 0);
  // Coset N x maps to N x g; any representative works because N is normal.
  for (Index x = 0; x < parent_.order(); ++x) {
    auto lx = labels_[x];
    if (done[lx]) continue;
    done[lx] = 1;
    im[lx] = labels_[parent_.multiply(x, gi)];
  }
  return Permutation::from_images_unchecked(std::move(im));
}

QuotientGroup quotient(const PermGroup& G, const PermGroup& N) { return QuotientGroup(G, N); }

ProductGroup direct_product(const PermGroup& A, const PermGroup& B) {
  const std::size_t da = A.degree(), deg = A.degree() + B.degree();
  std::vector<Permutation> gens;
  for (const auto& a : A.generators()) gens.push_back(shift(a, 0, deg));
  for (const auto& b : B.generators()) gens.push_back(shift(b, da, deg));
  auto G = PermGroup::generate(deg, std::move(gens), std::max(A.cap(), B.cap()));
  if (G.order() != A.order() * B.order())
    throw VerificationFailure("direct product order mismatch");
  return ProductGroup{
      G, [deg](const Permutation& a) { return shift(a, 0, deg); },
      [da, deg](const Permutation& b) { return shift(b, da, deg); }};
}

ProductGroup semidirect_product(const PermGroup& A, const PermGroup& B,
                                const std::vector<std::vector<Permutation>>& action) {
  const std::size_t na = A.order();
  const std::size_t deg = na + B.degree();
  if (action.size() != B.generators().size())
    throw InvalidArgument("semidirect action needs one row per generator of B");

  std::vector<Permutation> a_gens, b_gens;
  for (std::size_t i = 0; i < A.generators().size(); ++i) {
    std::vector<Point> im(deg);
    for (Index c = 0; c < na; ++c) im[c] = A.times_generator(c, i);
    for (std::size_t p = na; p < deg; ++p) im[p] = static_cast<Point>(p);
    a_gens.push_back(Permutation::from_images_unchecked(std::move(im)));
  }
  for (std::size_t j = 0; j < action.size(); ++j) {
    auto hom = extend_homomorphism(A, action[j], A);
    if (!hom) throw InvalidArgument("action of generator " + std::to_string(j) +
                                    " is not an endomorphism of A");
    std::vector<char> hit(na, 0);
    for (Index v : *hom) hit[v] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      throw InvalidArgument("action of generator " + std::to_string(j) + " is not bijective");
    std::vector<Point> im(deg);
    for (Index c = 0; c < na; ++c) im[c] = (*hom)[c];
    const auto& b = B.generators()[j];
    for (std::size_t p = 0; p < B.degree(); ++p) im[na + p] = static_cast<Point>(na + b(static_cast<Point>(p)));
    b_gens.push_back(Permutation::from_images_unchecked(std::move(im)));
  }
  std::vector<Permutation> gens = a_gens;
  gens.insert(gens.end(), b_gens.begin(), b_gens.end());
  auto G = PermGroup::generate(deg, std::move(gens), std::max(A.cap(), B.cap()));
  if (G.order() != A.order() * B.order())
    throw InvalidArgument("action is not a homomorphism from B into Aut(A)");
  return ProductGroup{
      G,
      [A, a_gens, deg](const Permutation& a) {
        return word_image(A, A.require_index(a), a_gens, deg);
      },
      [B, b_gens, deg](const Permutation& b) {
        return word_image(B, B.require_index(b), b_gens, deg);
      }};
}

ProductGroup central_product(const PermGroup& A, const PermGroup& B,
                             const std::vector<Permutation>& c1_gens,
                             const std::vector<Permutation>& c2_images) {
  if (c1_gens.size() != c2_images.size())
    throw InvalidArgument("central product needs one image per central generator");
  for (const auto& c : c1_gens)
    if (!A.contains(c) || !commutes_with_all(c, A.generators()))
      throw InvalidArgument("identified subgroup is not central in the first factor");
  for (const auto& c : c2_images)
    if (!B.contains(c) || !commutes_with_all(c, B.generators()))
      throw InvalidArgument("identified subgroup is not central in the second factor");
  auto C1 = subgroup(A, c1_gens);
  auto C2 = subgroup(B, c2_images);
  auto phi = extend_homomorphism(C1, c2_images, C2);
  if (!phi || C1.order() != C2.order())
    throw InvalidArgument("identification is not an isomorphism of central subgroups");
  {
    std::vector<char> hit(C2.order(), 0);
    for (Index v : *phi) hit[v] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      throw InvalidArgument("identification is not an isomorphism of central subgroups");
  }
  auto D = direct_product(A, B);
  std::vector<Permutation> n_gens;
  for (std::size_t i = 0; i < c1_gens.size(); ++i)
    n_gens.push_back(D.embed_first(c1_gens[i]) * D.embed_second(c2_images[i]));
  auto N = subgroup(D.group, std::move(n_gens));
  auto q = std::make_shared<QuotientGroup>(D.group, N);
  if (q->order() * C1.order() != A.order() * B.order())
    throw VerificationFailure("central product order mismatch");
  return ProductGroup{q->group(),
                      [q, D](const Permutation& a) { return q->project(D.embed_first(a)); },
                      [q, D](const Permutation& b) { return q->project(D.embed_second(b)); }};
}

ProductGroup wreath_by_s2(const PermGroup& A) {
  const std::size_t d = A.degree(), deg = 2 * d;
  std::vector<Permutation> gens;
  for (const auto& a : A.generators()) gens.push_back(shift(a, 0, deg));
  std::vector<Point> sw(deg);
  for (std::size_t i = 0; i < d; ++i) {
    sw[i] = static_cast<Point>(d + i);
    sw[d + i] = static_cast<Point>(i);
  }
  Permutation swap = Permutation::from_images_unchecked(std::move(sw));
  gens.push_back(swap);
  auto G = PermGroup::generate(deg, std::move(gens), A.cap());
  if (G.order() != 2 * A.order() * A.order())
    throw VerificationFailure("wreath product order mismatch");
  return ProductGroup{G, [deg](const Permutation& a) { return shift(a, 0, deg); },
                      [swap, deg](const Permutation& p) {
                        return p.is_identity() ? Permutation::identity(deg) : swap;
                      }};
}

PermGroup from_multiplication(std::size_t order,
                              const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                              const std::vector<std::size_t>& generator_elements) {
  std::vector<Permutation> gens;
  for (std::size_t g : generator_elements) {
    std::vector<Point> im(order);
    for (std::size_t x = 0; x < order; ++x) im[x] = static_cast<Point>(mul(x, g));
    gens.emplace_back(std::move(im));  // checked: rows must be bijections
  }
  auto G = PermGroup::generate(order, std::move(gens));
  if (G.order() != order)
    throw InvalidArgument("multiplication does not define a group of order " +
                          std::to_string(order));
  return G;
}

}  // namespace sqf

#include "sqfmaps/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "sqfmaps/catalog.hpp"
#include "sqfmaps/errors.hpp"
#include "sqfmaps/factor.hpp"

namespace sqf {

using Index = PermGroup::Index;

namespace {

std::vector<char> cyclic_members(const PermGroup& G, Index a) {
  std::vector<char> in(G.order(), 0);
  Index x = 0;
  do {
    in[x] = 1;
    x = G.multiply(x, a);
  } while (x != 0);
  return in;
}

std::vector<Index> involutions(const PermGroup& G) {
  std::vector<Index> out;
  for (Index i = 0; i < G.order(); ++i)
    if (G.element_order(i) == 2) out.push_back(i);
  return out;
}

// Dihedral subgroup <a, t> of order 2m inside G, m >= 2.
std::optional<PermGroup> find_dihedral(const PermGroup& G, std::uint64_t m) {
  auto invs = involutions(G);
  for (Index a = 0; a < G.order(); ++a) {
    if (G.element_order(a) != m) continue;
    auto in = cyclic_members(G, a);
    const Permutation& pa = G.element(a);
    Permutation ainv = pa.inverse();
    for (Index t : invs) {
      if (in[t]) continue;
      if (conjugate(pa, G.element(t)) == ainv) return subgroup(G, {pa, G.element(t)});
    }
  }
  return std::nullopt;
}

std::uint64_t log_p(std::uint64_t n, std::uint64_t p) {
  std::uint64_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

struct Fingerprint {
  std::map<std::uint64_t, std::size_t> histogram;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PermGroup& G) {
  return Fingerprint{order_histogram(G), center(G).order(), commutator_subgroup(G).order()};
}

// Greedy generating set, preferring elements of large order.
std::vector<Index> small_generating_set(const PermGroup& G) {
  std::vector<Index> by_order(G.order());
  std::iota(by_order.begin(), by_order.end(), Index{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Index x, Index y) {
    return G.element_order(x) > G.element_order(y);
  });
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::vector<Index> closure{0};
  std::vector<Index> gens;
  for (Index c : by_order) {
    if (closure.size() == G.order()) break;
    if (in[c]) continue;
    gens.push_back(c);
    // Re-close from scratch over the enlarged generator list.
    for (std::size_t head = 0; head < closure.size(); ++head)
      for (Index g : gens) {
        Index h = G.multiply(closure[head], g);
        if (!in[h]) {
          in[h] = 1;
          closure.push_back(h);
        }
      }
  }
  return gens;
}

}  // namespace

SylowSubgroup sylow(const PermGroup& G, std::uint64_t p, std::uint64_t seed) {
  const std::uint64_t target = p_part(G.order(), p);
  PermGroup P = trivial_subgroup(G);
  std::mt19937_64 rng(seed ^ (p * 0x9e3779b97f4a7c15ULL));
  while (P.order() < target) {
    PermGroup N = normalizer(G, P);
    std::vector<Index> cand(N.order());
    std::iota(cand.begin(), cand.end(), Index{0});
    std::shuffle(cand.begin(), cand.end(), rng);
    bool grown = false;
    for (Index c : cand) {
      const Permutation& g = N.element(c);
      if (P.contains(g) || !P.contains(g.pow(static_cast<long long>(p)))) continue;
      auto gens = P.generators();
      gens.push_back(g);
      P = subgroup(G, std::move(gens));
      grown = true;
      break;
    }
    if (!grown) throw VerificationFailure("Sylow search stalled below the p-part");
  }
  return SylowSubgroup{p, P};
}

bool is_cyclic(const PermGroup& G) {
  for (Index i = 0; i < G.order(); ++i)
    if (G.element_order(i) == G.order()) return true;
  return false;
}

bool is_dihedral(const PermGroup& G) {
  if (G.order() < 4 || G.order() % 2) return false;
  return find_dihedral(G, G.order() / 2).has_value();
}

bool is_generalized_quaternion(const PermGroup& G) {
  const std::size_t n = G.order();
  if (n < 8 || (n & (n - 1)) != 0) return false;
  for (Index u = 0; u < n; ++u) {
    if (G.element_order(u) != n / 2) continue;
    auto in = cyclic_members(G, u);
    const Permutation& pu = G.element(u);
    Permutation half = pu.pow(static_cast<long long>(n / 4));
    Permutation uinv = pu.inverse();
    for (Index v = 0; v < n; ++v) {
      if (in[v]) continue;
      const Permutation& pv = G.element(v);
      if (pv * pv == half && conjugate(pu, pv) == uinv) return true;
    }
  }
  return false;
}

bool is_abelian(const PermGroup& G) { return G.is_abelian(); }

bool is_p_group(const PermGroup& G) { return prime_factors(G.order()).size() <= 1; }

bool is_nilpotent(const PermGroup& G, std::uint64_t seed) {
  for (const auto& [p, e] : prime_factors(G.order()))
    if (!is_normal(G, sylow(G, p, seed).group)) return false;
  return true;
}

bool is_solvable(const PermGroup& G) {
  PermGroup D = G;
  for (int step = 0; step < 20; ++step) {
    if (D.order() == 1) return true;
    PermGroup next = commutator_subgroup(D);
    if (next.order() == D.order()) return false;
    D = next;
  }
  return D.order() == 1;
}

PermGroup o_p(const PermGroup& G, std::uint64_t p, std::uint64_t seed) {
  PermGroup P = sylow(G, p, seed).group;
  PermGroup N = normalizer(G, P);
  PermGroup core = P;
  for (const auto& c : cosets(G, N)) {
    if (core.order() == 1) break;
    core = intersection(G, core, conjugate_subgroup(G, P, c.representative));
  }
  return core;
}

PermGroup fitting(const PermGroup& G, std::uint64_t seed) {
  PermGroup F = trivial_subgroup(G);
  for (const auto& [p, e] : prime_factors(G.order())) F = join(G, F, o_p(G, p, seed));
  return F;
}

std::vector<Index> conjugacy_classes(const PermGroup& G) {
  constexpr Index kUnset = ~Index{0};
  std::vector<Index> label(G.order(), kUnset);
  for (Index g = 0; g < G.order(); ++g) {
    if (label[g] != kUnset) continue;
    label[g] = g;
    std::vector<Index> orbit{g};
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& s : G.generators()) {
        Index h = G.require_index(conjugate(G.element(orbit[head]), s));
        if (label[h] == kUnset) {
          label[h] = g;
          orbit.push_back(h);
        }
      }
  }
  return label;
}

std::vector<Index> conjugacy_class_reps(const PermGroup& G) {
  auto label = conjugacy_classes(G);
  std::vector<Index> reps;
  for (Index g = 0; g < G.order(); ++g)
    if (label[g] == g) reps.push_back(g);
  return reps;
}

std::map<std::uint64_t, std::size_t> order_histogram(const PermGroup& G) {
  std::map<std::uint64_t, std::size_t> h;
  for (Index i = 0; i < G.order(); ++i) ++h[G.element_order(i)];
  return h;
}

std::optional<Isomorphism> find_isomorphism(const PermGroup& G, const PermGroup& H) {
  if (G.order() != H.order()) return std::nullopt;
  if (order_histogram(G) != order_histogram(H)) return std::nullopt;
  if (G.order() > 2 && !(fingerprint(G) == fingerprint(H))) return std::nullopt;

  auto gen_idx = small_generating_set(G);
  std::vector<Permutation> src;
  for (Index g : gen_idx) src.push_back(G.element(g));
  PermGroup Gs = PermGroup::generate(G.degree(), src, G.cap());
  const std::size_t r = src.size();
  if (r == 0) return Isomorphism{{}, {}};

  std::vector<std::vector<Index>> cand(r);
  auto reps = conjugacy_class_reps(H);
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t want = G.element_order(gen_idx[i]);
    if (i == 0) {
      for (Index h : reps)
        if (H.element_order(h) == want) cand[i].push_back(h);
    } else {
      for (Index h = 0; h < H.order(); ++h)
        if (H.element_order(h) == want) cand[i].push_back(h);
    }
  }
  // Pairwise invariants used for pruning.
  std::vector<std::vector<std::uint64_t>> prod_order(r, std::vector<std::uint64_t>(r));
  std::vector<std::vector<std::uint64_t>> comm_order(r, std::vector<std::uint64_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      prod_order[i][j] = (src[j] * src[i]).order();
      comm_order[i][j] = commutator(src[j], src[i]).order();
    }

  std::vector<Permutation> img(r);
  std::optional<Isomorphism> found;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == r) {
      auto hom = extend_homomorphism(Gs, img, H);
      if (!hom) return false;
      std::vector<char> hit(H.order(), 0);
      for (Index v : *hom) {
        if (hit[v]) return false;
        hit[v] = 1;
      }
      found = Isomorphism{src, img};
      return true;
    }
    for (Index c : cand[i]) {
      const Permutation& h = H.element(c);
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = (img[j] * h).order() == prod_order[i][j] &&
             commutator(img[j], h).order() == comm_order[i][j];
      if (!ok) continue;
      img[i] = h;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  rec(0);
  return found;
}

bool isomorphic(const PermGroup& G, const PermGroup& H) {
  return find_isomorphism(G, H).has_value();
}

std::optional<IndexWitness> index_p_witness(const PermGroup& P, std::uint64_t p) {
  const std::uint64_t k = log_p(P.order(), p);
  if (k == 0) return std::nullopt;
  if (k == 1) return IndexWitness{IndexWitness::Kind::Cyclic, trivial_subgroup(P)};
  const std::uint64_t target = ipow(p, k - 1);
  for (Index g = 0; g < P.order(); ++g)
    if (P.element_order(g) == target)
      return IndexWitness{IndexWitness::Kind::Cyclic, subgroup(P, {P.element(g)})};
  if (p == 2 && k >= 3)
    if (auto D = find_dihedral(P, target / 2)) return IndexWitness{IndexWitness::Kind::Dihedral, *D};
  return std::nullopt;
}

HypothesisReport satisfies_hypothesis(const PermGroup& G, std::uint64_t seed) {
  HypothesisReport rep;
  for (const auto& [p, e] : prime_factors(G.order())) {
    PrimeReport pr;
    pr.prime = p;
    PermGroup P = sylow(G, p, seed).group;
    pr.sylow_order = P.order();
    if (auto w = index_p_witness(P, p)) {
      pr.ok = true;
      pr.witness_tag = w->kind == IndexWitness::Kind::Cyclic ? "cyclic" : "dihedral";
      pr.witness_order = w->subgroup.order();
      for (const auto& g : w->subgroup.generators()) pr.witness_generators.push_back(g.to_string());
    } else {
      pr.ok = false;
      pr.witness_tag = "none";
      rep.satisfied = false;
    }
    rep.primes.push_back(std::move(pr));
  }
  return rep;
}

std::string IsoClassTag::to_string() const {
  auto n = [](std::uint64_t v) { return std::to_string(v); };
  switch (kind) {
    case IsoKind::Trivial: return "1";
    case IsoKind::Cyclic: return "Z" + n(a);
    case IsoKind::Dihedral: return "D" + n(a);
    case IsoKind::GeneralizedQuaternion: return "Q" + n(a);
    case IsoKind::ElemAbelian: return "Z" + n(a) + "^" + n(b);
    case IsoKind::CyclicTimesCyclicP: return "Z" + n(ipow(a, b)) + "xZ" + n(a);
    case IsoKind::ModularP: return "Z" + n(ipow(a, b)) + ":Z" + n(a);
    case IsoKind::Semidihedral: return "SD" + n(a);
    case IsoKind::DihedralTimesZ2: return "D" + n(a / 2) + "xZ2";
    case IsoKind::DihedralTwisted: return "D" + n(a / 2) + ":Z2";
    case IsoKind::QuaternionCircZ4: return "Q" + n(a / 2) + "oZ4";
    case IsoKind::Other: return "other";
  }
  return "other";
}

IsoClassTag recognize(const PermGroup& G) {
  const std::uint64_t n = G.order();
  if (n == 1) return {IsoKind::Trivial, 1, 0};
  if (is_cyclic(G)) return {IsoKind::Cyclic, n, 0};
  if (is_dihedral(G)) return {IsoKind::Dihedral, n, 0};
  if (is_generalized_quaternion(G)) return {IsoKind::GeneralizedQuaternion, n, 0};
  auto pf = prime_factors(n);
  if (pf.size() != 1) return {IsoKind::Other, 0, 0};
  const std::uint64_t p = pf[0].first, k = pf[0].second;
  std::uint64_t exponent = 1;
  for (Index i = 0; i < n; ++i) exponent = std::max<std::uint64_t>(exponent, G.element_order(i));
  const std::uint64_t e = log_p(exponent, p);

  if (G.is_abelian()) {
    if (e == 1 && k >= 3) return {IsoKind::ElemAbelian, p, k};
    if (k == e + 1) return {IsoKind::CyclicTimesCyclicP, p, e};
    return {IsoKind::Other, 0, 0};
  }
  std::vector<std::pair<IsoClassTag, std::function<NamedGroup()>>> models;
  if (e == k - 1) {
    if (k >= 3 && (p != 2 || k >= 4))
      models.push_back({{IsoKind::ModularP, p, k - 1}, [=] { return catalog::modular(p, k - 1); }});
    if (p == 2 && k >= 4)
      models.push_back({{IsoKind::Semidihedral, n, 0}, [=] { return catalog::semidihedral(n); }});
  }
  if (p == 2 && k >= 4) {
    models.push_back(
        {{IsoKind::DihedralTimesZ2, n, 0}, [=] { return catalog::dihedral_times_z2(n / 4); }});
    models.push_back(
        {{IsoKind::QuaternionCircZ4, n, 0}, [=] { return catalog::quaternion_circ_z4(n / 2); }});
  }
  if (p == 2 && k >= 5)
    models.push_back({{IsoKind::DihedralTwisted, n, 0}, [=] { return catalog::dihedral_twisted(k - 4); }});
  for (auto& [tag, build] : models)
    if (isomorphic(G, build().group)) return tag;
  return {IsoKind::Other, 0, 0};
}

}  // namespace sqf

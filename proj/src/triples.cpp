#include "sqfmaps/triples.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "sqfmaps/errors.hpp"
#include "sqfmaps/structure.hpp"

namespace sqf {

using Index = PermGroup::Index;

std::string to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::Regular: return "regular";
    case TripleKind::Reversing: return "reversing";
    case TripleKind::RotaryPair: return "rotary";
  }
  return "?";
}

std::optional<TripleKind> parse_triple_kind(const std::string& s) {
  if (s == "regular") return TripleKind::Regular;
  if (s == "reversing") return TripleKind::Reversing;
  if (s == "rotary" || s == "rotary-pair") return TripleKind::RotaryPair;
  return std::nullopt;
}

std::string GeneratingTriple::serialize() const {
  std::string out = to_string(kind) + "\n";
  for (const auto& e : elements) out += e.to_string() + "\n";
  return out;
}

namespace {

std::size_t arity(TripleKind kind) { return kind == TripleKind::RotaryPair ? 2 : 3; }

// Right-multiplication columns: col[g][h] = index of element(h) * element(g).
class Columns {
 public:
  explicit Columns(const PermGroup& G) : G_(G), cols_(G.order()) {}

  void prepare(Index g) {
    auto& c = cols_[g];
    if (!c.empty()) return;
    c.resize(G_.order());
    const auto& eg = G_.element(g);
    for (Index h = 0; h < G_.order(); ++h) c[h] = G_.require_index(G_.element(h) * eg);
  }
  const std::vector<Index>& operator[](Index g) const { return cols_[g]; }

 private:
  const PermGroup& G_;
  std::vector<std::vector<Index>> cols_;
};

// Closure test with early exit once the closure exceeds half the group.
class Closure {
 public:
  explicit Closure(std::size_t n) : n_(n), mark_(n, 0) { buf_.reserve(n); }

  bool generates(const Columns& cols, std::initializer_list<Index> gens) {
    buf_.clear();
    buf_.push_back(0);
    mark_[0] = 1;
    bool full = 2 * buf_.size() > n_;
    for (std::size_t head = 0; head < buf_.size() && !full; ++head) {
      Index h = buf_[head];
      for (Index g : gens) {
        Index k = cols[g][h];
        if (!mark_[k]) {
          mark_[k] = 1;
          buf_.push_back(k);
          if (2 * buf_.size() > n_) {
            full = true;
            break;
          }
        }
      }
    }
    for (Index k : buf_) mark_[k] = 0;
    return full;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> mark_;
  std::vector<Index> buf_;
};

std::vector<Index> involution_indices(const PermGroup& G) {
  std::vector<Index> out;
  for (Index i = 0; i < G.order(); ++i)
    if (G.element_order(i) == 2) out.push_back(i);
  return out;
}

struct Search {
  const PermGroup& G;
  TripleKind kind;
  Columns cols;
  std::vector<Index> invols;
  std::vector<Index> firsts;  // class reps eligible as first coordinate
  std::atomic<std::uint64_t> visited{0};

  Search(const PermGroup& g, TripleKind k) : G(g), kind(k), cols(g), invols(involution_indices(g)) {
    std::vector<std::uint8_t> is_inv(G.order(), 0);
    for (Index i : invols) is_inv[i] = 1;
    for (Index r : conjugacy_class_reps(G))
      if (kind == TripleKind::RotaryPair || is_inv[r]) firsts.push_back(r);
    for (Index i : invols) cols.prepare(i);
    for (Index r : firsts) cols.prepare(r);
  }

  // Lexicographically first hit with the given first coordinate.
  std::optional<std::vector<Index>> scan(Index x) {
    Closure cl(G.order());
    std::uint64_t local = 0;
    std::optional<std::vector<Index>> hit;
    if (kind == TripleKind::RotaryPair) {
      for (Index z : invols) {
        ++local;
        if (cl.generates(cols, {x, z})) {
          hit = std::vector<Index>{x, z};
          break;
        }
      }
    } else if (kind == TripleKind::Reversing) {
      for (Index y : invols) {
        for (Index z : invols) {
          ++local;
          if (cl.generates(cols, {x, y, z})) {
            hit = std::vector<Index>{x, y, z};
            break;
          }
        }
        if (hit) break;
      }
    } else {
      std::vector<Index> commuting;
      for (Index z : invols)
        if (z != x && cols[z][x] == cols[x][z]) commuting.push_back(z);
      if (!commuting.empty())
        for (Index y : invols) {
          for (Index z : commuting) {
            ++local;
            if (cl.generates(cols, {x, y, z})) {
              hit = std::vector<Index>{x, y, z};
              break;
            }
          }
          if (hit) break;
        }
    }
    visited += local;
    return hit;
  }

  std::optional<std::vector<Index>> run(unsigned workers) {
    if (G.order() == 1) return std::nullopt;
    const std::size_t m = firsts.size();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{m};
    std::vector<std::optional<std::vector<Index>>> found(m);
    auto work = [&] {
      for (;;) {
        std::size_t i = next++;
        if (i >= m || i >= best.load()) return;
        auto r = scan(firsts[i]);
        if (r) {
          found[i] = std::move(r);
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    workers = std::max(1u, workers);
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    std::size_t b = best.load();
    if (b >= m) return std::nullopt;
    return found[b];
  }
};

}  // namespace

bool check_triple(const PermGroup& G, const std::vector<Permutation>& elements, TripleKind kind) {
  if (elements.size() != arity(kind))
    throw InvalidArgument(to_string(kind) + " data needs " + std::to_string(arity(kind)) + " elements");
  for (const auto& e : elements)
    if (!G.contains(e)) throw InvalidArgument("element " + e.to_string() + " is not in the group");
  auto invol = [](const Permutation& p) { return p.order() == 2; };
  if (kind == TripleKind::RotaryPair) {
    if (!invol(elements[1])) return false;
  } else {
    if (!std::all_of(elements.begin(), elements.end(), invol)) return false;
    if (kind == TripleKind::Regular) {
      const auto& x = elements[0];
      const auto& z = elements[2];
      if (x == z || x * z != z * x) return false;
    }
  }
  return subgroup(G, elements).order() == G.order();
}

std::optional<GeneratingTriple> find_any(const PermGroup& G, TripleKind kind, const SearchOptions& opts,
                                         SearchStats* stats) {
  Search s(G, kind);
  auto hit = s.run(opts.workers);
  if (stats) {
    std::uint64_t I = s.invols.size();
    stats->nominal = kind == TripleKind::RotaryPair ? G.order() * I : I * I * I;
    stats->visited = s.visited.load();
  }
  if (!hit) return std::nullopt;
  GeneratingTriple t;
  t.kind = kind;
  for (Index i : *hit) t.elements.push_back(G.element(i));
  return t;
}

bool exists(const PermGroup& G, TripleKind kind, const SearchOptions& opts, SearchStats* stats) {
  return find_any(G, kind, opts, stats).has_value();
}

std::size_t count_involutions(const PermGroup& G) { return involution_indices(G).size(); }

std::string QuotientReport::branch_name() const {
  switch (branch) {
    case Branch::SameKind: return "same-kind";
    case Branch::Dihedral: return "dihedral";
    case Branch::Cyclic: return "cyclic";
  }
  return "?";
}

QuotientReport quotient_behavior(const PermGroup& G, const GeneratingTriple& data, const PermGroup& N) {
  if (!N.is_subgroup_of(G) || !is_normal(G, N)) throw InvalidArgument("subgroup is not normal");
  if (!check_triple(G, data.elements, data.kind))
    throw InvalidArgument(to_string(data.kind) + " data is not valid for the group");
  auto Q = quotient(G, N);
  QuotientReport r;
  r.quotient_order = Q.order();
  for (const auto& e : data.elements) r.projected.push_back(Q.project(e));
  const auto& Qg = Q.group();
  r.same_kind = check_triple(Qg, r.projected, data.kind);
  if (data.kind == TripleKind::RotaryPair) {
    r.degenerate = is_cyclic(Qg);
  } else {
    r.degenerate = Qg.order() == 2 || is_dihedral(Qg);
  }
  if (r.degenerate) {
    r.branch = data.kind == TripleKind::RotaryPair ? QuotientReport::Branch::Cyclic
                                                    : QuotientReport::Branch::Dihedral;
  } else if (r.same_kind) {
    r.branch = QuotientReport::Branch::SameKind;
  } else {
    throw VerificationFailure("quotient of order " + std::to_string(Q.order()) +
                              " keeps neither the " + to_string(data.kind) +
                              " data nor a degenerate shape");
  }
  return r;
}

}  // namespace sqf

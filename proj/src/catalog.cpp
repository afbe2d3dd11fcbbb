#include "sqfmaps/catalog.hpp"

#include <numeric>

#include "sqfmaps/errors.hpp"

namespace sqf {

const Permutation& NamedGroup::at(const std::string& name) const {
  auto it = names.find(name);
  if (it == names.end()) throw InvalidArgument("no element named '" + name + "'");
  return it->second;
}

Permutation NamedGroup::product(std::initializer_list<std::string> word) const {
  Permutation acc = Permutation::identity(group.degree());
  for (const auto& w : word) acc = acc * at(w);
  return acc;
}

namespace catalog {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t len) {
  std::vector<Point> cyc;
  for (std::size_t i = 0; i < len; ++i) cyc.push_back(static_cast<Point>(first + i));
  return Permutation::from_cycles(degree, {cyc});
}

Permutation regular_element(std::size_t order,
                            const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                            std::size_t x) {
  std::vector<Point> im(order);
  for (std::size_t y = 0; y < order; ++y) im[y] = static_cast<Point>(mul(y, x));
  return Permutation(std::move(im));
}

}  // namespace

NamedGroup cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  Permutation a = cycle_on(n, 0, n);
  return NamedGroup{PermGroup::generate(n, {a}), {{"a", a}}};
}

NamedGroup dihedral(std::size_t n) {
  if (n == 0) throw InvalidArgument("dihedral parameter must be positive");
  if (n <= 2) {
    auto m = metacyclic(n, 2, n - 1, 0);
    return NamedGroup{m.group, {{"a", m.at("a")}, {"s", m.at("b")}}};
  }
  Permutation a = cycle_on(n, 0, n);
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<Point>((n - i) % n);
  Permutation s(std::move(im));
  return NamedGroup{PermGroup::generate(n, {a, s}), {{"a", a}, {"s", s}}};
}

NamedGroup metacyclic(std::size_t m, std::size_t k, std::size_t r, std::size_t c) {
  if (m == 0 || k == 0) throw InvalidArgument("metacyclic parameters must be positive");
  r %= m;
  c %= m;
  std::size_t rinv = m == 1 ? 0 : m;
  for (std::size_t t = 0; t < m; ++t)
    if ((t * r) % m == 1 % m) {
      rinv = t;
      break;
    }
  if (rinv == m) throw InvalidArgument("twist exponent must be a unit modulo m");
  // rpow[e] = rinv^e mod m, so that b^e a^j = a^(j * rinv^e) b^e.
  std::vector<std::size_t> rpow(k, 1 % m);
  for (std::size_t e = 1; e < k; ++e) rpow[e] = (rpow[e - 1] * rinv) % m;
  const std::size_t order = m * k;
  auto mul = [=](std::size_t x, std::size_t y) {
    std::size_t i = x % m, e = x / m, j = y % m, f = y / m;
    std::size_t ni = (i + j * rpow[e]) % m;
    std::size_t ne = e + f;
    if (ne >= k) {
      ne -= k;
      ni = (ni + c) % m;
    }
    return ni + m * ne;
  };
  Permutation a = regular_element(order, mul, 1 % m);
  Permutation b = regular_element(order, mul, k > 1 ? m : 0);
  auto G = from_multiplication(order, mul, {1 % m, k > 1 ? m : 0});
  return NamedGroup{G, {{"a", a}, {"b", b}}};
}

NamedGroup quaternion(std::size_t order) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw InvalidArgument("generalized quaternion order must be a power of 2, at least 8");
  const std::size_t m = order / 2;
  auto q = metacyclic(m, 2, m - 1, m / 2);
  return NamedGroup{q.group, {{"u", q.at("a")}, {"v", q.at("b")}}};
}

NamedGroup quaternion8() {
  auto q = quaternion(8);
  Permutation i = q.at("u"), j = q.at("v");
  Permutation k = i * j;
  return NamedGroup{q.group, {{"i", i}, {"j", j}, {"k", k}, {"-1", i * i}}};
}

NamedGroup elementary_abelian(std::size_t p, std::size_t k) {
  if (p < 2) throw InvalidArgument("prime must be at least 2");
  if (k == 0) return NamedGroup{PermGroup::generate(1, {}), {}};
  const std::size_t deg = p * k;
  NamedGroup out{PermGroup::generate(1, {}), {}};
  std::vector<Permutation> gens;
  for (std::size_t t = 0; t < k; ++t) {
    gens.push_back(cycle_on(deg, t * p, p));
    out.names["e" + std::to_string(t)] = gens.back();
  }
  out.group = PermGroup::generate(deg, gens);
  return out;
}

NamedGroup abelian2(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidArgument("cyclic factor orders must be positive");
  const std::size_t deg = m + n;
  Permutation a = cycle_on(deg, 0, m), b = cycle_on(deg, m, n);
  return NamedGroup{PermGroup::generate(deg, {a, b}), {{"a", a}, {"b", b}}};
}

NamedGroup symmetric(std::size_t n) {
  if (n == 0) throw InvalidArgument("symmetric degree must be positive");
  if (n == 1) return NamedGroup{PermGroup::generate(1, {}), {}};
  Permutation c = cycle_on(n, 0, n);
  Permutation t = Permutation::from_cycles(n, {{0, 1}});
  return NamedGroup{PermGroup::generate(n, {c, t}), {{"c", c}, {"t", t}}};
}

NamedGroup alternating(std::size_t n) {
  if (n < 3) throw InvalidArgument("alternating degree must be at least 3");
  Permutation c = Permutation::from_cycles(n, {{0, 1, 2}});
  Permutation d = n % 2 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1);
  return NamedGroup{PermGroup::generate(n, {c, d}), {{"c", c}, {"d", d}}};
}

NamedGroup gl2(std::size_t p) {
  if (p < 2) throw InvalidArgument("field size must be a prime");
  const std::size_t deg = p * p - 1;
  auto idx = [p](std::size_t x, std::size_t y) { return x + p * y - 1; };
  // Row vector (x, y) times [[m00, m01], [m10, m11]].
  auto matrix = [&](std::size_t m00, std::size_t m01, std::size_t m10, std::size_t m11) {
    std::vector<Point> im(deg);
    for (std::size_t y = 0; y < p; ++y)
      for (std::size_t x = 0; x < p; ++x) {
        if (x == 0 && y == 0) continue;
        std::size_t nx = (x * m00 + y * m10) % p, ny = (x * m01 + y * m11) % p;
        im[idx(x, y)] = static_cast<Point>(idx(nx, ny));
      }
    return Permutation(std::move(im));
  };
  Permutation e = matrix(1, 1, 0, 1);
  Permutation w = matrix(0, 1, 1, 0);
  Permutation d = matrix(p - 1, 0, 0, 1);
  Permutation minus1 = matrix(p - 1, 0, 0, p - 1);
  auto G = PermGroup::generate(deg, {e, w, d});
  if (G.order() != (p * p - 1) * (p * p - p))
    throw VerificationFailure("GL(2," + std::to_string(p) + ") model has the wrong order");
  return NamedGroup{G, {{"e", e}, {"w", w}, {"d", d}, {"minus1", minus1}}};
}

NamedGroup modular(std::size_t p, std::size_t l) {
  if (l < 2) throw InvalidArgument("modular p-group needs l >= 2");
  std::size_t m = 1;
  for (std::size_t i = 0; i < l; ++i) m *= p;
  return metacyclic(m, p, m / p + 1, 0);
}

NamedGroup semidihedral(std::size_t order) {
  if (order < 16 || (order & (order - 1)) != 0)
    throw InvalidArgument("semidihedral order must be a power of 2, at least 16");
  const std::size_t m = order / 2;
  return metacyclic(m, 2, m / 2 - 1, 0);
}

NamedGroup dihedral_times_z2(std::size_t n) {
  auto D = dihedral(n);
  auto Z = cyclic(2);
  auto P = direct_product(D.group, Z.group);
  return NamedGroup{P.group,
                    {{"a", P.embed_first(D.at("a"))},
                     {"s", P.embed_first(D.at("s"))},
                     {"c", P.embed_second(Z.at("a"))}}};
}

NamedGroup dihedral_twisted(std::size_t l) {
  if (l < 1) throw InvalidArgument("l must be at least 1");
  const std::size_t m = std::size_t{1} << (l + 2);
  auto D = dihedral(m);
  auto Z = cyclic(2);
  const Permutation& a = D.at("a");
  auto P = semidirect_product(D.group, Z.group, {{a.pow(static_cast<long long>(m / 2 + 1)), D.at("s")}});
  return NamedGroup{P.group,
                    {{"a", P.embed_first(a)},
                     {"s", P.embed_first(D.at("s"))},
                     {"c", P.embed_second(Z.at("a"))}}};
}

NamedGroup quaternion_circ_z4(std::size_t quaternion_order) {
  auto Q = quaternion(quaternion_order);
  auto Z = cyclic(4);
  const Permutation& u = Q.at("u");
  Permutation minus1 = u.pow(static_cast<long long>(quaternion_order / 4));
  auto P = central_product(Q.group, Z.group, {minus1}, {Z.at("a").pow(2)});
  return NamedGroup{P.group,
                    {{"u", P.embed_first(u)},
                     {"v", P.embed_first(Q.at("v"))},
                     {"b", P.embed_second(Z.at("a"))}}};
}

}  // namespace catalog

}  // namespace sqf

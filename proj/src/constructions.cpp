#include "sqfmaps/constructions.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "sqfmaps/errors.hpp"
#include "sqfmaps/maps.hpp"

namespace sqf {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Rebuilds `g` so that its generator list is exactly the named elements, in
// order; this is what the product constructors index actions by.
PermGroup regenerate(const NamedGroup& g, const std::vector<std::string>& names) {
  std::vector<Permutation> gens;
  for (const auto& n : names) gens.push_back(g.at(n));
  auto h = PermGroup::generate(g.group.degree(), gens, g.group.cap());
  if (h.order() != g.group.order()) throw InvalidArgument("named elements do not generate the group");
  return h;
}

using Embed = std::function<Permutation(const Permutation&)>;

void add_names(NamedGroup& out, const NamedGroup& src, const Embed& embed, const std::string& prefix) {
  for (const auto& [k, v] : src.names) out.names[prefix + k] = embed(v);
}

NamedGroup direct(const NamedGroup& A, const NamedGroup& B, const std::string& pa = "",
                  const std::string& pb = "") {
  auto P = direct_product(A.group, B.group);
  NamedGroup out{P.group, {}};
  add_names(out, A, P.embed_first, pa);
  add_names(out, B, P.embed_second, pb);
  return out;
}

// A : B where the named generator bn[j] of B sends the named generator an[i]
// of A to action[j][i].
NamedGroup semidirect(const NamedGroup& A, const std::vector<std::string>& an, const NamedGroup& B,
                      const std::vector<std::string>& bn, const std::vector<std::vector<Permutation>>& action,
                      const std::string& pa = "", const std::string& pb = "") {
  auto P = semidirect_product(regenerate(A, an), regenerate(B, bn), action);
  NamedGroup out{P.group, {}};
  add_names(out, A, P.embed_first, pa);
  add_names(out, B, P.embed_second, pb);
  return out;
}

// Central product identifying the unique involution of Z(A) with that of Z(B).
NamedGroup central_involutions(const NamedGroup& A, const NamedGroup& B, const std::string& pa = "",
                               const std::string& pb = "") {
  auto unique_central_involution = [](const PermGroup& G) {
    auto Z = center(G);
    std::vector<Permutation> inv;
    for (const auto& z : Z.elements())
      if (z.order() == 2) inv.push_back(z);
    if (inv.size() != 1) throw InvalidArgument("center does not have a unique involution");
    return inv[0];
  };
  auto P = central_product(A.group, B.group, {unique_central_involution(A.group)},
                           {unique_central_involution(B.group)});
  NamedGroup out{P.group, {}};
  add_names(out, A, P.embed_first, pa);
  add_names(out, B, P.embed_second, pb);
  return out;
}

NamedGroup renamed(const NamedGroup& g, const std::map<std::string, std::string>& rename) {
  NamedGroup out{g.group, {}};
  for (const auto& [k, v] : g.names) {
    auto it = rename.find(k);
    out.names[it == rename.end() ? k : it->second] = v;
  }
  return out;
}

// --- The 2-groups F2 with their S3 = <sigma, tau> actions. ---

enum class S3 { One, Sigma, Tau };

struct Column {
  NamedGroup group;
  std::vector<std::string> gens;
  std::vector<Permutation> sigma;  // images of gens
  std::vector<Permutation> tau;

  const std::vector<Permutation>& images(S3 s, std::vector<Permutation>& scratch) const {
    if (s == S3::Sigma) return sigma;
    if (s == S3::Tau) return tau;
    scratch.clear();
    for (const auto& g : gens) scratch.push_back(group.at(g));
    return scratch;
  }
};

Column column(const std::string& id) {
  if (id == "Z2^2" || id == "Z2^3") {
    auto E = catalog::elementary_abelian(2, id == "Z2^2" ? 2 : 3);
    auto e0 = E.at("e0"), e1 = E.at("e1");
    Column c{E, {"e0", "e1"}, {e1, e0 * e1}, {e1, e0}};
    if (id == "Z2^3") {
      c.gens.push_back("e2");
      c.sigma.push_back(E.at("e2"));
      c.tau.push_back(E.at("e2"));
    }
    return c;
  }
  if (id == "Q8") {
    auto Q = catalog::quaternion8();
    auto i = Q.at("i"), j = Q.at("j");
    return Column{Q, {"i", "j"}, {j, i * j}, {j.inverse(), i.inverse()}};
  }
  if (id == "Z4oQ8") {
    auto Q = renamed(catalog::quaternion_circ_z4(8), {{"b", "z"}});
    auto u = Q.at("u"), v = Q.at("v"), z = Q.at("z");
    return Column{Q, {"u", "v", "z"}, {v, u * v, z}, {v.inverse(), u.inverse(), z}};
  }
  throw InvalidArgument("unknown column '" + id + "'");
}

// F2 : T where the named generators of T act through the given S3 images.
NamedGroup extend_by(const Column& c, const NamedGroup& T, const std::vector<std::string>& tn,
                     const std::vector<S3>& via) {
  std::vector<std::vector<Permutation>> action;
  std::vector<Permutation> scratch;
  for (S3 s : via) action.push_back(c.images(s, scratch));
  return semidirect(c.group, c.gens, T, tn, action);
}

// (Z_m x Z_k) : Z2 with the involution inverting both; names a, b, c.
NamedGroup inverted_abelian(std::size_t m, std::size_t k) {
  auto A = catalog::abelian2(m, k);
  return semidirect(A, {"a", "b"}, NamedGroup{catalog::cyclic(2).group, {{"c", catalog::cyclic(2).at("a")}}},
                    {"c"}, {{A.at("a").inverse(), A.at("b").inverse()}});
}

// Z_m : Z4 with the generator of order 4 inverting; names a, b.
NamedGroup cyclic_by_z4(std::size_t m) { return catalog::metacyclic(m, 4, m - 1, 0); }

void require_l(std::size_t l, std::size_t min, const std::string& what) {
  if (l < min) throw InvalidArgument(what + " needs l >= " + std::to_string(min));
}

}  // namespace

// --- X and the three families. ---

NamedGroup build_X(std::size_t n) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  auto D = catalog::dihedral(n);
  const std::size_t d = D.group.degree();
  std::vector<Point> a(2 * d), s(2 * d), b(2 * d), t(2 * d), sigma(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    a[i] = D.at("a")(static_cast<Point>(i));
    s[i] = D.at("s")(static_cast<Point>(i));
    a[d + i] = s[d + i] = static_cast<Point>(d + i);
    b[i] = t[i] = static_cast<Point>(i);
    b[d + i] = static_cast<Point>(d + D.at("a")(static_cast<Point>(i)));
    t[d + i] = static_cast<Point>(d + D.at("s")(static_cast<Point>(i)));
    sigma[i] = static_cast<Point>(d + i);
    sigma[d + i] = static_cast<Point>(i);
  }
  NamedGroup X{PermGroup::generate(2 * d, {Permutation(a), Permutation(s), Permutation(b), Permutation(t),
                                           Permutation(sigma)}),
               {{"a", Permutation(a)},
                {"s", Permutation(s)},
                {"b", Permutation(b)},
                {"t", Permutation(t)},
                {"sigma", Permutation(sigma)}}};
  if (X.group.order() != 8 * n * n) throw VerificationFailure("X has the wrong order");
  return X;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::C31: return "C31";
    case Family::C33: return "C33";
    case Family::C34: return "C34";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& s) {
  if (s == "C31") return Family::C31;
  if (s == "C33") return Family::C33;
  if (s == "C34") return Family::C34;
  return std::nullopt;
}

std::string family_parameter_error(Family f, std::size_t n) {
  if (f == Family::C33) return n >= 2 ? "" : "n must be at least 2";
  if (n % 2 == 0) return "n must be odd";
  if (n < 3) return "n must be at least 3";
  return "";
}

FamilyInstance build_family(Family f, std::size_t n) {
  if (auto err = family_parameter_error(f, n); !err.empty()) throw InvalidArgument(err);
  auto X = build_X(n);
  auto st = X.product({"s", "t"});
  std::vector<Permutation> gens;
  std::vector<Permutation> triple;
  switch (f) {
    case Family::C31:
      gens = {X.at("a"), X.at("s"), X.at("b"), X.at("t")};
      triple = {X.at("s"), X.product({"a", "b", "s", "t"}), st};
      break;
    case Family::C33:
      gens = {X.at("a"), X.at("b"), st, X.at("sigma")};
      triple = {X.at("sigma"), X.product({"a", "s", "t"}), X.product({"a", "b", "s", "t"})};
      break;
    case Family::C34:
      gens = X.group.generators();
      triple = {X.at("sigma"), X.at("s"), X.product({"a", "b", "s", "t"})};
      break;
  }
  FamilyInstance inst{f, n, NamedGroup{subgroup(X.group, gens), X.names},
                      GeneratingTriple{TripleKind::Regular, triple}};
  const std::size_t expect = f == Family::C34 ? 8 * n * n : 4 * n * n;
  if (inst.group.group.order() != expect)
    throw VerificationFailure(to_string(f) + " group has order " + std::to_string(inst.group.group.order()));
  if (!check_triple(inst.group.group, triple, TripleKind::Regular))
    throw VerificationFailure(to_string(f) + " triple is not regular at n=" + std::to_string(n));
  return inst;
}

std::vector<FamilyRow> emit_family_table(Family f, const std::vector<std::size_t>& ns, std::size_t cap,
                                         unsigned workers) {
  for (auto n : ns)
    if (auto err = family_parameter_error(f, n); !err.empty()) throw InvalidArgument(err);
  for (auto n : ns) {
    const std::size_t order = (f == Family::C34 ? 8 : 4) * n * n;
    if (order > cap || 8 * n * n > cap)
      throw CapExceeded("group too large for desk-scale enumeration: n=" + std::to_string(n) + " needs " +
                        std::to_string(8 * n * n) + " elements, cap " + std::to_string(cap));
  }
  std::vector<FamilyRow> rows(ns.size());
  auto one = [&](std::size_t i) {
    auto inst = build_family(f, ns[i]);
    rows[i] = FamilyRow{ns[i], inst.group.group.order(),
                        euler_characteristic_closed(inst.group.group, inst.triple)};
  };
  workers = std::max(1u, workers);
  if (workers == 1 || ns.size() < 2) {
    for (std::size_t i = 0; i < ns.size(); ++i) one(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < ns.size(); i += workers) one(i);
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  return rows;
}

// --- 2-groups and odd p-groups. ---

const std::vector<std::string>& prop41_cases() {
  static const std::vector<std::string> cases{"1.1a", "1.1b", "1.2a", "1.2b", "1.3a",
                                              "1.3b", "2.1",  "2.2",  "2.3"};
  return cases;
}

std::size_t prop41_order(const std::string& c, std::size_t l) {
  if (c == "1.1a" || c == "1.1b") return ipow(2, l + 1);
  if (c == "1.2a" || c == "1.2b" || c == "2.1") return ipow(2, l + 2);
  if (c == "1.3a" || c == "1.3b" || c == "2.3") return ipow(2, l + 3);
  if (c == "2.2") return ipow(2, l + 4);
  throw InvalidArgument("unknown case '" + c + "'");
}

NamedGroup build_prop41(const std::string& c, std::size_t l) {
  require_l(l, 1, "this family");
  prop41_order(c, l);
  const std::size_t m = ipow(2, l + 2);
  if (c == "1.1a") return catalog::cyclic(ipow(2, l + 1));
  if (c == "1.1b") return catalog::abelian2(ipow(2, l), 2);
  if (c == "1.2a") return catalog::dihedral(ipow(2, l + 1));
  if (c == "1.2b") return catalog::quaternion(ipow(2, l + 2));
  if (c == "1.3a") return catalog::metacyclic(m, 2, m / 2 + 1, 0);
  if (c == "1.3b") return catalog::metacyclic(m, 2, m / 2 - 1, 0);
  if (c == "2.1") return catalog::dihedral_times_z2(ipow(2, l));
  if (c == "2.2") return catalog::dihedral_twisted(l);
  return catalog::quaternion_circ_z4(ipow(2, l + 2));
}

NamedGroup build_lemma43(const std::string& c, std::size_t p, std::size_t l) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("p must be an odd prime");
  if (c == "1") {
    require_l(l, 1, "case 1");
    return catalog::cyclic(ipow(p, l));
  }
  if (c == "2") {
    require_l(l, 1, "case 2");
    return catalog::abelian2(ipow(p, l), p);
  }
  if (c == "3") {
    require_l(l, 2, "case 3");
    return catalog::modular(p, l);
  }
  throw InvalidArgument("unknown case '" + c + "'");
}

// --- Table entries. ---

const std::vector<std::string>& table_cases(int table) {
  static const std::vector<std::string> t1{"1.1", "1.2", "1.3", "1.4", "1.5", "1.6", "1.7"};
  static const std::vector<std::string> t2{"2.1", "2.2", "2.3", "2.4", "2.5"};
  if (table == 1) return t1;
  if (table == 2) return t2;
  throw InvalidArgument("table must be 1 or 2");
}

const std::vector<std::string>& table_columns(int table) {
  static const std::vector<std::string> t1{"Z2^2", "Z2^3", "Q8", "Z4oQ8"};
  static const std::vector<std::string> t2{"Z2^2", "Q8"};
  if (table == 1) return t1;
  if (table == 2) return t2;
  throw InvalidArgument("table must be 1 or 2");
}

namespace {

void check_coordinates(int table, const std::string& c, const std::string& col, std::size_t l) {
  const auto& cs = table_cases(table);
  const auto& cols = table_columns(table);
  if (std::find(cs.begin(), cs.end(), c) == cs.end()) throw InvalidArgument("unknown case '" + c + "'");
  if (std::find(cols.begin(), cols.end(), col) == cols.end())
    throw InvalidArgument("unknown column '" + col + "'");
  require_l(l, (c == "1.7" || c == "2.3") ? 2 : 1, "case " + c);
}

std::size_t column_order(const std::string& col) {
  if (col == "Z2^2") return 4;
  if (col == "Z4oQ8") return 16;
  return 8;
}

// T2 = K3:Z2 with its map onto S3, for the first table.
struct T2 {
  NamedGroup group;
  std::vector<std::string> gens;
  std::vector<S3> via;
};

T2 table1_t2(const std::string& c, std::size_t l) {
  const std::size_t q = ipow(3, l);
  if (c == "1.1") return {catalog::dihedral(3), {"a", "s"}, {S3::Sigma, S3::Tau}};
  if (c == "1.2") return {catalog::dihedral(3 * q), {"a", "s"}, {S3::Sigma, S3::Tau}};
  if (c == "1.3")
    return {direct(renamed(catalog::cyclic(q), {{"a", "c"}}), catalog::dihedral(3)),
            {"c", "a", "s"},
            {S3::One, S3::Sigma, S3::Tau}};
  if (c == "1.4")
    return {direct(catalog::dihedral(q), renamed(catalog::cyclic(3), {{"a", "c"}})),
            {"a", "s", "c"},
            {S3::Sigma, S3::Tau, S3::One}};
  if (c == "1.5") return {inverted_abelian(q, 3), {"a", "b", "c"}, {S3::One, S3::Sigma, S3::Tau}};
  if (c == "1.6") return {inverted_abelian(q, 3), {"a", "b", "c"}, {S3::Sigma, S3::One, S3::Tau}};
  // 1.7: (Z_{3^l} : Z3) : Z2, the involution inverting a and fixing b.
  auto M = catalog::modular(3, l);
  NamedGroup Z2{catalog::cyclic(2).group, {{"c", catalog::cyclic(2).at("a")}}};
  auto G = semidirect(M, {"a", "b"}, Z2, {"c"}, {{M.at("a").inverse(), M.at("b")}});
  return {G, {"a", "b", "c"}, {S3::Sigma, S3::One, S3::Tau}};
}

NamedGroup s3_extension(const std::string& col, const NamedGroup& T, const std::vector<std::string>& tn,
                        const std::vector<S3>& via) {
  return extend_by(column(col), T, tn, via);
}

NamedGroup z3(const std::string& name) {
  auto Z = catalog::cyclic(3);
  return NamedGroup{Z.group, {{name, Z.at("a")}}};
}

NamedGroup table2_group(const std::string& c, const std::string& col, std::size_t l) {
  const std::size_t q = ipow(3, l);
  const bool klein = col == "Z2^2";
  auto D6 = renamed(catalog::dihedral(3), {{"a", "r"}, {"s", "u"}});
  if (c == "2.1") {
    if (klein) return direct(catalog::dihedral(q), s3_extension("Z2^2", z3("d"), {"d"}, {S3::Sigma}));
    return central_involutions(cyclic_by_z4(q), s3_extension("Q8", z3("d"), {"d"}, {S3::Sigma}));
  }
  if (c == "2.2") {
    auto Zq = renamed(catalog::cyclic(q), {{"a", "d"}});
    if (klein) return direct(s3_extension("Z2^2", Zq, {"d"}, {S3::Sigma}), D6);
    return central_involutions(s3_extension("Q8", Zq, {"d"}, {S3::Sigma}),
                               renamed(cyclic_by_z4(3), {{"a", "r"}, {"b", "w"}}));
  }
  if (c == "2.3") {
    const NamedGroup base = klein ? direct(catalog::dihedral(q), catalog::elementary_abelian(2, 2))
                                  : central_involutions(cyclic_by_z4(q), catalog::quaternion8());
    const auto twist = base.at("a").pow(static_cast<long long>(ipow(3, l - 1) + 1));
    std::vector<std::string> bn;
    std::vector<Permutation> img;
    if (klein) {
      bn = {"a", "s", "e0", "e1"};
      img = {twist, base.at("s"), base.at("e1"), base.at("e0") * base.at("e1")};
    } else {
      bn = {"a", "b", "i", "j"};
      img = {twist, base.at("b"), base.at("j"), base.at("i") * base.at("j")};
    }
    return semidirect(base, bn, z3("d"), {"d"}, {img});
  }
  if (c == "2.4") {
    auto S4like = s3_extension(col, catalog::dihedral(3), {"a", "s"}, {S3::Sigma, S3::Tau});
    if (klein) return direct(renamed(catalog::dihedral(q), {{"a", "r"}, {"s", "u"}}), S4like);
    return central_involutions(renamed(cyclic_by_z4(q), {{"a", "r"}, {"b", "w"}}), S4like);
  }
  // 2.5
  auto ext = s3_extension(col, catalog::dihedral(q), {"a", "s"}, {S3::Sigma, S3::Tau});
  if (klein) return direct(ext, D6);
  return central_involutions(ext, renamed(cyclic_by_z4(3), {{"a", "r"}, {"b", "w"}}));
}

std::string pow3(std::size_t e) { return e == 1 ? "3" : "3^" + std::to_string(e); }

}  // namespace

std::size_t table_order(int table, const std::string& c, const std::string& col, std::size_t l) {
  check_coordinates(table, c, col, l);
  const std::size_t f = column_order(col);
  if (table == 1) return f * (c == "1.1" ? 6 : 2 * ipow(3, l + 1));
  return f * ipow(3, l) * ((c == "2.4" || c == "2.5") ? 12 : 6);
}

NamedGroup build_table_group(int table, const std::string& c, const std::string& col, std::size_t l) {
  const std::size_t expect = table_order(table, c, col, l);
  auto build = [&] {
    if (table == 2) return table2_group(c, col, l);
    auto t = table1_t2(c, l);
    return extend_by(column(col), t.group, t.gens, t.via);
  };
  NamedGroup out = build();
  if (out.group.order() != expect)
    throw VerificationFailure("table entry " + c + "/" + col + " has order " + std::to_string(out.group.order()) +
                              ", expected " + std::to_string(expect));
  return out;
}

std::string table_entry_name(int table, const std::string& c, const std::string& col, std::size_t l) {
  check_coordinates(table, c, col, l);
  const std::string q = pow3(l), q1 = pow3(l + 1), qm = l >= 2 ? pow3(l - 1) : "1";
  const std::string D = "D_{2." + q + "}";
  if (table == 1) {
    std::string t2;
    if (c == "1.1") t2 = "D6";
    if (c == "1.2") t2 = "D_{2." + q1 + "}";
    if (c == "1.3") t2 = "Z" + q + "xD6";
    if (c == "1.4") t2 = D + "xZ3";
    if (c == "1.7") t2 = D + ":Z3";
    std::string f2 = col == "Z4oQ8" ? "(Z4oQ8)" : col;
    if (c == "1.1") {
      if (col == "Z2^2") return "S4";
      if (col == "Z2^3") return "Z2xS4";
      if (col == "Q8") return "GL(2,3)";
      return "Z4oGL(2,3)";
    }
    // In 1.5 the Z3 factor acts on F2, in 1.6 the Z_{3^l} factor does.
    if (c == "1.5") return "(Z" + q + "x(" + f2 + ":Z3)):Z2";
    if (c == "1.6") return "(Z3x(" + f2 + ":Z" + q + ")):Z2";
    return f2 + ":(" + t2 + ")";
  }
  const bool klein = col == "Z2^2";
  if (c == "2.1") return klein ? D + "xA4" : "(Z" + q + ":Z4)o(Q8:Z3)";
  if (c == "2.2") return klein ? "(Z2^2:Z" + q + ")xD6" : "(Q8:Z" + q + ")o(Z3:Z4)";
  if (c == "2.3") return klein ? "(" + D + "xZ2^2):Z3" : "((Z" + q + ":Z4)oQ8):Z3";
  if (c == "2.4") return klein ? D + "xS4" : "(Z" + q + ":Z4)o(Q8:S3)";
  return klein ? "(Z2^2:" + D + ")xD6" : "(Q8:" + D + ")o(Z3:Z4)";
}

// --- Extra rotary groups. ---

const std::vector<std::string>& rotary_extra_ids() {
  static const std::vector<std::string> ids{"Z2^3:Z7^l", "Z2^2:Z3^l", "Z2xZ2^2:Z3^l", "Z4o(Q8:Z3^l)"};
  return ids;
}

NamedGroup build_rotary_extra(const std::string& id, std::size_t l) {
  require_l(l, 1, id);
  if (id == "Z2^3:Z7^l") {
    auto E = catalog::elementary_abelian(2, 3);
    auto Z = renamed(catalog::cyclic(ipow(7, l)), {{"a", "d"}});
    // Companion matrix of x^3 + x + 1, an element of order 7.
    return semidirect(E, {"e0", "e1", "e2"}, Z, {"d"}, {{E.at("e1"), E.at("e2"), E.at("e0") * E.at("e1")}});
  }
  std::string col;
  if (id == "Z2^2:Z3^l") col = "Z2^2";
  if (id == "Z2xZ2^2:Z3^l") col = "Z2^3";
  if (id == "Z4o(Q8:Z3^l)") col = "Z4oQ8";
  if (col.empty()) throw InvalidArgument("unknown group id '" + id + "'");
  return extend_by(column(col), renamed(catalog::cyclic(ipow(3, l)), {{"a", "d"}}), {"d"}, {S3::Sigma});
}

}  // namespace sqf

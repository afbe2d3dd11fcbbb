#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfmaps/catalog.hpp"
#include "sqfmaps/factor.hpp"
#include "sqfmaps/structure.hpp"
#include "sqfmaps/triples.hpp"

namespace sqf {

// X = (<a,s> x <b,t>) : <sigma>, the wreath product D_{2n} wr S2, with
// a^s = a^-1, b^t = b^-1 and (a, s)^sigma = (b, t). Names: "a", "b", "s",
// "t", "sigma". Order 8n^2. Acts on two copies of the dihedral model
// (natural for n >= 3, regular for n = 2). Throws InvalidArgument for n < 2.
NamedGroup build_X(std::size_t n);

enum class Family { C31, C33, C34 };

std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& s);

struct FamilyInstance {
  Family family = Family::C31;
  std::size_t n = 0;
  NamedGroup group;  // the subgroup of X carrying the triple, same names
  GeneratingTriple triple;
};

// C31: G = <a,s> x <b,t>, (x,y,z) = (s, abst, st), odd n >= 3.
// C33: G = <a,b> : <st, sigma>, (x,y,z) = (sigma, ast, abst), n >= 2.
// C34: G = X, (x,y,z) = (sigma, s, abst), odd n >= 3.
// Throws InvalidArgument on a parameter violation and VerificationFailure if
// the triple does not check out.
FamilyInstance build_family(Family f, std::size_t n);
// Parameter check alone; returns an error message or empty.
std::string family_parameter_error(Family f, std::size_t n);

struct FamilyRow {
  std::size_t n = 0;
  std::size_t order = 0;
  FactoredInteger chi;
};

// Closed-form Euler characteristic for each n (skipping nothing: invalid n
// throws). Rows come back in the order of `ns`.
std::vector<FamilyRow> emit_family_table(Family f, const std::vector<std::size_t>& ns,
                                         std::size_t cap = kDefaultElementCap, unsigned workers = 1);

// 2-groups with a cyclic or dihedral subgroup of index 2, l >= 1. Cases:
// "1.1a" Z_{2^(l+1)}, "1.1b" Z_{2^l} x Z2, "1.2a" D_{2^(l+2)},
// "1.2b" Q_{2^(l+2)}, "1.3a" Z_{2^(l+2)}:Z2 with a^b = a^(2^(l+1)+1),
// "1.3b" the same with a^(2^(l+1)-1), "2.1" D_{2^(l+1)} x Z2,
// "2.2" D_{2^(l+3)}:Z2 with (a,b)^c = (a^(2^(l+1)+1), b), "2.3" Q_{2^(l+2)} o Z4.
NamedGroup build_prop41(const std::string& case_id, std::size_t l);
const std::vector<std::string>& prop41_cases();
// Order formula for each case.
std::size_t prop41_order(const std::string& case_id, std::size_t l);

// Odd p-groups with a cyclic subgroup of index p: "1" Z_{p^l}, "2" Z_{p^l} x Z_p,
// "3" Z_{p^l} : Z_p with a^b = a^(p^(l-1)+1), l >= 2.
NamedGroup build_lemma43(const std::string& case_id, std::size_t p, std::size_t l);

// Table entries K = F2 : T2 (first table) and the literal products of the
// second table. Columns of the first table: "Z2^2", "Z2^3", "Q8", "Z4oQ8";
// of the second: "Z2^2", "Q8" (the pair (F2, O2) is named by its F2).
// Cases "1.1".."1.7" and "2.1".."2.5". Cases 1.7 and 2.3 need l >= 2.
NamedGroup build_table_group(int table, const std::string& case_id, const std::string& column, std::size_t l);
const std::vector<std::string>& table_cases(int table);
const std::vector<std::string>& table_columns(int table);
std::size_t table_order(int table, const std::string& case_id, const std::string& column, std::size_t l);
// Printable name of the entry, e.g. "Z2^2:D_{2.3^2}".
std::string table_entry_name(int table, const std::string& case_id, const std::string& column, std::size_t l);

// The four extra rotary {2,p}-groups: "Z2^3:Z7^l", "Z2^2:Z3^l",
// "Z2xZ2^2:Z3^l", "Z4o(Q8:Z3^l)".
NamedGroup build_rotary_extra(const std::string& id, std::size_t l);
const std::vector<std::string>& rotary_extra_ids();

}  // namespace sqf

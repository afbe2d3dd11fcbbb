#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfmaps/perm_group.hpp"
#include "sqfmaps/structure.hpp"

namespace sqf {

enum class VerifyStatus { Confirmed, Refuted, Skipped };
std::string to_string(VerifyStatus s);

// One checked item inside a claim: a group, what was expected of it and what
// the computation found. Search items carry their certificate sizes.
struct VerifyItem {
  std::string subject;
  std::string expected;
  std::string observed;
  bool ok = true;
  std::uint64_t nominal = 0;  // product of candidate-set sizes
  std::uint64_t visited = 0;  // tuples reaching the generation test
  std::string counterexample;  // generators in cycle notation when !ok
  // Informational: recorded and printed but never decides the status.
  bool finding = false;
};

struct VerificationReport {
  std::string claim;
  VerifyStatus status = VerifyStatus::Confirmed;
  std::string reason;  // for Skipped
  std::vector<VerifyItem> items;
  double seconds = 0;
};

struct VerifyOptions {
  std::size_t lmax = 2;
  unsigned workers = 1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = kDefaultElementCap;
  // Random subgroups drawn by the heredity check.
  std::size_t heredity_samples = 200;
};

// Known claim ids, in suite order.
const std::vector<std::string>& claim_ids();
// Runs one claim. Throws InvalidArgument for an unknown id.
VerificationReport verify(const std::string& claim, const VerifyOptions& opts = {});
// Runs every claim in suite order.
std::vector<VerificationReport> verify_all(const VerifyOptions& opts = {});

VerificationReport verify_lemma_6_2(const VerifyOptions& opts = {});
// Rotary-pair search over (Z_{3^l} x Z3) : Z2 for 1 <= l <= lmax, plus a
// dihedral control that must have one.
VerificationReport verify_lemma_6_3(const VerifyOptions& opts = {});
VerificationReport verify_prop_4_2(const VerifyOptions& opts = {});
VerificationReport verify_theorem_1_2_K_groups(const VerifyOptions& opts = {});

// G = (A:B):K with gcd(|A:B|, |K|) = 1, A abelian, B nilpotent,
// A meet Z(A:B) = 1, and K a Hall subgroup for {2}, {2,3}, {2,7} or {2,3,7}.
struct Decomposition {
  std::vector<std::uint64_t> k_primes;
  PermGroup A;
  PermGroup B;
  PermGroup K;
};
struct DecompositionResult {
  bool precondition_ok = false;
  std::string precondition;  // why not, when !precondition_ok
  std::optional<Decomposition> found;
};
DecompositionResult verify_decomposition(const PermGroup& G, std::uint64_t seed = kDefaultSeed);

// Text block and one-record-per-line renderings. Wall time only when asked.
std::string to_text(const VerificationReport& r, bool show_time = false);
std::string to_record(const VerificationReport& r, bool show_time = false);

}  // namespace sqf

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sqf {

// A signed integer with its prime factorization.
struct FactoredInteger {
  std::int64_t value = 0;
  int sign = 0;  // -1, 0, +1
  std::vector<std::pair<std::uint64_t, unsigned>> primes;  // ascending
  bool squarefree = false;
  // Set for value 0, which has no factorization and is defined not squarefree.
  bool zero_warning = false;

  // Dot notation: "-2.5.13", "2", "-3", "-2^2.7". Zero renders as "0",
  // +-1 as "1" / "-1".
  std::string dot() const;
};

FactoredInteger factor(std::int64_t k);
bool is_squarefree(std::int64_t k);

// Prime factorization of a positive integer by trial division.
std::vector<std::pair<std::uint64_t, unsigned>> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);
// p-part of n: the largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace sqf

#include "sqfmaps/factor.hpp"

namespace sqf {

std::vector<std::pair<std::uint64_t, unsigned>> prime_factors(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = prime_factors(n);
  return f.size() == 1 && f[0].second == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

FactoredInteger factor(std::int64_t k) {
  FactoredInteger f;
  f.value = k;
  if (k == 0) {
    f.zero_warning = true;
    return f;
  }
  f.sign = k < 0 ? -1 : 1;
  std::uint64_t mag = k < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(k)
                            : static_cast<std::uint64_t>(k);
  f.primes = prime_factors(mag);
  f.squarefree = true;
  for (const auto& [p, e] : f.primes)
    if (e > 1) f.squarefree = false;
  return f;
}

bool is_squarefree(std::int64_t k) { return factor(k).squarefree; }

std::string FactoredInteger::dot() const {
  if (sign == 0) return "0";
  std::string s = sign < 0 ? "-" : "";
  if (primes.empty()) return s + "1";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(primes[i].first);
    if (primes[i].second > 1) s += "^" + std::to_string(primes[i].second);
  }
  return s;
}

}  // namespace sqf

#pragma once

#include <cstdint>
#include <vector>

#include "mnforge/errors.hpp"

namespace mnforge {

// Strictly increasing sequence i -> p_i of primes (1-based).  The default
// table is 2, 3, 5, 7, ...; a configured table fixes a prefix and continues
// with the next primes above it, so every index is defined.
class PrimeTable {
  public:
    PrimeTable() { extend_to(kPrefetch); }

    explicit PrimeTable(std::vector<std::int64_t> prefix) : primes_(std::move(prefix)) {
        std::int64_t prev = 1;
        for (std::int64_t p : primes_) {
            if (!is_prime(p)) throw BadArguments("prime table entry " + std::to_string(p) + " is not prime");
            if (p <= prev) throw BadArguments("prime table must be strictly increasing");
            prev = p;
        }
        extend_to(kPrefetch);
    }

    std::int64_t prime(std::uint32_t i) const {
        if (i == 0) throw BadArguments("prime index is 1-based");
        if (i <= primes_.size()) return primes_[i - 1];
        // Rarely reached: continue the sequence without touching the table.
        std::int64_t p = primes_.back();
        for (std::size_t k = primes_.size(); k < i; ++k) p = next_prime(p);
        return p;
    }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::int64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    static std::int64_t next_prime(std::int64_t n) {
        std::int64_t p = n + 1;
        while (!is_prime(p)) ++p;
        return p;
    }

  private:
    static constexpr std::size_t kPrefetch = 32;

    void extend_to(std::size_t count) {
        std::int64_t p = primes_.empty() ? 1 : primes_.back();
        while (primes_.size() < count) {
            p = next_prime(p);
            primes_.push_back(p);
        }
    }

    std::vector<std::int64_t> primes_;
};

}  // namespace mnforge

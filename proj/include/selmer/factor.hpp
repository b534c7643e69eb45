#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "selmer/arith.hpp"

namespace selmer {

/// Prime factorization of |n| as prime -> exponent. n must be nonzero.
std::map<Int, unsigned> factorize(const Int& n);

/// Distinct primes dividing |n|, ascending. Empty for n = +-1.
std::vector<Int> prime_divisors(const Int& n);

/// Positive divisors of |n|, ascending.
std::vector<Int> divisors(const Int& n);

/// Squarefree integer in the same class of Q^x / Q^x2 as n (sign kept).
Int squarefree_part(const Int& n);

bool is_squarefree(const Int& n);

/// Primes p <= limit, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace selmer

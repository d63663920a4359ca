#pragma once

#include <map>
#include <vector>

#include "qabtors/rational.hpp"

namespace qabtors {

// Prime factorization of |n| as prime -> exponent.  Empty map for 0 and +-1.
std::map<Integer, unsigned> factor_integer(const Integer& n);

bool is_prime_int(const Integer& n);

// Squarefree test on |n|; false for 0.
bool is_squarefree_int(const Integer& n);

// sign(n) * product of primes dividing n to an odd power.  0 for 0.
Integer squarefree_kernel(const Integer& n);

// All e > 0 with e^2 | n, ascending.  n must be nonzero.
std::vector<Integer> square_divisors(const Integer& n);

// All d > 0 dividing |n|, ascending.  n must be nonzero.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace qabtors

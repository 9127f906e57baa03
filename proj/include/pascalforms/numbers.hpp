#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace pascalforms {

// Exact arbitrary-precision integer. Every scalar in this library is one of
// these; no operation anywhere rounds.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

// binom(n, k); zero whenever n or k is negative, or k > n.
Int binomial(long n, long k);

// n! for n >= 0; throws std::invalid_argument on negative input.
Int factorial(long n);

// Falling factorial x(x-1)...(x-k+1); the empty product (k = 0) is 1.
Int falling(long x, long k);

// Rising factorial x(x+1)...(x+k-1); the empty product (k = 0) is 1.
Int rising(long x, long k);

// Stirling partition number {n, k} (second kind), via the recurrence
// {n, k} = {n-1, k-1} + k {n-1, k} with {0, 0} = 1, memoized.
// Zero for negative arguments or k > n.
Int stirling_partition(long n, long k);

// Unsigned Stirling cycle number [n, k] (first kind), via
// [n, k] = [n-1, k-1] + (n-1) [n-1, k] with [0, 0] = 1, memoized.
Int stirling_cycle(long n, long k);

// Number of surjections from an n-set onto r ordered nonempty blocks,
// r! {n, r}. Zero when no surjection exists (including negative inputs).
Int surjection_count(long n, long r);

}  // namespace pascalforms

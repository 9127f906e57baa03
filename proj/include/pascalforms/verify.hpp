#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pascalforms/canonical.hpp"
#include "pascalforms/pascal.hpp"

// Executable checks for the matrix identities, the eigenvector theorem, the
// closed form of (P_n - I_n)^r, the convolution homomorphism, the colored
// cycle-partition identity, and the open-question explorer. Every check
// evaluates both sides exactly and compares entrywise.

namespace pascalforms {

// First discrepant entry of a failed check; indices are 1-based.
struct CheckWitness {
  Index row = 0;
  Index col = 0;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check_id;
  std::optional<long> n, r, m, p;
  bool passed = false;
  std::optional<CheckWitness> witness;  // present exactly when !passed
};

// One record per line:
//   check=<id> n=<n> r=<r> m=<m> passed=<true|false> [witness=(i,j): lhs=... rhs=...]
std::string format_report(const CheckReport& report);

// The four identities:
//   1: S_n^{-1} P_n S_n = bidiagonal target
//   2: cycle * shifted binomial * cycle^{-1} = diag(1..n)
//   3: C_n (P_n - I_n)^r C_n^{-1} = F_{n,r}
//   4: G_{n,r} H_{n,r} = D_{n,r}
// r is required (1 <= r <= n-1) for ids 3 and 4 and ignored otherwise.
CheckReport verify_identity(int id, Index n, std::optional<long> r = std::nullopt);

// Checks that the inverse of the shifted cycle matrix is the signed
// partition matrix and that its columns are eigenvectors of the shifted
// binomial matrix with eigenvalues 1..n.
CheckReport verify_theorem2(Index n);

// The two summation formulas counting colored cycle partitions:
//   left  = sum_{k=m+r}^{n}   [n,k] binom(k,m) r! {k-m, r}
//   right = sum_{k=m}^{n-r}   n^underline(n-k) binom(n-k-1, r-1) [k,m]
std::pair<Int, Int> combinatorial_sides(long n, long m, long r);

// Brute-force count of the same set: enumerate all permutations of [n]
// (their cycle decompositions are exactly the cycle partitions) and weight
// each by binom(#cycles, m) * surjection_count(#cycles - m, r).
// Bounded to n <= 9.
Int enumerate_colored_cycle_partitions(long n, long m, long r);

// power(P_n - I_n, r) vs the closed form, entrywise.
CheckReport verify_closed_form(Index n, long r);

// P_n(c) P_n(d) vs P_n(c * d).
CheckReport verify_convolution(const Seq& c, const Seq& d, Index n);

// For n in r+1..n_max, reports whether Q_n(c) has the same Smith diagonal
// as its diagonal part, for c the column-r Stirling sequence of the given
// kind. For the partition kind this follows from the identities; for the
// cycle kind it is open, so disagreements are reported, never raised.
std::vector<CheckReport> explore_open_question(StirlingKind kind, long r, Index n_max);

}  // namespace pascalforms

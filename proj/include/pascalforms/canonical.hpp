#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pascalforms/modmatrix.hpp"
#include "pascalforms/pascal.hpp"

namespace pascalforms {

// Smith normal form: nonnegative diagonal in a divisibility chain with
// zeros trailing, plus optional unimodular certificates (U, V) satisfying
// U A V = diag(diagonal).
struct SmithForm {
  std::vector<Int> diagonal;
  std::optional<std::pair<IntMatrix, IntMatrix>> transforms;
};

// Jordan block data for a unipotent matrix over F_p: the single eigenvalue
// residue and the block sizes, sorted descending. Sizes sum to n.
struct JordanSpec {
  std::int64_t eigenvalue = 1;
  std::vector<int> block_sizes;

  friend bool operator==(const JordanSpec&, const JordanSpec&) = default;
};

// Integer Smith normal form. Pivot rule: smallest nonzero absolute value in
// the remaining submatrix, ties broken by row then column, so output is
// deterministic. Certificates roughly triple the work and are off by default.
SmithForm smith_normal_form(const IntMatrix& a, bool want_transforms = false);

// Smith form of diag(d) by sorting p-adic valuations per prime; entries are
// factored by trial division. Zeros of the input become trailing zeros.
std::vector<Int> snf_of_diagonal(const std::vector<Int>& d);

// The Smith diagonal of (P_n - I_n)^r predicted from the rising-factorial
// diagonal (1^overline(r), ..., (n-r)^overline(r), 0, ..., 0).
std::vector<Int> predicted_snf_diagonal(Index n, long r);

// Unimodular (U, V) built from the Stirling cycle conjugation and the
// banded inverse pair, with U (P_n - I_n)^r V = [[D_{n,r}, 0], [0, 0]].
std::pair<IntMatrix, IntMatrix> explicit_equivalence(Index n, long r);

// Jordan block sizes of a unipotent matrix over F_p from the rank sequence
// of powers of A - I. Rejects non-unipotent input.
JordanSpec jordan_blocks_unipotent_mod_p(const ModMatrix& a);

// Predicted Jordan form of P_n mod p: floor(n/p) blocks of size p plus one
// of size n mod p when nonzero; eigenvalue 1.
JordanSpec predicted_pascal_jordan_mod_p(Index n, std::int64_t p);

// Conjugates a near-Jordan matrix (constant diagonal, nonzero subdiagonal)
// to the unit-subdiagonal Jordan block. Returns the cumulative-product
// scaling diagonal D = (1, c_1, c_1 c_2, ...) and D^{-1} J D; each entry is
// moved as d_j J_ij / d_i with exact divisibility checked.
std::pair<std::vector<Int>, IntMatrix> near_jordan_normalize(const IntMatrix& j);
std::pair<std::vector<std::int64_t>, ModMatrix> near_jordan_normalize(const ModMatrix& j);
std::pair<std::vector<std::int64_t>, ModMatrix> near_jordan_normalize(const IntMatrix& j,
                                                                      std::int64_t p);

// Smallest e with (P_n mod p - I)^e = 0; equals min(p, n).
long min_poly_exponent_mod_p(Index n, std::int64_t p);

// Elementary divisors: for each prime dividing a nonzero Smith diagonal
// entry, the multiset of its exponents across the chain (sorted ascending).
std::map<Int, std::vector<int>> elementary_divisors(const IntMatrix& a);

}  // namespace pascalforms

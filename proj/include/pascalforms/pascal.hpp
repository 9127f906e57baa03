#pragma once

#include <vector>

#include "pascalforms/matrix.hpp"

// Constructors for the Pascal/Stirling matrix families and the sequence
// operations behind the generalized Pascal matrices. All constructors are
// pure; dimensions are 1-based in the documentation below.

namespace pascalforms {

// Finite prefix (c_0, ..., c_{L-1}) of an integer sequence. Building an
// n-by-n matrix from a sequence requires at least n terms; there is no
// silent zero-padding.
class Seq {
 public:
  explicit Seq(std::vector<Int> prefix);

  // 0, 1, 1, 1, ...: one structure on every nonempty label set, so the
  // r-fold binomial self-convolution counts ordered partitions into r blocks.
  static Seq sets(Index length);
  // Column r of the Stirling partition triangle: ({i, r})_{i >= 0}.
  static Seq stirling_partition_column(long r, Index length);
  // Column r of the Stirling cycle triangle: ([i, r])_{i >= 0}.
  static Seq stirling_cycle_column(long r, Index length);

  Index length() const { return static_cast<Index>(terms_.size()); }
  const Int& operator[](Index i) const { return terms_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& terms() const { return terms_; }

  friend bool operator==(const Seq& a, const Seq& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Int> terms_;
};

// P_n, the lower-triangular matrix (binom(i-1, j-1)).
IntMatrix pascal(Index n);

enum class StirlingKind { partition, cycle };

// S_n = ({i-1, j-1}) or C_n = ([i-1, j-1]).
IntMatrix stirling_matrix(StirlingKind kind, Index n);

enum class ShiftedKind { binomial, cycle, signed_partition };

// The 1-indexed matrices conjugated in the second identity:
// cycle          ([i, j]),
// signed_partition ((-1)^(i-j) {i, j}),
// binomial       the lower-triangular (binom(i, j-1)), whose diagonal is
//                (1, 2, ..., n) and whose eigenvector matrix is the signed
//                partition matrix.
IntMatrix shifted_matrix(ShiftedKind kind, Index n);

// The bidiagonal form of P_n: unit diagonal and subdiagonal (1, 2, ..., n-1).
// This is S_n^{-1} P_n S_n, a near-Jordan matrix for eigenvalue 1.
IntMatrix bidiagonal_target(Index n);

// F_{n,r}: entry (i, j) = (i-1)^underline(i-j) * binom(i-j-1, r-1).
// Block form [[0, 0], [G_{n,r}, 0]] with the n-r square block lower left.
IntMatrix f_matrix(Index n, long r);

// G_{n,r}: the (n-r)-square lower-left block of F_{n,r}.
IntMatrix g_matrix(Index n, long r);

// H_{n,r}: entry (i, j) = (-1)^(i-j) binom(i-1, j-1) r^underline(i-j);
// banded, zero whenever i-j > r.
IntMatrix h_matrix(Index n, long r);

// D_{n,r} = diag(1^overline(r), 2^overline(r), ..., (n-r)^overline(r)),
// the diagonal of G_{n,r}.
IntMatrix d_matrix(Index n, long r);

// P_n(c) = (c_{i-j} binom(i-1, j-1)).
IntMatrix generalized_pascal(const Seq& c, Index n);

// Binomial (exponential) convolution: (c*d)_m = sum_i binom(m, i) c_i d_{m-i},
// truncated to the first `length` terms.
Seq binomial_convolve(const Seq& c, const Seq& d, Index length);

// Q_n(c): the (n-r)-square lower-left block of P_n(c) for a sequence
// beginning with r zeros. Rejects sequences that do not start with r zeros.
IntMatrix q_matrix(const Seq& c, Index n, long r);

// The closed form of (P_n - I_n)^r: entry (i, j) = r! {i-j, r} binom(i-1, j-1).
IntMatrix closed_form_power(Index n, long r);

}  // namespace pascalforms

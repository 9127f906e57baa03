#pragma once

#include <cstdint>

#include "pascalforms/matrix.hpp"

namespace pascalforms {

// Trial division; moduli here are small primes, so nothing fancier is needed.
bool is_prime(std::int64_t p);

// Inverse of a modulo the prime p, as a residue in [0, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

// Square matrix over F_p. The modulus is validated as prime on
// construction and entries are always normalized into [0, p).
class ModMatrix {
 public:
  using Entries = DenseMatrix<std::int64_t>;

  // Validates the modulus and reduces every entry into [0, p).
  ModMatrix(Entries entries, std::int64_t modulus);

  static ModMatrix identity(Index n, std::int64_t modulus);
  static ModMatrix zero(Index n, std::int64_t modulus);

  Index size() const { return entries_.rows(); }
  std::int64_t modulus() const { return modulus_; }
  const Entries& entries() const { return entries_; }
  std::int64_t operator()(Index i, Index j) const { return entries_(i, j); }

  bool is_zero() const { return (entries_.array() == 0).all(); }
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.modulus_ == b.modulus_ && a.entries_.rows() == b.entries_.rows() &&
           (a.entries_.array() == b.entries_.array()).all();
  }

 private:
  Entries entries_;
  std::int64_t modulus_;
};

// Entrywise reduction of an exact integer matrix into [0, p).
ModMatrix reduce_mod(const IntMatrix& a, std::int64_t p);

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b);
ModMatrix mod_sub(const ModMatrix& a, const ModMatrix& b);
ModMatrix mod_power(const ModMatrix& a, long r);

// Rank over F_p by Gaussian elimination.
int rank_mod(const ModMatrix& a);

}  // namespace pascalforms

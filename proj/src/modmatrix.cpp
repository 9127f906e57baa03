#include "pascalforms/modmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace pascalforms {

namespace {

// Products of two residues must fit in int64; primes this large are far
// beyond anything the matrix families need.
constexpr std::int64_t kMaxModulus = std::int64_t(1) << 31;

void require_valid_modulus(std::int64_t p) {
  detail::require(p < kMaxModulus, "modulus too large");
  detail::require(is_prime(p), "modulus is not prime");
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t f = 3; f * f <= p; f += 2)
    if (p % f == 0) return false;
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  detail::require(a != 0, "mod_inverse: zero has no inverse");
  // extended Euclid
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  std::int64_t inv = old_s % p;
  if (inv < 0) inv += p;
  return inv;
}

ModMatrix::ModMatrix(Entries entries, std::int64_t modulus)
    : entries_(std::move(entries)), modulus_(modulus) {
  require_valid_modulus(modulus_);
  detail::require(entries_.rows() == entries_.cols() && entries_.rows() >= 1,
                  "ModMatrix: matrix must be square with dimension >= 1");
  for (Index i = 0; i < entries_.rows(); ++i)
    for (Index j = 0; j < entries_.cols(); ++j) {
      std::int64_t e = entries_(i, j) % modulus_;
      if (e < 0) e += modulus_;
      entries_(i, j) = e;
    }
}

ModMatrix ModMatrix::identity(Index n, std::int64_t modulus) {
  return ModMatrix(Entries::Identity(n, n), modulus);
}

ModMatrix ModMatrix::zero(Index n, std::int64_t modulus) {
  return ModMatrix(Entries::Zero(n, n), modulus);
}

ModMatrix reduce_mod(const IntMatrix& a, std::int64_t p) {
  require_valid_modulus(p);
  detail::require(a.rows() == a.cols(), "reduce_mod: matrix must be square");
  ModMatrix::Entries e(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      Int m = a(i, j) % p;
      if (m < 0) m += p;
      e(i, j) = static_cast<std::int64_t>(m);
    }
  return ModMatrix(std::move(e), p);
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b) {
  detail::require(a.modulus() == b.modulus(), "mod_mul: modulus mismatch");
  detail::require(a.size() == b.size(), "mod_mul: dimension mismatch");
  const Index n = a.size();
  const std::int64_t p = a.modulus();
  ModMatrix::Entries out = ModMatrix::Entries::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (Index k = 0; k < n; ++k) acc = (acc + a(i, k) * b(k, j)) % p;
      out(i, j) = acc;
    }
  return ModMatrix(std::move(out), p);
}

ModMatrix mod_sub(const ModMatrix& a, const ModMatrix& b) {
  detail::require(a.modulus() == b.modulus(), "mod_sub: modulus mismatch");
  detail::require(a.size() == b.size(), "mod_sub: dimension mismatch");
  return ModMatrix(a.entries() - b.entries(), a.modulus());
}

ModMatrix mod_power(const ModMatrix& a, long r) {
  detail::require(r >= 0, "mod_power: negative exponent");
  ModMatrix result = ModMatrix::identity(a.size(), a.modulus());
  ModMatrix base = a;
  while (r > 0) {
    if (r & 1) result = mod_mul(result, base);
    r >>= 1;
    if (r > 0) base = mod_mul(base, base);
  }
  return result;
}

int rank_mod(const ModMatrix& a) {
  const Index n = a.size();
  const std::int64_t p = a.modulus();
  ModMatrix::Entries m = a.entries();
  int rank = 0;
  for (Index col = 0; col < n && rank < n; ++col) {
    Index pivot = -1;
    for (Index i = rank; i < n; ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    const std::int64_t inv = mod_inverse(m(rank, col), p);
    for (Index j = col; j < n; ++j) m(rank, j) = m(rank, j) * inv % p;
    for (Index i = rank + 1; i < n; ++i) {
      const std::int64_t f = m(i, col);
      if (f == 0) continue;
      for (Index j = col; j < n; ++j) {
        m(i, j) = (m(i, j) - f * m(rank, j)) % p;
        if (m(i, j) < 0) m(i, j) += p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace pascalforms

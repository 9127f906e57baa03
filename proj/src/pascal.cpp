#include "pascalforms/pascal.hpp"

#include <stdexcept>
#include <utility>

namespace pascalforms {

namespace {

void require_dimension(Index n) {
  detail::require(n >= 1, "matrix dimension must be >= 1");
}

void require_band(Index n, long r) {
  require_dimension(n);
  detail::require(r >= 1 && r <= n - 1, "r must satisfy 1 <= r <= n-1");
}

}  // namespace

Seq::Seq(std::vector<Int> prefix) : terms_(std::move(prefix)) {}

Seq Seq::sets(Index length) {
  std::vector<Int> t(static_cast<std::size_t>(length), Int(1));
  if (length > 0) t[0] = 0;
  return Seq(std::move(t));
}

Seq Seq::stirling_partition_column(long r, Index length) {
  std::vector<Int> t(static_cast<std::size_t>(length));
  for (Index i = 0; i < length; ++i) t[static_cast<std::size_t>(i)] = stirling_partition(i, r);
  return Seq(std::move(t));
}

Seq Seq::stirling_cycle_column(long r, Index length) {
  std::vector<Int> t(static_cast<std::size_t>(length));
  for (Index i = 0; i < length; ++i) t[static_cast<std::size_t>(i)] = stirling_cycle(i, r);
  return Seq(std::move(t));
}

IntMatrix pascal(Index n) {
  require_dimension(n);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j) m(i, j) = binomial(i, j);
  return m;
}

IntMatrix stirling_matrix(StirlingKind kind, Index n) {
  require_dimension(n);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j)
      m(i, j) = kind == StirlingKind::partition ? stirling_partition(i, j)
                                                : stirling_cycle(i, j);
  return m;
}

IntMatrix shifted_matrix(ShiftedKind kind, Index n) {
  require_dimension(n);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 1; i <= n; ++i)
    for (Index j = 1; j <= i; ++j) {
      Int e;
      switch (kind) {
        case ShiftedKind::binomial:
          e = binomial(i, j - 1);
          break;
        case ShiftedKind::cycle:
          e = stirling_cycle(i, j);
          break;
        case ShiftedKind::signed_partition:
          e = stirling_partition(i, j);
          if ((i - j) % 2 != 0) e = -e;
          break;
      }
      m(i - 1, j - 1) = e;
    }
  return m;
}

IntMatrix bidiagonal_target(Index n) {
  require_dimension(n);
  IntMatrix m = IntMatrix::Identity(n, n);
  for (Index k = 1; k < n; ++k) m(k, k - 1) = Int(k);
  return m;
}

IntMatrix f_matrix(Index n, long r) {
  require_band(n, r);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 1; i <= n; ++i)
    for (Index j = 1; j <= i; ++j)
      m(i - 1, j - 1) = falling(i - 1, i - j) * binomial(i - j - 1, r - 1);
  return m;
}

IntMatrix g_matrix(Index n, long r) {
  require_band(n, r);
  const Index s = n - r;
  IntMatrix m = IntMatrix::Zero(s, s);
  for (Index i = 1; i <= s; ++i)
    for (Index j = 1; j <= i; ++j)
      m(i - 1, j - 1) = falling(i + r - 1, i + r - j) * binomial(i + r - j - 1, r - 1);
  return m;
}

IntMatrix h_matrix(Index n, long r) {
  require_band(n, r);
  const Index s = n - r;
  IntMatrix m = IntMatrix::Zero(s, s);
  for (Index i = 1; i <= s; ++i)
    for (Index j = 1; j <= i; ++j) {
      Int e = binomial(i - 1, j - 1) * falling(r, i - j);
      if ((i - j) % 2 != 0) e = -e;
      m(i - 1, j - 1) = e;
    }
  return m;
}

IntMatrix d_matrix(Index n, long r) {
  require_band(n, r);
  const Index s = n - r;
  IntMatrix m = IntMatrix::Zero(s, s);
  for (Index i = 1; i <= s; ++i) m(i - 1, i - 1) = rising(i, r);
  return m;
}

IntMatrix generalized_pascal(const Seq& c, Index n) {
  require_dimension(n);
  detail::require(c.length() >= n, "generalized_pascal: sequence prefix shorter than dimension");
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 1; i <= n; ++i)
    for (Index j = 1; j <= i; ++j) m(i - 1, j - 1) = c[i - j] * binomial(i - 1, j - 1);
  return m;
}

Seq binomial_convolve(const Seq& c, const Seq& d, Index length) {
  detail::require(c.length() >= length && d.length() >= length,
                  "binomial_convolve: sequence prefixes shorter than requested length");
  std::vector<Int> out(static_cast<std::size_t>(length));
  for (Index m = 0; m < length; ++m) {
    Int sum = 0;
    for (Index i = 0; i <= m; ++i) sum += binomial(m, i) * c[i] * d[m - i];
    out[static_cast<std::size_t>(m)] = sum;
  }
  return Seq(std::move(out));
}

IntMatrix q_matrix(const Seq& c, Index n, long r) {
  require_band(n, r);
  detail::require(c.length() >= n, "q_matrix: sequence prefix shorter than dimension");
  for (long i = 0; i < r; ++i)
    detail::require(c[i] == 0, "q_matrix: sequence does not start with r zeros");
  const IntMatrix full = generalized_pascal(c, n);
  return full.block(r, 0, n - r, n - r);
}

IntMatrix closed_form_power(Index n, long r) {
  require_dimension(n);
  detail::require(r >= 0, "closed_form_power: negative exponent");
  const Int r_fact = factorial(r);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 1; i <= n; ++i)
    for (Index j = 1; j <= i; ++j)
      m(i - 1, j - 1) = r_fact * stirling_partition(i - j, r) * binomial(i - 1, j - 1);
  return m;
}

}  // namespace pascalforms

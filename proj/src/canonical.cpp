#include "pascalforms/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace pascalforms {

namespace {

// Trial-division factorization of a positive integer. Diagonal entries at
// the scales this library works at are products of small rising factorials,
// so nothing stronger is needed.
std::map<Int, int> factorize(Int x) {
  std::map<Int, int> factors;
  for (Int p = 2; p * p <= x; ++p) {
    while (x % p == 0) {
      ++factors[p];
      x /= p;
    }
  }
  if (x > 1) ++factors[x];
  return factors;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, bool want_transforms) {
  detail::require(a.rows() == a.cols() && a.rows() >= 1,
                  "smith_normal_form: matrix must be square with dimension >= 1");
  const Index n = a.rows();
  IntMatrix m = a;
  IntMatrix u, v;
  if (want_transforms) {
    u = IntMatrix::Identity(n, n);
    v = IntMatrix::Identity(n, n);
  }

  for (Index t = 0; t < n; ++t) {
    bool submatrix_zero = false;
    while (true) {
      // pivot: smallest nonzero absolute value, ties by row then column
      Index pi = -1, pj = -1;
      for (Index i = t; i < n; ++i)
        for (Index j = t; j < n; ++j) {
          if (m(i, j) == 0) continue;
          if (pi < 0 || detail::abs_value(m(i, j)) < detail::abs_value(m(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        submatrix_zero = true;
        break;
      }
      if (pi != t) {
        m.row(t).swap(m.row(pi));
        if (want_transforms) u.row(t).swap(u.row(pi));
      }
      if (pj != t) {
        m.col(t).swap(m.col(pj));
        if (want_transforms) v.col(t).swap(v.col(pj));
      }

      // Euclid steps down column t and across row t; any nonzero remainder
      // is strictly smaller than the pivot, so re-picking converges.
      bool clean = true;
      for (Index i = t + 1; i < n; ++i) {
        if (m(i, t) == 0) continue;
        const Int q = m(i, t) / m(t, t);
        if (q != 0) {
          m.row(i) -= q * m.row(t);
          if (want_transforms) u.row(i) -= q * u.row(t);
        }
        if (m(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (m(t, j) == 0) continue;
        const Int q = m(t, j) / m(t, t);
        if (q != 0) {
          m.col(j) -= q * m.col(t);
          if (want_transforms) v.col(j) -= q * v.col(t);
        }
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility fix-up: fold a row containing a non-multiple into row t
      // and reduce again. The pivot gcd strictly shrinks, so this terminates.
      bool divides_all = true;
      for (Index i = t + 1; i < n && divides_all; ++i)
        for (Index j = t + 1; j < n && divides_all; ++j)
          if (m(i, j) % m(t, t) != 0) {
            m.row(t) += m.row(i);
            if (want_transforms) u.row(t) += u.row(i);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (submatrix_zero) break;
  }

  for (Index t = 0; t < n; ++t) {
    if (m(t, t) < 0) {
      m.row(t) = -m.row(t);
      if (want_transforms) u.row(t) = -u.row(t);
    }
  }

  SmithForm result;
  result.diagonal.reserve(static_cast<std::size_t>(n));
  for (Index t = 0; t < n; ++t) result.diagonal.push_back(m(t, t));
  if (want_transforms) result.transforms = {std::move(u), std::move(v)};
  return result;
}

std::vector<Int> snf_of_diagonal(const std::vector<Int>& d) {
  std::vector<std::map<Int, int>> entry_factors;
  for (const Int& e : d)
    if (e != 0) entry_factors.push_back(factorize(detail::abs_value(e)));
  const std::size_t nonzero = entry_factors.size();

  std::map<Int, std::vector<int>> valuations;
  for (std::size_t k = 0; k < nonzero; ++k)
    for (const auto& [p, e] : entry_factors[k]) {
      auto& vals = valuations.try_emplace(p, std::vector<int>(nonzero, 0)).first->second;
      vals[k] = e;
    }

  std::vector<Int> out(nonzero, Int(1));
  for (auto& [p, vals] : valuations) {
    std::sort(vals.begin(), vals.end());
    for (std::size_t k = 0; k < nonzero; ++k)
      for (int e = 0; e < vals[k]; ++e) out[k] *= p;
  }
  out.resize(d.size(), Int(0));
  return out;
}

std::vector<Int> predicted_snf_diagonal(Index n, long r) {
  detail::require(n >= 1, "predicted_snf_diagonal: dimension must be >= 1");
  detail::require(r >= 1, "predicted_snf_diagonal: r must be >= 1");
  std::vector<Int> diag(static_cast<std::size_t>(n), Int(0));
  for (Index i = 1; i + r <= n; ++i) diag[static_cast<std::size_t>(i - 1)] = rising(i, r);
  return snf_of_diagonal(diag);
}

std::pair<IntMatrix, IntMatrix> explicit_equivalence(Index n, long r) {
  detail::require(n >= 1 && r >= 1 && r <= n - 1,
                  "explicit_equivalence: r must satisfy 1 <= r <= n-1");
  const IntMatrix cyc = stirling_matrix(StirlingKind::cycle, n);
  const IntMatrix cyc_inv = inverse_unitriangular(cyc);
  const IntMatrix eye_top = IntMatrix::Identity(n - r, n - r);
  const IntMatrix eye_r = IntMatrix::Identity(r, r);
  // [[0, I_{n-r}], [I_r, 0]]: moves the nonzero block of F_{n,r} to the top left.
  const IntMatrix swap = block2x2({}, eye_top, eye_r, {});
  // [[H_{n,r}, 0], [0, I_r]]: unimodular since H is unit triangular.
  const IntMatrix clear = block2x2(h_matrix(n, r), {}, {}, eye_r);
  return {mul(swap, cyc), mul(cyc_inv, clear)};
}

JordanSpec jordan_blocks_unipotent_mod_p(const ModMatrix& a) {
  const Index n = a.size();
  const ModMatrix nilpotent = mod_sub(a, ModMatrix::identity(n, a.modulus()));
  detail::require(mod_power(nilpotent, n).is_zero(),
                  "jordan_blocks_unipotent_mod_p: matrix is not unipotent");

  // blocks_ge[k-1] = #blocks of size >= k = rank((A-I)^{k-1}) - rank((A-I)^k)
  std::vector<int> blocks_ge;
  int prev_rank = static_cast<int>(n);
  ModMatrix pw = nilpotent;
  while (prev_rank > 0) {
    const int rk = pw.is_zero() ? 0 : rank_mod(pw);
    blocks_ge.push_back(prev_rank - rk);
    prev_rank = rk;
    if (rk > 0) pw = mod_mul(pw, nilpotent);
  }

  JordanSpec blocks;
  blocks.eigenvalue = 1;
  for (std::size_t k = blocks_ge.size(); k >= 1; --k) {
    const int ge_next = k < blocks_ge.size() ? blocks_ge[k] : 0;
    const int exact = blocks_ge[k - 1] - ge_next;
    for (int c = 0; c < exact; ++c) blocks.block_sizes.push_back(static_cast<int>(k));
  }
  return blocks;
}

JordanSpec predicted_pascal_jordan_mod_p(Index n, std::int64_t p) {
  detail::require(n >= 1, "predicted_pascal_jordan_mod_p: dimension must be >= 1");
  detail::require(is_prime(p), "predicted_pascal_jordan_mod_p: modulus is not prime");
  JordanSpec blocks;
  blocks.eigenvalue = 1;
  for (Index c = 0; c < n / p; ++c) blocks.block_sizes.push_back(static_cast<int>(p));
  if (n % p != 0) blocks.block_sizes.push_back(static_cast<int>(n % p));
  return blocks;
}

namespace {

Int near_jordan_diagonal_value(const IntMatrix& j) {
  detail::require(j.rows() == j.cols() && j.rows() >= 1,
                  "near_jordan_normalize: matrix must be square with dimension >= 1");
  const Index n = j.rows();
  const Int lambda = j(0, 0);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      if (i == k) {
        detail::require(j(i, k) == lambda, "near_jordan_normalize: diagonal is not constant");
      } else if (i != k + 1) {
        detail::require(j(i, k) == 0, "near_jordan_normalize: matrix is not near-Jordan");
      }
    }
  return lambda;
}

}  // namespace

std::pair<std::vector<Int>, IntMatrix> near_jordan_normalize(const IntMatrix& j) {
  near_jordan_diagonal_value(j);
  const Index n = j.rows();
  std::vector<Int> scaling(static_cast<std::size_t>(n));
  scaling[0] = 1;
  for (Index k = 1; k < n; ++k) {
    detail::require(j(k, k - 1) != 0, "near_jordan_normalize: zero subdiagonal entry");
    scaling[static_cast<std::size_t>(k)] = scaling[static_cast<std::size_t>(k - 1)] * j(k, k - 1);
  }
  IntMatrix out = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      if (j(i, k) == 0) continue;
      const Int num = j(i, k) * scaling[static_cast<std::size_t>(k)];
      const Int den = scaling[static_cast<std::size_t>(i)];
      if (num % den != 0)
        throw std::logic_error("near_jordan_normalize: inexact division");
      out(i, k) = num / den;
    }
  return {std::move(scaling), std::move(out)};
}

std::pair<std::vector<std::int64_t>, ModMatrix> near_jordan_normalize(const ModMatrix& j) {
  const Index n = j.size();
  const std::int64_t p = j.modulus();
  const std::int64_t lambda = j(0, 0);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      if (i == k) {
        detail::require(j(i, k) == lambda, "near_jordan_normalize: diagonal is not constant");
      } else if (i != k + 1) {
        detail::require(j(i, k) == 0, "near_jordan_normalize: matrix is not near-Jordan");
      }
    }
  std::vector<std::int64_t> scaling(static_cast<std::size_t>(n));
  scaling[0] = 1;
  for (Index k = 1; k < n; ++k) {
    detail::require(j(k, k - 1) != 0, "near_jordan_normalize: zero subdiagonal entry");
    scaling[static_cast<std::size_t>(k)] =
        scaling[static_cast<std::size_t>(k - 1)] * j(k, k - 1) % p;
  }
  ModMatrix::Entries out = ModMatrix::Entries::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      if (j(i, k) == 0) continue;
      const std::int64_t inv = mod_inverse(scaling[static_cast<std::size_t>(i)], p);
      out(i, k) = j(i, k) * scaling[static_cast<std::size_t>(k)] % p * inv % p;
    }
  return {std::move(scaling), ModMatrix(std::move(out), p)};
}

std::pair<std::vector<std::int64_t>, ModMatrix> near_jordan_normalize(const IntMatrix& j,
                                                                      std::int64_t p) {
  return near_jordan_normalize(reduce_mod(j, p));
}

long min_poly_exponent_mod_p(Index n, std::int64_t p) {
  detail::require(n >= 1, "min_poly_exponent_mod_p: dimension must be >= 1");
  const ModMatrix reduced = reduce_mod(pascal(n), p);
  const ModMatrix nilpotent = mod_sub(reduced, ModMatrix::identity(n, p));
  long e = 1;
  ModMatrix pw = nilpotent;
  while (!pw.is_zero()) {
    pw = mod_mul(pw, nilpotent);
    ++e;
  }
  return e;
}

std::map<Int, std::vector<int>> elementary_divisors(const IntMatrix& a) {
  const SmithForm snf = smith_normal_form(a);
  std::map<Int, std::vector<int>> out;
  for (const Int& d : snf.diagonal) {
    if (d == 0) continue;
    for (const auto& [p, e] : factorize(d)) out[p].push_back(e);
  }
  for (auto& [p, exponents] : out) std::sort(exponents.begin(), exponents.end());
  return out;
}

}  // namespace pascalforms

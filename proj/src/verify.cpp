#include "pascalforms/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pascalforms {

namespace {

CheckReport compare(std::string check_id, const IntMatrix& lhs, const IntMatrix& rhs) {
  CheckReport report;
  report.check_id = std::move(check_id);
  const auto mismatch = first_mismatch(lhs, rhs);
  report.passed = !mismatch.has_value();
  if (mismatch) {
    CheckWitness w;
    w.row = mismatch->first + 1;
    w.col = mismatch->second + 1;
    w.lhs = lhs(mismatch->first, mismatch->second).str();
    w.rhs = rhs(mismatch->first, mismatch->second).str();
    report.witness = std::move(w);
  }
  return report;
}

CheckReport compare_diagonals(std::string check_id, const std::vector<Int>& lhs,
                              const std::vector<Int>& rhs) {
  CheckReport report;
  report.check_id = std::move(check_id);
  report.passed = lhs == rhs;
  if (!report.passed) {
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      if (k >= rhs.size() || lhs[k] != rhs[k]) {
        CheckWitness w;
        w.row = static_cast<Index>(k) + 1;
        w.col = static_cast<Index>(k) + 1;
        w.lhs = lhs[k].str();
        w.rhs = k < rhs.size() ? rhs[k].str() : std::string("<missing>");
        report.witness = std::move(w);
        break;
      }
    }
  }
  return report;
}

}  // namespace

std::string format_report(const CheckReport& report) {
  std::ostringstream os;
  os << "check=" << report.check_id;
  if (report.n) os << " n=" << *report.n;
  if (report.r) os << " r=" << *report.r;
  if (report.m) os << " m=" << *report.m;
  if (report.p) os << " p=" << *report.p;
  os << " passed=" << (report.passed ? "true" : "false");
  if (report.witness) {
    os << " witness=(" << report.witness->row << "," << report.witness->col
       << "): lhs=" << report.witness->lhs << " rhs=" << report.witness->rhs;
  }
  return os.str();
}

CheckReport verify_identity(int id, Index n, std::optional<long> r) {
  detail::require(n >= 1, "verify_identity: dimension must be >= 1");
  CheckReport report;
  switch (id) {
    case 1: {
      const IntMatrix p = pascal(n);
      const IntMatrix s = stirling_matrix(StirlingKind::partition, n);
      const IntMatrix lhs = mul(mul(inverse_unitriangular(s), p), s);
      report = compare("identity1", lhs, bidiagonal_target(n));
      break;
    }
    case 2: {
      const IntMatrix cyc = shifted_matrix(ShiftedKind::cycle, n);
      const IntMatrix lhs = mul(mul(cyc, shifted_matrix(ShiftedKind::binomial, n)),
                                inverse_unitriangular(cyc));
      IntMatrix diag = IntMatrix::Zero(n, n);
      for (Index i = 0; i < n; ++i) diag(i, i) = Int(i + 1);
      report = compare("identity2", lhs, diag);
      break;
    }
    case 3: {
      detail::require(r && *r >= 1 && *r <= n - 1, "verify_identity: r must satisfy 1 <= r <= n-1");
      const IntMatrix cyc = stirling_matrix(StirlingKind::cycle, n);
      const IntMatrix pw = power(IntMatrix(pascal(n) - IntMatrix::Identity(n, n)), *r);
      const IntMatrix lhs = mul(mul(cyc, pw), inverse_unitriangular(cyc));
      report = compare("identity3", lhs, f_matrix(n, *r));
      break;
    }
    case 4: {
      detail::require(r && *r >= 1 && *r <= n - 1, "verify_identity: r must satisfy 1 <= r <= n-1");
      report = compare("identity4", mul(g_matrix(n, *r), h_matrix(n, *r)), d_matrix(n, *r));
      break;
    }
    default:
      throw std::invalid_argument("verify_identity: id must be 1, 2, 3, or 4");
  }
  report.n = n;
  if (id == 3 || id == 4) report.r = *r;
  return report;
}

CheckReport verify_theorem2(Index n) {
  detail::require(n >= 1, "verify_theorem2: dimension must be >= 1");
  const IntMatrix eigenvectors = inverse_unitriangular(shifted_matrix(ShiftedKind::cycle, n));
  CheckReport report =
      compare("theorem2", eigenvectors, shifted_matrix(ShiftedKind::signed_partition, n));
  if (report.passed) {
    // column j of the inverse is an eigenvector with eigenvalue j
    IntMatrix scaled = eigenvectors;
    for (Index j = 0; j < n; ++j) scaled.col(j) *= Int(j + 1);
    report = compare("theorem2", mul(shifted_matrix(ShiftedKind::binomial, n), eigenvectors),
                     scaled);
  }
  report.n = n;
  return report;
}

std::pair<Int, Int> combinatorial_sides(long n, long m, long r) {
  detail::require(n >= 0 && m >= 0 && r >= 1, "combinatorial_sides: bad parameters");
  Int left = 0;
  for (long k = m + r; k <= n; ++k)
    left += stirling_cycle(n, k) * binomial(k, m) * surjection_count(k - m, r);
  Int right = 0;
  for (long k = m; k <= n - r; ++k)
    right += falling(n, n - k) * binomial(n - k - 1, r - 1) * stirling_cycle(k, m);
  return {left, right};
}

Int enumerate_colored_cycle_partitions(long n, long m, long r) {
  detail::require(n >= 1 && n <= 9, "enumerate_colored_cycle_partitions: n must be in 1..9");
  detail::require(m >= 0 && r >= 1, "enumerate_colored_cycle_partitions: bad parameters");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  std::vector<bool> seen(static_cast<std::size_t>(n));
  do {
    std::fill(seen.begin(), seen.end(), false);
    long cycles = 0;
    for (long s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      ++cycles;
      for (long t = s; !seen[static_cast<std::size_t>(t)]; t = perm[static_cast<std::size_t>(t)])
        seen[static_cast<std::size_t>(t)] = true;
    }
    total += binomial(cycles, m) * surjection_count(cycles - m, r);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

CheckReport verify_closed_form(Index n, long r) {
  detail::require(n >= 1, "verify_closed_form: dimension must be >= 1");
  detail::require(r >= 0, "verify_closed_form: negative exponent");
  const IntMatrix pw = power(IntMatrix(pascal(n) - IntMatrix::Identity(n, n)), r);
  CheckReport report = compare("closed-form", pw, closed_form_power(n, r));
  report.n = n;
  report.r = r;
  return report;
}

CheckReport verify_convolution(const Seq& c, const Seq& d, Index n) {
  detail::require(c.length() >= n && d.length() >= n,
                  "verify_convolution: sequence prefixes shorter than dimension");
  const IntMatrix lhs = mul(generalized_pascal(c, n), generalized_pascal(d, n));
  const IntMatrix rhs = generalized_pascal(binomial_convolve(c, d, n), n);
  CheckReport report = compare("convolution", lhs, rhs);
  report.n = n;
  return report;
}

std::vector<CheckReport> explore_open_question(StirlingKind kind, long r, Index n_max) {
  detail::require(r >= 1, "explore_open_question: r must be >= 1");
  detail::require(n_max >= r + 1, "explore_open_question: n_max must be at least r+1");
  const std::string id = kind == StirlingKind::partition ? "explore-stirling-partition"
                                                         : "explore-stirling-cycle";
  std::vector<CheckReport> reports;
  for (Index n = r + 1; n <= n_max; ++n) {
    const Seq c = kind == StirlingKind::partition ? Seq::stirling_partition_column(r, n)
                                                  : Seq::stirling_cycle_column(r, n);
    const IntMatrix q = q_matrix(c, n, r);
    std::vector<Int> diag(static_cast<std::size_t>(q.rows()));
    for (Index i = 0; i < q.rows(); ++i) diag[static_cast<std::size_t>(i)] = q(i, i);
    CheckReport report =
        compare_diagonals(id, smith_normal_form(q).diagonal, snf_of_diagonal(diag));
    report.n = n;
    report.r = r;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace pascalforms

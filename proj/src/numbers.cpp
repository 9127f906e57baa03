#include "pascalforms/numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace pascalforms {

namespace {

// Triangular memo table for a Stirling-style recurrence. Rows are built on
// demand behind a mutex, so concurrent lookups behave as if recomputed.
class StirlingTable {
 public:
  enum class Kind { partition, cycle };

  explicit StirlingTable(Kind kind) : kind_(kind) { rows_.push_back({Int(1)}); }

  Int at(long n, long k) {
    std::scoped_lock lock(mu_);
    while (static_cast<long>(rows_.size()) <= n) grow();
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  void grow() {
    const long n = static_cast<long>(rows_.size());
    const std::vector<Int>& prev = rows_.back();
    std::vector<Int> row(static_cast<std::size_t>(n) + 1);
    row[0] = 0;
    for (long k = 1; k <= n; ++k) {
      const Int& diag = prev[static_cast<std::size_t>(k - 1)];
      const Int up = k < n ? prev[static_cast<std::size_t>(k)] : Int(0);
      row[static_cast<std::size_t>(k)] =
          kind_ == Kind::partition ? diag + Int(k) * up : diag + Int(n - 1) * up;
    }
    rows_.push_back(std::move(row));
  }

  Kind kind_;
  std::vector<std::vector<Int>> rows_;
  std::mutex mu_;
};

}  // namespace

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int result;
  mpz_bin_uiui(result.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int result;
  mpz_fac_ui(result.backend().data(), static_cast<unsigned long>(n));
  return result;
}

Int falling(long x, long k) {
  if (k < 0) throw std::invalid_argument("falling: negative length");
  Int result = 1;
  for (long t = 0; t < k; ++t) result *= Int(x - t);
  return result;
}

Int rising(long x, long k) {
  if (k < 0) throw std::invalid_argument("rising: negative length");
  Int result = 1;
  for (long t = 0; t < k; ++t) result *= Int(x + t);
  return result;
}

Int stirling_partition(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static StirlingTable table(StirlingTable::Kind::partition);
  return table.at(n, k);
}

Int stirling_cycle(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static StirlingTable table(StirlingTable::Kind::cycle);
  return table.at(n, k);
}

Int surjection_count(long n, long r) {
  if (r < 0) return 0;
  return factorial(r) * stirling_partition(n, r);
}

}  // namespace pascalforms

#include "pascalforms/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pascalforms {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

Int parse_int(const std::string& token) {
  const std::string t = trim(token);
  detail::require(!t.empty(), "parse: empty integer token");
  std::size_t k = t[0] == '-' || t[0] == '+' ? 1 : 0;
  detail::require(k < t.size(), "parse: malformed integer");
  for (; k < t.size(); ++k)
    detail::require(t[k] >= '0' && t[k] <= '9', "parse: malformed integer");
  return Int(t);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(line);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

IntMatrix rows_to_matrix(const std::vector<std::vector<Int>>& rows) {
  const Index n = static_cast<Index>(rows.size());
  detail::require(n >= 1, "parse: matrix has no rows");
  for (const auto& row : rows)
    detail::require(static_cast<Index>(row.size()) == n, "parse: matrix is not square");
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

void write_csv(std::ostream& os, const IntMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ',';
      os << m(i, j);
    }
    os << '\n';
  }
}

IntMatrix read_csv(std::istream& is) {
  std::vector<std::vector<Int>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    std::vector<Int> row;
    for (const std::string& token : split(line, ',')) row.push_back(parse_int(token));
    rows.push_back(std::move(row));
  }
  return rows_to_matrix(rows);
}

void write_text(std::ostream& os, const IntMatrix& m) {
  os << "n=" << m.rows() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    os << "row " << i + 1 << ':';
    for (Index j = 0; j < m.cols(); ++j) os << ' ' << m(i, j);
    os << '\n';
  }
}

IntMatrix read_text(std::istream& is) {
  std::string line;
  Index n = -1;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty()) continue;
    detail::require(line.rfind("n=", 0) == 0, "parse: expected n=<dim> header");
    n = static_cast<Index>(std::stol(line.substr(2)));
    break;
  }
  detail::require(n >= 1, "parse: missing or invalid n=<dim> header");
  std::vector<std::vector<Int>> rows;
  while (static_cast<Index>(rows.size()) < n && std::getline(is, line)) {
    line = trim(line);
    if (line.empty()) continue;
    detail::require(line.rfind("row ", 0) == 0, "parse: expected a row line");
    const auto colon = line.find(':');
    detail::require(colon != std::string::npos, "parse: malformed row line");
    std::vector<Int> row;
    std::istringstream entries(line.substr(colon + 1));
    std::string token;
    while (entries >> token) row.push_back(parse_int(token));
    rows.push_back(std::move(row));
  }
  detail::require(static_cast<Index>(rows.size()) == n, "parse: row count does not match header");
  return rows_to_matrix(rows);
}

Seq parse_sequence(const std::string& text, Index length) {
  const std::string t = trim(text);
  if (t == "sets") return Seq::sets(length);
  const auto named = [&](const std::string& prefix) -> std::optional<long> {
    if (t.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string arg = t.substr(prefix.size());
    detail::require(!arg.empty(), "parse: named sequence needs a column index");
    return std::stol(arg);
  };
  if (const auto r = named("stirling-partition:")) {
    detail::require(*r >= 0, "parse: negative column index");
    return Seq::stirling_partition_column(*r, length);
  }
  if (const auto r = named("stirling-cycle:")) {
    detail::require(*r >= 0, "parse: negative column index");
    return Seq::stirling_cycle_column(*r, length);
  }
  std::vector<Int> terms;
  for (const std::string& token : split(t, ',')) terms.push_back(parse_int(token));
  detail::require(static_cast<Index>(terms.size()) >= length,
                  "parse: sequence literal shorter than required length");
  return Seq(std::move(terms));
}

std::string format_smith(const SmithForm& snf) {
  std::ostringstream os;
  os << "diag:";
  for (const Int& d : snf.diagonal) os << ' ' << d;
  os << '\n';
  if (snf.transforms) {
    os << "U:\n";
    write_text(os, snf.transforms->first);
    os << "V:\n";
    write_text(os, snf.transforms->second);
  }
  return os.str();
}

}  // namespace pascalforms

#pragma once

#include <iosfwd>
#include <string>

#include "pascalforms/canonical.hpp"
#include "pascalforms/pascal.hpp"

// Plain-text matrix formats shared by the library and the CLI. All numbers
// are base 10 with no digit grouping, so output is byte-for-byte diffable.

namespace pascalforms {

// CSV: one row per line, entries comma-separated, no header.
void write_csv(std::ostream& os, const IntMatrix& m);
IntMatrix read_csv(std::istream& is);

// Structured text: a "n=<dim>" line followed by "row <i>: e1 e2 ... en".
void write_text(std::ostream& os, const IntMatrix& m);
IntMatrix read_text(std::istream& is);

// Sequence literals: comma-separated integers ("0,1,1,1"), or the named
// forms "sets", "stirling-partition:<r>", "stirling-cycle:<r>". Named forms
// are generated with the requested length; literals must already have at
// least that many terms.
Seq parse_sequence(const std::string& text, Index length);

// Smith form certificate: "diag: d1 ... dn", then optional "U:" and "V:"
// blocks in the structured text matrix format.
std::string format_smith(const SmithForm& snf);

}  // namespace pascalforms

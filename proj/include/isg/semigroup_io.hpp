#ifndef ISG_SEMIGROUP_IO_HPP_
#define ISG_SEMIGROUP_IO_HPP_

#include <string>
#include <vector>

#include "isg/inverse_semigroup.hpp"

namespace isg {

// The semigroup text format: line 1 is n, lines 2..n+1 hold n whitespace-
// separated indices each (row a gives the products a.b), followed by
// optional lines "label <index> <name>".
struct ParsedTable {
  int n = 0;
  std::vector<int> table;
  std::vector<std::string> labels;  // empty when no label lines appear
};

ParsedTable parse_semigroup_text(const std::string& text);
ParsedTable read_semigroup_file(const std::string& path);

std::string format_semigroup(const InverseSemigroup& S);

struct LoadOptions {
  bool adjoin_zero = false;
};

// Parse + validate in one step. Throws ParseError / MalformedTable /
// MissingZero (when the only obstruction is a missing zero and adjoin_zero
// is off) / DomainError carrying the validation report otherwise.
InverseSemigroup load_semigroup_text(const std::string& text, const LoadOptions& opts = {});

}  // namespace isg

#endif  // ISG_SEMIGROUP_IO_HPP_

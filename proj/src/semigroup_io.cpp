#include "isg/semigroup_io.hpp"

#include <fstream>
#include <sstream>

#include "isg/errors.hpp"

namespace isg {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) {
    return "";
  }
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

ParsedTable parse_semigroup_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  ParsedTable out;

  auto next_content_line = [&](std::string& dst) {
    while (std::getline(in, line)) {
      ++line_no;
      dst = trim(line);
      if (!dst.empty()) {
        return true;
      }
    }
    return false;
  };

  std::string content;
  if (!next_content_line(content)) {
    throw ParseError("empty input", line_no);
  }
  {
    std::istringstream hdr(content);
    if (!(hdr >> out.n) || out.n <= 0) {
      throw ParseError("expected a positive element count", line_no);
    }
    std::string extra;
    if (hdr >> extra) {
      throw ParseError("unexpected token after the element count", line_no);
    }
  }

  out.table.reserve(static_cast<std::size_t>(out.n) * out.n);
  for (int row = 0; row < out.n; ++row) {
    if (!next_content_line(content)) {
      throw ParseError("table row " + std::to_string(row) + " missing", line_no);
    }
    std::istringstream r(content);
    int value = 0;
    int got = 0;
    while (r >> value) {
      if (value < 0 || value >= out.n) {
        throw ParseError("table entry " + std::to_string(value) + " out of range", line_no);
      }
      out.table.push_back(value);
      ++got;
    }
    if (!r.eof()) {
      throw ParseError("non-numeric table entry", line_no);
    }
    if (got != out.n) {
      throw ParseError("table is not square: row has " + std::to_string(got) + " entries, expected " +
                           std::to_string(out.n),
                       line_no);
    }
  }

  while (next_content_line(content)) {
    std::istringstream r(content);
    std::string keyword;
    r >> keyword;
    if (keyword != "label") {
      throw ParseError("unexpected trailing line (only label lines may follow the table)", line_no);
    }
    int index = -1;
    if (!(r >> index) || index < 0 || index >= out.n) {
      throw ParseError("label index out of range", line_no);
    }
    std::string name;
    std::getline(r, name);
    name = trim(name);
    if (name.empty()) {
      throw ParseError("label name missing", line_no);
    }
    if (out.labels.empty()) {
      out.labels.resize(static_cast<std::size_t>(out.n));
      for (int i = 0; i < out.n; ++i) {
        out.labels[static_cast<std::size_t>(i)] = std::to_string(i);
      }
    }
    out.labels[static_cast<std::size_t>(index)] = name;
  }
  return out;
}

ParsedTable read_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_semigroup_text(buffer.str());
}

std::string format_semigroup(const InverseSemigroup& S) {
  std::ostringstream out;
  out << S.size() << "\n";
  for (int a = 0; a < S.size(); ++a) {
    for (int b = 0; b < S.size(); ++b) {
      out << (b > 0 ? " " : "") << S.product(a, b);
    }
    out << "\n";
  }
  for (int a = 0; a < S.size(); ++a) {
    if (S.label(a) != std::to_string(a)) {
      out << "label " << a << " " << S.label(a) << "\n";
    }
  }
  return out.str();
}

InverseSemigroup load_semigroup_text(const std::string& text, const LoadOptions& opts) {
  ParsedTable parsed = parse_semigroup_text(text);
  std::vector<int> table = parsed.table;
  int n = parsed.n;
  std::vector<std::string> labels = parsed.labels;
  if (find_zero(n, table) < 0) {
    if (!opts.adjoin_zero) {
      throw MissingZero("the table has no zero element (rerun with --adjoin-zero to add one)");
    }
    table = adjoin_zero_table(n, table);
    if (labels.empty()) {
      labels.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = std::to_string(i);
      }
    }
    labels.push_back("zero");
    n += 1;
  }
  auto result = validate_inverse_semigroup(n, table, labels);
  if (!result.report.ok) {
    std::string what = "not a valid inverse semigroup with zero:";
    for (const auto& v : result.report.violations) {
      what += "\n  - " + v;
    }
    throw DomainError(what);
  }
  return *result.semigroup;
}

}  // namespace isg

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "isg/emit.hpp"
#include "isg/errors.hpp"
#include "isg/filter_groupoid.hpp"
#include "isg/filters.hpp"
#include "isg/germ_groupoid.hpp"
#include "isg/isomorphism.hpp"
#include "isg/semigroup_io.hpp"
#include "isg/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitInputError = 2;

struct InputOptions {
  std::string input_path;
  std::string family;
  bool adjoin_zero = false;
};

struct OutputOptions {
  std::string format = "text";
  std::string output_path;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* input = cmd->add_option("-i,--input", in.input_path, "semigroup table file");
  auto* family = cmd->add_option("-f,--family", in.family,
                                 "builder spec: brandt:K, symmetric-inverse:K, chain:K");
  input->excludes(family);
  cmd->add_flag("--adjoin-zero", in.adjoin_zero, "adjoin a zero if the table lacks one");
}

void add_output_options(CLI::App* cmd, OutputOptions& out, bool with_format = true) {
  if (with_format) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  }
  cmd->add_option("-o,--output", out.output_path, "write output to a file instead of stdout");
}

isg::InverseSemigroup load_input(const InputOptions& in, std::string& instance_name) {
  if (!in.family.empty()) {
    instance_name = in.family;
    auto colon = in.family.find(':');
    if (colon == std::string::npos) {
      throw isg::DomainError("family spec must look like name:K");
    }
    std::string name = in.family.substr(0, colon);
    int k = 0;
    try {
      k = std::stoi(in.family.substr(colon + 1));
    } catch (...) {
      throw isg::DomainError("family parameter is not a number");
    }
    if (name == "brandt") {
      return isg::brandt(k);
    }
    if (name == "symmetric-inverse") {
      return isg::symmetric_inverse(k);
    }
    if (name == "chain") {
      return isg::chain(k);
    }
    throw isg::DomainError("unknown family: " + name);
  }
  if (in.input_path.empty()) {
    throw isg::DomainError("exactly one of --input or --family is required");
  }
  instance_name = in.input_path;
  std::ifstream f(in.input_path);
  if (!f) {
    throw isg::IoError("cannot open " + in.input_path);
  }
  std::ostringstream buffer;
  buffer << f.rdbuf();
  return isg::load_semigroup_text(buffer.str(), {in.adjoin_zero});
}

void write_output(const OutputOptions& out, const std::string& payload) {
  if (out.output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out.output_path);
  if (!f) {
    throw isg::IoError("cannot write " + out.output_path);
  }
  f << payload;
}

std::string set_label(const isg::InverseSemigroup& S, const isg::IndexSet& A) {
  std::string out = "{";
  bool first = true;
  A.for_each([&](int a) {
    if (!first) {
      out += ",";
    }
    out += S.label(a);
    first = false;
  });
  return out + "}";
}

int cmd_validate(const InputOptions& in, const OutputOptions& out) {
  std::string instance;
  // Families are valid by construction; report on files in detail.
  if (in.family.empty() && !in.input_path.empty()) {
    std::ifstream f(in.input_path);
    if (!f) {
      throw isg::IoError("cannot open " + in.input_path);
    }
    std::ostringstream buffer;
    buffer << f.rdbuf();
    auto parsed = isg::parse_semigroup_text(buffer.str());
    std::vector<int> table = parsed.table;
    int n = parsed.n;
    auto labels = parsed.labels;
    if (isg::find_zero(n, table) < 0 && in.adjoin_zero) {
      table = isg::adjoin_zero_table(n, table);
      if (labels.empty()) {
        labels.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          labels[static_cast<std::size_t>(i)] = std::to_string(i);
        }
      }
      labels.push_back("zero");
      n += 1;
    }
    auto result = isg::validate_inverse_semigroup(n, table, labels);
    std::ostringstream report;
    if (result.report.ok) {
      report << "ok: inverse semigroup with zero, " << n << " elements\n";
      report << "zero at index 0 after relabeling\n";
      write_output(out, report.str());
      return kExitOk;
    }
    report << "invalid:\n";
    for (const auto& v : result.report.violations) {
      report << "  - " << v << "\n";
    }
    if (result.report.zero_missing) {
      report << "hint: rerun with --adjoin-zero\n";
    }
    write_output(out, report.str());
    return kExitInputError;
  }
  auto S = load_input(in, instance);
  write_output(out, "ok: " + instance + ", " + std::to_string(S.size()) + " elements\n");
  return kExitOk;
}

int cmd_info(const InputOptions& in, const OutputOptions& out) {
  std::string instance;
  auto S = load_input(in, instance);
  auto E = isg::idempotents(S);
  auto ord = isg::order_relation(S);
  std::ostringstream o;
  o << "instance: " << instance << "\n";
  o << "elements: " << S.size() << "\n";
  o << "zero: " << S.label(S.zero()) << "\n";
  o << "idempotents (" << E.size() << "): " << set_label(S, E.members) << "\n";
  o << "hasse edges (" << ord.hasse.size() << "):";
  for (const auto& [a, b] : ord.hasse) {
    o << " " << S.label(a) << "<" << S.label(b);
  }
  o << "\n";
  write_output(out, o.str());
  return kExitOk;
}

int cmd_filters(const InputOptions& in, const OutputOptions& out, const std::string& select,
                const std::string& mode, int bruteforce_limit) {
  std::string instance;
  auto S = load_input(in, instance);
  isg::FilterSelect sel = isg::FilterSelect::proper;
  if (select == "all") {
    sel = isg::FilterSelect::all;
  } else if (select == "ultra") {
    sel = isg::FilterSelect::ultra;
  } else if (select == "idempotent") {
    sel = isg::FilterSelect::idempotent;
  }
  auto filters = isg::enumerate_filters(
      S, mode == "bruteforce" ? isg::EnumerationMode::bruteforce : isg::EnumerationMode::principal,
      sel, bruteforce_limit);
  std::vector<std::string> carriers;
  std::vector<std::string> flags;
  for (const auto& f : filters) {
    auto cls = isg::classify_subset(S, f);
    carriers.push_back(set_label(S, f));
    std::string flag = cls.is_proper ? "proper" : "improper";
    if (cls.is_ultra) {
      flag += ",ultra";
    }
    if (cls.is_idempotent) {
      flag += ",idempotent";
    }
    flags.push_back(flag);
  }
  if (out.format == "json") {
    write_output(out, isg::emit_filters_json(carriers, flags, instance));
  } else {
    std::ostringstream o;
    o << select << " filters of " << instance << " (" << filters.size() << "):\n";
    for (std::size_t i = 0; i < carriers.size(); ++i) {
      o << "  " << carriers[i] << "  [" << flags[i] << "]\n";
    }
    write_output(out, o.str());
  }
  return kExitOk;
}

struct BuiltGroupoid {
  isg::FiniteGroupoid g;
  std::string description;
};

BuiltGroupoid build_by_kind(const isg::InverseSemigroup& S, const std::string& kind) {
  auto E = isg::idempotents(S);
  if (kind == "filters") {
    return {isg::build_filter_groupoid(S, E, isg::FilterKind::proper).g, "groupoid of proper filters"};
  }
  if (kind == "ultra") {
    return {isg::build_filter_groupoid(S, E, isg::FilterKind::ultra).g, "groupoid of ultrafilters"};
  }
  if (kind == "tight") {
    return {isg::build_filter_groupoid(S, E, isg::FilterKind::tight).g, "groupoid of tight filters"};
  }
  if (kind == "germs") {
    return {isg::build_germ_groupoid(S, E, isg::GermKind::proper).g, "groupoid of proper germs"};
  }
  if (kind == "ultragerms") {
    return {isg::build_germ_groupoid(S, E, isg::GermKind::ultra).g, "groupoid of ultragerms"};
  }
  throw isg::DomainError("unknown groupoid kind: " + kind);
}

int cmd_groupoid(const InputOptions& in, const OutputOptions& out, const std::string& kind) {
  std::string instance;
  auto S = load_input(in, instance);
  auto built = build_by_kind(S, kind);
  if (out.format == "json") {
    write_output(out, isg::emit_groupoid_json(built.g, instance));
    return kExitOk;
  }
  std::ostringstream o;
  auto units = built.g.units();
  o << built.description << " of " << instance << ": " << built.g.num_arrows << " arrows, "
    << units.size() << " units\n";
  for (int a = 0; a < built.g.num_arrows; ++a) {
    o << "  " << built.g.label(a) << "  d=" << (built.g.source(a) >= 0 ? built.g.label(built.g.source(a)) : "?")
      << "  r=" << (built.g.range(a) >= 0 ? built.g.label(built.g.range(a)) : "?") << "\n";
  }
  write_output(out, o.str());
  return kExitOk;
}

int cmd_topology(const InputOptions& in, const OutputOptions& out, const std::string& space,
                 const std::string& basis, int point_limit) {
  std::string instance;
  auto S = load_input(in, instance);
  auto E = isg::idempotents(S);
  auto FG = isg::build_filter_groupoid(S, E, isg::FilterKind::proper);

  std::vector<int> points;        // arrow ids or E-filter indices
  std::vector<std::string> point_names;
  std::vector<isg::IndexSet> family;
  if (space == "efilters") {
    auto efp = isg::efilters(S, E, isg::EFilterSelect::proper);
    for (std::size_t i = 0; i < efp.size(); ++i) {
      point_names.push_back(set_label(E.semilattice, efp[i]));
    }
    if (basis == "principal") {
      // one set per idempotent: the E-filters containing it
      for (int e = 0; e < E.size(); ++e) {
        isg::IndexSet b(static_cast<int>(efp.size()));
        for (std::size_t i = 0; i < efp.size(); ++i) {
          if (efp[i].contains(e)) {
            b.insert(static_cast<int>(i));
          }
        }
        family.push_back(b);
      }
    } else {
      family = isg::efilter_patch_basis(E, efp);
    }
  } else {
    std::vector<int> ids;
    if (space == "units") {
      ids = FG.g.units();
    } else if (space == "arrows") {
      ids.resize(static_cast<std::size_t>(FG.g.num_arrows));
      for (int a = 0; a < FG.g.num_arrows; ++a) {
        ids[static_cast<std::size_t>(a)] = a;
      }
    } else {
      throw isg::DomainError("unknown space: " + space);
    }
    for (int a : ids) {
      point_names.push_back(FG.g.label(a));
    }
    std::vector<isg::IndexSet> raw;
    if (basis == "principal") {
      raw = isg::principal_basis(S, FG);
    } else if (basis == "patch") {
      raw = isg::patch_basis(S, FG);
    } else {
      throw isg::DomainError("unknown basis: " + basis);
    }
    for (const auto& B : raw) {
      family.push_back(isg::reindex_subset(B, ids));
    }
  }

  int p = static_cast<int>(point_names.size());
  if (p > point_limit) {
    throw isg::TooLarge("space has " + std::to_string(p) + " points, over the --point-limit " +
                        std::to_string(point_limit));
  }
  isg::FiniteTopology topo(p, family);
  std::ostringstream o;
  o << "space " << space << " of " << instance << " with " << basis << " basis\n";
  o << "points: " << p << "\n";
  o << "basis sets (deduplicated): " << topo.basis().size() << "\n";
  auto validity = topo.check_basis_validity();
  o << "basis criterion: " << (validity.valid() ? "satisfied" : "violated") << "\n";
  for (const auto& note : validity.notes) {
    o << "  note: " << note << "\n";
  }
  try {
    o << "open sets: " << topo.materialize_opens().size() << "\n";
  } catch (const isg::TooLarge&) {
    o << "open sets: not materialized (too many points)\n";
  }
  auto h = topo.hausdorff_check();
  if (h.hausdorff) {
    o << "hausdorff: yes\n";
  } else {
    o << "hausdorff: no, witness (" << point_names[static_cast<std::size_t>(h.witness_a)] << ", "
      << point_names[static_cast<std::size_t>(h.witness_b)] << ")\n";
  }
  write_output(out, o.str());
  return kExitOk;
}

int cmd_check(const InputOptions& in, const OutputOptions& out, const std::string& fault,
              bool timings) {
  std::string instance;
  auto S = load_input(in, instance);
  isg::VerifyOptions opts;
  if (fault == "reroute-compose") {
    opts.fault = isg::FaultKind::reroute_compose;
  } else if (fault == "flip-germ-equiv") {
    opts.fault = isg::FaultKind::flip_germ_equiv;
  }
  auto report = isg::verify_all(S, opts);
  report.instance = instance;
  if (out.format == "json") {
    write_output(out, isg::emit_report_json(report));
  } else {
    write_output(out, isg::format_report(report, timings));
  }
  return report.all_pass() ? kExitOk : kExitClaimFailure;
}

int cmd_emit_dot(const InputOptions& in, const OutputOptions& out, const std::string& kind) {
  std::string instance;
  auto S = load_input(in, instance);
  auto built = build_by_kind(S, kind);
  write_output(out, isg::emit_dot(built.g));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"filter and germ groupoids of finite inverse semigroups"};
  app.require_subcommand(1);

  InputOptions in;
  OutputOptions out;

  auto* validate = app.add_subcommand("validate", "check the inverse-semigroup axioms on a table");
  add_input_options(validate, in);
  add_output_options(validate, out, false);

  auto* info = app.add_subcommand("info", "elements, idempotents, Hasse diagram");
  add_input_options(info, in);
  add_output_options(info, out, false);

  std::string select = "proper";
  std::string mode = "principal";
  int bruteforce_limit = isg::kBruteforceCap;
  auto* filters = app.add_subcommand("filters", "enumerate filters");
  add_input_options(filters, in);
  add_output_options(filters, out);
  filters->add_option("--select", select, "which filters")
      ->check(CLI::IsMember({"all", "proper", "ultra", "idempotent"}));
  filters->add_option("--mode", mode, "enumeration mode")
      ->check(CLI::IsMember({"principal", "bruteforce"}));
  filters->add_option("--bruteforce-limit", bruteforce_limit, "bruteforce element cap");

  std::string kind = "filters";
  auto* groupoid = app.add_subcommand("groupoid", "build a groupoid");
  add_input_options(groupoid, in);
  add_output_options(groupoid, out);
  groupoid->add_option("--kind", kind, "which groupoid")
      ->check(CLI::IsMember({"filters", "germs", "ultra", "ultragerms", "tight"}));

  std::string space = "units";
  std::string basis = "patch";
  int point_limit = isg::kMaxTopologyPoints;
  auto* topology = app.add_subcommand("topology", "generate a topology and report on it");
  add_input_options(topology, in);
  add_output_options(topology, out, false);
  topology->add_option("--space", space, "point space")
      ->check(CLI::IsMember({"units", "efilters", "arrows"}));
  topology->add_option("--basis", basis, "generating family")
      ->check(CLI::IsMember({"principal", "patch"}));
  topology->add_option("--point-limit", point_limit, "maximum number of points");

  std::string fault = "none";
  bool timings = false;
  auto* check = app.add_subcommand("check", "run the verification suite");
  add_input_options(check, in);
  add_output_options(check, out);
  check->add_option("--inject-fault", fault, "tamper with a construction (mutation testing)")
      ->check(CLI::IsMember({"none", "reroute-compose", "flip-germ-equiv"}));
  check->add_flag("--timings", timings, "include per-claim timings in text output");

  std::string dot_kind = "filters";
  auto* emit_dot = app.add_subcommand("emit-dot", "emit a groupoid as a DOT digraph");
  add_input_options(emit_dot, in);
  add_output_options(emit_dot, out, false);
  emit_dot->add_option("--kind", dot_kind, "which groupoid")
      ->check(CLI::IsMember({"filters", "germs", "ultra", "ultragerms", "tight"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      return cmd_validate(in, out);
    }
    if (info->parsed()) {
      return cmd_info(in, out);
    }
    if (filters->parsed()) {
      return cmd_filters(in, out, select, mode, bruteforce_limit);
    }
    if (groupoid->parsed()) {
      return cmd_groupoid(in, out, kind);
    }
    if (topology->parsed()) {
      return cmd_topology(in, out, space, basis, point_limit);
    }
    if (check->parsed()) {
      return cmd_check(in, out, fault, timings);
    }
    if (emit_dot->parsed()) {
      return cmd_emit_dot(in, out, dot_kind);
    }
  } catch (const isg::ParseError& ex) {
    std::cerr << "parse error (line " << ex.line << "): " << ex.what() << "\n";
    return kExitInputError;
  } catch (const isg::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

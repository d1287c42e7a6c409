#include "isg/emit.hpp"

#include <sstream>

#include "json.hpp"

namespace isg {

namespace {

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
    }
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const FiniteGroupoid& G, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  auto units = G.units();
  std::vector<int> unit_node(static_cast<std::size_t>(G.num_arrows), -1);
  for (std::size_t i = 0; i < units.size(); ++i) {
    unit_node[static_cast<std::size_t>(units[i])] = static_cast<int>(i);
    out << "  u" << i << " [shape=circle label=" << quote_dot(G.label(units[i])) << "];\n";
  }
  for (int a = 0; a < G.num_arrows; ++a) {
    if (unit_node[static_cast<std::size_t>(a)] >= 0) {
      continue;
    }
    int d = G.source(a);
    int r = G.range(a);
    out << "  u" << (d >= 0 ? unit_node[static_cast<std::size_t>(d)] : -1) << " -> u"
        << (r >= 0 ? unit_node[static_cast<std::size_t>(r)] : -1)
        << " [label=" << quote_dot(G.label(a)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_groupoid_json(const FiniteGroupoid& G, const std::string& instance) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["instance"] = instance;
  auto units = G.units();
  nlohmann::ordered_json junits = nlohmann::ordered_json::array();
  for (int u : units) {
    junits.push_back(G.label(u));
  }
  nlohmann::ordered_json jarrows = nlohmann::ordered_json::array();
  for (int a = 0; a < G.num_arrows; ++a) {
    nlohmann::ordered_json arrow;
    arrow["id"] = a;
    arrow["d"] = G.source(a);
    arrow["r"] = G.range(a);
    arrow["label"] = G.label(a);
    jarrows.push_back(arrow);
  }
  j["groupoid"]["units"] = junits;
  j["groupoid"]["arrows"] = jarrows;
  return j.dump(2) + "\n";
}

std::string emit_report_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["instance"] = report.instance;
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const auto& c : report.claims) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["pass"] = c.pass;
    if (c.skipped) {
      e["skipped"] = true;
    }
    if (!c.witness.empty()) {
      e["witness"] = c.witness;
    }
    if (!c.domain.empty()) {
      e["domain"] = c.domain;
    }
    // timings are intentionally omitted: outputs are byte-identical across runs
    claims.push_back(e);
  }
  j["claims"] = claims;
  j["overall"] = report.all_pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string emit_filters_json(const std::vector<std::string>& carrier_labels,
                              const std::vector<std::string>& flags, const std::string& instance) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["instance"] = instance;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < carrier_labels.size(); ++i) {
    nlohmann::ordered_json e;
    e["carrier"] = carrier_labels[i];
    e["class"] = flags[i];
    items.push_back(e);
  }
  j["filters"] = items;
  return j.dump(2) + "\n";
}

}  // namespace isg

#ifndef ISG_EMIT_HPP_
#define ISG_EMIT_HPP_

#include <string>
#include <vector>

#include "isg/groupoid.hpp"
#include "isg/isomorphism.hpp"

namespace isg {

inline constexpr int kSchemaVersion = 1;

// DOT digraph: one node per unit (labeled with its arrow label), one edge
// per non-unit arrow from its source unit to its range unit. Deterministic
// ordering; byte-identical across runs on the same input.
std::string emit_dot(const FiniteGroupoid& G, const std::string& name = "groupoid");

// Structured outputs with stable field order.
std::string emit_groupoid_json(const FiniteGroupoid& G, const std::string& instance);
std::string emit_report_json(const VerificationReport& report);
std::string emit_filters_json(const std::vector<std::string>& carrier_labels,
                              const std::vector<std::string>& flags, const std::string& instance);

}  // namespace isg

#endif  // ISG_EMIT_HPP_

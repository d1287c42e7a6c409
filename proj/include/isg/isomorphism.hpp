#ifndef ISG_ISOMORPHISM_HPP_
#define ISG_ISOMORPHISM_HPP_

#include <string>
#include <vector>

#include "isg/filter_groupoid.hpp"
#include "isg/germ_groupoid.hpp"
#include "isg/index_set.hpp"
#include "isg/inverse_semigroup.hpp"

namespace isg {

// The filter-to-germ map sends F to the germ of (s, d(F) n E) for the
// minimum-index s in F. This returns the point; the class is resolved
// against a built germ groupoid.
GermPoint germ_of_filter(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& F);

// The inverse formula: (s, xi) goes to the up-closure of s.xi, computed
// from any representative of the germ.
IndexSet filter_of_germ(const InverseSemigroup& S, const IdempotentSet& E, const GermPoint& p);

// The arrow map realizing the filter-to-germ map between built groupoids;
// entries are -1 where the germ class cannot be resolved (only reachable
// on tampered inputs).
std::vector<int> filter_to_germ_map(const InverseSemigroup& S, const IdempotentSet& E,
                                    const FilterGroupoid& FG, const GermGroupoid& GG);

struct Claim {
  std::string id;
  bool pass = true;
  bool skipped = false;
  std::string witness;  // failure details, or a note for skipped claims
  std::string domain;   // quantifier domain sizes
  double ms = 0.0;
};

struct VerificationReport {
  std::string instance;
  std::vector<Claim> claims;

  bool all_pass() const {
    for (const auto& c : claims) {
      if (!c.pass && !c.skipped) {
        return false;
      }
    }
    return true;
  }
};

enum class FaultKind { none, reroute_compose, flip_germ_equiv };

struct VerifyOptions {
  FaultKind fault = FaultKind::none;
  // Claims about topologies additionally quantify over fully materialized
  // open families when the point count is at most this; the minimal-
  // neighborhood route is exact at any size.
  int materialize_max_points = 12;
  // The principal/bruteforce enumeration cross-check runs when n is at most
  // this and is reported as skipped otherwise.
  int bruteforce_cap = 14;
};

// Runs the whole verification suite on S and reports one entry per claim:
// construction self-checks, the unit-space homeomorphism, the filter and
// principal-set laws, the filter-to-germ isomorphism with its topological
// content, the ultrafilter restriction, and the finite-scale facts
// (Hausdorffness under the principal basis, tight arrows, compactability).
VerificationReport verify_all(const InverseSemigroup& S, const VerifyOptions& opts = {});

std::string format_report(const VerificationReport& report, bool with_timings = false);

}  // namespace isg

#endif  // ISG_ISOMORPHISM_HPP_

#include "isg/isomorphism.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "isg/errors.hpp"
#include "isg/topology.hpp"

namespace isg {

GermPoint germ_of_filter(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& F) {
  return {F.min(), source_efilter(S, E, F)};
}

IndexSet filter_of_germ(const InverseSemigroup& S, const IdempotentSet& E, const GermPoint& p) {
  IndexSet products(S.size());
  p.carrier.for_each([&](int e) { products.insert(S.product(p.element, E.to_s(e))); });
  return up_closure(S, products);
}

std::vector<int> filter_to_germ_map(const InverseSemigroup& S, const IdempotentSet& E,
                              const FilterGroupoid& FG, const GermGroupoid& GG) {
  std::vector<int> phi(static_cast<std::size_t>(FG.g.num_arrows), -1);
  for (int a = 0; a < FG.g.num_arrows; ++a) {
    phi[static_cast<std::size_t>(a)] = GG.arrow_of(germ_of_filter(S, E, FG.filter[static_cast<std::size_t>(a)]));
  }
  return phi;
}

namespace {

void fail(Claim& c, const std::string& witness) {
  if (c.pass) {
    c.pass = false;
    c.witness = witness;
  }
}

std::string set_label(const InverseSemigroup& S, const IndexSet& A) {
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

// Everything verify_all quantifies over, computed once up front.
struct VerifyContext {
  VerifyContext(const InverseSemigroup& S, const VerifyOptions& opts) : S(S), opts(opts) {}

  const InverseSemigroup& S;
  VerifyOptions opts;
  IdempotentSet E;
  std::vector<IndexSet> proper;   // proper filters (carriers), sorted
  std::vector<IndexSet> efp;      // proper E-filters
  std::vector<IndexSet> eful;     // E-ultrafilters
  TightEFilters tightE;
  FilterGroupoid FG;              // kind proper; fault may reroute its table
  GermGroupoid GG;                // kind proper; fault may flip the relation
  std::vector<int> phi;           // pi as an arrow map
  std::vector<IndexSet> f_of;     // F_s per s, arrow subsets
  std::vector<IndexSet> fpatch;   // deduplicated patch sets on arrows
  std::vector<IndexSet> epatch;   // patch sets over efp points
  std::vector<int> source_index;     // arrow -> index of source_efilter(F) in GG.universe
  std::vector<int> unit_ids;      // unit arrows of FG, sorted
  std::vector<int> efp_of_unit;   // unit -> index of efilter_of_filter(unit) in efp
};

int index_of(const std::vector<IndexSet>& list, const IndexSet& x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it != list.end() && *it == x) {
    return static_cast<int>(it - list.begin());
  }
  return -1;
}

// (s, T) pairs with T inside the strict down-set of s, enumerated the same
// way patch_basis enumerates them.
void for_each_patch_pair(const InverseSemigroup& S,
                         const std::function<void(int, const IndexSet&)>& f) {
  for (int s = 0; s < S.size(); ++s) {
    std::vector<int> below;
    for (int t = 0; t < S.size(); ++t) {
      if (t != s && S.leq(t, s)) {
        below.push_back(t);
      }
    }
    if (below.size() > 20) {
      throw TooLarge("patch enumeration: down-set of " + S.label(s) + " has " +
                     std::to_string(below.size()) + " elements");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << below.size()); ++mask) {
      IndexSet avoid(S.size());
      for (std::size_t i = 0; i < below.size(); ++i) {
        if ((mask >> i) & 1) {
          avoid.insert(below[i]);
        }
      }
      f(s, avoid);
    }
  }
}

// Basic open sets of the germ topology: germs_over(s, B) for patch-basic B within
// the domain of beta_s.
std::vector<IndexSet> germ_basis(const VerifyContext& ctx) {
  const auto& S = ctx.S;
  std::vector<IndexSet> out;
  for (int s = 0; s < S.size(); ++s) {
    int d = ctx.E.from_s(S.product(S.inverse(s), s));
    IndexSet domain = universe_with_idempotent(ctx.GG, d);
    for (const auto& B : ctx.epatch) {
      if (B.is_subset_of(domain)) {
        out.push_back(germs_over(S, ctx.E, ctx.GG, s, B));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class ClaimRunner {
 public:
  explicit ClaimRunner(VerificationReport& report) : report_(report) {}

  template <typename Body>
  void run(const std::string& id, Body body) {
    Claim c;
    c.id = id;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& ex) {
      fail(c, std::string("exception: ") + ex.what());
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report_.claims.push_back(std::move(c));
  }

 private:
  VerificationReport& report_;
};

void check_filter_construction(const VerifyContext& ctx, ClaimRunner& runner) {
  runner.run("construction.filter-groupoid", [&](Claim& c) {
    c.domain = "arrows=" + std::to_string(ctx.FG.g.num_arrows) +
               ", units=" + std::to_string(static_cast<int>(ctx.FG.g.units().size()));
    auto axioms = check_axioms(ctx.FG.g);
    if (!axioms.ok) {
      fail(c, axioms.witness);
    }
    // The unit space is exactly the idempotent proper filters.
    auto idem = enumerate_filters(ctx.S, EnumerationMode::principal, FilterSelect::idempotent);
    std::vector<IndexSet> unit_carriers;
    for (int u : ctx.FG.g.units()) {
      unit_carriers.push_back(ctx.FG.filter[static_cast<std::size_t>(u)]);
    }
    std::sort(unit_carriers.begin(), unit_carriers.end());
    if (!(unit_carriers == idem)) {
      fail(c, "unit space differs from the idempotent proper filters");
    }
    if (!is_subgroupoid(ctx.FG.g, ctx.FG.ultra_arrows())) {
      fail(c, "ultrafilter arrows are not a subgroupoid");
    }
    if (!is_subgroupoid(ctx.FG.g, ctx.FG.tight_arrows())) {
      fail(c, "tight arrows are not a subgroupoid");
    }
    // The standalone ultrafilter groupoid agrees with the reduction.
    auto FGu = build_filter_groupoid(ctx.S, ctx.E, FilterKind::ultra);
    auto ultra_ids = ctx.FG.ultra_arrows().elements();
    if (static_cast<int>(ultra_ids.size()) != FGu.g.num_arrows) {
      fail(c, "ultra groupoid arrow count differs from the ultra reduction");
      return;
    }
    for (std::size_t i = 0; i < ultra_ids.size(); ++i) {
      if (!(FGu.filter[i] == ctx.FG.filter[static_cast<std::size_t>(ultra_ids[i])])) {
        fail(c, "ultra groupoid arrows differ from the ultra reduction");
        return;
      }
      for (std::size_t j = 0; j < ultra_ids.size(); ++j) {
        int big = ctx.FG.g.product(ultra_ids[i], ultra_ids[j]);
        int small = FGu.g.product(static_cast<int>(i), static_cast<int>(j));
        bool same = (big < 0 && small < 0) ||
                    (big >= 0 && small >= 0 &&
                     ctx.FG.filter[static_cast<std::size_t>(big)] == FGu.filter[static_cast<std::size_t>(small)]);
        if (!same) {
          fail(c, "ultra groupoid composition differs from the ultra reduction");
          return;
        }
      }
    }
  });
}

void check_germ_construction(const VerifyContext& ctx, ClaimRunner& runner) {
  const auto& S = ctx.S;
  const auto& E = ctx.E;
  const auto& GG = ctx.GG;

  runner.run("construction.germ-relation", [&](Claim& c) {
    // All points, grouped by carrier; the relation only relates equal
    // carriers, so reflexivity/symmetry/transitivity quantify within groups.
    std::vector<GermPoint> lambda;
    for (const auto& cls : GG.members) {
      lambda.insert(lambda.end(), cls.begin(), cls.end());
    }
    std::sort(lambda.begin(), lambda.end());
    c.domain = "|Lambda|=" + std::to_string(lambda.size());
    std::map<IndexSet, std::vector<GermPoint>> groups;
    for (const auto& p : lambda) {
      if (!germ_equiv(S, E, p, p)) {
        fail(c, "relation is not reflexive at " + S.label(p.element));
      }
      groups[p.carrier].push_back(p);
    }
    for (const auto& [carrier, pts] : groups) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          if (germ_equiv(S, E, pts[i], pts[j]) != germ_equiv(S, E, pts[j], pts[i])) {
            fail(c, "relation is not symmetric at (" + S.label(pts[i].element) + ", " +
                        S.label(pts[j].element) + ")");
          }
        }
      }
      for (const auto& p : pts) {
        for (const auto& q : pts) {
          for (const auto& r : pts) {
            if (germ_equiv(S, E, p, q) && germ_equiv(S, E, q, r) && !germ_equiv(S, E, p, r)) {
              fail(c, "relation is not transitive at (" + S.label(p.element) + ", " +
                          S.label(q.element) + ", " + S.label(r.element) + ") over " +
                          set_label(E.semilattice, p.carrier));
            }
          }
        }
      }
    }
    // The built partition must match the relation: members pairwise
    // equivalent, distinct classes inequivalent.
    for (const auto& cls : GG.members) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          if (!germ_equiv(S, E, cls[i], cls[j])) {
            fail(c, "class members not equivalent: (" + S.label(cls[i].element) + ", " +
                        S.label(cls[j].element) + ") over " +
                        set_label(E.semilattice, cls[i].carrier));
          }
        }
      }
    }
    for (std::size_t a = 0; a < GG.members.size(); ++a) {
      for (std::size_t b = a + 1; b < GG.members.size(); ++b) {
        if (GG.canonical[a].carrier == GG.canonical[b].carrier &&
            germ_equiv(S, E, GG.canonical[a], GG.canonical[b])) {
          fail(c, "equivalent points ended in distinct classes: (" +
                      S.label(GG.canonical[a].element) + ", " + S.label(GG.canonical[b].element) +
                      ") over " + set_label(E.semilattice, GG.canonical[a].carrier));
        }
      }
    }
  });

  runner.run("construction.germ-groupoid", [&](Claim& c) {
    c.domain = "arrows=" + std::to_string(GG.g.num_arrows) +
               ", universe=" + std::to_string(GG.universe.size());
    auto axioms = check_axioms(GG.g);
    if (!axioms.ok) {
      fail(c, axioms.witness);
    }
    // Composition and inversion are independent of representatives.
    for (int a = 0; a < GG.g.num_arrows && c.pass; ++a) {
      for (const auto& p : GG.members[static_cast<std::size_t>(a)]) {
        GermPoint ip{S.inverse(p.element), act_on_efilter(S, E, p.element, p.carrier)};
        if (GG.arrow_of(ip) != GG.g.inverse(a)) {
          fail(c, "inversion depends on the representative at " + GG.g.label(a));
        }
      }
    }
    for (int a = 0; a < GG.g.num_arrows && c.pass; ++a) {
      for (int b = 0; b < GG.g.num_arrows && c.pass; ++b) {
        if (!GG.g.composable(a, b)) {
          continue;
        }
        int expected = GG.g.product(a, b);
        for (const auto& p : GG.members[static_cast<std::size_t>(a)]) {
          for (const auto& q : GG.members[static_cast<std::size_t>(b)]) {
            GermPoint prod{S.product(p.element, q.element), q.carrier};
            if (GG.arrow_of(prod) != expected) {
              fail(c, "composition depends on the representatives at (" + GG.g.label(a) + ", " +
                          GG.g.label(b) + ")");
            }
          }
        }
      }
    }
    // Unit space is {[e, xi] : e in xi}, identified with the universe.
    std::vector<int> unit_of_xi;
    for (const auto& xi : GG.universe) {
      unit_of_xi.push_back(GG.arrow_of({E.to_s(xi.min()), xi}));
    }
    auto units = GG.g.units();
    std::vector<int> sorted_units = unit_of_xi;
    std::sort(sorted_units.begin(), sorted_units.end());
    if (sorted_units != units) {
      fail(c, "unit space does not correspond to the E-filter universe");
    }
  });

  runner.run("construction.action-laws", [&](Claim& c) {
    long cases = 0;
    for (int s = 0; s < S.size() && c.pass; ++s) {
      int d = E.from_s(S.product(S.inverse(s), s));
      int r = E.from_s(S.product(s, S.inverse(s)));
      for (const auto& xi : ctx.efp) {
        if (!xi.contains(d)) {
          continue;
        }
        ++cases;
        IndexSet bs = act_on_efilter(S, E, s, xi);
        if (!is_filter_set(E.semilattice, bs) || bs.contains(0)) {
          fail(c, "the action image is not a proper E-filter at s = " + S.label(s));
          break;
        }
        if (!bs.contains(r)) {
          fail(c, "the action image misses s s^-1 at s = " + S.label(s));
          break;
        }
        if (!(act_on_efilter(S, E, S.inverse(s), bs) == xi)) {
          fail(c, "acting by s^-1 does not undo acting by s at s = " + S.label(s));
          break;
        }
        bool xi_ultra = index_of(ctx.eful, xi) >= 0;
        if (xi_ultra && index_of(ctx.eful, bs) < 0) {
          fail(c, "the action does not preserve E-ultrafilters at s = " + S.label(s));
          break;
        }
        bool xi_tight = std::find(ctx.tightE.tight.begin(), ctx.tightE.tight.end(), xi) !=
                        ctx.tightE.tight.end();
        if (xi_tight && std::find(ctx.tightE.tight.begin(), ctx.tightE.tight.end(), bs) ==
                            ctx.tightE.tight.end()) {
          fail(c, "the action does not preserve tight E-filters at s = " + S.label(s));
          break;
        }
      }
    }
    // acting by st is acting by t, then by s, wherever either is defined.
    for (int s = 0; s < S.size() && c.pass; ++s) {
      for (int t = 0; t < S.size() && c.pass; ++t) {
        int st = S.product(s, t);
        int d_st = E.from_s(S.product(S.inverse(st), st));
        int d_t = E.from_s(S.product(S.inverse(t), t));
        int d_s = E.from_s(S.product(S.inverse(s), s));
        for (const auto& xi : ctx.efp) {
          bool lhs_defined = xi.contains(d_st);
          bool rhs_defined = xi.contains(d_t) && act_on_efilter(S, E, t, xi).contains(d_s);
          ++cases;
          if (lhs_defined != rhs_defined) {
            fail(c, "domains of the st-action and the composite action differ at (" + S.label(s) + ", " +
                        S.label(t) + ")");
            break;
          }
          if (lhs_defined && !(act_on_efilter(S, E, st, xi) == act_on_efilter(S, E, s, act_on_efilter(S, E, t, xi)))) {
            fail(c, "the st-action differs from the composite action at (" + S.label(s) + ", " + S.label(t) + ")");
            break;
          }
        }
      }
    }
    c.domain = "cases=" + std::to_string(cases);
    // The standalone ultragerm groupoid agrees with the reduction to
    // ultrafilter carriers.
    auto GGu = build_germ_groupoid(S, E, GermKind::ultra);
    std::vector<int> ultra_ids;
    for (int a = 0; a < GG.g.num_arrows; ++a) {
      if (index_of(ctx.eful, GG.canonical[static_cast<std::size_t>(a)].carrier) >= 0) {
        ultra_ids.push_back(a);
      }
    }
    if (static_cast<int>(ultra_ids.size()) != GGu.g.num_arrows) {
      fail(c, "ultragerm groupoid arrow count differs from the reduction");
      return;
    }
    for (std::size_t i = 0; i < ultra_ids.size(); ++i) {
      if (GG.arrow_of(GGu.canonical[i]) != ultra_ids[i]) {
        fail(c, "ultragerm groupoid classes differ from the reduction");
        return;
      }
    }
  });
}

void check_unit_space(const VerifyContext& ctx, ClaimRunner& runner) {
  const auto& S = ctx.S;
  const auto& E = ctx.E;

  runner.run("unit-space.bijection", [&](Claim& c) {
    auto idem = enumerate_filters(S, EnumerationMode::principal, FilterSelect::idempotent);
    c.domain = "units=" + std::to_string(idem.size()) + ", E-filters=" + std::to_string(ctx.efp.size());
    std::vector<IndexSet> images;
    for (const auto& F : idem) {
      IndexSet xi = efilter_of_filter(S, E, F);
      if (index_of(ctx.efp, xi) < 0) {
        fail(c, "efilter_of_filter(F) is not a proper E-filter for F = " + set_label(S, F));
        return;
      }
      if (!(filter_of_efilter(S, E, xi) == F)) {
        fail(c, "filter_of_efilter(efilter_of_filter(F)) != F for F = " + set_label(S, F));
        return;
      }
      images.push_back(xi);
    }
    std::sort(images.begin(), images.end());
    if (!(images == ctx.efp)) {
      fail(c, "the unit correspondence is not onto the proper E-filters");
      return;
    }
    for (const auto& xi : ctx.efp) {
      if (!(efilter_of_filter(S, E, filter_of_efilter(S, E, xi)) == xi)) {
        fail(c, "efilter_of_filter(filter_of_efilter(xi)) != xi for xi = " + set_label(E.semilattice, xi));
        return;
      }
    }
  });

  runner.run("unit-space.ultra-restriction", [&](Claim& c) {
    auto ultra = enumerate_filters(S, EnumerationMode::principal, FilterSelect::ultra);
    std::vector<IndexSet> images;
    for (const auto& U : ultra) {
      FilterClassification cls = classify_subset(S, U);
      if (!cls.is_idempotent) {
        continue;
      }
      images.push_back(efilter_of_filter(S, E, U));
    }
    std::sort(images.begin(), images.end());
    c.domain = "idempotent ultrafilters=" + std::to_string(images.size()) +
               ", E-ultrafilters=" + std::to_string(ctx.eful.size());
    if (!(images == ctx.eful)) {
      fail(c, "the unit correspondence does not map idempotent ultrafilters onto the E-ultrafilters");
    }
  });

  // Unit-space topologies: the idempotent-indexed basis, Hausdorffness, and the
  // homeomorphism.
  runner.run("unit-space.homeomorphism", [&](Claim& c) {
    std::vector<IndexSet> unit_patch;
    for (const auto& B : ctx.fpatch) {
      unit_patch.push_back(reindex_subset(B, ctx.unit_ids));
    }
    FiniteTopology units_topology(static_cast<int>(ctx.unit_ids.size()), unit_patch);

    // Idempotent-indexed family F_{e:X}.
    std::vector<IndexSet> efamily;
    for_each_patch_pair(S, [&](int s, const IndexSet& T) {
      if (S.is_idempotent(s)) {
        efamily.push_back(
            reindex_subset(basic_set(S, ctx.FG, BasicKind::patch, s, &T).members, ctx.unit_ids));
      }
    });
    FiniteTopology units_via_e(static_cast<int>(ctx.unit_ids.size()), efamily);
    int w = -1;
    if (!same_topology(units_topology, units_via_e, &w)) {
      fail(c, "idempotent-indexed family generates a different topology (at unit point " +
                  std::to_string(w) + ")");
    }

    FiniteTopology efp_topology(static_cast<int>(ctx.efp.size()), ctx.epatch);
    auto h1 = units_topology.hausdorff_check();
    auto h2 = efp_topology.hausdorff_check();
    if (!h1.hausdorff) {
      fail(c, "unit space is not Hausdorff in the patch topology");
    }
    if (!h2.hausdorff) {
      fail(c, "E-filter space is not Hausdorff in the patch topology");
    }

    std::vector<int> eps_map;
    for (std::size_t i = 0; i < ctx.unit_ids.size(); ++i) {
      if (ctx.efp_of_unit[i] < 0) {
        fail(c, "a groupoid unit is not an idempotent proper filter");
        return;
      }
      eps_map.push_back(ctx.efp_of_unit[i]);
    }
    auto mc = check_map_topology(units_topology, efp_topology, eps_map);
    if (!mc.continuous || !mc.open) {
      fail(c, "the unit correspondence is not a homeomorphism: " + mc.witness);
    }
    c.domain = "unit points=" + std::to_string(ctx.unit_ids.size()) +
               ", basis=" + std::to_string(unit_patch.size());
    if (static_cast<int>(ctx.unit_ids.size()) <= ctx.opts.materialize_max_points &&
        static_cast<int>(ctx.efp.size()) <= ctx.opts.materialize_max_points) {
      auto mm = check_map_topology_materialized(units_topology, efp_topology, eps_map);
      if (mm.continuous != mc.continuous || mm.open != mc.open) {
        fail(c, "materialized and minimal-neighborhood routes disagree");
      }
      c.domain += ", opens materialized";
    }
  });
}

void check_law_suite(const VerifyContext& ctx, ClaimRunner& runner) {
  const auto& S = ctx.S;
  for (const auto& check : check_filter_laws(S, ctx.E, ctx.FG)) {
    runner.run("filter-laws." + check.name, [&](Claim& c) {
      c.domain = "cases=" + std::to_string(check.cases);
      if (!check.ok) {
        fail(c, check.witness);
      }
    });
  }
  for (const auto& check : check_principal_set_laws(S, ctx.E, ctx.FG)) {
    runner.run("principal-sets." + check.name, [&](Claim& c) {
      c.domain = "cases=" + std::to_string(check.cases);
      if (!check.ok) {
        fail(c, check.witness);
      }
    });
  }
  runner.run("embedding.up", [&](Claim& c) {
    // s -> up(s) is injective and multiplicative into the filter semigroup.
    c.domain = "pairs=" + std::to_string(static_cast<long>(S.size()) * S.size());
    std::vector<IndexSet> up_of;
    for (int s = 0; s < S.size(); ++s) {
      up_of.push_back(principal_filter(S, s));
    }
    for (int s = 0; s < S.size(); ++s) {
      for (int t = 0; t < S.size(); ++t) {
        if (s < t && up_of[static_cast<std::size_t>(s)] == up_of[static_cast<std::size_t>(t)]) {
          fail(c, "up(s) = up(t) for distinct s = " + S.label(s) + ", t = " + S.label(t));
        }
        if (!(compose_filters(S, up_of[static_cast<std::size_t>(s)], up_of[static_cast<std::size_t>(t)]) ==
              up_of[static_cast<std::size_t>(S.product(s, t))])) {
          fail(c, "up(s).up(t) != up(st) at (" + S.label(s) + ", " + S.label(t) + ")");
        }
      }
    }
  });
}

void check_source_efilter(const VerifyContext& ctx, ClaimRunner& runner) {
  const auto& S = ctx.S;
  const auto& E = ctx.E;

  runner.run("source-efilter.proper", [&](Claim& c) {
    c.domain = "filters=" + std::to_string(ctx.FG.filter.size());
    for (int a = 0; a < ctx.FG.g.num_arrows; ++a) {
      const IndexSet& F = ctx.FG.filter[static_cast<std::size_t>(a)];
      IndexSet src_ef = source_efilter(S, E, F);
      if (index_of(ctx.efp, src_ef) < 0) {
        fail(c, "source_efilter(F) is not a proper E-filter for F = " + set_label(S, F));
      }
      if (ctx.FG.ultra[static_cast<std::size_t>(a)] && index_of(ctx.eful, src_ef) < 0) {
        fail(c, "source_efilter(U) is not an E-ultrafilter for U = " + set_label(S, F));
      }
    }
  });

  runner.run("source-efilter.germ-independence", [&](Claim& c) {
    long cases = 0;
    for (int a = 0; a < ctx.FG.g.num_arrows && c.pass; ++a) {
      const IndexSet& F = ctx.FG.filter[static_cast<std::size_t>(a)];
      IndexSet src_ef = source_efilter(S, E, F);
      auto members = F.elements();
      int expected = ctx.GG.arrow_of({members.front(), src_ef});
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          ++cases;
          if (!germ_equiv(S, E, {members[i], src_ef}, {members[j], src_ef})) {
            fail(c, "[s, source_efilter(F)] != [t, source_efilter(F)] for F = " + set_label(S, F) + ", s = " +
                        S.label(members[i]) + ", t = " + S.label(members[j]));
          }
        }
        if (ctx.GG.arrow_of({members[i], src_ef}) != expected) {
          fail(c, "germ class of (s, source_efilter(F)) depends on s for F = " + set_label(S, F));
        }
      }
    }
    c.domain = "pairs=" + std::to_string(cases);
  });

  runner.run("source-efilter.inverse", [&](Claim& c) {
    long cases = 0;
    for (int a = 0; a < ctx.FG.g.num_arrows && c.pass; ++a) {
      const IndexSet& F = ctx.FG.filter[static_cast<std::size_t>(a)];
      IndexSet src_ef = source_efilter(S, E, F);
      IndexSet range_ef = source_efilter(S, E, filter_inverse(S, F));
      for (int s : F.elements()) {
        ++cases;
        if (!(act_on_efilter(S, E, s, src_ef) == range_ef)) {
          fail(c, "beta_s(source_efilter(F)) != source_efilter(F^-1) for F = " + set_label(S, F) + ", s = " + S.label(s));
        }
      }
    }
    c.domain = "cases=" + std::to_string(cases);
  });
}

void check_filter_germ_isomorphism(const VerifyContext& ctx, ClaimRunner& runner) {
  const auto& S = ctx.S;
  const auto& E = ctx.E;
  const auto& FG = ctx.FG;
  const auto& GG = ctx.GG;

  runner.run("isomorphism.bijective", [&](Claim& c) {
    c.domain = "filters=" + std::to_string(FG.g.num_arrows) +
               ", germs=" + std::to_string(GG.g.num_arrows);
    if (FG.g.num_arrows != GG.g.num_arrows) {
      fail(c, "arrow counts differ: " + std::to_string(FG.g.num_arrows) + " filters vs " +
                  std::to_string(GG.g.num_arrows) + " germs");
    }
    IndexSet seen(GG.g.num_arrows);
    for (int a = 0; a < FG.g.num_arrows && c.pass; ++a) {
      int g = ctx.phi[static_cast<std::size_t>(a)];
      if (g < 0) {
        fail(c, "the filter-to-germ map is undefined at F = " + FG.g.label(a));
      } else if (seen.contains(g)) {
        fail(c, "the filter-to-germ map is not injective: a second filter maps to " + GG.g.label(g));
      } else {
        seen.insert(g);
      }
    }
  });

  runner.run("isomorphism.inverse-formula", [&](Claim& c) {
    long cases = 0;
    for (int g = 0; g < GG.g.num_arrows && c.pass; ++g) {
      // up(s xi) must be the same filter for every representative and must
      // invert pi.
      IndexSet F = filter_of_germ(S, E, GG.canonical[static_cast<std::size_t>(g)]);
      for (const auto& p : GG.members[static_cast<std::size_t>(g)]) {
        ++cases;
        if (!(filter_of_germ(S, E, p) == F)) {
          fail(c, "the inverse formula depends on the representative at " + GG.g.label(g));
        }
      }
      int a = FG.arrow_of(F);
      if (a < 0 || ctx.phi[static_cast<std::size_t>(a)] != g) {
        fail(c, "pi(filter_of_germ(g)) != g at " + GG.g.label(g));
      }
    }
    for (int a = 0; a < FG.g.num_arrows && c.pass; ++a) {
      const IndexSet& F = FG.filter[static_cast<std::size_t>(a)];
      if (!(filter_of_germ(S, E, germ_of_filter(S, E, F)) == F)) {
        fail(c, "filter_of_germ(pi(F)) != F at F = " + set_label(S, F));
      }
    }
    c.domain = "representatives=" + std::to_string(cases);
  });

  runner.run("isomorphism.homomorphism", [&](Claim& c) {
    c.domain = "pairs=" + std::to_string(static_cast<long>(FG.g.num_arrows) * FG.g.num_arrows);
    auto iso = check_isomorphism(FG.g, GG.g, ctx.phi);
    if (!iso.ok) {
      fail(c, iso.witness);
    }
    for (int a = 0; a < FG.g.num_arrows && c.pass; ++a) {
      int d_f = FG.g.source(a);
      int r_f = FG.g.range(a);
      int g = ctx.phi[static_cast<std::size_t>(a)];
      if (g < 0 || d_f < 0 || r_f < 0) {
        continue;  // reported elsewhere
      }
      if (ctx.phi[static_cast<std::size_t>(d_f)] != GG.g.source(g) ||
          ctx.phi[static_cast<std::size_t>(r_f)] != GG.g.range(g)) {
        fail(c, "the filter-to-germ map does not intertwine d and r at " + FG.g.label(a));
      }
    }
    // source_efilter(F.G) = source_efilter(G) on composable pairs.
    for (int a = 0; a < FG.g.num_arrows && c.pass; ++a) {
      for (int b = 0; b < FG.g.num_arrows && c.pass; ++b) {
        if (!FG.g.composable(a, b)) {
          continue;
        }
        int p = FG.g.product(a, b);
        if (!(source_efilter(S, E, FG.filter[static_cast<std::size_t>(p)]) ==
              source_efilter(S, E, FG.filter[static_cast<std::size_t>(b)]))) {
          fail(c, "source_efilter(F.G) != source_efilter(G) at (" + FG.g.label(a) + ", " + FG.g.label(b) + ")");
        }
      }
    }
  });

  runner.run("isomorphism.topological", [&](Claim& c) {
    for (int a = 0; a < FG.g.num_arrows; ++a) {
      if (ctx.phi[static_cast<std::size_t>(a)] < 0) {
        fail(c, "the filter-to-germ map is undefined at " + FG.g.label(a));
        return;
      }
    }
    FiniteTopology t_filters(FG.g.num_arrows, ctx.fpatch);
    auto gbasis = germ_basis(ctx);
    FiniteTopology t_germs(GG.g.num_arrows, gbasis);
    c.domain = "filter basis=" + std::to_string(ctx.fpatch.size()) +
               ", germ basis=" + std::to_string(gbasis.size());
    auto mc = check_map_topology(t_filters, t_germs, ctx.phi);
    if (!mc.continuous) {
      fail(c, "the filter-to-germ map is not continuous: " + mc.witness);
    }
    if (!mc.open) {
      fail(c, "the filter-to-germ map is not open: " + mc.witness);
    }
    if (FG.g.num_arrows <= ctx.opts.materialize_max_points &&
        GG.g.num_arrows <= ctx.opts.materialize_max_points) {
      auto mm = check_map_topology_materialized(t_filters, t_germs, ctx.phi);
      if (mm.continuous != mc.continuous || mm.open != mc.open) {
        fail(c, "materialized and minimal-neighborhood routes disagree");
      }
      c.domain += ", opens materialized";
    }
  });

  runner.run("isomorphism.preimage-identity", [&](Claim& c) {
    // pi^-1(Theta(s, A)) = F_s n d^-1(epsilon^-1(A)) for basic A.
    long cases = 0;
    for (int s = 0; s < S.size() && c.pass; ++s) {
      int d = E.from_s(S.product(S.inverse(s), s));
      IndexSet domain = universe_with_idempotent(GG, d);
      for (const auto& A : ctx.epatch) {
        if (!A.is_subset_of(domain)) {
          continue;
        }
        ++cases;
        IndexSet theta_set = germs_over(S, E, GG, s, A);
        IndexSet lhs(FG.g.num_arrows);
        for (int a = 0; a < FG.g.num_arrows; ++a) {
          int g = ctx.phi[static_cast<std::size_t>(a)];
          if (g >= 0 && theta_set.contains(g)) {
            lhs.insert(a);
          }
        }
        IndexSet rhs(FG.g.num_arrows);
        for (int a = 0; a < FG.g.num_arrows; ++a) {
          if (FG.filter[static_cast<std::size_t>(a)].contains(s) &&
              A.contains(ctx.source_index[static_cast<std::size_t>(a)])) {
            rhs.insert(a);
          }
        }
        if (!(lhs == rhs)) {
          fail(c, "the preimage identity fails at s = " + S.label(s));
        }
      }
    }
    c.domain = "basic sets=" + std::to_string(cases);
  });

  runner.run("isomorphism.image-identity", [&](Claim& c) {
    // pi(F_{s:T}) = Theta(s, eps(d(F_{s:T}))).
    long cases = 0;
    for_each_patch_pair(S, [&](int s, const IndexSet& T) {
      if (!c.pass) {
        return;
      }
      ++cases;
      IndexSet members = basic_set(S, FG, BasicKind::patch, s, &T).members;
      IndexSet image(GG.g.num_arrows);
      IndexSet A(static_cast<int>(GG.universe.size()));
      members.for_each([&](int a) {
        int g = ctx.phi[static_cast<std::size_t>(a)];
        if (g >= 0) {
          image.insert(g);
        }
        A.insert(ctx.source_index[static_cast<std::size_t>(a)]);
      });
      if (!(image == germs_over(S, E, GG, s, A))) {
        fail(c, "the image identity fails at s = " + S.label(s) + ", T = " +
                    set_label(S, T));
        return;
      }
    });
    c.domain = "patch sets=" + std::to_string(cases);
  });
}

void check_restriction(const VerifyContext& ctx, ClaimRunner& runner) {
  const auto& S = ctx.S;
  const auto& E = ctx.E;
  const auto& FG = ctx.FG;
  const auto& GG = ctx.GG;

  auto ultra_ids = FG.ultra_arrows().elements();
  std::vector<int> germ_ultra_ids;
  for (int g = 0; g < GG.g.num_arrows; ++g) {
    if (index_of(ctx.eful, GG.canonical[static_cast<std::size_t>(g)].carrier) >= 0) {
      germ_ultra_ids.push_back(g);
    }
  }

  runner.run("restriction.ultra-image", [&](Claim& c) {
    c.domain = "ultrafilters=" + std::to_string(ultra_ids.size()) +
               ", ultragerms=" + std::to_string(germ_ultra_ids.size());
    std::vector<int> image;
    for (int a : ultra_ids) {
      image.push_back(ctx.phi[static_cast<std::size_t>(a)]);
    }
    std::sort(image.begin(), image.end());
    if (image != germ_ultra_ids) {
      fail(c, "the image of the ultrafilter arrows differs from the ultragerm arrows");
    }
    // The ultrafilters are an ideal: composing with an ultrafilter lands in
    // the ultrafilters.
    for (int a = 0; a < FG.g.num_arrows && c.pass; ++a) {
      for (int b : ultra_ids) {
        if (FG.g.composable(a, b) &&
            !FG.ultra[static_cast<std::size_t>(FG.g.product(a, b))]) {
          fail(c, "F.U not ultra for composable (F, U) at (" + FG.g.label(a) + ", " +
                      FG.g.label(b) + ")");
        }
      }
    }
  });

  runner.run("restriction.topological", [&](Claim& c) {
    auto FGu = build_filter_groupoid(S, E, FilterKind::ultra);
    auto GGu = build_germ_groupoid(S, E, GermKind::ultra);
    c.domain = "arrows=" + std::to_string(FGu.g.num_arrows);
    std::vector<int> phi_u;
    for (int a = 0; a < FGu.g.num_arrows; ++a) {
      phi_u.push_back(GGu.arrow_of(germ_of_filter(S, E, FGu.filter[static_cast<std::size_t>(a)])));
    }
    auto iso = check_isomorphism(FGu.g, GGu.g, phi_u);
    if (!iso.ok) {
      fail(c, iso.witness);
      return;
    }

    // Subspace topologies on the ultra arrows, both sides.
    std::vector<IndexSet> sub_patch;
    for (const auto& B : ctx.fpatch) {
      sub_patch.push_back(reindex_subset(B, ultra_ids));
    }
    FiniteTopology t_sub_filters(static_cast<int>(ultra_ids.size()), sub_patch);
    auto gbasis = germ_basis(ctx);
    std::vector<IndexSet> sub_germ;
    for (const auto& B : gbasis) {
      sub_germ.push_back(reindex_subset(B, germ_ultra_ids));
    }
    FiniteTopology t_sub_germs(static_cast<int>(germ_ultra_ids.size()), sub_germ);
    std::vector<int> phi_sub;
    for (int a : ultra_ids) {
      int g = ctx.phi[static_cast<std::size_t>(a)];
      auto it = std::lower_bound(germ_ultra_ids.begin(), germ_ultra_ids.end(), g);
      if (it == germ_ultra_ids.end() || *it != g) {
        fail(c, "the map does not send the ultrafilter arrow " + ctx.FG.g.label(a) +
                    " to an ultragerm");
        return;
      }
      phi_sub.push_back(static_cast<int>(it - germ_ultra_ids.begin()));
    }
    auto mc = check_map_topology(t_sub_filters, t_sub_germs, phi_sub);
    if (!mc.continuous || !mc.open) {
      fail(c, "the restricted map is not a homeomorphism: " + mc.witness);
      return;
    }

    // The intrinsic topologies agree with the subspace topologies.
    FiniteTopology t_intrinsic_filters(FGu.g.num_arrows, patch_basis(S, FGu));
    int w = -1;
    if (!same_topology(t_sub_filters, t_intrinsic_filters, &w)) {
      fail(c, "subspace patch differs from the intrinsic patch on ultrafilters (point " +
                  std::to_string(w) + ")");
      return;
    }
    std::vector<IndexSet> intrinsic_germ;
    auto epatch_u = efilter_patch_basis(E, GGu.universe);
    for (int s = 0; s < S.size(); ++s) {
      int d = E.from_s(S.product(S.inverse(s), s));
      IndexSet domain = universe_with_idempotent(GGu, d);
      for (const auto& B : epatch_u) {
        if (B.is_subset_of(domain)) {
          intrinsic_germ.push_back(germs_over(S, E, GGu, s, B));
        }
      }
    }
    FiniteTopology t_intrinsic_germs(GGu.g.num_arrows, intrinsic_germ);
    // Transport the subspace topology across the arrow correspondence
    // GGu arrow j <-> position of GG.arrow_of(canonical) in germ_ultra_ids.
    bool transport_ok = true;
    std::vector<IndexSet> transported;
    for (const auto& B : sub_germ) {
      IndexSet moved(GGu.g.num_arrows);
      B.for_each([&](int pos) {
        int gg_arrow = germ_ultra_ids[static_cast<std::size_t>(pos)];
        int ggu_arrow = GGu.arrow_of(GG.canonical[static_cast<std::size_t>(gg_arrow)]);
        if (ggu_arrow < 0) {
          transport_ok = false;
          return;
        }
        moved.insert(ggu_arrow);
      });
      transported.push_back(moved);
    }
    if (!transport_ok) {
      fail(c, "ultragerm classes do not correspond across the reduction");
      return;
    }
    FiniteTopology t_transported(GGu.g.num_arrows, transported);
    if (!same_topology(t_transported, t_intrinsic_germs, &w)) {
      fail(c, "subspace topology differs from the intrinsic ultragerm topology (point " +
                  std::to_string(w) + ")");
    }
  });

  runner.run("restriction.ultra-basis", [&](Claim& c) {
    std::vector<IndexSet> u_basis;
    for (int s = 0; s < S.size(); ++s) {
      u_basis.push_back(
          reindex_subset(basic_set(S, FG, BasicKind::ultra, s).members, ultra_ids));
    }
    std::vector<IndexSet> sub_patch;
    for (const auto& B : ctx.fpatch) {
      sub_patch.push_back(reindex_subset(B, ultra_ids));
    }
    c.domain = "points=" + std::to_string(ultra_ids.size()) +
               ", ultra basics=" + std::to_string(u_basis.size());
    FiniteTopology via_us(static_cast<int>(ultra_ids.size()), u_basis);
    FiniteTopology via_patch(static_cast<int>(ultra_ids.size()), sub_patch);
    int w = -1;
    if (!same_topology(via_us, via_patch, &w)) {
      fail(c, "the ultra basics do not generate the subspace patch topology (point " + std::to_string(w) +
                  ")");
    }
  });
}

void check_remarks(const VerifyContext& ctx, ClaimRunner& runner) {
  const auto& S = ctx.S;
  const auto& E = ctx.E;

  runner.run("hausdorff.principal-basis", [&](Claim& c) {
    std::vector<IndexSet> unit_principal;
    for (const auto& B : ctx.f_of) {
      unit_principal.push_back(reindex_subset(B, ctx.unit_ids));
    }
    FiniteTopology t(static_cast<int>(ctx.unit_ids.size()), unit_principal);
    auto h = t.hausdorff_check();
    int we = -1, wf = -1;
    for (int i : E.elements) {
      for (int j : E.elements) {
        if (i != j && S.product(i, j) != S.zero() && we < 0) {
          we = i;
          wf = j;
        }
      }
    }
    bool expect_non_hausdorff = we >= 0;
    c.domain = "unit points=" + std::to_string(ctx.unit_ids.size());
    if (h.hausdorff == expect_non_hausdorff) {
      fail(c, expect_non_hausdorff
                  ? "expected non-Hausdorff (witness idempotents " + S.label(we) + ", " +
                        S.label(wf) + " with nonzero product) but no inseparable pair found"
                  : "expected Hausdorff (all distinct idempotent products are zero) but found an "
                    "inseparable pair");
      return;
    }
    if (!h.hausdorff) {
      c.witness = "non-Hausdorff as predicted; inseparable units " +
                  set_label(S, ctx.FG.filter[static_cast<std::size_t>(
                                   ctx.unit_ids[static_cast<std::size_t>(h.witness_a)])]) +
                  " and " +
                  set_label(S, ctx.FG.filter[static_cast<std::size_t>(
                                   ctx.unit_ids[static_cast<std::size_t>(h.witness_b)])]);
    } else {
      c.witness = "Hausdorff as predicted; no distinct idempotents with nonzero product";
    }
  });

  runner.run("tight.arrows", [&](Claim& c) {
    // T = pi^-1(G_tight): tight filter arrows are exactly the preimages of
    // the germs over tight E-filters.
    IndexSet from_pi(ctx.FG.g.num_arrows);
    for (int a = 0; a < ctx.FG.g.num_arrows; ++a) {
      int g = ctx.phi[static_cast<std::size_t>(a)];
      if (g >= 0 &&
          std::find(ctx.tightE.tight.begin(), ctx.tightE.tight.end(),
                    ctx.GG.canonical[static_cast<std::size_t>(g)].carrier) != ctx.tightE.tight.end()) {
        from_pi.insert(a);
      }
    }
    c.domain = "arrows=" + std::to_string(ctx.FG.g.num_arrows);
    if (!(from_pi == ctx.FG.tight_arrows())) {
      fail(c, "tight arrows differ from the preimage of the tight germ arrows");
    }
  });

  runner.run("tight.compactable", [&](Claim& c) {
    c.domain = "tight=" + std::to_string(ctx.tightE.tight.size()) +
               ", ultra=" + std::to_string(ctx.eful.size());
    if (!ctx.tightE.equals_ultra) {
      fail(c, "tight E-filters differ from the E-ultrafilters");
    }
    std::vector<IndexSet> tight_sorted = ctx.tightE.tight;
    std::sort(tight_sorted.begin(), tight_sorted.end());
    if (!(tight_sorted == ctx.eful)) {
      fail(c, "tight E-filter list differs from the E-ultrafilter list");
    }
    if (!(ctx.FG.tight_arrows() == ctx.FG.ultra_arrows())) {
      fail(c, "tight filter arrows differ from the ultrafilter arrows");
    }
    c.witness = c.pass ? "compactable: tight = ultra" : c.witness;
  });
}

}  // namespace

VerificationReport verify_all(const InverseSemigroup& S, const VerifyOptions& opts) {
  VerificationReport report;
  ClaimRunner runner(report);

  VerifyContext ctx(S, opts);
  ctx.E = idempotents(S);
  ctx.proper = enumerate_filters(S, EnumerationMode::principal, FilterSelect::proper);
  ctx.efp = efilters(S, ctx.E, EFilterSelect::proper);
  ctx.eful = efilters(S, ctx.E, EFilterSelect::ultra);
  ctx.tightE = tight_efilters(S, ctx.E);

  runner.run("enumeration.oracle", [&](Claim& c) {
    if (S.size() > opts.bruteforce_cap) {
      c.skipped = true;
      c.witness = "skipped: n = " + std::to_string(S.size()) + " exceeds the bruteforce cap " +
                  std::to_string(opts.bruteforce_cap);
      return;
    }
    c.domain = "subsets=2^" + std::to_string(S.size());
    for (auto select : {FilterSelect::all, FilterSelect::proper, FilterSelect::ultra,
                        FilterSelect::idempotent}) {
      auto a = enumerate_filters(S, EnumerationMode::principal, select);
      auto b = enumerate_filters(S, EnumerationMode::bruteforce, select);
      if (!(a == b)) {
        fail(c, "principal and bruteforce enumerations disagree");
        return;
      }
    }
  });

  ctx.FG = build_filter_groupoid(S, ctx.E, FilterKind::proper);

  runner.run("fault-injection", [&](Claim& c) {
    switch (opts.fault) {
      case FaultKind::none:
        c.skipped = true;
        c.witness = "no fault requested";
        return;
      case FaultKind::reroute_compose: {
        for (int a = 0; a < ctx.FG.g.num_arrows; ++a) {
          for (int b = 0; b < ctx.FG.g.num_arrows; ++b) {
            int p = ctx.FG.g.product(a, b);
            if (p >= 0 && ctx.FG.g.num_arrows > 1) {
              int rerouted = (p + 1) % ctx.FG.g.num_arrows;
              ctx.FG.g.set_product(a, b, rerouted);
              c.witness = "rerouted compose(" + ctx.FG.g.label(a) + ", " + ctx.FG.g.label(b) +
                          ") from " + ctx.FG.g.label(p) + " to " + ctx.FG.g.label(rerouted);
              return;
            }
          }
        }
        fail(c, "no reroutable composition entry in the filter groupoid");
        return;
      }
      case FaultKind::flip_germ_equiv:
        // applied during germ construction below
        c.witness = "flip requested; applied at germ construction";
        return;
    }
  });

  ctx.GG = build_germ_groupoid(S, ctx.E, GermKind::proper, opts.fault == FaultKind::flip_germ_equiv);
  if (opts.fault == FaultKind::flip_germ_equiv) {
    runner.run("fault-injection.flip", [&](Claim& c) {
      if (!ctx.GG.injected_flip) {
        fail(c, "no same-carrier pair available to flip");
        return;
      }
      c.witness = "flipped germ equivalence of (" + S.label(ctx.GG.injected_flip->first.element) +
                  ", " + S.label(ctx.GG.injected_flip->second.element) + ") over " +
                  set_label(ctx.E.semilattice, ctx.GG.injected_flip->first.carrier);
    });
  }

  ctx.phi = filter_to_germ_map(S, ctx.E, ctx.FG, ctx.GG);
  ctx.f_of = principal_basis(S, ctx.FG);
  ctx.fpatch = patch_basis(S, ctx.FG);
  ctx.epatch = efilter_patch_basis(ctx.E, ctx.efp);
  for (int a = 0; a < ctx.FG.g.num_arrows; ++a) {
    IndexSet src_ef = source_efilter(S, ctx.E, ctx.FG.filter[static_cast<std::size_t>(a)]);
    ctx.source_index.push_back(index_of(ctx.efp, src_ef));
  }
  ctx.unit_ids = ctx.FG.g.units();
  for (int u : ctx.unit_ids) {
    // tampered tables can make a non-idempotent arrow look like a unit
    int idx = -1;
    try {
      idx = index_of(ctx.efp, efilter_of_filter(S, ctx.E, ctx.FG.filter[static_cast<std::size_t>(u)]));
    } catch (const Error&) {
    }
    ctx.efp_of_unit.push_back(idx);
  }

  check_filter_construction(ctx, runner);
  check_germ_construction(ctx, runner);
  check_unit_space(ctx, runner);
  check_law_suite(ctx, runner);
  check_source_efilter(ctx, runner);
  check_filter_germ_isomorphism(ctx, runner);
  check_restriction(ctx, runner);
  check_remarks(ctx, runner);
  return report;
}

std::string format_report(const VerificationReport& report, bool with_timings) {
  std::ostringstream out;
  if (!report.instance.empty()) {
    out << "instance: " << report.instance << "\n";
  }
  for (const auto& c : report.claims) {
    out << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << "  " << c.id;
    if (!c.domain.empty()) {
      out << " (" << c.domain << ")";
    }
    if (with_timings) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " [%.2f ms]", c.ms);
      out << buf;
    }
    if (!c.witness.empty()) {
      out << (c.pass ? " -- " : ": ") << c.witness;
    }
    out << "\n";
  }
  out << "overall: " << (report.all_pass() ? "PASS" : "FAIL") << " ("
      << report.claims.size() << " claims)\n";
  return out.str();
}

}  // namespace isg

#include "isg/germ_groupoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "isg/errors.hpp"
#include "isg/topology.hpp"

namespace isg {

bool is_germ_point(const InverseSemigroup& S, const IdempotentSet& E, const GermPoint& p) {
  if (p.element < 0 || p.element >= S.size() || p.carrier.universe() != E.size()) {
    return false;
  }
  if (!is_filter_set(E.semilattice, p.carrier) || p.carrier.contains(0)) {
    return false;
  }
  int d = E.from_s(S.product(S.inverse(p.element), p.element));
  return d >= 0 && p.carrier.contains(d);
}

IndexSet act_on_efilter(const InverseSemigroup& S, const IdempotentSet& E, int s,
                        const IndexSet& xi) {
  int d = E.from_s(S.product(S.inverse(s), s));
  if (d < 0 || !xi.contains(d)) {
    throw DomainError("acting by s requires s^-1 s in the E-filter");
  }
  IndexSet out(E.size());
  xi.for_each([&](int e) {
    int conj = S.product(S.product(s, E.to_s(e)), S.inverse(s));
    for (int f = 0; f < E.size(); ++f) {
      if (S.leq(conj, E.to_s(f))) {
        out.insert(f);
      }
    }
  });
  return out;
}

bool germ_equiv(const InverseSemigroup& S, const IdempotentSet& E, const GermPoint& p,
                const GermPoint& q) {
  if (!is_germ_point(S, E, p) || !is_germ_point(S, E, q)) {
    return false;
  }
  if (!(p.carrier == q.carrier)) {
    return false;
  }
  bool found = false;
  p.carrier.for_each([&](int e) {
    int es = E.to_s(e);
    if (S.product(p.element, es) == S.product(q.element, es)) {
      found = true;
    }
  });
  return found;
}

int GermGroupoid::universe_index(const IndexSet& xi) const {
  auto it = std::lower_bound(universe.begin(), universe.end(), xi);
  if (it != universe.end() && *it == xi) {
    return static_cast<int>(it - universe.begin());
  }
  return -1;
}

namespace {

std::string germ_label(const InverseSemigroup& S, const IdempotentSet& E, const GermPoint& p) {
  std::string out = "[" + S.label(p.element) + "|{";
  bool first = true;
  p.carrier.for_each([&](int e) {
    if (!first) {
      out += ",";
    }
    out += S.label(E.to_s(e));
    first = false;
  });
  return out + "}]";
}

}  // namespace

GermGroupoid build_germ_groupoid(const InverseSemigroup& S, const IdempotentSet& E, GermKind kind,
                                 bool inject_equiv_flip) {
  GermGroupoid GG;
  GG.kind = kind;
  switch (kind) {
    case GermKind::proper:
      GG.universe = efilters(S, E, EFilterSelect::proper);
      break;
    case GermKind::ultra:
      GG.universe = efilters(S, E, EFilterSelect::ultra);
      break;
    case GermKind::tight:
      GG.universe = tight_efilters(S, E).tight;
      break;
  }
  std::sort(GG.universe.begin(), GG.universe.end());

  // Lambda, in canonical point order.
  std::vector<GermPoint> lambda;
  for (const auto& xi : GG.universe) {
    for (int s = 0; s < S.size(); ++s) {
      int d = E.from_s(S.product(S.inverse(s), s));
      if (d >= 0 && xi.contains(d)) {
        lambda.push_back({s, xi});
      }
    }
  }
  std::sort(lambda.begin(), lambda.end());

  std::optional<std::pair<GermPoint, GermPoint>> flip;
  if (inject_equiv_flip) {
    for (std::size_t i = 0; i < lambda.size() && !flip; ++i) {
      for (std::size_t j = i + 1; j < lambda.size() && !flip; ++j) {
        if (lambda[i].carrier == lambda[j].carrier) {
          flip = std::make_pair(lambda[i], lambda[j]);
        }
      }
    }
    GG.injected_flip = flip;
  }

  auto equiv = [&](const GermPoint& p, const GermPoint& q) {
    bool verdict = germ_equiv(S, E, p, q);
    if (flip && ((p == flip->first && q == flip->second) ||
                 (p == flip->second && q == flip->first))) {
      verdict = !verdict;
    }
    return verdict;
  };

  // Partition by union-find over the (possibly flipped) relation.
  std::vector<int> parent(lambda.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      if (lambda[i].carrier == lambda[j].carrier && equiv(lambda[i], lambda[j])) {
        parent[static_cast<std::size_t>(find(static_cast<int>(j)))] = find(static_cast<int>(i));
      }
    }
  }
  std::map<int, std::vector<GermPoint>> classes;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    classes[find(static_cast<int>(i))].push_back(lambda[i]);
  }
  for (auto& [root, pts] : classes) {
    GG.members.push_back(pts);  // already sorted: lambda was sorted
  }
  std::sort(GG.members.begin(), GG.members.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  int n = static_cast<int>(GG.members.size());
  for (int a = 0; a < n; ++a) {
    GG.canonical.push_back(GG.members[static_cast<std::size_t>(a)].front());
    for (const auto& p : GG.members[static_cast<std::size_t>(a)]) {
      GG.point_arrow.emplace(p, a);
    }
  }

  GG.g.num_arrows = n;
  GG.g.inv.resize(static_cast<std::size_t>(n));
  GG.g.compose.assign(static_cast<std::size_t>(n) * n, -1);
  GG.g.labels.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const GermPoint& p = GG.canonical[static_cast<std::size_t>(a)];
    GG.g.labels[static_cast<std::size_t>(a)] = germ_label(S, E, p);
    GermPoint ip{S.inverse(p.element), act_on_efilter(S, E, p.element, p.carrier)};
    int ia = GG.arrow_of(ip);
    if (ia < 0) {
      throw Error("germ groupoid is not closed under inversion");
    }
    GG.g.inv[static_cast<std::size_t>(a)] = ia;
  }
  for (int a = 0; a < n; ++a) {
    const GermPoint& p = GG.canonical[static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b) {
      const GermPoint& q = GG.canonical[static_cast<std::size_t>(b)];
      // ([s, xi], [t, eta]) composable iff xi is the image of eta under t
      if (p.carrier == act_on_efilter(S, E, q.element, q.carrier)) {
        GermPoint prod{S.product(p.element, q.element), q.carrier};
        int c = GG.arrow_of(prod);
        if (c < 0) {
          throw Error("germ groupoid is not closed under composition");
        }
        GG.g.set_product(a, b, c);
      }
    }
  }
  return GG;
}

int invert_germ(const GermGroupoid& GG, int arrow) { return GG.g.inverse(arrow); }

int compose_germs(const InverseSemigroup& S, const IdempotentSet& E, const GermGroupoid& GG,
                  int left, int right) {
  (void)S;
  (void)E;
  if (!GG.g.composable(left, right)) {
    throw NotComposable("germs " + GG.g.label(left) + " and " + GG.g.label(right) +
                        " are not composable");
  }
  return GG.g.product(left, right);
}

IndexSet germs_over(const InverseSemigroup& S, const IdempotentSet& E, const GermGroupoid& GG,
                    int s, const IndexSet& A) {
  int d = E.from_s(S.product(S.inverse(s), s));
  IndexSet out(GG.g.num_arrows);
  bool ok = true;
  A.for_each([&](int ui) {
    const IndexSet& xi = GG.universe[static_cast<std::size_t>(ui)];
    if (d < 0 || !xi.contains(d)) {
      ok = false;
      return;
    }
    int arrow = GG.arrow_of({s, xi});
    if (arrow >= 0) {
      out.insert(arrow);
    }
  });
  if (!ok) {
    throw BadBase("germs_over requires every E-filter of A to contain s^-1 s");
  }
  return out;
}

IndexSet universe_with_idempotent(const GermGroupoid& GG, int e_index) {
  IndexSet out(static_cast<int>(GG.universe.size()));
  for (std::size_t i = 0; i < GG.universe.size(); ++i) {
    if (GG.universe[i].contains(e_index)) {
      out.insert(static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace isg

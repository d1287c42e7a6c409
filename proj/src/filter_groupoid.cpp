#include "isg/filter_groupoid.hpp"

#include <algorithm>

#include "isg/errors.hpp"
#include "isg/topology.hpp"

namespace isg {

IndexSet compose_filters(const InverseSemigroup& S, const IndexSet& F, const IndexSet& G) {
  IndexSet products(S.size());
  F.for_each([&](int f) { G.for_each([&](int g) { products.insert(S.product(f, g)); }); });
  return up_closure(S, products);
}

IndexSet filter_inverse(const InverseSemigroup& S, const IndexSet& F) {
  IndexSet out(S.size());
  F.for_each([&](int a) { out.insert(S.inverse(a)); });
  return out;
}

IndexSet filter_d(const InverseSemigroup& S, const IndexSet& F) {
  return compose_filters(S, filter_inverse(S, F), F);
}

IndexSet filter_r(const InverseSemigroup& S, const IndexSet& F) {
  return compose_filters(S, F, filter_inverse(S, F));
}

bool filters_composable(const InverseSemigroup& S, const IndexSet& F, const IndexSet& G) {
  return filter_d(S, F) == filter_r(S, G);
}

IndexSet source_efilter(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& F) {
  return efilter_of_filter(S, E, filter_d(S, F));
}

IndexSet FilterGroupoid::ultra_arrows() const {
  IndexSet out(g.num_arrows);
  for (int a = 0; a < g.num_arrows; ++a) {
    if (ultra[static_cast<std::size_t>(a)]) {
      out.insert(a);
    }
  }
  return out;
}

IndexSet FilterGroupoid::tight_arrows() const {
  IndexSet out(g.num_arrows);
  for (int a = 0; a < g.num_arrows; ++a) {
    if (tight[static_cast<std::size_t>(a)]) {
      out.insert(a);
    }
  }
  return out;
}

namespace {

std::string carrier_label(const InverseSemigroup& S, const IndexSet& F) {
  std::string out = "{";
  bool first = true;
  F.for_each([&](int a) {
    if (!first) {
      out += ",";
    }
    out += S.label(a);
    first = false;
  });
  return out + "}";
}

}  // namespace

FilterGroupoid build_filter_groupoid(const InverseSemigroup& S, const IdempotentSet& E,
                                     FilterKind kind) {
  auto proper = enumerate_filters(S, EnumerationMode::principal, FilterSelect::proper);
  auto ultra_list = enumerate_filters(S, EnumerationMode::principal, FilterSelect::ultra);
  auto tightE = tight_efilters(S, E);

  auto is_tight_efilter = [&](const IndexSet& xi) {
    return std::find(tightE.tight.begin(), tightE.tight.end(), xi) != tightE.tight.end();
  };

  FilterGroupoid FG;
  FG.kind = kind;
  for (const auto& F : proper) {
    bool is_ultra = std::binary_search(ultra_list.begin(), ultra_list.end(), F);
    bool is_tight = is_tight_efilter(efilter_of_filter(S, E, filter_d(S, F))) &&
                    is_tight_efilter(efilter_of_filter(S, E, filter_r(S, F)));
    bool take = kind == FilterKind::proper || (kind == FilterKind::ultra && is_ultra) ||
                (kind == FilterKind::tight && is_tight);
    if (take) {
      FG.filter.push_back(F);
      FG.ultra.push_back(is_ultra);
      FG.tight.push_back(is_tight);
    }
  }
  int n = static_cast<int>(FG.filter.size());
  for (int a = 0; a < n; ++a) {
    FG.arrow_index.emplace(FG.filter[static_cast<std::size_t>(a)], a);
  }
  FG.g.num_arrows = n;
  FG.g.inv.resize(static_cast<std::size_t>(n));
  FG.g.compose.assign(static_cast<std::size_t>(n) * n, -1);
  FG.g.labels.resize(static_cast<std::size_t>(n));
  std::vector<IndexSet> d(static_cast<std::size_t>(n)), r(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const IndexSet& F = FG.filter[static_cast<std::size_t>(a)];
    FG.g.labels[static_cast<std::size_t>(a)] = carrier_label(S, F);
    int ia = FG.arrow_of(filter_inverse(S, F));
    if (ia < 0) {
      throw Error("filter groupoid is not closed under inversion");
    }
    FG.g.inv[static_cast<std::size_t>(a)] = ia;
    d[static_cast<std::size_t>(a)] = filter_d(S, F);
    r[static_cast<std::size_t>(a)] = filter_r(S, F);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (d[static_cast<std::size_t>(a)] == r[static_cast<std::size_t>(b)]) {
        int p = FG.arrow_of(compose_filters(S, FG.filter[static_cast<std::size_t>(a)],
                                            FG.filter[static_cast<std::size_t>(b)]));
        if (p < 0) {
          throw Error("filter groupoid is not closed under composition");
        }
        FG.g.set_product(a, b, p);
      }
    }
  }
  return FG;
}

BasicSet basic_set(const InverseSemigroup& S, const FilterGroupoid& FG, BasicKind kind, int s,
                   const IndexSet* T) {
  BasicSet out;
  out.kind = kind;
  out.s = s;
  out.members = IndexSet(FG.g.num_arrows);
  if (kind == BasicKind::patch) {
    if (T == nullptr) {
      throw BadPatchSet("patch basic set requires T");
    }
    bool ok = true;
    T->for_each([&](int t) {
      if (!S.leq(t, s)) {
        ok = false;
      }
    });
    if (!ok) {
      throw BadPatchSet("T is not contained in the down-set of s");
    }
    out.avoid = *T;
  }
  for (int a = 0; a < FG.g.num_arrows; ++a) {
    const IndexSet& F = FG.filter[static_cast<std::size_t>(a)];
    if (!F.contains(s)) {
      continue;
    }
    switch (kind) {
      case BasicKind::principal:
        out.members.insert(a);
        break;
      case BasicKind::patch:
        if (!F.intersects(out.avoid)) {
          out.members.insert(a);
        }
        break;
      case BasicKind::ultra:
        if (FG.ultra[static_cast<std::size_t>(a)]) {
          out.members.insert(a);
        }
        break;
    }
  }
  return out;
}

std::vector<IndexSet> principal_basis(const InverseSemigroup& S, const FilterGroupoid& FG) {
  std::vector<IndexSet> out;
  for (int s = 0; s < S.size(); ++s) {
    out.push_back(basic_set(S, FG, BasicKind::principal, s).members);
  }
  return out;
}

std::vector<IndexSet> patch_basis(const InverseSemigroup& S, const FilterGroupoid& FG) {
  std::vector<IndexSet> out;
  for (int s = 0; s < S.size(); ++s) {
    std::vector<int> below;
    for (int t = 0; t < S.size(); ++t) {
      if (t != s && S.leq(t, s)) {
        below.push_back(t);
      }
    }
    if (below.size() > 20) {
      throw TooLarge("patch basis enumeration: down-set of " + S.label(s) + " has " +
                     std::to_string(below.size()) + " elements");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << below.size()); ++mask) {
      IndexSet avoid(S.size());
      for (std::size_t i = 0; i < below.size(); ++i) {
        if ((mask >> i) & 1) {
          avoid.insert(below[i]);
        }
      }
      out.push_back(basic_set(S, FG, BasicKind::patch, s, &avoid).members);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NamedCheck> check_filter_laws(const InverseSemigroup& S, const IdempotentSet& E) {
  return check_filter_laws(S, E, build_filter_groupoid(S, E, FilterKind::proper));
}

std::vector<NamedCheck> check_filter_laws(const InverseSemigroup& S, const IdempotentSet& E,
                                      const FilterGroupoid& FG) {
  (void)E;
  std::vector<NamedCheck> out;

  NamedCheck a;
  a.name = "recovery";
  for (const auto& F : FG.filter) {
    IndexSet dF = filter_d(S, F);
    for (int s : F.elements()) {
      ++a.cases;
      IndexSet sdF(S.size());
      dF.for_each([&](int x) { sdF.insert(S.product(s, x)); });
      if (!(up_closure(S, sdF) == F) && a.ok) {
        a.ok = false;
        a.witness = "F = " + carrier_label(S, F) + ", s = " + S.label(s);
      }
    }
  }
  out.push_back(a);

  NamedCheck b;
  b.name = "separation";
  for (std::size_t i = 0; i < FG.filter.size(); ++i) {
    for (std::size_t j = i + 1; j < FG.filter.size(); ++j) {
      ++b.cases;
      if (FG.filter[i].intersects(FG.filter[j]) &&
          filter_d(S, FG.filter[i]) == filter_d(S, FG.filter[j]) && b.ok) {
        b.ok = false;
        b.witness = "distinct filters meet and share a source: " +
                    carrier_label(S, FG.filter[i]) + ", " + carrier_label(S, FG.filter[j]);
      }
    }
  }
  out.push_back(b);
  return out;
}

std::vector<NamedCheck> check_principal_set_laws(const InverseSemigroup& S, const IdempotentSet& E) {
  return check_principal_set_laws(S, E, build_filter_groupoid(S, E, FilterKind::proper));
}

std::vector<NamedCheck> check_principal_set_laws(const InverseSemigroup& S, const IdempotentSet& E,
                                      const FilterGroupoid& FG) {
  (void)E;
  auto f_of = principal_basis(S, FG);
  std::vector<NamedCheck> out;

  NamedCheck a;
  a.name = "inverse";
  for (int s = 0; s < S.size(); ++s) {
    ++a.cases;
    if (!(arrow_set_inverse(FG.g, f_of[static_cast<std::size_t>(s)]) ==
          f_of[static_cast<std::size_t>(S.inverse(s))]) &&
        a.ok) {
      a.ok = false;
      a.witness = "inverting the principal set of s does not give that of s^-1 at s = " + S.label(s);
    }
  }
  out.push_back(a);

  NamedCheck b;
  b.name = "product";
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < S.size(); ++t) {
      ++b.cases;
      IndexSet lhs = arrow_set_compose(FG.g, f_of[static_cast<std::size_t>(s)],
                                       f_of[static_cast<std::size_t>(t)]);
      if (!(lhs == f_of[static_cast<std::size_t>(S.product(s, t))]) && b.ok) {
        b.ok = false;
        b.witness = "principal-set product differs from the principal set of st at (s, t) = (" +
                    S.label(s) + ", " + S.label(t) + ")";
      }
    }
  }
  out.push_back(b);

  NamedCheck c;
  c.name = "bisection";
  for (int s = 0; s < S.size(); ++s) {
    ++c.cases;
    auto check = local_bisection_check(FG.g, f_of[static_cast<std::size_t>(s)]);
    if ((!check.source_injective || !check.range_injective) && c.ok) {
      c.ok = false;
      c.witness = "the principal set is not a local bisection at s = " + S.label(s);
    }
    // the source and range answers must agree on these sets
    if (check.source_injective != check.range_injective && c.ok) {
      c.ok = false;
      c.witness = "source/range bisection answers differ at s = " + S.label(s);
    }
  }
  out.push_back(c);

  NamedCheck d;
  d.name = "source";
  for (int s = 0; s < S.size(); ++s) {
    ++d.cases;
    IndexSet sources(FG.g.num_arrows);
    f_of[static_cast<std::size_t>(s)].for_each([&](int arrow) { sources.insert(FG.g.source(arrow)); });
    if (!(sources == f_of[static_cast<std::size_t>(S.product(S.inverse(s), s))]) && d.ok) {
      d.ok = false;
      d.witness = "the sources of the principal set of s differ from the principal set of s^-1 s at s = " +
                  S.label(s);
    }
  }
  out.push_back(d);

  NamedCheck e;
  e.name = "etale-basis";
  e.cases = 1;
  auto basis_check = is_etale_basis(FG.g, f_of);
  if (!basis_check.ok) {
    e.ok = false;
    e.witness = basis_check.witness;
  }
  out.push_back(e);
  return out;
}

}  // namespace isg

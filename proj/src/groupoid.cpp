#include "isg/groupoid.hpp"

#include <algorithm>
#include <map>

namespace isg {

IndexSet FiniteGroupoid::unit_set() const {
  IndexSet out(num_arrows);
  for (int a = 0; a < num_arrows; ++a) {
    int d = source(a);
    if (d >= 0) {
      out.insert(d);
    }
  }
  return out;
}

std::vector<int> FiniteGroupoid::units() const { return unit_set().elements(); }

namespace {

std::string arrow_name(const FiniteGroupoid& G, int a) {
  if (a >= 0 && a < G.num_arrows && !G.labels.empty()) {
    return G.label(a);
  }
  return "#" + std::to_string(a);
}

}  // namespace

CheckResult check_axioms(const FiniteGroupoid& G) {
  int n = G.num_arrows;
  if (static_cast<int>(G.inv.size()) != n ||
      static_cast<int>(G.compose.size()) != n * n) {
    return {false, "tables have inconsistent sizes"};
  }
  for (int a = 0; a < n; ++a) {
    if (G.inv[static_cast<std::size_t>(a)] < 0 || G.inv[static_cast<std::size_t>(a)] >= n) {
      return {false, "inversion out of range at " + arrow_name(G, a)};
    }
  }
  for (int x : G.compose) {
    if (x < -1 || x >= n) {
      return {false, "composition entry out of range"};
    }
  }

  // (i)
  for (int g = 0; g < n; ++g) {
    if (G.inverse(G.inverse(g)) != g) {
      return {false, "axiom (i): (g^-1)^-1 != g at g = " + arrow_name(G, g)};
    }
    if (!G.composable(G.inverse(g), g)) {
      return {false, "axiom (i): (g^-1, g) not composable at g = " + arrow_name(G, g)};
    }
  }

  // Composable right-partners per arrow, for the triple quantification.
  std::vector<std::vector<int>> right(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (G.composable(a, b)) {
        right[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  }

  // (ii)
  for (int a = 0; a < n; ++a) {
    for (int b : right[static_cast<std::size_t>(a)]) {
      for (int c : right[static_cast<std::size_t>(b)]) {
        int bc = G.product(b, c);
        int ab = G.product(a, b);
        if (!G.composable(a, bc) || !G.composable(ab, c)) {
          return {false, "axiom (ii): composability does not propagate at (" +
                             arrow_name(G, a) + ", " + arrow_name(G, b) + ", " +
                             arrow_name(G, c) + ")"};
        }
        if (G.product(a, bc) != G.product(ab, c)) {
          return {false, "axiom (ii): associativity fails at (" + arrow_name(G, a) + ", " +
                             arrow_name(G, b) + ", " + arrow_name(G, c) + ")"};
        }
      }
    }
  }

  // (iii)
  for (int g = 0; g < n; ++g) {
    for (int h : right[static_cast<std::size_t>(g)]) {
      int gh = G.product(g, h);
      int ig = G.inverse(g);
      if (!G.composable(ig, gh) || G.product(ig, gh) != h) {
        return {false, "axiom (iii): g^-1 g h != h at (g, h) = (" + arrow_name(G, g) + ", " +
                           arrow_name(G, h) + ")"};
      }
      int ih = G.inverse(h);
      if (!G.composable(gh, ih) || G.product(gh, ih) != g) {
        return {false, "axiom (iii): g h h^-1 != g at (g, h) = (" + arrow_name(G, g) + ", " +
                           arrow_name(G, h) + ")"};
      }
    }
  }
  return {};
}

BisectionCheck local_bisection_check(const FiniteGroupoid& G, const IndexSet& A) {
  BisectionCheck out;
  auto members = A.elements();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (G.source(members[i]) == G.source(members[j])) {
        out.source_injective = false;
      }
      if (G.range(members[i]) == G.range(members[j])) {
        out.range_injective = false;
      }
    }
  }
  return out;
}

bool is_local_bisection(const FiniteGroupoid& G, const IndexSet& A) {
  return local_bisection_check(G, A).source_injective;
}

IndexSet arrow_set_inverse(const FiniteGroupoid& G, const IndexSet& A) {
  IndexSet out(G.num_arrows);
  A.for_each([&](int a) { out.insert(G.inverse(a)); });
  return out;
}

IndexSet arrow_set_compose(const FiniteGroupoid& G, const IndexSet& A, const IndexSet& B) {
  IndexSet out(G.num_arrows);
  A.for_each([&](int a) {
    B.for_each([&](int b) {
      if (G.composable(a, b)) {
        out.insert(G.product(a, b));
      }
    });
  });
  return out;
}

CheckResult is_etale_basis(const FiniteGroupoid& G, const std::vector<IndexSet>& B) {
  std::map<IndexSet, int> member_index;
  for (std::size_t i = 0; i < B.size(); ++i) {
    member_index.emplace(B[i], static_cast<int>(i));
  }
  IndexSet units = G.unit_set();
  for (std::size_t i = 0; i < B.size(); ++i) {
    IndexSet inv_set = arrow_set_inverse(G, B[i]);
    if (!member_index.count(inv_set)) {
      return {false, "O^-1 not in the family for O = basis[" + std::to_string(i) + "]"};
    }
    if (!arrow_set_compose(G, inv_set, B[i]).is_subset_of(units)) {
      return {false, "O^-1 O escapes the unit space for O = basis[" + std::to_string(i) + "]"};
    }
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (!member_index.count(arrow_set_compose(G, B[i], B[j]))) {
        return {false, "ON not in the family for (O, N) = (basis[" + std::to_string(i) +
                           "], basis[" + std::to_string(j) + "])"};
      }
    }
  }
  return {};
}

CheckResult check_isomorphism(const FiniteGroupoid& G, const FiniteGroupoid& H,
                              const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != G.num_arrows) {
    return {false, "phi is not total on the arrows of G"};
  }
  if (G.num_arrows != H.num_arrows) {
    return {false, "arrow counts differ: " + std::to_string(G.num_arrows) + " vs " +
                       std::to_string(H.num_arrows)};
  }
  IndexSet image(H.num_arrows);
  for (int a = 0; a < G.num_arrows; ++a) {
    int fa = phi[static_cast<std::size_t>(a)];
    if (fa < 0 || fa >= H.num_arrows) {
      return {false, "phi(" + G.label(a) + ") out of range"};
    }
    if (image.contains(fa)) {
      return {false, "phi is not injective at " + G.label(a)};
    }
    image.insert(fa);
  }
  for (int a = 0; a < G.num_arrows; ++a) {
    for (int b = 0; b < G.num_arrows; ++b) {
      bool cg = G.composable(a, b);
      bool ch = H.composable(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]);
      if (cg != ch) {
        return {false, "composability not preserved at (" + G.label(a) + ", " + G.label(b) +
                           ")" + (cg ? "" : " (preimage not composable)")};
      }
      if (cg) {
        int lhs = phi[static_cast<std::size_t>(G.product(a, b))];
        int rhs = H.product(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]);
        if (lhs != rhs) {
          return {false, "phi(ab) != phi(a)phi(b) at (" + G.label(a) + ", " + G.label(b) + ")"};
        }
      }
    }
  }
  return {};
}

bool is_subgroupoid(const FiniteGroupoid& G, const IndexSet& H) {
  auto members = H.elements();
  for (int a : members) {
    if (!H.contains(G.inverse(a))) {
      return false;
    }
  }
  for (int a : members) {
    for (int b : members) {
      if (G.composable(a, b) && !H.contains(G.product(a, b))) {
        return false;
      }
    }
  }
  return true;
}

FiniteGroupoid pair_groupoid(int k) {
  FiniteGroupoid G;
  G.num_arrows = k * k;
  G.inv.resize(static_cast<std::size_t>(G.num_arrows));
  G.compose.assign(static_cast<std::size_t>(G.num_arrows) * G.num_arrows, -1);
  G.labels.resize(static_cast<std::size_t>(G.num_arrows));
  auto id = [&](int i, int j) { return i * k + j; };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      G.inv[static_cast<std::size_t>(id(i, j))] = id(j, i);
      G.labels[static_cast<std::size_t>(id(i, j))] =
          "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (int l = 0; l < k; ++l) {
        G.set_product(id(i, j), id(j, l), id(i, l));
      }
    }
  }
  return G;
}

}  // namespace isg

#include "isg/inverse_semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "isg/errors.hpp"

namespace isg {

InverseSemigroup::InverseSemigroup(int n, std::vector<int> table, std::vector<int> inv,
                                   std::vector<std::string> labels)
    : n_(n), table_(std::move(table)), inv_(std::move(inv)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      labels_[static_cast<std::size_t>(i)] = std::to_string(i);
    }
  }
}

int find_zero(int n, std::span<const int> table) {
  for (int z = 0; z < n; ++z) {
    bool absorbing = true;
    for (int a = 0; a < n && absorbing; ++a) {
      if (table[static_cast<std::size_t>(z) * n + a] != z ||
          table[static_cast<std::size_t>(a) * n + z] != z) {
        absorbing = false;
      }
    }
    if (absorbing) {
      return z;
    }
  }
  return -1;
}

namespace {

std::string witness3(const std::vector<std::string>& labels, int a, int b, int c) {
  return "(" + labels[static_cast<std::size_t>(a)] + ", " + labels[static_cast<std::size_t>(b)] +
         ", " + labels[static_cast<std::size_t>(c)] + ")";
}

}  // namespace

ValidationResult validate_inverse_semigroup(int n, std::span<const int> table,
                                            std::vector<std::string> labels) {
  if (n <= 0) {
    throw MalformedTable("element count must be positive");
  }
  if (n > kMaxElements) {
    throw TooLarge("table-based input is capped at " + std::to_string(kMaxElements) +
                   " elements, got " + std::to_string(n));
  }
  if (static_cast<int>(table.size()) != n * n) {
    throw MalformedTable("table is not " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= n) {
      throw MalformedTable("table entry out of range at position " + std::to_string(i));
    }
  }
  if (labels.empty()) {
    labels.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      labels[static_cast<std::size_t>(i)] = std::to_string(i);
    }
  } else if (static_cast<int>(labels.size()) != n) {
    throw MalformedTable("label count does not match element count");
  }

  ValidationResult result;
  auto& report = result.report;
  auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };

  // Associativity.
  {
    long bad = 0;
    std::string first;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int ab = mul(a, b);
        for (int c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            if (bad == 0) {
              first = witness3(labels, a, b, c);
            }
            ++bad;
          }
        }
      }
    }
    if (bad > 0) {
      report.violations.push_back("not associative: first witness " + first + ", " +
                                  std::to_string(bad) + " failing triple(s)");
    }
  }

  // Regularity: every a has some x with axa = a and xax = x.
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  {
    long bad = 0;
    std::string first;
    for (int a = 0; a < n; ++a) {
      for (int x = 0; x < n; ++x) {
        if (mul(mul(a, x), a) == a && mul(mul(x, a), x) == x) {
          inv[static_cast<std::size_t>(a)] = x;
          break;
        }
      }
      if (inv[static_cast<std::size_t>(a)] < 0) {
        if (bad == 0) {
          first = labels[static_cast<std::size_t>(a)];
        }
        ++bad;
      }
    }
    if (bad > 0) {
      report.violations.push_back("no inverse exists for " + std::to_string(bad) +
                                  " element(s), first: " + first);
    }
  }

  // Idempotents commute; together with regularity this is equivalent to
  // uniqueness of inverses (and avoids quantifying over candidate maps).
  {
    long bad = 0;
    std::string first;
    for (int e = 0; e < n; ++e) {
      if (mul(e, e) != e) {
        continue;
      }
      for (int f = e + 1; f < n; ++f) {
        if (mul(f, f) != f) {
          continue;
        }
        if (mul(e, f) != mul(f, e)) {
          if (bad == 0) {
            first = "(" + labels[static_cast<std::size_t>(e)] + ", " +
                    labels[static_cast<std::size_t>(f)] + ")";
          }
          ++bad;
        }
      }
    }
    if (bad > 0) {
      report.violations.push_back("idempotents do not commute: first witness " + first + ", " +
                                  std::to_string(bad) + " failing pair(s)");
    }
  }

  int zero = find_zero(n, table);
  if (zero < 0) {
    report.zero_missing = true;
    report.violations.push_back("no zero element (no x with xa = ax = x for all a)");
  }

  report.ok = report.violations.empty();
  if (!report.ok) {
    return result;
  }

  // Relabel so the zero lands at index 0, preserving the relative order of
  // the other elements.
  std::vector<int> relabel(static_cast<std::size_t>(n));
  {
    int next = 1;
    for (int a = 0; a < n; ++a) {
      relabel[static_cast<std::size_t>(a)] = (a == zero) ? 0 : next++;
    }
  }
  std::vector<int> new_table(static_cast<std::size_t>(n) * n);
  std::vector<int> new_inv(static_cast<std::size_t>(n));
  std::vector<std::string> new_labels(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    int na = relabel[static_cast<std::size_t>(a)];
    new_inv[static_cast<std::size_t>(na)] = relabel[static_cast<std::size_t>(inv[static_cast<std::size_t>(a)])];
    new_labels[static_cast<std::size_t>(na)] = labels[static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b) {
      new_table[static_cast<std::size_t>(na) * n + relabel[static_cast<std::size_t>(b)]] =
          relabel[static_cast<std::size_t>(mul(a, b))];
    }
  }
  result.relabeling = std::move(relabel);
  result.semigroup =
      InverseSemigroup(n, std::move(new_table), std::move(new_inv), std::move(new_labels));
  return result;
}

InverseSemigroup brandt(int k) {
  if (k < 1) {
    throw DomainError("brandt(k) requires k >= 1");
  }
  int n = k * k + 1;
  if (n > kMaxElements) {
    throw TooLarge("brandt(" + std::to_string(k) + ") has " + std::to_string(n) + " elements");
  }
  auto id = [&](int i, int j) { return 1 + i * k + j; };  // e_{i+1,j+1}
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> inv(static_cast<std::size_t>(n), 0);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  labels[0] = "0";
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      labels[static_cast<std::size_t>(id(i, j))] =
          "e" + std::to_string(i + 1) + std::to_string(j + 1);
      inv[static_cast<std::size_t>(id(i, j))] = id(j, i);
      for (int l = 0; l < k; ++l) {
        for (int m = 0; m < k; ++m) {
          // e_ij e_lm = e_im when j = l, else 0.
          if (j == l) {
            table[static_cast<std::size_t>(id(i, j)) * n + id(l, m)] = id(i, m);
          }
        }
      }
    }
  }
  return InverseSemigroup(n, std::move(table), std::move(inv), std::move(labels));
}

namespace {

// A partial injection on k points: image[x] in [0,k) or -1 when undefined.
using PartialMap = std::vector<int>;

PartialMap compose_maps(const PartialMap& f, const PartialMap& g) {
  PartialMap c(g.size(), -1);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g[x] >= 0 && f[static_cast<std::size_t>(g[x])] >= 0) {
      c[x] = f[static_cast<std::size_t>(g[x])];
    }
  }
  return c;
}

PartialMap invert_map(const PartialMap& f) {
  PartialMap inv(f.size(), -1);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= 0) {
      inv[static_cast<std::size_t>(f[x])] = static_cast<int>(x);
    }
  }
  return inv;
}

std::string map_label(const PartialMap& f) {
  std::string out = "[";
  bool first = true;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= 0) {
      if (!first) {
        out += ",";
      }
      out += std::to_string(x) + ">" + std::to_string(f[x]);
      first = false;
    }
  }
  out += "]";
  return out.size() == 2 ? "0" : out;  // empty map is the zero
}

void image_tuples(int k, const std::vector<int>& dom, std::size_t pos, std::vector<bool>& used,
                  PartialMap& current, std::vector<PartialMap>& out) {
  if (pos == dom.size()) {
    out.push_back(current);
    return;
  }
  for (int y = 0; y < k; ++y) {
    if (!used[static_cast<std::size_t>(y)]) {
      used[static_cast<std::size_t>(y)] = true;
      current[static_cast<std::size_t>(dom[pos])] = y;
      image_tuples(k, dom, pos + 1, used, current, out);
      current[static_cast<std::size_t>(dom[pos])] = -1;
      used[static_cast<std::size_t>(y)] = false;
    }
  }
}

}  // namespace

InverseSemigroup symmetric_inverse(int k) {
  if (k < 1) {
    throw DomainError("symmetric_inverse(k) requires k >= 1");
  }
  // Canonical enumeration: by domain subset (ascending bitmask), then by
  // image tuple in lexicographic order. The empty map comes first and is
  // the zero, so no relabeling is needed.
  std::vector<PartialMap> maps;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> dom;
    for (int x = 0; x < k; ++x) {
      if ((mask >> x) & 1) {
        dom.push_back(x);
      }
    }
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    PartialMap current(static_cast<std::size_t>(k), -1);
    image_tuples(k, dom, 0, used, current, maps);
  }
  int n = static_cast<int>(maps.size());
  if (n > kMaxElements) {
    throw TooLarge("symmetric_inverse(" + std::to_string(k) + ") has " + std::to_string(n) +
                   " elements");
  }
  std::map<PartialMap, int> index_of;
  for (int i = 0; i < n; ++i) {
    index_of[maps[static_cast<std::size_t>(i)]] = i;
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> inv(static_cast<std::size_t>(n));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    labels[static_cast<std::size_t>(a)] = map_label(maps[static_cast<std::size_t>(a)]);
    inv[static_cast<std::size_t>(a)] = index_of.at(invert_map(maps[static_cast<std::size_t>(a)]));
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] =
          index_of.at(compose_maps(maps[static_cast<std::size_t>(a)], maps[static_cast<std::size_t>(b)]));
    }
  }
  return InverseSemigroup(n, std::move(table), std::move(inv), std::move(labels));
}

InverseSemigroup chain(int k) {
  if (k < 1) {
    throw DomainError("chain(k) requires k >= 1");
  }
  int n = k + 1;
  if (n > kMaxElements) {
    throw TooLarge("chain(" + std::to_string(k) + ") has " + std::to_string(n) + " elements");
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> inv(static_cast<std::size_t>(n));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  labels[0] = "0";
  for (int a = 0; a < n; ++a) {
    if (a > 0) {
      labels[static_cast<std::size_t>(a)] = "x" + std::to_string(a);
    }
    inv[static_cast<std::size_t>(a)] = a;
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] = std::min(a, b);
    }
  }
  return InverseSemigroup(n, std::move(table), std::move(inv), std::move(labels));
}

InverseSemigroup meet_semilattice(int n, const std::vector<std::uint8_t>& leq) {
  if (n <= 0 || static_cast<int>(leq.size()) != n * n) {
    throw MalformedTable("order matrix is not square");
  }
  auto le = [&](int a, int b) { return leq[static_cast<std::size_t>(a) * n + b] != 0; };
  for (int a = 0; a < n; ++a) {
    if (!le(a, a)) {
      throw MalformedTable("order is not reflexive");
    }
    for (int b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a)) {
        throw MalformedTable("order is not antisymmetric");
      }
      for (int c = 0; c < n; ++c) {
        if (le(a, b) && le(b, c) && !le(a, c)) {
          throw MalformedTable("order is not transitive");
        }
      }
    }
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int meet = -1;
      for (int c = 0; c < n; ++c) {
        if (le(c, a) && le(c, b) && (meet < 0 || le(meet, c))) {
          meet = c;
        }
      }
      if (meet < 0) {
        throw MeetMissing("no lower bound for a pair of elements");
      }
      // meet must dominate every common lower bound
      for (int c = 0; c < n; ++c) {
        if (le(c, a) && le(c, b) && !le(c, meet)) {
          throw MeetMissing("no greatest lower bound for a pair of elements");
        }
      }
      table[static_cast<std::size_t>(a) * n + b] = meet;
    }
  }
  if (find_zero(n, table) < 0) {
    throw MeetMissing("order has no bottom element");
  }
  auto result = validate_inverse_semigroup(n, table);
  return *result.semigroup;
}

std::vector<int> adjoin_zero_table(int n, std::span<const int> table) {
  if (find_zero(n, table) >= 0) {
    return std::vector<int>(table.begin(), table.end());
  }
  int m = n + 1;
  std::vector<int> out(static_cast<std::size_t>(m) * m, n);  // new element n absorbs
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out[static_cast<std::size_t>(a) * m + b] = table[static_cast<std::size_t>(a) * n + b];
    }
  }
  return out;
}

InverseSemigroup adjoin_zero(const InverseSemigroup& S) { return S; }

OrderRelation order_relation(const InverseSemigroup& S) {
  int n = S.size();
  OrderRelation ord;
  ord.n = n;
  ord.leq.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ord.leq[static_cast<std::size_t>(a) * n + b] = S.leq(a, b) ? 1 : 0;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !ord.less_eq(a, b)) {
        continue;
      }
      bool covering = true;
      for (int c = 0; c < n && covering; ++c) {
        if (c != a && c != b && ord.less_eq(a, c) && ord.less_eq(c, b)) {
          covering = false;
        }
      }
      if (covering) {
        ord.hasse.emplace_back(a, b);
      }
    }
  }
  return ord;
}

IdempotentSet idempotents(const InverseSemigroup& S) {
  int n = S.size();
  IdempotentSet E;
  E.members = IndexSet(n);
  for (int a = 0; a < n; ++a) {
    if (S.is_idempotent(a)) {
      E.members.insert(a);
      E.elements.push_back(a);
    }
  }
  // E = { s^-1 s : s in S }.
  IndexSet from_products(n);
  for (int s = 0; s < n; ++s) {
    from_products.insert(S.product(S.inverse(s), s));
  }
  if (!(from_products == E.members)) {
    throw Error("idempotents differ from {s^-1 s}: input is not a valid inverse semigroup");
  }
  int m = E.size();
  E.index_in_e.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < m; ++i) {
    E.index_in_e[static_cast<std::size_t>(E.elements[static_cast<std::size_t>(i)])] = i;
  }
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<int> inv(static_cast<std::size_t>(m));
  std::vector<std::string> labels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    inv[static_cast<std::size_t>(i)] = i;
    labels[static_cast<std::size_t>(i)] = S.label(E.elements[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m; ++j) {
      int p = S.product(E.elements[static_cast<std::size_t>(i)], E.elements[static_cast<std::size_t>(j)]);
      table[static_cast<std::size_t>(i) * m + j] = E.index_in_e[static_cast<std::size_t>(p)];
    }
  }
  E.semilattice = InverseSemigroup(m, std::move(table), std::move(inv), std::move(labels));
  return E;
}

SubsemigroupResult inverse_closure_subsemigroup(const InverseSemigroup& S, const IndexSet& gens) {
  if (gens.empty()) {
    throw DomainError("inverse_closure_subsemigroup requires a nonempty generator set");
  }
  int n = S.size();
  IndexSet closed(n);
  closed.insert(S.zero());
  gens.for_each([&](int g) { closed.insert(g); });
  bool grew = true;
  while (grew) {
    grew = false;
    auto members = closed.elements();
    for (int a : members) {
      int ia = S.inverse(a);
      if (!closed.contains(ia)) {
        closed.insert(ia);
        grew = true;
      }
      for (int b : members) {
        int p = S.product(a, b);
        if (!closed.contains(p)) {
          closed.insert(p);
          grew = true;
        }
      }
    }
  }
  SubsemigroupResult result;
  result.embedding = closed.elements();  // ascending, so zero stays at index 0
  int m = static_cast<int>(result.embedding.size());
  std::vector<int> back(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < m; ++i) {
    back[static_cast<std::size_t>(result.embedding[static_cast<std::size_t>(i)])] = i;
  }
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<int> inv(static_cast<std::size_t>(m));
  std::vector<std::string> labels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int a = result.embedding[static_cast<std::size_t>(i)];
    inv[static_cast<std::size_t>(i)] = back[static_cast<std::size_t>(S.inverse(a))];
    labels[static_cast<std::size_t>(i)] = S.label(a);
    for (int j = 0; j < m; ++j) {
      int b = result.embedding[static_cast<std::size_t>(j)];
      table[static_cast<std::size_t>(i) * m + j] = back[static_cast<std::size_t>(S.product(a, b))];
    }
  }
  auto validated = validate_inverse_semigroup(m, table, labels);
  if (!validated.report.ok) {
    throw Error("inverse closure produced an invalid semigroup");
  }
  result.sub = *validated.semigroup;
  return result;
}

}  // namespace isg

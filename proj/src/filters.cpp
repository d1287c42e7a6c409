#include "isg/filters.hpp"

#include <algorithm>

#include "isg/errors.hpp"

namespace isg {

IndexSet up_closure(const InverseSemigroup& S, const IndexSet& A) {
  int n = S.size();
  IndexSet out(n);
  A.for_each([&](int a) {
    for (int b = 0; b < n; ++b) {
      if (S.leq(a, b)) {
        out.insert(b);
      }
    }
  });
  return out;
}

IndexSet down_closure(const InverseSemigroup& S, const IndexSet& A) {
  int n = S.size();
  IndexSet out(n);
  A.for_each([&](int a) {
    for (int b = 0; b < n; ++b) {
      if (S.leq(b, a)) {
        out.insert(b);
      }
    }
  });
  return out;
}

IndexSet principal_filter(const InverseSemigroup& S, int a) {
  return up_closure(S, IndexSet::of(S.size(), {a}));
}

bool is_filter_set(const InverseSemigroup& S, const IndexSet& A) {
  if (A.empty()) {
    return false;
  }
  auto members = A.elements();
  // up-set
  for (int a : members) {
    for (int b = 0; b < S.size(); ++b) {
      if (S.leq(a, b) && !A.contains(b)) {
        return false;
      }
    }
  }
  // down-directed
  for (int a : members) {
    for (int b : members) {
      bool found = false;
      for (int c : members) {
        if (S.leq(c, a) && S.leq(c, b)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Maximality among an enumerated list of proper filters.
bool is_maximal_proper(const IndexSet& A, const std::vector<IndexSet>& proper) {
  for (const auto& G : proper) {
    if (!(G == A) && A.is_subset_of(G)) {
      return false;
    }
  }
  return true;
}

std::vector<IndexSet> principal_proper_filters(const InverseSemigroup& S) {
  std::vector<IndexSet> out;
  for (int a = 1; a < S.size(); ++a) {
    out.push_back(principal_filter(S, a));
  }
  return out;
}

}  // namespace

FilterClassification classify_subset(const InverseSemigroup& S, const IndexSet& A) {
  FilterClassification c;
  c.is_filter = is_filter_set(S, A);
  c.is_proper = c.is_filter && !A.contains(S.zero());
  if (c.is_proper) {
    c.is_ultra = is_maximal_proper(A, principal_proper_filters(S));
  }
  for (int a : A.elements()) {
    if (S.is_idempotent(a)) {
      c.is_idempotent = true;
      break;
    }
  }
  return c;
}

std::vector<IndexSet> enumerate_filters(const InverseSemigroup& S, EnumerationMode mode,
                                        FilterSelect select, int bruteforce_cap) {
  int n = S.size();
  std::vector<IndexSet> filters;

  if (mode == EnumerationMode::principal) {
    for (int a = 0; a < n; ++a) {
      IndexSet f = principal_filter(S, a);
      if (std::find(filters.begin(), filters.end(), f) == filters.end()) {
        filters.push_back(f);
      }
    }
  } else {
    if (n > bruteforce_cap) {
      throw TooLarge("bruteforce enumeration capped at " + std::to_string(bruteforce_cap) +
                     " elements, got " + std::to_string(n));
    }
    // Precomputed closure rows make the 2^n scan cheap: A is an up-set iff
    // the union of up(a) over a in A equals A, and down-directedness only
    // needs nonempty triple intersections.
    std::vector<IndexSet> up_row, down_row;
    for (int a = 0; a < n; ++a) {
      up_row.push_back(principal_filter(S, a));
      down_row.push_back(down_closure(S, IndexSet::of(n, {a})));
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      IndexSet A(n);
      IndexSet up_union(n);
      for (int a = 0; a < n; ++a) {
        if ((mask >> a) & 1) {
          A.insert(a);
          up_union |= up_row[static_cast<std::size_t>(a)];
        }
      }
      if (!(up_union == A)) {
        continue;
      }
      bool directed = true;
      auto members = A.elements();
      for (std::size_t i = 0; i < members.size() && directed; ++i) {
        for (std::size_t j = i + 1; j < members.size() && directed; ++j) {
          IndexSet lower = down_row[static_cast<std::size_t>(members[i])] &
                           down_row[static_cast<std::size_t>(members[j])];
          lower &= A;
          if (lower.empty()) {
            directed = false;
          }
        }
      }
      if (directed) {
        filters.push_back(A);
      }
    }
  }

  if (select != FilterSelect::all) {
    std::vector<IndexSet> proper;
    for (const auto& f : filters) {
      if (!f.contains(S.zero())) {
        proper.push_back(f);
      }
    }
    std::vector<IndexSet> selected;
    for (const auto& f : proper) {
      switch (select) {
        case FilterSelect::proper:
          selected.push_back(f);
          break;
        case FilterSelect::ultra:
          if (is_maximal_proper(f, proper)) {
            selected.push_back(f);
          }
          break;
        case FilterSelect::idempotent: {
          bool idem = false;
          for (int a : f.elements()) {
            if (S.is_idempotent(a)) {
              idem = true;
              break;
            }
          }
          if (idem) {
            selected.push_back(f);
          }
          break;
        }
        case FilterSelect::all:
          break;
      }
    }
    filters = std::move(selected);
  }

  std::sort(filters.begin(), filters.end());
  return filters;
}

std::vector<IndexSet> efilters(const InverseSemigroup& S, const IdempotentSet& E,
                               EFilterSelect select) {
  (void)S;
  return enumerate_filters(E.semilattice, EnumerationMode::principal,
                           select == EFilterSelect::proper ? FilterSelect::proper
                                                           : FilterSelect::ultra);
}

IndexSet efilter_of_filter(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& F) {
  if (!is_filter_set(S, F) || F.contains(S.zero())) {
    throw NotProper("efilter_of_filter requires a proper filter");
  }
  IndexSet xi(E.size());
  F.for_each([&](int a) {
    int e = E.from_s(a);
    if (e >= 0) {
      xi.insert(e);
    }
  });
  if (xi.empty()) {
    throw NotIdempotentFilter("efilter_of_filter requires an idempotent filter");
  }
  return xi;
}

IndexSet filter_of_efilter(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& xi) {
  if (!is_filter_set(E.semilattice, xi) || xi.contains(0)) {
    throw NotProper("epsilon_inv requires a proper E-filter");
  }
  return up_closure(S, efilter_to_s(S, E, xi));
}

IndexSet efilter_to_s(const InverseSemigroup& S, const IdempotentSet& E, const IndexSet& xi) {
  IndexSet out(S.size());
  xi.for_each([&](int e) { out.insert(E.to_s(e)); });
  return out;
}

}  // namespace isg

#ifndef ISG_INDEX_SET_HPP_
#define ISG_INDEX_SET_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace isg {

// Fixed-universe bitset. All set algebra in the library runs on these; the
// universe is the dense indexing of whatever the set lives in (semigroup
// elements, filters, groupoid arrows, topology points, ...).
//
// operator< is lexicographic on the sorted member list: the set containing
// the smallest differing index is the smaller one. This is the canonical
// order used everywhere deterministic output is required.
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  static IndexSet full(int universe) {
    IndexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
      s.words_[w] = ~std::uint64_t{0};
    }
    s.trim();
    return s;
  }

  static IndexSet of(int universe, std::initializer_list<int> xs) {
    IndexSet s(universe);
    for (int x : xs) {
      s.insert(x);
    }
    return s;
  }

  int universe() const { return universe_; }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) {
      c += std::popcount(w);
    }
    return c;
  }

  bool contains(int i) const {
    assert(0 <= i && i < universe_);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
  }

  void insert(int i) {
    assert(0 <= i && i < universe_);
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void erase(int i) {
    assert(0 <= i && i < universe_);
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  // Smallest member, or -1 when empty.
  int min() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
      }
    }
    return -1;
  }

  template <typename F>
  void for_each(F f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool is_subset_of(const IndexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~o.words_[w]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool intersects(const IndexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & o.words_[w]) != 0) {
        return true;
      }
    }
    return false;
  }

  IndexSet& operator|=(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] |= o.words_[w];
    }
    return *this;
  }

  IndexSet& operator&=(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] &= o.words_[w];
    }
    return *this;
  }

  // Set difference.
  IndexSet& operator-=(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] &= ~o.words_[w];
    }
    return *this;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet s = *this;
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
      s.words_[w] = ~s.words_[w];
    }
    s.trim();
    return s;
  }

  bool operator==(const IndexSet& o) const = default;

  bool operator<(const IndexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t diff = words_[w] ^ o.words_[w];
      if (diff == 0) {
        continue;
      }
      // i = smallest index where the sets differ; everything below i is
      // shared, so the list comparison is decided by i and the tail of the
      // set that does not contain i.
      int b = std::countr_zero(diff);
      bool in_this = ((words_[w] >> b) & 1) != 0;
      const auto& tail = in_this ? o.words_ : words_;
      bool tail_has_greater = b < 63 && ((tail[w] >> (b + 1)) << (b + 1)) != 0;
      for (std::size_t w2 = w + 1; w2 < tail.size() && !tail_has_greater; ++w2) {
        tail_has_greater = tail[w2] != 0;
      }
      // i in this: smaller element wins unless the other set is a prefix;
      // i in other: this is smaller exactly when it is a prefix.
      return in_this ? tail_has_greater : !tail_has_greater;
    }
    return false;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace isg

#endif  // ISG_INDEX_SET_HPP_

#include "caylabel/enumerate.hpp"

#include <algorithm>
#include <cstdlib>

namespace caylabel {

int default_enumeration_cap() {
  if (const char* env = std::getenv("CAYLABEL_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      return static_cast<int>(std::min<long>(v, kEnumerationHardCap));
    }
  }
  return 4;
}

namespace {

int effective_cap(int cap) {
  if (cap < 0) cap = default_enumeration_cap();
  return std::min(cap, kEnumerationHardCap);
}

// Backtracking over table cells in row-major order. After each assignment we
// check every product triple whose four lookups are all defined and involve
// the new cell; a triple therefore gets checked exactly when its last needed
// cell is filled, so completed tables are associative by construction.
class TableSearch {
 public:
  TableSearch(int n, Dedup dedup, const std::function<bool(const Semigroup&)>& yield)
      : n_(n), dedup_(dedup), yield_(yield), table_(static_cast<std::size_t>(n) * n, -1) {}

  bool run() { return fill(0); }

 private:
  int at(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }

  bool consistent(int i, int j) const {
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        const int ab = at(a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n_; ++c) {
          const int bc = at(b, c);
          if (bc < 0) continue;
          const int left = at(ab, c);
          if (left < 0) continue;
          const int right = at(a, bc);
          if (right < 0) continue;
          const bool involved = (a == i && b == j) || (b == i && c == j) ||
                                (ab == i && c == j) || (a == i && bc == j);
          if (involved && left != right) return false;
        }
      }
    }
    return true;
  }

  // Returns false when the consumer asked to stop.
  bool fill(int pos) {
    if (pos == n_ * n_) return emit();
    const int i = pos / n_, j = pos % n_;
    for (int v = 0; v < n_; ++v) {
      table_[static_cast<std::size_t>(pos)] = v;
      if (consistent(i, j) && !fill(pos + 1)) return false;
    }
    table_[static_cast<std::size_t>(pos)] = -1;
    return true;
  }

  bool emit() {
    Semigroup s = Semigroup::from_table_unchecked(n_, table_);
    if (dedup_ == Dedup::iso && canonical_table(s) != table_) return true;
    return yield_(s);
  }

  int n_;
  Dedup dedup_;
  const std::function<bool(const Semigroup&)>& yield_;
  std::vector<int> table_;
};

}  // namespace

void enumerate_semigroups(int order, Dedup dedup,
                          const std::function<bool(const Semigroup&)>& yield, int cap) {
  if (order <= 0) throw InputError("enumeration order must be positive");
  const int limit = effective_cap(cap);
  if (order > limit) {
    throw CapError("enumeration order " + std::to_string(order) +
                   " exceeds the cap of " + std::to_string(limit));
  }
  TableSearch(order, dedup, yield).run();
}

std::uint64_t count_semigroups(int order, Dedup dedup, int cap) {
  std::uint64_t count = 0;
  enumerate_semigroups(order, dedup, [&](const Semigroup&) {
    ++count;
    return true;
  }, cap);
  return count;
}

std::vector<Semigroup> all_semigroups(int order, Dedup dedup, int cap) {
  std::vector<Semigroup> out;
  enumerate_semigroups(order, dedup, [&](const Semigroup& s) {
    out.push_back(s);
    return true;
  }, cap);
  return out;
}

void enumerate_subsemigroups(const Semigroup& s,
                             const std::function<bool(const ElementSubset&)>& yield,
                             int cap) {
  const int limit = effective_cap(cap);
  if (s.order() > limit) {
    throw CapError("subsemigroup enumeration on order " + std::to_string(s.order()) +
                   " exceeds the cap of " + std::to_string(limit));
  }
  const int n = s.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!(mask & (1u << x))) continue;
      for (int y = 0; y < n && closed; ++y) {
        if (!(mask & (1u << y))) continue;
        closed = (mask & (1u << s.at(x, y))) != 0;
      }
    }
    if (!closed) continue;
    ElementSubset subset(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) subset.set(static_cast<std::size_t>(x));
    }
    if (!yield(subset)) return;
  }
}

}  // namespace caylabel

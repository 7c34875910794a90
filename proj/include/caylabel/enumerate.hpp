#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "caylabel/semigroup.hpp"

namespace caylabel {

enum class Dedup {
  none,  // every labelled table
  iso    // one representative (the lexicographically least table) per class
};

// Enumeration is capped to keep exhaustive campaigns tractable. The default
// cap is 4; the environment variable CAYLABEL_MAX_ORDER can raise it, but
// never beyond the hard cap.
inline constexpr int kEnumerationHardCap = 5;
int default_enumeration_cap();

// Streams every associative table of the given order in lexicographic order
// of the flattened table. The callback returns false to stop early.
// Pass cap < 0 to use default_enumeration_cap(). Throws CapError when the
// order exceeds the effective cap.
void enumerate_semigroups(int order, Dedup dedup,
                          const std::function<bool(const Semigroup&)>& yield,
                          int cap = -1);

std::uint64_t count_semigroups(int order, Dedup dedup, int cap = -1);
std::vector<Semigroup> all_semigroups(int order, Dedup dedup, int cap = -1);

// Streams every nonempty product-closed subset of s, in increasing order of
// the subset bitmask. Subject to the same cap as table enumeration.
void enumerate_subsemigroups(const Semigroup& s,
                             const std::function<bool(const ElementSubset&)>& yield,
                             int cap = -1);

}  // namespace caylabel

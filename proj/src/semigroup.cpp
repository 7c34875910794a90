#include "caylabel/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace caylabel {

namespace {

constexpr int kMaxParsedOrder = 4096;

// Strips comments ('#' to end of line) and returns the whitespace separated
// tokens of a document.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '\n') {
      in_comment = false;
    } else if (ch == '#') {
      in_comment = true;
    }
    if (in_comment || ch == ':' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

int parse_int(const std::string& token, const char* what) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(token, &pos);
  } catch (const std::exception&) {
    throw InputError(std::string("expected an integer for ") + what + ", got '" +
                     token + "'");
  }
  if (pos != token.size()) {
    throw InputError(std::string("trailing characters after ") + what + " in '" +
                     token + "'");
  }
  if (value < INT32_MIN || value > INT32_MAX) {
    throw InputError(std::string(what) + " out of range: " + token);
  }
  return static_cast<int>(value);
}

}  // namespace

ElementSubset make_subset(int parent_order, const std::vector<int>& indices) {
  if (parent_order < 0) throw InputError("negative parent order");
  ElementSubset set(static_cast<std::size_t>(parent_order));
  for (int i : indices) {
    if (i < 0 || i >= parent_order) {
      throw InputError("subset index " + std::to_string(i) +
                       " out of range for order " + std::to_string(parent_order));
    }
    set.set(static_cast<std::size_t>(i));
  }
  return set;
}

std::vector<int> subset_members(const ElementSubset& set) {
  std::vector<int> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSubset::npos; i = set.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

std::string subset_str(const ElementSubset& set) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_members(set)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

Semigroup::Semigroup(int order, std::vector<int> table) : order_(order), table_(std::move(table)) {
  if (order_ <= 0) throw InputError("semigroup order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw InputError("table size " + std::to_string(table_.size()) +
                     " does not match order " + std::to_string(order_));
  }
  for (int v : table_) {
    if (v < 0 || v >= order_) {
      throw InputError("table entry " + std::to_string(v) +
                       " out of range for order " + std::to_string(order_));
    }
  }
  if (auto w = associativity_witness(order_, table_)) {
    std::ostringstream msg;
    int ab = at(w->a, w->b);
    int bc = at(w->b, w->c);
    msg << "not associative at (" << w->a << "," << w->b << "," << w->c
        << "): (" << w->a << "*" << w->b << ")*" << w->c << " = " << at(ab, w->c)
        << " but " << w->a << "*(" << w->b << "*" << w->c << ") = " << at(w->a, bc);
    throw InputError(msg.str());
  }
}

Semigroup::Semigroup(unchecked_t, int order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {}

Semigroup Semigroup::from_table_unchecked(int order, std::vector<int> table) {
  return Semigroup(unchecked_t{}, order, std::move(table));
}

std::optional<AssociativityWitness> Semigroup::associativity_witness(
    int order, const std::vector<int>& table) {
  const int n = order;
  auto at = [&](int x, int y) { return table[static_cast<std::size_t>(x) * n + y]; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) return AssociativityWitness{a, b, c};
      }
    }
  }
  return std::nullopt;
}

Semigroup Semigroup::parse(std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) throw InputError("empty table document");
  int n = parse_int(tokens[0], "order");
  if (n <= 0) throw InputError("order must be positive");
  if (n > kMaxParsedOrder) {
    throw InputError("order " + std::to_string(n) + " exceeds the parser limit of " +
                     std::to_string(kMaxParsedOrder));
  }
  const std::size_t expected = 1 + static_cast<std::size_t>(n) * n;
  if (tokens.size() != expected) {
    throw InputError("expected " + std::to_string(expected - 1) + " table entries, got " +
                     std::to_string(tokens.size() - 1));
  }
  std::vector<int> table;
  table.reserve(expected - 1);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    table.push_back(parse_int(tokens[i], "table entry"));
  }
  return Semigroup(n, std::move(table));
}

std::string Semigroup::to_table_string() const {
  std::ostringstream out;
  out << order_ << "\n";
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      if (j) out << ' ';
      out << at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

std::string Semigroup::encode() const {
  std::string out = std::to_string(order_) + ":";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(table_[i]);
  }
  return out;
}

ElementSubset Semigroup::universe() const {
  ElementSubset set(static_cast<std::size_t>(order_));
  set.set();
  return set;
}

int product(const Semigroup& s, int x, int y) {
  if (x < 0 || x >= s.order() || y < 0 || y >= s.order()) {
    throw InputError("element index out of range");
  }
  return s.at(x, y);
}

namespace {

void check_parent(const Semigroup& s, const ElementSubset& a, const char* what) {
  if (a.size() != static_cast<std::size_t>(s.order())) {
    throw InputError(std::string("subset ") + what + " has parent order " +
                     std::to_string(a.size()) + ", semigroup has order " +
                     std::to_string(s.order()));
  }
}

}  // namespace

ElementSubset set_product(const Semigroup& s, const ElementSubset& a,
                          const ElementSubset& b) {
  check_parent(s, a, "A");
  check_parent(s, b, "B");
  ElementSubset out(a.size());
  for (auto x = a.find_first(); x != ElementSubset::npos; x = a.find_next(x)) {
    for (auto y = b.find_first(); y != ElementSubset::npos; y = b.find_next(y)) {
      out.set(static_cast<std::size_t>(s.at(static_cast<int>(x), static_cast<int>(y))));
    }
  }
  return out;
}

ElementSubset generated_subsemigroup(const Semigroup& s, const ElementSubset& c) {
  check_parent(s, c, "C");
  if (c.none()) throw InputError("generating set must be nonempty");
  ElementSubset closure = c;
  bool grew = true;
  while (grew) {
    grew = false;
    ElementSubset next = closure;
    for (auto x = closure.find_first(); x != ElementSubset::npos; x = closure.find_next(x)) {
      for (auto y = closure.find_first(); y != ElementSubset::npos; y = closure.find_next(y)) {
        std::size_t p = static_cast<std::size_t>(s.at(static_cast<int>(x), static_cast<int>(y)));
        if (!next.test(p)) {
          next.set(p);
          grew = true;
        }
      }
    }
    closure = std::move(next);
  }
  return closure;
}

ElementSubset idempotents(const Semigroup& s) {
  ElementSubset out(static_cast<std::size_t>(s.order()));
  for (int x = 0; x < s.order(); ++x) {
    if (s.at(x, x) == x) out.set(static_cast<std::size_t>(x));
  }
  return out;
}

bool is_left_ideal_of(const Semigroup& s, const ElementSubset& a,
                      const ElementSubset& t) {
  check_parent(s, a, "A");
  check_parent(s, t, "T");
  if (!a.is_subset_of(t)) throw InputError("A is not a subset of T");
  return set_product(s, t, a).is_subset_of(a);
}

bool is_right_ideal_of(const Semigroup& s, const ElementSubset& a,
                       const ElementSubset& t) {
  check_parent(s, a, "A");
  check_parent(s, t, "T");
  if (!a.is_subset_of(t)) throw InputError("A is not a subset of T");
  return set_product(s, a, t).is_subset_of(a);
}

int find_left_identity_from(const Semigroup& s, const ElementSubset& c, int x) {
  check_parent(s, c, "C");
  if (x < 0 || x >= s.order()) throw InputError("element index out of range");
  for (auto e = c.find_first(); e != ElementSubset::npos; e = c.find_next(e)) {
    if (s.at(static_cast<int>(e), x) == x) return static_cast<int>(e);
  }
  throw InputError("no element of C is a left identity for " + std::to_string(x) +
                   "; preconditions do not hold");
}

bool is_band(const Semigroup& s) {
  for (int x = 0; x < s.order(); ++x) {
    if (s.at(x, x) != x) return false;
  }
  return true;
}

bool is_left_zero_band(const Semigroup& s) {
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      if (s.at(x, y) != x) return false;
    }
  }
  return true;
}

bool is_right_zero_band(const Semigroup& s) {
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      if (s.at(x, y) != y) return false;
    }
  }
  return true;
}

bool is_rectangular_band(const Semigroup& s) {
  if (!is_band(s)) return false;
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      if (s.at(s.at(x, y), x) != x) return false;
    }
  }
  return true;
}

bool is_combinatorial(const Semigroup& s) {
  // The cyclic subsemigroup of x ends in a cycle x^i, x^{i+1}, ..., and that
  // cycle is a group. All subgroups are trivial exactly when every such cycle
  // has length one, i.e. the power sequence stabilises.
  const int n = s.order();
  std::vector<int> seen_at(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::fill(seen_at.begin(), seen_at.end(), -1);
    int power = x;
    int step = 0;
    while (seen_at[static_cast<std::size_t>(power)] < 0) {
      seen_at[static_cast<std::size_t>(power)] = step;
      power = s.at(power, x);
      ++step;
    }
    const int cycle_length = step - seen_at[static_cast<std::size_t>(power)];
    if (cycle_length != 1) return false;
  }
  return true;
}

namespace {

// Principal left ideal {a} u Sa as a bitset.
ElementSubset principal_left_ideal(const Semigroup& s, int a) {
  ElementSubset out(static_cast<std::size_t>(s.order()));
  out.set(static_cast<std::size_t>(a));
  for (int x = 0; x < s.order(); ++x) out.set(static_cast<std::size_t>(s.at(x, a)));
  return out;
}

ElementSubset principal_right_ideal(const Semigroup& s, int a) {
  ElementSubset out(static_cast<std::size_t>(s.order()));
  out.set(static_cast<std::size_t>(a));
  for (int x = 0; x < s.order(); ++x) out.set(static_cast<std::size_t>(s.at(a, x)));
  return out;
}

ElementSubset principal_two_sided_ideal(const Semigroup& s, int a) {
  ElementSubset out = principal_left_ideal(s, a);
  out |= principal_right_ideal(s, a);
  for (int x = 0; x < s.order(); ++x) {
    const int xa = s.at(x, a);
    for (int y = 0; y < s.order(); ++y) out.set(static_cast<std::size_t>(s.at(xa, y)));
  }
  return out;
}

}  // namespace

bool is_left_simple(const Semigroup& s) {
  const std::size_t n = static_cast<std::size_t>(s.order());
  for (int a = 0; a < s.order(); ++a) {
    if (principal_left_ideal(s, a).count() != n) return false;
  }
  return true;
}

bool is_right_simple(const Semigroup& s) {
  const std::size_t n = static_cast<std::size_t>(s.order());
  for (int a = 0; a < s.order(); ++a) {
    if (principal_right_ideal(s, a).count() != n) return false;
  }
  return true;
}

bool is_simple(const Semigroup& s) {
  const std::size_t n = static_cast<std::size_t>(s.order());
  for (int a = 0; a < s.order(); ++a) {
    if (principal_two_sided_ideal(s, a).count() != n) return false;
  }
  return true;
}

bool is_left_cancellative(const Semigroup& s) {
  const int n = s.order();
  std::vector<char> hit(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::fill(hit.begin(), hit.end(), 0);
    for (int y = 0; y < n; ++y) {
      char& cell = hit[static_cast<std::size_t>(s.at(x, y))];
      if (cell) return false;
      cell = 1;
    }
  }
  return true;
}

bool is_right_cancellative(const Semigroup& s) {
  const int n = s.order();
  std::vector<char> hit(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y) {
    std::fill(hit.begin(), hit.end(), 0);
    for (int x = 0; x < n; ++x) {
      char& cell = hit[static_cast<std::size_t>(s.at(x, y))];
      if (cell) return false;
      cell = 1;
    }
  }
  return true;
}

bool is_left_group(const Semigroup& s) {
  return is_left_simple(s) && is_right_cancellative(s);
}

bool is_right_group(const Semigroup& s) {
  return is_right_simple(s) && is_left_cancellative(s);
}

bool is_completely_simple(const Semigroup& s) { return is_simple(s); }

std::optional<int> find_identity(const Semigroup& s) {
  for (int e = 0; e < s.order(); ++e) {
    bool ok = true;
    for (int x = 0; x < s.order() && ok; ++x) {
      ok = s.at(e, x) == x && s.at(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_group(const Semigroup& s) {
  auto e = find_identity(s);
  if (!e) return false;
  for (int x = 0; x < s.order(); ++x) {
    bool has_inverse = false;
    for (int y = 0; y < s.order() && !has_inverse; ++y) {
      has_inverse = s.at(x, y) == *e && s.at(y, x) == *e;
    }
    if (!has_inverse) return false;
  }
  return true;
}

namespace {

// Groups equal bitsets, numbering classes by their smallest element.
std::pair<std::vector<int>, int> classify(const std::vector<ElementSubset>& keys) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    cls[static_cast<std::size_t>(x)] = count;
    for (int y = x + 1; y < n; ++y) {
      if (cls[static_cast<std::size_t>(y)] < 0 && keys[static_cast<std::size_t>(y)] == keys[static_cast<std::size_t>(x)]) {
        cls[static_cast<std::size_t>(y)] = count;
      }
    }
    ++count;
  }
  return {cls, count};
}

}  // namespace

GreenClasses green_classes(const Semigroup& s) {
  const int n = s.order();
  std::vector<ElementSubset> right, left;
  right.reserve(static_cast<std::size_t>(n));
  left.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    right.push_back(principal_right_ideal(s, x));  // xS^1 determines R
    left.push_back(principal_left_ideal(s, x));    // S^1x determines L
  }
  GreenClasses out;
  std::tie(out.r_class, out.r_count) = classify(right);
  std::tie(out.l_class, out.l_count) = classify(left);

  // H classes: intersection of the R and L partitions.
  std::vector<int> pair_id(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    pair_id[static_cast<std::size_t>(x)] =
        out.r_class[static_cast<std::size_t>(x)] * out.l_count + out.l_class[static_cast<std::size_t>(x)];
  }
  std::vector<int> renumber(static_cast<std::size_t>(out.r_count * out.l_count), -1);
  out.h_class.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int& id = renumber[static_cast<std::size_t>(pair_id[static_cast<std::size_t>(x)])];
    if (id < 0) id = out.h_count++;
    out.h_class[static_cast<std::size_t>(x)] = id;
  }
  return out;
}

Semigroup cyclic_group(int n) {
  if (n <= 0) throw InputError("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
  }
  return Semigroup::from_table_unchecked(n, std::move(table));
}

Semigroup left_zero_band(int n) {
  if (n <= 0) throw InputError("band order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = i;
  }
  return Semigroup::from_table_unchecked(n, std::move(table));
}

Semigroup right_zero_band(int n) {
  if (n <= 0) throw InputError("band order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = j;
  }
  return Semigroup::from_table_unchecked(n, std::move(table));
}

Semigroup direct_product(const Semigroup& s, const Semigroup& t) {
  const long long order = static_cast<long long>(s.order()) * t.order();
  if (order > kMaxParsedOrder) throw InputError("direct product order too large");
  const int n = static_cast<int>(order);
  const int nt = t.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const int as = a / nt, at_ = a % nt;
    for (int b = 0; b < n; ++b) {
      const int bs = b / nt, bt = b % nt;
      table[static_cast<std::size_t>(a) * n + b] = s.at(as, bs) * nt + t.at(at_, bt);
    }
  }
  return Semigroup::from_table_unchecked(n, std::move(table));
}

Semigroup adjoin_zero(const Semigroup& s) {
  const int n = s.order() + 1;
  const int zero = s.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n, zero);
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      table[static_cast<std::size_t>(i) * n + j] = s.at(i, j);
    }
  }
  return Semigroup::from_table_unchecked(n, std::move(table));
}

Semigroup rees_matrix_semigroup(const Semigroup& group, int i_size, int lambda_size,
                                const std::vector<std::vector<int>>& sandwich) {
  if (!is_group(group)) throw InputError("rees construction requires a group");
  if (i_size <= 0 || lambda_size <= 0) throw InputError("rees index sets must be nonempty");
  if (sandwich.size() != static_cast<std::size_t>(lambda_size)) {
    throw InputError("sandwich matrix must have lambda_size rows");
  }
  for (const auto& row : sandwich) {
    if (row.size() != static_cast<std::size_t>(i_size)) {
      throw InputError("sandwich matrix rows must have i_size entries");
    }
    for (int g : row) {
      if (g < 0 || g >= group.order()) throw InputError("sandwich entry out of range");
    }
  }
  const long long order = static_cast<long long>(group.order()) * i_size * lambda_size;
  if (order > kMaxParsedOrder) throw InputError("rees semigroup order too large");
  const int n = static_cast<int>(order);
  auto index_of = [&](int g, int i, int l) {
    return (g * i_size + i) * lambda_size + l;
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int g1 = 0; g1 < group.order(); ++g1) {
    for (int i1 = 0; i1 < i_size; ++i1) {
      for (int l1 = 0; l1 < lambda_size; ++l1) {
        const int x = index_of(g1, i1, l1);
        for (int g2 = 0; g2 < group.order(); ++g2) {
          for (int i2 = 0; i2 < i_size; ++i2) {
            const int gp = group.at(group.at(g1, sandwich[static_cast<std::size_t>(l1)][static_cast<std::size_t>(i2)]), g2);
            for (int l2 = 0; l2 < lambda_size; ++l2) {
              table[static_cast<std::size_t>(x) * n + index_of(g2, i2, l2)] = index_of(gp, i1, l2);
            }
          }
        }
      }
    }
  }
  return Semigroup::from_table_unchecked(n, std::move(table));
}

bool is_closed_subset(const Semigroup& s, const ElementSubset& a) {
  check_parent(s, a, "A");
  for (auto x = a.find_first(); x != ElementSubset::npos; x = a.find_next(x)) {
    for (auto y = a.find_first(); y != ElementSubset::npos; y = a.find_next(y)) {
      if (!a.test(static_cast<std::size_t>(s.at(static_cast<int>(x), static_cast<int>(y))))) {
        return false;
      }
    }
  }
  return true;
}

InducedSubsemigroup induced_subsemigroup(const Semigroup& s, const ElementSubset& a) {
  check_parent(s, a, "A");
  if (a.none()) throw InputError("cannot induce on the empty subset");
  if (!is_closed_subset(s, a)) throw InputError("subset is not product-closed");
  InducedSubsemigroup out{Semigroup::from_table_unchecked(1, {0}), {}, {}};
  out.elements = subset_members(a);
  out.local.assign(static_cast<std::size_t>(s.order()), -1);
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    out.local[static_cast<std::size_t>(out.elements[k])] = static_cast<int>(k);
  }
  const int m = static_cast<int>(out.elements.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      table[static_cast<std::size_t>(i) * m + j] =
          out.local[static_cast<std::size_t>(s.at(out.elements[static_cast<std::size_t>(i)],
                                                  out.elements[static_cast<std::size_t>(j)]))];
    }
  }
  out.semigroup = Semigroup::from_table_unchecked(m, std::move(table));
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const Semigroup& s, const Semigroup& t) {
  if (s.order() != t.order()) return std::nullopt;
  const int n = s.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        ok = t.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ==
             perm[static_cast<std::size_t>(s.at(i, j))];
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool is_isomorphic(const Semigroup& s, const Semigroup& t) {
  return find_isomorphism(s, t).has_value();
}

std::vector<int> canonical_table(const Semigroup& s) {
  const int n = s.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> candidate(static_cast<std::size_t>(n) * n);
  do {
    // candidate[perm[i]][perm[j]] = perm[table[i][j]]
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        candidate[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * n +
                  perm[static_cast<std::size_t>(j)]] = perm[static_cast<std::size_t>(s.at(i, j))];
      }
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace caylabel

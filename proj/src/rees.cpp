#include "caylabel/rees.hpp"

#include <algorithm>

namespace caylabel {

int ReesDecomposition::group_inverse(int g) const {
  for (int h = 0; h < group.order(); ++h) {
    if (group.at(g, h) == identity && group.at(h, g) == identity) return h;
  }
  throw InternalError("group element without inverse");
}

int ReesDecomposition::parent_of(const ReesTriple& t) const {
  for (int x = 0; x < static_cast<int>(embedding.size()); ++x) {
    if (embedding[static_cast<std::size_t>(x)] == t) return x;
  }
  throw InternalError("rees triple outside the embedding image");
}

ReesDecomposition rees_decompose(const Semigroup& s) {
  if (!is_completely_simple(s)) {
    throw InputError("semigroup is not completely simple");
  }
  const int n = s.order();
  const GreenClasses green = green_classes(s);

  // Base point: the smallest idempotent. Finite semigroups always have one.
  const ElementSubset idem = idempotents(s);
  auto first = idem.find_first();
  if (first == ElementSubset::npos) {
    throw InternalError("completely simple semigroup without idempotent");
  }
  const int e = static_cast<int>(first);
  const int re = green.r_class[static_cast<std::size_t>(e)];
  const int le = green.l_class[static_cast<std::size_t>(e)];

  ReesDecomposition out{Semigroup::from_table_unchecked(1, {0}), 0, {}, 0, 0, {}, {}, {}, {}};
  out.i_size = green.r_count;
  out.lambda_size = green.l_count;

  // Maximal subgroup: the H class of e.
  ElementSubset h_e(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    if (green.r_class[static_cast<std::size_t>(x)] == re &&
        green.l_class[static_cast<std::size_t>(x)] == le) {
      h_e.set(static_cast<std::size_t>(x));
    }
  }
  InducedSubsemigroup h_ind = induced_subsemigroup(s, h_e);
  out.group = h_ind.semigroup;
  out.group_elements = h_ind.elements;
  out.identity = h_ind.to_local(e);
  if (!is_group(out.group)) {
    throw InternalError("H class of the base idempotent is not a group");
  }

  // Representatives: r_i in R_i n L_e, q_l in R_e n L_l (smallest each).
  out.r_reps.assign(static_cast<std::size_t>(out.i_size), -1);
  out.q_reps.assign(static_cast<std::size_t>(out.lambda_size), -1);
  for (int x = 0; x < n; ++x) {
    const int rx = green.r_class[static_cast<std::size_t>(x)];
    const int lx = green.l_class[static_cast<std::size_t>(x)];
    if (lx == le && out.r_reps[static_cast<std::size_t>(rx)] < 0) {
      out.r_reps[static_cast<std::size_t>(rx)] = x;
    }
    if (rx == re && out.q_reps[static_cast<std::size_t>(lx)] < 0) {
      out.q_reps[static_cast<std::size_t>(lx)] = x;
    }
  }
  for (int r : out.r_reps) {
    if (r < 0) throw InternalError("R class missing a representative in L_e");
  }
  for (int q : out.q_reps) {
    if (q < 0) throw InternalError("L class missing a representative in R_e");
  }

  // Sandwich matrix p[l][i] = q_l * r_i, which must land in the group.
  out.sandwich.assign(static_cast<std::size_t>(out.lambda_size),
                      std::vector<int>(static_cast<std::size_t>(out.i_size)));
  for (int l = 0; l < out.lambda_size; ++l) {
    for (int i = 0; i < out.i_size; ++i) {
      const int p = s.at(out.q_reps[static_cast<std::size_t>(l)],
                         out.r_reps[static_cast<std::size_t>(i)]);
      const int local = h_ind.to_local(p);
      if (local < 0) throw InternalError("sandwich product escaped the base group");
      out.sandwich[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)] = local;
    }
  }

  // Coordinates: x = r_i * g * q_l with i, l the Green coordinates of x and
  // g recovered by scanning the group.
  out.embedding.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const int i = green.r_class[static_cast<std::size_t>(x)];
    const int l = green.l_class[static_cast<std::size_t>(x)];
    int found = -1;
    for (int g = 0; g < out.group.order(); ++g) {
      const int rg = s.at(out.r_reps[static_cast<std::size_t>(i)],
                          out.group_elements[static_cast<std::size_t>(g)]);
      if (s.at(rg, out.q_reps[static_cast<std::size_t>(l)]) == x) {
        if (found >= 0) throw InternalError("ambiguous group coordinate");
        found = g;
      }
    }
    if (found < 0) throw InternalError("no group coordinate for element");
    out.embedding[static_cast<std::size_t>(x)] = ReesTriple{found, i, l};
  }

  // Post-checks: the coordinate map is a bijection onto G x I x Lambda and
  // transports the parent product onto the matrix-semigroup product.
  if (static_cast<long long>(out.group.order()) * out.i_size * out.lambda_size != n) {
    throw InternalError("coordinate grid size does not match the order");
  }
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (const ReesTriple& t : out.embedding) {
    const std::size_t code = static_cast<std::size_t>(
        (t.g * out.i_size + t.i) * out.lambda_size + t.lambda);
    if (hit[code]) throw InternalError("coordinate map is not injective");
    hit[code] = 1;
  }
  for (int x = 0; x < n; ++x) {
    const ReesTriple& a = out.embedding[static_cast<std::size_t>(x)];
    for (int y = 0; y < n; ++y) {
      const ReesTriple& b = out.embedding[static_cast<std::size_t>(y)];
      const ReesTriple& ab = out.embedding[static_cast<std::size_t>(s.at(x, y))];
      const int expected_g = out.group.at(
          out.group.at(a.g, out.sandwich[static_cast<std::size_t>(a.lambda)][static_cast<std::size_t>(b.i)]),
          b.g);
      if (ab.g != expected_g || ab.i != a.i || ab.lambda != b.lambda) {
        throw InternalError("product rule violated by the coordinate map");
      }
    }
  }
  return out;
}

}  // namespace caylabel

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "specht/dynkin.hpp"
#include "specht/root_system.hpp"
#include "specht/weyl.hpp"

namespace specht {

// Closure of a root set under its own reflections; contains negatives and
// is additively closed.
inline std::vector<std::size_t> reflection_closure(
    const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::set<std::size_t> s(roots.begin(), roots.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(s.begin(), s.end());
    for (std::size_t a : cur)
      for (std::size_t b : cur) {
        std::size_t img = rs.refl[a][b];
        if (!s.count(img)) {
          s.insert(img);
          grew = true;
        }
      }
  }
  return {s.begin(), s.end()};
}

inline bool is_additively_closed(const RootSystem& rs,
                                 const std::vector<std::size_t>& roots) {
  std::set<std::size_t> s(roots.begin(), roots.end());
  for (std::size_t a : roots)
    for (std::size_t b : roots) {
      std::vector<long long> sum = rs.coords[a];
      for (std::size_t j = 0; j < rs.rank; ++j) sum[j] += rs.coords[b][j];
      if (rs.has_coords(sum) && !s.count(rs.index_of(sum))) return false;
    }
  return true;
}

// Simple system of a subsystem, inside the ambient positive system: the
// positive roots of the subsystem that are not sums of two of them.
// Returned in display order.
inline std::vector<std::size_t> simple_system_in_positive(
    const RootSystem& rs, const std::vector<std::size_t>& subsystem) {
  if (!is_additively_closed(rs, subsystem))
    throw std::invalid_argument("simple_system_in_positive: set is not additively closed");
  std::vector<std::size_t> pos;
  for (std::size_t r : subsystem)
    if (rs.is_positive(r)) pos.push_back(r);
  std::set<std::size_t> decomposable;
  for (std::size_t a : pos)
    for (std::size_t b : pos) {
      std::vector<long long> sum = rs.coords[a];
      for (std::size_t j = 0; j < rs.rank; ++j) sum[j] += rs.coords[b][j];
      if (rs.has_coords(sum)) decomposable.insert(rs.index_of(sum));
    }
  std::vector<std::size_t> J;
  for (std::size_t r : pos)
    if (!decomposable.count(r)) J.push_back(r);
  return rs.display_sorted(J);
}

// Largest subsystem orthogonal to every root of the input.
inline std::vector<std::size_t> orthogonal_complement(
    const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < rs.size(); ++a) {
    bool ortho = true;
    for (std::size_t b : roots)
      if (!rs.inner(a, b).is_zero()) {
        ortho = false;
        break;
      }
    if (ortho) out.push_back(a);
  }
  return out;
}

// Canonical form of a root set under the full group: the lexicographically
// smallest sorted image. Conjugate sets get equal forms.
inline std::vector<std::size_t> conjugacy_canonical_form(
    const WeylGroup& W, const std::vector<std::size_t>& roots) {
  std::vector<std::size_t> best;
  for (ElemId g = 0; g < W.order(); ++g) {
    std::vector<std::size_t> img;
    img.reserve(roots.size());
    for (std::size_t r : roots) img.push_back(W.act_root(g, r));
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

// Highest root of an irreducible subsystem spanned by the given simple
// system: the unique root of maximal height in that component.
inline std::size_t highest_root_of(const RootSystem& rs,
                                   const std::vector<std::size_t>& component_J) {
  std::vector<std::size_t> closure = reflection_closure(rs, component_J);
  // heights measured against the component's own simple system
  Matrix<Rational> basis(rs.dim, component_J.size(), Rational(0));
  for (std::size_t j = 0; j < component_J.size(); ++j)
    for (std::size_t i = 0; i < rs.dim; ++i)
      basis.at(i, j) = rs.roots[component_J[j]][i];
  Rationals Q;
  std::size_t best = closure.front();
  Rational best_h;
  bool first = true;
  for (std::size_t r : closure) {
    auto x = solve(Q, basis, rs.roots[r]);
    if (!x) throw std::logic_error("component closure left the component span");
    Rational h(0);
    for (const Rational& c : *x) h += c;
    if (first || best_h < h) {
      best = r;
      best_h = h;
      first = false;
    }
  }
  return best;
}

struct SubsystemClass {
  std::vector<std::size_t> canonical_roots;  // dedup key, sorted
  std::vector<std::size_t> J;                // simple system of the canonical set
  std::string type;                          // "A3", "4A1", "0", ...
};

// Subsystem enumeration by iterated extended-diagram node deletion, up to
// conjugacy. Includes the full system and the empty set.
inline std::vector<SubsystemClass> enumerate_subsystems(const RootSystem& rs,
                                                        const WeylGroup& W,
                                                        int max_depth = 3) {
  std::map<std::vector<std::size_t>, int> seen;  // canonical roots -> depth
  std::vector<std::size_t> all(rs.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::size_t>> work{conjugacy_canonical_form(W, all)};
  seen[work[0]] = 0;
  if (!seen.count({})) {
    seen[{}] = 0;
    work.push_back({});
  }

  for (std::size_t head = 0; head < work.size(); ++head) {
    std::vector<std::size_t> cur = work[head];
    int depth = seen[cur];
    if (cur.empty() || depth >= max_depth) continue;
    std::vector<std::size_t> J = simple_system_in_positive(rs, cur);
    if (J.empty()) continue;
    Diagram d = diagram_of(rs, J);
    std::vector<std::size_t> nodes = J;
    for (const auto& comp : diagram_components(d)) {
      std::vector<std::size_t> comp_J;
      for (std::size_t p : comp) comp_J.push_back(J[p]);
      nodes.push_back(rs.neg(highest_root_of(rs, comp_J)));
    }
    std::size_t n = nodes.size();
    for (std::size_t mask = 1; mask + 1 <= (std::size_t(1) << n); ++mask) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < n; ++k)
        if (!((mask >> k) & 1)) rest.push_back(nodes[k]);
      // mask picks the deleted nodes; at least one must go
      std::vector<std::size_t> sub = rest.empty()
                                         ? std::vector<std::size_t>{}
                                         : reflection_closure(rs, rest);
      std::vector<std::size_t> canon = conjugacy_canonical_form(W, sub);
      if (!seen.count(canon)) {
        seen[canon] = depth + 1;
        work.push_back(canon);
      }
    }
  }

  std::vector<SubsystemClass> out;
  for (const auto& [canon, _] : seen) {
    SubsystemClass sc;
    sc.canonical_roots = canon;
    sc.J = canon.empty() ? std::vector<std::size_t>{}
                         : simple_system_in_positive(rs, canon);
    sc.type = compound_label(classify_diagram(rs, sc.J));
    out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), [](const SubsystemClass& a, const SubsystemClass& b) {
    if (a.canonical_roots.size() != b.canonical_roots.size())
      return a.canonical_roots.size() > b.canonical_roots.size();
    return a.canonical_roots < b.canonical_roots;
  });
  return out;
}

}  // namespace specht

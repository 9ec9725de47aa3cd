#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "specht/root_system.hpp"

namespace specht {

// Coxeter graph of a set of roots: nodes are root indices, edges carry the
// bond multiplicity n_ab * n_ba in {1,2,3}.
struct Diagram {
  std::vector<std::size_t> nodes;          // root indices
  std::vector<std::vector<int>> bond;      // bond[i][j], 0 = no edge
  std::vector<Rational> norm;              // (a,a) per node
};

inline Diagram diagram_of(const RootSystem& rs,
                          const std::vector<std::size_t>& roots) {
  Diagram d;
  d.nodes = roots;
  std::size_t n = roots.size();
  d.bond.assign(n, std::vector<int>(n, 0));
  d.norm.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.norm[i] = rs.inner(roots[i], roots[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational nij = Rational(2) * rs.inner(roots[i], roots[j]) / d.norm[j];
      Rational nji = Rational(2) * rs.inner(roots[j], roots[i]) / d.norm[i];
      int m = (nij * nji).to_int();
      d.bond[i][j] = d.bond[j][i] = m;
    }
  return d;
}

// Same graph for vectors that need not be roots of any ambient system (orbit
// averages of a folding, coroots). Nodes are positions into vs.
inline Diagram diagram_of_vectors(const std::vector<Vec>& vs) {
  Diagram d;
  d.nodes.resize(vs.size());
  std::iota(d.nodes.begin(), d.nodes.end(), 0);
  std::size_t n = vs.size();
  d.bond.assign(n, std::vector<int>(n, 0));
  d.norm.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.norm[i] = dot(vs[i], vs[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational nij = Rational(2) * dot(vs[i], vs[j]) / d.norm[j];
      Rational nji = Rational(2) * dot(vs[j], vs[i]) / d.norm[i];
      int m = (nij * nji).to_int();
      d.bond[i][j] = d.bond[j][i] = m;
    }
  return d;
}

// Connected components as lists of node positions, ordered by smallest
// member position.
inline std::vector<std::vector<std::size_t>> diagram_components(
    const Diagram& d) {
  std::size_t n = d.nodes.size();
  std::vector<bool> used(n, false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (used[s]) continue;
    std::vector<std::size_t> comp{s};
    used[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!used[j] && d.bond[comp[k]][j] > 0) {
          used[j] = true;
          comp.push_back(j);
        }
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Cartan label of one connected component ("A3", "B2", "G2", ...).
// Throws UnsupportedError when the component is not a valid finite type.
inline std::string classify_component(const Diagram& d,
                                      const std::vector<std::size_t>& comp) {
  std::size_t n = comp.size();
  auto bad = [&] {
    return UnsupportedError("diagram component matches no supported type");
  };
  if (n == 1) return "A1";
  int max_bond = 0;
  std::size_t edge_count = 0;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int m = d.bond[comp[i]][comp[j]];
      if (m > 0) {
        ++edge_count;
        ++degree[i];
        ++degree[j];
        max_bond = std::max(max_bond, m);
      }
    }
  if (edge_count != n - 1) throw bad();  // a tree exactly
  std::size_t max_degree = *std::max_element(degree.begin(), degree.end());
  if (max_bond == 3) {
    if (n != 2) throw bad();
    return "G2";
  }
  if (max_bond == 2) {
    if (max_degree > 2) throw bad();
    if (n == 2) return "B2";
    Rational lo = d.norm[comp[0]], hi = d.norm[comp[0]];
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, d.norm[comp[i]], [](const Rational& a, const Rational& b) { return a < b; });
      hi = std::max(hi, d.norm[comp[i]], [](const Rational& a, const Rational& b) { return a < b; });
    }
    std::size_t n_short = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (d.norm[comp[i]] == lo) ++n_short;
    if (n == 4 && n_short == 2) return "F4";
    if (n_short == 1) return "B" + std::to_string(n);
    if (n_short == n - 1) return "C" + std::to_string(n);
    throw bad();
  }
  // simply laced
  if (max_degree <= 2) return "A" + std::to_string(n);
  if (max_degree == 3 && n == 4) return "D4";
  throw bad();
}

// One label per connected component, in component order.
inline std::vector<std::string> classify_diagram(const Diagram& d) {
  std::vector<std::string> out;
  for (const auto& comp : diagram_components(d))
    out.push_back(classify_component(d, comp));
  return out;
}

inline std::vector<std::string> classify_diagram(
    const RootSystem& rs, const std::vector<std::size_t>& simple_roots) {
  return classify_diagram(diagram_of(rs, simple_roots));
}

// "4A1", "A3", "A2+2A1", "0" for the empty set. Components are grouped by
// label, larger ranks first.
inline std::string compound_label(std::vector<std::string> labels) {
  if (labels.empty()) return "0";
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    if (a.back() != b.back()) return a.back() > b.back();  // rank digit
    return a < b;
  });
  std::string out;
  std::size_t i = 0;
  while (i < labels.size()) {
    std::size_t j = i;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += labels[i];
    i = j;
  }
  return out;
}

// All node permutations preserving bonds and root norms, as maps on node
// positions. Identity included.
inline std::vector<std::vector<std::size_t>> diagram_autos(const Diagram& d) {
  std::size_t n = d.nodes.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> autos;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(d.norm[i] == d.norm[perm[i]])) ok = false;
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (d.bond[i][j] != d.bond[perm[i]][perm[j]]) ok = false;
    }
    if (ok) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(autos.begin(), autos.end());
  return autos;
}

// System spanned by the coroots 2a/(a,a), in the same ambient space. For a
// simply-laced system this is a rescaling; B and C swap.
inline RootSystem dual_system(const RootSystem& rs) {
  std::vector<Vec> cosimple;
  for (const Vec& a : rs.simple) {
    Rational nn = dot(a, a);
    Vec v(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) v[k] = Rational(2) * a[k] / nn;
    cosimple.push_back(std::move(v));
  }
  std::vector<std::string> parts = classify_diagram(diagram_of_vectors(cosimple));
  return build_root_system_from_simple(compound_label(std::move(parts)),
                                       std::move(cosimple));
}

}  // namespace specht

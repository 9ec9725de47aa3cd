#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specht/dynkin.hpp"
#include "specht/subsys.hpp"
#include "specht/weyl.hpp"

namespace specht {

// Ambient action of a group element on a vector in the span of the simple
// system. The element acts on simple-root coordinates via action_matrix.
inline Vec apply_elem(const WeylGroup& W, ElemId g, const Vec& v) {
  const RootSystem& rs = *W.rs;
  Matrix<Rational> basis(rs.dim, rs.rank, Rational(0));
  for (std::size_t j = 0; j < rs.rank; ++j)
    for (std::size_t i = 0; i < rs.dim; ++i) basis.at(i, j) = rs.simple[j][i];
  Rationals q;
  auto c = solve(q, basis, v);
  if (!c) throw std::invalid_argument("vector outside the span of the simple system");
  Matrix<Rational> m = W.action_matrix(g);
  Vec out(rs.dim, Rational(0));
  for (std::size_t i = 0; i < rs.rank; ++i) {
    Rational ci(0);
    for (std::size_t j = 0; j < rs.rank; ++j) ci += m.at(i, j) * (*c)[j];
    for (std::size_t k = 0; k < rs.dim; ++k) out[k] += ci * rs.simple[i][k];
  }
  return out;
}

// The longest element of the reflection subgroup generated by the given
// roots: the unique element sending every positive root of the closure to a
// negative one.
inline ElemId orbit_longest(const RootSystem& rs, const WeylGroup& W,
                            const std::vector<std::size_t>& orbit,
                            std::size_t order_guard = kDefaultOrderGuard) {
  std::vector<std::size_t> closure = reflection_closure(rs, orbit);
  Subgroup h = subgroup_of_roots(W, orbit, order_guard);
  std::vector<std::size_t> pos;
  for (std::size_t r : closure)
    if (rs.is_positive(r)) pos.push_back(r);
  std::optional<ElemId> found;
  for (ElemId g : h.elems) {
    bool all_neg = true;
    for (std::size_t r : pos)
      if (rs.is_positive(W.act_root(g, r))) {
        all_neg = false;
        break;
      }
    if (all_neg) {
      if (found) throw std::logic_error("two elements negate the positive system");
      found = g;
    }
  }
  if (!found) throw std::logic_error("no element negates the positive system");
  return *found;
}

// Folding datum of a simple system J under a diagram symmetry rho. The
// fixed subgroup W1 is generated by the longest elements of the rho-orbit
// subgroups; pi1 holds the orbit averages.
struct SteinbergDatum {
  std::vector<std::size_t> J;     // source simple system, root indices
  std::vector<std::size_t> rho;   // node permutation on positions of J
  std::vector<std::vector<std::size_t>> node_orbits;  // rho-cycles, positions
  std::vector<std::vector<std::size_t>> orbits;       // same cycles, root indices
  std::vector<Vec> pi1;           // ambient orbit averages
  std::vector<ElemId> gens;       // orbit longest elements
  Subgroup W1;
};

inline SteinbergDatum steinberg_fold(const RootSystem& rs, const WeylGroup& W,
                                     const std::vector<std::size_t>& J,
                                     const std::vector<std::size_t>& rho,
                                     std::size_t order_guard = kDefaultOrderGuard) {
  std::size_t n = J.size();
  if (rho.size() != n) throw std::invalid_argument("fold: permutation size mismatch");
  Diagram d = diagram_of(rs, J);
  for (std::size_t i = 0; i < n; ++i) {
    if (rho[i] >= n) throw std::invalid_argument("fold: permutation entry out of range");
    if (!(d.norm[i] == d.norm[rho[i]]))
      throw std::invalid_argument("fold: node permutation is not a diagram symmetry");
    for (std::size_t j = 0; j < n; ++j)
      if (d.bond[i][j] != d.bond[rho[i]][rho[j]])
        throw std::invalid_argument("fold: node permutation is not a diagram symmetry");
  }

  SteinbergDatum out;
  out.J = J;
  out.rho = rho;

  std::vector<bool> used(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (used[s]) continue;
    std::vector<std::size_t> cyc;
    std::size_t p = s;
    do {
      used[p] = true;
      cyc.push_back(p);
      p = rho[p];
    } while (p != s);
    out.node_orbits.push_back(std::move(cyc));
  }

  // components touched by a nontrivial orbit must have a single root length
  auto comps = diagram_components(d);
  for (const auto& orb : out.node_orbits) {
    if (orb.size() == 1) continue;
    for (const auto& comp : comps) {
      bool touched = false;
      for (std::size_t p : orb)
        touched = touched || std::find(comp.begin(), comp.end(), p) != comp.end();
      if (!touched) continue;
      for (std::size_t p : comp)
        if (!(d.norm[p] == d.norm[comp[0]]))
          throw UnsupportedError("folding touches a component with two root lengths");
    }
  }

  for (const auto& orb : out.node_orbits) {
    std::vector<std::size_t> roots;
    for (std::size_t p : orb) roots.push_back(J[p]);
    Vec avg(rs.dim, Rational(0));
    for (std::size_t r : roots)
      for (std::size_t k = 0; k < rs.dim; ++k) avg[k] += rs.roots[r][k];
    for (auto& x : avg) x = x / Rational(static_cast<long long>(roots.size()));
    out.pi1.push_back(std::move(avg));
    out.gens.push_back(orbit_longest(rs, W, roots, order_guard));
    out.orbits.push_back(std::move(roots));
  }
  out.W1 = generate_subgroup(W, out.gens, order_guard);
  return out;
}

// The projected root set Phi1 of a folding and the checks that it behaves
// as a root system on the fixed subspace.
struct FoldProperties {
  std::vector<Vec> phi1;
  bool spans = false;                 // Phi1 spans a space of dim = #orbits
  bool one_signed = false;            // coordinates over pi1 all >= 0 or all <= 0
  bool ray_basis = false;             // pi1 independent, one per ray
  bool reflections_realized = false;  // each Phi1 reflection is some W1 element
  bool rays_permuted = false;         // Phi1 reflections permute Phi1's rays
  bool all() const {
    return spans && one_signed && ray_basis && reflections_realized && rays_permuted;
  }
};

// v scaled by a positive factor so its first nonzero coordinate is +-1;
// positive multiples land on the same representative.
inline Vec ray_normalize(const Vec& v) {
  for (const Rational& x : v) {
    if (x.is_zero()) continue;
    Rational s = x < Rational(0) ? -x : x;
    Vec out = v;
    for (auto& y : out) y = y / s;
    return out;
  }
  return v;
}

inline FoldProperties check_fold_properties(const RootSystem& rs,
                                            const WeylGroup& W,
                                            const SteinbergDatum& d) {
  FoldProperties out;
  std::size_t m = d.J.size(), no = d.node_orbits.size();
  Rationals q;

  // closure roots in J-coordinates
  Matrix<Rational> basisJ(rs.dim, m, Rational(0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < rs.dim; ++i) basisJ.at(i, j) = rs.roots[d.J[j]][i];
  std::vector<std::size_t> psi = reflection_closure(rs, d.J);

  std::size_t rho_order = 1;
  {
    std::vector<std::size_t> p = d.rho, ident(m);
    std::iota(ident.begin(), ident.end(), 0);
    while (p != ident) {
      std::vector<std::size_t> np(m);
      for (std::size_t i = 0; i < m; ++i) np[i] = d.rho[p[i]];
      p = np;
      ++rho_order;
    }
  }

  std::set<Vec> phi1_set;
  for (std::size_t r : psi) {
    auto c = solve(q, basisJ, rs.roots[r]);
    if (!c) throw std::logic_error("closure root outside the span of J");
    std::vector<Rational> acc(m, Rational(0)), cur = *c;
    for (std::size_t k = 0; k < rho_order; ++k) {
      for (std::size_t i = 0; i < m; ++i) acc[i] += cur[i];
      std::vector<Rational> nxt(m, Rational(0));
      for (std::size_t i = 0; i < m; ++i) nxt[d.rho[i]] = cur[i];
      cur = nxt;
    }
    Vec f(rs.dim, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      Rational ci = acc[i] / Rational(static_cast<long long>(rho_order));
      for (std::size_t k = 0; k < rs.dim; ++k) f[k] += ci * rs.roots[d.J[i]][k];
    }
    phi1_set.insert(std::move(f));
  }
  out.phi1.assign(phi1_set.begin(), phi1_set.end());

  Matrix<Rational> phi_rows(out.phi1.size(), rs.dim, Rational(0));
  for (std::size_t r = 0; r < out.phi1.size(); ++r)
    for (std::size_t k = 0; k < rs.dim; ++k) phi_rows.at(r, k) = out.phi1[r][k];
  out.spans = rank_of(q, phi_rows) == no;

  Matrix<Rational> pi_cols(rs.dim, no, Rational(0));
  for (std::size_t j = 0; j < no; ++j)
    for (std::size_t i = 0; i < rs.dim; ++i) pi_cols.at(i, j) = d.pi1[j][i];
  out.ray_basis = rank_of(q, pi_cols) == no;

  out.one_signed = true;
  for (const Vec& f : out.phi1) {
    auto c = solve(q, pi_cols, f);
    if (!c) {
      out.one_signed = false;
      break;
    }
    bool nonneg = std::all_of(c->begin(), c->end(),
                              [](const Rational& x) { return !(x < Rational(0)); });
    bool nonpos = std::all_of(c->begin(), c->end(),
                              [](const Rational& x) { return !(Rational(0) < x); });
    if (!nonneg && !nonpos) {
      out.one_signed = false;
      break;
    }
  }

  out.reflections_realized = true;
  for (const Vec& f : out.phi1) {
    bool zero = std::all_of(f.begin(), f.end(),
                            [](const Rational& x) { return x.is_zero(); });
    if (zero) {
      out.reflections_realized = false;
      break;
    }
    bool realized = false;
    for (ElemId w : d.W1.elems) {
      bool match = true;
      for (const Vec& b : d.pi1)
        if (!(apply_elem(W, w, b) == reflect_vec(f, b))) {
          match = false;
          break;
        }
      if (match) {
        realized = true;
        break;
      }
    }
    if (!realized) {
      out.reflections_realized = false;
      break;
    }
  }

  std::set<Vec> rays;
  for (const Vec& f : out.phi1) rays.insert(ray_normalize(f));
  out.rays_permuted = true;
  for (const Vec& f : out.phi1)
    for (const Vec& g : out.phi1)
      if (!rays.count(ray_normalize(reflect_vec(f, g)))) {
        out.rays_permuted = false;
        break;
      }
  return out;
}

// One generator item of a reflection-or-fold datum: a single root, or an
// orbit of roots written "1/k(r1+...+rk)" whose product of reflections'
// longest element is the generator.
inline std::vector<std::size_t> parse_sw_item(const RootSystem& rs,
                                              const std::string& item) {
  if (item.rfind("1/", 0) != 0) return {rs.from_notation(item)};
  std::size_t open = item.find('(');
  if (open == std::string::npos || item.back() != ')')
    throw UnsupportedError("item '" + item + "' is not of the form 1/k(...)");
  std::string kstr = item.substr(2, open - 2);
  if (kstr.empty() || !std::all_of(kstr.begin(), kstr.end(),
                                   [](char c) { return c >= '0' && c <= '9'; }))
    throw UnsupportedError("item '" + item + "' has a malformed denominator");
  std::size_t k = std::stoul(kstr);
  std::string inner = item.substr(open + 1, item.size() - open - 2);
  std::vector<std::size_t> orbit;
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    std::size_t plus = inner.find('+', pos);
    std::string part = inner.substr(pos, plus == std::string::npos ? std::string::npos
                                                                   : plus - pos);
    if (part.empty())
      throw UnsupportedError("item '" + item + "' has an empty summand");
    orbit.push_back(rs.from_notation(part));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  if (orbit.size() != k)
    throw UnsupportedError("item '" + item + "' averages " +
                           std::to_string(orbit.size()) + " roots, not " +
                           std::to_string(k));
  return orbit;
}

inline std::string render_sw_item(const RootSystem& rs,
                                  std::vector<std::size_t> orbit) {
  orbit = rs.display_sorted(std::move(orbit));
  if (orbit.size() == 1) return rs.notation(orbit[0]);
  std::string s = "1/" + std::to_string(orbit.size()) + "(";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (i) s += "+";
    s += rs.notation(orbit[i]);
  }
  return s + ")";
}

// A generator datum as it appears on the command line: one generator per
// item, each the longest element of its orbit subgroup. Plain items give
// reflections, so a datum of plain items generates the Weyl subgroup.
struct SWDatum {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<Vec> averages;
  std::vector<ElemId> gens;
  Subgroup group;
  bool plain = true;
};

inline SWDatum sw_datum_from_orbits(const RootSystem& rs, const WeylGroup& W,
                                    std::vector<std::vector<std::size_t>> orbits,
                                    std::size_t order_guard = kDefaultOrderGuard) {
  SWDatum out;
  out.orbits = std::move(orbits);
  for (const auto& orb : out.orbits) {
    if (orb.size() != 1) out.plain = false;
    Vec avg(rs.dim, Rational(0));
    for (std::size_t r : orb)
      for (std::size_t k = 0; k < rs.dim; ++k) avg[k] += rs.roots[r][k];
    for (auto& x : avg) x = x / Rational(static_cast<long long>(orb.size()));
    out.averages.push_back(std::move(avg));
    out.gens.push_back(orbit_longest(rs, W, orb, order_guard));
  }
  out.group = generate_subgroup(W, out.gens, order_guard);
  return out;
}

inline SWDatum parse_sw_datum(const RootSystem& rs, const WeylGroup& W,
                              const std::vector<std::string>& items,
                              std::size_t order_guard = kDefaultOrderGuard) {
  std::vector<std::vector<std::size_t>> orbits;
  for (const std::string& it : items) orbits.push_back(parse_sw_item(rs, it));
  return sw_datum_from_orbits(rs, W, std::move(orbits), order_guard);
}

// Conjugacy canonical form of a subgroup: the smallest sorted element-id
// tuple among all W-conjugates.
inline std::vector<ElemId> subgroup_canonical_form(const WeylGroup& W,
                                                   const Subgroup& h) {
  std::vector<ElemId> best;
  for (ElemId w = 0; w < W.order(); ++w) {
    ElemId wi = W.inv(w);
    std::vector<ElemId> img;
    img.reserve(h.elems.size());
    for (ElemId g : h.elems) img.push_back(W.mult(W.mult(w, g), wi));
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

struct ExtendedEntry {
  std::string kind;                // subsystem | fold | dual | dual-fold
  std::string type;                // classified label
  std::vector<std::string> items;  // generator items in coefficient notation
  Subgroup group;                  // generated subgroup of W
};

// Subsystems, their simply-laced foldings, and the same data built from the
// dual system, deduplicated by conjugacy of the generated subgroup. First
// occurrence wins, in the order subsystem < fold < dual < dual-fold.
inline std::vector<ExtendedEntry> enumerate_extended_subsystems(
    const RootSystem& rs, const WeylGroup& W,
    std::size_t order_guard = kDefaultOrderGuard) {
  std::vector<ExtendedEntry> out;
  std::set<std::vector<ElemId>> seen;
  auto add = [&](ExtendedEntry e) {
    if (seen.insert(subgroup_canonical_form(W, e.group)).second)
      out.push_back(std::move(e));
  };

  std::vector<SubsystemClass> classes = enumerate_subsystems(rs, W);
  for (const auto& cl : classes) {
    ExtendedEntry e;
    e.kind = "subsystem";
    e.type = cl.type;
    for (std::size_t r : cl.J) e.items.push_back(rs.notation(r));
    e.group = subgroup_of_roots(W, cl.J, order_guard);
    add(std::move(e));
  }
  for (const auto& cl : classes) {
    if (cl.J.empty()) continue;
    Diagram d = diagram_of(rs, cl.J);
    for (const auto& rho : diagram_autos(d)) {
      bool ident = true;
      for (std::size_t i = 0; i < rho.size(); ++i) ident = ident && rho[i] == i;
      if (ident) continue;
      SteinbergDatum sd;
      try {
        sd = steinberg_fold(rs, W, cl.J, rho, order_guard);
      } catch (const UnsupportedError&) {
        continue;  // non-simply-laced orbit component
      }
      ExtendedEntry e;
      e.kind = "fold";
      e.type = compound_label(classify_diagram(diagram_of_vectors(sd.pi1)));
      for (const auto& orb : sd.orbits) e.items.push_back(render_sw_item(rs, orb));
      e.group = sd.W1;
      add(std::move(e));
    }
  }

  // the same two passes over the dual system, mapped back through the
  // generator correspondence (simple reflections match up by index)
  RootSystem dual = dual_system(rs);
  WeylGroup Wd = enumerate_group(dual, order_guard);
  auto map_elem = [&](ElemId g) { return W.apply_word(Wd.lexmin_word(g)); };
  std::vector<SubsystemClass> dclasses = enumerate_subsystems(dual, Wd);
  for (const auto& cl : dclasses) {
    ExtendedEntry e;
    e.kind = "dual";
    e.type = cl.type;
    std::vector<ElemId> gens;
    for (std::size_t r : cl.J) {
      e.items.push_back(dual.notation(r));
      gens.push_back(map_elem(Wd.reflection(r)));
    }
    e.group = generate_subgroup(W, gens, order_guard);
    add(std::move(e));
  }
  for (const auto& cl : dclasses) {
    if (cl.J.empty()) continue;
    Diagram d = diagram_of(dual, cl.J);
    for (const auto& rho : diagram_autos(d)) {
      bool ident = true;
      for (std::size_t i = 0; i < rho.size(); ++i) ident = ident && rho[i] == i;
      if (ident) continue;
      SteinbergDatum sd;
      try {
        sd = steinberg_fold(dual, Wd, cl.J, rho, order_guard);
      } catch (const UnsupportedError&) {
        continue;
      }
      ExtendedEntry e;
      e.kind = "dual-fold";
      e.type = compound_label(classify_diagram(diagram_of_vectors(sd.pi1)));
      for (const auto& orb : sd.orbits) e.items.push_back(render_sw_item(dual, orb));
      std::vector<ElemId> gens;
      for (ElemId g : sd.gens) gens.push_back(map_elem(g));
      e.group = generate_subgroup(W, gens, order_guard);
      add(std::move(e));
    }
  }
  return out;
}

}  // namespace specht

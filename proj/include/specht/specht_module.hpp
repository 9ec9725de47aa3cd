#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specht/linalg.hpp"
#include "specht/subsys.hpp"
#include "specht/tabloids.hpp"
#include "specht/weyl.hpp"

namespace specht {

// Sparse vector over the tabloid basis; zero coefficients are never stored.
template <class F>
using ModVec = std::map<std::size_t, typename F::Elem>;

template <class F>
void mv_add(const F& f, ModVec<F>& m, std::size_t t, typename F::Elem c) {
  auto it = m.find(t);
  if (it == m.end()) {
    if (!f.is_zero(c)) m.emplace(t, std::move(c));
    return;
  }
  it->second = f.add(it->second, c);
  if (f.is_zero(it->second)) m.erase(it);
}

template <class F>
bool mv_equal(const F& f, const ModVec<F>& a, const ModVec<F>& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib)
    if (ia->first != ib->first || !f.eq(ia->second, ib->second)) return false;
  return true;
}

// g acting termwise: {t} -> {g t}.
template <class F>
ModVec<F> act_vec(const F& f, const TabloidSpace& T, ElemId g, const ModVec<F>& m) {
  ModVec<F> out;
  for (const auto& [t, c] : m) mv_add(f, out, T.act(g, t), c);
  return out;
}

// Signed subgroup sum applied to a vector: sum over sigma of s(sigma) sigma m.
template <class F>
ModVec<F> kappa_apply(const F& f, const TabloidSpace& T, const Subgroup& hp,
                      const ModVec<F>& m) {
  const WeylGroup& W = *T.W;
  ModVec<F> out;
  for (ElemId s : hp.elems) {
    typename F::Elem sign = W.sign(s) > 0 ? f.one() : f.neg(f.one());
    for (const auto& [t, c] : m) mv_add(f, out, T.act(s, t), f.mul(sign, c));
  }
  return out;
}

// e = kappa applied to the base tabloid.
template <class F>
ModVec<F> polytabloid(const F& f, const TabloidSpace& T, const Subgroup& hp,
                      std::size_t base) {
  ModVec<F> m;
  m.emplace(base, f.one());
  return kappa_apply(f, T, hp, m);
}

// Smallest nonidentity element by (length, lexicographically smallest word).
inline std::optional<ElemId> smallest_nontrivial(const WeylGroup& W,
                                                 const Subgroup& h) {
  std::optional<ElemId> best;
  for (ElemId g : h.elems) {
    if (g == W.identity()) continue;
    if (!best || W.len[g] < W.len[*best] ||
        (W.len[g] == W.len[*best] && W.lexmin_word(g) < W.lexmin_word(*best)))
      best = g;
  }
  return best;
}

struct UsefulReport {
  bool intersection_trivial = true;
  bool perp_intersection_trivial = true;
  bool checked_perp = false;
  std::optional<ElemId> witness;  // nontrivial intersection element, if any

  bool useful() const { return intersection_trivial && perp_intersection_trivial; }
};

// Subsystem-pair test: both the subgroups and the subgroups of the
// orthogonal complements must intersect trivially. The two subsystems are
// required to be disjoint as root sets.
inline UsefulReport check_useful_subsystem(const RootSystem& rs,
                                           const WeylGroup& W,
                                           const std::vector<std::size_t>& J,
                                           const std::vector<std::size_t>& Jp,
                                           std::size_t order_guard = kDefaultOrderGuard) {
  std::vector<std::size_t> cj = reflection_closure(rs, J);
  std::vector<std::size_t> cp = reflection_closure(rs, Jp);
  std::set<std::size_t> cjset(cj.begin(), cj.end());
  for (std::size_t r : cp)
    if (cjset.count(r))
      throw std::invalid_argument("subsystem pair shares the root " + rs.notation(r));

  UsefulReport out;
  out.checked_perp = true;
  Subgroup hj = subgroup_of_roots(W, J, order_guard);
  Subgroup hp = subgroup_of_roots(W, Jp, order_guard);
  Subgroup inter = subgroup_intersection(hj, hp);
  out.intersection_trivial = inter.is_trivial();
  if (!out.intersection_trivial) out.witness = smallest_nontrivial(W, inter);

  Subgroup pj = subgroup_of_roots(W, orthogonal_complement(rs, cj), order_guard);
  Subgroup pp = subgroup_of_roots(W, orthogonal_complement(rs, cp), order_guard);
  Subgroup pinter = subgroup_intersection(pj, pp);
  out.perp_intersection_trivial = pinter.is_trivial();
  if (!out.witness && !out.perp_intersection_trivial)
    out.witness = smallest_nontrivial(W, pinter);
  return out;
}

// Coset-mode test: only the generated subgroups must intersect trivially.
inline UsefulReport check_useful_coset(const WeylGroup& W, const Subgroup& hj,
                                       const Subgroup& hp) {
  UsefulReport out;
  Subgroup inter = subgroup_intersection(hj, hp);
  out.intersection_trivial = inter.is_trivial();
  if (!out.intersection_trivial) out.witness = smallest_nontrivial(W, inter);
  return out;
}

struct GoodReport {
  bool good = true;
  std::optional<std::size_t> failing_tabloid;
};

// Subsystem-mode test: every distinguished representative d of W(J) whose
// image of the J-subsystem misses the J'-subsystem must contribute a
// nonzero coefficient at {dJ}.
template <class F>
GoodReport check_good_subsystem(const F& f, const RootSystem& rs,
                                const WeylGroup& W, const TabloidSpace& T,
                                const std::vector<std::size_t>& J,
                                const std::vector<std::size_t>& Jp,
                                const ModVec<F>& e) {
  std::vector<std::size_t> cj = reflection_closure(rs, J);
  std::vector<std::size_t> cp = reflection_closure(rs, Jp);
  std::set<std::size_t> cpset(cp.begin(), cp.end());
  GoodReport out;
  for (ElemId d : distinguished_reps(W, J)) {
    bool disjoint = true;
    for (std::size_t r : cj)
      if (cpset.count(W.act_root(d, r))) {
        disjoint = false;
        break;
      }
    if (!disjoint) continue;
    if (!e.count(T.of_elem(d))) {
      out.good = false;
      out.failing_tabloid = T.of_elem(d);
      return out;
    }
  }
  return out;
}

// Coset-mode test: whenever the signed subgroup sum of a single tabloid is
// nonzero, that tabloid must appear in e.
template <class F>
GoodReport check_good_coset(const F& f, const TabloidSpace& T,
                            const Subgroup& hp, const ModVec<F>& e) {
  GoodReport out;
  for (std::size_t t = 0; t < T.size(); ++t) {
    ModVec<F> single;
    single.emplace(t, f.one());
    if (kappa_apply(f, T, hp, single).empty()) continue;
    if (!e.count(t)) {
      out.good = false;
      out.failing_tabloid = t;
      return out;
    }
  }
  return out;
}

template <class F>
struct SpechtModule {
  const TabloidSpace* T = nullptr;
  std::vector<ModVec<F>> spanning;  // translates of e, construction order
  std::vector<std::vector<typename F::Elem>> basis;  // reduced echelon rows
  std::vector<std::size_t> pivots;                   // pivot column per row
  std::size_t dim = 0;
};

// Module spanned by {w e : w in spanning_elems}. The reduced echelon form
// of the span is unique, so the basis does not depend on the order of the
// spanning set.
template <class F>
SpechtModule<F> build_specht_module(const F& f, const TabloidSpace& T,
                                    const Subgroup& hp,
                                    const std::vector<ElemId>& spanning_elems) {
  SpechtModule<F> S;
  S.T = &T;
  ModVec<F> e = polytabloid(f, T, hp, T.of_elem(T.W->identity()));
  for (ElemId w : spanning_elems) S.spanning.push_back(act_vec(f, T, w, e));

  Matrix<typename F::Elem> m(S.spanning.size(), T.size(), f.zero());
  for (std::size_t i = 0; i < S.spanning.size(); ++i)
    for (const auto& [t, c] : S.spanning[i]) m.at(i, t) = c;
  Echelon<F> ech = row_echelon(f, std::move(m));
  S.dim = ech.rank;
  S.pivots = ech.pivots;
  for (std::size_t r = 0; r < ech.rank; ++r) {
    std::vector<typename F::Elem> row(T.size(), f.zero());
    for (std::size_t c = 0; c < T.size(); ++c) row[c] = ech.mat.at(r, c);
    S.basis.push_back(std::move(row));
  }
  return S;
}

// Spanning elements for the two modes: distinguished representatives of the
// J'-subsystem, or canonical coset representatives of the J'-subgroup.
inline std::vector<ElemId> spanning_reps_subsystem(const WeylGroup& W,
                                                   const std::vector<std::size_t>& Jp) {
  return distinguished_reps(W, Jp);
}

inline std::vector<ElemId> spanning_reps_coset(const WeylGroup& W,
                                               const Subgroup& hp) {
  std::set<ElemId> canon;
  for (ElemId g = 0; g < W.order(); ++g) canon.insert(coset_canonicalize(W, hp, g));
  std::vector<ElemId> out(canon.begin(), canon.end());
  std::sort(out.begin(), out.end(), [&](ElemId a, ElemId b) {
    if (W.len[a] != W.len[b]) return W.len[a] < W.len[b];
    return W.lexmin_word(a) < W.lexmin_word(b);
  });
  return out;
}

// Coordinates of a vector over the reduced-echelon basis; exact residual
// check. A failure means the span is not preserved, which is a fault in the
// construction, not in the input.
template <class F>
std::vector<typename F::Elem> coords_over_basis(const F& f,
                                                const SpechtModule<F>& S,
                                                const ModVec<F>& v) {
  std::vector<typename F::Elem> c(S.dim, f.zero());
  for (std::size_t r = 0; r < S.dim; ++r) {
    auto it = v.find(S.pivots[r]);
    if (it != v.end()) c[r] = it->second;
  }
  ModVec<F> residual = v;
  for (std::size_t r = 0; r < S.dim; ++r)
    for (std::size_t t = 0; t < S.basis[r].size(); ++t)
      if (!f.is_zero(S.basis[r][t]))
        mv_add(f, residual, t, f.neg(f.mul(c[r], S.basis[r][t])));
  if (!residual.empty())
    throw std::logic_error("group action does not preserve the module span");
  return c;
}

// Matrix of g on the reduced basis; column j holds the coordinates of the
// image of basis vector j.
template <class F>
Matrix<typename F::Elem> action_on_basis(const F& f, const SpechtModule<F>& S,
                                         ElemId g) {
  Matrix<typename F::Elem> m(S.dim, S.dim, f.zero());
  for (std::size_t j = 0; j < S.dim; ++j) {
    ModVec<F> bj;
    for (std::size_t t = 0; t < S.basis[j].size(); ++t)
      if (!f.is_zero(S.basis[j][t])) bj.emplace(t, S.basis[j][t]);
    std::vector<typename F::Elem> c = coords_over_basis(f, S, act_vec(f, *S.T, g, bj));
    for (std::size_t i = 0; i < S.dim; ++i) m.at(i, j) = c[i];
  }
  return m;
}

// Matrix of g on an explicitly chosen independent spanning list; column j
// holds the coordinates of the image of the j-th vector over the list.
template <class F>
Matrix<typename F::Elem> action_on_vectors(const F& f, const TabloidSpace& T,
                                           const std::vector<ModVec<F>>& vecs,
                                           ElemId g) {
  Matrix<typename F::Elem> cols(T.size(), vecs.size(), f.zero());
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (const auto& [t, c] : vecs[j]) cols.at(t, j) = c;
  Matrix<typename F::Elem> m(vecs.size(), vecs.size(), f.zero());
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    ModVec<F> img = act_vec(f, T, g, vecs[j]);
    std::vector<typename F::Elem> rhs(T.size(), f.zero());
    for (const auto& [t, c] : img) rhs[t] = c;
    auto c = solve(f, cols, rhs);
    if (!c) throw std::logic_error("group action does not preserve the chosen span");
    for (std::size_t i = 0; i < vecs.size(); ++i) m.at(i, j) = (*c)[i];
  }
  return m;
}

// Character on a list of class representatives: trace of each action.
template <class F>
std::vector<typename F::Elem> character_values(const F& f, const SpechtModule<F>& S,
                                               const std::vector<ElemId>& class_reps) {
  std::vector<typename F::Elem> out;
  for (ElemId g : class_reps) {
    Matrix<typename F::Elem> m = action_on_basis(f, S, g);
    typename F::Elem tr = f.zero();
    for (std::size_t i = 0; i < S.dim; ++i) tr = f.add(tr, m.at(i, i));
    out.push_back(tr);
  }
  return out;
}

// Character of the layer between two nested modules over the same tabloid
// space: the subgroup of the first dual datum must lie inside the second,
// which makes the second module a submodule of the first. Both pairs are
// expected to be useful. Characters are rational regardless of the module
// field, so this works over the rationals only.
inline std::vector<Rational> specht_series_quotient(
    const TabloidSpace& T, const Subgroup& hp_small,
    const std::vector<ElemId>& span_small, const Subgroup& hp_big,
    const std::vector<ElemId>& span_big,
    const std::vector<ElemId>& class_reps) {
  if (!subgroup_subset(hp_small, hp_big))
    throw std::invalid_argument(
        "series: the first dual subgroup must lie inside the second");
  Rationals f;
  SpechtModule<Rationals> s1 = build_specht_module(f, T, hp_small, span_small);
  SpechtModule<Rationals> s2 = build_specht_module(f, T, hp_big, span_big);
  std::vector<Rational> c1 = character_values(f, s1, class_reps);
  std::vector<Rational> c2 = character_values(f, s2, class_reps);
  for (std::size_t k = 0; k < c1.size(); ++k) c1[k] = c1[k] - c2[k];
  return c1;
}

// Tabloids are orthonormal for the bilinear form.
template <class F>
typename F::Elem bilinear_form(const F& f, const ModVec<F>& a, const ModVec<F>& b) {
  typename F::Elem out = f.zero();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else {
      out = f.add(out, f.mul(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Radical of the form restricted to the module: kernel of the Gram matrix
// of the basis. The quotient by the radical is what carries the
// irreducible when the field has positive characteristic.
struct RadicalReport {
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t quotient_dim = 0;
};

template <class F>
RadicalReport radical_and_quotient(const F& f, const SpechtModule<F>& S) {
  Matrix<typename F::Elem> gram(S.dim, S.dim, f.zero());
  for (std::size_t i = 0; i < S.dim; ++i)
    for (std::size_t j = 0; j < S.dim; ++j) {
      typename F::Elem v = f.zero();
      for (std::size_t t = 0; t < S.basis[i].size(); ++t)
        v = f.add(v, f.mul(S.basis[i][t], S.basis[j][t]));
      gram.at(i, j) = v;
    }
  RadicalReport out;
  out.dim = S.dim;
  out.radical_dim = kernel(f, gram).size();
  out.quotient_dim = out.dim - out.radical_dim;
  return out;
}

// First good partner of J in the fixed search order: subsystem classes by
// increasing size, their positively-chosen simple systems realized inside
// the complement of the J-subsystem, candidates by lexicographic order.
inline std::optional<std::vector<std::size_t>> find_good_partner(
    const RootSystem& rs, const WeylGroup& W, const std::vector<std::size_t>& J,
    std::size_t order_guard = kDefaultOrderGuard) {
  std::vector<std::size_t> cj = reflection_closure(rs, J);
  std::set<std::size_t> cjset(cj.begin(), cj.end());
  Subgroup hj = subgroup_of_roots(W, J, order_guard);
  TabloidSpace T = tabloid_space(W, hj);
  Rationals q;

  std::vector<SubsystemClass> classes = enumerate_subsystems(rs, W);
  std::sort(classes.begin(), classes.end(),
            [](const SubsystemClass& a, const SubsystemClass& b) {
              return a.canonical_roots.size() < b.canonical_roots.size();
            });
  for (const auto& cl : classes) {
    std::set<std::vector<std::size_t>> candidates;
    for (ElemId g = 0; g < W.order(); ++g) {
      bool inside = true;
      std::vector<std::size_t> img;
      for (std::size_t r : cl.canonical_roots) {
        std::size_t ir = W.act_root(g, r);
        if (cjset.count(ir)) {
          inside = false;
          break;
        }
        img.push_back(ir);
      }
      if (inside) candidates.insert(simple_system_in_positive(rs, img));
    }
    for (const auto& Jp : candidates) {
      UsefulReport u = check_useful_subsystem(rs, W, J, Jp, order_guard);
      if (!u.useful()) continue;
      Subgroup hp = subgroup_of_roots(W, Jp, order_guard);
      ModVec<Rationals> e = polytabloid(q, T, hp, T.of_elem(W.identity()));
      if (check_good_subsystem(q, rs, W, T, J, Jp, e).good) return Jp;
    }
  }
  return std::nullopt;
}

}  // namespace specht

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "specht/linalg.hpp"
#include "specht/root_system.hpp"

namespace specht {

// Raised when a group or subgroup enumeration would exceed the element cap.
struct OrderGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultOrderGuard = 2000;

using Perm = std::vector<std::uint8_t>;  // image of each root index
using ElemId = std::uint32_t;

// The full Weyl group, enumerated breadth-first from the simple reflections.
// Elements are permutations of the fixed root indexing; element 0 is the
// identity. Words apply rightmost letter first: the word [i1,...,ik] is the
// product s_{i1} ... s_{ik} acting as v -> s_{i1}(...(s_{ik}(v))).
class WeylGroup {
 public:
  const RootSystem* rs = nullptr;
  std::vector<Perm> elems;
  std::vector<std::uint16_t> len;  // inversion count == BFS level

  std::size_t order() const { return elems.size(); }
  std::size_t num_gens() const { return rs->rank; }

  ElemId identity() const { return 0; }

  // id of the simple reflection s_i (0-based generator index)
  ElemId gen(std::size_t i) const { return gen_ids_[i]; }

  // id of the reflection in an arbitrary root
  ElemId reflection(std::size_t root) const {
    return id_of(Perm(rs->refl[root].begin(), rs->refl[root].end()));
  }

  ElemId id_of(const Perm& p) const {
    auto it = index_.find(key(p));
    if (it == index_.end()) throw std::logic_error("permutation not in group");
    return it->second;
  }

  // apply b first, then a
  ElemId mult(ElemId a, ElemId b) const {
    const Perm& pa = elems[a];
    const Perm& pb = elems[b];
    Perm c(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) c[i] = pa[pb[i]];
    return id_of(c);
  }

  ElemId inv(ElemId a) const {
    const Perm& pa = elems[a];
    Perm c(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) c[pa[i]] = static_cast<std::uint8_t>(i);
    return id_of(c);
  }

  ElemId apply_word(const std::vector<int>& word_1based) const {
    ElemId g = identity();
    for (int i : word_1based) {
      if (i < 1 || static_cast<std::size_t>(i) > num_gens())
        throw std::invalid_argument("word letter out of range");
      g = mult(g, gen(static_cast<std::size_t>(i - 1)));
    }
    return g;
  }

  int length(ElemId a) const { return len[a]; }
  int sign(ElemId a) const { return len[a] % 2 == 0 ? 1 : -1; }

  std::size_t act_root(ElemId a, std::size_t root) const {
    return elems[a][root];
  }

  // Lexicographically smallest reduced word, 1-based generator indices.
  // Built left to right by always taking the smallest left descent.
  std::vector<int> lexmin_word(ElemId a) const {
    std::vector<int> w;
    ElemId g = a;
    while (g != identity()) {
      bool moved = false;
      for (std::size_t i = 0; i < num_gens(); ++i) {
        ElemId h = mult(gen(i), g);
        if (len[h] < len[g]) {
          w.push_back(static_cast<int>(i + 1));
          g = h;
          moved = true;
          break;
        }
      }
      if (!moved) throw std::logic_error("no descent on a nonidentity element");
    }
    return w;
  }

  static std::string word_str(const std::vector<int>& w) {
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) s += " ";
      s += "t" + std::to_string(w[k]);
    }
    return s;
  }

  // Order of the element as an abstract group element.
  int element_order(ElemId a) const {
    int n = 1;
    ElemId g = a;
    while (g != identity()) {
      g = mult(g, a);
      ++n;
    }
    return n;
  }

  // Matrix of the element's linear action in simple-root coordinates;
  // column j holds the coordinates of the image of simple root j.
  Matrix<Rational> action_matrix(ElemId a) const {
    std::size_t r = rs->rank;
    Matrix<Rational> m(r, r, Rational(0));
    for (std::size_t j = 0; j < r; ++j) {
      std::size_t img = elems[a][j_simple_[j]];
      std::size_t pos = img < rs->n_pos ? img : rs->neg(img);
      long long s = img < rs->n_pos ? 1 : -1;
      for (std::size_t i = 0; i < r; ++i)
        m.at(i, j) = Rational(s * rs->coords[pos][i]);
    }
    return m;
  }

  friend WeylGroup enumerate_group(const RootSystem& rs, std::size_t order_guard);

 private:
  static std::string key(const Perm& p) {
    return std::string(p.begin(), p.end());
  }

  std::unordered_map<std::string, ElemId> index_;
  std::vector<ElemId> gen_ids_;
  std::vector<std::size_t> j_simple_;  // root index of each simple root
};

inline WeylGroup enumerate_group(const RootSystem& rs,
                                 std::size_t order_guard = kDefaultOrderGuard) {
  WeylGroup w;
  w.rs = &rs;

  std::vector<Perm> gens;
  w.j_simple_.resize(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) {
    std::vector<long long> unit(rs.rank, 0);
    unit[i] = 1;
    std::size_t root = rs.index_of(unit);
    w.j_simple_[i] = root;
    gens.emplace_back(rs.refl[root].begin(), rs.refl[root].end());
  }

  Perm id(rs.size());
  std::iota(id.begin(), id.end(), 0);
  w.elems.push_back(id);
  w.len.push_back(0);
  w.index_[WeylGroup::key(id)] = 0;

  auto inversions = [&rs](const Perm& p) {
    std::uint16_t n = 0;
    for (std::size_t i = 0; i < rs.n_pos; ++i)
      if (p[i] >= rs.n_pos) ++n;
    return n;
  };

  // breadth-first closure under left multiplication by the generators
  for (std::size_t head = 0; head < w.elems.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) next[i] = g[w.elems[head][i]];
      std::string k = WeylGroup::key(next);
      if (w.index_.count(k)) continue;
      if (w.elems.size() >= order_guard)
        throw OrderGuardError("group order exceeds guard of " +
                              std::to_string(order_guard));
      std::uint16_t inv = inversions(next);
      if (inv != w.len[head] + 1)
        throw std::logic_error("BFS level disagrees with inversion count");
      w.index_[k] = static_cast<ElemId>(w.elems.size());
      w.elems.push_back(std::move(next));
      w.len.push_back(inv);
    }
  }

  w.gen_ids_.resize(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) w.gen_ids_[i] = w.id_of(gens[i]);
  return w;
}

// A subgroup given by its full sorted element list.
struct Subgroup {
  const WeylGroup* W = nullptr;
  std::vector<ElemId> gens;
  std::vector<ElemId> elems;  // sorted

  std::size_t order() const { return elems.size(); }
  bool contains(ElemId g) const {
    return std::binary_search(elems.begin(), elems.end(), g);
  }
  bool is_trivial() const { return elems.size() == 1; }
};

inline Subgroup generate_subgroup(const WeylGroup& W, std::vector<ElemId> gens,
                                  std::size_t order_guard = kDefaultOrderGuard) {
  Subgroup h;
  h.W = &W;
  h.gens = gens;
  std::vector<bool> seen(W.order(), false);
  std::vector<ElemId> work{W.identity()};
  seen[W.identity()] = true;
  std::vector<ElemId> out{W.identity()};
  while (!work.empty()) {
    ElemId g = work.back();
    work.pop_back();
    for (ElemId s : gens) {
      ElemId n = W.mult(s, g);
      if (!seen[n]) {
        if (out.size() >= order_guard)
          throw OrderGuardError("subgroup order exceeds guard");
        seen[n] = true;
        out.push_back(n);
        work.push_back(n);
      }
    }
  }
  std::sort(out.begin(), out.end());
  h.elems = std::move(out);
  return h;
}

// Reflection subgroup W(J) generated by the reflections in the given roots.
inline Subgroup subgroup_of_roots(const WeylGroup& W,
                                  const std::vector<std::size_t>& roots,
                                  std::size_t order_guard = kDefaultOrderGuard) {
  std::vector<ElemId> gens;
  for (std::size_t r : roots) gens.push_back(W.reflection(r));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generate_subgroup(W, gens, order_guard);
}

inline Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  out.W = a.W;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(),
                        b.elems.end(), std::back_inserter(out.elems));
  return out;
}

inline bool subgroup_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elems.begin(), b.elems.end(), a.elems.begin(),
                       a.elems.end());
}

// Conjugate subgroup w H w^{-1}.
inline Subgroup conjugate_subgroup(const WeylGroup& W, const Subgroup& h,
                                   ElemId w) {
  Subgroup out;
  out.W = &W;
  ElemId wi = W.inv(w);
  for (ElemId g : h.elems) out.elems.push_back(W.mult(W.mult(w, g), wi));
  for (ElemId g : h.gens) out.gens.push_back(W.mult(W.mult(w, g), wi));
  std::sort(out.elems.begin(), out.elems.end());
  return out;
}

// Distinguished left-coset representatives of W(J): the elements mapping
// every root of J into the positive system. Sorted by (length, smallest
// reduced word); the minimal-length representative in each coset is unique.
inline std::vector<ElemId> distinguished_reps(
    const WeylGroup& W, const std::vector<std::size_t>& J) {
  for (std::size_t r : J)
    if (!W.rs->is_positive(r))
      throw std::invalid_argument("distinguished_reps: J must lie in the positive system");
  std::vector<ElemId> out;
  for (ElemId g = 0; g < W.order(); ++g) {
    bool ok = true;
    for (std::size_t r : J)
      if (!W.rs->is_positive(W.act_root(g, r))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [&](ElemId a, ElemId b) {
    if (W.len[a] != W.len[b]) return W.len[a] < W.len[b];
    return W.lexmin_word(a) < W.lexmin_word(b);
  });
  return out;
}

// Canonical representative of the left coset w H: minimal length, ties
// broken by lexicographically smallest permutation image.
inline ElemId coset_canonicalize(const WeylGroup& W, const Subgroup& h,
                                 ElemId w) {
  ElemId best = W.mult(w, h.elems[0]);
  for (std::size_t k = 1; k < h.elems.size(); ++k) {
    ElemId c = W.mult(w, h.elems[k]);
    if (W.len[c] < W.len[best] ||
        (W.len[c] == W.len[best] && W.elems[c] < W.elems[best]))
      best = c;
  }
  return best;
}

struct ConjClasses {
  std::vector<ElemId> reps;                  // smallest element id per class
  std::vector<std::vector<ElemId>> members;  // sorted
  std::vector<std::size_t> sizes;

  // class index of an element, or throws
  std::size_t class_of(ElemId g) const {
    for (std::size_t c = 0; c < members.size(); ++c)
      if (std::binary_search(members[c].begin(), members[c].end(), g)) return c;
    throw std::logic_error("element in no conjugacy class");
  }
};

inline ConjClasses conjugacy_classes(const WeylGroup& W) {
  ConjClasses out;
  std::vector<bool> seen(W.order(), false);
  for (ElemId g = 0; g < W.order(); ++g) {
    if (seen[g]) continue;
    std::vector<ElemId> orbit{g};
    seen[g] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (std::size_t i = 0; i < W.num_gens(); ++i) {
        ElemId s = W.gen(i);
        ElemId c = W.mult(W.mult(s, orbit[k]), s);  // s g s, s an involution
        if (!seen[c]) {
          seen[c] = true;
          orbit.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.reps.push_back(orbit.front());
    out.sizes.push_back(orbit.size());
    out.members.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace specht

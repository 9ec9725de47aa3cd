#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "specht/weyl.hpp"

namespace specht {

// Left cosets of a subgroup, indexed by canonical representative (minimal
// length, ties by smallest permutation image). Listing order is by
// (representative length, lexicographically smallest reduced word).
struct TabloidSpace {
  const WeylGroup* W = nullptr;
  Subgroup H;
  std::vector<ElemId> reps;              // canonical rep per tabloid
  std::vector<std::size_t> elem_to_tab;  // element id -> tabloid index

  std::size_t size() const { return reps.size(); }

  std::size_t of_elem(ElemId g) const { return elem_to_tab[g]; }

  // tabloid containing g * rep(t)
  std::size_t act(ElemId g, std::size_t t) const {
    return elem_to_tab[W->mult(g, reps[t])];
  }
};

inline TabloidSpace tabloid_space(const WeylGroup& W, Subgroup h) {
  TabloidSpace T;
  T.W = &W;
  std::vector<ElemId> canon(W.order());
  std::map<ElemId, std::size_t> index;
  for (ElemId g = 0; g < W.order(); ++g) {
    canon[g] = coset_canonicalize(W, h, g);
    index.emplace(canon[g], 0);
  }
  std::vector<ElemId> reps;
  for (const auto& [r, _] : index) reps.push_back(r);
  std::sort(reps.begin(), reps.end(), [&](ElemId a, ElemId b) {
    if (W.len[a] != W.len[b]) return W.len[a] < W.len[b];
    return W.lexmin_word(a) < W.lexmin_word(b);
  });
  for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = i;
  T.reps = std::move(reps);
  T.elem_to_tab.resize(W.order());
  for (ElemId g = 0; g < W.order(); ++g) T.elem_to_tab[g] = index[canon[g]];
  T.H = std::move(h);
  return T;
}

// Transported root tuple of a tabloid: the images of the stored J and J'
// lists under the representative, signs kept, order kept.
// Rendered "{w r1,...,w rk; w r1',...,w rs'}".
inline std::string render_tabloid_tuple(const RootSystem& rs, const WeylGroup& W,
                                        ElemId rep,
                                        const std::vector<std::size_t>& J,
                                        const std::vector<std::size_t>& Jp) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) s += ",";
    s += rs.notation(W.act_root(rep, J[i]));
  }
  s += ";";
  for (std::size_t i = 0; i < Jp.size(); ++i) {
    if (i) s += ",";
    s += rs.notation(W.act_root(rep, Jp[i]));
  }
  return s + "}";
}

}  // namespace specht

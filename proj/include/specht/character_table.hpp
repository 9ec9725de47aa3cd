#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specht/rational.hpp"
#include "specht/weyl.hpp"

namespace specht {

struct CharacterTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> class_words;  // 1-based generator words
  std::vector<long long> sizes;               // filled by class_sizes
  std::vector<std::vector<long long>> rows;   // one row per name
};

// The 13 x 13 table for the rank-4 system with the branch node, as literal
// data. Class representatives are reduced words in the generators.
inline CharacterTable d4_table() {
  CharacterTable t;
  for (int i = 1; i <= 13; ++i) t.names.push_back("chi" + std::to_string(i));
  t.class_words = {
      {},
      {2},
      {1, 2},
      {1, 3, 2},
      {1, 2, 1, 3, 2, 1},
      {1, 4, 2},
      {1, 2, 1, 4, 2, 1},
      {3, 4, 2},
      {2, 3, 2, 4, 2, 3},
      {1, 3, 4, 2},
      {1, 2, 1, 3, 2, 1, 4, 2, 1, 3, 2, 4},
      {2, 1, 3, 4, 2},
      {2, 1, 4, 2, 1, 3},
  };
  t.rows = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, -1, 1, -1, 1, -1, 1, -1, 1, 1, 1, -1, 1},
      {2, 0, -1, 0, 2, 0, 2, 0, 2, -1, 2, 0, 2},
      {3, 1, 0, 1, 3, -1, -1, -1, -1, 0, 3, 1, -1},
      {3, 1, 0, -1, -1, -1, -1, 1, 3, 0, 3, 1, -1},
      {3, -1, 0, -1, 3, 1, -1, 1, -1, 0, 3, -1, -1},
      {3, -1, 0, 1, -1, 1, -1, -1, 3, 0, 3, -1, -1},
      {3, -1, 0, 1, -1, -1, 3, 1, -1, 0, 3, -1, -1},
      {3, 1, 0, -1, -1, 1, 3, -1, -1, 0, 3, 1, -1},
      {4, -2, 1, 0, 0, 0, 0, 0, 0, -1, -4, 2, 0},
      {4, 2, 1, 0, 0, 0, 0, 0, 0, -1, -4, -2, 0},
      {6, 0, 0, 0, -2, 0, -2, 0, -2, 0, 6, 0, 2},
      {8, 0, -1, 0, 0, 0, 0, 0, 0, 1, -8, 0, 0},
  };
  return t;
}

inline std::vector<ElemId> class_rep_elems(const WeylGroup& W,
                                           const CharacterTable& t) {
  std::vector<ElemId> out;
  for (const auto& w : t.class_words) out.push_back(W.apply_word(w));
  return out;
}

// Conjugation orbit sizes of the representatives. The reps must lie in
// pairwise distinct classes and cover the group.
inline std::vector<long long> class_sizes(const WeylGroup& W,
                                          const std::vector<ElemId>& reps) {
  ConjClasses cc = conjugacy_classes(W);
  std::vector<long long> out;
  std::vector<bool> hit(cc.members.size(), false);
  for (ElemId r : reps) {
    std::size_t c = cc.class_of(r);
    if (hit[c])
      throw std::invalid_argument("two representatives share a conjugacy class");
    hit[c] = true;
    out.push_back(static_cast<long long>(cc.sizes[c]));
  }
  return out;
}

// Row orthogonality and the degree-sum identity; throws on any failure.
// This is the transcription guard for the literal table.
inline void table_self_check(const CharacterTable& t, std::size_t group_order) {
  long long n = static_cast<long long>(group_order);
  if (t.sizes.size() != t.class_words.size())
    throw std::logic_error("table self-check needs attached class sizes");
  long long total = 0;
  for (long long s : t.sizes) total += s;
  if (total != n) throw std::logic_error("class sizes do not sum to the group order");
  long long deg2 = 0;
  for (const auto& row : t.rows) deg2 += row[0] * row[0];
  if (deg2 != n) throw std::logic_error("squared degrees do not sum to the group order");
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = i; j < t.rows.size(); ++j) {
      long long dot = 0;
      for (std::size_t c = 0; c < t.sizes.size(); ++c)
        dot += t.sizes[c] * t.rows[i][c] * t.rows[j][c];
      if (dot != (i == j ? n : 0))
        throw std::logic_error("row orthogonality fails for " + t.names[i] + "/" +
                               t.names[j]);
    }
}

struct Identification {
  std::optional<std::string> exact;            // label when the row matches
  std::map<std::string, long long> decomposition;  // multiplicities otherwise

  std::string str() const {
    if (exact) return *exact;
    std::string s;
    for (const auto& [name, m] : decomposition) {
      if (!s.empty()) s += "+";
      if (m != 1) s += std::to_string(m) + "*";
      s += name;
    }
    return s.empty() ? "0" : s;
  }
};

// Exact row match, else multiplicities by inner product. Non-integral or
// negative multiplicities mean the input is not a character of the group,
// which signals a computation fault.
inline Identification identify(const CharacterTable& t, std::size_t group_order,
                               const std::vector<Rational>& psi) {
  if (psi.size() != t.class_words.size())
    throw std::invalid_argument("character row has the wrong number of classes");
  Identification out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    bool same = true;
    for (std::size_t c = 0; c < psi.size() && same; ++c)
      same = psi[c] == Rational(t.rows[i][c]);
    if (same) {
      out.exact = t.names[i];
      return out;
    }
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Rational m(0);
    for (std::size_t c = 0; c < psi.size(); ++c)
      m += Rational(t.sizes[c]) * psi[c] * Rational(t.rows[i][c]);
    m = m / Rational(static_cast<long long>(group_order));
    long long mi;
    try {
      mi = m.to_int();
    } catch (const std::exception&) {
      throw std::logic_error("non-integral multiplicity of " + t.names[i]);
    }
    if (mi < 0) throw std::logic_error("negative multiplicity of " + t.names[i]);
    if (mi != 0) out.decomposition.emplace(t.names[i], mi);
  }
  return out;
}

}  // namespace specht

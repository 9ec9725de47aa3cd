#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "specht/linalg.hpp"
#include "specht/rational.hpp"

namespace specht {

// Raised for labels, notation strings, or vectors outside the supported set.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// v - (2(v,r)/(r,r)) r
inline Vec reflect_vec(const Vec& r, const Vec& v) {
  Rational rr = dot(r, r);
  if (rr.is_zero()) throw std::invalid_argument("reflect: zero root");
  Rational c = Rational(2) * dot(v, r) / rr;
  Vec out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * r[i];
  return out;
}

// A crystallographic root system, fully enumerated and indexed.
//
// Root indexing: positive roots first, sorted by (height, lexicographic
// simple coordinates); root i + n_pos is the negative of root i. Group
// elements elsewhere are permutations of this fixed indexing.
class RootSystem {
 public:
  std::string label;
  std::size_t rank = 0;
  std::size_t dim = 0;               // ambient dimension
  std::vector<Vec> simple;           // simple system, size rank
  std::vector<Vec> roots;            // ambient coordinates, size 2 * n_pos
  std::vector<std::vector<long long>> coords;  // simple coordinates per root
  std::vector<long long> height;     // sum of simple coordinates
  std::size_t n_pos = 0;
  // refl[r][i] = index of the image of root i under the reflection in root r
  std::vector<std::vector<std::uint8_t>> refl;

  std::size_t size() const { return roots.size(); }
  std::size_t neg(std::size_t i) const {
    return i < n_pos ? i + n_pos : i - n_pos;
  }
  bool is_positive(std::size_t i) const { return i < n_pos; }

  Rational inner(std::size_t i, std::size_t j) const {
    return dot(roots[i], roots[j]);
  }

  std::size_t index_of(const std::vector<long long>& simple_coords) const {
    auto it = index_.find(simple_coords);
    if (it == index_.end())
      throw UnsupportedError("vector is not a root of " + label);
    return it->second;
  }

  bool has_coords(const std::vector<long long>& simple_coords) const {
    return index_.find(simple_coords) != index_.end();
  }

  // "a1a2...an" with a leading "-" applying to the whole string.
  std::string notation(std::size_t i) const {
    bool negative = !is_positive(i);
    std::size_t p = negative ? neg(i) : i;
    std::string s = negative ? "-" : "";
    for (long long a : coords[p]) s += static_cast<char>('0' + a);
    return s;
  }

  std::size_t from_notation(const std::string& text) const {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-')) {
      negative = true;
      s = s.substr(1);
    }
    if (s.size() != rank)
      throw UnsupportedError("notation '" + text + "' must have " +
                             std::to_string(rank) + " digits");
    std::vector<long long> c(rank);
    for (std::size_t k = 0; k < rank; ++k) {
      if (s[k] < '0' || s[k] > '9')
        throw UnsupportedError("notation '" + text + "' has a non-digit");
      c[k] = s[k] - '0';
    }
    if (negative)
      for (auto& x : c) x = -x;
    return index_of(c);
  }

  // Order used when printing simple systems and building transported root
  // tuples: position of the leading nonzero coordinate, then height, then
  // lexicographic coordinates.
  std::vector<std::size_t> display_sorted(std::vector<std::size_t> idx) const {
    auto key = [this](std::size_t i) {
      std::size_t lead = 0;
      while (lead < rank && coords[i][lead] == 0) ++lead;
      return std::make_tuple(lead, height[i], coords[i]);
    };
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    return idx;
  }

  friend RootSystem build_root_system_from_simple(const std::string& label,
                                                  std::vector<Vec> simple_system);

 private:
  std::map<std::vector<long long>, std::size_t> index_;
};

namespace detail {

inline std::vector<Vec> simple_system_for(const std::string& label,
                                          std::size_t& dim) {
  auto e = [&](std::size_t i, std::size_t n) {
    Vec v(n, Rational(0));
    v[i] = Rational(1);
    return v;
  };
  auto diff = [&](std::size_t i, std::size_t n) {
    Vec v(n, Rational(0));
    v[i] = Rational(1);
    v[i + 1] = Rational(-1);
    return v;
  };
  if (label.size() != 2) throw UnsupportedError("unsupported label: " + label);
  char family = label[0];
  if (label[1] < '1' || label[1] > '9')
    throw UnsupportedError("unsupported label: " + label);
  std::size_t l = static_cast<std::size_t>(label[1] - '0');
  std::vector<Vec> pi;
  switch (family) {
    case 'A': {
      if (l < 1 || l > 4) throw UnsupportedError("unsupported label: " + label);
      dim = l + 1;
      for (std::size_t i = 0; i < l; ++i) pi.push_back(diff(i, dim));
      return pi;
    }
    case 'B': {
      if (l < 2 || l > 4) throw UnsupportedError("unsupported label: " + label);
      dim = l;
      for (std::size_t i = 0; i + 1 < l; ++i) pi.push_back(diff(i, dim));
      pi.push_back(e(l - 1, dim));
      return pi;
    }
    case 'C': {
      if (l < 3 || l > 4) throw UnsupportedError("unsupported label: " + label);
      dim = l;
      for (std::size_t i = 0; i + 1 < l; ++i) pi.push_back(diff(i, dim));
      Vec v(dim, Rational(0));
      v[l - 1] = Rational(2);
      pi.push_back(v);
      return pi;
    }
    case 'D': {
      if (l != 4) throw UnsupportedError("unsupported label: " + label);
      dim = 4;
      pi.push_back(diff(0, dim));
      pi.push_back(diff(1, dim));
      pi.push_back(diff(2, dim));
      Vec v(dim, Rational(0));
      v[2] = Rational(1);
      v[3] = Rational(1);
      pi.push_back(v);
      return pi;
    }
    case 'G': {
      if (l != 2) throw UnsupportedError("unsupported label: " + label);
      dim = 3;
      pi.push_back(diff(0, dim));
      Vec v(dim, Rational(0));
      v[0] = Rational(-2);
      v[1] = Rational(1);
      v[2] = Rational(1);
      pi.push_back(v);
      return pi;
    }
    case 'F': {
      if (l != 4) throw UnsupportedError("unsupported label: " + label);
      dim = 4;
      Vec a1(dim, Rational(0)), a2(dim, Rational(0)), a3(dim, Rational(0)),
          a4(dim, Rational(0));
      a1[1] = Rational(1);
      a1[2] = Rational(-1);
      a2[2] = Rational(1);
      a2[3] = Rational(-1);
      a3[3] = Rational(1);
      a4[0] = Rational(1, 2);
      a4[1] = Rational(-1, 2);
      a4[2] = Rational(-1, 2);
      a4[3] = Rational(-1, 2);
      return {a1, a2, a3, a4};
    }
    default:
      throw UnsupportedError("unsupported label: " + label);
  }
}

}  // namespace detail

inline RootSystem build_root_system_from_simple(const std::string& label,
                                                std::vector<Vec> simple_system) {
  RootSystem rs;
  rs.label = label;
  rs.simple = std::move(simple_system);
  rs.rank = rs.simple.size();
  rs.dim = rs.simple.at(0).size();

  // Cartan integers c[j][s] = 2 (a_j, a_s) / (a_s, a_s); closure is run in
  // simple-coordinate space, where every root stays integral.
  std::vector<std::vector<long long>> cartan(rs.rank,
                                             std::vector<long long>(rs.rank));
  for (std::size_t j = 0; j < rs.rank; ++j)
    for (std::size_t s = 0; s < rs.rank; ++s)
      cartan[j][s] = (Rational(2) * dot(rs.simple[j], rs.simple[s]) /
                      dot(rs.simple[s], rs.simple[s]))
                         .to_int();

  std::map<std::vector<long long>, bool> seen;
  std::vector<std::vector<long long>> work;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    std::vector<long long> unit(rs.rank, 0);
    unit[i] = 1;
    seen[unit] = true;
    work.push_back(unit);
  }
  while (!work.empty()) {
    std::vector<long long> v = work.back();
    work.pop_back();
    for (std::size_t s = 0; s < rs.rank; ++s) {
      long long n = 0;
      for (std::size_t j = 0; j < rs.rank; ++j) n += v[j] * cartan[j][s];
      std::vector<long long> w = v;
      w[s] -= n;
      if (!seen.count(w)) {
        seen[w] = true;
        work.push_back(w);
      }
    }
  }

  std::vector<std::vector<long long>> pos;
  for (const auto& [c, _] : seen) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](long long x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw std::logic_error("closure produced a mixed-sign root");
    if (nonneg) pos.push_back(c);
  }
  if (pos.size() * 2 != seen.size())
    throw std::logic_error("closure is not symmetric under negation");

  std::sort(pos.begin(), pos.end(),
            [](const std::vector<long long>& a, const std::vector<long long>& b) {
              long long ha = std::accumulate(a.begin(), a.end(), 0LL);
              long long hb = std::accumulate(b.begin(), b.end(), 0LL);
              if (ha != hb) return ha < hb;
              return a < b;
            });

  rs.n_pos = pos.size();
  if (rs.n_pos * 2 > 255)
    throw UnsupportedError("root system too large for index representation");
  auto push = [&rs](const std::vector<long long>& c) {
    Vec v(rs.dim, Rational(0));
    for (std::size_t j = 0; j < rs.rank; ++j)
      for (std::size_t k = 0; k < rs.dim; ++k)
        v[k] += Rational(c[j]) * rs.simple[j][k];
    rs.index_[c] = rs.roots.size();
    rs.roots.push_back(std::move(v));
    rs.coords.push_back(c);
    rs.height.push_back(std::accumulate(c.begin(), c.end(), 0LL));
  };
  for (const auto& c : pos) push(c);
  for (const auto& c : pos) {
    std::vector<long long> m = c;
    for (auto& x : m) x = -x;
    push(m);
  }

  rs.refl.assign(rs.size(), std::vector<std::uint8_t>(rs.size(), 0));
  for (std::size_t r = 0; r < rs.size(); ++r) {
    Rational rr = rs.inner(r, r);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      Rational n = Rational(2) * rs.inner(i, r) / rr;
      std::vector<long long> c = rs.coords[i];
      long long ni = n.to_int();
      for (std::size_t j = 0; j < rs.rank; ++j) c[j] -= ni * rs.coords[r][j];
      rs.refl[r][i] = static_cast<std::uint8_t>(rs.index_of(c));
    }
  }
  return rs;
}

inline RootSystem build_root_system(const std::string& label) {
  std::size_t dim = 0;
  std::vector<Vec> simple = detail::simple_system_for(label, dim);
  return build_root_system_from_simple(label, std::move(simple));
}

}  // namespace specht

#pragma once

// Test-only reference evaluations. Nothing here calls into the library's
// operation tables: the seven-element irack is transcribed from its printed
// form and evaluated on labels directly.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline const std::string kLabels = "1abcdef";

// Printed unary rows and ▷ rows, one character per element in label order.
inline const std::string kPlus = "1bafcde";
inline const std::string kMinus = "1badefc";
inline const std::map<char, std::string> kRhd{
    {'1', "1abcdef"}, {'a', "1abcdef"}, {'b', "1abcdef"}, {'c', "1baefcd"},
    {'d', "1baefcd"}, {'e', "1baefcd"}, {'f', "1baefcd"}};

inline char plus(char x) { return kPlus[kLabels.find(x)]; }
inline char minus(char x) { return kMinus[kLabels.find(x)]; }
inline char rhd(char a, char b) { return kRhd.at(a)[kLabels.find(b)]; }
inline char lhd(char b, char a) { return rhd(minus(a), b); }

/// Braid letters as signed generator numbers; positive acts as (u,v) -> (u▷v, u).
inline std::string trace(const std::vector<int>& letters, std::string t) {
  for (int g : letters) {
    const std::size_t i = static_cast<std::size_t>(g > 0 ? g : -g) - 1;
    const char u = t[i];
    const char v = t[i + 1];
    if (g > 0) {
      t[i] = rhd(u, v);
      t[i + 1] = u;
    } else {
      t[i] = v;
      t[i + 1] = lhd(u, v);
    }
  }
  return t;
}

inline std::vector<int> half_twist(int n) {
  std::vector<int> w;
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) w.push_back(i);
  return w;
}

inline std::vector<int> repeat(const std::vector<int>& w, int k) {
  std::vector<int> out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

/// Permutations of {0,1,2} as image arrays; product (p*q)(x) = p(q(x)).
using Perm3 = std::vector<int>;
inline Perm3 mul(const Perm3& p, const Perm3& q) { return {p[q[0]], p[q[1]], p[q[2]]}; }
inline Perm3 inv(const Perm3& p) {
  Perm3 r(3);
  for (int i = 0; i < 3; ++i) r[p[i]] = i;
  return r;
}

/// Set-of-pairs relations over label strings, composed by brute force.
using LabelRelation = std::set<std::pair<std::string, std::string>>;
inline LabelRelation compose(const LabelRelation& r, const LabelRelation& s) {
  LabelRelation out;
  for (const auto& [a, b] : r)
    for (const auto& [c, d] : s)
      if (b == c) out.emplace(a, d);
  return out;
}

}  // namespace oracle

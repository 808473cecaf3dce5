#pragma once

#include <functional>
#include <map>
#include <optional>

#include "gendem/gendem.hpp"
#include "gendem/psi.hpp"

namespace gendem {

using RationalPoint = std::vector<Rat>;

// Evaluated piecewise-linear data for one point. verdict_S holds iff all
// Psi values are >= 0; the (ii) verdicts and verdict_Delta are present
// only when a full multidegree was supplied.
struct PLReport {
  std::map<std::pair<int, int>, Rat> psi;  // (j,k) -> Psi^{j,k}
  std::vector<std::vector<Rat>> a_levels;  // a_levels[j-1] = a^{(j)}
  bool verdict_S = false;
  std::optional<std::vector<bool>> verdict_ii;  // per j, 1-based j-1
  std::optional<bool> verdict_Delta;
};

// Psi table and cone verdict for (m_tilde, a); lengths r-1 and r.
PLReport psi_eval(const CartanData& cd, const Word& word,
                  const RationalPoint& m_tilde, const RationalPoint& a);

// Full report against Delta_{i,m}: adds the degree bounds (ii) at k = 1.
PLReport pl_report(const CartanData& cd, const Word& word,
                   const RationalPoint& m, const RationalPoint& a);

bool in_S(const CartanData& cd, const Word& word, const RationalPoint& m_tilde,
          const RationalPoint& a);
bool in_S(const CartanData& cd, const Word& word,
          const std::vector<long long>& m_tilde, const StringVector& a);

// Level-k membership: Psi(k m_tilde, a) >= 0 together with
// a_j <= k m_j + sum_{j<s} [i_s = i_j] k m_s - sum_{j<s} c(i_j,i_s) a_s.
bool in_S_im(const CartanData& cd, const Word& word, const Multidegree& m,
             long long k, const StringVector& a);

bool in_Delta(const CartanData& cd, const Word& word, const Multidegree& m,
              const RationalPoint& a);

// Delta_{i,m} as integer points: enumerate a_r..a_1 under the (ii) bounds
// (each depends only on later coordinates), then filter by the cone.
// Sorted lexicographically.
std::vector<StringVector> lattice_points(const CartanData& cd, const Word& word,
                                         const Multidegree& m);

// The integer grid cut out by the (ii) bounds alone (the enumeration box
// of lattice_points before the cone filter). Used by oracle-style checks.
std::vector<StringVector> degree_bound_grid(const CartanData& cd,
                                            const Word& word,
                                            const Multidegree& m);

// Upper bound of condition (ii) at j given the later coordinates a_s, s > j.
template <typename T>
T degree_bound(const CartanData& cd, const Word& word, const std::vector<T>& m,
               long long k, const std::vector<T>& a, int j) {
  const int r = static_cast<int>(word.size());
  T bound = T(k) * m[j - 1];
  for (int s = j + 1; s <= r; ++s) {
    if (word[s - 1] == word[j - 1]) bound += T(k) * m[s - 1];
    long long c = cd.entry(word[j - 1], word[s - 1]);
    if (c != 0) bound -= T(c) * a[s - 1];
  }
  return bound;
}

}  // namespace gendem

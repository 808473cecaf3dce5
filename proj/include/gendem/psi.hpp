#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gendem/rootsys.hpp"

namespace gendem {

// The piecewise-linear recursion cutting out the admissible cone of
// parameterizations. Level r is the input point; level j-1 is obtained
// from level j by clamping with the Psi values:
//
//   Psi[j][k] = max over k < l <= j with i_l = i_j of
//       a_l^(j) - sum_{k < s <= l} c(i_j, i_s) a_s^(j)
//                + sum_{k <= s < l} [i_s = i_j] m_s          (if i_k = i_j)
//             = a_k^(j)                                      (otherwise)
//   a_k^(j-1) = min(a_k^(j), Psi[j][k]).
//
// m has r-1 entries, a has r. Scalar type is exact (long long on lattice
// queries, Rat on rational ones).
template <typename T>
struct PsiData {
  // psi[j][k], 1-based, defined for 2 <= j <= r, 1 <= k < j.
  std::vector<std::vector<T>> psi;
  // levels[j] = a^(j), 1-based in j (levels[j] has j entries), j = 1..r.
  std::vector<std::vector<T>> levels;

  bool all_nonneg() const {
    for (const auto& row : psi)
      for (const T& v : row)
        if (v < T(0)) return false;
    return true;
  }
};

template <typename T>
PsiData<T> psi_recursion(const CartanData& cd, const Word& word,
                         const std::vector<T>& m_tilde, const std::vector<T>& a) {
  const int r = static_cast<int>(word.size());
  if (static_cast<int>(m_tilde.size()) != r - 1)
    throw std::invalid_argument("psi: m_tilde must have length r-1");
  if (static_cast<int>(a.size()) != r)
    throw std::invalid_argument("psi: a must have length r");
  PsiData<T> out;
  out.psi.assign(r + 1, {});
  out.levels.assign(r + 1, {});
  out.levels[r] = a;
  for (int j = r; j >= 2; --j) {
    const auto& lvl = out.levels[j];
    auto& psi_j = out.psi[j];
    psi_j.assign(j - 1, T(0));  // psi_j[k-1] holds Psi[j][k]
    for (int k = 1; k < j; ++k) {
      if (word[k - 1] != word[j - 1]) {
        psi_j[k - 1] = lvl[k - 1];
        continue;
      }
      bool first = true;
      T best(0);
      T csum(0);   // sum_{k < s <= l} c(i_j, i_s) a_s^(j)
      T msum(0);   // sum_{k <= s < l} [i_s = i_j] m_s
      for (int l = k + 1; l <= j; ++l) {
        csum += T(cd.entry(word[j - 1], word[l - 1])) * lvl[l - 1];
        if (word[l - 2] == word[j - 1]) msum += m_tilde[l - 2];
        if (word[l - 1] != word[j - 1]) continue;
        T cand = lvl[l - 1] - csum + msum;
        if (first || cand > best) best = cand;
        first = false;
      }
      psi_j[k - 1] = best;  // l = j always qualifies, so never empty
    }
    auto& next = out.levels[j - 1];
    next.assign(j - 1, T(0));
    for (int k = 1; k < j; ++k)
      next[k - 1] = std::min(lvl[k - 1], psi_j[k - 1]);
  }
  if (r == 1) out.levels[1] = a;
  return out;
}

// All Psi[j][k] >= 0; the defining condition of the cone (inputs are
// assumed componentwise >= 0 by the caller's domain).
template <typename T>
bool psi_all_nonneg(const CartanData& cd, const Word& word,
                    const std::vector<T>& m_tilde, const std::vector<T>& a) {
  return psi_recursion(cd, word, m_tilde, a).all_nonneg();
}

}  // namespace gendem

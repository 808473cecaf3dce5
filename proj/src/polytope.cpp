#include "gendem/polytope.hpp"

#include <algorithm>

namespace gendem {

namespace {

void check_lengths(const Word& word, std::size_t m_len, std::size_t a_len,
                   bool m_is_full) {
  const std::size_t r = word.size();
  const std::size_t want_m = m_is_full ? r : r - 1;
  if (m_len != want_m)
    throw std::invalid_argument("multidegree length must be " +
                                std::to_string(want_m));
  if (a_len != r)
    throw std::invalid_argument("point length must be " + std::to_string(r));
}

template <typename T>
bool nonneg(const std::vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x >= T(0); });
}

}  // namespace

PLReport psi_eval(const CartanData& cd, const Word& word,
                  const RationalPoint& m_tilde, const RationalPoint& a) {
  check_word(cd, word);
  check_lengths(word, m_tilde.size(), a.size(), /*m_is_full=*/false);
  auto data = psi_recursion<Rat>(cd, word, m_tilde, a);
  PLReport rep;
  rep.verdict_S = nonneg(m_tilde) && nonneg(a) && data.all_nonneg();
  const int r = static_cast<int>(word.size());
  for (int j = 2; j <= r; ++j)
    for (int k = 1; k < j; ++k) rep.psi[{j, k}] = data.psi[j][k - 1];
  for (int j = 1; j <= r; ++j) rep.a_levels.push_back(data.levels[j]);
  return rep;
}

PLReport pl_report(const CartanData& cd, const Word& word, const RationalPoint& m,
                   const RationalPoint& a) {
  check_lengths(word, m.size(), a.size(), /*m_is_full=*/true);
  RationalPoint m_tilde(m.begin(), m.end() - 1);
  PLReport rep = psi_eval(cd, word, m_tilde, a);
  const int r = static_cast<int>(word.size());
  std::vector<bool> ok(r);
  for (int j = 1; j <= r; ++j)
    ok[j - 1] = a[j - 1] <= degree_bound<Rat>(cd, word, m, 1, a, j);
  rep.verdict_Delta = rep.verdict_S && std::all_of(ok.begin(), ok.end(),
                                                   [](bool b) { return b; });
  rep.verdict_ii = std::move(ok);
  return rep;
}

bool in_S(const CartanData& cd, const Word& word, const RationalPoint& m_tilde,
          const RationalPoint& a) {
  check_word(cd, word);
  check_lengths(word, m_tilde.size(), a.size(), false);
  return nonneg(m_tilde) && nonneg(a) &&
         psi_all_nonneg<Rat>(cd, word, m_tilde, a);
}

bool in_S(const CartanData& cd, const Word& word,
          const std::vector<long long>& m_tilde, const StringVector& a) {
  check_word(cd, word);
  check_lengths(word, m_tilde.size(), a.size(), false);
  return nonneg(m_tilde) && nonneg(a) &&
         psi_all_nonneg<long long>(cd, word, m_tilde, a);
}

bool in_S_im(const CartanData& cd, const Word& word, const Multidegree& m,
             long long k, const StringVector& a) {
  check_word(cd, word);
  check_lengths(word, m.size(), a.size(), true);
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  if (!nonneg(a)) return false;
  const int r = static_cast<int>(word.size());
  for (int j = 1; j <= r; ++j)
    if (a[j - 1] > degree_bound<long long>(cd, word, m, k, a, j)) return false;
  std::vector<long long> km_tilde(m.begin(), m.end() - 1);
  for (auto& x : km_tilde) x *= k;
  return psi_all_nonneg<long long>(cd, word, km_tilde, a);
}

bool in_Delta(const CartanData& cd, const Word& word, const Multidegree& m,
              const RationalPoint& a) {
  check_word(cd, word);
  check_lengths(word, m.size(), a.size(), true);
  if (!nonneg(a)) return false;
  const int r = static_cast<int>(word.size());
  RationalPoint mr(m.begin(), m.end());
  for (int j = 1; j <= r; ++j)
    if (a[j - 1] > degree_bound<Rat>(cd, word, mr, 1, a, j)) return false;
  RationalPoint m_tilde(mr.begin(), mr.end() - 1);
  return psi_all_nonneg<Rat>(cd, word, m_tilde, a);
}

namespace {

// Depth-first sweep over the (ii) box, assigning a_r first.
void sweep(const CartanData& cd, const Word& word, const Multidegree& m, int j,
           StringVector& a, const std::function<void(const StringVector&)>& sink) {
  if (j == 0) {
    sink(a);
    return;
  }
  long long bound = degree_bound<long long>(cd, word, m, 1, a, j);
  for (long long v = 0; v <= bound; ++v) {
    a[j - 1] = v;
    sweep(cd, word, m, j - 1, a, sink);
  }
  a[j - 1] = 0;
}

}  // namespace

std::vector<StringVector> lattice_points(const CartanData& cd, const Word& word,
                                         const Multidegree& m) {
  check_word(cd, word);
  check_lengths(word, m.size(), word.size(), true);
  std::vector<long long> m_tilde(m.begin(), m.end() - 1);
  std::vector<StringVector> out;
  StringVector a(word.size(), 0);
  sweep(cd, word, m, static_cast<int>(word.size()), a,
        [&](const StringVector& p) {
          if (psi_all_nonneg<long long>(cd, word, m_tilde, p)) out.push_back(p);
        });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StringVector> degree_bound_grid(const CartanData& cd,
                                            const Word& word,
                                            const Multidegree& m) {
  check_word(cd, word);
  check_lengths(word, m.size(), word.size(), true);
  std::vector<StringVector> out;
  StringVector a(word.size(), 0);
  sweep(cd, word, m, static_cast<int>(word.size()), a,
        [&](const StringVector& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gendem

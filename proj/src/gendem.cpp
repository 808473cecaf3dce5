#include "gendem/gendem.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gendem/psi.hpp"

namespace gendem {

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<int32_t>& v) const noexcept {
    std::size_t h = 0x811c9dc5ULL;
    for (int32_t x : v) hash_mix(h, static_cast<std::size_t>(x) * 0x9e3779b1ULL);
    return h;
  }
};

using TupleSet = std::unordered_set<std::vector<int32_t>, TupleHash>;

}  // namespace

std::vector<Weight> word_shapes(const CartanData& cd, const Word& word,
                                const Multidegree& mdeg) {
  check_word(cd, word);
  if (word.size() != mdeg.size())
    throw std::invalid_argument("word and multidegree lengths differ");
  for (long long m : mdeg)
    if (m < 0) throw std::invalid_argument("multidegree entries must be >= 0");
  std::vector<Weight> shapes;
  shapes.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    Weight lam = zero_weight(cd);
    lam[word[k] - 1] = mdeg[k];
    shapes.push_back(std::move(lam));
  }
  return shapes;
}

GenDemCrystal enumerate_gendem(const CartanData& cd, const Word& word,
                               const Multidegree& mdeg, std::size_t cap) {
  auto shapes = word_shapes(cd, word, mdeg);
  auto ctx = make_tensor_context(cd, shapes, cap);
  const int r = static_cast<int>(word.size());
  const TensorContext& C = *ctx;

  // Level s holds the suffix tuples (idx_s, ..., idx_r); level r starts
  // from the last factor alone and each step prepends the next highest
  // factor and sweeps the lowering exponent until it dies.
  auto suffix_ctx = [&](int s) {
    // factors s..r of C, 1-based s
    TensorContext sub;
    sub.cartan = cd;
    sub.factors.assign(C.factors.begin() + (s - 1), C.factors.end());
    return sub;
  };

  std::vector<std::vector<int32_t>> level;
  {
    const auto& g = *C.factors[r - 1];
    int v = g.highest();
    level.push_back({static_cast<int32_t>(v)});
    while ((v = g.f(word[r - 1], v)) != CrystalGraph::kNone)
      level.push_back({static_cast<int32_t>(v)});
  }
  for (int s = r - 1; s >= 1; --s) {
    TensorContext sub = suffix_ctx(s);
    TupleSet next;
    std::vector<int32_t> tup(r - s + 1);
    for (const auto& x : level) {
      tup[0] = C.factors[s - 1]->highest();
      std::copy(x.begin(), x.end(), tup.begin() + 1);
      // A revisited tuple was already swept to the end of its string, so
      // the rest of this sweep is already present.
      if (!next.insert(tup).second) continue;
      while (detail::t_f(sub, word[s - 1], tup)) {
        if (next.size() >= cap)
          throw CapExceeded(cap, "generalized Demazure crystal");
        if (!next.insert(tup).second) break;
      }
    }
    level.assign(next.begin(), next.end());
  }

  GenDemCrystal out;
  out.cartan = cd;
  out.word = word;
  out.mdeg = mdeg;
  out.ctx = ctx;
  std::vector<std::pair<StringVector, TensorElem>> items;
  items.reserve(level.size());
  for (auto& tup : level) {
    TensorElem b;
    b.ctx = ctx;
    b.idx = std::move(tup);
    StringVector om = omega(word, b);
    items.emplace_back(std::move(om), std::move(b));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t p = 0; p < items.size(); ++p) {
    if (p > 0 && items[p].first == items[p - 1].first)
      throw std::logic_error("enumerate_gendem: string parameterization collision");
    out.omega.push_back(items[p].first);
    out.omega_prime.push_back(omega_prime(word, items[p].second));
    out.by_omega.emplace(std::move(items[p].first), p);
    out.elements.push_back(std::move(items[p].second));
  }
  return out;
}

StringVector omega(const Word& word, const TensorElem& b) {
  const int r = static_cast<int>(word.size());
  if (b.ctx->arity() != r)
    throw std::invalid_argument("omega: word length does not match element");
  StringVector a(r);
  TensorContext sub;
  sub.cartan = b.ctx->cartan;
  sub.factors = b.ctx->factors;
  std::vector<int32_t> idx = b.idx;
  for (int s = 1; s <= r; ++s) {
    TensorContext cur;
    cur.cartan = sub.cartan;
    cur.factors.assign(sub.factors.begin() + (s - 1), sub.factors.end());
    std::span<int32_t> span_idx(idx.data() + (s - 1), idx.size() - (s - 1));
    long long steps = detail::t_eps(cur, word[s - 1], span_idx);
    for (long long t = 0; t < steps; ++t)
      if (!detail::t_e(cur, word[s - 1], span_idx))
        throw std::logic_error("omega: raising string shorter than eps");
    if (span_idx[0] != cur.factors[0]->highest())
      throw std::logic_error(
          "omega: stripped factor is not highest (operator inconsistency)");
    a[s - 1] = steps;
  }
  return a;
}

StringVector omega_prime(const Word& word, const TensorElem& b) {
  const int r = static_cast<int>(word.size());
  if (b.ctx->arity() != r)
    throw std::invalid_argument("omega_prime: word length does not match element");
  StringVector a(r);
  std::vector<int32_t> idx = b.idx;
  for (int s = 1; s <= r; ++s) {
    TensorContext cur;
    cur.cartan = b.ctx->cartan;
    cur.factors.assign(b.ctx->factors.begin() + (s - 1), b.ctx->factors.end());
    std::span<int32_t> span_idx(idx.data() + (s - 1), idx.size() - (s - 1));
    a[s - 1] = detail::t_phi(cur, word[s - 1], span_idx);
    long long steps = detail::t_eps(cur, word[s - 1], span_idx);
    for (long long t = 0; t < steps; ++t)
      if (!detail::t_e(cur, word[s - 1], span_idx))
        throw std::logic_error("omega_prime: raising string shorter than eps");
    if (span_idx[0] != cur.factors[0]->highest())
      throw std::logic_error(
          "omega_prime: stripped factor is not highest (operator inconsistency)");
  }
  return a;
}

std::optional<TensorElem> build_nested(std::shared_ptr<const TensorContext> ctx,
                                       const Word& word, const StringVector& a) {
  const int r = static_cast<int>(word.size());
  if (ctx->arity() != r || static_cast<int>(a.size()) != r)
    throw std::invalid_argument("build_nested: length mismatch");
  std::vector<int32_t> idx(r);
  for (int s = r; s >= 1; --s) {
    idx[s - 1] = ctx->factors[s - 1]->highest();
    TensorContext cur;
    cur.cartan = ctx->cartan;
    cur.factors.assign(ctx->factors.begin() + (s - 1), ctx->factors.end());
    std::span<int32_t> span_idx(idx.data() + (s - 1), idx.size() - (s - 1));
    for (long long t = 0; t < a[s - 1]; ++t)
      if (!detail::t_f(cur, word[s - 1], span_idx)) return std::nullopt;
  }
  TensorElem b;
  b.ctx = std::move(ctx);
  b.idx = std::move(idx);
  return b;
}

std::pair<IntMatrix, IntMatrix> transform_matrices(const CartanData& cd,
                                                   const Word& word) {
  check_word(cd, word);
  const int r = static_cast<int>(word.size());
  IntMatrix A(r, std::vector<long long>(r, 0));
  IntMatrix B(r, std::vector<long long>(r, 0));
  // Back-substitute a_k = m_k - a'_k + sum_{j>k} (delta m_j - c a_j),
  // expressing row k of (A|B) through the already-built later rows.
  for (int k = r; k >= 1; --k) {
    A[k - 1][k - 1] = -1;
    B[k - 1][k - 1] = 1;
    for (int j = k + 1; j <= r; ++j) {
      if (word[j - 1] == word[k - 1]) B[k - 1][j - 1] += 1;
      long long c = cd.entry(word[k - 1], word[j - 1]);
      if (c == 0) continue;
      for (int t = 1; t <= r; ++t) {
        A[k - 1][t - 1] -= c * A[j - 1][t - 1];
        B[k - 1][t - 1] -= c * B[j - 1][t - 1];
      }
    }
  }
  if (det_triangular_like(A) * det_triangular_like(A) != 1 ||
      det_triangular_like(B) != 1)
    throw std::logic_error("transform_matrices: determinant is not unimodular");
  return {A, B};
}

long long det_triangular_like(const IntMatrix& m) {
  long long d = 1;
  for (std::size_t i = 0; i < m.size(); ++i) d *= m[i][i];
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != 0)
        throw std::logic_error("expected an upper-triangular matrix");
  return d;
}

long long eps_via_psi_tilde(const CartanData& cd, const Word& word,
                            const Multidegree& mdeg, const StringVector& omega_b,
                            int i) {
  const int r = static_cast<int>(word.size());
  std::vector<long long> m_tilde(mdeg.begin(), mdeg.end() - 1);
  auto data = psi_recursion<long long>(cd, word, m_tilde, omega_b);
  long long best = 0;
  for (int j = 1; j <= r; ++j) {
    if (word[j - 1] != i) continue;
    const auto& lvl = data.levels[j];
    // min over l <= j with i_l = i of
    //   sum_{s <= l} c(i, i_s) a_s^(j) - a_l^(j) - sum_{s < l} [i_s = i] m_s
    bool first = true;
    long long tilde = 0;
    long long csum = 0, msum = 0;
    for (int l = 1; l <= j; ++l) {
      csum += cd.entry(i, word[l - 1]) * lvl[l - 1];
      if (l >= 2 && word[l - 2] == i) msum += m_tilde[l - 2];
      if (word[l - 1] != i) continue;
      long long cand = csum - lvl[l - 1] - msum;
      if (first || cand < tilde) tilde = cand;
      first = false;
    }
    best = std::max(best, tilde);
  }
  return best;
}

long long eps_via_psi_tilde(const GenDemCrystal& crystal, const TensorElem& b,
                            int i) {
  return eps_via_psi_tilde(crystal.cartan, crystal.word, crystal.mdeg,
                           omega(crystal.word, b), i);
}

std::pair<Weight, Multidegree> demazure_reduction(const CartanData& cd,
                                                  const Weight& lam,
                                                  const Word& word) {
  if (!is_dominant(lam))
    throw std::invalid_argument("demazure_reduction: weight is not dominant");
  if (!is_reduced(cd, word))
    throw std::invalid_argument("demazure_reduction: word is not reduced");
  const int r = static_cast<int>(word.size());
  Multidegree m(r, 0);
  for (int k = 1; k <= r; ++k) {
    bool last = true;
    for (int k2 = k + 1; k2 <= r; ++k2) last = last && word[k2 - 1] != word[k - 1];
    if (last) m[k - 1] = lam[word[k - 1] - 1];
  }
  Weight rest = lam;
  for (int letter : word) rest[letter - 1] = 0;
  return {rest, m};
}

}  // namespace gendem

#include "gendem/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gendem {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Minimal positive integer symmetrizers, or throw. The Dynkin graph of a
// finite-type matrix is a forest, so propagating ratios along edges and
// clearing denominators is enough; inconsistencies on repeated visits mean
// the matrix is not symmetrizable.
std::vector<long long> compute_symmetrizers(
    const std::vector<std::vector<long long>>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Frac> d(n, Frac(0));
  for (int start = 0; start < n; ++start) {
    if (!d[start].is_zero()) continue;
    d[start] = Frac(1);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        Frac dj = d[i] * Frac(c[i][j], c[j][i]);
        if (d[j].is_zero()) {
          d[j] = dj;
          stack.push_back(j);
        } else {
          require(d[j] == dj, "Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  long long lcm_den = 1;
  for (const Frac& x : d) lcm_den = std::lcm(lcm_den, x.den());
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) out[i] = d[i].num() * (lcm_den / d[i].den());
  long long g = 0;
  for (long long x : out) g = std::gcd(g, x);
  for (long long& x : out) x /= g;
  return out;
}

// Leading principal minors of the symmetrized matrix, exactly.
bool positive_definite(const std::vector<std::vector<long long>>& c,
                       const std::vector<long long>& d) {
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<Frac>> a(n, std::vector<Frac>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Frac(d[i] * c[i][j]);
  // Gaussian elimination; all pivots positive iff positive definite.
  for (int k = 0; k < n; ++k) {
    if (!(a[k][k] > Frac(0))) return false;
    for (int i = k + 1; i < n; ++i) {
      Frac factor = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return true;
}

}  // namespace

CartanData make_cartan(const std::vector<std::vector<long long>>& c) {
  const int n = static_cast<int>(c.size());
  require(n >= 1, "Cartan matrix must be nonempty");
  for (const auto& row : c)
    require(static_cast<int>(row.size()) == n, "Cartan matrix must be square");
  for (int i = 0; i < n; ++i) {
    require(c[i][i] == 2, "Cartan matrix needs 2 on the diagonal");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      require(c[i][j] <= 0, "off-diagonal Cartan entries must be <= 0");
      require((c[i][j] == 0) == (c[j][i] == 0),
              "Cartan zero pattern must be symmetric");
    }
  }
  CartanData cd;
  cd.rank = n;
  cd.c = c;
  cd.sym = compute_symmetrizers(c);
  require(positive_definite(c, cd.sym),
          "symmetrized Cartan matrix is not positive definite (not finite type)");
  return cd;
}

CartanData cartan_from_type(char family, int rank) {
  auto bad = [&]() -> std::invalid_argument {
    std::ostringstream os;
    os << "invalid finite type " << family << rank;
    return std::invalid_argument(os.str());
  };
  const int n = rank;
  std::vector<std::vector<long long>> c(std::max(n, 0),
                                        std::vector<long long>(std::max(n, 0), 0));
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  };
  for (int i = 0; i < n; ++i)
    if (n > 0) c[i][i] = 2;
  switch (family) {
    case 'A':
      if (n < 1) throw bad();
      chain(n);
      break;
    case 'B':  // alpha_n short
      if (n < 2) throw bad();
      chain(n);
      c[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      if (n < 2) throw bad();
      chain(n);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) throw bad();
      chain(n - 1);
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      // Bourbaki: node 2 hangs off node 4 of the chain 1-3-4-5-...-n.
      c[0][2] = c[2][0] = -1;
      c[1][3] = c[3][1] = -1;
      for (int i = 2; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      if (n != 4) throw bad();
      chain(4);
      c[2][1] = -2;
      c[1][2] = -1;
      break;
    case 'G':
      // Orientation pinned so node 1 is short: <alpha_2, h_1> = -3.
      if (n != 2) throw bad();
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    default:
      throw bad();
  }
  return make_cartan(c);
}

Weight fundamental_weight(const CartanData& cd, int i) {
  Weight w(cd.rank, 0);
  w.at(i - 1) = 1;
  return w;
}

Weight zero_weight(const CartanData& cd) { return Weight(cd.rank, 0); }

Weight simple_root(const CartanData& cd, int j) {
  Weight w(cd.rank);
  for (int i = 0; i < cd.rank; ++i) w[i] = cd.c[i][j - 1];
  return w;
}

bool is_dominant(const Weight& lam) {
  return std::all_of(lam.begin(), lam.end(), [](long long x) { return x >= 0; });
}

long long pairing(const Weight& lam, int i) {
  if (i < 1 || i > static_cast<int>(lam.size()))
    throw std::invalid_argument("pairing: index out of range");
  return lam[i - 1];
}

Frac pairing(const RationalWeight& lam, int i) {
  if (i < 1 || i > static_cast<int>(lam.size()))
    throw std::invalid_argument("pairing: index out of range");
  return lam[i - 1];
}

Weight simple_reflection(const CartanData& cd, int i, const Weight& lam) {
  long long p = pairing(lam, i);
  Weight out = lam;
  for (int j = 0; j < cd.rank; ++j) out[j] -= p * cd.c[j][i - 1];
  return out;
}

RationalWeight simple_reflection(const CartanData& cd, int i,
                                 const RationalWeight& lam) {
  Frac p = pairing(lam, i);
  RationalWeight out = lam;
  for (int j = 0; j < cd.rank; ++j) out[j] -= p * Frac(cd.c[j][i - 1]);
  return out;
}

void check_word(const CartanData& cd, const Word& word) {
  if (word.empty()) throw std::invalid_argument("word must be nonempty");
  for (int l : word)
    if (l < 1 || l > cd.rank)
      throw std::invalid_argument("word letter " + std::to_string(l) +
                                  " out of range 1.." + std::to_string(cd.rank));
}

bool is_reduced(const CartanData& cd, const Word& word) {
  check_word(cd, word);
  const int n = cd.rank;
  // Track w_k = s_{i_1}...s_{i_{k-1}} on simple-root coordinates; the word
  // stays reduced exactly while w_k(alpha_{i_k}) remains positive.
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) w[i][i] = 1;
  for (int letter : word) {
    const int t = letter - 1;
    // image of alpha_t under current w: column t.
    bool positive = true;
    for (int i = 0; i < n && positive; ++i) positive = w[i][t] >= 0;
    if (!positive) return false;
    // w <- w * s_t: since s_t(alpha_j) = alpha_j - c[t][j] alpha_t, new
    // column j is col_j - c[t][j] col_t (column t flips via c[t][t] = 2).
    std::vector<std::vector<long long>> nw = w;
    for (int j = 0; j < n; ++j) {
      if (cd.c[t][j] == 0) continue;
      for (int i = 0; i < n; ++i) nw[i][j] -= cd.c[t][j] * w[i][t];
    }
    w = std::move(nw);
  }
  return true;
}

std::vector<std::vector<long long>> positive_roots(const CartanData& cd) {
  const int n = cd.rank;
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> a(n, 0);
    a[i] = 1;
    roots.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    auto beta = queue.back();
    queue.pop_back();
    for (int t = 0; t < n; ++t) {
      long long p = 0;
      for (int j = 0; j < n; ++j) p += cd.c[t][j] * beta[j];
      auto img = beta;
      img[t] -= p;
      bool pos = std::all_of(img.begin(), img.end(),
                             [](long long x) { return x >= 0; });
      if (pos && roots.insert(img).second) queue.push_back(img);
    }
  }
  return {roots.begin(), roots.end()};
}

BigInt weyl_dim(const CartanData& cd, const Weight& lam) {
  if (static_cast<int>(lam.size()) != cd.rank)
    throw std::invalid_argument("weyl_dim: weight has wrong rank");
  if (!is_dominant(lam))
    throw std::invalid_argument("weyl_dim: weight is not dominant");
  BigInt num = 1, den = 1;
  for (const auto& alpha : positive_roots(cd)) {
    // <mu, alpha^vee> = sum_i mu_i k_i d_i / d_alpha with d_alpha =
    // (alpha,alpha)/2; integrality of the quotient is a consistency check.
    long long norm2 = 0;
    for (int i = 0; i < cd.rank; ++i)
      for (int j = 0; j < cd.rank; ++j)
        norm2 += alpha[i] * cd.sym[i] * cd.c[i][j] * alpha[j];
    if (norm2 <= 0 || norm2 % 2 != 0)
      throw std::logic_error("weyl_dim: bad root norm");
    const long long d_alpha = norm2 / 2;
    long long lam_rho = 0, rho = 0;
    for (int i = 0; i < cd.rank; ++i) {
      lam_rho += (lam[i] + 1) * alpha[i] * cd.sym[i];
      rho += alpha[i] * cd.sym[i];
    }
    if (lam_rho % d_alpha != 0 || rho % d_alpha != 0)
      throw std::logic_error("weyl_dim: non-integral coroot pairing");
    num *= lam_rho / d_alpha;
    den *= rho / d_alpha;
  }
  BigInt q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dim: non-integral quotient");
  return q;
}

std::string cartan_str(const CartanData& cd) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < cd.rank; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < cd.rank; ++j) os << (j ? "," : "") << cd.c[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace gendem

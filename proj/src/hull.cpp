#include "gendem/hull.hpp"

#include <algorithm>
#include <set>

namespace gendem {

namespace {

using Mat = std::vector<std::vector<Rat>>;

// Determinant by fraction-free-ish Gaussian elimination; exact.
Rat det(Mat a) {
  const int n = static_cast<int>(a.size());
  Rat d(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      d = -d;
    }
    d *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      Rat factor = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return d;
}

int rank_of(Mat a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      Rat factor = a[i][c] / a[rank][c];
      for (int j = c; j < cols; ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Inverse of a nonsingular square matrix.
Mat inverse(Mat a) {
  const int n = static_cast<int>(a.size());
  Mat inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::logic_error("hull: singular chart matrix");
    std::swap(a[piv], a[k]);
    std::swap(inv[piv], inv[k]);
    Rat p = a[k][k];
    for (int j = 0; j < n; ++j) {
      a[k][j] /= p;
      inv[k][j] /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat factor = a[i][k];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= factor * a[k][j];
        inv[i][j] -= factor * inv[k][j];
      }
    }
  }
  return inv;
}

long long to_ll(const BigInt& x) {
  if (x > std::numeric_limits<long long>::max() ||
      x < std::numeric_limits<long long>::min())
    throw std::overflow_error("hull: facet normal out of 64-bit range");
  return static_cast<long long>(x);
}

// Scale (v, c) to a primitive integer vector with integer offset.
std::pair<std::vector<long long>, Rat> primitive(const std::vector<Rat>& v,
                                                 const Rat& c) {
  BigInt l = 1;
  for (const Rat& x : v) l = boost::multiprecision::lcm(l, rat_den(x));
  l = boost::multiprecision::lcm(l, rat_den(c));
  BigInt g = 0;
  std::vector<BigInt> nums;
  for (const Rat& x : v) {
    BigInt t = rat_num(x) * (l / rat_den(x));
    g = boost::multiprecision::gcd(g, t);
    nums.push_back(t);
  }
  BigInt coff = rat_num(c) * (l / rat_den(c));
  g = boost::multiprecision::gcd(g, coff);
  if (g == 0) g = 1;
  std::vector<long long> out;
  for (const BigInt& t : nums) out.push_back(to_ll(t / g));
  return {out, Rat(coff / g)};
}

}  // namespace

HullResult convex_hull(const std::vector<RationalPoint>& points,
                       const HullOptions& opts) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
  const int r = static_cast<int>(points[0].size());
  if (r < 1 || r > opts.max_dim)
    throw std::invalid_argument("convex_hull: dimension must be 1.." +
                                std::to_string(opts.max_dim));
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != r)
      throw std::invalid_argument("convex_hull: inconsistent dimensions");

  std::vector<RationalPoint> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());

  HullResult res;
  res.ambient_dim = r;
  const RationalPoint& p0 = pts[0];

  // Affine basis of the span, by greedy exact rank extension.
  Mat basis;
  for (int idx = 1; idx < n; ++idx) {
    std::vector<Rat> diff(r);
    for (int j = 0; j < r; ++j) diff[j] = pts[idx][j] - p0[j];
    Mat trial = basis;
    trial.push_back(diff);
    if (rank_of(trial) > static_cast<int>(basis.size()))
      basis.push_back(std::move(diff));
  }
  const int d = static_cast<int>(basis.size());
  res.affine_dim = d;

  // Equations of the affine span: nullspace of the basis matrix.
  {
    Mat a = basis;  // d x r
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < r && rank < d; ++c) {
      int piv = -1;
      for (int i = rank; i < d; ++i)
        if (a[i][c] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[piv], a[rank]);
      Rat p = a[rank][c];
      for (int j = 0; j < r; ++j) a[rank][j] /= p;
      for (int i = 0; i < d; ++i) {
        if (i == rank || a[i][c] == 0) continue;
        Rat factor = a[i][c];
        for (int j = 0; j < r; ++j) a[i][j] -= factor * a[rank][j];
      }
      pivot_col.push_back(c);
      ++rank;
    }
    std::vector<bool> is_pivot(r, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < r; ++c) {
      if (is_pivot[c]) continue;
      std::vector<Rat> z(r, Rat(0));
      z[c] = 1;
      for (int t = 0; t < rank; ++t) z[pivot_col[t]] = -a[t][c];
      Rat val(0);
      for (int j = 0; j < r; ++j) val += z[j] * p0[j];
      auto [zn, zc] = primitive(z, val);
      res.equations.push_back({std::move(zn), std::move(zc)});
    }
  }

  if (d == 0) {
    res.vertices = {p0};
    return res;
  }

  // Chart: d independent columns of the basis give exact local coordinates
  // y = M^{-1} (x - p0)_sigma on the affine span.
  std::vector<int> sigma;
  {
    int rank = 0;
    for (int c = 0; c < r && rank < d; ++c) {
      Mat sub;
      for (int i = 0; i < d; ++i) {
        std::vector<Rat> row;
        for (int cc : sigma) row.push_back(basis[i][cc]);
        row.push_back(basis[i][c]);
        sub.push_back(std::move(row));
      }
      if (rank_of(sub) > rank) {
        sigma.push_back(c);
        ++rank;
      }
    }
  }
  Mat M(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int t = 0; t < d; ++t) M[i][t] = basis[t][sigma[i]];
  // columns of M are basis vectors restricted to sigma; y solves M y = x_sigma.
  Mat Minv = inverse(M);

  std::vector<std::vector<Rat>> proj(n, std::vector<Rat>(d));
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < d; ++i) {
      Rat acc(0);
      for (int t = 0; t < d; ++t)
        acc += Minv[i][t] * (pts[p][sigma[t]] - p0[sigma[t]]);
      proj[p][i] = acc;
    }

  // Candidate facet hyperplanes: spanned by affinely independent d-subsets.
  struct PlaneKey {
    std::vector<long long> n;
    BigInt c;
    bool operator<(const PlaneKey& o) const {
      if (n != o.n) return n < o.n;
      return c < o.c;
    }
  };
  std::set<PlaneKey> seen;
  struct Plane {
    std::vector<Rat> n;
    Rat c;
  };
  std::vector<Plane> planes;

  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  std::size_t candidates = 0;
  auto advance = [&]() -> bool {
    int i = d - 1;
    while (i >= 0 && comb[i] == n - d + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  if (n >= d) {
    do {
      if (++candidates > opts.max_candidates)
        throw CapExceeded(opts.max_candidates, "convex hull facet candidates");
      // Normal by cofactor expansion against the difference rows.
      Mat D(d - 1, std::vector<Rat>(d));
      for (int k = 1; k < d; ++k)
        for (int j = 0; j < d; ++j)
          D[k - 1][j] = proj[comb[k]][j] - proj[comb[0]][j];
      std::vector<Rat> nrm(d);
      bool zero = true;
      for (int j = 0; j < d; ++j) {
        Mat minor(d - 1, std::vector<Rat>(d - 1));
        for (int rr = 0; rr < d - 1; ++rr) {
          int cc = 0;
          for (int jj = 0; jj < d; ++jj) {
            if (jj == j) continue;
            minor[rr][cc++] = D[rr][jj];
          }
        }
        nrm[j] = (j % 2 == 0 ? det(minor) : -det(minor));
        if (nrm[j] != 0) zero = false;
      }
      if (zero) continue;  // affinely dependent subset
      Rat c(0);
      for (int j = 0; j < d; ++j) c += nrm[j] * proj[comb[0]][j];
      // Orient inward (normal . y >= c for all points) and test support.
      int sign = 0;
      bool supporting = true;
      for (int p = 0; p < n && supporting; ++p) {
        Rat v(0);
        for (int j = 0; j < d; ++j) v += nrm[j] * proj[p][j];
        if (v == c) continue;
        int s = v > c ? 1 : -1;
        if (sign == 0)
          sign = s;
        else if (s != sign)
          supporting = false;
      }
      if (!supporting || sign == 0) continue;
      if (sign < 0) {
        for (auto& x : nrm) x = -x;
        c = -c;
      }
      auto [ni, ci] = primitive(nrm, c);
      PlaneKey key{ni, rat_num(ci)};
      if (!seen.insert(key).second) continue;
      std::vector<Rat> nr(ni.begin(), ni.end());
      planes.push_back({std::move(nr), ci});
    } while (advance());
  }

  // Vertices: points whose tight facet normals span the chart.
  for (int p = 0; p < n; ++p) {
    Mat tight;
    for (const auto& pl : planes) {
      Rat v(0);
      for (int j = 0; j < d; ++j) v += pl.n[j] * proj[p][j];
      if (v == pl.c) tight.push_back(pl.n);
    }
    if (rank_of(tight) == d) res.vertices.push_back(pts[p]);
  }
  std::sort(res.vertices.begin(), res.vertices.end());

  // Lift facet inequalities back to ambient coordinates:
  // n . Minv (x_sigma - p0_sigma) >= c.
  for (const auto& pl : planes) {
    std::vector<Rat> amb(r, Rat(0));
    for (int t = 0; t < d; ++t) {
      Rat acc(0);
      for (int i = 0; i < d; ++i) acc += pl.n[i] * Minv[i][t];
      amb[sigma[t]] = acc;
    }
    Rat off = pl.c;
    for (int j = 0; j < r; ++j) off += amb[j] * p0[j];
    auto [ni, ci] = primitive(amb, off);
    res.facets.push_back({std::move(ni), std::move(ci)});
  }
  std::sort(res.facets.begin(), res.facets.end(),
            [](const HullResult::Facet& a, const HullResult::Facet& b) {
              if (a.normal != b.normal) return a.normal < b.normal;
              return a.offset < b.offset;
            });
  return res;
}

}  // namespace gendem

#include "gendem/verify.hpp"

#include <algorithm>
#include <sstream>

namespace gendem {

namespace {

std::string vec_str(const StringVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

Multidegree scaled(const Multidegree& m, long long k) {
  Multidegree out = m;
  for (auto& x : out) x *= k;
  return out;
}

}  // namespace

VerifyReport verify(const CartanData& cd, const Word& word, const Multidegree& m,
                    long long depth, std::size_t cap) {
  if (depth < 1) throw std::invalid_argument("verify: depth must be >= 1");
  VerifyReport rep;
  rep.word = word;
  rep.mdeg = m;
  rep.depth = depth;
  const int r = static_cast<int>(word.size());

  std::vector<GenDemCrystal> crystals;
  for (long long k = 1; k <= depth; ++k)
    crystals.push_back(enumerate_gendem(cd, word, scaled(m, k), cap));

  // (a) crystal image vs lattice points, per dilation level.
  for (long long k = 1; k <= depth; ++k) {
    const auto& cr = crystals[k - 1];
    auto pts = lattice_points(cd, word, scaled(m, k));
    CheckResult c;
    c.name = "lattice_k" + std::to_string(k);
    if (cr.omega == pts) {
      c.pass = true;
      c.details = std::to_string(pts.size()) + " points";
    } else {
      c.pass = false;
      std::vector<StringVector> only_crystal, only_pl;
      std::set_difference(cr.omega.begin(), cr.omega.end(), pts.begin(),
                          pts.end(), std::back_inserter(only_crystal));
      std::set_difference(pts.begin(), pts.end(), cr.omega.begin(),
                          cr.omega.end(), std::back_inserter(only_pl));
      c.details = !only_crystal.empty()
                      ? "crystal-only point " + vec_str(only_crystal.front())
                      : "polytope-only point " + vec_str(only_pl.front());
    }
    rep.checks.push_back(std::move(c));
  }

  // (b) semigroup closure: level-1 sums satisfy level-2 membership.
  {
    CheckResult c;
    c.name = "semigroup";
    c.pass = true;
    const auto& pts = crystals[0].omega;
    for (std::size_t x = 0; x < pts.size() && c.pass; ++x)
      for (std::size_t y = x; y < pts.size() && c.pass; ++y) {
        StringVector sum(r);
        for (int t = 0; t < r; ++t) sum[t] = pts[x][t] + pts[y][t];
        if (!in_S_im(cd, word, m, 2, sum)) {
          c.pass = false;
          c.details = vec_str(pts[x]) + " + " + vec_str(pts[y]) + " = " +
                      vec_str(sum) + " is not at level 2";
        }
      }
    if (c.pass)
      c.details = std::to_string(pts.size() * (pts.size() + 1) / 2) + " sums";
    rep.checks.push_back(std::move(c));
  }

  // (c) omega = A omega' + B m, all levels.
  {
    CheckResult c;
    c.name = "transform";
    c.pass = true;
    auto [A, B] = transform_matrices(cd, word);
    for (long long k = 1; k <= depth && c.pass; ++k) {
      const auto& cr = crystals[k - 1];
      const Multidegree km = scaled(m, k);
      for (std::size_t p = 0; p < cr.size() && c.pass; ++p) {
        for (int row = 0; row < r && c.pass; ++row) {
          long long acc = 0;
          for (int t = 0; t < r; ++t)
            acc += A[row][t] * cr.omega_prime[p][t] + B[row][t] * km[t];
          if (acc != cr.omega[p][row]) {
            c.pass = false;
            c.details = "element " + vec_str(cr.omega[p]) + " at level " +
                        std::to_string(k) + ": omega' = " +
                        vec_str(cr.omega_prime[p]);
          }
        }
      }
    }
    if (c.pass) c.details = "A, B unimodular; identity holds";
    rep.checks.push_back(std::move(c));
  }

  // (d) eps via the PL formula vs operator iteration.
  {
    CheckResult c;
    c.name = "eps_formula";
    c.pass = true;
    for (long long k = 1; k <= depth && c.pass; ++k) {
      const auto& cr = crystals[k - 1];
      for (std::size_t p = 0; p < cr.size() && c.pass; ++p)
        for (int i = 1; i <= cd.rank && c.pass; ++i) {
          long long lhs = eps_via_psi_tilde(cd, word, cr.mdeg, cr.omega[p], i);
          long long rhs = tensor_eps(i, cr.elements[p]);
          if (lhs != rhs) {
            c.pass = false;
            c.details = "element " + vec_str(cr.omega[p]) + ", i = " +
                        std::to_string(i) + ": formula " + std::to_string(lhs) +
                        " vs crystal " + std::to_string(rhs);
          }
        }
    }
    if (c.pass) c.details = "all (b, i) pairs agree";
    rep.checks.push_back(std::move(c));
  }

  // (e) cone membership vs the parameterization of the test element
  // against a large dominant weight.
  {
    CheckResult c;
    c.name = "cone";
    c.pass = true;
    auto grid = degree_bound_grid(cd, word, m);
    long long max_entry = 0;
    for (const auto& p : grid)
      for (long long v : p) max_entry = std::max(max_entry, v);
    const long long M = max_entry + 1;
    Weight lam(cd.rank, M);
    std::vector<Weight> shapes = word_shapes(cd, word, m);
    shapes.back() = lam;
    auto ctx = make_tensor_context(cd, shapes, cap);
    std::vector<long long> m_tilde(m.begin(), m.end() - 1);
    for (const auto& a : grid) {
      bool lhs = in_S(cd, word, m_tilde, a);
      auto T = build_nested(ctx, word, a);
      bool rhs = T.has_value() && omega(word, *T) == a;
      if (lhs != rhs) {
        c.pass = false;
        c.details = "point " + vec_str(a) + ": cone " + (lhs ? "in" : "out") +
                    " vs parameterization " + (rhs ? "fixed" : "moved");
        break;
      }
    }
    if (c.pass)
      c.details = std::to_string(grid.size()) + " grid points, test weight " +
                  std::to_string(M) + " * rho";
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

}  // namespace gendem

#include "gendem/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace gendem {

namespace {

// h_i at the breakpoints 0..N (h_0 = 0).
std::vector<Frac> breakpoint_heights(int i, const LSPath& pi) {
  std::vector<Frac> h;
  h.reserve(pi.segments().size() + 1);
  h.push_back(Frac(0));
  Frac acc(0);
  for (const auto& s : pi.segments()) {
    acc += s.dur * Frac(s.dir.at(i - 1));
    h.push_back(acc);
  }
  return h;
}

Frac min_height(const std::vector<Frac>& h) {
  Frac m = h[0];
  for (const Frac& x : h)
    if (x < m) m = x;
  return m;
}

}  // namespace

LSPath::LSPath(std::vector<PathSegment> segs) {
  Frac total(0);
  for (auto& s : segs) {
    if (s.dur < Frac(0)) throw std::invalid_argument("LSPath: negative duration");
    if (s.dur.is_zero()) continue;
    total += s.dur;
    if (!segs_.empty() && segs_.back().dir == s.dir)
      segs_.back().dur += s.dur;
    else
      segs_.push_back(std::move(s));
  }
  if (total != Frac(1))
    throw std::invalid_argument("LSPath: durations must sum to 1");
  for (std::size_t k = 1; k < segs_.size(); ++k)
    if (segs_[k].dir.size() != segs_[0].dir.size())
      throw std::invalid_argument("LSPath: inconsistent direction ranks");
  // Littelmann integrality: each h_i attains an integral minimum <= 0.
  for (int i = 1; i <= rank(); ++i) {
    Frac m = min_height(breakpoint_heights(i, *this));
    if (!m.is_integer() || m > Frac(0))
      throw std::logic_error("LSPath: non-integral minimum of h_" +
                             std::to_string(i));
  }
}

LSPath LSPath::straight(const Weight& lam) {
  return LSPath({PathSegment{lam, Frac(1)}});
}

bool LSPath::operator<(const LSPath& o) const {
  auto cmp = [](const PathSegment& a, const PathSegment& b) {
    if (a.dir != b.dir) return a.dir < b.dir;
    if (a.dur != b.dur) return a.dur < b.dur;
    return false;
  };
  return std::lexicographical_compare(segs_.begin(), segs_.end(),
                                      o.segs_.begin(), o.segs_.end(), cmp);
}

std::size_t LSPath::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& s : segs_) {
    for (long long x : s.dir) hash_mix(h, std::hash<long long>{}(x));
    hash_mix(h, std::hash<Frac>{}(s.dur));
  }
  return h;
}

Weight path_wt(const LSPath& pi) {
  Weight w(pi.rank(), 0);
  RationalWeight acc(pi.rank(), Frac(0));
  for (const auto& s : pi.segments())
    for (int j = 0; j < pi.rank(); ++j) acc[j] += s.dur * Frac(s.dir[j]);
  for (int j = 0; j < pi.rank(); ++j) {
    if (!acc[j].is_integer())
      throw std::logic_error("path_wt: endpoint is not an integral weight");
    w[j] = acc[j].num();
  }
  return w;
}

long long path_eps(int i, const LSPath& pi) {
  Frac m = min_height(breakpoint_heights(i, pi));
  return -m.num();
}

long long path_phi(int i, const LSPath& pi) {
  auto h = breakpoint_heights(i, pi);
  Frac v = h.back() - min_height(h);
  if (!v.is_integer()) throw std::logic_error("path_phi: non-integral value");
  return v.num();
}

std::optional<LSPath> apply_f(const CartanData& cd, int i, const LSPath& pi) {
  const auto& segs = pi.segments();
  const int N = static_cast<int>(segs.size());
  auto h = breakpoint_heights(i, pi);
  const Frac m = min_height(h);
  const Frac target = m + Frac(1);
  if (h[N] < target) return std::nullopt;

  int k1 = 0;  // last breakpoint attaining the minimum
  for (int k = 0; k <= N; ++k)
    if (h[k] == m) k1 = k;

  // First time at or after t_{k1} where h reaches m+1; h stays in (m, m+1)
  // strictly before it, so scan for the first breakpoint value >= m+1.
  int kc = k1 + 1;
  while (h[kc] < target) ++kc;
  const Frac x = (target - h[kc - 1]) / (h[kc] - h[kc - 1]);  // in (0, 1]

  std::vector<PathSegment> out;
  out.reserve(segs.size() + 2);
  for (int k = 1; k <= k1; ++k) out.push_back(segs[k - 1]);
  for (int k = k1 + 1; k < kc; ++k)
    out.push_back({simple_reflection(cd, i, segs[k - 1].dir), segs[k - 1].dur});
  out.push_back({simple_reflection(cd, i, segs[kc - 1].dir), segs[kc - 1].dur * x});
  out.push_back({segs[kc - 1].dir, segs[kc - 1].dur * (Frac(1) - x)});
  for (int k = kc + 1; k <= N; ++k) out.push_back(segs[k - 1]);
  return LSPath(std::move(out));
}

std::optional<LSPath> apply_e(const CartanData& cd, int i, const LSPath& pi) {
  const auto& segs = pi.segments();
  const int N = static_cast<int>(segs.size());
  auto h = breakpoint_heights(i, pi);
  const Frac m = min_height(h);
  if (m > Frac(-1)) return std::nullopt;
  const Frac target = m + Frac(1);

  int k0 = 0;  // first breakpoint attaining the minimum
  while (h[k0] != m) ++k0;

  // Last time at or before t_{k0} where h equals m+1; scan backwards for
  // the first breakpoint value >= m+1 (h_0 = 0 >= m+1 guarantees one).
  int kb = k0 - 1;
  while (h[kb] < target) --kb;
  // Crossing inside segment kb+1 at fraction x from its start.
  const Frac x = (target - h[kb]) / (h[kb + 1] - h[kb]);  // in [0, 1)

  std::vector<PathSegment> out;
  out.reserve(segs.size() + 2);
  for (int k = 1; k <= kb; ++k) out.push_back(segs[k - 1]);
  out.push_back({segs[kb].dir, segs[kb].dur * x});
  out.push_back(
      {simple_reflection(cd, i, segs[kb].dir), segs[kb].dur * (Frac(1) - x)});
  for (int k = kb + 2; k <= k0; ++k)
    out.push_back({simple_reflection(cd, i, segs[k - 1].dir), segs[k - 1].dur});
  for (int k = k0 + 1; k <= N; ++k) out.push_back(segs[k - 1]);
  return LSPath(std::move(out));
}

LSPath highest_path(const CartanData& cd, const Weight& lam) {
  if (static_cast<int>(lam.size()) != cd.rank)
    throw std::invalid_argument("highest_path: weight has wrong rank");
  if (!is_dominant(lam))
    throw std::invalid_argument("highest_path: weight is not dominant");
  return LSPath::straight(lam);
}

}  // namespace gendem

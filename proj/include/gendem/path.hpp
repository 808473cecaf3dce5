#pragma once

#include <optional>
#include <vector>

#include "gendem/rootsys.hpp"

namespace gendem {

struct PathSegment {
  Weight dir;
  Frac dur;  // positive, durations of a path sum to 1
  bool operator==(const PathSegment& o) const {
    return dir == o.dir && dur == o.dur;
  }
};

// Piecewise-linear path from 0, in canonical form: no zero-duration
// segments, adjacent segments with equal direction merged. Canonical form
// is the equality and hashing key.
class LSPath {
 public:
  LSPath() = default;
  // Canonicalizes. Throws if durations are not positive or do not sum to 1.
  explicit LSPath(std::vector<PathSegment> segs);

  static LSPath straight(const Weight& lam);

  const std::vector<PathSegment>& segments() const { return segs_; }
  int rank() const {
    return segs_.empty() ? 0 : static_cast<int>(segs_[0].dir.size());
  }

  bool operator==(const LSPath& o) const { return segs_ == o.segs_; }
  bool operator!=(const LSPath& o) const { return !(*this == o); }
  bool operator<(const LSPath& o) const;  // lexicographic on segments

  std::size_t hash() const;

 private:
  std::vector<PathSegment> segs_;
};

// Endpoint of the path; throws logic_error if not integral.
Weight path_wt(const LSPath& pi);

// eps_i = -min h_i, phi_i = h_i(1) - min h_i, where h_i(t) = <pi(t), h_i>.
// The minimum over [0,1] is attained at a segment breakpoint and must be an
// integer (Littelmann integrality, asserted).
long long path_eps(int i, const LSPath& pi);
long long path_phi(int i, const LSPath& pi);

// Root operators. Empty optional encodes 0.
std::optional<LSPath> apply_f(const CartanData& cd, int i, const LSPath& pi);
std::optional<LSPath> apply_e(const CartanData& cd, int i, const LSPath& pi);

// Straight path for dominant lam (rejects non-dominant input).
LSPath highest_path(const CartanData& cd, const Weight& lam);

}  // namespace gendem

template <>
struct std::hash<gendem::LSPath> {
  std::size_t operator()(const gendem::LSPath& p) const noexcept {
    return p.hash();
  }
};

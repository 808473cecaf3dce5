#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "gendem/path.hpp"

namespace gendem {

// Closure of highest_path(lam) under all lowering operators; cardinality
// equals weyl_dim(lam). Result is sorted canonically.
std::vector<LSPath> enumerate_crystal(const CartanData& cd, const Weight& lam,
                                      std::size_t cap = kDefaultCap);

// B(lam) with its operators tabulated. Index 0 is the highest element;
// the remaining order follows discovery, which is deterministic.
class CrystalGraph {
 public:
  static std::shared_ptr<const CrystalGraph> build(const CartanData& cd,
                                                   const Weight& lam,
                                                   std::size_t cap = kDefaultCap);

  static constexpr int kNone = -1;

  const Weight& shape() const { return lam_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int highest() const { return 0; }

  const LSPath& path(int v) const { return elems_[v]; }
  const Weight& wt(int v) const { return wts_[v]; }

  int f(int i, int v) const { return f_[i - 1][v]; }
  int e(int i, int v) const { return e_[i - 1][v]; }
  long long eps(int i, int v) const { return eps_[i - 1][v]; }
  long long phi(int i, int v) const { return phi_[i - 1][v]; }
  long long wt_h(int i, int v) const { return wts_[v][i - 1]; }

 private:
  Weight lam_;
  std::vector<LSPath> elems_;
  std::vector<Weight> wts_;
  std::vector<std::vector<int>> f_, e_;          // [letter-1][vertex]
  std::vector<std::vector<long long>> eps_, phi_;
};

}  // namespace gendem

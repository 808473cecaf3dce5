#include "gendem/crystal.hpp"

#include <algorithm>
#include <deque>

namespace gendem {

namespace {

// BFS closure under f_i from the highest path. Discovery order (queue
// order, letters ascending) is deterministic.
std::vector<LSPath> closure(const CartanData& cd, const Weight& lam,
                            std::size_t cap) {
  std::vector<LSPath> elems;
  std::unordered_map<LSPath, int> seen;
  std::deque<int> queue;
  LSPath top = highest_path(cd, lam);
  seen.emplace(top, 0);
  elems.push_back(std::move(top));
  queue.push_back(0);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= cd.rank; ++i) {
      auto img = apply_f(cd, i, elems[v]);
      if (!img) continue;
      auto [it, inserted] = seen.emplace(*img, static_cast<int>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap) throw CapExceeded(cap, "crystal B(lambda)");
        elems.push_back(std::move(*img));
        queue.push_back(it->second);
      }
    }
  }
  return elems;
}

}  // namespace

std::vector<LSPath> enumerate_crystal(const CartanData& cd, const Weight& lam,
                                      std::size_t cap) {
  auto elems = closure(cd, lam, cap);
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::shared_ptr<const CrystalGraph> CrystalGraph::build(const CartanData& cd,
                                                        const Weight& lam,
                                                        std::size_t cap) {
  auto g = std::make_shared<CrystalGraph>();
  g->lam_ = lam;
  g->elems_ = closure(cd, lam, cap);
  const int sz = static_cast<int>(g->elems_.size());
  std::unordered_map<LSPath, int> index;
  for (int v = 0; v < sz; ++v) index.emplace(g->elems_[v], v);
  g->wts_.resize(sz);
  for (int v = 0; v < sz; ++v) g->wts_[v] = path_wt(g->elems_[v]);
  g->f_.assign(cd.rank, std::vector<int>(sz, kNone));
  g->e_.assign(cd.rank, std::vector<int>(sz, kNone));
  g->eps_.assign(cd.rank, std::vector<long long>(sz, 0));
  g->phi_.assign(cd.rank, std::vector<long long>(sz, 0));
  for (int i = 1; i <= cd.rank; ++i) {
    for (int v = 0; v < sz; ++v) {
      if (auto img = apply_f(cd, i, g->elems_[v])) g->f_[i - 1][v] = index.at(*img);
      if (auto img = apply_e(cd, i, g->elems_[v])) g->e_[i - 1][v] = index.at(*img);
      g->eps_[i - 1][v] = path_eps(i, g->elems_[v]);
      g->phi_[i - 1][v] = path_phi(i, g->elems_[v]);
    }
  }
  return g;
}

}  // namespace gendem

#include "gendem/tensor.hpp"

#include <map>
#include <stdexcept>

namespace gendem {

namespace detail {

// Suffix values E_k = eps_i(b_k (x) ... (x) b_r), folded right-to-left:
// E_k = max(eps_i(b_k), E_{k+1} - <wt b_k, h_i>). The sentinel E_r = 0
// folds correctly since eps - phi <= eps.
static void suffix_eps(const TensorContext& ctx, int i,
                       std::span<const int32_t> idx, std::vector<long long>& E) {
  const int r = static_cast<int>(idx.size());
  E.resize(r + 1);
  E[r] = 0;
  for (int k = r - 1; k >= 0; --k) {
    const auto& g = *ctx.factors[k];
    E[k] = std::max(g.eps(i, idx[k]), E[k + 1] - g.wt_h(i, idx[k]));
  }
}

long long t_eps(const TensorContext& ctx, int i, std::span<const int32_t> idx) {
  std::vector<long long> E;
  suffix_eps(ctx, i, idx, E);
  return E[0];
}

long long t_phi(const TensorContext& ctx, int i, std::span<const int32_t> idx) {
  // phi(b_1 (x) b_2) = max(phi(b_2), phi(b_1) + <wt b_2, h_i>), left fold.
  const int r = static_cast<int>(idx.size());
  long long P = ctx.factors[0]->phi(i, idx[0]);
  for (int k = 1; k < r; ++k) {
    const auto& g = *ctx.factors[k];
    P = std::max(g.phi(i, idx[k]), P + g.wt_h(i, idx[k]));
  }
  return P;
}

bool t_f(const TensorContext& ctx, int i, std::span<int32_t> idx) {
  const int r = static_cast<int>(idx.size());
  std::vector<long long> E;
  suffix_eps(ctx, i, idx, E);
  // f acts on b_k iff phi_i(b_k) > eps_i(b_{k+1} (x) ... ), first such k.
  for (int k = 0; k < r; ++k) {
    const auto& g = *ctx.factors[k];
    if (k == r - 1 || g.phi(i, idx[k]) > E[k + 1]) {
      int img = g.f(i, idx[k]);
      if (img == CrystalGraph::kNone) return false;
      idx[k] = img;
      return true;
    }
  }
  return false;
}

bool t_e(const TensorContext& ctx, int i, std::span<int32_t> idx) {
  const int r = static_cast<int>(idx.size());
  std::vector<long long> E;
  suffix_eps(ctx, i, idx, E);
  // e acts on b_k iff phi_i(b_k) >= eps_i(b_{k+1} (x) ... ), first such k.
  for (int k = 0; k < r; ++k) {
    const auto& g = *ctx.factors[k];
    if (k == r - 1 || g.phi(i, idx[k]) >= E[k + 1]) {
      int img = g.e(i, idx[k]);
      if (img == CrystalGraph::kNone) return false;
      idx[k] = img;
      return true;
    }
  }
  return false;
}

}  // namespace detail

std::shared_ptr<const TensorContext> make_tensor_context(
    const CartanData& cd, const std::vector<Weight>& shapes, std::size_t cap) {
  auto ctx = std::make_shared<TensorContext>();
  ctx->cartan = cd;
  std::map<Weight, std::shared_ptr<const CrystalGraph>> cache;
  for (const auto& lam : shapes) {
    auto& slot = cache[lam];
    if (!slot) slot = CrystalGraph::build(cd, lam, cap);
    ctx->factors.push_back(slot);
  }
  return ctx;
}

TensorElem highest_tensor(std::shared_ptr<const TensorContext> ctx) {
  TensorElem x;
  x.idx.assign(ctx->arity(), 0);
  x.ctx = std::move(ctx);
  return x;
}

Weight tensor_wt(const TensorElem& x) {
  Weight w(x.ctx->cartan.rank, 0);
  for (int k = 0; k < x.ctx->arity(); ++k) {
    const Weight& fw = x.ctx->factors[k]->wt(x.idx[k]);
    for (int j = 0; j < x.ctx->cartan.rank; ++j) w[j] += fw[j];
  }
  return w;
}

long long tensor_eps(int i, const TensorElem& x) {
  return detail::t_eps(*x.ctx, i, x.idx);
}

long long tensor_phi(int i, const TensorElem& x) {
  return detail::t_phi(*x.ctx, i, x.idx);
}

std::optional<TensorElem> tensor_f(int i, const TensorElem& x) {
  TensorElem y = x;
  if (!detail::t_f(*y.ctx, i, y.idx)) return std::nullopt;
  return y;
}

std::optional<TensorElem> tensor_e(int i, const TensorElem& x) {
  TensorElem y = x;
  if (!detail::t_e(*y.ctx, i, y.idx)) return std::nullopt;
  return y;
}

std::optional<TensorElem> tensor_f_pow(int i, long long a, const TensorElem& x) {
  TensorElem y = x;
  for (long long s = 0; s < a; ++s)
    if (!detail::t_f(*y.ctx, i, y.idx)) return std::nullopt;
  return y;
}

std::optional<TensorElem> tensor_e_pow(int i, long long a, const TensorElem& x) {
  TensorElem y = x;
  for (long long s = 0; s < a; ++s)
    if (!detail::t_e(*y.ctx, i, y.idx)) return std::nullopt;
  return y;
}

}  // namespace gendem

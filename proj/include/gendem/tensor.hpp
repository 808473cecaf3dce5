#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>

#include "gendem/crystal.hpp"

namespace gendem {

// Ambient factor crystals of a tensor product, shared by all its elements.
struct TensorContext {
  CartanData cartan;
  std::vector<std::shared_ptr<const CrystalGraph>> factors;

  int arity() const { return static_cast<int>(factors.size()); }
  const Weight& shape(int k) const { return factors[k]->shape(); }
};

std::shared_ptr<const TensorContext> make_tensor_context(
    const CartanData& cd, const std::vector<Weight>& shapes,
    std::size_t cap = kDefaultCap);

// b_1 (x) ... (x) b_r, each factor an index into its ambient crystal.
// Membership of factors in their crystals holds by construction.
struct TensorElem {
  std::shared_ptr<const TensorContext> ctx;
  std::vector<int32_t> idx;

  const LSPath& factor(int k) const { return ctx->factors[k]->path(idx[k]); }
  bool operator==(const TensorElem& o) const { return idx == o.idx; }
};

TensorElem highest_tensor(std::shared_ptr<const TensorContext> ctx);

Weight tensor_wt(const TensorElem& x);

// Statistics and operators by the two-factor signed rule, folded over the
// factors; empty optional encodes 0.
long long tensor_eps(int i, const TensorElem& x);
long long tensor_phi(int i, const TensorElem& x);
std::optional<TensorElem> tensor_f(int i, const TensorElem& x);
std::optional<TensorElem> tensor_e(int i, const TensorElem& x);
std::optional<TensorElem> tensor_f_pow(int i, long long a, const TensorElem& x);
std::optional<TensorElem> tensor_e_pow(int i, long long a, const TensorElem& x);

// Index-level core, for enumeration loops that keep one scratch tuple.
namespace detail {
long long t_eps(const TensorContext& ctx, int i, std::span<const int32_t> idx);
long long t_phi(const TensorContext& ctx, int i, std::span<const int32_t> idx);
// Applies in place; returns false when the result is 0.
bool t_f(const TensorContext& ctx, int i, std::span<int32_t> idx);
bool t_e(const TensorContext& ctx, int i, std::span<int32_t> idx);
}  // namespace detail

}  // namespace gendem

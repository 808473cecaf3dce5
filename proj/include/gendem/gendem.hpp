#pragma once

#include <map>
#include <utility>

#include "gendem/tensor.hpp"

namespace gendem {

using StringVector = std::vector<long long>;
using IntMatrix = std::vector<std::vector<long long>>;

// B_{i,m} together with both parameterizations, elements sorted by their
// string parameterization.
struct GenDemCrystal {
  CartanData cartan;
  Word word;
  Multidegree mdeg;
  std::shared_ptr<const TensorContext> ctx;
  std::vector<TensorElem> elements;
  std::vector<StringVector> omega;        // parallel to elements
  std::vector<StringVector> omega_prime;  // parallel to elements
  std::map<StringVector, std::size_t> by_omega;

  std::size_t size() const { return elements.size(); }
};

// Shapes m_k * varpi_{i_k} for the factors of B_{i,m}.
std::vector<Weight> word_shapes(const CartanData& cd, const Word& word,
                                const Multidegree& mdeg);

GenDemCrystal enumerate_gendem(const CartanData& cd, const Word& word,
                               const Multidegree& mdeg,
                               std::size_t cap = kDefaultCap);

// Peel the maximal raising string letter by letter, stripping the highest
// first factor each time. Works for any element of a nested closure over
// `word`, in particular the T_lambda test elements.
StringVector omega(const Word& word, const TensorElem& b);
StringVector omega_prime(const Word& word, const TensorElem& b);

// The nested lowering expression with the given exponents; empty optional
// when some step vanishes. `shapes` are the ambient factor shapes (for
// B_{i,m} use word_shapes; T_lambda substitutes lambda for the last one).
std::optional<TensorElem> build_nested(std::shared_ptr<const TensorContext> ctx,
                                       const Word& word, const StringVector& a);

// Unimodular change of parameterization: omega = A omega' + B m. A is
// upper triangular with diagonal -1, B upper triangular with diagonal 1.
std::pair<IntMatrix, IntMatrix> transform_matrices(const CartanData& cd,
                                                   const Word& word);

// eps_i from the string parameterization alone, via the clamped
// piecewise-linear formula.
long long eps_via_psi_tilde(const CartanData& cd, const Word& word,
                            const Multidegree& mdeg, const StringVector& omega_b,
                            int i);
long long eps_via_psi_tilde(const GenDemCrystal& crystal, const TensorElem& b,
                            int i);

// Multidegree of the Bott-Samelson factorization of a Demazure crystal:
// m_k keeps lambda_{i_k} at the last occurrence of each letter; lambda'
// collects coordinates of letters that never occur.
std::pair<Weight, Multidegree> demazure_reduction(const CartanData& cd,
                                                  const Weight& lam,
                                                  const Word& word);

long long det_triangular_like(const IntMatrix& m);

}  // namespace gendem

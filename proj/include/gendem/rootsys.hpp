#pragma once

#include <string>
#include <vector>

#include "gendem/numeric.hpp"

namespace gendem {

// Weights live in the fundamental-weight basis: coords[i] = <lam, h_{i+1}>.
using Weight = std::vector<long long>;
using RationalWeight = std::vector<Frac>;

// Letters are 1-based, as in all I/O.
using Word = std::vector<int>;
using Multidegree = std::vector<long long>;

// Finite-type Cartan datum. c[i][j] = <alpha_{j+1}, h_{i+1}> (0-based
// storage); sym[i] are the minimal positive symmetrizers, so that
// sym[i]*c[i][j] = sym[j]*c[j][i] and the symmetrized matrix is positive
// definite. Construct through make_cartan / cartan_from_type, which
// validate both properties.
struct CartanData {
  int rank = 0;
  std::vector<std::vector<long long>> c;
  std::vector<long long> sym;

  long long entry(int i, int j) const { return c[i - 1][j - 1]; }  // 1-based
};

CartanData make_cartan(const std::vector<std::vector<long long>>& c);
CartanData cartan_from_type(char family, int rank);

Weight fundamental_weight(const CartanData& cd, int i);
Weight zero_weight(const CartanData& cd);
// alpha_j in the fundamental-weight basis: coords[i] = c[i][j].
Weight simple_root(const CartanData& cd, int j);

bool is_dominant(const Weight& lam);

long long pairing(const Weight& lam, int i);
Frac pairing(const RationalWeight& lam, int i);

Weight simple_reflection(const CartanData& cd, int i, const Weight& lam);
RationalWeight simple_reflection(const CartanData& cd, int i,
                                 const RationalWeight& lam);

bool is_reduced(const CartanData& cd, const Word& word);

// Positive roots in simple-root coordinates.
std::vector<std::vector<long long>> positive_roots(const CartanData& cd);

// dim V(lam) by the Weyl dimension formula; the independent counting
// oracle for crystal enumeration.
BigInt weyl_dim(const CartanData& cd, const Weight& lam);

void check_word(const CartanData& cd, const Word& word);

std::string cartan_str(const CartanData& cd);

}  // namespace gendem

// Exact integer linear algebra: Smith normal form, homology with torsion,
// simplicial chain complexes, and a little linear algebra over F_p.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <stdexcept>
#include <vector>

#include "almax/model.hpp"

namespace almax {

using DenseMatrix = std::vector<std::vector<long long>>;

struct SmithForm {
  std::vector<long long> factors;   // d1 | d2 | ... , all positive
  DenseMatrix U, V;                 // unimodular, U * m * V = diag(factors)
};

// Invariant factors of m (nonzero ones, ascending; their count is the rank).
// Sparse unit-pivot elimination first, dense arbitrary-precision SNF on
// whatever remains.  Throws std::overflow_error only if a factor itself
// does not fit in 64 bits.
std::vector<long long> invariant_factors(const SparseMatrix& m);

// Dense SNF with transforms; intended for small matrices.
SmithForm smith_normal_form(const DenseMatrix& m);

long long integer_rank(const SparseMatrix& m);

// Rank over F_p (p prime, p < 2^31).
int rank_mod_p(const SparseMatrix& m, std::uint32_t p);

// H_k = ker d_k / im d_{k+1}.  Throws std::invalid_argument if d∘d != 0.
HomologyResult homology(const GradedChainComplex& c);

// H^k of the dual complex (Hom into Z), indexed by k.
HomologyResult cohomology(const GradedChainComplex& c);

// Betti numbers over F_p, per degree (zeros omitted).
std::map<int, int> betti_mod_p(const GradedChainComplex& c, std::uint32_t p);

// Faces in degree dim (the empty face in degree -1 when reduced), each
// face oriented by increasing vertex order.
GradedChainComplex simplicial_chain_complex(const SimplicialComplex& k, bool reduced);

// Tensor product with the Koszul sign on the second factor's differential.
GradedChainComplex tensor_product(const GradedChainComplex& a, const GradedChainComplex& b);

// ---------------------------------------------------------------------------
// Dense linear algebra over F_p
// ---------------------------------------------------------------------------

class ModpMatrix {
 public:
  ModpMatrix(int rows, int cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {}
  static ModpMatrix from(const SparseMatrix& m, std::uint32_t p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  std::uint32_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  int rank() const;
  // Columns spanning the null space of this matrix (as vectors in F_p^cols).
  ModpMatrix kernel() const;
  ModpMatrix operator*(const ModpMatrix& rhs) const;
  // [this | rhs] side by side.
  ModpMatrix hconcat(const ModpMatrix& rhs) const;

 private:
  int rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

// Long exact sequence of 0 -> A -> B -> B/A -> 0 where A is spanned by the
// flagged basis vectors of b (in_sub[k][i] != 0 puts generator i of degree
// k in A).  Ranks of i_*, p_* and the connecting map are computed over F_p
// and exactness is checked at every term.
struct LesReport {
  std::uint32_t prime = 0;
  bool subcomplex = true;
  bool exact = true;
  std::string first_failure;
  // Per degree: dimensions of H(A), H(B), H(B/A) over F_p.
  std::map<int, std::array<int, 3>> dims;
  bool ok() const { return subcomplex && exact; }
};
LesReport les_exactness(const GradedChainComplex& b, const std::map<int, std::vector<char>>& in_sub,
                        std::uint32_t p);

// F_2, F_3 and a large prime.
inline const std::array<std::uint32_t, 3> kLesPrimes{2, 3, 1000003};

}  // namespace almax

#pragma once

#include "lefib/core.hpp"

namespace lefib {

// Dense square integer matrix, row-major.
struct SpMat {
  int n = 0;
  std::vector<Int> a;

  SpMat() = default;
  explicit SpMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, Int(0)) {}
  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  static SpMat identity(int dim);
  bool operator==(const SpMat&) const = default;
};

SpMat sp_J(int genus);
SpMat mul(const SpMat& A, const SpMat& B);
SpMat transpose(const SpMat& M);
HomologyClass apply(const SpMat& M, const HomologyClass& v);
// Inverse of a symplectic matrix: J^-1 M^T J.
SpMat sp_inverse(const SpMat& M);
bool is_symplectic(const SpMat& M);

// Algebraic intersection pairing <u,v> = u^T J v, <ai,bi> = +1.
Int pairing(const HomologyClass& u, const HomologyClass& v);

// Right Dehn twist about a curve of class c acts on homology as
// x -> x - <x,c> c; exponent e gives x -> x - e <x,c> c.
SpMat transvection(const HomologyClass& c, int exponent = 1);
HomologyClass apply_transvection(const HomologyClass& c, int exponent,
                                 const HomologyClass& x);

struct ClassTwist {
  HomologyClass cls;
  int exponent = 1;
};

// Forward product M(w1) M(w2) ... M(wn); acting on a class applies the
// rightmost letter first.
SpMat evaluate_word(const std::vector<ClassTwist>& w, int genus);
HomologyClass act_on_curve(const std::vector<ClassTwist>& w, const HomologyClass& c);
bool verify_identity(const std::vector<ClassTwist>& w, int genus);

}  // namespace lefib

#include "lefib/sp.hpp"

#include <stdexcept>

namespace lefib {

SpMat SpMat::identity(int dim) {
  SpMat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

SpMat sp_J(int genus) {
  SpMat m(2 * genus);
  for (int i = 0; i < genus; ++i) {
    m.at(2 * i, 2 * i + 1) = 1;
    m.at(2 * i + 1, 2 * i) = -1;
  }
  return m;
}

SpMat mul(const SpMat& A, const SpMat& B) {
  if (A.n != B.n) throw std::invalid_argument("matrix dimension mismatch");
  SpMat C(A.n);
  for (int i = 0; i < A.n; ++i)
    for (int k = 0; k < A.n; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < A.n; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

SpMat transpose(const SpMat& M) {
  SpMat T(M.n);
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) T.at(j, i) = M.at(i, j);
  return T;
}

HomologyClass apply(const SpMat& M, const HomologyClass& v) {
  if (static_cast<int>(v.size()) != M.n) throw std::invalid_argument("vector dimension mismatch");
  HomologyClass out(M.n, Int(0));
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) out[i] += M.at(i, j) * v[j];
  return out;
}

SpMat sp_inverse(const SpMat& M) {
  int g = M.n / 2;
  SpMat J = sp_J(g), Jinv(M.n);
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) Jinv.at(i, j) = -J.at(i, j);
  return mul(mul(Jinv, transpose(M)), J);
}

bool is_symplectic(const SpMat& M) {
  SpMat J = sp_J(M.n / 2);
  return mul(mul(transpose(M), J), M) == J;
}

Int pairing(const HomologyClass& u, const HomologyClass& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw std::invalid_argument("pairing dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2)
    s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

SpMat transvection(const HomologyClass& c, int exponent) {
  int n = static_cast<int>(c.size());
  SpMat J = sp_J(n / 2);
  HomologyClass Jc = lefib::apply(J, c);
  SpMat M = SpMat::identity(n);
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < n; ++j) M.at(i, j) -= exponent * c[i] * Jc[j];
  }
  return M;
}

HomologyClass apply_transvection(const HomologyClass& c, int exponent, const HomologyClass& x) {
  Int p = pairing(x, c);
  HomologyClass out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= exponent * p * c[i];
  return out;
}

SpMat evaluate_word(const std::vector<ClassTwist>& w, int genus) {
  SpMat M = SpMat::identity(2 * genus);
  for (const auto& t : w) {
    SpMat step = transvection(t.cls, t.exponent > 0 ? 1 : -1);
    for (int k = 0; k < std::abs(t.exponent); ++k) M = mul(M, step);
  }
  return M;
}

HomologyClass act_on_curve(const std::vector<ClassTwist>& w, const HomologyClass& c) {
  int genus = static_cast<int>(c.size()) / 2;
  return lefib::apply(evaluate_word(w, genus), c);
}

bool verify_identity(const std::vector<ClassTwist>& w, int genus) {
  return evaluate_word(w, genus) == SpMat::identity(2 * genus);
}

}  // namespace lefib

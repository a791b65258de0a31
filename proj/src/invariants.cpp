#include "lefib/invariants.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lefib {

long long euler_characteristic(const Factorization& f) {
  if (f.surface.boundary != 0)
    throw std::invalid_argument("euler characteristic needs a closed fiber");
  long long n = 0;
  for (const auto& l : f.letters) n += std::abs(l.exponent);
  return 2LL * (2 - 2 * f.surface.genus) + n;
}

long long signature_endo_nagami(const Factorization& f) {
  long long s = 0;
  for (const auto& h : f.history) {
    if (!h.delta_known)
      throw std::invalid_argument("signature ledger incomplete at step " +
                                  history_kind_name(h.kind));
    s += h.signature_delta;
  }
  return s;
}

namespace {

// reduced row echelon form; returns pivot columns
std::vector<int> rref(std::vector<std::vector<Rat>>& A, int ncols) {
  std::vector<int> piv;
  int rows = static_cast<int>(A.size());
  int r = 0;
  for (int c = 0; c < ncols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[r], A[pr]);
    Rat pv = A[r][c];
    for (auto& x : A[r]) x /= pv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat fct = A[i][c];
      for (int t = 0; t < ncols; ++t) A[i][t] -= fct * A[r][t];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> A, int ncols) {
  std::vector<int> piv = rref(A, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < ncols; ++c) {
    if (is_piv[c]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -A[i][c];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

int rational_signature(std::vector<std::vector<Rat>> A) {
  int n = static_cast<int>(A.size());
  int pos = 0, neg = 0, i = 0;
  while (i < n) {
    int p = -1;
    for (int j = i; j < n; ++j)
      if (A[j][j] != 0) {
        p = j;
        break;
      }
    if (p < 0) {
      // all diagonal entries vanish; mix in an off-diagonal one
      int qj = -1, qk = -1;
      for (int j = i; j < n && qj < 0; ++j)
        for (int k = j + 1; k < n; ++k)
          if (A[j][k] != 0) {
            qj = j;
            qk = k;
            break;
          }
      if (qj < 0) break;  // zero block
      for (int t = i; t < n; ++t) A[qj][t] += A[qk][t];
      for (int t = i; t < n; ++t) A[t][qj] += A[t][qk];
      p = qj;
    }
    if (p != i) {
      std::swap(A[i], A[p]);
      for (int t = 0; t < n; ++t) std::swap(A[t][i], A[t][p]);
    }
    Rat d = A[i][i];
    if (d > 0)
      ++pos;
    else
      ++neg;
    for (int j = i + 1; j < n; ++j) {
      if (A[j][i] == 0) continue;
      Rat fct = A[j][i] / d;
      for (int t = i; t < n; ++t) A[j][t] -= fct * A[i][t];
      for (int t = i; t < n; ++t) A[t][j] -= fct * A[t][i];
    }
    ++i;
  }
  return pos - neg;
}

int meyer_tau(const SpMat& A, const SpMat& B) {
  int n = A.n;
  int g = n / 2;
  SpMat Ainv = sp_inverse(A);
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      M[i][j] = Rat(Ainv.at(i, j) - Int(i == j ? 1 : 0));
      M[i][n + j] = Rat(B.at(i, j) - Int(i == j ? 1 : 0));
    }
  auto basis = nullspace(std::move(M), 2 * n);
  if (basis.empty()) return 0;
  SpMat J = sp_J(g);
  // K = J (I - B)
  std::vector<std::vector<Int>> K(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int s = 0;
      for (int t = 0; t < n; ++t) s += J.at(i, t) * (Int(t == j ? 1 : 0) - B.at(t, j));
      K[i][j] = s;
    }
  int r = static_cast<int>(basis.size());
  std::vector<std::vector<Rat>> G(r, std::vector<Rat>(r, Rat(0)));
  for (int s = 0; s < r; ++s) {
    std::vector<Rat> u(n);
    for (int i = 0; i < n; ++i) u[i] = basis[s][i] + basis[s][n + i];
    // uK = u^T K
    std::vector<Rat> uK(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < n; ++j) uK[j] += u[i] * Rat(K[i][j]);
    }
    for (int t = 0; t < r; ++t) {
      Rat acc = 0;
      for (int j = 0; j < n; ++j) acc += uK[j] * basis[t][n + j];
      G[s][t] = acc;
    }
  }
  for (int s = 0; s < r; ++s)
    for (int t = s + 1; t < r; ++t)
      if (G[s][t] != G[t][s]) throw std::logic_error("Meyer Gram matrix not symmetric");
  return rational_signature(std::move(G));
}

long long signature_meyer(const Factorization& f) {
  if (f.surface.boundary != 0)
    throw std::invalid_argument("Meyer signature needs a closed fiber");
  int g = f.surface.genus;
  std::vector<SpMat> ms;
  long long seps = 0;
  for (const auto& l : f.letters) {
    SpMat step = transvection(l.curve.homology, l.exponent > 0 ? 1 : -1);
    for (int k = 0; k < std::abs(l.exponent); ++k) ms.push_back(step);
    if (l.curve.separating) seps += l.exponent;
  }
  if (ms.empty()) return 0;
  long long c = 0;
  SpMat P = ms[0];
  for (std::size_t k = 1; k < ms.size(); ++k) {
    c += meyer_tau(P, ms[k]);
    P = mul(P, ms[k]);
  }
  if (!(P == SpMat::identity(2 * g)))
    throw std::invalid_argument("Meyer signature: word is not a relator");
  return -c - seps;
}

AbelianGroup h1_from_letters(const Factorization& f) {
  std::vector<std::vector<Int>> cols;
  for (const auto& l : f.letters) cols.push_back(l.curve.homology);
  return abelian_invariants(cols, 2 * f.surface.genus);
}

InvariantReport make_report(long long e, long long sigma, const AbelianGroup& h1,
                            bool pi1_trivial_certified, const std::string& minimality,
                            std::vector<std::string> caveats) {
  InvariantReport r;
  r.e = e;
  r.sigma = sigma;
  r.h1 = h1;
  r.c1sq = 2 * e + 3 * sigma;
  r.b1 = h1.free_rank;
  long long b2 = e - 2 + 2 * r.b1;
  r.b2plus = (b2 + sigma) / 2;
  r.b2minus = (b2 - sigma) / 2;
  r.minimality = minimality;
  r.caveats = std::move(caveats);
  if (h1.trivial()) {
    r.label = "(" + std::to_string(r.b2plus) + "," + std::to_string(r.b2minus) + ")";
    if (!pi1_trivial_certified)
      r.caveats.push_back(
          "label assumes trivial fundamental group; only H1 = 0 is certified here");
  }
  return r;
}

}  // namespace lefib

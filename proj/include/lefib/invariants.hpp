#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "lefib/factorization.hpp"
#include "lefib/fpgroups.hpp"

namespace lefib {

using Rat = boost::multiprecision::cpp_rational;

// e = 2(2-2g) + n for a genus-g fibration over S^2 with n critical points.
long long euler_characteristic(const Factorization& f);

// Signature from the construction ledger: each history step carries its
// contribution (base relator signatures, -1 per separating twist, +1 per
// lantern substitution, fiber-sum additivity).  Throws if a step's
// contribution is unknown.
long long signature_endo_nagami(const Factorization& f);

// Meyer cocycle tau_g(A,B): signature of the pairing
// <(x1,y1),(x2,y2)> = (x1+y1)^T J (I-B) y2 on
// V = {(x,y) : (A^-1 - I)x + (B - I)y = 0}, computed in exact rationals.
int meyer_tau(const SpMat& A, const SpMat& B);

// sigma = -sum_k tau(P_{k-1}, M_k) - s, P = forward prefixes, s = signed
// count of separating letters.
long long signature_meyer(const Factorization& f);

// Signature of a symmetric rational matrix by congruence diagonalization.
int rational_signature(std::vector<std::vector<Rat>> G);

AbelianGroup h1_from_letters(const Factorization& f);

struct InvariantReport {
  long long e = 0, sigma = 0, c1sq = 0;
  long long b1 = 0, b2plus = 0, b2minus = 0;
  AbelianGroup h1;
  std::string label;       // "(b2+,b2-)" when H1 vanishes, else empty
  std::string minimality;  // evidence summary
  std::vector<std::string> caveats;
};

// Derives the remaining invariants from e, sigma and H1:
// c1^2 = 2e + 3s, b2 = e - 2 + 2b1, b2± = (b2 ± s)/2.
InvariantReport make_report(long long e, long long sigma, const AbelianGroup& h1,
                            bool pi1_trivial_certified, const std::string& minimality,
                            std::vector<std::string> caveats);

}  // namespace lefib

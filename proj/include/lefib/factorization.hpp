#pragma once

#include "lefib/core.hpp"
#include "lefib/sp.hpp"

namespace lefib {

struct TwistLetter {
  Curve curve;
  int exponent = 1;
};

struct HistoryStep {
  enum Kind {
    BaseRelator,
    GlobalConjugate,
    TwistedFiberSum,
    RelatorSubstitution,
    HurwitzMove,
    CapBoundary
  };
  Kind kind = BaseRelator;
  std::string detail;
  long long signature_delta = 0;  // contribution to the signature ledger
  bool delta_known = true;
};

std::string history_kind_name(HistoryStep::Kind k);

// Positive factorization of the identity (or of a boundary multitwist when
// the surface has boundary) in the mapping class group.
struct Factorization {
  Surface surface;
  std::vector<TwistLetter> letters;
  // target t_{delta_i}^{m_i} as (boundary index, multiplicity); empty target
  // means the factorization equals the identity
  std::vector<std::pair<int, int>> boundary_target;
  std::vector<HistoryStep> history;
  // declared geometric disjointness, by curve name (symmetric)
  std::vector<std::pair<std::string, std::string>> disjoint_pairs;
};

std::vector<ClassTwist> class_word(const Factorization& f);
// Checks curve data and, for closed fibers, that the product is the identity
// in Sp(2g,Z).  Returns problems (empty = ok).
std::vector<std::string> verify_factorization(const Factorization& f);
bool declared_disjoint(const Factorization& f, const std::string& a, const std::string& b);

// Elementary Hurwitz moves; both preserve the product.
// right at i: (t_u, t_v) -> (t_v, t_{T_v^-1(u)})
Factorization hurwitz_move_right(Factorization f, std::size_t i);
// left at i:  (t_u, t_v) -> (t_{T_u(v)}, t_u)
Factorization hurwitz_move_left(Factorization f, std::size_t i);

// Replace every letter t_c by t_{phi(c)} for the mapping class phi given as a
// twist word (leftmost twist applied last).
Factorization global_conjugate(Factorization f, const std::vector<TwistLetter>& phi,
                               const std::string& tag);

// Concatenation a * phi(b): the twisted fiber sum of the corresponding
// fibrations along a fiber, glued by phi.
Factorization twisted_fiber_sum(const Factorization& a, const Factorization& b,
                                const std::vector<TwistLetter>& phi, const std::string& tag);

struct SubstitutionSite {
  // adjacent transpositions (positions) applied first; each swap requires the
  // two curves to have zero pairing and declared disjointness
  std::vector<std::size_t> transpositions;
  std::size_t start = 0;  // segment start after the transpositions
  std::size_t count = 0;  // letters removed
  std::vector<TwistLetter> replacement;
  long long signature_delta = 0;
  std::string detail;
};

// Relator substitution: commutes letters into place by the certificate, then
// replaces the segment.  The removed segment and the replacement must have
// equal Sp products; throws std::invalid_argument otherwise.
Factorization relator_substitute(Factorization f, const SubstitutionSite& site);

// Cap off the boundary of a one-holed fiber: the target multitwist becomes
// the identity and the fibration gains a section of square -multiplicity.
Factorization cap_off(Factorization f);

}  // namespace lefib

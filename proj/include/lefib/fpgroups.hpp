#pragma once

#include <map>
#include <optional>

#include "lefib/core.hpp"

namespace lefib {

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;
};

// <a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>
Presentation surface_presentation(int genus);
// Surface group modulo the given vanishing cycles.
Presentation vanishing_cycle_quotient(int genus, const std::vector<Word>& cycles);

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;
  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {}
  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const IntMat&) const = default;
};

// Elementary operation log; replaying these on the input must reproduce D.
struct ElemOp {
  enum Type { SwapRows, SwapCols, AddRow, AddCol, NegateRow } type;
  int i = 0, j = 0;
  Int q = 0;  // AddRow: row i += q*row j; AddCol: col i += q*col j
};
void apply_elem_op(IntMat& M, const ElemOp& op);

struct SnfResult {
  IntMat D, U, V;  // D = U * M * V, U and V unimodular
  std::vector<ElemOp> ops;
};
SnfResult smith_normal_form(const IntMat& M);
IntMat mat_mul(const IntMat& A, const IntMat& B);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
  bool operator==(const AbelianGroup&) const = default;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
};

// Cokernel of the relator-column matrix on ngens generators.
AbelianGroup abelian_invariants(const std::vector<std::vector<Int>>& relator_columns, int ngens);
AbelianGroup abelianization(const Presentation& p);

struct TietzeResult {
  Presentation pres;
  bool budget_exhausted = false;
};
// Eliminates generators occurring exactly once in some relator; candidate
// order: shortest defining relator, then generator name.  Substitutions that
// would grow the total relator length past cap_factor times the original are
// skipped.
TietzeResult tietze_simplify(const Presentation& p, std::size_t cap_factor = 4);

// Certificate that the group is Z^r: after simplification every relator has
// zero exponent sum (so the relation subgroup lies inside the commutator
// subgroup) and each pair of surviving generators has its literal commutator
// among the relators (so it contains the commutator subgroup).  Returns r.
std::optional<int> recognize_free_abelian(const Presentation& p);

struct TCResult {
  std::optional<long> index;  // nullopt: coset limit reached before closing
  long cosets_defined = 0;
};
// HLT coset enumeration over all relators, with a full audit of the closed
// table (every relator must trace trivially from every live coset).
TCResult todd_coxeter(const Presentation& p, long max_cosets = 1000000);

// Free product of p1 and p2 with the listed generator pairs identified
// (first name from p1, second from p2).
Presentation amalgamate(const Presentation& p1, const Presentation& p2,
                        const std::vector<std::pair<std::string, std::string>>& identify);

}  // namespace lefib

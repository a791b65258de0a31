#include "lefib/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefib {

std::string history_kind_name(HistoryStep::Kind k) {
  switch (k) {
    case HistoryStep::BaseRelator: return "base-relator";
    case HistoryStep::GlobalConjugate: return "global-conjugate";
    case HistoryStep::TwistedFiberSum: return "twisted-fiber-sum";
    case HistoryStep::RelatorSubstitution: return "relator-substitution";
    case HistoryStep::HurwitzMove: return "hurwitz-move";
    case HistoryStep::CapBoundary: return "cap-boundary";
  }
  return "?";
}

std::vector<ClassTwist> class_word(const Factorization& f) {
  std::vector<ClassTwist> out;
  out.reserve(f.letters.size());
  for (const auto& l : f.letters) out.push_back({l.curve.homology, l.exponent});
  return out;
}

std::vector<std::string> verify_factorization(const Factorization& f) {
  std::vector<std::string> problems;
  for (const auto& l : f.letters) {
    if (!(l.curve.surface == f.surface))
      problems.push_back(l.curve.name + ": curve lives on a different surface");
    auto cp = validate_curve(l.curve);
    problems.insert(problems.end(), cp.begin(), cp.end());
    if (l.exponent == 0) problems.push_back(l.curve.name + ": zero exponent");
  }
  if (f.surface.boundary == 0) {
    if (!f.boundary_target.empty())
      problems.push_back("closed fiber cannot have a boundary multitwist target");
    else if (!verify_identity(class_word(f), f.surface.genus))
      problems.push_back("product is not the identity in Sp(2g,Z)");
  } else {
    for (const auto& [idx, mult] : f.boundary_target) {
      if (idx < 0 || idx >= f.surface.boundary)
        problems.push_back("boundary target index out of range");
      if (mult <= 0) problems.push_back("boundary multitwist multiplicity must be positive");
    }
    // boundary twists act trivially on the closed-basis homology
    if (!verify_identity(class_word(f), f.surface.genus))
      problems.push_back("product does not act trivially on closed-fiber homology");
  }
  return problems;
}

bool declared_disjoint(const Factorization& f, const std::string& a, const std::string& b) {
  if (a == b) return true;  // parallel copies; twists about one curve commute
  for (const auto& [x, y] : f.disjoint_pairs)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

namespace {

Curve transported(const Curve& base, const Curve& by, int exponent, bool inverse) {
  Curve out;
  out.surface = base.surface;
  out.homology = apply_transvection(by.homology, inverse ? -exponent : exponent, base.homology);
  out.separating = base.separating;
  out.name = base.name + (inverse ? "<" : ">") + by.name;
  out.provenance = "derived";
  return out;
}

}  // namespace

Factorization hurwitz_move_right(Factorization f, std::size_t i) {
  if (i + 1 >= f.letters.size()) throw std::out_of_range("hurwitz move out of range");
  TwistLetter u = f.letters[i], v = f.letters[i + 1];
  f.letters[i] = v;
  f.letters[i + 1] = {transported(u.curve, v.curve, v.exponent, true), u.exponent};
  f.history.push_back({HistoryStep::HurwitzMove,
                       "right at " + std::to_string(i), 0, true});
  return f;
}

Factorization hurwitz_move_left(Factorization f, std::size_t i) {
  if (i + 1 >= f.letters.size()) throw std::out_of_range("hurwitz move out of range");
  TwistLetter u = f.letters[i], v = f.letters[i + 1];
  f.letters[i] = {transported(v.curve, u.curve, u.exponent, false), v.exponent};
  f.letters[i + 1] = u;
  f.history.push_back({HistoryStep::HurwitzMove,
                       "left at " + std::to_string(i), 0, true});
  return f;
}

Factorization global_conjugate(Factorization f, const std::vector<TwistLetter>& phi,
                               const std::string& tag) {
  std::vector<ClassTwist> w;
  for (const auto& l : phi) w.push_back({l.curve.homology, l.exponent});
  SpMat M = evaluate_word(w, f.surface.genus);
  for (auto& l : f.letters) {
    l.curve.homology = lefib::apply(M, l.curve.homology);
    l.curve.name = tag + "(" + l.curve.name + ")";
    l.curve.pi1_word.reset();
    l.curve.provenance = "derived";
  }
  f.history.push_back({HistoryStep::GlobalConjugate, "by " + tag, 0, true});
  return f;
}

Factorization twisted_fiber_sum(const Factorization& a, const Factorization& b,
                                const std::vector<TwistLetter>& phi, const std::string& tag) {
  if (!(a.surface == b.surface)) throw std::invalid_argument("fiber sum: surfaces differ");
  if (a.surface.boundary != 0 || !a.boundary_target.empty() || !b.boundary_target.empty())
    throw std::invalid_argument("fiber sum requires closed fibers and identity targets");
  Factorization g = b;
  g.history.clear();
  if (!phi.empty() || !tag.empty()) g = global_conjugate(std::move(g), phi, tag);
  Factorization out = a;
  out.letters.insert(out.letters.end(), g.letters.begin(), g.letters.end());
  for (const auto& p : b.disjoint_pairs) out.disjoint_pairs.push_back(p);
  long long sigma_b = 0;
  bool known = true;
  for (const auto& h : b.history) {
    sigma_b += h.signature_delta;
    known = known && h.delta_known;
  }
  out.history.push_back({HistoryStep::TwistedFiberSum,
                         "with " + (tag.empty() ? std::string("untwisted copy") : tag) +
                             " conjugate summand",
                         sigma_b, known});
  return out;
}

Factorization relator_substitute(Factorization f, const SubstitutionSite& site) {
  for (std::size_t p : site.transpositions) {
    if (p + 1 >= f.letters.size()) throw std::out_of_range("transposition out of range");
    const Curve& x = f.letters[p].curve;
    const Curve& y = f.letters[p + 1].curve;
    if (pairing(x.homology, y.homology) != 0)
      throw std::invalid_argument("transposition " + x.name + "," + y.name +
                                  ": nonzero algebraic pairing");
    if (!declared_disjoint(f, x.name, y.name))
      throw std::invalid_argument("transposition " + x.name + "," + y.name +
                                  ": curves not declared disjoint");
    std::swap(f.letters[p], f.letters[p + 1]);
  }
  if (site.start + site.count > f.letters.size())
    throw std::out_of_range("substitution segment out of range");
  std::vector<ClassTwist> removed, inserted;
  for (std::size_t i = 0; i < site.count; ++i) {
    const auto& l = f.letters[site.start + i];
    removed.push_back({l.curve.homology, l.exponent});
  }
  for (const auto& l : site.replacement) inserted.push_back({l.curve.homology, l.exponent});
  if (evaluate_word(removed, f.surface.genus) != evaluate_word(inserted, f.surface.genus))
    throw std::invalid_argument("substitution does not preserve the Sp product");
  f.letters.erase(f.letters.begin() + site.start, f.letters.begin() + site.start + site.count);
  f.letters.insert(f.letters.begin() + site.start, site.replacement.begin(),
                   site.replacement.end());
  f.history.push_back({HistoryStep::RelatorSubstitution, site.detail, site.signature_delta,
                       true});
  return f;
}

Factorization cap_off(Factorization f) {
  if (f.surface.boundary != 1)
    throw std::invalid_argument("cap_off expects exactly one boundary component");
  int mult = f.boundary_target.empty() ? 0 : f.boundary_target.front().second;
  f.surface.boundary = 0;
  f.boundary_target.clear();
  for (auto& l : f.letters) l.curve.surface.boundary = 0;
  f.history.push_back({HistoryStep::CapBoundary,
                       mult > 0 ? "section of square -" + std::to_string(mult)
                                : "no boundary twist",
                       0, true});
  return f;
}

}  // namespace lefib

#include "lefib/fpgroups.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefib {

Presentation surface_presentation(int genus) {
  Presentation p;
  p.gens = surface_generators(genus);
  // b_g^-1 ... b_1^-1 (a_1 b_1 a_1^-1)(a_2 b_2 a_2^-1)...(a_g b_g a_g^-1)
  Word r;
  for (int i = genus; i >= 1; --i) r.push_back({2 * (i - 1) + 1, -1});
  for (int i = 1; i <= genus; ++i) {
    r.push_back({2 * (i - 1), 1});
    r.push_back({2 * (i - 1) + 1, 1});
    r.push_back({2 * (i - 1), -1});
  }
  p.relators.push_back(r);
  return p;
}

Presentation vanishing_cycle_quotient(int genus, const std::vector<Word>& cycles) {
  Presentation p = surface_presentation(genus);
  for (const auto& w : cycles) p.relators.push_back(free_reduce(w));
  return p;
}

void apply_elem_op(IntMat& M, const ElemOp& op) {
  switch (op.type) {
    case ElemOp::SwapRows:
      for (int t = 0; t < M.cols; ++t) std::swap(M.at(op.i, t), M.at(op.j, t));
      break;
    case ElemOp::SwapCols:
      for (int t = 0; t < M.rows; ++t) std::swap(M.at(t, op.i), M.at(t, op.j));
      break;
    case ElemOp::AddRow:
      for (int t = 0; t < M.cols; ++t) M.at(op.i, t) += op.q * M.at(op.j, t);
      break;
    case ElemOp::AddCol:
      for (int t = 0; t < M.rows; ++t) M.at(t, op.i) += op.q * M.at(t, op.j);
      break;
    case ElemOp::NegateRow:
      for (int t = 0; t < M.cols; ++t) M.at(op.i, t) = -M.at(op.i, t);
      break;
  }
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul dimension mismatch");
  IntMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

SnfResult smith_normal_form(const IntMat& Min) {
  SnfResult res;
  IntMat& M = res.D;
  M = Min;
  int r = M.rows, c = M.cols;
  res.U = IntMat(r, r);
  res.V = IntMat(c, c);
  for (int i = 0; i < r; ++i) res.U.at(i, i) = 1;
  for (int i = 0; i < c; ++i) res.V.at(i, i) = 1;

  auto record_row = [&](const ElemOp& op) {
    apply_elem_op(M, op);
    apply_elem_op(res.U, op);
    res.ops.push_back(op);
  };
  auto record_col = [&](const ElemOp& op) {
    apply_elem_op(M, op);
    apply_elem_op(res.V, op);
    res.ops.push_back(op);
  };

  int dim = std::min(r, c);
  for (int t = 0; t < dim; ++t) {
    for (;;) {
      // pivot: minimal-absolute-value nonzero entry of the trailing block
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j) {
          if (M.at(i, j) == 0) continue;
          Int av = abs(M.at(i, j));
          if (pi < 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing block is zero
      if (pi != t) record_row({ElemOp::SwapRows, t, pi, 0});
      if (pj != t) record_col({ElemOp::SwapCols, t, pj, 0});
      Int d = M.at(t, t);
      // a non-multiple below or right of the pivot: one reduction step, then
      // re-pivot (strictly decreases the pivot candidate)
      bool retry = false;
      for (int i = t + 1; i < r && !retry; ++i)
        if (M.at(i, t) % d != 0) {
          record_row({ElemOp::AddRow, i, t, -(M.at(i, t) / d)});
          retry = true;
        }
      if (retry) continue;
      for (int j = t + 1; j < c && !retry; ++j)
        if (M.at(t, j) % d != 0) {
          record_col({ElemOp::AddCol, j, t, -(M.at(t, j) / d)});
          retry = true;
        }
      if (retry) continue;
      // everything divisible: clear the pivot row and column exactly
      for (int i = t + 1; i < r; ++i)
        if (M.at(i, t) != 0) record_row({ElemOp::AddRow, i, t, -(M.at(i, t) / d)});
      for (int j = t + 1; j < c; ++j)
        if (M.at(t, j) != 0) record_col({ElemOp::AddCol, j, t, -(M.at(t, j) / d)});
      // enforce divisibility of the remaining block
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (M.at(i, j) % d != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        record_row({ElemOp::AddRow, t, bad, 1});
        continue;
      }
      if (d < 0) record_row({ElemOp::NegateRow, t, 0, 0});
      break;
    }
    if (M.at(t, t) == 0) break;
  }
  return res;
}

std::string AbelianGroup::str() const {
  if (trivial()) return "0";
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (free_rank == 1)
    add("Z");
  else if (free_rank > 1)
    add("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) add("Z/" + d.str());
  return out;
}

AbelianGroup abelian_invariants(const std::vector<std::vector<Int>>& relator_columns,
                                int ngens) {
  AbelianGroup g;
  if (relator_columns.empty()) {
    g.free_rank = ngens;
    return g;
  }
  IntMat M(ngens, static_cast<int>(relator_columns.size()));
  for (int j = 0; j < M.cols; ++j) {
    if (static_cast<int>(relator_columns[j].size()) != ngens)
      throw std::invalid_argument("relator column has wrong length");
    for (int i = 0; i < M.rows; ++i) M.at(i, j) = relator_columns[j][i];
  }
  SnfResult s = smith_normal_form(M);
  int rank = 0;
  for (int t = 0; t < std::min(M.rows, M.cols); ++t) {
    const Int& d = s.D.at(t, t);
    if (d == 0) break;
    ++rank;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = ngens - rank;
  return g;
}

AbelianGroup abelianization(const Presentation& p) {
  std::vector<std::vector<Int>> cols;
  for (const auto& r : p.relators)
    cols.push_back(exponent_vector(r, static_cast<int>(p.gens.size())));
  return abelian_invariants(cols, static_cast<int>(p.gens.size()));
}

namespace {

// canonical key of a relator under rotation and inversion, for dedupe
std::vector<std::pair<int, int>> cyc_key(const Word& w) {
  std::vector<std::pair<int, int>> best;
  bool first = true;
  for (const Word& ww : {w, inverse_word(w)}) {
    for (std::size_t r = 0; r < std::max<std::size_t>(ww.size(), 1); ++r) {
      std::vector<std::pair<int, int>> cand;
      for (std::size_t i = 0; i < ww.size(); ++i) {
        const auto& l = ww[(i + r) % ww.size()];
        cand.emplace_back(l.gen, l.sign);
      }
      if (first || cand < best) {
        best = cand;
        first = false;
      }
    }
  }
  return best;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, std::size_t cap_factor) {
  TietzeResult out;
  std::vector<std::string> gens = p.gens;
  std::vector<Word> rels;
  for (const auto& r : p.relators) {
    Word w = cyclic_reduce(r);
    if (!w.empty()) rels.push_back(w);
  }
  std::size_t total0 = 0;
  for (const auto& r : rels) total0 += r.size();
  if (total0 == 0) total0 = 1;

  for (;;) {
    // drop duplicates (as cyclic words up to inversion)
    {
      std::vector<Word> uniq;
      std::vector<std::vector<std::pair<int, int>>> keys;
      for (const auto& r : rels) {
        auto k = cyc_key(r);
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
          keys.push_back(k);
          uniq.push_back(r);
        }
      }
      rels = uniq;
    }
    // elimination candidates: generator occurring exactly once in a relator
    struct Cand {
      std::size_t len;
      std::string name;
      std::size_t ri;
      int gen;
      bool operator<(const Cand& o) const {
        return std::tie(len, name, ri) < std::tie(o.len, o.name, o.ri);
      }
    };
    std::vector<Cand> cands;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      std::map<int, int> cnt;
      for (const auto& l : rels[ri]) cnt[l.gen]++;
      for (const auto& [g, c] : cnt)
        if (c == 1) cands.push_back({rels[ri].size(), gens[g], ri, g});
    }
    if (cands.empty()) break;
    std::sort(cands.begin(), cands.end());
    bool applied = false;
    for (const auto& cand : cands) {
      const Word& r = rels[cand.ri];
      std::size_t pos = 0;
      while (r[pos].gen != cand.gen) ++pos;
      int s = r[pos].sign;
      Word w(r.begin() + pos + 1, r.end());
      w.insert(w.end(), r.begin(), r.begin() + pos);
      Word defn = (s == 1) ? inverse_word(w) : w;
      // substitute into all other relators
      std::vector<Word> next;
      std::size_t total = 0;
      for (std::size_t rj = 0; rj < rels.size(); ++rj) {
        if (rj == cand.ri) continue;
        Word nw;
        for (const auto& l : rels[rj]) {
          if (l.gen == cand.gen) {
            const Word& rep = (l.sign == 1) ? defn : inverse_word(defn);
            nw.insert(nw.end(), rep.begin(), rep.end());
          } else {
            nw.push_back(l);
          }
        }
        nw = cyclic_reduce(nw);
        total += nw.size();
        if (!nw.empty()) next.push_back(nw);
      }
      if (total > cap_factor * total0) {
        out.budget_exhausted = true;
        continue;
      }
      // remove the generator and reindex
      std::vector<int> remap(gens.size(), -1);
      std::vector<std::string> ngens;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (static_cast<int>(i) == cand.gen) continue;
        remap[i] = static_cast<int>(ngens.size());
        ngens.push_back(gens[i]);
      }
      for (auto& rr : next)
        for (auto& l : rr) l.gen = remap[l.gen];
      gens = ngens;
      rels = next;
      applied = true;
      out.budget_exhausted = false;
      break;
    }
    if (!applied) break;
  }
  out.pres.gens = gens;
  out.pres.relators = rels;
  return out;
}

std::optional<int> recognize_free_abelian(const Presentation& p) {
  TietzeResult t = tietze_simplify(p);
  const Presentation& q = t.pres;
  int n = static_cast<int>(q.gens.size());
  for (const auto& r : q.relators) {
    auto v = exponent_vector(r, n);
    if (!std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
      return std::nullopt;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Word comm{{i, 1}, {j, 1}, {i, -1}, {j, -1}};
      bool found = false;
      for (const auto& r : q.relators)
        if (cyclically_equal(r, comm)) {
          found = true;
          break;
        }
      if (!found) return std::nullopt;
    }
  return n;
}

namespace {

// HLT coset enumerator; cosets are 1-based, letter code 2*gen + (sign<0).
class CosetTable {
 public:
  CosetTable(int ngens, std::vector<std::vector<int>> rels, long max_cosets)
      : nl_(2 * ngens), rels_(std::move(rels)), maxc_(max_cosets) {
    table_.push_back(std::vector<long>(nl_, 0));
    rep_.push_back(1);
  }

  // returns live coset count, or nullopt if the limit was hit
  std::optional<long> run() {
    for (long i = 1; i <= static_cast<long>(table_.size()); ++i) {
      if (find(i) != i) continue;
      for (const auto& rel : rels_) {
        if (!trace(i, rel)) return std::nullopt;
        if (find(i) != i) break;
      }
    }
    std::vector<long> live;
    for (long c = 1; c <= static_cast<long>(table_.size()); ++c)
      if (find(c) == c) live.push_back(c);
    for (long c : live)
      for (int l = 0; l < nl_; ++l)
        if (table_[c - 1][l] == 0) return std::nullopt;  // a generator misses all relators
    // audit: every relator must trace trivially from every live coset
    for (long c : live)
      for (const auto& rel : rels_) {
        long f = c;
        for (int l : rel) {
          f = table_[find(f) - 1][l];
          if (f == 0) throw std::logic_error("audit: incomplete table");
          f = find(f);
        }
        if (f != find(c)) throw std::logic_error("audit: relator does not close");
      }
    return static_cast<long>(live.size());
  }

  long defined() const { return static_cast<long>(table_.size()); }

 private:
  int nl_;
  std::vector<std::vector<int>> rels_;
  long maxc_;
  std::vector<std::vector<long>> table_;
  std::vector<long> rep_;

  static int inv(int l) { return l ^ 1; }

  long find(long c) {
    long r = c;
    while (rep_[r - 1] != r) r = rep_[r - 1];
    while (rep_[c - 1] != c) {
      long nx = rep_[c - 1];
      rep_[c - 1] = r;
      c = nx;
    }
    return r;
  }

  bool newcoset(long& out) {
    if (static_cast<long>(table_.size()) >= maxc_) return false;
    table_.push_back(std::vector<long>(nl_, 0));
    rep_.push_back(static_cast<long>(table_.size()));
    out = static_cast<long>(table_.size());
    return true;
  }

  void deduce(long a, int l, long b) {
    auto& ta = table_[a - 1];
    if (ta[l] == 0)
      ta[l] = b;
    else if (find(ta[l]) != find(b)) {
      coincide(ta[l], b);
      return;
    }
    auto& tb = table_[b - 1];
    int li = inv(l);
    if (tb[li] == 0)
      tb[li] = a;
    else if (find(tb[li]) != find(a))
      coincide(tb[li], a);
  }

  void coincide(long a, long b) {
    std::vector<std::pair<long, long>> stack{{a, b}};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      rep_[y - 1] = x;
      auto& ty = table_[y - 1];
      auto& tx = table_[x - 1];
      for (int l = 0; l < nl_; ++l) {
        long c = ty[l];
        if (!c) continue;
        c = find(c);
        if (tx[l] == 0) {
          tx[l] = c;
        } else if (find(tx[l]) != c) {
          stack.emplace_back(tx[l], c);
        }
        auto& tc = table_[c - 1];
        int li = inv(l);
        if (tc[li] == 0)
          tc[li] = x;
        else if (find(tc[li]) != x)
          stack.emplace_back(tc[li], x);
      }
    }
  }

  // HLT trace of one relator from one coset, defining cosets to fill gaps;
  // returns false if the coset limit was reached
  bool trace(long c, const std::vector<int>& rel) {
    for (;;) {
      long f = find(c);
      std::size_t i = 0, n = rel.size();
      while (i < n) {
        f = find(f);
        long nx = table_[f - 1][rel[i]];
        if (nx == 0) break;
        f = nx;
        ++i;
      }
      if (i == n) {
        f = find(f);
        if (f != find(c)) coincide(f, c);
        return true;
      }
      long b = find(c);
      std::size_t j = n - 1;
      bool met = false;
      while (true) {
        b = find(b);
        long pv = table_[b - 1][inv(rel[j])];
        if (pv == 0) break;
        b = pv;
        if (j == i) {
          met = true;
          break;
        }
        --j;
      }
      if (met) {
        coincide(find(f), find(b));
        return true;
      }
      if (i == j) {
        deduce(find(f), rel[i], find(b));
        return true;
      }
      long nc;
      if (!newcoset(nc)) return false;
      deduce(find(f), rel[i], nc);
      // retrace the same relator from c
    }
  }
};

}  // namespace

TCResult todd_coxeter(const Presentation& p, long max_cosets) {
  std::vector<std::vector<int>> rels;
  for (const auto& r : p.relators) {
    Word w = free_reduce(r);
    std::vector<int> enc;
    for (const auto& l : w) enc.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
    if (!enc.empty()) rels.push_back(enc);
  }
  CosetTable tab(static_cast<int>(p.gens.size()), rels, max_cosets);
  TCResult res;
  res.index = tab.run();
  res.cosets_defined = tab.defined();
  return res;
}

Presentation amalgamate(const Presentation& p1, const Presentation& p2,
                        const std::vector<std::pair<std::string, std::string>>& identify) {
  Presentation out = p1;
  auto index_of = [](const Presentation& p, const std::string& n) {
    auto it = std::find(p.gens.begin(), p.gens.end(), n);
    if (it == p.gens.end()) throw std::invalid_argument("unknown generator " + n);
    return static_cast<int>(it - p.gens.begin());
  };
  std::vector<int> remap(p2.gens.size(), -1);
  for (const auto& [n1, n2] : identify) remap[index_of(p2, n2)] = index_of(p1, n1);
  for (std::size_t i = 0; i < p2.gens.size(); ++i) {
    if (remap[i] >= 0) continue;
    std::string name = p2.gens[i];
    while (std::find(out.gens.begin(), out.gens.end(), name) != out.gens.end()) name += "'";
    remap[i] = static_cast<int>(out.gens.size());
    out.gens.push_back(name);
  }
  for (const auto& r : p2.relators) {
    Word w;
    for (const auto& l : r) w.push_back({remap[l.gen], l.sign});
    out.relators.push_back(w);
  }
  return out;
}

}  // namespace lefib

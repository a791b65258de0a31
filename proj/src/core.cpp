#include "lefib/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lefib {

bool is_zero(const HomologyClass& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

HomologyClass zero_class(int genus) { return HomologyClass(2 * genus, Int(0)); }

ParseError::ParseError(std::size_t off, const std::string& msg)
    : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}

std::vector<std::string> surface_generators(int genus) {
  std::vector<std::string> out;
  for (int i = 1; i <= genus; ++i) {
    out.push_back("a" + std::to_string(i));
    out.push_back("b" + std::to_string(i));
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  const std::vector<std::string>& gens;
  std::vector<int> order;  // generator indices, longest name first

  Parser(const std::string& text, const std::vector<std::string>& g) : s(text), gens(g) {
    order.resize(gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return gens[a].size() > gens[b].size(); });
  }

  void skip_space(std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  long parse_exponent(std::size_t& i) {
    if (i >= s.size() || s[i] != '^') return 1;
    std::size_t start = ++i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(start, "malformed exponent");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }

  void append_power(Word& out, const Word& w, long e) {
    Word base = e >= 0 ? w : inverse_word(w);
    for (long k = 0; k < std::abs(e); ++k) out.insert(out.end(), base.begin(), base.end());
  }

  Word parse_seq(std::size_t& i, char stop) {
    Word out;
    while (i < s.size()) {
      char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (stop && c == stop) return out;
      if (c == '[') {
        std::size_t open = i++;
        Word x = parse_seq(i, ',');
        if (i >= s.size()) throw ParseError(open, "unterminated commutator");
        ++i;  // ','
        Word y = parse_seq(i, ']');
        if (i >= s.size()) throw ParseError(open, "unterminated commutator");
        ++i;  // ']'
        Word comm = x;
        comm.insert(comm.end(), y.begin(), y.end());
        Word xi = inverse_word(x), yi = inverse_word(y);
        comm.insert(comm.end(), xi.begin(), xi.end());
        comm.insert(comm.end(), yi.begin(), yi.end());
        append_power(out, comm, parse_exponent(i));
        continue;
      }
      int gi = -1;
      for (int cand : order) {
        const std::string& nm = gens[cand];
        if (!nm.empty() && s.compare(i, nm.size(), nm) == 0) {
          // avoid matching "a1" as prefix of "a12"
          std::size_t end = i + nm.size();
          if (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])) &&
              std::isdigit(static_cast<unsigned char>(nm.back())))
            continue;
          gi = cand;
          break;
        }
      }
      if (gi < 0) throw ParseError(i, "unknown generator");
      i += gens[gi].size();
      append_power(out, Word{{gi, 1}}, parse_exponent(i));
    }
    if (stop) throw ParseError(s.size(), "unexpected end of word");
    return out;
  }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  Parser p(text, gens);
  std::size_t i = 0;
  return free_reduce(p.parse_seq(i, '\0'));
}

Word parse_surface_word(const std::string& text, int genus) {
  return parse_word(text, surface_generators(genus));
}

std::string print_word(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += gens[w[i].gen];
    long e = static_cast<long>(j - i) * w[i].sign;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word free_reduce(Word w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().sign == -w.back().sign) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(std::move(w));
  }
  return w;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

bool cyclically_equal(const Word& a, const Word& b) {
  Word x = cyclic_reduce(a), y = cyclic_reduce(b);
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (const Word& cand : {y, inverse_word(y)}) {
    for (std::size_t r = 0; r < cand.size(); ++r) {
      bool eq = true;
      for (std::size_t i = 0; i < x.size() && eq; ++i)
        eq = (x[i] == cand[(i + r) % cand.size()]);
      if (eq) return true;
    }
  }
  return false;
}

std::vector<Int> exponent_vector(const Word& w, int ngens) {
  std::vector<Int> v(ngens, Int(0));
  for (const auto& l : w) v[l.gen] += l.sign;
  return v;
}

HomologyClass abelianize(const Word& w, int genus) { return exponent_vector(w, 2 * genus); }

std::vector<std::string> validate_curve(const Curve& c) {
  std::vector<std::string> problems;
  if (c.surface.genus < 1) problems.push_back(c.name + ": genus must be positive");
  if (static_cast<int>(c.homology.size()) != 2 * c.surface.genus)
    problems.push_back(c.name + ": homology class has wrong length");
  else if (c.separating != is_zero(c.homology))
    problems.push_back(c.name + ": separating flag inconsistent with homology class");
  if (c.provenance != "paper" && c.provenance != "derived")
    problems.push_back(c.name + ": unknown provenance '" + c.provenance + "'");
  if (c.pi1_word) {
    try {
      Word w = parse_surface_word(*c.pi1_word, c.surface.genus);
      HomologyClass ab = abelianize(w, c.surface.genus);
      HomologyClass neg = ab;
      for (auto& x : neg) x = -x;
      if (ab != c.homology && neg != c.homology)
        problems.push_back(c.name + ": pi1 word does not abelianize to the homology class");
    } catch (const ParseError& e) {
      problems.push_back(c.name + ": pi1 word parse error: " + e.what());
    }
  }
  return problems;
}

}  // namespace lefib

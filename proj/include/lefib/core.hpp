#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefib {

using Int = boost::multiprecision::cpp_int;

struct Surface {
  int genus = 0;
  int boundary = 0;
  bool operator==(const Surface&) const = default;
};

// Homology basis a1,b1,...,ag,bg with <ai,bi> = +1; a_i -> index 2(i-1),
// b_i -> index 2(i-1)+1.
using HomologyClass = std::vector<Int>;

bool is_zero(const HomologyClass& v);
HomologyClass zero_class(int genus);

struct GenLetter {
  int gen = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const GenLetter&) const = default;
};
using Word = std::vector<GenLetter>;

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg);
};

// Generators of a genus-g surface group, in index order.
std::vector<std::string> surface_generators(int genus);

// Word grammar: whitespace-separated generator tokens with optional ^n
// (n any integer), plus nested commutators [x,y] where x,y are words.
// Unknown tokens raise ParseError carrying the byte offset.
Word parse_word(const std::string& text, const std::vector<std::string>& gens);
Word parse_surface_word(const std::string& text, int genus);
std::string print_word(const Word& w, const std::vector<std::string>& gens);

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse_word(const Word& w);
// Equality as cyclic words up to inversion (conjugacy class of r or r^-1).
bool cyclically_equal(const Word& a, const Word& b);

std::vector<Int> exponent_vector(const Word& w, int ngens);
HomologyClass abelianize(const Word& w, int genus);

struct Curve {
  std::string name;
  Surface surface;
  HomologyClass homology;
  bool separating = false;
  std::optional<std::string> pi1_word;
  std::string provenance = "paper";  // "paper" | "derived"
};

// Structural checks; returns a list of human-readable problems (empty = ok).
std::vector<std::string> validate_curve(const Curve& c);

}  // namespace lefib

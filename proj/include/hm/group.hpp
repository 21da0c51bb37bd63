#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hm {

/// A finite group given by its full multiplication table.
///
/// Elements are indices 0..order-1 into `names`. The table is validated
/// exhaustively (associativity, two-sided identity, two-sided inverses),
/// which is cheap at the orders handled here.
struct FiniteGroup {
  int order = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = 0;
  std::vector<int> inverses;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverses[a]; }

  /// Element index for a display name; -1 if absent.
  int element(const std::string& name) const;

  /// Throws std::invalid_argument if the table is not a group.
  void validate() const;

  /// Smallest subgroup containing `gens`, as a sorted list of elements.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

  bool generates(const std::vector<int>& gens) const {
    return static_cast<int>(generated_subgroup(gens).size()) == order;
  }

  bool same_as(const FiniteGroup& other) const {
    return order == other.order && table == other.table;
  }
};

/// The 8-element quaternion group {1,-1,i,-i,j,-j,k,-k} under the Hamilton
/// product (i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j).
FiniteGroup quaternion_group();

/// A word over the generators of a presentation: a sequence of
/// (generator index, sign) letters, sign -1 meaning the inverse.
struct Word {
  struct Letter {
    int gen;
    int sign;  // +1 or -1
    bool operator==(const Letter&) const = default;
  };
  std::vector<Letter> letters;

  Word inverse() const;
  Word concat(const Word& other) const;
  bool operator==(const Word&) const = default;
};

/// Generators and relations, with relations stored as equations lhs = rhs.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<Word, Word>> relations;

  /// Relator form lhs * rhs^-1 of relation r.
  Word relator(int r) const;
};

/// Evaluates a word in G under an assignment generator -> element.
/// Throws std::invalid_argument on an unassigned generator (-1 entry or
/// out-of-range index).
int eval_word(const FiniteGroup& g, const std::vector<int>& assignment, const Word& w);

/// Parses `<g1,g2,... | w1=w1', w2=w2'>` with `^n` powers (n may be
/// negative) and `1` for the empty word. Generator names are matched
/// greedily (longest first), so multi-character names work as long as
/// they are unambiguous. Throws std::invalid_argument on syntax errors.
Presentation parse_presentation(const std::string& text);

std::string to_string(const Word& w, const std::vector<std::string>& generator_names);
std::string to_string(const Presentation& p);

}  // namespace hm

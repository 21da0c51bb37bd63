#include "hm/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hm {

int FiniteGroup::element(const std::string& name) const {
  for (int i = 0; i < order; ++i)
    if (names[i] == name) return i;
  return -1;
}

void FiniteGroup::validate() const {
  if (order <= 0) throw std::invalid_argument("group: empty");
  if (static_cast<int>(names.size()) != order || static_cast<int>(table.size()) != order ||
      static_cast<int>(inverses.size()) != order)
    throw std::invalid_argument("group: inconsistent field sizes");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order) throw std::invalid_argument("group: ragged table");
    for (int v : row)
      if (v < 0 || v >= order) throw std::invalid_argument("group: table entry out of range");
  }
  for (int a = 0; a < order; ++a) {
    if (table[identity][a] != a || table[a][identity] != a)
      throw std::invalid_argument("group: identity is not neutral");
    if (table[a][inverses[a]] != identity || table[inverses[a]][a] != identity)
      throw std::invalid_argument("group: bad inverse");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("group: not associative");
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> closure{identity};
  for (int g : gens) closure.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(closure.begin(), closure.end());
    for (int a : current)
      for (int b : current)
        if (closure.insert(table[a][b]).second) grew = true;
  }
  return {closure.begin(), closure.end()};
}

FiniteGroup quaternion_group() {
  // Index = 2*axis + (negative ? 1 : 0), axes ordered 1, i, j, k.
  FiniteGroup q;
  q.order = 8;
  q.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  q.identity = 0;

  // basis_mul[a][b] = (sign, axis) of the Hamilton product of basis axes.
  struct SA {
    int sign, axis;
  };
  SA basis[4][4];
  for (int a = 0; a < 4; ++a) {
    basis[0][a] = {+1, a};
    basis[a][0] = {+1, a};
  }
  basis[1][1] = {-1, 0};
  basis[2][2] = {-1, 0};
  basis[3][3] = {-1, 0};
  basis[1][2] = {+1, 3};  // ij = k
  basis[2][1] = {-1, 3};  // ji = -k
  basis[2][3] = {+1, 1};  // jk = i
  basis[3][2] = {-1, 1};  // kj = -i
  basis[3][1] = {+1, 2};  // ki = j
  basis[1][3] = {-1, 2};  // ik = -j

  q.table.assign(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sx = (x & 1) ? -1 : +1, ax = x >> 1;
      int sy = (y & 1) ? -1 : +1, ay = y >> 1;
      SA p = basis[ax][ay];
      int sign = sx * sy * p.sign;
      q.table[x][y] = 2 * p.axis + (sign < 0 ? 1 : 0);
    }

  q.inverses.assign(8, -1);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      if (q.table[x][y] == q.identity) q.inverses[x] = y;
  q.validate();
  return q;
}

Word Word::inverse() const {
  Word r;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r.letters.push_back({it->gen, -it->sign});
  return r;
}

Word Word::concat(const Word& other) const {
  Word r = *this;
  r.letters.insert(r.letters.end(), other.letters.begin(), other.letters.end());
  return r;
}

Word Presentation::relator(int r) const {
  return relations[r].first.concat(relations[r].second.inverse());
}

int eval_word(const FiniteGroup& g, const std::vector<int>& assignment, const Word& w) {
  int acc = g.identity;
  for (const auto& l : w.letters) {
    if (l.gen < 0 || l.gen >= static_cast<int>(assignment.size()) || assignment[l.gen] < 0)
      throw std::invalid_argument("eval_word: unassigned generator index " + std::to_string(l.gen));
    int e = assignment[l.gen];
    acc = g.mul(acc, l.sign > 0 ? e : g.inv(e));
  }
  return acc;
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// Longest generator name matching s at pos, or -1.
int match_generator(const std::string& s, size_t pos, const std::vector<std::string>& gens) {
  int best = -1;
  size_t best_len = 0;
  for (size_t g = 0; g < gens.size(); ++g) {
    const std::string& name = gens[g];
    if (name.size() > best_len && s.compare(pos, name.size(), name) == 0) {
      best = static_cast<int>(g);
      best_len = name.size();
    }
  }
  return best;
}

Word parse_word(const std::string& s, const std::vector<std::string>& gens) {
  Word w;
  size_t pos = 0;
  skip_ws(s, pos);
  if (pos < s.size() && s[pos] == '1' && match_generator(s, pos, gens) < 0) {
    ++pos;
    skip_ws(s, pos);
    if (pos != s.size()) throw std::invalid_argument("parse: trailing input after '1' in word '" + s + "'");
    return w;  // empty word
  }
  while (pos < s.size()) {
    int g = match_generator(s, pos, gens);
    if (g < 0) throw std::invalid_argument("parse: unknown symbol at '" + s.substr(pos) + "'");
    pos += gens[g].size();
    long exponent = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("parse: bad exponent in word '" + s + "'");
      exponent = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        exponent = exponent * 10 + (s[pos++] - '0');
      if (neg) exponent = -exponent;
    }
    int sign = exponent >= 0 ? +1 : -1;
    for (long r = 0; r < (exponent >= 0 ? exponent : -exponent); ++r) w.letters.push_back({g, sign});
    skip_ws(s, pos);
  }
  return w;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  size_t open = text.find('<');
  size_t close = text.rfind('>');
  if (open == std::string::npos || close == std::string::npos || close <= open)
    throw std::invalid_argument("parse: presentation must be wrapped in <...>");
  std::string body = text.substr(open + 1, close - open - 1);
  size_t bar = body.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("parse: missing '|' separator");

  Presentation p;
  std::stringstream gens(body.substr(0, bar));
  std::string tok;
  while (std::getline(gens, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    p.generators.push_back(tok.substr(a, b - a + 1));
  }
  if (p.generators.empty()) throw std::invalid_argument("parse: no generators");

  std::stringstream rels(body.substr(bar + 1));
  while (std::getline(rels, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t eq = tok.find('=');
    std::string lhs = eq == std::string::npos ? tok : tok.substr(0, eq);
    std::string rhs = eq == std::string::npos ? "1" : tok.substr(eq + 1);
    p.relations.emplace_back(parse_word(lhs, p.generators), parse_word(rhs, p.generators));
  }
  return p;
}

std::string to_string(const Word& w, const std::vector<std::string>& generator_names) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters) {
    out += generator_names[l.gen];
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string to_string(const Presentation& p) {
  std::string out = "<";
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ",";
    out += p.generators[i];
  }
  out += " | ";
  for (size_t r = 0; r < p.relations.size(); ++r) {
    if (r) out += ", ";
    out += to_string(p.relations[r].first, p.generators);
    out += "=";
    out += to_string(p.relations[r].second, p.generators);
  }
  out += ">";
  return out;
}

}  // namespace hm

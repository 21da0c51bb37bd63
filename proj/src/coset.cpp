#include "hm/coset.hpp"

#include "hm/errors.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace hm {

namespace {

// HLT enumeration state over the trivial subgroup. Table entries are set and
// cleared strictly in forward/backward pairs, so tau(a,x) = b always implies
// tau(b,x^-1) = a; coincidence processing relies on that invariant.
struct Enumerator {
  int ncols;
  int max_cosets;
  std::vector<std::vector<int>> tau;  // -1 = undefined
  std::vector<int> parent;            // union-find, smaller index wins
  std::deque<int> dead_queue;
  long merges = 0;

  Enumerator(int ngens, int budget) : ncols(2 * ngens), max_cosets(budget) { define_root(); }

  static int inv_col(int col) { return col ^ 1; }

  int rep(int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  bool live(int c) { return rep(c) == c; }

  void define_root() {
    tau.emplace_back(ncols, -1);
    parent.push_back(0);
  }

  // New coset reached from alpha along column x; both entries were undefined.
  int define(int alpha, int x) {
    if (static_cast<int>(tau.size()) >= max_cosets)
      throw BudgetExceeded("todd_coxeter: coset budget exhausted (" + std::to_string(max_cosets) +
                           "); enumeration inconclusive");
    int n = static_cast<int>(tau.size());
    tau.emplace_back(ncols, -1);
    parent.push_back(n);
    tau[alpha][x] = n;
    tau[n][inv_col(x)] = alpha;
    return n;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    dead_queue.push_back(b);
    ++merges;
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!dead_queue.empty()) {
      int gamma = dead_queue.front();
      dead_queue.pop_front();
      for (int x = 0; x < ncols; ++x) {
        int delta = tau[gamma][x];
        if (delta == -1) continue;
        tau[delta][inv_col(x)] = -1;  // pointed back at gamma
        int mu = rep(gamma);
        int nu = rep(delta);
        if (tau[mu][x] != -1)
          merge(nu, tau[mu][x]);
        else if (tau[nu][inv_col(x)] != -1)
          merge(mu, tau[nu][inv_col(x)]);
        else {
          tau[mu][x] = nu;
          tau[nu][inv_col(x)] = mu;
        }
      }
    }
  }

  // Scans relator `w` (column sequence) from coset alpha, filling gaps with
  // fresh cosets. May merge cosets; callers must re-check liveness.
  void scan_and_fill(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = alpha;
    int b = alpha;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && tau[f][w[i]] != -1) f = tau[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tau[b][inv_col(w[j])] != -1) b = tau[b][inv_col(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {  // deduction: both entries undefined here
        tau[f][w[i]] = b;
        tau[b][inv_col(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  // Plain scan used for the closure check; completes only on a full table.
  void scan(int alpha, const std::vector<int>& w) {
    int cur = alpha;
    for (int x : w) {
      cur = tau[cur][x];
      if (cur == -1) throw std::logic_error("todd_coxeter: scan hit undefined entry");
    }
    if (cur != alpha) coincidence(cur, alpha);
  }
};

}  // namespace

bool CosetTable::closed_under(const Presentation& p) const {
  for (const auto& row : rows)
    for (int v : row)
      if (v < 0 || v >= static_cast<int>(rows.size())) return false;
  for (size_t r = 0; r < p.relations.size(); ++r) {
    Word rel = p.relator(static_cast<int>(r));
    for (size_t c = 0; c < rows.size(); ++c) {
      int cur = static_cast<int>(c);
      for (const auto& l : rel.letters) cur = rows[cur][column_of(l.gen, l.sign)];
      if (cur != static_cast<int>(c)) return false;
    }
  }
  return true;
}

EnumerationResult todd_coxeter(const Presentation& p, int max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  int ngens = static_cast<int>(p.generators.size());
  if (ngens == 0) throw std::invalid_argument("todd_coxeter: presentation has no generators");

  std::vector<std::vector<int>> relators;
  for (size_t r = 0; r < p.relations.size(); ++r) {
    Word rel = p.relator(static_cast<int>(r));
    std::vector<int> cols;
    cols.reserve(rel.letters.size());
    for (const auto& l : rel.letters) {
      if (l.gen < 0 || l.gen >= ngens)
        throw std::invalid_argument("todd_coxeter: generator index out of range");
      cols.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
    }
    relators.push_back(std::move(cols));
  }

  Enumerator e(ngens, max_cosets);
  for (int pass = 0;; ++pass) {
    if (pass > 64) throw std::logic_error("todd_coxeter: did not stabilize");
    for (int c = 0; c < static_cast<int>(e.tau.size()); ++c) {
      if (!e.live(c)) continue;
      for (const auto& rel : relators) {
        e.scan_and_fill(c, rel);
        if (!e.live(c)) break;
      }
      if (!e.live(c)) continue;
      for (int x = 0; x < e.ncols; ++x) {
        if (e.tau[c][x] == -1) e.define(c, x);
        if (!e.live(c)) break;
      }
    }
    // Re-scan everything; a coincidence here restarts the filling pass.
    bool stable = true;
    for (int c = 0; c < static_cast<int>(e.tau.size()) && stable; ++c) {
      if (!e.live(c)) continue;
      for (int x = 0; x < e.ncols && stable; ++x)
        if (e.tau[c][x] == -1 || !e.live(e.tau[c][x])) stable = false;
      for (const auto& rel : relators) {
        if (!stable) break;
        long before = e.merges;
        e.scan(c, rel);
        if (e.merges != before) stable = false;
      }
    }
    if (stable) break;
  }

  // Compact live cosets in discovery order.
  std::vector<int> live;
  std::vector<int> index(e.tau.size(), -1);
  for (int c = 0; c < static_cast<int>(e.tau.size()); ++c)
    if (e.live(c)) {
      index[c] = static_cast<int>(live.size());
      live.push_back(c);
    }

  EnumerationResult result;
  result.order = static_cast<int>(live.size());
  result.table.num_generators = ngens;
  result.table.rows.reserve(live.size());
  for (int c : live) {
    std::vector<int> row(e.ncols, -1);
    for (int x = 0; x < e.ncols; ++x) {
      int d = e.tau[c][x];
      if (d == -1 || !e.live(d)) throw std::logic_error("todd_coxeter: incomplete table");
      row[x] = index[d];
    }
    result.table.rows.push_back(std::move(row));
  }
  if (!result.table.closed_under(p)) throw std::logic_error("todd_coxeter: table not closed");
  return result;
}

}  // namespace hm

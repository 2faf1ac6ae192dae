#pragma once

// Brute-force reference model used only by the tests. Groups are explicit
// element sets of int64 numerator vectors over D = |det A|, closed under
// addition by breadth-first search; nothing here touches lattices, Hermite
// or Smith forms.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "saito/burnside.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;
using ElementSet = std::set<Vec>;
using Matrix = std::vector<Vec>;

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline Matrix toMatrix(const saito::IntMatrix& m) {
  Matrix out(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Matrix minorOf(const Matrix& a, std::size_t r, std::size_t c) {
  Matrix m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == r) continue;
    Vec row;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != c) row.push_back(a[i][j]);
    m.push_back(row);
  }
  return m;
}

// Laplace expansion along the first row.
inline std::int64_t det(const Matrix& a) {
  if (a.empty()) return 1;
  if (a.size() == 1) return a[0][0];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[0][j] == 0) continue;
    const std::int64_t c = det(minorOf(a, 0, j));
    s += (j % 2 ? -1 : 1) * a[0][j] * c;
  }
  return s;
}

inline Matrix adjugate(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix adj(n, Vec(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[j][i] = ((i + j) % 2 ? -1 : 1) * det(minorOf(a, i, j));
  return adj;
}

inline Vec add(const Vec& x, const Vec& y, std::int64_t d) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = mod(x[i] + y[i], d);
  return z;
}

inline Vec scale(const Vec& x, std::int64_t k, std::int64_t d) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = mod(x[i] * k, d);
  return z;
}

inline ElementSet closure(const std::vector<Vec>& gens, std::size_t n, std::int64_t d) {
  ElementSet seen{Vec(n, 0)};
  std::vector<Vec> frontier{Vec(n, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Vec y = add(x, g, d);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return seen;
}

inline std::int64_t elementOrder(const Vec& x, std::int64_t d) {
  Vec y = x;
  std::int64_t k = 1;
  while (std::any_of(y.begin(), y.end(), [](std::int64_t v) { return v != 0; })) {
    y = add(y, x, d);
    ++k;
  }
  return k;
}

/// { beta : A beta integral } with numerators over D = |det A|.
struct FiniteGroup {
  Matrix membership;
  std::int64_t d = 1;
  ElementSet elements;

  explicit FiniteGroup(const Matrix& a) : membership(a) {
    d = std::llabs(det(a));
    const Matrix adj = adjugate(a);
    const std::int64_t sign = det(a) > 0 ? 1 : -1;
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < a.size(); ++j) {
      Vec col(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) col[i] = mod(sign * adj[i][j], d);
      gens.push_back(col);
    }
    elements = closure(gens, a.size(), d);
  }

  std::size_t rank() const { return membership.size(); }
  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }

  bool isMember(const Vec& v) const {
    for (const auto& row : membership) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
      if (mod(s, d) != 0) return false;
    }
    return true;
  }

  bool isCyclic() const {
    return std::any_of(elements.begin(), elements.end(),
                       [&](const Vec& x) { return elementOrder(x, d) == order(); });
  }
};

inline ElementSet generated(const std::vector<Vec>& gens, std::size_t n, std::int64_t d) {
  return closure(gens, n, d);
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool isSubset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElementSet join(const ElementSet& a, const ElementSet& b, std::size_t n, std::int64_t d) {
  std::vector<Vec> gens(a.begin(), a.end());
  gens.insert(gens.end(), b.begin(), b.end());
  return closure(gens, n, d);
}

/// Every subgroup as an element set: all joins of cyclic subgroups.
inline std::set<ElementSet> allSubgroups(const FiniteGroup& g) {
  std::set<ElementSet> cyclic;
  for (const auto& x : g.elements) cyclic.insert(closure({x}, g.rank(), g.d));
  std::set<ElementSet> all = cyclic;
  std::vector<ElementSet> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        if (isSubset(c, h)) continue;
        ElementSet j = join(h, c, g.rank(), g.d);
        if (all.insert(j).second) next.push_back(j);
      }
    frontier.swap(next);
  }
  return all;
}

/// Elements of G whose coordinates in I vanish.
inline ElementSet isotropy(const FiniteGroup& g, const std::vector<std::size_t>& indices) {
  ElementSet out;
  for (const auto& x : g.elements) {
    if (std::all_of(indices.begin(), indices.end(), [&](std::size_t i) { return x[i] == 0; }))
      out.insert(x);
  }
  return out;
}

/// lambda^T A mu over d^2, reduced mod d^2; zero means the pairing is trivial.
inline std::int64_t pairingNumerator(const Matrix& a, const Vec& lambda, const Vec& mu,
                                     std::int64_t d) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s += lambda[i] * a[i][j] * mu[j];
  return mod(s, d * d);
}

/// { lambda in G^T : <lambda, mu> = 1 for all mu in H }, G the group of A and
/// G^T the group of A^T.
inline ElementSet kernelDual(const FiniteGroup& g, const FiniteGroup& gt, const ElementSet& h) {
  ElementSet out;
  for (const auto& lambda : gt.elements) {
    bool ok = true;
    for (const auto& mu : h) {
      if (pairingNumerator(g.membership, lambda, mu, g.d) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(lambda);
  }
  return out;
}

/// Cosets x + H as sorted element sets.
inline std::vector<ElementSet> cosets(const FiniteGroup& g, const ElementSet& h) {
  std::set<ElementSet> out;
  for (const auto& x : g.elements) {
    ElementSet c;
    for (const auto& y : h) c.insert(add(x, y, g.d));
    out.insert(c);
  }
  return {out.begin(), out.end()};
}

/// Orbit decomposition of an explicit G-set under the subgroup `acting`,
/// reported as stabilizer -> number of orbits. `act(g, p)` gives g.p.
template <class Point, class Act>
std::map<ElementSet, std::int64_t> orbitDecomposition(const std::vector<Point>& points,
                                                      const ElementSet& acting, Act act) {
  std::map<ElementSet, std::int64_t> out;
  std::set<Point> done;
  for (const auto& p : points) {
    if (done.count(p)) continue;
    ElementSet stab;
    for (const auto& g : acting) {
      Point q = act(g, p);
      done.insert(q);
      if (q == p) stab.insert(g);
    }
    ++out[stab];
  }
  return out;
}

/// Translation of a coset by an element.
inline ElementSet translate(const ElementSet& coset, const Vec& g, std::int64_t d) {
  ElementSet out;
  for (const auto& y : coset) out.insert(add(y, g, d));
  return out;
}

/// Cycle type of "add g" on the cosets of H: cycle length -> count.
inline std::map<std::int64_t, std::int64_t> cycleType(const FiniteGroup& grp, const ElementSet& h,
                                                      const Vec& g) {
  std::map<std::int64_t, std::int64_t> out;
  std::set<ElementSet> seen;
  for (const auto& c : cosets(grp, h)) {
    if (seen.count(c)) continue;
    ElementSet cur = c;
    std::int64_t len = 0;
    do {
      seen.insert(cur);
      cur = translate(cur, g, grp.d);
      ++len;
    } while (cur != c);
    ++out[len];
  }
  return out;
}

// Bridges between the oracle and the library.

inline Vec toVec(const saito::GroupElement& x) {
  Vec v;
  for (const auto& c : x.numerators()) v.push_back(c.get_si());
  return v;
}

inline std::vector<saito::Integer> toNumerators(const Vec& v) {
  return {v.begin(), v.end()};
}

/// The elements of a library subgroup, as an oracle element set inside `g`.
inline ElementSet elementsOf(const FiniteGroup& g, const saito::AbelianGroup& lib,
                             const saito::SubgroupKey& key) {
  ElementSet out;
  for (const auto& x : g.elements) {
    if (saito::subgroupContains(key, lib.element(toNumerators(x)))) out.insert(x);
  }
  return out;
}

/// Library key of an oracle element set.
inline saito::SubgroupKey keyOf(const saito::AbelianGroup& lib, const ElementSet& h) {
  std::vector<std::vector<saito::Integer>> gens;
  for (const auto& x : h) gens.push_back(toNumerators(x));
  return saito::keyFromGenerators(lib.scale(), lib.rank(), gens);
}

/// Seeded generator of small exponent matrices with nonzero determinant.
class MatrixGen {
 public:
  explicit MatrixGen(std::uint64_t seed) : rng_(seed) {}

  saito::IntMatrix next(std::size_t n, int maxEntry, std::int64_t maxDet) {
    std::uniform_int_distribution<int> diag(1, maxEntry);
    std::uniform_int_distribution<int> off(0, 2);
    while (true) {
      Matrix a(n, Vec(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = i == j ? diag(rng_) : off(rng_) == 0;
      const std::int64_t dt = std::llabs(det(a));
      if (dt == 0 || dt > maxDet) continue;
      saito::IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i][j];
      return m;
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

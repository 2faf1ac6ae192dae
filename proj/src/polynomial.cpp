#include "saito/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "saito/errors.hpp"

namespace saito {

std::vector<std::string> defaultVariableNames(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(i + 1);
  return names;
}

InvertiblePolynomial::InvertiblePolynomial(IntMatrix exponents,
                                           std::vector<std::string> variables)
    : exponents_(std::move(exponents)), variables_(std::move(variables)) {
  if (!exponents_.isSquare()) {
    throw ShapeError("invertible polynomial needs as many monomials (" +
                     std::to_string(exponents_.rows()) + ") as variables (" +
                     std::to_string(exponents_.cols()) + ")");
  }
  if (variables_.size() != exponents_.cols()) {
    throw ShapeError("variable name count does not match the exponent matrix");
  }
  for (const auto& e : exponents_.entries()) {
    if (e < 0) throw ParseError("negative exponent in exponent matrix", 1, 1);
  }
  det_ = determinant(exponents_);
  if (det_ == 0) {
    throw SingularMatrixError("exponent matrix " + exponents_.toString() +
                              " is singular (det E = 0)");
  }
}

InvertiblePolynomial::InvertiblePolynomial(IntMatrix exponents)
    : InvertiblePolynomial(exponents, defaultVariableNames(exponents.cols())) {}

InvertiblePolynomial InvertiblePolynomial::transpose() const {
  return {exponents_.transpose(), variables_};
}

std::string InvertiblePolynomial::toString() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exponents_.rows(); ++i) {
    if (i) os << " + ";
    bool first = true;
    for (std::size_t j = 0; j < exponents_.cols(); ++j) {
      const Integer& e = exponents_(i, j);
      if (e == 0) continue;
      if (!first) os << '*';
      first = false;
      os << variables_[j];
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

WeightSystem canonicalWeights(const InvertiblePolynomial& f) {
  const IntMatrix& e = f.exponents();
  const std::size_t n = e.cols();
  WeightSystem w;
  w.canonicalDegree = f.signedDeterminant();
  w.canonicalWeights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix m = e;
    for (std::size_t r = 0; r < n; ++r) m(r, i) = 1;
    w.canonicalWeights[i] = determinant(m);
  }
  if (w.canonicalDegree < 0) {
    w.canonicalDegree = -w.canonicalDegree;
    for (auto& x : w.canonicalWeights) x = -x;
  }
  w.gcdFactor = gcd(w.canonicalWeights);
  w.reducedWeights.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.reducedWeights[i] = w.canonicalWeights[i] / w.gcdFactor;
  w.reducedDegree = w.canonicalDegree / w.gcdFactor;
  return w;
}

bool Atom::degenerateSuspect() const {
  return std::any_of(exponents.begin(), exponents.end(),
                     [](const Integer& p) { return p == 1; });
}

std::string Atom::signature() const {
  std::vector<Integer> seq = exponents;
  if (kind == AtomKind::loop) {
    std::vector<Integer> best = seq;
    for (std::size_t r = 1; r < seq.size(); ++r) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      if (seq < best) best = seq;
    }
    seq = std::move(best);
  }
  std::ostringstream os;
  os << (kind == AtomKind::loop ? "loop(" : "chain(");
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
  os << ')';
  return os.str();
}

namespace {

struct RowShape {
  std::vector<std::size_t> support;
  std::vector<std::size_t> ownCandidates;
};

std::optional<AtomicDecomposition> assemble(const IntMatrix& e,
                                            const std::vector<std::size_t>& own) {
  const std::size_t n = e.cols();
  std::vector<std::optional<std::size_t>> succ(n);
  std::vector<std::size_t> rowOf(n);
  std::vector<int> indegree(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t v = own[r];
    rowOf[v] = r;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != v && e(r, c) != 0) {
        succ[v] = c;
        ++indegree[c];
      }
    }
  }
  if (std::any_of(indegree.begin(), indegree.end(), [](int d) { return d > 1; })) {
    return std::nullopt;
  }

  AtomicDecomposition out;
  out.nonDegenerate = true;
  std::vector<bool> seen(n, false);
  auto emit = [&](AtomKind kind, std::vector<std::size_t> vars) {
    Atom a{kind, std::move(vars), {}, {}};
    for (std::size_t v : a.variables) {
      a.monomials.push_back(rowOf[v]);
      a.exponents.push_back(e(rowOf[v], v));
    }
    out.atoms.push_back(std::move(a));
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (indegree[start] != 0 || seen[start]) continue;
    std::vector<std::size_t> path;
    std::optional<std::size_t> cur = start;
    while (cur) {
      seen[*cur] = true;
      path.push_back(*cur);
      cur = succ[*cur];
    }
    emit(AtomKind::chain, std::move(path));
  }
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    std::size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = *succ[cur];
    }
    emit(AtomKind::loop, std::move(cycle));
  }
  return out;
}

}  // namespace

AtomicDecomposition decompose(const InvertiblePolynomial& f) {
  const IntMatrix& e = f.exponents();
  const std::size_t n = e.cols();
  std::vector<RowShape> rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (e(r, c) != 0) rows[r].support.push_back(c);
    const auto& s = rows[r].support;
    if (s.size() == 1) {
      rows[r].ownCandidates = s;
    } else if (s.size() == 2) {
      // the successor variable enters with exponent exactly 1
      if (e(r, s[1]) == 1) rows[r].ownCandidates.push_back(s[0]);
      if (e(r, s[0]) == 1) rows[r].ownCandidates.push_back(s[1]);
    }
    if (rows[r].ownCandidates.empty()) return {};
  }

  std::vector<std::size_t> own(n);
  std::vector<bool> used(n, false);
  std::optional<AtomicDecomposition> found;
  std::function<bool(std::size_t)> search = [&](std::size_t r) -> bool {
    if (r == n) {
      found = assemble(e, own);
      return found.has_value();
    }
    for (std::size_t c : rows[r].ownCandidates) {
      if (used[c]) continue;
      used[c] = true;
      own[r] = c;
      if (search(r + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!search(0)) return {};
  return *found;
}

}  // namespace saito

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "saito/cli.hpp"
#include "saito/errors.hpp"
#include "saito/serialize.hpp"

namespace saito {

void validateBounds(const EnumerationBounds& b) {
  if (b.maxVars < 1 || b.maxVars > 8) {
    throw BoundsError("max-vars must lie in [1, 8], got " + std::to_string(b.maxVars));
  }
  if (b.maxExp < 2 || b.maxExp > 9) {
    throw BoundsError("max-exp must lie in [2, 9], got " + std::to_string(b.maxExp));
  }
}

namespace {

struct AtomSpec {
  AtomKind kind;
  std::vector<int> exponents;
  std::string signature;
};

std::string signatureOf(AtomKind kind, const std::vector<int>& p) {
  std::string s = kind == AtomKind::loop ? "loop(" : "chain(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ')';
}

bool isMinimalRotation(const std::vector<int>& p) {
  std::vector<int> r = p;
  for (std::size_t k = 1; k < p.size(); ++k) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r < p) return false;
  }
  return true;
}

// Odometer over [2, maxExp]^m; stops early when visit returns false.
template <class Visit>
bool forEachTuple(int m, int maxExp, Visit visit) {
  std::vector<int> p(m, 2);
  while (true) {
    if (!visit(p)) return false;
    int i = m - 1;
    while (i >= 0 && p[i] == maxExp) p[i--] = 2;
    if (i < 0) return true;
    ++p[i];
  }
}

// Writes the block of one atom at offset `o`: row k is x_k^{p_k} x_{k+1},
// cyclic for loops, with the last chain row a pure power.
void placeAtom(IntMatrix& e, std::size_t o, const AtomSpec& a) {
  const std::size_t m = a.exponents.size();
  for (std::size_t k = 0; k < m; ++k) {
    e(o + k, o + k) = a.exponents[k];
    if (a.kind == AtomKind::loop) {
      e(o + k, o + (k + 1) % m) += 1;
    } else if (k + 1 < m) {
      e(o + k, o + k + 1) = 1;
    }
  }
}

CorpusEntry buildEntry(const std::vector<const AtomSpec*>& parts) {
  std::size_t n = 0;
  for (const auto* a : parts) n += a->exponents.size();
  IntMatrix e(n, n);
  std::size_t o = 0;
  std::string key;
  for (const auto* a : parts) {
    placeAtom(e, o, *a);
    o += a->exponents.size();
    key += (key.empty() ? "" : " + ") + a->signature;
  }
  return {key, InvertiblePolynomial(std::move(e))};
}

}  // namespace

Corpus generateCorpus(const EnumerationBounds& b) {
  validateBounds(b);
  Corpus corpus;
  const std::size_t cap = b.limit;

  // at most cap + 1 atoms are kept, which already forces truncation below
  std::vector<AtomSpec> atoms;
  bool atomsCut = false;
  for (int m = 1; m <= b.maxVars && !atomsCut; ++m) {
    const bool chains = b.includeChains;
    const bool loops = b.includeLoops && m >= 2;
    if (!chains && !loops) continue;
    forEachTuple(m, b.maxExp, [&](const std::vector<int>& p) {
      if (chains) atoms.push_back({AtomKind::chain, p, signatureOf(AtomKind::chain, p)});
      if (loops && isMinimalRotation(p)) {
        atoms.push_back({AtomKind::loop, p, signatureOf(AtomKind::loop, p)});
      }
      atomsCut = atoms.size() > cap;
      return !atomsCut;
    });
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const AtomSpec& x, const AtomSpec& y) { return x.signature < y.signature; });

  // Sums are multisets of atoms (non-decreasing index sequences), so the
  // joined signatures form a canonical key: two sums of atoms differ by a
  // variable permutation iff their atom multisets agree.
  std::set<std::string> seen;
  std::vector<const AtomSpec*> parts;
  std::size_t count = 0;
  auto recurse = [&](auto&& self, std::size_t start, int varsLeft) -> void {
    if (corpus.truncated) return;
    if (!parts.empty() && (parts.size() == 1 || b.includeSums)) {
      if (count >= cap) {
        corpus.truncated = true;
        return;
      }
      CorpusEntry entry = buildEntry(parts);
      if (seen.insert(entry.key).second) {
        corpus.entries.push_back(std::move(entry));
        ++count;
      }
    }
    if (!parts.empty() && !b.includeSums) return;
    for (std::size_t i = start; i < atoms.size(); ++i) {
      const int m = static_cast<int>(atoms[i].exponents.size());
      if (m > varsLeft) continue;
      parts.push_back(&atoms[i]);
      self(self, i, varsLeft - m);
      parts.pop_back();
      if (corpus.truncated) return;
    }
  };
  recurse(recurse, 0, b.maxVars);

  std::sort(corpus.entries.begin(), corpus.entries.end(),
            [](const CorpusEntry& x, const CorpusEntry& y) {
              const auto nx = x.polynomial.numVariables(), ny = y.polynomial.numVariables();
              return nx != ny ? nx < ny : x.key < y.key;
            });

  if (b.sample && *b.sample < corpus.entries.size()) {
    std::mt19937_64 rng(b.seed);
    std::vector<std::size_t> idx(corpus.entries.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(*b.sample);
    std::sort(idx.begin(), idx.end());
    std::vector<CorpusEntry> picked;
    for (std::size_t i : idx) picked.push_back(std::move(corpus.entries[i]));
    corpus.entries = std::move(picked);
  }
  return corpus;
}

IntMatrix canonicalRelabeling(const IntMatrix& e) {
  const std::size_t n = e.cols();
  if (n > 8) throw ResourceError("canonical relabeling is exhaustive; at most 8 variables");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<IntMatrix> best;
  do {
    std::vector<std::vector<Integer>> rows;
    for (std::size_t r = 0; r < e.rows(); ++r) {
      std::vector<Integer> row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = e(r, perm[c]);
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    IntMatrix candidate = IntMatrix::fromRows(rows);
    if (!best || candidate < *best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

namespace {

struct EntryResult {
  std::optional<VerificationReport> theorem;
  std::optional<VerificationReport> corollary;
  std::string error;
};

EntryResult evaluate(const InvertiblePolynomial& f) {
  EntryResult r;
  try {
    r.theorem = verifyTheorem(f);
    if (symmetryGroup(f, Side::direct)->isCyclic()) r.corollary = verifyCorollary(f);
  } catch (const std::exception& ex) {
    r.error = ex.what();
  }
  return r;
}

nlohmann::json failureRecord(const CorpusEntry& entry, const std::string& kind) {
  return {{"key", entry.key}, {"polynomial", toJson(entry.polynomial)}, {"kind", kind}};
}

}  // namespace

BatchSummary runEnumeration(const EnumerationBounds& b) {
  const Corpus corpus = generateCorpus(b);
  const std::size_t total = corpus.entries.size();
  std::vector<EntryResult> results(total);

  unsigned workers = b.workers ? b.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      results[i] = evaluate(corpus.entries[i].polynomial);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  BatchSummary s;
  s.total = total;
  s.truncated = corpus.truncated;
  for (std::size_t i = 0; i < total; ++i) {
    const auto& entry = corpus.entries[i];
    const auto& r = results[i];
    if (!r.error.empty()) {
      ++s.theoremFail;
      auto rec = failureRecord(entry, "error");
      rec["message"] = r.error;
      s.failures.push_back(std::move(rec));
      continue;
    }
    if (r.theorem->equal) {
      ++s.theoremPass;
    } else {
      ++s.theoremFail;
      auto rec = failureRecord(entry, "theorem");
      rec["report"] = toJson(*r.theorem);
      s.failures.push_back(std::move(rec));
    }
    if (r.corollary) {
      ++s.corollaryChecked;
      if (r.corollary->equal) {
        ++s.corollaryPass;
      } else {
        ++s.corollaryFail;
        auto rec = failureRecord(entry, "corollary");
        rec["report"] = toJson(*r.corollary);
        s.failures.push_back(std::move(rec));
      }
    }
  }
  return s;
}

nlohmann::json toJson(const BatchSummary& s) {
  return {{"total", s.total},
          {"theoremPass", s.theoremPass},
          {"theoremFail", s.theoremFail},
          {"corollaryChecked", s.corollaryChecked},
          {"corollaryPass", s.corollaryPass},
          {"corollaryFail", s.corollaryFail},
          {"truncated", s.truncated},
          {"failures", s.failures}};
}

int exitCode(const BatchSummary& s) {
  int code = 0;
  if (s.theoremFail) code |= kExitTheoremFailure;
  if (s.corollaryFail) code |= kExitCorollaryFailure;
  if (s.truncated) code |= kExitTruncated;
  return code;
}

}  // namespace saito

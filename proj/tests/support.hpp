#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "uasc/algebra.hpp"
#include "uasc/discriminator.hpp"
#include "uasc/free_algebra.hpp"
#include "uasc/term.hpp"

namespace testsup {

using namespace uasc;

// ---- standard algebras -------------------------------------------------

inline FiniteAlgebra semilattice2() {
  FiniteAlgebra a;
  a.sig.symbols = {{"meet", 2}};
  a.size = 2;
  a.tables = {{0, 0, 0, 1}};
  return a;
}

inline FiniteAlgebra boolean2() {
  FiniteAlgebra a;
  a.sig.symbols = {{"and", 2}, {"or", 2}, {"not", 1}};
  a.size = 2;
  a.tables = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0}};
  return a;
}

inline FiniteAlgebra disc_algebra(int size) {
  FiniteAlgebra a;
  a.sig.symbols = {{"d", 3}};
  a.size = size;
  a.tables = {discriminator_table(size)};
  return a;
}

/// Discriminator plus constants 0 and 1.
inline FiniteAlgebra disc_algebra_consts(int size) {
  FiniteAlgebra a = disc_algebra(size);
  a.sig.symbols.push_back({"c0", 0});
  a.sig.symbols.push_back({"c1", 0});
  a.tables.push_back({0});
  a.tables.push_back({1});
  return a;
}

/// Two commuting idempotent unary operations collapsing everything to 1,
/// plus the discriminator.
inline FiniteAlgebra truncated_a() {
  FiniteAlgebra a;
  a.sig.symbols = {{"f0", 1}, {"f1", 1}, {"d", 3}};
  a.size = 2;
  a.tables = {{1, 1}, {1, 1}, discriminator_table(2)};
  return a;
}

/// The four-element one-generated algebra of the unary theory
/// (0 = x, 1 = f0 x, 2 = f1 x, 3 = f0 f1 x), expanded by the discriminator.
inline FiniteAlgebra truncated_b() {
  FiniteAlgebra a;
  a.sig.symbols = {{"f0", 1}, {"f1", 1}, {"d", 3}};
  a.size = 4;
  a.tables = {{1, 1, 3, 3}, {2, 3, 2, 3}, discriminator_table(4)};
  return a;
}

// ---- brute-force oracles ------------------------------------------------

/// All partitions of {0..n-1} as canonical block vectors (restricted
/// growth strings).
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int maxb) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= maxb + 1 && b < n; ++b) {
      cur[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(maxb, b));
    }
  };
  rec(rec, 0, -1);
  return out;
}

/// Direct definition check: the partition respects every full tuple pair.
inline bool partition_compatible(const FiniteAlgebra& a,
                                 const std::vector<int>& blocks) {
  for (int op = 0; op < a.sig.op_count(); ++op) {
    const int r = a.sig.arity(op);
    long cells = 1;
    for (int j = 0; j < r; ++j) cells *= a.size;
    std::vector<int> t1(static_cast<std::size_t>(r)), t2(static_cast<std::size_t>(r));
    for (long i = 0; i < cells; ++i)
      for (long j = 0; j < cells; ++j) {
        long r1 = i, r2 = j;
        bool rel = true;
        for (int p = r - 1; p >= 0; --p) {
          t1[static_cast<std::size_t>(p)] = static_cast<int>(r1 % a.size);
          t2[static_cast<std::size_t>(p)] = static_cast<int>(r2 % a.size);
          r1 /= a.size;
          r2 /= a.size;
          if (blocks[static_cast<std::size_t>(t1[static_cast<std::size_t>(p)])] !=
              blocks[static_cast<std::size_t>(t2[static_cast<std::size_t>(p)])])
            rel = false;
        }
        if (rel && blocks[static_cast<std::size_t>(a.apply(op, t1))] !=
                       blocks[static_cast<std::size_t>(a.apply(op, t2))])
          return false;
      }
  }
  return true;
}

inline bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  for (std::size_t i = 0; i < fine.size(); ++i)
    for (std::size_t j = i + 1; j < fine.size(); ++j)
      if (fine[i] == fine[j] && coarse[i] != coarse[j]) return false;
  return true;
}

/// All total maps {0..n-1} -> {0..m-1} in lexicographic order.
inline std::vector<std::vector<int>> all_maps(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(cur);
    int j = n - 1;
    while (j >= 0 && ++cur[static_cast<std::size_t>(j)] == m) {
      cur[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

/// Least closed superset by scanning every subset: independent of the
/// fixpoint implementation.
inline std::vector<int> closure_by_subset_scan(const FiniteAlgebra& a,
                                               const std::vector<int>& seed) {
  std::vector<int> best;
  const unsigned long total = 1UL << a.size;
  for (unsigned long mask = 0; mask < total; ++mask) {
    std::vector<char> in(static_cast<std::size_t>(a.size), 0);
    std::vector<int> members;
    for (int e = 0; e < a.size; ++e)
      if (mask & (1UL << e)) {
        in[static_cast<std::size_t>(e)] = 1;
        members.push_back(e);
      }
    bool covers = true;
    for (int s : seed)
      if (!in[static_cast<std::size_t>(s)]) covers = false;
    if (!covers || members.empty()) continue;
    // closed?
    bool closed = true;
    for (int op = 0; op < a.sig.op_count() && closed; ++op) {
      const int r = a.sig.arity(op);
      std::vector<int> ix(static_cast<std::size_t>(r), 0);
      std::vector<int> t(static_cast<std::size_t>(r));
      while (closed) {
        for (int j = 0; j < r; ++j)
          t[static_cast<std::size_t>(j)] =
              members[static_cast<std::size_t>(ix[static_cast<std::size_t>(j)])];
        if (!in[static_cast<std::size_t>(a.apply(op, t))]) closed = false;
        int j = r - 1;
        while (j >= 0 && ++ix[static_cast<std::size_t>(j)] ==
                             static_cast<int>(members.size())) {
          ix[static_cast<std::size_t>(j)] = 0;
          --j;
        }
        if (j < 0) break;
      }
    }
    if (closed && (best.empty() || members.size() < best.size()))
      best = members;
  }
  return best;
}

/// Naive term-function closure: plain fixpoint over a set of vectors, no
/// rounds, witnesses or ordering. Independent size oracle for the builder.
inline std::size_t slow_free_size(const GeneratingClass& K, int rank) {
  auto columns = detail::free_columns(K, rank);
  std::set<std::vector<int>> elems;
  for (int g = 0; g < rank; ++g) {
    std::vector<int> v;
    for (const auto& col : columns)
      v.push_back(col.assignment[static_cast<std::size_t>(g)]);
    elems.insert(v);
  }
  const Signature& sig = K.signature();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> cur(elems.begin(), elems.end());
    for (int op = 0; op < sig.op_count(); ++op) {
      const int r = sig.arity(op);
      if (r > 0 && cur.empty()) continue;
      std::vector<int> ix(static_cast<std::size_t>(r), 0);
      while (true) {
        std::vector<int> v;
        for (std::size_t c = 0; c < columns.size(); ++c) {
          const FiniteAlgebra& m = K.member(columns[c].member);
          long idx = 0;
          for (int j = 0; j < r; ++j)
            idx = idx * m.size +
                  cur[static_cast<std::size_t>(ix[static_cast<std::size_t>(j)])][c];
          v.push_back(m.tables[static_cast<std::size_t>(op)][static_cast<std::size_t>(idx)]);
        }
        if (elems.insert(v).second) changed = true;
        int j = r - 1;
        while (j >= 0 && ++ix[static_cast<std::size_t>(j)] ==
                             static_cast<int>(cur.size())) {
          ix[static_cast<std::size_t>(j)] = 0;
          --j;
        }
        if (j < 0) break;
      }
    }
  }
  return elems.size();
}

// ---- random corpus ------------------------------------------------------

struct TermGen {
  std::mt19937_64 rng;
  const Signature& sig;
  int max_vars;

  TermGen(std::uint64_t seed, const Signature& s, int vars)
      : rng(seed), sig(s), max_vars(vars) {}

  int uniform(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

  Term term(int depth) {
    std::vector<int> ops;
    for (int op = 0; op < sig.op_count(); ++op)
      if (depth > 0 || sig.arity(op) == 0) ops.push_back(op);
    // half the leaves are variables
    if (depth == 0 || uniform(2) == 0) {
      if (!ops.empty() && uniform(2) == 0) {
        int op = ops[static_cast<std::size_t>(uniform(static_cast<int>(ops.size())))];
        if (sig.arity(op) == 0) return Term::app(sig.name(op));
        if (depth > 0) {
          std::vector<Term> args;
          for (int j = 0; j < sig.arity(op); ++j) args.push_back(term(depth - 1));
          return Term::app(sig.name(op), std::move(args));
        }
      }
      return Term::var(uniform(max_vars));
    }
    int op = ops[static_cast<std::size_t>(uniform(static_cast<int>(ops.size())))];
    if (sig.arity(op) == 0) return Term::app(sig.name(op));
    std::vector<Term> args;
    for (int j = 0; j < sig.arity(op); ++j) args.push_back(term(depth - 1));
    return Term::app(sig.name(op), std::move(args));
  }

  Equation equation(int depth) { return Equation{term(depth), term(depth)}; }

  QuasiIdentity quasi_identity(int max_premises, int depth) {
    QuasiIdentity q;
    int np = uniform(max_premises + 1);
    for (int i = 0; i < np; ++i) q.premises.push_back(equation(depth));
    q.conclusion = equation(depth);
    return q;
  }
};

}  // namespace testsup

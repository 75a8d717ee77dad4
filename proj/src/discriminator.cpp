#include "uasc/discriminator.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <thread>

namespace uasc {

const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    default: return "unknown";
  }
}

std::vector<int> discriminator_table(int size) {
  std::vector<int> tbl(static_cast<std::size_t>(size) * static_cast<std::size_t>(size) *
                       static_cast<std::size_t>(size));
  std::size_t i = 0;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c) tbl[i++] = (a != b) ? a : c;
  return tbl;
}

DiscSearch find_discriminator_term(const GeneratingClass& K,
                                   const Limits& limits) {
  DiscSearch out;
  if (!K.has_nontrivial_member()) {
    out.status = DiscStatus::none;
    out.note = "all members are trivial";
    return out;
  }

  // Necessary condition: term operations preserve every subuniverse of a
  // member's square, so the discriminator acting componentwise must map
  // each triple of pairs into the subuniverse those pairs generate. A
  // violating triple certifies `none` without building the rank-3 closure.
  for (int mi = 0; mi < K.member_count(); ++mi) {
    const FiniteAlgebra& A = K.member(mi);
    const std::size_t n2 =
        static_cast<std::size_t>(A.size) * static_cast<std::size_t>(A.size);
    if (n2 > 256) continue;  // big members are left to the closure
    std::vector<FiniteAlgebra> fs{A, A};
    FiniteAlgebra sq = direct_product(fs, limits);
    // pair (a,b) encoded as a*size + b
    std::map<std::array<int, 3>, std::vector<char>> memo;
    std::vector<int> seed(3);
    for (int u = 0; u < sq.size; ++u)
      for (int v = 0; v < sq.size; ++v)
        for (int w = 0; w < sq.size; ++w) {
          int du = u / A.size, dv = v / A.size, dw = w / A.size;
          int eu = u % A.size, ev = v % A.size, ew = w % A.size;
          int img = (du != dv ? du : dw) * A.size + (eu != ev ? eu : ew);
          std::array<int, 3> sorted{u, v, w};
          std::sort(sorted.begin(), sorted.end());
          auto it = memo.find(sorted);
          if (it == memo.end()) {
            seed = {u, v, w};
            auto closed = generated_subuniverse(sq, seed);
            std::vector<char> bits(static_cast<std::size_t>(sq.size), 0);
            for (int e : closed) bits[static_cast<std::size_t>(e)] = 1;
            it = memo.emplace(sorted, std::move(bits)).first;
          }
          if (!it->second[static_cast<std::size_t>(img)]) {
            out.status = DiscStatus::none;
            out.note = "discriminator breaks a subuniverse of member " +
                       std::to_string(mi) + " squared";
            return out;
          }
        }
  }

  // target: the discriminator's function vector over the rank-3 columns
  std::vector<std::uint8_t> target;
  for (const FiniteAlgebra& A : K.members())
    for (int a = 0; a < A.size; ++a)
      for (int b = 0; b < A.size; ++b)
        for (int c = 0; c < A.size; ++c)
          target.push_back(static_cast<std::uint8_t>(a != b ? a : c));

  detail::ClosureSearch search =
      detail::close_term_functions(K, 3, &target, limits);
  out.elements_explored = search.algebra.size();
  if (search.target_witness) {
    out.status = DiscStatus::found;
    out.term = std::move(search.target_witness);
  } else if (search.complete) {
    out.status = DiscStatus::none;
    out.note = "rank-3 closure exhausted without the discriminator";
  } else {
    out.status = DiscStatus::unknown;
    out.note = "rank-3 closure hit capacity before a decision";
  }
  return out;
}

namespace {

using Tuple = std::vector<int>;

/// Calls fn for every argument tuple of the operation.
template <typename F>
void for_all_tuples(int size, int arity, F&& fn) {
  Tuple t(static_cast<std::size_t>(arity), 0);
  while (true) {
    fn(t);
    int j = arity - 1;
    while (j >= 0 && ++t[static_cast<std::size_t>(j)] == size) {
      t[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
}

bool op_preserves_subset(const FiniteAlgebra& A, int op,
                         const std::vector<char>& in) {
  const int r = A.sig.arity(op);
  bool ok = true;
  Tuple t(static_cast<std::size_t>(r), 0);
  // tuples over the subset only
  std::vector<int> members;
  for (int e = 0; e < A.size; ++e)
    if (in[static_cast<std::size_t>(e)]) members.push_back(e);
  const int m = static_cast<int>(members.size());
  if (m == 0) return true;
  std::vector<int> ix(static_cast<std::size_t>(r), 0);
  while (ok) {
    for (int j = 0; j < r; ++j)
      t[static_cast<std::size_t>(j)] = members[static_cast<std::size_t>(ix[static_cast<std::size_t>(j)])];
    if (!in[static_cast<std::size_t>(A.apply(op, t))]) ok = false;
    int j = r - 1;
    while (j >= 0 && ++ix[static_cast<std::size_t>(j)] == m) {
      ix[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return ok;
}

bool op_monotone(const FiniteAlgebra& A, int op, const std::vector<int>& rank) {
  // rank gives each element's height in the chain
  const int r = A.sig.arity(op);
  bool ok = true;
  for_all_tuples(A.size, r, [&](const Tuple& a) {
    if (!ok) return;
    for_all_tuples(A.size, r, [&](const Tuple& b) {
      if (!ok) return;
      for (int j = 0; j < r; ++j)
        if (rank[static_cast<std::size_t>(a[static_cast<std::size_t>(j)])] >
            rank[static_cast<std::size_t>(b[static_cast<std::size_t>(j)])])
          return;
      if (rank[static_cast<std::size_t>(A.apply(op, a))] >
          rank[static_cast<std::size_t>(A.apply(op, b))])
        ok = false;
    });
  });
  return ok;
}

bool op_commutes(const FiniteAlgebra& A, int op, const std::vector<int>& sigma) {
  const int r = A.sig.arity(op);
  bool ok = true;
  Tuple mapped(static_cast<std::size_t>(r), 0);
  for_all_tuples(A.size, r, [&](const Tuple& a) {
    if (!ok) return;
    for (int j = 0; j < r; ++j)
      mapped[static_cast<std::size_t>(j)] =
          sigma[static_cast<std::size_t>(a[static_cast<std::size_t>(j)])];
    if (A.apply(op, mapped) !=
        sigma[static_cast<std::size_t>(A.apply(op, a))])
      ok = false;
  });
  return ok;
}

bool op_affine(const FiniteAlgebra& A, int op) {
  // compatibility with x - y + z = w over Z_size: f(a - b + c) = f(a) - f(b) + f(c)
  const int n = A.size;
  const int r = A.sig.arity(op);
  bool ok = true;
  Tuple s(static_cast<std::size_t>(r), 0);
  for_all_tuples(n, r, [&](const Tuple& a) {
    if (!ok) return;
    for_all_tuples(n, r, [&](const Tuple& b) {
      if (!ok) return;
      for_all_tuples(n, r, [&](const Tuple& c) {
        if (!ok) return;
        for (int j = 0; j < r; ++j)
          s[static_cast<std::size_t>(j)] =
              ((a[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)] +
                c[static_cast<std::size_t>(j)]) % n + n) % n;
        int want = ((A.apply(op, a) - A.apply(op, b) + A.apply(op, c)) % n + n) % n;
        if (A.apply(op, s) != want) ok = false;
      });
    });
  });
  return ok;
}

bool op_preserves_equivalence(const FiniteAlgebra& A, int op,
                              const std::vector<int>& cls) {
  const int r = A.sig.arity(op);
  bool ok = true;
  for_all_tuples(A.size, r, [&](const Tuple& a) {
    if (!ok) return;
    for_all_tuples(A.size, r, [&](const Tuple& b) {
      if (!ok) return;
      for (int j = 0; j < r; ++j)
        if (cls[static_cast<std::size_t>(a[static_cast<std::size_t>(j)])] !=
            cls[static_cast<std::size_t>(b[static_cast<std::size_t>(j)])])
          return;
      if (cls[static_cast<std::size_t>(A.apply(op, a))] !=
          cls[static_cast<std::size_t>(A.apply(op, b))])
        ok = false;
    });
  });
  return ok;
}

bool op_preserves_binary_central(const FiniteAlgebra& A, int op, int ex0,
                                 int ex1) {
  // the relation misses exactly the symmetric pair {ex0, ex1}
  auto in = [&](int a, int b) {
    return !((a == ex0 && b == ex1) || (a == ex1 && b == ex0));
  };
  const int r = A.sig.arity(op);
  bool ok = true;
  for_all_tuples(A.size, r, [&](const Tuple& a) {
    if (!ok) return;
    for_all_tuples(A.size, r, [&](const Tuple& b) {
      if (!ok) return;
      for (int j = 0; j < r; ++j)
        if (!in(a[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(j)]))
          return;
      if (!in(A.apply(op, a), A.apply(op, b))) ok = false;
    });
  });
  return ok;
}

bool op_preserves_not_all_distinct(const FiniteAlgebra& A, int op) {
  auto in = [](int a, int b, int c) { return a == b || b == c || a == c; };
  const int r = A.sig.arity(op);
  bool ok = true;
  for_all_tuples(A.size, r, [&](const Tuple& a) {
    if (!ok) return;
    for_all_tuples(A.size, r, [&](const Tuple& b) {
      if (!ok) return;
      for_all_tuples(A.size, r, [&](const Tuple& c) {
        if (!ok) return;
        for (int j = 0; j < r; ++j)
          if (!in(a[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(j)],
                  c[static_cast<std::size_t>(j)]))
            return;
        if (!in(A.apply(op, a), A.apply(op, b), A.apply(op, c))) ok = false;
      });
    });
  });
  return ok;
}

bool some_op_escapes(const FiniteAlgebra& A,
                     const std::function<bool(int)>& preserves) {
  for (int op = 0; op < A.sig.op_count(); ++op)
    if (!preserves(op)) return true;
  return false;
}

}  // namespace

std::optional<bool> is_primal(const FiniteAlgebra& alg) {
  // Completeness against the known maximal clones: 5 on a two-element
  // carrier, 18 on a three-element one. The algebra is primal iff some
  // basic operation escapes each of them.
  const int n = alg.size;
  if (n != 2 && n != 3) return std::nullopt;

  std::vector<std::function<bool(int)>> clones;

  // bounded orders: the chains, indexed by their middle element
  if (n == 2) {
    clones.push_back([&](int op) { return op_monotone(alg, op, {0, 1}); });
  } else {
    clones.push_back([&](int op) { return op_monotone(alg, op, {1, 0, 2}); });
    clones.push_back([&](int op) { return op_monotone(alg, op, {0, 1, 2}); });
    clones.push_back([&](int op) { return op_monotone(alg, op, {0, 2, 1}); });
  }

  // fixed-point-free permutations of prime order
  if (n == 2) {
    clones.push_back([&](int op) { return op_commutes(alg, op, {1, 0}); });
  } else {
    clones.push_back([&](int op) { return op_commutes(alg, op, {1, 2, 0}); });
  }

  // affine clone over Z_n
  clones.push_back([&](int op) { return op_affine(alg, op); });

  // nontrivial equivalence relations (three-element carrier only)
  if (n == 3) {
    clones.push_back([&](int op) { return op_preserves_equivalence(alg, op, {0, 0, 1}); });
    clones.push_back([&](int op) { return op_preserves_equivalence(alg, op, {0, 1, 0}); });
    clones.push_back([&](int op) { return op_preserves_equivalence(alg, op, {0, 1, 1}); });
  }

  // unary central relations: all proper nonempty subsets
  for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < n; ++e)
      if (mask & (1UL << e)) in[static_cast<std::size_t>(e)] = 1;
    clones.push_back([&alg, in](int op) { return op_preserves_subset(alg, op, in); });
  }

  if (n == 3) {
    // binary central relations: full minus one symmetric off-diagonal pair
    clones.push_back([&](int op) { return op_preserves_binary_central(alg, op, 1, 2); });
    clones.push_back([&](int op) { return op_preserves_binary_central(alg, op, 0, 2); });
    clones.push_back([&](int op) { return op_preserves_binary_central(alg, op, 0, 1); });
    // the 3-regular relation: triples with a repeated entry
    clones.push_back([&](int op) { return op_preserves_not_all_distinct(alg, op); });
  }

  for (const auto& preserves : clones)
    if (!some_op_escapes(alg, preserves)) return false;
  return true;
}

DiscSearch decide_discriminator(const GeneratingClass& K,
                                const Limits& limits) {
  if (K.member_count() == 1 && K.has_nontrivial_member()) {
    // cheap definitive positive: a primal member has every operation as a
    // term operation, the discriminator included
    if (is_primal(K.member(0)) == true) {
      DiscSearch out;
      out.status = DiscStatus::found;
      out.by_primality = true;
      out.note = "member is primal: every operation is a term operation";
      return out;
    }
  }
  return find_discriminator_term(K, limits);
}

std::string MinimalityResult::describe() const {
  switch (minimal) {
    case TriState::yes:
      return no_proper_nontrivial_subalgebra
                 ? "no proper nontrivial subalgebra"
                 : "every nontrivial member embeds into every nontrivial "
                   "subalgebra of every member";
    case TriState::no:
      if (!counterexample) return note;
      return "member " + std::to_string(counterexample->member_without_embedding) +
             " does not embed into a nontrivial subalgebra of member " +
             std::to_string(counterexample->sub_member);
    default:
      return note.empty() ? "undecided" : note;
  }
}

MinimalityResult minimal_variety(const GeneratingClass& K,
                                 const DiscSearch& disc, const Limits& limits) {
  if (disc.status != DiscStatus::found)
    throw Error("minimality test requires a discriminator term");
  MinimalityResult out;
  if (!K.has_nontrivial_member()) {
    out.minimal = TriState::no;
    out.note = "trivial variety";
    return out;
  }

  bool only_improper = true;
  for (int mi = 0; mi < K.member_count(); ++mi) {
    const FiniteAlgebra& A = K.member(mi);
    for (const auto& universe : all_subuniverses(A, limits)) {
      if (universe.size() < 2) continue;
      if (universe.size() < static_cast<std::size_t>(A.size)) only_improper = false;
      FiniteAlgebra B = induced_subalgebra(A, universe);
      ++out.subalgebras_checked;
      for (int ai = 0; ai < K.member_count(); ++ai) {
        if (K.member(ai).trivial()) continue;
        if (!find_homomorphism(K.member(ai), B, /*injective=*/true)) {
          out.minimal = TriState::no;
          out.counterexample =
              MinimalityCounterexample{mi, universe, ai};
          return out;
        }
      }
    }
  }
  out.minimal = TriState::yes;
  out.no_proper_nontrivial_subalgebra =
      only_improper && K.member_count() == 1;
  return out;
}

ConsequenceReport quasivariety_minimality_consequence(
    const GeneratingClass& K, const MinimalityResult& minimality,
    const Limits& limits) {
  if (minimality.minimal != TriState::yes)
    throw Error("consequence check requires a minimal variety");
  ConsequenceReport out;
  for (int mi = 0; mi < K.member_count(); ++mi) {
    for (const auto& universe : all_subuniverses(K.member(mi), limits)) {
      if (universe.size() < 2) continue;
      FiniteAlgebra B = induced_subalgebra(K.member(mi), universe);
      for (int ai = 0; ai < K.member_count(); ++ai) {
        const FiniteAlgebra& A = K.member(ai);
        for (int a = 0; a < A.size; ++a)
          for (int b = a + 1; b < A.size; ++b) {
            ++out.checks;
            std::pair<int, int> sep{a, b};
            if (!find_homomorphism(A, B, false, {&sep, 1})) {
              out.pass = false;
              out.violation = ConsequenceViolation{mi, universe, ai, {a, b}};
              return out;
            }
          }
      }
    }
  }
  return out;
}

Verdict sc_verdict(const GeneratingClass& K, const VerdictOptions& options) {
  const Limits& limits = options.limits;
  Verdict v;

  if (!K.has_nontrivial_member()) {
    // the trivial quasivariety: every quasi-identity is admissible and
    // valid, so both properties hold degenerately
    v.trivial_class = true;
    v.discriminator_status = DiscStatus::none;
    v.asc = TriState::yes;
    v.asc_justification = "trivial";
    v.sc = TriState::yes;
    v.sc_justification = "trivial";
    v.minimal = TriState::no;
    return v;
  }

  DiscSearch disc = decide_discriminator(K, limits);
  v.discriminator_status = disc.status;
  v.discriminator_term = disc.term;
  v.is_discriminator_variety = disc.status == DiscStatus::found;

  if (disc.status == DiscStatus::found) {
    v.asc = TriState::yes;
    v.asc_justification = "discriminator variety";

    // idempotents first: an idempotent in the rank-1 free algebra settles
    // SC, and two distinct constants rule one out without building it
    bool idempotent_possible = true;
    const Signature& sig = K.signature();
    for (int i = 0; i < sig.op_count() && idempotent_possible; ++i) {
      if (sig.arity(i) != 0) continue;
      for (int j = i + 1; j < sig.op_count(); ++j) {
        if (sig.arity(j) != 0) continue;
        for (const FiniteAlgebra& A : K.members())
          if (A.tables[static_cast<std::size_t>(i)][0] !=
              A.tables[static_cast<std::size_t>(j)][0]) {
            idempotent_possible = false;
            v.distinct_constants = true;
            break;
          }
        if (!idempotent_possible) break;
      }
    }

    if (idempotent_possible) {
      try {
        TermFunctionAlgebra f1 = free_algebra(K, 1, limits);
        if (auto e = f1.find_idempotent()) {
          v.idempotent_in_f1 = {*e, f1.witness(*e)};
          v.sc = TriState::yes;
          v.sc_justification = "idempotent";
        }
      } catch (const CapacityError& e) {
        v.capacity_note = e.what();
        v.sc = TriState::unknown;
        v.sc_justification = "unknown";
        return v;
      }
    }

    const bool need_minimality =
        v.sc != TriState::yes || options.always_report_minimality;
    if (need_minimality) {
      try {
        MinimalityResult m = minimal_variety(K, disc, limits);
        v.minimal = m.minimal;
        v.minimality = m;
        if (m.minimal == TriState::yes && options.run_consequence)
          v.consequence = quasivariety_minimality_consequence(K, m, limits);
      } catch (const CapacityError& e) {
        v.minimal = TriState::unknown;
        v.capacity_note = e.what();
      }
    }

    if (v.sc != TriState::yes) {
      // finite language: SC iff the rank-1 free algebra has an idempotent
      // or the variety is minimal
      if (v.minimal == TriState::yes) {
        v.sc = TriState::yes;
        v.sc_justification = "minimal";
      } else if (v.minimal == TriState::no) {
        v.sc = TriState::no;
        v.sc_justification = "no idempotent and not minimal";
      } else {
        v.sc = TriState::unknown;
        v.sc_justification = "unknown";
      }
    }
    return v;
  }

  if (disc.status == DiscStatus::unknown) {
    v.capacity_note = disc.note;
    v.asc = TriState::unknown;
    v.asc_justification = "unknown";
    v.sc = TriState::unknown;
    v.sc_justification = "unknown";
    return v;
  }

  // no discriminator term: ASC is beyond this tool; a refutation search can
  // still settle SC negatively
  v.asc = TriState::unknown;
  v.asc_justification = "no discriminator term; ASC undecided here";
  v.sc = TriState::unknown;
  v.sc_justification = "unknown";
  if (options.run_refutation && options.refute.max_candidates > 0) {
    try {
      RefuteResult r = refute_sc(K, options.refute, limits);
      if (r.witness) {
        v.sc = TriState::no;
        v.sc_justification = "refuted by quasi-identity";
        v.refutation = std::move(r.witness);
      }
    } catch (const CapacityError& e) {
      v.capacity_note = e.what();
    }
  }
  return v;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Unbiased uniform draw independent of the standard library's
/// distribution implementations, so reports are reproducible everywhere.
int det_uniform(std::mt19937_64& rng, int n) {
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = ~0ULL - (~0ULL % span);
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return static_cast<int>(r % span);
}

struct SampleOutcome {
  bool trivial = false;
  DiscStatus disc = DiscStatus::unknown;
  bool no_proper_nontrivial_sub = false;
  TriState sc = TriState::unknown;
  bool capacity = false;
};

SampleOutcome survey_sample(const SurveyParams& params, int index) {
  Signature sig;
  for (std::size_t i = 0; i < params.arities.size(); ++i)
    sig.symbols.push_back(
        {"f" + std::to_string(i), params.arities[i]});

  std::mt19937_64 rng(splitmix64(splitmix64(params.seed) ^
                                 (0x9E3779B97F4A7C15ULL *
                                  static_cast<std::uint64_t>(index + 1))));
  FiniteAlgebra A;
  A.sig = sig;
  A.size = params.size;
  A.tables.resize(sig.symbols.size());
  for (std::size_t op = 0; op < sig.symbols.size(); ++op) {
    std::size_t cells = 1;
    for (int j = 0; j < sig.symbols[op].arity; ++j)
      cells *= static_cast<std::size_t>(params.size);
    A.tables[op].resize(cells);
    for (std::size_t c = 0; c < cells; ++c)
      A.tables[op][c] = det_uniform(rng, params.size);
  }

  SampleOutcome out;
  if (A.trivial()) {
    out.trivial = true;
    out.disc = DiscStatus::none;
    out.sc = TriState::yes;
    out.no_proper_nontrivial_sub = true;
    return out;
  }
  GeneratingClass K({A});

  bool proper_nontrivial = false;
  try {
    for (const auto& u : all_subuniverses(A, params.limits))
      if (u.size() >= 2 && u.size() < static_cast<std::size_t>(A.size))
        proper_nontrivial = true;
  } catch (const CapacityError&) {
    out.capacity = true;
  }
  out.no_proper_nontrivial_sub = !proper_nontrivial;

  VerdictOptions opts;
  opts.limits = params.limits;
  opts.run_refutation = false;
  opts.always_report_minimality = false;
  opts.run_consequence = false;
  Verdict v = sc_verdict(K, opts);
  out.disc = v.discriminator_status;
  out.sc = v.sc;
  if (!v.capacity_note.empty() || v.discriminator_status == DiscStatus::unknown)
    out.capacity = true;
  return out;
}

}  // namespace

SurveyReport run_survey(const SurveyParams& params) {
  if (params.samples < 1) throw Error("survey needs at least one sample");
  if (params.size < 1) throw Error("survey carrier must be nonempty");

  SurveyReport report;
  report.params = params;
  report.total = params.samples;

  int threads = params.threads;
  if (threads <= 0)
    threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min(threads, params.samples);

  std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(params.samples));
  auto worker = [&](int offset) {
    for (int i = offset; i < params.samples; i += threads)
      outcomes[static_cast<std::size_t>(i)] = survey_sample(params, i);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::future<void>> futs;
    for (int t = 0; t < threads; ++t)
      futs.push_back(std::async(std::launch::async, worker, t));
    for (auto& f : futs) f.get();
  }

  // merged by sample index, independent of scheduling
  for (const SampleOutcome& o : outcomes) {
    if (o.trivial) ++report.trivial;
    switch (o.disc) {
      case DiscStatus::found: ++report.disc_term_found; break;
      case DiscStatus::none: ++report.disc_term_none; break;
      default: ++report.disc_term_unknown; break;
    }
    if (o.no_proper_nontrivial_sub) ++report.no_proper_nontrivial_subalgebra;
    switch (o.sc) {
      case TriState::yes: ++report.sc_yes; break;
      case TriState::no: ++report.sc_no; break;
      default: ++report.sc_unknown; break;
    }
    if (o.capacity) ++report.capacity_exceeded;
  }
  return report;
}

}  // namespace uasc

#include "uasc/admissibility.hpp"

#include <algorithm>
#include <map>

namespace uasc {

QuasivarietyCheck holds_in_quasivariety(const GeneratingClass& K,
                                        const QuasiIdentity& q,
                                        const Limits& limits) {
  // quasi-identities persist under subalgebras, products and ultraproducts,
  // so truth in the generated quasivariety is truth in every member
  for (int m = 0; m < K.member_count(); ++m) {
    AlgebraCheck check = holds_in_algebra(K.member(m), q, limits);
    if (!check.holds) {
      QuasivarietyCheck out;
      out.holds = false;
      out.falsification = Falsification{m, std::move(check.falsifying_assignment)};
      return out;
    }
  }
  return {};
}

bool holds_in_quasivariety_via_fp(const GeneratingClass& K,
                                  const QuasiIdentity& q,
                                  const Limits& limits) {
  int rank = 0;
  for (int v : q.variables()) rank = std::max(rank, v + 1);
  if (rank == 0 && !K.signature().has_constants()) {
    // ground sentence over a constant-free signature cannot occur: terms
    // need leaves
    throw Error("ground quasi-identity needs constants");
  }
  TermFunctionAlgebra p = fp_algebra(K, q.premises, rank, limits);
  std::vector<int> gens(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) gens[static_cast<std::size_t>(i)] = p.generator(i);
  return p.eval(q.conclusion.lhs, gens) == p.eval(q.conclusion.rhs, gens);
}

bool holds_in_free_rank(const GeneratingClass& K, const QuasiIdentity& q,
                        int rank, const Limits& limits) {
  TermFunctionAlgebra f = free_algebra(K, rank, limits);
  std::vector<int> vars = q.variables();
  const int k = static_cast<int>(vars.size());
  const std::size_t n = f.size();

  double space = 1;
  for (int i = 0; i < k; ++i) space *= static_cast<double>(n);
  if (space > static_cast<double>(limits.assignment_cap))
    throw CapacityError("free-rank assignment cap", limits.assignment_cap,
                        static_cast<std::size_t>(space));

  std::vector<int> slot(vars.empty() ? 0 : static_cast<std::size_t>(vars.back()) + 1, 0);
  std::vector<int> choice(static_cast<std::size_t>(k), 0);
  while (true) {
    for (int i = 0; i < k; ++i)
      slot[static_cast<std::size_t>(vars[static_cast<std::size_t>(i)])] =
          choice[static_cast<std::size_t>(i)];
    bool premises_hold = true;
    for (const auto& p : q.premises)
      if (f.eval(p.lhs, slot) != f.eval(p.rhs, slot)) {
        premises_hold = false;
        break;
      }
    if (premises_hold &&
        f.eval(q.conclusion.lhs, slot) != f.eval(q.conclusion.rhs, slot))
      return false;
    int j = k - 1;
    while (j >= 0 && ++choice[static_cast<std::size_t>(j)] == static_cast<int>(n)) {
      choice[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return true;
}

namespace {

/// Falsifying substitution search in the free algebra of the given rank.
std::optional<std::vector<std::pair<int, Term>>> falsify_in_rank(
    const GeneratingClass& K, const QuasiIdentity& q, int rank,
    const Limits& limits) {
  TermFunctionAlgebra f = free_algebra(K, rank, limits);
  std::vector<int> vars = q.variables();
  const int k = static_cast<int>(vars.size());
  const std::size_t n = f.size();

  double space = 1;
  for (int i = 0; i < k; ++i) space *= static_cast<double>(n);
  if (space > static_cast<double>(limits.assignment_cap))
    throw CapacityError("admissibility assignment cap", limits.assignment_cap,
                        static_cast<std::size_t>(space));

  std::vector<int> slot(vars.empty() ? 0 : static_cast<std::size_t>(vars.back()) + 1, 0);
  std::vector<int> choice(static_cast<std::size_t>(k), 0);
  while (true) {
    for (int i = 0; i < k; ++i)
      slot[static_cast<std::size_t>(vars[static_cast<std::size_t>(i)])] =
          choice[static_cast<std::size_t>(i)];
    bool premises_hold = true;
    for (const auto& p : q.premises)
      if (f.eval(p.lhs, slot) != f.eval(p.rhs, slot)) {
        premises_hold = false;
        break;
      }
    if (premises_hold &&
        f.eval(q.conclusion.lhs, slot) != f.eval(q.conclusion.rhs, slot)) {
      std::vector<std::pair<int, Term>> cert;
      for (int i = 0; i < k; ++i)
        cert.emplace_back(vars[static_cast<std::size_t>(i)],
                          f.witness(choice[static_cast<std::size_t>(i)]));
      return cert;
    }
    int j = k - 1;
    while (j >= 0 && ++choice[static_cast<std::size_t>(j)] == static_cast<int>(n)) {
      choice[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return std::nullopt;
}

AdmissibilityResult is_admissible_impl(const GeneratingClass& K,
                                       const QuasiIdentity& q, bool known_valid,
                                       const Limits& limits) {
  // the free algebra lies in the quasivariety, so valid implies admissible
  if (known_valid) return {};
  // premises unsatisfiable in free algebras make q vacuously true there
  if (!satisfiable_in_free(K, q.premises, limits).satisfiable) return {};
  // otherwise search for a falsifying substitution; rank m = max member
  // size is complete, lower ranks find certificates cheaply first
  const int m = std::max(1, K.max_member_size());
  for (int rank = 1; rank <= m; ++rank) {
    if (auto cert = falsify_in_rank(K, q, rank, limits))
      return {false, std::move(*cert)};
  }
  return {};
}

}  // namespace

AdmissibilityResult is_admissible(const GeneratingClass& K,
                                  const QuasiIdentity& q,
                                  const Limits& limits) {
  bool valid = holds_in_quasivariety(K, q, limits).holds;
  return is_admissible_impl(K, q, valid, limits);
}

Classification classify(const GeneratingClass& K, const QuasiIdentity& q,
                        const Limits& limits) {
  Classification out;
  QuasivarietyCheck validity = holds_in_quasivariety(K, q, limits);
  out.valid_in_q = validity.holds;
  out.validity_counterexample = std::move(validity.falsification);

  AdmissibilityResult adm = is_admissible_impl(K, q, out.valid_in_q, limits);
  out.admissible = adm.admissible;
  out.admissibility_counterexample = std::move(adm.falsifying_substitution);

  if (out.admissible) {
    FreeSatisfaction sat = satisfiable_in_free(K, q.premises, limits);
    out.activity = sat.satisfiable ? Activity::active : Activity::passive;
    out.activity_witness = std::move(sat.witness);
  } else {
    out.activity = Activity::not_applicable;
  }
  return out;
}

namespace {

/// Canonical enumeration of candidate premise terms grouped by node count:
/// variables and constants are the 1-node terms, applications combine
/// smaller terms. Within one node count the order is (variable index,
/// symbol name, arguments lexicographically), which agrees with
/// Term::compare.
class TermPool {
 public:
  TermPool(const Signature& sig, int vars) : sig_(sig), vars_(vars) {
    by_nodes_.resize(2);
    for (int v = 0; v < vars_; ++v) by_nodes_[1].push_back(Term::var(v));
    std::vector<int> order(static_cast<std::size_t>(sig.op_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig.name(a) < sig.name(b);
    });
    ops_by_name_ = order;
    for (int op : ops_by_name_)
      if (sig.arity(op) == 0) by_nodes_[1].push_back(Term::app(sig.name(op)));
  }

  /// Terms with exactly n nodes (depth-capped); grows the pool on demand.
  const std::vector<Term>& with_nodes(int n, int max_depth) {
    while (static_cast<int>(by_nodes_.size()) <= n) {
      int target = static_cast<int>(by_nodes_.size());
      std::vector<Term> out;
      for (int op : ops_by_name_) {
        const int r = sig_.arity(op);
        if (r == 0) continue;
        if (target - 1 < r) continue;
        std::vector<int> parts(static_cast<std::size_t>(r), 1);
        std::vector<const Term*> pick(static_cast<std::size_t>(r), nullptr);
        compose(op, r, 0, target - 1, parts, pick, max_depth, out);
      }
      by_nodes_.push_back(std::move(out));
    }
    return by_nodes_[static_cast<std::size_t>(n)];
  }

  std::size_t materialized() const {
    std::size_t t = 0;
    for (const auto& level : by_nodes_) t += level.size();
    return t;
  }

 private:
  void compose(int op, int r, int pos, int remaining, std::vector<int>& parts,
               std::vector<const Term*>& pick, int max_depth,
               std::vector<Term>& out) {
    if (pos == r) {
      std::vector<Term> args;
      args.reserve(static_cast<std::size_t>(r));
      int depth = 0;
      for (const Term* t : pick) {
        args.push_back(*t);
        depth = std::max(depth, t->depth());
      }
      if (depth + 1 > max_depth) return;
      out.push_back(Term::app(sig_.name(op), std::move(args)));
      return;
    }
    int left = r - pos - 1;  // later positions need at least 1 node each
    for (int n = 1; n <= remaining - left; ++n) {
      const auto& level = by_nodes_[static_cast<std::size_t>(n)];
      parts[static_cast<std::size_t>(pos)] = n;
      for (const Term& t : level) {
        pick[static_cast<std::size_t>(pos)] = &t;
        compose(op, r, pos + 1, remaining - n, parts, pick, max_depth, out);
      }
    }
  }

  const Signature& sig_;
  int vars_;
  std::vector<int> ops_by_name_;
  std::vector<std::vector<Term>> by_nodes_;
};

struct EquationPool {
  std::vector<Equation> eqs;       // ordered by (nodes, lhs, rhs)
  std::vector<int> nodes;          // node count per equation
  std::vector<std::size_t> level_end;  // prefix end per node count

  /// Materializes equations with exactly n total nodes: lhs strictly
  /// before rhs in the canonical term order (identical sides are vacuous).
  void grow_to(TermPool& terms, int n, int max_depth) {
    while (static_cast<int>(level_end.size()) < n + 1) {
      int target = static_cast<int>(level_end.size());
      if (target >= 2) {
        terms.with_nodes(target - 1, max_depth);  // materialize all levels
        for (int ln = 1; ln <= target - 1; ++ln) {
          int rn = target - ln;
          if (ln > rn) break;
          const auto& ls = terms.with_nodes(ln, max_depth);
          const auto& rs = terms.with_nodes(rn, max_depth);
          for (std::size_t i = 0; i < ls.size(); ++i) {
            for (std::size_t j = (ln == rn ? i + 1 : 0); j < rs.size(); ++j) {
              eqs.push_back(Equation{ls[i], rs[j]});
              nodes.push_back(target);
            }
          }
        }
      }
      level_end.push_back(eqs.size());
    }
  }
};

bool uses_exactly_vars(const std::vector<Equation>& premises, int v) {
  std::vector<int> vars;
  for (const auto& eq : premises) {
    eq.lhs.collect_vars(vars);
    eq.rhs.collect_vars(vars);
  }
  std::vector<char> seen(static_cast<std::size_t>(v), 0);
  for (int x : vars) {
    if (x >= v) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

RefuteResult refute_sc(const GeneratingClass& K, const RefuteBudget& budget,
                       const Limits& limits) {
  if (budget.max_vars < 1 || budget.max_premises < 1 || budget.max_depth < 1)
    throw Error("refutation budgets must be positive");

  RefuteResult result;
  result.search_exhausted = true;
  TermFunctionAlgebra f1 = free_algebra(K, 1, limits);

  const int vmax = budget.max_vars;
  const int ground_start = K.signature().has_constants() ? 0 : 1;
  for (int v = ground_start; v <= vmax && !result.witness; ++v) {
    TermPool terms(K.signature(), v);
    EquationPool eqs;
    std::vector<Equation> premises;
    std::vector<std::size_t> chosen;

    for (int total = 2; total <= budget.max_total_nodes && !result.witness;
         ++total) {
      eqs.grow_to(terms, total, budget.max_depth);
      // sets of equations with ascending indices summing to `total` nodes
      auto enumerate = [&](auto&& self, std::size_t from, int remaining) -> bool {
        if (result.witness) return false;
        if (remaining == 0) {
          premises.clear();
          for (std::size_t e : chosen) premises.push_back(eqs.eqs[e]);
          if (!uses_exactly_vars(premises, v)) return true;
          if (result.candidates_examined >= budget.max_candidates) {
            result.search_exhausted = false;
            return false;
          }
          ++result.candidates_examined;

          // sound witness filter: premises must be satisfiable in some
          // member (nontrivial presented algebra possible) yet
          // unsatisfiable in the free algebra
          TermFunctionAlgebra p = fp_algebra(K, premises, v, limits);
          if (p.trivial()) return true;
          if (satisfiable_in_free(f1, premises, limits).satisfiable)
            return true;
          QuasiIdentity q;
          q.premises = premises;
          q.conclusion = Equation{p.witness(0), p.witness(1)};
          result.witness = std::move(q);
          return false;
        }
        if (static_cast<int>(chosen.size()) >= budget.max_premises) return true;
        for (std::size_t e = from; e < eqs.eqs.size(); ++e) {
          int n = eqs.nodes[e];
          if (n > remaining) break;  // equations are ordered by node count
          int slots_left = budget.max_premises - static_cast<int>(chosen.size()) - 1;
          if (remaining - n > 0 && slots_left == 0) continue;
          chosen.push_back(e);
          bool keep = self(self, e + 1, remaining - n);
          chosen.pop_back();
          if (!keep) return false;
        }
        return true;
      };
      enumerate(enumerate, 0, total);
    }
  }
  if (result.witness) result.search_exhausted = false;
  return result;
}

}  // namespace uasc

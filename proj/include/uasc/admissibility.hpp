#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uasc/free_algebra.hpp"
#include "uasc/term.hpp"

namespace uasc {

/// A falsifying assignment inside a member of the generating class.
struct Falsification {
  int member = 0;
  std::vector<std::pair<int, int>> assignment;  // variable -> element
};

struct QuasivarietyCheck {
  bool holds = true;
  std::optional<Falsification> falsification;
};

/// A quasi-identity holds in the generated quasivariety iff it holds in
/// every member. Returns the first falsifying member and assignment.
QuasivarietyCheck holds_in_quasivariety(const GeneratingClass& K,
                                        const QuasiIdentity& q,
                                        const Limits& limits = {});

/// Independent route through the finitely presented algebra of q's
/// premises: builds it and evaluates the conclusion at the generators.
/// Must agree with holds_in_quasivariety; used as a cross-check.
bool holds_in_quasivariety_via_fp(const GeneratingClass& K,
                                  const QuasiIdentity& q,
                                  const Limits& limits = {});

struct AdmissibilityResult {
  bool admissible = true;
  /// Variable -> term substitution falsifying q in a free algebra.
  std::vector<std::pair<int, Term>> falsifying_substitution;
};

/// Whether q holds in the free algebra of denumerable rank. A falsifying
/// substitution, when one exists, can always be compressed into the free
/// algebra of rank m = max member size (a falsifying assignment into a
/// member takes at most m distinct values), so the search is complete at
/// that rank. Cheap sound shortcuts run first: q valid in the quasivariety,
/// or premises unsatisfiable in free algebras.
AdmissibilityResult is_admissible(const GeneratingClass& K,
                                  const QuasiIdentity& q,
                                  const Limits& limits = {});

/// Exhaustive satisfaction of q in the free algebra of exactly the given
/// rank. Oracle surface for the rank-bound property tests.
bool holds_in_free_rank(const GeneratingClass& K, const QuasiIdentity& q,
                        int rank, const Limits& limits = {});

enum class Activity { active, passive, not_applicable };

struct Classification {
  bool valid_in_q = false;
  std::optional<Falsification> validity_counterexample;
  bool admissible = false;
  std::vector<std::pair<int, Term>> admissibility_counterexample;
  Activity activity = Activity::not_applicable;
  std::vector<std::pair<int, Term>> activity_witness;  // when active
};

/// Full classification: validity, admissibility, and for admissible
/// quasi-identities the active/passive dichotomy (premises satisfiable in
/// free algebras or not).
Classification classify(const GeneratingClass& K, const QuasiIdentity& q,
                        const Limits& limits = {});

struct RefuteBudget {
  int max_vars = 1;
  int max_premises = 2;
  int max_depth = 2;
  /// Extra guards so the canonical enumeration terminates: total term nodes
  /// per premise set, and number of candidate sets examined.
  int max_total_nodes = 10;
  std::size_t max_candidates = 200000;
};

struct RefuteResult {
  std::optional<QuasiIdentity> witness;
  /// True when every premise set within the budgets was examined; false
  /// when an internal cap stopped the enumeration first.
  bool search_exhausted = false;
  std::size_t candidates_examined = 0;
};

/// Searches for a refutation of structural completeness: a premise set
/// unsatisfiable in free algebras whose finitely presented algebra is
/// nontrivial. Two distinct elements of that algebra give witness terms
/// s, t, and premises => s = t is admissible (passive) yet fails in the
/// quasivariety. Premise sets are enumerated canonically by (variable
/// count, total term nodes, lexicographic order).
RefuteResult refute_sc(const GeneratingClass& K, const RefuteBudget& budget,
                       const Limits& limits = {});

}  // namespace uasc

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uasc/admissibility.hpp"
#include "uasc/free_algebra.hpp"
#include "uasc/term.hpp"

namespace uasc {

enum class TriState { yes, no, unknown };
const char* to_string(TriState t);

enum class DiscStatus { found, none, unknown };

struct DiscSearch {
  DiscStatus status = DiscStatus::unknown;
  std::optional<Term> term;
  bool by_primality = false;  // existence certified without a term
  std::size_t elements_explored = 0;
  std::string note;  // reason for none/unknown
};

/// Looks for a term that is the discriminator operation on every member:
/// a pre-filter checks that the discriminator preserves the subuniverses of
/// each member's square (term operations must), then the rank-3 free
/// closure is scanned for the discriminator's function vector, stopping as
/// soon as it appears. Capacity exhaustion yields `unknown`, distinct from
/// a definitive `none`.
DiscSearch find_discriminator_term(const GeneratingClass& K,
                                   const Limits& limits = {});

/// Completeness test against the maximal clones of a two- or three-element
/// carrier. A primal algebra has every operation as a term operation.
/// nullopt for carriers the test does not cover.
std::optional<bool> is_primal(const FiniteAlgebra& alg);

/// Discriminator-term existence, layered: the subuniverse pre-filter and
/// closure search first; when the closure is inconclusive and the class has
/// a single member that is primal, existence is certified without a
/// materialized term (`by_primality`).
DiscSearch decide_discriminator(const GeneratingClass& K,
                                const Limits& limits = {});

/// The discriminator table on a carrier of the given size.
std::vector<int> discriminator_table(int size);

struct MinimalityCounterexample {
  int sub_member = 0;               // member owning the subalgebra
  std::vector<int> sub_universe;    // the nontrivial subuniverse B
  int member_without_embedding = 0; // member that does not embed into B
};

struct MinimalityResult {
  TriState minimal = TriState::unknown;
  std::optional<MinimalityCounterexample> counterexample;
  int subalgebras_checked = 0;
  bool no_proper_nontrivial_subalgebra = false;
  std::string note;
  std::string describe() const;
};

/// Minimality of the generated variety, valid only for discriminator
/// varieties: there the nontrivial simple algebras are exactly the
/// nontrivial subalgebras of members, so the variety is minimal iff every
/// nontrivial member embeds into every nontrivial subalgebra of every
/// member. Trivial members generate the trivial variety and are exempt.
/// Requires a successful discriminator search; errors otherwise.
MinimalityResult minimal_variety(const GeneratingClass& K,
                                 const DiscSearch& disc,
                                 const Limits& limits = {});

struct ConsequenceViolation {
  int sub_member = 0;
  std::vector<int> sub_universe;
  int member = 0;
  std::pair<int, int> unseparated;
};

struct ConsequenceReport {
  bool pass = true;
  std::optional<ConsequenceViolation> violation;
  int checks = 0;
};

/// Verified consequence of minimality for discriminator varieties: minimal
/// varieties are minimal as quasivarieties, hence every nontrivial
/// subalgebra B generates the whole quasivariety, hence homomorphisms into
/// B separate the points of every member. A violation indicates a bug in
/// the implementation (or the theory) and should never occur. Requires a
/// YES minimality result; errors otherwise.
ConsequenceReport quasivariety_minimality_consequence(
    const GeneratingClass& K, const MinimalityResult& minimality,
    const Limits& limits = {});

struct Verdict {
  DiscStatus discriminator_status = DiscStatus::unknown;
  std::optional<Term> discriminator_term;
  bool is_discriminator_variety = false;

  bool trivial_class = false;
  /// Fast path: two constants distinct in some member rule out idempotents
  /// in free algebras without building them.
  bool distinct_constants = false;
  std::optional<std::pair<int, Term>> idempotent_in_f1;

  TriState minimal = TriState::unknown;
  std::optional<MinimalityResult> minimality;

  TriState asc = TriState::unknown;
  std::string asc_justification;
  TriState sc = TriState::unknown;
  std::string sc_justification;

  std::optional<QuasiIdentity> refutation;
  std::optional<ConsequenceReport> consequence;

  std::string capacity_note;  // set when an unknown stems from a cap
};

struct VerdictOptions {
  Limits limits;
  /// Refutation search to run when no discriminator term is found;
  /// disabled when max_candidates is 0.
  RefuteBudget refute;
  bool run_refutation = true;
  /// Report minimality even when the idempotent already settles SC.
  bool always_report_minimality = true;
  /// Run the minimality consequence check on YES results.
  bool run_consequence = true;
};

/// The SC/ASC decision pipeline for the quasivariety generated by K:
/// discriminator term => ASC; then idempotent in the rank-1 free algebra
/// (the language is finite, so an idempotent in an elementary extension
/// reflects down) => SC; else minimality decides SC. Without a
/// discriminator term the verdict is unknown unless the refutation search
/// produces an admissible quasi-identity failing in K.
Verdict sc_verdict(const GeneratingClass& K, const VerdictOptions& options = {});

struct SurveyParams {
  int size = 3;
  std::vector<int> arities = {2};
  int samples = 200;
  std::uint64_t seed = 1;
  Limits limits;
  int threads = 0;  // 0: hardware concurrency
};

struct SurveyReport {
  SurveyParams params;
  int total = 0;
  int trivial = 0;
  int disc_term_found = 0;
  int disc_term_none = 0;
  int disc_term_unknown = 0;
  int no_proper_nontrivial_subalgebra = 0;
  int sc_yes = 0;
  int sc_no = 0;
  int sc_unknown = 0;
  int capacity_exceeded = 0;  // samples where any cap was hit
};

/// Samples random operation tables (uniform per cell, deterministic in the
/// seed) and reports how many generate a discriminator variety, have no
/// proper nontrivial subalgebra, and come out SC. Samples are evaluated
/// independently and merged by index, so the report does not depend on
/// scheduling.
SurveyReport run_survey(const SurveyParams& params);

}  // namespace uasc

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uasc/algebra.hpp"
#include "uasc/term.hpp"

namespace uasc {

/// A nonempty finite set of finite algebras over one signature. Generates
/// the quasivariety all decision procedures work against.
class GeneratingClass {
 public:
  explicit GeneratingClass(std::vector<FiniteAlgebra> members);

  const std::vector<FiniteAlgebra>& members() const { return members_; }
  const FiniteAlgebra& member(int i) const {
    return members_[static_cast<std::size_t>(i)];
  }
  int member_count() const { return static_cast<int>(members_.size()); }
  const Signature& signature() const { return members_.front().sig; }
  int max_member_size() const;
  bool has_nontrivial_member() const;

 private:
  std::vector<FiniteAlgebra> members_;
};

/// An algebra of term functions, represented element by element as function
/// vectors: one value per column, where a column is a (member, assignment)
/// pair. Realizes free algebras of finite rank (all assignments) and
/// finitely presented algebras (assignments satisfying the presentation).
/// Every element records the derivation that first produced it, from which
/// a witness term of minimal depth is materialized on demand.
///
/// Element order is canonical: generators first, then round by round, each
/// round sorted by (witness node count, symbol name rank, argument element
/// indices). Builders are deterministic.
class TermFunctionAlgebra {
 public:
  struct Column {
    int member = 0;
    std::vector<std::uint8_t> assignment;  // one value per generator
  };

  int rank() const { return rank_; }
  std::size_t size() const { return vector_count_; }
  const Signature& signature() const;
  const std::vector<FiniteAlgebra>& members() const;
  const std::vector<Column>& columns() const { return columns_; }
  std::size_t column_count() const { return columns_.size(); }

  /// Element index realizing generator i (its restricted projection).
  int generator(int i) const { return generators_[static_cast<std::size_t>(i)]; }

  std::span<const std::uint8_t> function_vector(int element) const;
  std::optional<int> index_of(std::span<const std::uint8_t> vec) const;

  /// Pointwise application; the closure invariant guarantees the result is
  /// an element.
  int apply(int op, std::span<const int> args) const;

  /// Evaluates a term whose variables are assigned element indices.
  int eval(const Term& t, std::span<const int> var_to_element) const;

  bool trivial() const { return size() == 1; }

  Term witness(int element) const;
  std::int64_t witness_nodes(int element) const;

  /// Least element fixed by every operation (constants included), if any.
  std::optional<int> find_idempotent() const;

  /// Materializes the induced finite algebra; capacity error when the
  /// total table size exceeds the configured cap.
  FiniteAlgebra induced_algebra(const Limits& limits = {}) const;

 private:
  friend class ClosureBuilder;

  struct Derivation {
    int op = -1;  // -1: generator, args_begin holds the variable index
    std::uint32_t args_begin = 0;
  };

  const std::uint8_t* vector_data(int element) const;
  void rebuild_lookup();

  std::vector<FiniteAlgebra> members_;
  std::vector<Column> columns_;
  int rank_ = 0;
  std::size_t vector_count_ = 0;
  std::vector<std::uint8_t> arena_;  // vector_count_ rows of column_count() bytes
  std::vector<Derivation> derivations_;
  std::vector<int> arg_pool_;
  std::vector<std::int64_t> nodes_;  // witness node counts
  std::vector<int> generators_;
  std::vector<int> name_rank_;
  std::unordered_map<std::uint64_t, std::vector<int>> lookup_;  // hash buckets
  Limits limits_;
};

/// The free algebra of the given rank for the quasivariety generated by K:
/// closure of the projection vectors under all operations applied
/// pointwise. Throws CapacityError when the closure exceeds the caps.
TermFunctionAlgebra free_algebra(const GeneratingClass& K, int rank,
                                 const Limits& limits = {});

/// The finitely presented algebra for the given premises: columns are
/// restricted to assignments satisfying every premise. rank < 0 deduces the
/// rank from the largest variable. An empty column set yields the trivial
/// one-element algebra.
TermFunctionAlgebra fp_algebra(const GeneratingClass& K,
                               std::span<const Equation> premises,
                               int rank = -1, const Limits& limits = {});

bool is_trivial(const TermFunctionAlgebra& t);

/// Least element e with f(e,...,e) = e for every symbol f (constants must
/// equal e), if any.
std::optional<int> find_idempotent(const FiniteAlgebra& alg);

struct FreeSatisfaction {
  bool satisfiable = false;
  /// Variable -> witness term assignment into the rank-1 free algebra.
  std::vector<std::pair<int, Term>> witness;
};

/// Decides whether the conjunction of the given equations is satisfiable in
/// the free algebra of denumerable rank. Positive-existential sentences
/// transfer between that algebra and its rank-1 retract, so the search runs
/// over rank-1 elements only.
FreeSatisfaction satisfiable_in_free(const GeneratingClass& K,
                                     std::span<const Equation> equations,
                                     const Limits& limits = {});

/// Same, against a prebuilt rank-1 free algebra.
FreeSatisfaction satisfiable_in_free(const TermFunctionAlgebra& free_rank1,
                                     std::span<const Equation> equations,
                                     const Limits& limits = {});

namespace detail {

/// Closure run that optionally stops as soon as a target function vector
/// appears. Used by the discriminator search; `complete` reports whether
/// the closure reached a fixpoint within the caps.
struct ClosureSearch {
  TermFunctionAlgebra algebra;
  bool complete = false;
  std::optional<int> target_element;
  std::optional<Term> target_witness;
};

ClosureSearch close_term_functions(const GeneratingClass& K, int rank,
                                   const std::vector<std::uint8_t>* target,
                                   const Limits& limits);

/// Column layout of the rank-k free algebra: members in class order, each
/// with its assignments in lexicographic order, leftmost generator most
/// significant.
std::vector<TermFunctionAlgebra::Column> free_columns(const GeneratingClass& K,
                                                      int rank);

}  // namespace detail

}  // namespace uasc

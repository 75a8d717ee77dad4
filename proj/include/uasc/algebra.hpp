#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uasc/errors.hpp"
#include "uasc/limits.hpp"

namespace uasc {

/// A finite algebraic language: an ordered list of operation symbols with
/// arities. Arity 0 symbols denote constants. Names are unique.
struct Signature {
  struct Symbol {
    std::string name;
    int arity = 0;
    bool operator==(const Symbol&) const = default;
  };

  std::vector<Symbol> symbols;

  /// Index of a symbol by name, -1 when absent.
  int find(std::string_view name) const;
  int arity(int op) const { return symbols[static_cast<std::size_t>(op)].arity; }
  const std::string& name(int op) const {
    return symbols[static_cast<std::size_t>(op)].name;
  }
  int op_count() const { return static_cast<int>(symbols.size()); }
  bool has_constants() const;

  /// For each symbol, its rank among all symbols sorted by name. Used as
  /// the symbol key of the canonical term order.
  std::vector<int> name_ranks() const;

  bool operator==(const Signature&) const = default;
};

/// A finite algebra: carrier {0..size-1} and one total operation table per
/// signature symbol. Tables are flat, row-major, leftmost argument most
/// significant. Values are immutable after construction and safe to share.
struct FiniteAlgebra {
  Signature sig;
  int size = 0;
  std::vector<std::vector<int>> tables;

  int apply(int op, std::span<const int> args) const;
  bool trivial() const { return size == 1; }
};

/// A totality or range violation found in an operation table.
struct Defect {
  std::string symbol;
  long position = -1;  // flat table index, -1 for size problems
  std::string message;
};

/// Collects every defect of the given algebra; empty means valid.
std::vector<Defect> validate(const FiniteAlgebra& alg);

/// Throws Error with a defect listing when the algebra is invalid.
void require_valid(const FiniteAlgebra& alg);

/// Direct product with mixed-radix carrier encoding (leftmost factor most
/// significant). All factors must share one signature.
FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors,
                             const Limits& limits = {});

/// Least subset containing the seed and all constants, closed under every
/// operation. Errors when the seed is empty and the signature has no
/// constants. Result is sorted.
std::vector<int> generated_subuniverse(const FiniteAlgebra& alg,
                                       std::span<const int> seed);

/// A partition of the carrier compatible with all operations, stored as a
/// canonical block-index vector: block labels appear in first-occurrence
/// order, so equal partitions compare equal.
struct Congruence {
  std::vector<int> block_of;
  int block_count = 0;

  bool is_identity() const {
    return block_count == static_cast<int>(block_of.size());
  }
  bool is_total() const { return block_count <= 1; }
  bool operator==(const Congruence&) const = default;

  /// Canonicalizes an arbitrary block labelling.
  static Congruence from_blocks(std::span<const int> raw);
};

/// True when the partition respects every operation table.
bool is_congruence(const FiniteAlgebra& alg, const Congruence& c);

/// Least congruence identifying all given pairs: union-find closed under
/// one-step operation propagation.
Congruence congruence_generated(const FiniteAlgebra& alg,
                                std::span<const std::pair<int, int>> pairs);

/// True iff the algebra is nontrivial and every principal congruence is
/// total.
bool is_simple(const FiniteAlgebra& alg);

/// Quotient by a congruence; carrier = blocks in canonical order.
/// Rejects partitions that are not congruences.
FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c);

struct Homomorphism {
  std::vector<int> map;
};

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                     std::span<const int> map);

/// Backtracking search for a homomorphism src -> dst, assigning elements in
/// index order with images tried in ascending order, so the first solution
/// is the lexicographically least one. Optional constraints: injectivity,
/// and a list of element pairs whose images must differ.
std::optional<Homomorphism> find_homomorphism(
    const FiniteAlgebra& src, const FiniteAlgebra& dst, bool injective = false,
    std::span<const std::pair<int, int>> distinct_images = {});

bool are_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// The algebra induced on a subuniverse, with elements reindexed in
/// ascending order of the original labels.
FiniteAlgebra induced_subalgebra(const FiniteAlgebra& alg,
                                 std::span<const int> universe);

struct Subalgebra {
  std::vector<int> universe;  // sorted original labels
  FiniteAlgebra algebra;
};

/// All subuniverses (closures of subsets), deduplicated by isomorphism,
/// each paired with its induced algebra. Ordered by (size, universe).
/// Capacity error when the carrier exceeds the subset enumeration cap.
std::vector<Subalgebra> subalgebras_up_to_iso(const FiniteAlgebra& alg,
                                              const Limits& limits = {});

/// All subuniverses without isomorphism dedup, ordered by (size, universe).
std::vector<std::vector<int>> all_subuniverses(const FiniteAlgebra& alg,
                                               const Limits& limits = {});

}  // namespace uasc

#pragma once

#include <cstddef>

namespace uasc {

/// Capacity guards for the combinatorial searches. All of them are hard
/// errors when exceeded, never silent truncation.
struct Limits {
  /// Maximum number of elements in a term-function closure (free and
  /// finitely presented algebras).
  std::size_t free_element_cap = 200000;

  /// Maximum number of pointwise operation applications per closure run.
  std::size_t free_application_cap = 200'000'000;

  /// Subset enumeration (subalgebra listings) is allowed for carriers of
  /// at most this size.
  int subset_carrier_cap = 12;

  /// Maximum carrier size of a direct product.
  std::size_t product_size_cap = 1'000'000;

  /// Maximum number of assignments enumerated when checking sentences.
  std::size_t assignment_cap = 20'000'000;

  /// Maximum total table cells when materializing an induced algebra.
  std::size_t table_cells_cap = 10'000'000;

  /// Witness terms larger than this are not materialized as trees.
  std::size_t witness_node_cap = 1'000'000;
};

}  // namespace uasc

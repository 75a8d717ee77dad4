#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uasc/algebra.hpp"
#include "uasc/limits.hpp"

namespace uasc {

/// A term over a signature: either a variable x<i> or an application of a
/// named symbol to subterms. Terms store symbol names, not indices, so they
/// can outlive any particular algebra; evaluation resolves names against a
/// signature.
class Term {
 public:
  Term() = default;

  static Term var(int index);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const { return var_ >= 0; }
  int var_index() const { return var_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }

  int node_count() const;
  int depth() const;    // leaves have depth 0
  int max_var() const;  // -1 when ground
  void collect_vars(std::vector<int>& out) const;

  /// Canonical term order: node count, then variables before applications,
  /// then variable index / symbol name, then arguments lexicographically.
  static int compare(const Term& a, const Term& b);

  bool operator==(const Term&) const = default;

  std::string to_string() const;

 private:
  int var_ = -1;
  std::string symbol_;
  std::vector<Term> args_;
};

struct Equation {
  Term lhs;
  Term rhs;

  int node_count() const { return lhs.node_count() + rhs.node_count(); }
  bool operator==(const Equation&) const = default;
  std::string to_string() const;
};

/// (forall x)[p1 & ... & pn => conclusion]. An identity is a quasi-identity
/// with zero premises; there is no separate type.
struct QuasiIdentity {
  std::vector<Equation> premises;
  Equation conclusion;

  bool is_identity() const { return premises.empty(); }
  std::vector<int> variables() const;  // sorted distinct indices
  bool operator==(const QuasiIdentity&) const = default;
  std::string to_string() const;
};

/// Grammar (whitespace insensitive):
///   quasi ::= eq ("&" eq)* "=>" eq | eq
///   eq    ::= term "=" term
///   term  ::= "x"<digits> | name "(" term ("," term)* ")" | name
/// 0-ary names are constants and are written bare. Symbols and arities are
/// validated against the signature.
QuasiIdentity parse_quasi_identity(const std::string& text,
                                   const Signature& sig);

Term parse_term(const std::string& text, const Signature& sig);

/// One quasi-identity per line; '#' starts a comment; blank lines skipped.
std::vector<QuasiIdentity> parse_quasi_identity_lines(const std::string& text,
                                                      const Signature& sig);

/// Bottom-up evaluation through the operation tables. The assignment maps
/// variable index -> element; errors on unbound variables and unknown or
/// mis-applied symbols.
int eval_term(const FiniteAlgebra& alg, const Term& t,
              std::span<const int> assignment);

struct AlgebraCheck {
  bool holds = true;
  /// (variable, element) pairs witnessing failure, empty when holds.
  std::vector<std::pair<int, int>> falsifying_assignment;
};

/// Exhaustive satisfaction check over all assignments of the variables that
/// actually occur in q. Capacity error when the assignment space exceeds
/// the configured bound.
AlgebraCheck holds_in_algebra(const FiniteAlgebra& alg, const QuasiIdentity& q,
                              const Limits& limits = {});

}  // namespace uasc

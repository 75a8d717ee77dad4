#pragma once

#include <string>
#include <vector>

#include "uasc/algebra.hpp"

namespace uasc {

struct NamedAlgebra {
  std::string name;
  FiniteAlgebra algebra;
};

/// Parses the textual algebra format:
///
///   algebra <name>
///   size <n>
///   op <name> <arity>
///   <n^arity values, row-major, leftmost argument most significant>
///   ...
///
/// '#' starts a comment. A file may contain several `algebra` blocks; they
/// share the signature of the first block and must list the same
/// operations. Every algebra is validated; defects are reported as errors
/// with positions. Names must be unique.
std::vector<NamedAlgebra> parse_algebra_file(const std::string& text);

std::vector<NamedAlgebra> load_algebra_file(const std::string& path);

}  // namespace uasc

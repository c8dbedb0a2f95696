#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modtwist/lie_algebra.hpp"

namespace modtwist {

/// Syntax or shape error in a structure file. The message names the offending
/// field and, where there is one, the index tuple.
struct MalformedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Contents of a structure file. Every block lives on the ambient algebra g:
/// r in ^2 g, psi and mu in ^k g*, xi in g*, and the subalgebra as a list of
/// spanning vectors of g.
struct StructureFile {
  LieAlgebra algebra;
  std::optional<Multivector> r;
  std::optional<Cochain> psi;
  std::optional<std::vector<Vector>> subalgebra;
  std::optional<Cochain> mu;
  std::optional<Cochain> xi;

  friend bool operator==(const StructureFile& a, const StructureFile& b);
};

/// Throws MalformedInput, or InvalidAlgebra when the bracket table violates
/// the Jacobi identity (checked before any other block is read).
StructureFile parse_structure(std::string_view text);
std::string serialize_structure(const StructureFile& file);

StructureFile read_structure_file(const std::string& path);
void write_structure_file(const std::string& path, const StructureFile& file);

}  // namespace modtwist

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "so4/element.hpp"
#include "so4/label.hpp"
#include "so4/subalgebra.hpp"

namespace so4 {

/// de Graaf's solvable Lie algebras of dimension <= 4 that matter here.
enum class SolvableName { J, K1, K2, L1, L2, L3, L4, L5, M8 };

/// One bracket relation [z_i, z_j] = sum_k coeffs[k] z_k (indices 0-based).
struct StructureConstant {
  int i;
  int j;
  std::vector<Scalar> coeffs;
};

/// Abstract isomorphism type; `a` is set for L3 only.
struct AbstractSolvableType {
  SolvableName name;
  std::optional<Scalar> a;

  int dim() const;
  /// Nonzero brackets [z_i, z_j] with i < j over the abstract basis z_1..z_dim.
  std::vector<StructureConstant> structure_constants() const;

  friend bool operator==(const AbstractSolvableType&, const AbstractSolvableType&) = default;
};

std::string render_abstract_type(const AbstractSolvableType& t);

/// Full structure-constant table T[i][j] (antisymmetric) as vectors of length dim.
std::vector<std::vector<std::vector<Scalar>>> structure_table(const AbstractSolvableType& t);

/// Checks antisymmetry and the Jacobi identity on every basis triple.
bool satisfies_jacobi(const AbstractSolvableType& t);

/// Recognizes the isomorphism type of a solvable subalgebra of dim 1..4 from
/// intrinsic data only (derived algebra and the adjoint action on it).
/// Throws UnsupportedDim or NotSolvable.
AbstractSolvableType abstract_type_of(const Subalgebra& s);

/// The type implied by a solvable class label (e.g. every L3,0^i is L3(0)).
/// Returns nullopt for non-solvable families and Zero.
std::optional<AbstractSolvableType> implied_abstract_type(const ClassLabel& label);

struct Representative {
  ClassLabel label;
  std::vector<Element> generators;
  std::string notes;
};

/// Canonical generators of a class. Parametric classes are materialized from
/// the parameter: J8/K2 need a square root of a^2 and L3 needs sqrt(1+4a);
/// when that root is not in Q(i) NonconstructibleOverField is thrown.
Representative representative_of(const ClassLabel& label);

/// As above, with an explicit a for the a^2 families (a^2 must match).
Representative representative_of(const ClassLabel& label, const Scalar& a);

/// Parameter sample set used for catalog enumeration and tests.
const std::vector<Scalar>& parameter_samples();

/// Builds the catalog from representative_of: every discrete family except
/// Zero, the a^2 families over {0} and parameter_samples() (one entry per
/// distinct a^2), and both L3 branches for each sample where sqrt(1+4a) is
/// in Q(i). This is what data/catalog.json is generated from.
std::vector<Representative> build_catalog();

/// Catalog entries parsed from the embedded JSON data file.
const std::vector<Representative>& enumerate_catalog();

/// Parses a catalog JSON document ({"format_version": ..., "entries": [...]}).
std::vector<Representative> load_catalog(std::string_view json_text);

/// Renders catalog entries as the JSON data-file format.
std::string dump_catalog(const std::vector<Representative>& entries);

inline constexpr std::string_view kCatalogFormatVersion = "1";

}  // namespace so4

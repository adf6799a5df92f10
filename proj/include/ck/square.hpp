#pragma once

#include "ck/analysis.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ck {

// The 3x3 grid of computed sites; rows run over the series sa, sl, sy and
// columns over the fields R, C, Q.
struct MagicSquare {
    int N = 1;
    OmegaVector omega;
    std::array<std::array<AlgebraDescriptor, 3>, 3> grid;
    // Degenerate-realization reports (printed basis not independent at this
    // omega); such sites carry the dimension of what the printed list spans.
    std::vector<std::string> warnings;
};

// The printed 4x4 extension (octonion column, metasymplectic row) for
// N = 1, 2. Label/name text only; these sites are never computed.
struct ExtendedSquareMetadata {
    int N = 1;
    std::array<std::array<std::string, 4>, 4> labels;
    std::array<std::array<std::string, 4>, 4> names;
};

MagicSquare build_square(int N, const OmegaVector& w);

enum class EmitFormat { Table, Json };
// Byte-deterministic rendering; table mirrors the label / name / invariants
// cell layout, json is the full descriptor grid.
std::string emit(const MagicSquare& sq, EmitFormat format,
                 const std::optional<ExtendedSquareMetadata>& extended = std::nullopt);

// Reinterpretation of a matrix over a larger field; bracket-preserving.
CKMatrix embed_scalar(const CKMatrix& x, Field from, Field to);

// The sl -> sy identification: grade-0 generators double diagonally, grade-1
// generators take the ;2 block form. J, M^a, H^a, E^a are grade 0; M, H, J^a
// are grade 1. The induced map on the Lie span preserves brackets.
Doubling embed_double_form(const GeneratorLabel& label);
CKMatrix embed_double(const CKMatrix& x, const GeneratorLabel& label);
GeneratorLabel embed_double_label(const GeneratorLabel& label);

ExtendedSquareMetadata extended_square(int N);

} // namespace ck

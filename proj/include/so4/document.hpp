#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "so4/element.hpp"
#include "so4/subalgebra.hpp"

namespace so4 {

inline constexpr std::string_view kDocumentFormatVersion = "1";

/// JSON input/output for a subalgebra given by a spanning list.
///
///   {"format_version": "1", "basis": [["0","1","0","0","1","0"], ...]}
///
/// Rows are either 6-vectors in (h1,x1,y1,h2,x2,y2) order or 4x4 matrices in
/// block-diagonal form; all rows must use the same kind. Entries are scalar
/// strings (plain JSON integers are accepted too). Unknown keys are ignored.
struct SubalgebraDocument {
  std::string format_version{kDocumentFormatVersion};
  std::vector<Element> basis;
};

/// Throws ParseError on malformed input.
SubalgebraDocument parse_document(std::string_view json_text);

/// Coordinate form, pretty-printed.
std::string render_document(const SubalgebraDocument& doc);
SubalgebraDocument document_of(const Subalgebra& s);

}  // namespace so4

#include "so4/document.hpp"

#include <json.hpp>

#include "so4/errors.hpp"

namespace so4 {

namespace {

using nlohmann::json;

Scalar scalar_of(const json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw ParseError("basis entries must be scalar strings or integers, got " + v.dump());
}

Element row_of_coordinates(const json& row) {
  if (row.size() != kDim) throw ParseError("coordinate rows need 6 entries");
  Element e;
  for (std::size_t k = 0; k < kDim; ++k) e[k] = scalar_of(row[k]);
  return e;
}

Element row_of_matrix(const json& rows) {
  if (rows.size() != 4) throw ParseError("matrix rows need 4x4 entries");
  Matrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4) throw ParseError("matrix rows need 4x4 entries");
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = scalar_of(rows[r][c]);
  }
  try {
    return from_matrix_form(m);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("matrix is not in block-diagonal traceless form: ") + e.what());
  }
}

}  // namespace

SubalgebraDocument parse_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  SubalgebraDocument out;
  try {
    out.format_version = doc.at("format_version").get<std::string>();
    if (out.format_version != kDocumentFormatVersion) {
      throw ParseError("unsupported format_version \"" + out.format_version + "\"");
    }
    const json& basis = doc.at("basis");
    if (!basis.is_array()) throw ParseError("basis must be a list");
    enum class Kind { Unknown, Coordinates, Matrices } kind = Kind::Unknown;
    for (const auto& row : basis) {
      if (!row.is_array() || row.empty()) throw ParseError("each basis entry must be a non-empty list");
      const Kind k = row[0].is_array() ? Kind::Matrices : Kind::Coordinates;
      if (kind != Kind::Unknown && k != kind) throw ParseError("basis mixes coordinate rows and matrices");
      kind = k;
      out.basis.push_back(k == Kind::Matrices ? row_of_matrix(row) : row_of_coordinates(row));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  return out;
}

std::string render_document(const SubalgebraDocument& doc) {
  json basis = json::array();
  for (const auto& e : doc.basis) {
    json row = json::array();
    for (const auto& c : e.coeffs()) row.push_back(render_scalar(c));
    basis.push_back(row);
  }
  json out{{"format_version", doc.format_version}, {"basis", basis}};
  return out.dump(2);
}

SubalgebraDocument document_of(const Subalgebra& s) {
  return {std::string(kDocumentFormatVersion), s.basis()};
}

}  // namespace so4

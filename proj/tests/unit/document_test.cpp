#include <gtest/gtest.h>

#include "so4/document.hpp"
#include "so4/errors.hpp"

using namespace so4;

TEST(Document, CoordinateRows) {
  auto doc = parse_document(R"({"format_version": "1", "basis": [["0","1","0","0","1","0"], [1, 0, 0, "-1/2i", 0, 0]]})");
  ASSERT_EQ(doc.basis.size(), 2u);
  EXPECT_EQ(doc.basis[0], Element::unit(X1) + Element::unit(X2));
  EXPECT_EQ(doc.basis[1][H2], Scalar::fraction(-1, 2) * Scalar::i());
}

TEST(Document, MatrixRows) {
  auto doc = parse_document(R"({"format_version": "1", "basis": [
      [["1","0","0","0"],["0","-1","0","0"],["0","0","0","1"],["0","0","0","0"]]]})");
  ASSERT_EQ(doc.basis.size(), 1u);
  EXPECT_EQ(doc.basis[0], Element::unit(H1) + Element::unit(X2));
}

TEST(Document, Rejections) {
  EXPECT_THROW(parse_document("{"), ParseError);
  EXPECT_THROW(parse_document(R"({"basis": []})"), ParseError);
  EXPECT_THROW(parse_document(R"({"format_version": "9", "basis": []})"), ParseError);
  EXPECT_THROW(parse_document(R"({"format_version": "1", "basis": [["1","0"]]})"), ParseError);
  EXPECT_THROW(parse_document(R"({"format_version": "1", "basis": [["1","0","0","0","0","x"]]})"), ParseError);
  // Off-diagonal block entry.
  EXPECT_THROW(parse_document(R"({"format_version": "1", "basis": [
      [[0,0,1,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]]})"),
               ParseError);
  // Mixed kinds.
  EXPECT_THROW(parse_document(R"({"format_version": "1", "basis": [
      [1,0,0,0,0,0], [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]]})"),
               ParseError);
}

TEST(Document, RenderRoundTripIgnoresExtraKeys) {
  SubalgebraDocument doc;
  doc.basis = {Element::unit(H1) + Scalar::fraction(3, 2) * Element::unit(Y2)};
  std::string text = render_document(doc);
  auto back = parse_document(text);
  EXPECT_EQ(back.basis, doc.basis);
  auto extra = parse_document(R"({"format_version": "1", "seed": 3, "basis": [[1,0,0,0,0,0]]})");
  EXPECT_EQ(extra.basis.size(), 1u);
}

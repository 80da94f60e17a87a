#include <gtest/gtest.h>

#include <random>

#include "hcube/basis.hpp"
#include "hcube/error.hpp"
#include "hcube/polynomial.hpp"
#include "hcube/vertex.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

namespace hcube {
namespace {

Vertex V(const char* s) { return parse_vertex(s); }
Monomial M(const char* s) { return monomial_of(parse_vertex(s)); }

TEST(Vertex, HammingWeight) {
  EXPECT_EQ(hamming_weight(V("000")), 0);
  EXPECT_EQ(hamming_weight(V("111")), 3);
  EXPECT_EQ(hamming_weight(V("011")), 2);
}

TEST(Vertex, BitstringRoundTripAndLayout) {
  const Vertex v = V("100");
  EXPECT_EQ(v.dimension(), 3);
  EXPECT_EQ(v.bits(), 4U);
  EXPECT_TRUE(v.coordinate(0));
  EXPECT_FALSE(v.coordinate(2));
  EXPECT_EQ(to_bitstring(v), "100");
  const std::string wide(64, '1');
  EXPECT_EQ(to_bitstring(parse_vertex(wide)), wide);
}

TEST(Vertex, RejectsMalformedText) {
  EXPECT_THROW(parse_vertex(""), ValidationError);
  EXPECT_THROW(parse_vertex("01x"), ValidationError);
  EXPECT_THROW(parse_vertex(std::string(65, '0')), ValidationError);
  EXPECT_THROW(Vertex(3, 8), ValidationError);
  EXPECT_THROW(Vertex(0, 0), ValidationError);
}

TEST(Monomial, EvaluatesAsSubsetTest) {
  EXPECT_EQ(eval_monomial(M("011"), V("011")), 1);
  EXPECT_EQ(eval_monomial(M("110"), V("011")), 0);
  for (std::uint64_t b = 0; b < 8; ++b) EXPECT_EQ(eval_monomial(M("000"), Vertex(3, b)), 1);
  EXPECT_THROW(eval_monomial(M("01"), V("011")), ValidationError);
  EXPECT_EQ(to_term(M("101")), "x1x3");
  EXPECT_EQ(to_term(M("000")), "1");
}

TEST(Masks, LexicographicWithinWeight) {
  EXPECT_EQ(masks_of_weight(3, 1), (std::vector<std::uint64_t>{4, 2, 1}));
  EXPECT_EQ(masks_of_weight(4, 2), (std::vector<std::uint64_t>{12, 10, 9, 6, 5, 3}));
  EXPECT_EQ(masks_of_weight(3, 0), (std::vector<std::uint64_t>{0}));
  EXPECT_TRUE(masks_of_weight(3, 4).empty());
}

std::vector<std::string> terms(const MonomialBasis& b) {
  std::vector<std::string> out;
  for (const auto& m : b.monomials()) out.push_back(to_term(m));
  return out;
}

TEST(Basis, OrderForThreeVariablesDegreeTwo) {
  EXPECT_EQ(terms(make_basis(3, 2)),
            (std::vector<std::string>{"x1x2", "x1x3", "x2x3", "x1", "x2", "x3", "1"}));
}

TEST(Basis, ConstantsOnly) { EXPECT_EQ(terms(make_basis(2, 0)), (std::vector<std::string>{"1"})); }

TEST(Basis, FourVariablesDegreeTwoMatchesGoldenRowLabels) {
  const auto b = make_basis(4, 2);
  ASSERT_EQ(b.size(), 11U);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(to_term(b[i]), golden::kTightness42Rows[i]);
  EXPECT_EQ(b.index_of(M("0011")), 5U);
  EXPECT_EQ(b.index_of(M("1110")), b.size());
}

TEST(Basis, RejectsBadDegree) {
  EXPECT_THROW(make_basis(3, 4), ValidationError);
  EXPECT_THROW(make_basis(3, -1), ValidationError);
  EXPECT_THROW(make_basis(64, 40), ValidationError);
}

TEST(Basis, SizeAndOrderingInvariant) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto b = make_basis(n, k);
      EXPECT_EQ(b.size(), oracle::monomials_up_to(n, k).size()) << n << "," << k;
      for (std::size_t i = 1; i < b.size(); ++i) {
        const int d0 = degree(b[i - 1]);
        const int d1 = degree(b[i]);
        ASSERT_GE(d0, d1);
        if (d0 == d1) ASSERT_LT(to_bitstring(b[i]), to_bitstring(b[i - 1]));
      }
    }
  }
}

TEST(EvaluationMatrix, GoldenTightnessColumns) {
  std::vector<Vertex> cols;
  for (auto s : golden::kTightness42Columns) cols.push_back(parse_vertex(s));
  const auto m = evaluation_matrix(make_basis(4, 2), cols);
  ASSERT_EQ(m.rows(), 11U);
  ASSERT_EQ(m.cols(), 11U);
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 11; ++j) EXPECT_EQ(m.at(i, j), golden::kTightness42[i][j]) << i << "," << j;
}

TEST(EvaluationMatrix, ConstantRowIsAllOnes) {
  const auto m = evaluation_matrix(make_basis(3, 0), {V("000"), V("101"), V("111")});
  ASSERT_EQ(m.rows(), 1U);
  for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m.at(0, j), 1);
}

TEST(EvaluationMatrix, AllOnesVertexColumn) {
  const auto m = evaluation_matrix(make_basis(3, 1), {V("111")});
  ASSERT_EQ(m.rows(), 4U);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(m.at(i, 0), 1);
}

TEST(EvaluationMatrix, Errors) {
  EXPECT_THROW(evaluation_matrix(make_basis(3, 1), {}), ValidationError);
  EXPECT_THROW(evaluation_matrix(make_basis(3, 1), {V("11")}), ValidationError);
}

TEST(EvaluationMatrix, MatchesDirectEvaluation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int k = static_cast<int>(rng() % (n + 1));
    std::vector<Vertex> cols;
    for (int j = 0; j < 13; ++j) cols.emplace_back(n, rng() & dimension_mask(n));
    const auto basis = make_basis(n, k);
    const auto m = evaluation_matrix(basis, cols);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) ASSERT_EQ(m.at(i, j), eval_monomial(basis[i], cols[j]));
  }
}

TEST(EvaluationMatrix, FullBasisOnWholeCubeIsInvertible) {
  for (int n = 1; n <= 6; ++n) {
    const auto m = evaluation_matrix(make_basis(n, n), oracle::all_vertices(n));
    oracle::Matrix q(m.rows(), oracle::Row(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = m.at(i, j);
    EXPECT_EQ(m.rows(), std::size_t{1} << n);
    EXPECT_EQ(oracle::rank(q), m.rows()) << "n=" << n;
  }
}

TEST(Polynomial, Evaluation) {
  MultilinearPolynomial p(3);
  p.add_term(M("110"), 1);
  p.add_term(M("001"), 3);
  EXPECT_EQ(eval_polynomial(p, V("111")), 4);
  EXPECT_EQ(eval_polynomial(MultilinearPolynomial(3), V("101")), 0);
  MultilinearPolynomial one(3);
  one.add_term(M("000"), 1);
  EXPECT_EQ(eval_polynomial(one, V("010")), 1);
  EXPECT_THROW(eval_polynomial(p, V("11")), ValidationError);
}

TEST(Polynomial, CancellingTermsAreRemoved) {
  MultilinearPolynomial p(2);
  p.add_term(M("10"), 2);
  p.add_term(M("10"), -2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), -1);
}

TEST(Reduce, IdempotentSquares) {
  const auto p = reduce_multilinear({{1, {2, 1}}}, 2);
  MultilinearPolynomial expected(2);
  expected.add_term(M("11"), 1);
  EXPECT_EQ(p, expected);
}

TEST(Reduce, MergesLikeTerms) {
  const auto p = reduce_multilinear({{1, {3}}, {1, {1}}}, 1);
  MultilinearPolynomial expected(1);
  expected.add_term(M("1"), 2);
  EXPECT_EQ(p, expected);
}

TEST(Reduce, MatchesOriginalOnTheSquare) {
  const std::vector<RawTerm> raw = {{2, {2, 2}}, {-1, {1, 1}}};
  const auto p = reduce_multilinear(raw, 2);
  MultilinearPolynomial expected(2);
  expected.add_term(M("11"), 1);
  EXPECT_EQ(p, expected);
  for (const Vertex& v : oracle::all_vertices(2)) EXPECT_EQ(eval_raw(raw, v), eval_polynomial(p, v));
}

TEST(Reduce, AgreesWithRawEvaluationEverywhere) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<RawTerm> raw;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < count; ++t) {
      RawTerm term{oracle::ratio(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4)), {}};
      for (int i = 0; i < n; ++i) term.exponents.push_back(static_cast<unsigned>(rng() % 4));
      raw.push_back(term);
    }
    const auto p = reduce_multilinear(raw, n);
    for (const Vertex& v : oracle::all_vertices(n)) ASSERT_EQ(eval_raw(raw, v), eval_polynomial(p, v));
  }
}

TEST(Reduce, RejectsWrongExponentLength) {
  EXPECT_THROW(reduce_multilinear({{1, {1, 1}}}, 3), ValidationError);
}

}  // namespace
}  // namespace hcube

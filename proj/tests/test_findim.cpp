#include <doctest.h>

#include "cherfd/decomp.hpp"
#include "cherfd/error.hpp"
#include "cherfd/findim.hpp"
#include "cherfd/gseries.hpp"
#include "cherfd/repdata.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace cherfd;

namespace {
const std::string kData = CHERFD_DATA_DIR;
const Rat kThird(1, 3);

const std::vector<std::string> kCandidates = {"1_x",   "8_z",   "28_x",  "35_x", "50_x",
                                              "160_z", "175_x", "300_x", "840_z"};

// S2 data for c = (2j + 1) / 2 built from the rank-1 oracle: M(triv) has its
// first singular vector in degree 2j + 1, of W-type sign.
GroupData s2_group(const Rat& c) {
  return parse_group(R"({"name":"S2","dim_v":1,"num_reflections":1,"c_ref":")" + c.str() +
                     R"(","irreps":[{"label":"triv","dim":1,"refl_char_sum":1},
                       {"label":"sign","dim":1,"refl_char_sum":-1}],
                       "sign_twist":{"triv":"sign","sign":"triv"},
                       "inventory_complete_on":["-inf","inf"]})");
}

DecompMatrix s2_matrix(const GroupData& g) {
  return parse_decomp(R"({"group":"S2","twisted_labels":true,"columns":{
    "triv":{"entries":{"triv":1,"sign":1},"rows_complete_below":"inf"},
    "sign":{"entries":{"sign":1},"rows_complete_below":"inf"}}})", g);
}

}  // namespace

TEST_CASE("truncated character of L(50_x)") {
  // Frozen with the Pascal oracle: C(18,7) = 31824, C(19,7) = 50388, C(20,7) = 77520.
  REQUIRE(oracle::pascal_binomial(19, 7) == 50388);
  const BigInt at_zero = oracle::pascal_binomial(19, 7) * 50 - 700;
  REQUIRE(at_zero == 2518700);

  const GroupData g = load_group(kData + "/e8_c13_paper.json");
  const DecompMatrix m = load_decomp(kData + "/e8_c13_decomp.json", g);
  const GradedSeries s = simple_character(g, kThird, m, "50_x");
  CHECK(s.lo() == Rat(-12));
  CHECK(s.hi() == Rat(2));
  CHECK(s.coeff_at(Rat(-12)) == 50);
  CHECK(s.coeff_at(Rat(-1)) == 1591200);
  CHECK(s.coeff_at(Rat(0)) == at_zero);
  CHECK(s.coeff_at(Rat(1)) == 3870400);
  CHECK_THROWS_AS(s.coeff_at(Rat(2)), Error);
}

TEST_CASE("sl2 obstruction on L(50_x)") {
  const GroupData g = load_group(kData + "/e8_c13_paper.json");
  const DecompMatrix m = load_decomp(kData + "/e8_c13_decomp.json", g);
  const Verdict v = sl2_symmetry_test(simple_character(g, kThird, m, "50_x"));
  REQUIRE(v.infinite());
  CHECK(*v.witness_exponent == Rat(1));
  CHECK(*v.dim_neg == 1591200);
  CHECK(*v.dim_pos == 3870400);
  CHECK(v.str("50_x") == "50_x: INFINITE-DIMENSIONAL (i=1: 1591200 < 3870400)");
}

TEST_CASE("sl2 test on hand-built series") {
  GradedSeries sym(Rat(-2), Rat(2));
  sym.add(Rat(-1), 7);
  sym.add(Rat(0), 3);
  sym.add(Rat(1), 7);
  const Verdict v = sl2_symmetry_test(sym);
  CHECK_FALSE(v.infinite());
  CHECK(v.str("x") == "x: INCONCLUSIVE (window [-2,2))");

  GradedSeries one_sided(Rat(0), Rat(5));
  one_sided.add(Rat(0), 1);
  one_sided.add(Rat(3), 9);
  CHECK_FALSE(sl2_symmetry_test(one_sided).infinite());

  // A mirror exponent outside the window is never compared.
  GradedSeries edge(Rat(-1), Rat(3));
  edge.add(Rat(-1), 4);
  edge.add(Rat(1), 4);
  edge.add(Rat(2), 100);
  CHECK_FALSE(sl2_symmetry_test(edge).infinite());

  // The smallest mismatching exponent is reported, with the larger side first.
  GradedSeries two(Rat(-3), Rat(4));
  two.add(Rat(-2), 5);
  two.add(Rat(2), 1);
  two.add(Rat(-3), 1);
  const Verdict w = sl2_symmetry_test(two);
  REQUIRE(w.infinite());
  CHECK(*w.witness_exponent == Rat(2));
  CHECK(w.str("y") == "y: INFINITE-DIMENSIONAL (i=2: 5 > 1)");

  // Rational exponents compare across zero too.
  GradedSeries frac(Rat(-1), Rat(1));
  frac.add(Rat(-1, 2), 2);
  const Verdict f = sl2_symmetry_test(frac);
  REQUIRE(f.infinite());
  CHECK(*f.witness_exponent == Rat(1, 2));
  CHECK(*f.dim_pos == 0);
}

TEST_CASE("rank-1 pipeline matches the Dunkl oracle") {
  for (long j = 0; j <= 4; ++j) {
    const Rat c(2 * j + 1, 2);
    CAPTURE(c.str());
    const oracle::Rank1 rank1{c};
    const GroupData g = s2_group(c);
    const DecompMatrix m = s2_matrix(g);

    const GradedSeries s = simple_character(g, c, m, "triv");
    CHECK(s.lo() == rank1.h_triv());
    CHECK(s.hi() == rank1.h_triv() + Rat(16));
    const auto want = rank1.simple_character(false, 16);
    CHECK(s.terms() == want);
    // L(triv) is finite-dimensional here, so the obstruction must stay silent.
    CHECK_FALSE(sl2_symmetry_test(s).infinite());
  }

  const Rat half(1, 2);
  const GroupData g = s2_group(half);
  const GradedSeries s = simple_character(g, half, s2_matrix(g), "triv");
  CHECK(s.str() == "1 * t^(0)");
  const GradedSeries longer = simple_character(g, half, s2_matrix(g), "triv", Rat(40));
  CHECK(longer.hi() == Rat(40));
  CHECK(longer.str() == "1 * t^(0)");
}

TEST_CASE("identity column yields the Verma character") {
  const GroupData g = s2_group(Rat(1, 2));
  const GradedSeries s = simple_character(g, Rat(1, 2), s2_matrix(g), "sign");
  CHECK(s == verma_series(g, Rat(1, 2), "sign", Rat(17)));
}

TEST_CASE("simple_character propagates expansion errors") {
  const GroupData g = s2_group(Rat(1, 2));
  const DecompMatrix m = parse_decomp(R"({"group":"S2","twisted_labels":true,"columns":{
    "triv":{"entries":{"triv":1,"sign":2},"rows_complete_below":"inf"}}})", g);
  CHECK_THROWS_WITH_AS(simple_character(g, Rat(1, 2), m, "triv"),
                       doctest::Contains("UnsupportedExpansion"), Error);
}

TEST_CASE("classification by count") {
  Verdict inf;
  inf.kind = Verdict::Kind::infinite_dimensional;
  inf.witness_exponent = Rat(1);
  inf.dim_neg = 1;
  inf.dim_pos = 2;

  const auto kept = classify(kCandidates, 8, {{"50_x", inf}});
  CHECK(kept == std::vector<std::string>{"1_x", "8_z", "28_x", "35_x", "160_z", "175_x", "300_x",
                                         "840_z"});
  CHECK(classify({"a"}, 1, {}) == std::vector<std::string>{"a"});

  Verdict inconclusive;
  CHECK(classify({"a", "b"}, 2, {{"a", inconclusive}}).size() == 2);
  try {
    classify({"a", "b"}, 2, {{"a", inf}});
    FAIL("expected CountMismatch");
  } catch (const CountMismatch& e) {
    CHECK(e.code() == Errc::count_mismatch);
    CHECK(e.remainder() == std::vector<std::string>{"b"});
    CHECK(e.expected() == 2);
  }
}

TEST_CASE("sl2 test reflection symmetry and window monotonicity") {
  const props::Outcome o = props::sl2_reflection_and_monotonicity(0x5eed06, 300);
  INFO(o.first_failure);
  CHECK(o.cases == 300);
  CHECK(o.ok());
}

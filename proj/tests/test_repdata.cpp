#include <doctest.h>

#include <functional>
#include <string>

#include "cherfd/error.hpp"
#include "cherfd/repdata.hpp"
#include "properties.hpp"

using namespace cherfd;

namespace {

const std::string kData = CHERFD_DATA_DIR;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::parse_error;
}

const char* kMinimal = R"({
  "name": "E8", "dim_v": 8, "num_reflections": 120,
  "irreps": [{"label": "1_x", "dim": 1, "refl_char_sum": 120}]
})";

}  // namespace

TEST_CASE("bundled E8 dataset loads") {
  const GroupData g = load_group(kData + "/e8_c13_paper.json");
  CHECK(g.name() == "E8");
  CHECK(g.dim_v() == 8);
  CHECK(g.num_reflections() == 120);
  CHECK(g.irreps().size() == 10);
  CHECK(g.irrep("160_z").dim == 160);
  CHECK(g.irrep("700_xx").dim == 700);
  CHECK(*g.c_ref() == Rat(1, 3));
  CHECK(*g.twist("50_x") == "50_x'");
  // Back-solved from h = -12 at c = 1/3: (4 + 12) * 50 * 3.
  CHECK(*g.reflection_sum("50_x") == 2400);
  CHECK(*g.reflection_sum("700_xx") == 8400);
  CHECK_FALSE(g.reflection_sum("28_x").has_value());
  CHECK(g.inventory_complete_on() == OpenInterval{Rat(0), Rat(2)});
}

TEST_CASE("minimal single-irrep group is valid") {
  const GroupData g = parse_group(kMinimal);
  CHECK(g.irreps().size() == 1);
  CHECK(*g.reflection_sum("1_x") == 120);
  CHECK_FALSE(g.twist("1_x").has_value());
}

TEST_CASE("group invariants are enforced") {
  SUBCASE("non-involutive twist") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2,"num_reflections":3,
              "irreps":[{"label":"a","dim":1},{"label":"b","dim":1},{"label":"c","dim":1}],
              "sign_twist":{"a":"b","b":"c","c":"a"}})");
          }) == Errc::invariant_violation);
  }
  SUBCASE("duplicate label") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2,"num_reflections":3,
              "irreps":[{"label":"a","dim":1},{"label":"a","dim":2}]})");
          }) == Errc::duplicate_label);
  }
  SUBCASE("duplicate JSON key") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","name":"H","dim_v":2,"num_reflections":3,"irreps":[]})");
          }) == Errc::parse_error);
  }
  SUBCASE("malformed JSON") {
    CHECK(code_of([] { parse_group(R"({"name": "G", )"); }) == Errc::parse_error);
  }
  SUBCASE("fractional integer field") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2.5,"num_reflections":3,"irreps":[]})");
          }) == Errc::parse_error);
  }
  SUBCASE("character value bound") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2,"num_reflections":3,
              "irreps":[{"label":"a","dim":2,"refl_char_sum":7}]})");
          }) == Errc::invariant_violation);
  }
  SUBCASE("twisted pair with mismatched dims") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2,"num_reflections":3,
              "irreps":[{"label":"a","dim":1},{"label":"b","dim":2}],
              "sign_twist":{"a":"b","b":"a"}})");
          }) == Errc::invariant_violation);
  }
  SUBCASE("twisted pair with non-opposite reflection sums") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2,"num_reflections":3,
              "irreps":[{"label":"a","dim":1,"refl_char_sum":3},
                        {"label":"b","dim":1,"refl_char_sum":3}],
              "sign_twist":{"a":"b","b":"a"}})");
          }) == Errc::invariant_violation);
  }
  SUBCASE("twist naming no listed irrep") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2,"num_reflections":3,
              "irreps":[{"label":"a","dim":1}],"sign_twist":{"x":"y","y":"x"}})");
          }) == Errc::unknown_label);
  }
  SUBCASE("h override that does not back-solve to an integer") {
    // (1 - 1/2) * 1 / (1/3) = 3/2
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2,"num_reflections":3,"c_ref":"1/3",
              "irreps":[{"label":"a","dim":1,"h_override":"1/2"}]})");
          }) == Errc::invariant_violation);
  }
  SUBCASE("h override without a reference parameter") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2,"num_reflections":3,
              "irreps":[{"label":"a","dim":1,"h_override":"0"}]})");
          }) == Errc::invariant_violation);
  }
  SUBCASE("both weight fields") {
    CHECK(code_of([] {
            parse_group(R"({"name":"G","dim_v":2,"num_reflections":3,"c_ref":"1",
              "irreps":[{"label":"a","dim":1,"refl_char_sum":1,"h_override":"0"}]})");
          }) == Errc::invariant_violation);
  }
}

TEST_CASE("integer fields are not capped at 64 bits") {
  const GroupData g = parse_group(R"({"name":"Big","dim_v":8,
    "num_reflections":100000000000000000000000,
    "irreps":[{"label":"a","dim":"295147905179352825856","refl_char_sum":-1180591620717411303424}]})");
  CHECK(g.num_reflections() == BigInt("100000000000000000000000"));
  CHECK(g.irrep("a").dim == BigInt("295147905179352825856"));
  CHECK(*g.reflection_sum("a") == BigInt("-1180591620717411303424"));
  CHECK(parse_group(serialize_group(g)) == g);
}

TEST_CASE("bundled decomposition column") {
  const GroupData g = load_group(kData + "/e8_c13_paper.json");
  const DecompMatrix m = load_decomp(kData + "/e8_c13_decomp.json", g);
  CHECK(m.twisted_labels);
  const DecompColumn& col = m.column("50_x");
  CHECK(col.entries.size() == 2);
  CHECK(col.entry("50_x") == 1);
  CHECK(col.entry("700_xx") == 1);
  CHECK(col.entry("1_x") == 0);
  CHECK(*col.rows_complete_below == Bound(Rat(2)));
  CHECK(code_of([&] { m.column("8_z"); }) == Errc::unknown_label);
}

TEST_CASE("decomposition file errors") {
  const GroupData g = parse_group(kMinimal);
  CHECK(parse_decomp(R"({"group":"E8","twisted_labels":false,
      "columns":{"1_x":{"entries":{"1_x":1}}}})", g).column("1_x").entries.size() == 1);
  CHECK(code_of([&] {
          parse_decomp(R"({"group":"E8","twisted_labels":false,
            "columns":{"1_x":{"entries":{}}}})", g);
        }) == Errc::bad_diagonal);
  CHECK(code_of([&] {
          parse_decomp(R"({"group":"E8","twisted_labels":false,
            "columns":{"1_x":{"entries":{"1_x":2}}}})", g);
        }) == Errc::bad_diagonal);
  CHECK(code_of([&] {
          parse_decomp(R"({"group":"E8","twisted_labels":false,
            "columns":{"1_x":{"entries":{"1_x":1,"9_q":1}}}})", g);
        }) == Errc::unknown_label);
  CHECK(code_of([&] {
          parse_decomp(R"({"group":"E8","twisted_labels":false,
            "columns":{"2_x":{"entries":{"2_x":1}}}})", g);
        }) == Errc::unknown_label);
  CHECK(code_of([&] {
          parse_decomp(R"({"group":"F4","twisted_labels":false,"columns":{}})", g);
        }) == Errc::invariant_violation);
  CHECK(code_of([&] {
          parse_decomp(R"({"group":"E8","columns":{}})", g);
        }) == Errc::parse_error);
}

TEST_CASE("decomposition data survives serialization") {
  const GroupData g = load_group(kData + "/e8_c13_paper.json");
  const DecompMatrix m = load_decomp(kData + "/e8_c13_decomp.json", g);
  CHECK(parse_decomp(serialize_decomp(m), g) == m);
}

TEST_CASE("round trip and mutation fuzzing over random groups") {
  const props::Outcome o = props::group_round_trip_and_fuzz(0x5eed01, 300);
  INFO(o.first_failure);
  CHECK(o.cases == 300);
  CHECK(o.ok());
}

// Tests for JSON serialization of models and complexes and for the
// command-line object-expression grammar: exact round trips, error
// classification (content vs filesystem), and malformed-input rejection.

#include <catch2/catch_amalgamated.hpp>

#include "weightcat/model_io.hpp"

using namespace weightcat;

namespace {

Scalar q(std::int64_t p, std::int64_t d = 1) { return Scalar::fraction(p, d); }

const CategorySpec& ell() {
  static CategorySpec spec = builtin_ell();
  return spec;
}

std::string data_path(const std::string& name) {
  return std::string(WEIGHTCAT_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("the shipped model file loads and equals the builtin model") {
  const CategorySpec disk = load_spec(data_path("ell.json"));
  CHECK(disk == ell());
  CHECK(spec_to_json(disk).dump(2) == spec_to_json(ell()).dump(2));
  // Operational spot check: hom dimensions agree with the builtin.
  const Obj x = Obj::of("one") + Obj::of("h1");
  CHECK(hom_dim(disk, x, x) == hom_dim(ell(), x, x));
}

TEST_CASE("specs round-trip through JSON exactly") {
  const nlohmann::ordered_json doc = spec_to_json(ell());
  const CategorySpec back = spec_from_json(doc);
  CHECK(back == ell());
  CHECK(spec_to_json(back).dump(2) == doc.dump(2));
}

TEST_CASE("a file round trip preserves the model") {
  const std::string path = "/tmp/weightcat_roundtrip_spec.json";
  save_spec(ell(), path);
  CHECK(load_spec(path) == ell());
}

TEST_CASE("model content failures are classified as parse or coherence errors") {
  nlohmann::json bad = spec_to_json(ell());
  bad["simples"][0]["rank"] = 0;
  CHECK_THROWS_AS(spec_from_json(bad), ParseError);
  CHECK_THROWS_WITH(spec_from_json(bad),
                    Catch::Matchers::ContainsSubstring("rank must be positive"));

  nlohmann::json broken = spec_to_json(ell());
  bool patched = false;
  for (auto& row : broken["fusion"])
    if (row["left"] == "h1" && row["right"] == "h1") {
      row["symmetry_matrix"] = nlohmann::json::array(
          {nlohmann::json::array({"2", "0"}),
           nlohmann::json::array({"0", "-1"})});  // entries must be 0 or +-1
      patched = true;
    }
  REQUIRE(patched);
  CHECK_THROWS_AS(spec_from_json(broken), IncoherentSpec);

  CHECK_THROWS_AS(detail::parse_json_text("{not json", "test"), ParseError);
  CHECK_THROWS_WITH(spec_from_json(nlohmann::json::array()),
                    Catch::Matchers::ContainsSubstring("top level"));

  nlohmann::json bad_rat = spec_to_json(ell());
  bad_rat["duals"][0]["coev"] = "1/0";
  CHECK_THROWS_AS(spec_from_json(bad_rat), ParseError);
}

TEST_CASE("filesystem failures are i/o errors, not parse errors") {
  CHECK_THROWS_AS(load_spec("/nonexistent/nowhere.json"), IoError);
  CHECK_THROWS_AS(save_spec(ell(), "/nonexistent/nowhere.json"), IoError);
}

TEST_CASE("object expressions parse sums, multiplicities and whitespace") {
  CHECK(parse_obj_expr(ell(), "one") == Obj::of("one"));
  CHECK(parse_obj_expr(ell(), " one + h1 ") == Obj::of("one") + Obj::of("h1"));
  CHECK(parse_obj_expr(ell(), "2*h1") == Obj::of("h1", 2));
  CHECK(parse_obj_expr(ell(), "2 * h1 + one + h1") == Obj::of("h1", 3) + Obj::of("one"));
  CHECK(parse_obj_expr(ell(), "1*sym2+0*lef") == Obj::of("sym2"));
}

TEST_CASE("object expression errors name the offending piece") {
  CHECK_THROWS_AS(parse_obj_expr(ell(), "bogus"), ParseError);
  CHECK_THROWS_WITH(parse_obj_expr(ell(), "bogus"),
                    Catch::Matchers::ContainsSubstring("unknown simple 'bogus'"));
  CHECK_THROWS_AS(parse_obj_expr(ell(), "2h1"), ParseError);
  CHECK_THROWS_AS(parse_obj_expr(ell(), "one ++ h1"), ParseError);
  CHECK_THROWS_AS(parse_obj_expr(ell(), "one +"), ParseError);
  CHECK_THROWS_AS(parse_obj_expr(ell(), ""), ParseError);
  CHECK_THROWS_AS(parse_obj_expr(ell(), "one h1"), ParseError);
}

TEST_CASE("complexes round-trip through JSON") {
  Complex x;
  x.comp[0] = Obj::of("one", 2);
  x.comp[1] = Obj::of("one") + Obj::of("h1");
  Mor d = mor_zero(x.comp[0], x.comp[1]);
  d.set_ss("one", Mat::from_rows({{q(1), q(0)}}));
  d.set_nil(ell(), "one", "h1", 0, Mat::from_rows({{q(0), q(1)}}));
  x.diff[0] = d;

  const nlohmann::ordered_json doc = complex_to_json(ell(), x);
  const Complex back = complex_from_json(ell(), doc);
  CHECK(back == x);
  CHECK(complex_to_json(ell(), back).dump(2) == doc.dump(2));

  const Complex zero = complex_from_json(ell(), complex_to_json(ell(), Complex{}));
  CHECK(zero.is_zero());
}

TEST_CASE("complex files reject malformed content") {
  auto parse = [](const char* text) {
    return complex_from_json(ell(), nlohmann::json::parse(text));
  };
  CHECK_THROWS_AS(parse(R"({"components": {"x": {"one": 1}}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"components": {"0": {"mystery": 1}}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"components": {"0": {"one": -1}}})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"components": {"0": {"one": 1}},
                            "differentials": {"0": {"nil": {"gamma": [["1"]]}}}})"),
                  ParseError);
  // Shape mismatch: a 2x2 block where a 1x1 block is required.
  CHECK_THROWS_AS(parse(R"({"components": {"0": {"one": 1}, "1": {"h1": 1}},
                            "differentials": {"0": {"nil": {"alpha": [["1", "0"], ["0", "1"]]}}}})"),
                  ParseError);
  // A differential whose square does not vanish.
  CHECK_THROWS_AS(parse(R"({"components": {"0": {"one": 1}, "1": {"one": 1}, "2": {"one": 1}},
                            "differentials": {"0": {"ss": {"one": [["1"]]}},
                                              "1": {"ss": {"one": [["1"]]}}}})"),
                  ParseError);
}

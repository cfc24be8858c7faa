#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hopfcoh/io.hpp"

using namespace hopfcoh;

namespace {

std::string data(const char* name) { return std::string(HOPFCOH_TEST_DATA) + "/" + name; }

std::string write_temp(const std::string& name, const Json& j) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << j.dump(1);
  return path.string();
}

}  // namespace

TEST_CASE("built-in names") {
  const PrimeField f7(7);
  CHECK(builtin_algebra("kZ2", PrimeField(2))->dim() == 2);
  CHECK(builtin_algebra("kZ3", PrimeField(2))->dim() == 3);
  CHECK(builtin_algebra("S3", f7)->dim() == 6);
  CHECK(builtin_algebra("sweedler", PrimeField(5))->dim() == 4);
  CHECK(builtin_algebra("taft:3:2", f7)->dim() == 9);
  CHECK(verify_hopf(*builtin_algebra("dual:kZ2", PrimeField(3))).empty());
  CHECK_THROWS_AS(builtin_algebra("nope", f7), ParseError);
  CHECK_THROWS_AS(builtin_algebra("kZx", f7), ParseError);
  CHECK_THROWS_AS(builtin_algebra("sweedler", PrimeField(2)), Error);
}

TEST_CASE("algebra files round trip") {
  for (const char* name : {"kZ2", "S3", "sweedler", "taft:3:2"}) {
    auto h = builtin_algebra(name, PrimeField(7));
    Json j = algebra_to_json(*h);
    HopfAlgebra back = algebra_from_json(Json::parse(j.dump()), std::nullopt);
    CHECK(back.mul() == h->mul());
    CHECK(back.comul() == h->comul());
    CHECK(back.antipode() == h->antipode());
    CHECK(back.unit() == h->unit());
    CHECK(back.counit() == h->counit());
    auto loaded = resolve_algebra(write_temp("hopfcoh_alg.json", j), std::nullopt);
    CHECK(loaded->mul() == h->mul());
  }
}

TEST_CASE("field override and fractions") {
  auto h = builtin_algebra("kZ2", PrimeField(2));
  Json j = algebra_to_json(*h);
  j["counit"] = Json::array({"2/2", "4/4"});
  HopfAlgebra over3 = algebra_from_json(j, PrimeField(3));
  CHECK(over3.field().p() == 3);
  CHECK(over3.counit() == std::vector<Elem>{1, 1});
  CHECK(verify_hopf(over3).empty());
}

TEST_CASE("parse errors carry positions") {
  try {
    read_json_file(data("bad_syntax.json"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("bad_syntax.json:4:") != std::string::npos);
  }
  try {
    resolve_algebra(data("bad_index.json"), std::nullopt);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/mul/1") != std::string::npos);
  }
  Json j = algebra_to_json(*builtin_algebra("kZ2", PrimeField(2)));
  j.erase("comul");
  CHECK_THROWS_WITH_AS(algebra_from_json(j, std::nullopt), doctest::Contains("comul"), ParseError);
  CHECK_THROWS_AS(resolve_algebra("/nonexistent/file.json", std::nullopt), ParseError);
}

TEST_CASE("bimodule files and selectors") {
  auto h = builtin_algebra("kZ2", PrimeField(3));
  for (const char* sel : {"regular", "right:1", "left:2", "x", "regular+right:1"}) {
    CAPTURE(sel);
    HopfBimodule m = select_bimodule(sel, h);
    CHECK(verify_hopf_bimodule(m).empty());
    Json j = bimodule_to_json(m);
    HopfBimodule back = bimodule_from_json(Json::parse(j.dump()), h, std::nullopt);
    CHECK(back.act_left == m.act_left);
    CHECK(back.act_right == m.act_right);
    CHECK(back.coact_left == m.coact_left);
    CHECK(back.coact_right == m.coact_right);
    HopfBimodule from_file = select_bimodule(write_temp("hopfcoh_bim.json", j), h);
    CHECK(from_file.coact_right == m.coact_right);
  }
  Json named = bimodule_to_json(regular_bimodule(h));
  named["algebra"] = "kZ2";
  CHECK(bimodule_from_json(named, h, std::nullopt).dim == 2);
  named["algebra"] = "kZ3";
  CHECK_THROWS_AS(bimodule_from_json(named, h, std::nullopt), ParseError);
  CHECK_THROWS_AS(select_bimodule("right:x", h), ParseError);
  CHECK_THROWS_AS(select_bimodule("nothing", h), ParseError);
}

TEST_CASE("reports serialize deterministically") {
  auto a = regular_bimodule(builtin_algebra("kZ2", PrimeField(2)));
  auto r = compute_cohomology(Engine::A4, a, a, 2);
  Json with = report_to_json(r, true), without = report_to_json(r, false);
  CHECK(with.contains("timings"));
  CHECK_FALSE(without.contains("timings"));
  CHECK(without["dims"] == Json::array({1, 1, 1}));
  CHECK(without.dump() == report_to_json(compute_cohomology(Engine::A4, a, a, 2), false).dump());
  A4Cochain c = zero_cochain(a, a, 1);
  Json cj = cochain_to_json(c);
  CHECK(cj["degree"] == 1);
  CHECK(cj["components"].size() == 2);
}

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include <shapeinv/io.hpp>

using namespace shapeinv;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("shapeinv_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("permutation parsing", "[io]") {
  CHECK(parse_permutation("3 1 2") == Permutation{3, 1, 2});
  CHECK(parse_permutation("3,1,2") == Permutation{3, 1, 2});
  CHECK(parse_permutation(" [3, 1, 2] ") == Permutation{3, 1, 2});
  CHECK(parse_permutation("(2 1 3 6 5 4 8 7)") == Permutation{2, 1, 3, 6, 5, 4, 8, 7});
  CHECK_THROWS_AS(parse_permutation(""), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("1 2 2"), InvalidArgument);
  try {
    parse_permutation("3 x1 2");
    FAIL("no exception");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("'x1'") != std::string::npos);
  }
}

TEST_CASE("shape parsing", "[io]") {
  CHECK(parse_shape("4,3,1") == Partition{4, 3, 1});
  CHECK(parse_shape("(4,3,1)") == Partition{4, 3, 1});
  CHECK(parse_shape("2^6") == Partition{2, 2, 2, 2, 2, 2});
  CHECK(parse_shape("<2^6>") == Partition{2, 2, 2, 2, 2, 2});
  CHECK(parse_shape("3^3,1") == Partition{3, 3, 3, 1});
  CHECK(parse_shape("(7)") == Partition{7});
  CHECK(parse_shape("4 3 1") == Partition{4, 3, 1});
  CHECK_THROWS_AS(parse_shape("1,2"), InvalidArgument);
  CHECK_THROWS_AS(parse_shape("2^0"), InvalidArgument);
  CHECK_THROWS_AS(parse_shape("2^"), InvalidArgument);
  CHECK_THROWS_AS(parse_shape("a"), InvalidArgument);
  CHECK_THROWS_AS(parse_shape("0"), InvalidArgument);
  CHECK_THROWS_AS(parse_shape(""), InvalidArgument);
  CHECK(parse_composition("6,6") == BlockComposition{6, 6});
  CHECK_THROWS_AS(parse_composition("6,0"), InvalidArgument);
}

TEST_CASE("jump partition JSON", "[io]") {
  const auto J = parse_jump(R"({"composition":[3,4,3],"inner":[[],[1,1]],"outer":[[2],[]]})");
  CHECK(J.composition() == BlockComposition{3, 4, 3});
  CHECK(J.inner().components() == std::vector<Partition>{Partition{}, Partition{1, 1}});
  CHECK(J.outer().components() == std::vector<Partition>{Partition{2}, Partition{}});
  CHECK(jump_from_json(json_of(J)) == J);

  const auto only_inner = parse_jump(R"({"composition":[6,6],"inner":[[1]]})");
  CHECK(only_inner.outer().components() == std::vector<Partition>{Partition{}});

  CHECK_THROWS_AS(parse_jump("{"), InvalidArgument);
  CHECK_THROWS_AS(parse_jump(R"({"inner":[]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_jump(R"({"composition":[6,6],"inner":[[6]]})"), InvalidArgument);
}

TEST_CASE("rendering", "[io]") {
  CHECK(format_shape(Partition{4, 3, 1}) == "(4,3,1)");
  CHECK(format_permutation(Permutation{3, 1, 2}) == "3 1 2");
  CHECK(format_tableau(Rows{{1, 2}, {3}}) == "1 2\n3\n");
  const BlockComposition c{6, 6};
  CHECK(format_jump_side(InnerJumpPartition(c, {Partition{1, 1}})) == "((1,1))");
  CHECK(format_jump_side(OuterJumpPartition::empty(c)) == "(∅)");
  const auto j = json_of(rs(Permutation{3, 1, 2}));
  CHECK(j.at("P") == Json::parse("[[1,2],[3]]"));
  CHECK(j.at("Q") == Json::parse("[[1,3],[2]]"));
  CHECK(j.at("shape") == Json::parse("[2,1]"));
}

TEST_CASE("shape table serialisation", "[io]") {
  const auto t = sweep(5);
  const auto j = json_of(t);
  CHECK(j.at("n") == 5);
  CHECK(j.at("counts").at(0).at("shape") == Json::parse("[5]"));
  CHECK(j.at("counts").at(0).at("count") == "1");
  CHECK(j.at("meta").at("version") == std::string(kVersion));
  const auto back = table_from_json(j);
  CHECK(back == t);
  CHECK(back.fingerprint() == t.fingerprint());

  const auto csv = csv_of(t);
  CHECK(csv.rfind("shape,delta,count\n5,0,1\n", 0) == 0);
  CHECK(csv.find("\n3.2,0,3\n") != std::string::npos);

  CHECK_THROWS_AS(table_from_json(Json::parse(R"({"n":3})")), InvalidArgument);
  CHECK_THROWS_AS(table_from_json(Json::parse(R"({"n":3,"counts":[{"shape":[3],"delta":0,"count":"x"}]})")),
                  InvalidArgument);
}

TEST_CASE("report serialisation", "[io]") {
  const auto r = verify_two_column(sweep(4));
  const auto j = json_of(r);
  CHECK(j.at("suite") == "two_column");
  CHECK(j.at("theorem_violations") == 0);
  CHECK(j.at("rows").size() == r.rows.size());
  CHECK(j.at("rows").at(0).at("status") == "PASS");
  CHECK(csv_of(r).rfind("suite,check,shape,delta,formula,oracle,status\n", 0) == 0);
}

TEST_CASE("table cache", "[io]") {
  const auto dir = scratch_dir("cache");
  bool reused = true;
  const auto first = load_or_sweep(dir, 6, {}, &reused);
  CHECK_FALSE(reused);
  CHECK(std::filesystem::exists(table_cache_path(dir, 6)));
  const auto second = load_or_sweep(dir, 6, {}, &reused);
  CHECK(reused);
  CHECK(second == first);
  CHECK(json_of(second).dump() == json_of(first).dump());

  // A stale version is ignored and overwritten.
  auto stale = json_of(first);
  stale["meta"]["version"] = "0.0.0";
  write_file(table_cache_path(dir, 6), stale.dump());
  CHECK_FALSE(load_cached_table(dir, 6).has_value());
  load_or_sweep(dir, 6, {}, &reused);
  CHECK_FALSE(reused);
  CHECK(load_cached_table(dir, 6).has_value());

  // Corrupt files are a miss, not an error.
  write_file(table_cache_path(dir, 6), "not json");
  CHECK_FALSE(load_cached_table(dir, 6).has_value());

  CHECK_THROWS_AS(load_or_sweep(dir, 12, {}), GuardError);
  std::filesystem::remove_all(dir);
}

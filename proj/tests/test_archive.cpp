#include <doctest.h>

#include "o2n/archive.hpp"
#include "o2n/error.hpp"
#include "o2n/verify.hpp"

using namespace o2n;

namespace {

HighestWeight hw(int n, const char* l) { return parse_highest_weight(n, l); }

}  // namespace

TEST_CASE("archive round trip") {
  for (const auto& [n, l] : std::vector<std::pair<int, const char*>>{{2, "0,0"}, {2, "0,-1"}, {3, "-1/2,-1/2,-1/2"}}) {
    const auto rep = build_representation(hw(n, l));
    const std::string text = serialize_archive(rep);
    const Representation back = parse_archive(text);
    CHECK(back.highest_weight() == rep.highest_weight());
    CHECK(back.basis().patterns() == rep.basis().patterns());
    for (std::size_t i = 0; i < rep.cache().size(); ++i) CHECK(*back.cache()[i] == *rep.cache()[i]);
    CHECK(serialize_archive(back) == text);
  }
}

TEST_CASE("archive bytes do not depend on the build") {
  const auto x = hw(3, "0,-1,-1");
  CHECK(serialize_archive(build_representation(x, {1})) == serialize_archive(build_representation(x, {4})));
}

TEST_CASE("archive schema") {
  const auto rep = build_representation(hw(2, "0,0"));
  const Json j = Json::parse(serialize_archive(rep, run_suite(rep, "dim")));
  CHECK(j["format_version"] == kArchiveFormatVersion);
  CHECK(j["highest_weight"] == Json::parse(R"({"n":2,"lambda_twice":[0,0]})"));
  CHECK(j["patterns"][0] == Json::parse(R"({"rows_twice":[[0,0],[0],[0]]})"));
  CHECK(j["generators"].size() == 6);
  CHECK(j["generators"]["F(1,1)"] == Json::parse(R"({"dim":1,"entries":[]})"));
  CHECK(j["reports"][0]["suite"] == "dim");
  CHECK(j["reports"][0]["pass"] == true);
}

TEST_CASE("entries and reports serialize exactly") {
  SparseOperator op(3);
  op.set_column(2, {{0, make_rational(-3, 4)}, {1, Rational(2)}});
  CHECK(to_json(op).dump() == R"({"dim":3,"entries":[[2,0,"-3/4"],[2,1,"2"]]})");
  CHECK(operator_from_json(to_json(op)) == op);
  VerifyReport r{"casimir", hw(2, "-1/2,-1/2"), true, {}};
  r.fail("Omega", "3", "4");
  CHECK(to_json(r).dump() ==
        R"({"suite":"casimir","n":2,"lambda_twice":[-1,-1],"pass":false,"counterexamples":[{"where":"Omega","expected":"3","got":"4"}]})");
  CHECK(to_json(branching(hw(2, "0,-1"))) == Json::parse(R"j({"(-1)":1,"(0)":2,"(1)":1})j"));
  CHECK(mu_label({-1, 1}) == "(-1/2,1/2)");
}

TEST_CASE("archives are rejected rather than reinterpreted") {
  const auto rep = build_representation(hw(2, "0,-1"));
  const Json good = Json::parse(serialize_archive(rep));
  auto rejects = [](const Json& j) { CHECK_THROWS_AS(parse_archive(j.dump()), ArchiveError); };

  Json j = good;
  j["format_version"] = kArchiveFormatVersion + 1;
  rejects(j);
  j = good;
  j["patterns"].erase(j["patterns"].begin());
  rejects(j);
  j = good;
  j["generators"].erase("F(1,2)");
  rejects(j);
  j = good;
  j["generators"]["F(1,1)"]["entries"].push_back({3, 0, "0"});
  rejects(j);
  j = good;
  j["generators"]["F(1,1)"]["entries"].push_back({9, 0, "1"});
  rejects(j);
  j = good;
  j["highest_weight"]["lambda_twice"] = {2, 0};
  rejects(j);
  CHECK_THROWS_AS(parse_archive("{not json"), ArchiveError);
  CHECK_THROWS_AS(parse_archive("[]"), ArchiveError);
}

TEST_CASE("a tampered entry survives parsing but fails verification") {
  const auto rep = build_representation(hw(2, "0,-1"));
  Json j = Json::parse(serialize_archive(rep));
  auto& entries = j["generators"]["F(1,2)"]["entries"];
  REQUIRE_FALSE(entries.empty());
  entries[0][2] = "7";
  const Representation bad = parse_archive(j.dump());
  CHECK_FALSE(check_brackets(bad).pass);
}

#include <doctest.h>

#include <sstream>

#include "e6geom/cli.hpp"
#include "e6geom/errors.hpp"

using namespace e6geom;

namespace {

RunConfig small(const std::string& suite, std::uint64_t seed = 1) {
  RunConfig c;
  c.suite = suite;
  c.seed = seed;
  c.trials = 3;
  return c;
}

std::string entries(const std::string& first, std::size_t n) {
  std::string s = first;
  for (std::size_t i = 1; i < n; ++i) s += ",0";
  return s;
}

}  // namespace

TEST_CASE("configuration") {
  CHECK_NOTHROW(validate(RunConfig{}));
  RunConfig c;
  c.p = 4;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.p = 3;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.p = 65537;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.d = 4;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.budget = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.p = 7;
  c.d = 3;
  CHECK_NOTHROW(validate(c));
  CHECK_THROWS_AS(cmd_verify(small("nonsense")), ConfigError);
}

TEST_CASE("statuses and report round trip") {
  for (Status s : {Status::Pass, Status::Fail, Status::Recorded, Status::NotApplicable})
    CHECK(status_from_string(to_string(s)) == s);
  CHECK(to_string(Status::NotApplicable) == "not-applicable");
  CHECK_THROWS_AS(status_from_string("maybe"), ConfigError);

  const Report r = cmd_verify(small("octonion"));
  const nlohmann::json j = r.to_json();
  CHECK(j.at("schema_version") == Report::kSchemaVersion);
  CHECK(j.at("command") == "verify");
  const Report back = Report::from_json(j);
  CHECK(back.dump() == r.dump());
  CHECK(back.checks().size() == r.checks().size());
  CHECK_THROWS_AS(Report::from_json(nlohmann::json{{"checks", 3}}), ConfigError);

  for (std::size_t i = 1; i < r.checks().size(); ++i)
    CHECK(r.checks()[i - 1].name <= r.checks()[i].name);
  for (const Check& c : r.checks()) CHECK_FALSE(c.claim.empty());

  std::ostringstream table;
  r.print_table(table);
  CHECK(table.str().find("octonion/alternative") != std::string::npos);
}

TEST_CASE("check generators") {
  std::mt19937_64 a = check_rng(1, "x"), b = check_rng(1, "x"), c = check_rng(1, "y"),
                  d = check_rng(2, "x");
  const auto va = a();
  CHECK(va == b());
  CHECK(va != c());
  CHECK(va != d());
  const QuadExt k(5, 2);
  CHECK(projective_four_space_size(k) == 406901);
}

TEST_CASE("verify is reproducible") {
  for (const char* suite : {"octonion", "albert", "brown"}) {
    const Report r1 = cmd_verify(small(suite, 7));
    const Report r2 = cmd_verify(small(suite, 7));
    CHECK(r1.dump() == r2.dump());
    CHECK(r1.passed());
    CHECK(exit_code(r1) == 0);
  }
  const Report w = cmd_verify(small("weyl"));
  CHECK(w.passed());
  CHECK(w.count(Status::Pass) == w.checks().size());

  const Report s = cmd_verify(small("scope"));
  CHECK(s.checks().size() == 3);
  CHECK(s.count(Status::NotApplicable) == 3);

  Report f("verify", RunConfig{});
  Check bad;
  bad.name = "x";
  bad.status = Status::Fail;
  f.add(bad);
  CHECK(exit_code(f) == 1);
}

TEST_CASE("geometry suite with few trials") {
  RunConfig c = small("geometry");
  c.trials = 1;
  const Report r = cmd_verify(c);
  for (const Check& ch : r.checks()) {
    CAPTURE(ch.name);
    CAPTURE(ch.witness.dump());
    if (ch.name == "geometry/general-pairs") {
      // One pair cannot exercise both meet branches ten times each.
      CHECK(ch.status == Status::Fail);
      CHECK(ch.witness.at("point").get<int>() + ch.witness.at("no_point").get<int>() == 1);
    } else {
      CHECK(ch.status != Status::Fail);
    }
  }
}

TEST_CASE("point specs") {
  const QuadExt k(5, 2);
  CHECK_FALSE(parse_point_spec(k, "random").has_value());
  CHECK(*parse_point_spec(k, "E2") == AlbertElement::idempotent(k, 2));
  const std::optional<AlbertElement> e = parse_point_spec(k, entries("1:2", 27));
  REQUIRE(e.has_value());
  CHECK(e->xi[0] == k.make(1, 2));
  CHECK(*parse_point_spec(k, entries("-1", 27)) == k.from_int(-1) * AlbertElement::idempotent(k, 1));
  CHECK_THROWS_AS(parse_point_spec(k, entries("1", 26)), ConfigError);
  CHECK_THROWS_AS(parse_point_spec(k, entries("1", 28)), ConfigError);
  CHECK_THROWS_AS(parse_point_spec(k, entries("1", 27) + ","), ConfigError);
  CHECK_THROWS_AS(parse_point_spec(k, entries("x", 27)), ConfigError);
  CHECK_THROWS_AS(parse_point_spec(k, entries("1:", 27)), ConfigError);
  CHECK_THROWS_AS(parse_point_spec(k, "E4"), ConfigError);
}

TEST_CASE("chain command") {
  const Report r = cmd_chain(RunConfig{}, "E1", "E3");
  REQUIRE(r.checks().size() == 1);
  const Check& c = r.checks()[0];
  CHECK(c.status == Status::Pass);
  CHECK(c.witness.at("length") == 4);
  REQUIRE(c.witness.at("certificates").size() == 4);
  for (const auto& cert : c.witness.at("certificates")) CHECK(cert.at("incident") == true);
  CHECK(cmd_chain(RunConfig{}, "E1", "E3").dump() == r.dump());
  CHECK(cmd_chain(RunConfig{}, "random", "random").passed());

  CHECK_THROWS_AS(cmd_chain(RunConfig{}, "E1", "E1"), ConfigError);
  CHECK_THROWS_AS(cmd_chain(RunConfig{}, entries("1", 27), "E1"), ConfigError);
  // Rank one but h = 0: a null octonion in x1.
  std::string iso = entries("0", 27);
  iso.replace(6, 1, "1");
  CHECK_THROWS_AS(cmd_chain(RunConfig{}, iso, "E1"), ConfigError);
}

TEST_CASE("count command") {
  RunConfig c;
  c.trials = 2;
  const Report q = cmd_count(c, "line-quadric");
  REQUIRE(q.checks().size() == 1);
  for (const auto& l : q.checks()[0].witness.at("lines")) {
    CHECK(l.at("witt_index") == 5);
    CHECK(l.at("rank") == 10);
    CHECK(l.at("radical") == 0);
  }
  RunConfig big;
  big.p = 11;
  big.d = 2;
  CHECK_THROWS_AS(cmd_count(big, "special-intersection"), TooLarge);
  CHECK_THROWS_AS(cmd_count(c, "everything"), ConfigError);
}

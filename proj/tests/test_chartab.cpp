#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "specht/character_table.hpp"

using namespace specht;

namespace {
struct Fixture {
  RootSystem rs = build_root_system("D4");
  WeylGroup W = enumerate_group(rs);
  CharacterTable t = d4_table();
  std::vector<ElemId> reps;

  Fixture() {
    reps = class_rep_elems(W, t);
    t.sizes = class_sizes(W, reps);
  }
};
}  // namespace

TEST_CASE("table shape and degrees", "[chartab]") {
  CharacterTable t = d4_table();
  REQUIRE(t.names.size() == 13);
  REQUIRE(t.class_words.size() == 13);
  REQUIRE(t.rows.size() == 13);
  for (int i = 0; i < 13; ++i) {
    CHECK(t.names[i] == "chi" + std::to_string(i + 1));
    CHECK(t.rows[i].size() == 13);
    CHECK(t.rows[i][0] >= 1);  // degree column
  }
  long long sum_sq = 0;
  for (int i = 0; i < 13; ++i) sum_sq += t.rows[i][0] * t.rows[i][0];
  CHECK(sum_sq == 192);
}

TEST_CASE("class words land in thirteen distinct classes", "[chartab]") {
  Fixture f;
  REQUIRE(f.reps.size() == 13);
  ConjClasses cc = conjugacy_classes(f.W);
  std::set<std::size_t> classes;
  for (ElemId g : f.reps) classes.insert(cc.class_of(g));
  CHECK(classes.size() == 13);
  CHECK(f.t.sizes == std::vector<long long>{1, 12, 32, 24, 6, 24, 6, 24, 6, 32,
                                            1, 12, 12});
  long long total = 0;
  for (long long s : f.t.sizes) total += s;
  CHECK(total == 192);
}

TEST_CASE("self-check passes and catches a corrupted entry", "[chartab]") {
  Fixture f;
  CHECK_NOTHROW(table_self_check(f.t, f.W.order()));
  CharacterTable bad = f.t;
  bad.rows[3][4] += 1;
  CHECK_THROWS_AS(table_self_check(bad, f.W.order()), std::logic_error);
}

TEST_CASE("identification of exact rows", "[chartab]") {
  Fixture f;
  for (int i = 0; i < 13; ++i) {
    std::vector<Rational> row;
    for (int c = 0; c < 13; ++c) row.push_back(Rational(f.t.rows[i][c]));
    Identification id = identify(f.t, f.W.order(), row);
    REQUIRE(id.exact.has_value());
    CHECK(*id.exact == "chi" + std::to_string(i + 1));
    CHECK(id.str() == "chi" + std::to_string(i + 1));
  }
}

TEST_CASE("identification by decomposition", "[chartab]") {
  Fixture f;
  std::vector<Rational> sum, twice, zero(13, Rational(0));
  for (int c = 0; c < 13; ++c) {
    sum.push_back(Rational(f.t.rows[0][c]) + Rational(f.t.rows[1][c]));
    twice.push_back(Rational(2 * f.t.rows[2][c]));
  }
  Identification s = identify(f.t, f.W.order(), sum);
  CHECK_FALSE(s.exact.has_value());
  CHECK(s.decomposition ==
        std::map<std::string, long long>{{"chi1", 1}, {"chi2", 1}});
  CHECK(s.str() == "chi1+chi2");
  CHECK(identify(f.t, f.W.order(), twice).str() == "2*chi3");
  CHECK(identify(f.t, f.W.order(), zero).str() == "0");
}

TEST_CASE("identification rejects rows that are not characters", "[chartab]") {
  Fixture f;
  std::vector<Rational> half, diff, short_row(5, Rational(1));
  for (int c = 0; c < 13; ++c) {
    half.push_back(Rational(f.t.rows[0][c]) / Rational(2));
    diff.push_back(Rational(f.t.rows[0][c]) - Rational(f.t.rows[1][c]));
  }
  CHECK_THROWS_AS(identify(f.t, f.W.order(), half), std::logic_error);
  CHECK_THROWS_AS(identify(f.t, f.W.order(), diff), std::logic_error);
  CHECK_THROWS_AS(identify(f.t, f.W.order(), short_row), std::invalid_argument);
}

TEST_CASE("row values match the stored class data", "[chartab]") {
  Fixture f;
  // the first column is the identity class, so each row starts at its degree
  CHECK(f.W.len[f.reps[0]] == 0);
  // the sign row takes value (-1)^length on every class representative
  int sign_row = -1;
  for (int i = 0; i < 13; ++i) {
    bool is_sign = true;
    for (int c = 0; c < 13; ++c)
      if (f.t.rows[i][c] != f.W.sign(f.reps[c])) is_sign = false;
    if (is_sign) sign_row = i;
  }
  CHECK(sign_row == 1);  // chi2
}

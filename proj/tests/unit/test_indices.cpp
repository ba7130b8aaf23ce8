#include <doctest.h>

#include "support.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"

using namespace zagreb;
using testing::A;
using testing::is_integer;
using testing::near;

namespace {
Graph fig(int k) { return build_graph(NamedFamily::parse("figure" + std::to_string(k))); }
}  // namespace

TEST_CASE("ExponentParam modes") {
  CHECK(A(2).exact());
  CHECK(A(-3).exact());
  CHECK_FALSE(A(0.5).exact());
  CHECK_FALSE(A(2.5).exact());
  CHECK(A(2).as_integer() == 2);
  CHECK(A(-1).convex_regime());
  CHECK(A(3).convex_regime());
  CHECK(A(0.5).concave_regime());
  CHECK_FALSE(A(0.5).convex_regime());
  CHECK_THROWS_AS(A(0), std::invalid_argument);
  CHECK_THROWS_AS(A(1), std::invalid_argument);
  CHECK_THROWS_AS(A(std::nan("")), std::invalid_argument);
  CHECK(ExponentParam::order(1).exact());
  CHECK_THROWS_AS(ExponentParam::order(0), std::invalid_argument);
  CHECK(A(2).plus_one() == A(3));
  CHECK(A(0.5).str() == "0.5");
  CHECK(A(-1).str() == "-1");
}

TEST_CASE("Value formatting and comparison") {
  CHECK(Value(Rational(30)).str() == "30");
  CHECK(Value(Rational(15, 4)).str() == "15/4");
  CHECK(Value(0.5).str() == "0.5");
  CHECK(same_value(Value(Rational(1, 3)), Value(1.0 / 3.0)));
  CHECK_FALSE(same_value(Value(Rational(1, 3)), Value(Rational(333333333, 1000000000))));
  CHECK(at_most(Value(Rational(2)), Value(Rational(2))));
  CHECK_FALSE(at_most(Value(Rational(3)), Value(Rational(2))));
  CHECK(is_integer(abs_difference(Value(Rational(2)), Value(Rational(5))), 3));
}

TEST_CASE("power conventions") {
  CHECK(power<Rational>(0, A(2)) == 0);
  CHECK(power<Rational>(2, A(-2)) == Rational(1, 4));
  CHECK(power<double>(0, A(0.5)) == 0.0);
  CHECK_THROWS_AS(power<Rational>(0, A(-1)), std::domain_error);
  CHECK_THROWS_AS(power<double>(0, A(-0.5)), std::domain_error);
  CHECK_THROWS_AS(power<Rational>(-2, A(2)), std::domain_error);
}

TEST_CASE("general_first_zagreb") {
  CHECK(is_integer(general_first_zagreb(testing::cycle(4), A(2)).value, 16));
  CHECK(is_integer(general_first_zagreb(fig(2), A(2)).value, 30));
  CHECK(is_integer(general_first_zagreb(fig(2), A(3)).value, 90));
  CHECK(general_first_zagreb(fig(2), A(-1)).value.rational() == Rational(15, 4));
  CHECK(near(general_first_zagreb(fig(2), A(0.5)).value, 4 + 3 * std::sqrt(2.0)));
  CHECK(general_first_zagreb(fig(2), A(2)).kind == IndexKind::general_zagreb);
  CHECK_THROWS_AS(general_first_zagreb(Graph::from_edge_list(2, {}), A(-1)), std::domain_error);
}

TEST_CASE("exact mode does not overflow") {
  // 50^40 * 50 is far beyond 64 bits.
  const Value v = general_first_zagreb(testing::star(50), A(40)).value;
  CHECK(v.rational() == Rational(boost::multiprecision::pow(Integer(50), 40) + 50));
}

TEST_CASE("general_first_zagreb_coindex") {
  CHECK(is_integer(general_first_zagreb_coindex(testing::path(3), A(2)).value, 2));
  CHECK(is_integer(general_first_zagreb_coindex(testing::complete(5), A(2)).value, 0));
  CHECK(near(general_first_zagreb_coindex(testing::complete(5), A(0.5)).value, 0));
  CHECK(is_integer(general_first_zagreb_coindex(fig(2), A(2)).value, 60));
  CHECK(is_integer(general_first_zagreb_coindex(fig(2), ExponentParam::order(1)).value,
                   2 * 6 * 5 - 30));
  CHECK_THROWS_AS(general_first_zagreb_coindex(fig(2), A(-1)), std::domain_error);
}

TEST_CASE("general_first_leap_zagreb") {
  CHECK(is_integer(general_first_leap_zagreb(testing::path(4), A(2)).value, 4));
  CHECK(is_integer(general_first_leap_zagreb(fig(4), A(2)).value, 100));
  CHECK(is_integer(general_first_leap_zagreb(testing::star(4), A(2)).value, 36));
  CHECK(near(general_first_leap_zagreb(fig(4), A(0.5)).value, 16));
  CHECK_THROWS_AS(general_first_leap_zagreb(testing::star(4), A(-1)), std::domain_error);
  CHECK(general_first_leap_zagreb(fig(4), A(-1)).value.rational() == Rational(4) + Rational(6, 4));
}

TEST_CASE("first_leap_zagreb_coindex") {
  CHECK(is_integer(first_leap_zagreb_coindex(testing::path(4)).value, 8));
  CHECK(is_integer(first_leap_zagreb_coindex(fig(5)).value, 50));
  CHECK(is_integer(first_leap_zagreb_coindex(testing::complete(4)).value, 0));
  // Disconnected pairs count as "not at distance 2".
  const Graph two_paths = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  CHECK(is_integer(first_leap_zagreb_coindex(two_paths).value, 16));
}

TEST_CASE("adding an edge never lowers the index for alpha > 1") {
  const Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const Graph h = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  for (double a : {2.0, 3.0, 1.5}) {
    CHECK(at_most(general_first_zagreb(g, A(a)).value, general_first_zagreb(h, A(a)).value));
  }
}

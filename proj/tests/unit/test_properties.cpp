#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "support.hpp"
#include "zagreb/bounds.hpp"
#include "zagreb/edge_list.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/profile.hpp"
#include "zagreb/verify.hpp"

using namespace zagreb;
using testing::A;

namespace {

// Brute-force reference built on an all-pairs distance matrix.
struct Brute {
  int n;
  std::vector<std::vector<int>> dist;
  std::vector<int> deg, deg2;

  explicit Brute(const Graph& g) : n(static_cast<int>(g.vertex_count())) {
    constexpr int inf = 1 << 20;
    dist.assign(n, std::vector<int>(n, inf));
    deg.assign(n, 0);
    deg2.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      dist[i][i] = 0;
    }
    for (const Edge& e : g.edges()) {
      dist[e.u][e.v] = dist[e.v][e.u] = 1;
      ++deg[e.u];
      ++deg[e.v];
    }
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        deg2[i] += dist[i][j] == 2;
      }
    }
  }

  static Rational ipow(int b, int k) {
    if (k < 0) {
      return Rational(1) / ipow(b, -k);
    }
    Rational r = 1;
    for (int i = 0; i < k; ++i) {
      r *= b;
    }
    return r;
  }

  static Rational sum_pow(const std::vector<int>& xs, int k) {
    Rational s = 0;
    for (int x : xs) {
      s += x == 0 && k > 0 ? Rational(0) : ipow(x, k);
    }
    return s;
  }

  Rational coindex(int k) const {
    Rational s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (dist[i][j] != 1) {
          s += ipow(deg[i], k) + ipow(deg[j], k);
        }
      }
    }
    return s;
  }

  Rational leap_coindex() const {
    Rational s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (dist[i][j] != 2) {
          s += deg2[i] + deg2[j];
        }
      }
    }
    return s;
  }

  bool has_c3_or_c4() const {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int common = 0;
        for (int w = 0; w < n; ++w) {
          common += dist[i][w] == 1 && dist[j][w] == 1;
        }
        if ((dist[i][j] == 1 && common >= 1) || common >= 2) {
          return true;
        }
      }
    }
    return false;
  }
};

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::int64_t, std::int64_t>> e;
  for (int v = 1; v < n; ++v) {
    e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        e.emplace_back(u, v);
      }
    }
  }
  std::vector<std::int64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : e) {
    u = perm[u];
    v = perm[v];
  }
  return Graph::from_edge_list(n, e);
}

}  // namespace

TEST_CASE("indices agree with the distance-matrix oracle on every graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const Graph& g, std::uint64_t mask) {
      const Brute b(g);
      CAPTURE(n);
      CAPTURE(mask);
      CHECK(two_distance_degrees(g) == std::vector<std::int64_t>(b.deg2.begin(), b.deg2.end()));
      CHECK(is_c3c4_free(g) == !b.has_c3_or_c4());
      for (int k : {-1, 2, 3}) {
        if (n == 1 && k < 0) {
          continue;
        }
        CHECK(general_first_zagreb(g, A(k)).value.rational() == Brute::sum_pow(b.deg, k));
      }
      for (int k : {1, 2, 3}) {
        CHECK(general_first_zagreb_coindex(g, ExponentParam::order(k)).value.rational() ==
              b.coindex(k));
      }
      for (int k : {2, 3}) {
        CHECK(general_first_leap_zagreb(g, A(k)).value.rational() == Brute::sum_pow(b.deg2, k));
      }
      CHECK(first_leap_zagreb_coindex(g).value.rational() == b.leap_coindex());
    });
  }
}

TEST_CASE("the consistency suite passes on every graph with 6 vertices") {
  const std::vector<ExponentParam> alphas{A(2), A(0.5)};
  const auto verdicts = verify_order(6, alphas, 2);
  CHECK(verdicts.size() == 26704);
  std::size_t failed = 0;
  for (const auto& v : verdicts) {
    if (!v.verdict.passed()) {
      ++failed;
      if (failed <= 5) {
        MESSAGE(v.mask << ": " << v.verdict.failures.front());
      }
    }
  }
  CHECK(failed == 0);
}

TEST_CASE("verify_order does not depend on the number of jobs") {
  const std::vector<ExponentParam> alphas{A(3)};
  const auto one = verify_order(5, alphas, 1);
  const auto four = verify_order(5, alphas, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].mask == four[i].mask);
    CHECK(one[i].verdict.checks == four[i].verdict.checks);
  }
}

TEST_CASE("leap sum identity on C3C4-free random graphs") {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 3000 && tested < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 16)(rng);
    const Graph g = random_connected(rng, n, 0.08);
    if (!is_c3c4_free(g)) {
      continue;
    }
    ++tested;
    const Rational m1 = first_zagreb(g);
    const Rational m = static_cast<std::int64_t>(g.edge_count());
    const Rational lhs = general_first_leap_zagreb(g, A(2)).value.rational() +
                         first_leap_zagreb_coindex(g).value.rational();
    CHECK(lhs == Rational(n - 1) * (m1 - 2 * m));
  }
  CHECK(tested >= 100);
}

TEST_CASE("remainder decomposition is consistent wherever it exists") {
  for (int n = 2; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const Graph& g, std::uint64_t) {
      const DegreeProfile p = degree_profile(g);
      const RemainderReport r = zagreb_remainder_bound(p, A(2));
      if (!r.decomposition) {
        return;
      }
      const auto& d = *r.decomposition;
      CHECK(d.span == p.max_degree - p.min_degree);
      CHECK(d.quotient * d.span + d.remainder == d.total);
      CHECK(d.remainder >= 0);
      CHECK(d.remainder < d.span);
      if (r.bound.applicable) {
        CHECK(respects(r.bound, general_first_zagreb(g, A(2)).value));
      }
    });
  }
}

TEST_CASE("bound directions hold on random connected graphs") {
  std::mt19937_64 rng(5);
  const std::vector<BoundKind> kinds{BoundKind::secant_convex, BoundKind::secant_concave,
                                     BoundKind::unit_step_convex, BoundKind::unit_step_concave,
                                     BoundKind::remainder};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    const Graph g = random_connected(rng, n, trial % 2 ? 0.1 : 0.4);
    const DegreeProfile dp = degree_profile(g);
    const TwoDistProfile tp = two_dist_profile(g);
    for (double a : {-1.0, 0.5, 2.0, 3.0}) {
      const Value direct = general_first_zagreb(g, A(a)).value;
      for (BoundKind k : kinds) {
        const BoundReport r = zagreb_bound(dp, A(a), k);
        if (r.applicable) {
          CHECK(respects(r, direct));
        }
      }
      if (tp.min_degree > 0 || a > 0) {
        const Value leap = general_first_leap_zagreb(g, A(a)).value;
        for (BoundKind k : kinds) {
          const BoundReport r = leap_bound(tp, A(a), k);
          if (r.applicable) {
            CHECK(respects(r, leap));
          }
        }
      }
    }
  }
}

TEST_CASE("edge-list text round-trips") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 90)(rng);
    const Graph g = random_connected(rng, n, 0.05);
    std::istringstream in(to_edge_list_text(g));
    const Graph back = read_edge_list(in);
    CHECK(back == g);
    CHECK(to_edge_list_text(back) == to_edge_list_text(g));
  }
}

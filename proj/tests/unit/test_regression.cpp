#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "support.hpp"
#include "zagreb/regression.hpp"

using namespace zagreb;

namespace {

// Two-pass centred normal equations, kept separate from the library's
// single-pass accumulation.
struct Oracle {
  double slope, intercept, r;
};

Oracle two_pass(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return {sxy / sxx, my - sxy / sxx * mx, sxy / std::sqrt(sxx * syy)};
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("zagreb_ds_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::filesystem::create_directories(p.parent_path());
    std::ofstream(p) << text;
    return p;
  }

 private:
  std::filesystem::path path_;
};

constexpr const char* kHeader = "name,graph,boiling_point,entropy\n";

}  // namespace

TEST_CASE("fit on exact lines") {
  const std::vector<double> x{1, 2, 3};
  const RegressionResult up = fit(x, std::vector<double>{2, 4, 6});
  CHECK(up.slope == doctest::Approx(2));
  CHECK(up.intercept == doctest::Approx(0).epsilon(1e-12));
  CHECK(up.pearson_r == doctest::Approx(1));
  CHECK(up.n_points == 3);
  CHECK(up.residual_stderr == doctest::Approx(0));

  const RegressionResult down = fit(x, std::vector<double>{6, 4, 2});
  CHECK(down.slope == doctest::Approx(-2));
  CHECK(down.intercept == doctest::Approx(8));
  CHECK(down.pearson_r == doctest::Approx(-1));
}

TEST_CASE("fit by hand") {
  const RegressionResult r = fit(std::vector<double>{0, 1, 2}, std::vector<double>{0, 0, 3});
  CHECK(r.slope == doctest::Approx(1.5));
  CHECK(r.intercept == doctest::Approx(-0.5));
  CHECK(r.pearson_r == doctest::Approx(std::sqrt(3.0) / 2));
  // Residuals 0.5, -1, 0.5: s^2 = 1.5, Sxx = 2.
  CHECK(r.residual_stderr == doctest::Approx(std::sqrt(1.5)));
  CHECK(r.slope_stderr == doctest::Approx(std::sqrt(0.75)));
  CHECK(r.intercept_stderr == doctest::Approx(std::sqrt(1.5 * (1.0 / 3 + 1.0 / 2))));
}

TEST_CASE("fit input validation") {
  const std::vector<double> two{1, 2};
  CHECK_THROWS_AS(fit(two, two), std::invalid_argument);
  CHECK_THROWS_AS(fit(std::vector<double>{1, 2, 3}, two), std::invalid_argument);
  CHECK_THROWS_AS(fit(std::vector<double>{4, 4, 4}, std::vector<double>{1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit(std::vector<double>{1, 2, NAN}, std::vector<double>{1, 2, 3}),
                  std::invalid_argument);
  const RegressionResult flat = fit(std::vector<double>{1, 2, 3}, std::vector<double>{5, 5, 5});
  CHECK(flat.slope == 0);
  CHECK(flat.pearson_r == 0);
}

TEST_CASE("fit matches the two-pass oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(3, 60);
  std::normal_distribution<double> noise(0, 1);
  std::uniform_real_distribution<double> coef(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    const double a = coef(rng), b = coef(rng);
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = coef(rng);
      y[i] = a + b * x[i] + 10 * noise(rng);
    }
    const RegressionResult got = fit(x, y);
    const Oracle want = two_pass(x, y);
    CHECK(rel_close(got.slope, want.slope, 1e-12));
    CHECK(rel_close(got.intercept, want.intercept, 1e-12));
    CHECK(rel_close(got.pearson_r, want.r, 1e-12));
  }
}

TEST_CASE("fit invariances") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 100);
  std::vector<double> x(25), y(25);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = u(rng);
    y[i] = 3 + 0.5 * x[i] + u(rng) / 10;
  }
  const RegressionResult base = fit(x, y);
  CHECK(fit(x, x).pearson_r == doctest::Approx(1));

  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<double> xs, ys;
  for (auto i : order) {
    xs.push_back(x[i]);
    ys.push_back(y[i]);
  }
  const RegressionResult shuffled = fit(xs, ys);
  CHECK(rel_close(shuffled.slope, base.slope, 1e-12));
  CHECK(rel_close(shuffled.intercept, base.intercept, 1e-12));
  CHECK(rel_close(shuffled.pearson_r, base.pearson_r, 1e-12));

  const double a = 2.5, b = -7;
  std::vector<double> xt;
  for (double v : x) {
    xt.push_back(a * v + b);
  }
  const RegressionResult moved = fit(xt, y);
  CHECK(rel_close(moved.slope, base.slope / a, 1e-12));
  CHECK(rel_close(moved.intercept, base.intercept - base.slope * b / a, 1e-10));
  CHECK(rel_close(moved.pearson_r, base.pearson_r, 1e-12));

  std::vector<double> yt;
  for (double v : y) {
    yt.push_back(4 * v + 1);
  }
  CHECK(rel_close(fit(x, yt).pearson_r, base.pearson_r, 1e-12));
}

TEST_CASE("parse_inline_graph") {
  const Graph c6 = parse_inline_graph("6;0-1,1-2,2-3,3-4,4-5,5-0");
  CHECK(c6 == testing::cycle(6));
  CHECK(parse_inline_graph("1;").vertex_count() == 1);
  CHECK_THROWS(parse_inline_graph("6"));
  CHECK_THROWS(parse_inline_graph("3;0-1,1"));
  CHECK_THROWS(parse_inline_graph("3;0-3"));
}

TEST_CASE("load_dataset happy path") {
  TempDir dir;
  dir.write("skeletons/naphthalene.edges",
            "10 11\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n4 6\n6 7\n7 8\n8 9\n9 5\n");
  const auto path = dir.write(
      "set.csv", std::string("# provenance: test fixture\n") + kHeader +
                     "benzene,\"6;0-1,1-2,2-3,3-4,4-5,5-0\",80.1,64.3\n"
                     "naphthalene,@skeletons/naphthalene.edges,218,\n"
                     "\"dibenz[a,h]anthracene\",\"6;0-1,1-2,2-3,3-4,4-5,5-0\",,1.5\n");
  const auto records = load_dataset(path);
  REQUIRE(records.size() == 3);
  CHECK(records[0].name == "benzene");
  CHECK(records[0].first_zagreb == 24);
  CHECK(records[0].leap_zagreb == 24);
  CHECK(*records[0].boiling_point == doctest::Approx(80.1));
  CHECK(*records[0].entropy == doctest::Approx(64.3));
  CHECK(records[0].row == 3);
  CHECK(records[1].first_zagreb == 50);
  CHECK(records[1].leap_zagreb == 84);
  CHECK_FALSE(records[1].entropy);
  CHECK(records[2].name == "dibenz[a,h]anthracene");
  CHECK_FALSE(records[2].boiling_point);
}

TEST_CASE("load_dataset errors carry the row") {
  TempDir dir;
  const auto expect_row = [&](const std::string& body, std::size_t row) {
    const auto path = dir.write("bad.csv", std::string(kHeader) + body);
    try {
      load_dataset(path);
      FAIL("accepted: " << body);
    } catch (const DatasetError& e) {
      CHECK(e.row() == row);
    }
  };
  expect_row("benzene,\"6;0-1,1-2,2-3,3-4,4-5,5-0\",hot,\n", 2);
  expect_row("a,\"2;0-1\",1,\nb,\"3;0-1\",2,\n", 3);
  expect_row("a,\"2;0-1\",1\n", 2);
  expect_row("a,@missing.edges,1,\n", 2);
  expect_row("a,\"2;0-1\",inf,\n", 2);
  expect_row("a,\"2;0-1,1\",1,\n", 2);

  const auto no_header = dir.write("h.csv", "name,graph,bp,entropy\n");
  CHECK_THROWS_AS(load_dataset(no_header), DatasetError);
  CHECK_THROWS_AS(load_dataset(dir.write("e.csv", "")), DatasetError);
  CHECK_THROWS(load_dataset("/nonexistent/zagreb.csv"));
}

TEST_CASE("reproduce_models on a synthetic set") {
  std::vector<CompoundRecord> records;
  for (int k = 3; k <= 8; ++k) {
    CompoundRecord r{"c" + std::to_string(k), testing::cycle(k), std::nullopt, std::nullopt,
                     4 * k, 4 * k, 0};
    r.boiling_point = 2.0 * r.first_zagreb;
    records.push_back(r);
  }
  const auto rows = reproduce_models(records);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].descriptor == Descriptor::first_zagreb);
  CHECK(rows[0].property == Property::entropy);
  CHECK_FALSE(rows[0].result);
  CHECK_FALSE(rows[0].gap.empty());
  CHECK(rows[1].descriptor == Descriptor::leap_zagreb);
  CHECK(rows[2].property == Property::boiling_point);
  REQUIRE(rows[2].result);
  CHECK(rows[2].result->slope == doctest::Approx(2));
  CHECK(rows[2].result->intercept == doctest::Approx(0).epsilon(1e-9));
  CHECK(rows[2].result->pearson_r == doctest::Approx(1));
  CHECK(rows[2].n_points == 6);
}

TEST_CASE("reference models") {
  const auto refs = reference_models();
  REQUIRE(refs.size() == 4);
  CHECK(refs[0].compounds == 22);
  CHECK(refs[2].compounds == 21);
  CHECK(refs[2].pearson_r == doctest::Approx(0.992773893));
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "tailfrac/errors.hpp"
#include "tailfrac/second_order.hpp"

using namespace tailfrac;

TEST_CASE("GPD expansion constants") {
  const SecondOrder so = expansion(Gpd(0.5, 2.0));
  CHECK(so.c == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(so.a == 2.0);
  CHECK(so.d == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(so.b == 3.0);
  CHECK(so.x_valid == 1.0);
  CHECK(so.p_valid == 0.75);
  CHECK(so.leading_A() == so.c);
  CHECK(so.relative_B() == doctest::Approx(-2.0));
  CHECK(so.second_order_beta() == 1.0);
}

TEST_CASE("Frechet and Burr expansion constants") {
  const SecondOrder fr = expansion(Frechet(1.0));
  CHECK(fr.c == 1.0);
  CHECK(fr.a == 1.0);
  CHECK(fr.d == -0.5);
  CHECK(fr.b == 2.0);
  CHECK(fr.x_valid == 0.0);
  CHECK(fr.p_valid == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

  const SecondOrder bu = expansion(Burr(1.0, 1.0, 1.0));
  CHECK(bu.c == 1.0);
  CHECK(bu.a == 1.0);
  CHECK(bu.d == -1.0);
  CHECK(bu.b == 2.0);
  CHECK(bu.x_valid == 1.0);
  CHECK(bu.p_valid == 0.5);

  const SecondOrder b2 = expansion(Burr(2.0, 1.5, 1.2));
  CHECK(b2.d == doctest::Approx(-1.2 * std::pow(2.0, 2.2)).epsilon(1e-14));
  CHECK(b2.x_valid == doctest::Approx(std::pow(2.0, 1.0 / 1.5)).epsilon(1e-15));
}

TEST_CASE("side conditions c > 0, d != 0, b > a > 0 and cdf(x_valid) = p_valid") {
  const std::vector<Family> fams = {Gpd(0.5, 2.0), Gpd(3.0, 0.4), Burr(2.0, 1.5, 1.2),
                                    Burr(0.3, 2.0, 4.0), Frechet(0.7), StudentT(1.0),
                                    StudentT(7.5)};
  for (const auto& fam : fams) {
    const SecondOrder so = expansion(fam);
    CAPTURE(describe(fam));
    CHECK(so.c > 0.0);
    CHECK(so.d != 0.0);
    CHECK(so.b > so.a);
    CHECK(so.a > 0.0);
    CHECK(so.p_valid >= 0.0);
    CHECK(so.p_valid < 1.0);
    if (so.x_valid > 0.0) CHECK(std::fabs(cdf(fam, so.x_valid) - so.p_valid) <= 1e-12);
  }
}

TEST_CASE("approx_tail examples") {
  const SecondOrder so = expansion(Gpd(0.5, 2.0));
  CHECK(approx_tail(so, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(approx_tail(so, 10.0) == doctest::Approx(0.008).epsilon(1e-14));
  CHECK(tail(Gpd(0.5, 2.0), 10.0) == doctest::Approx(1.0 / 121.0).epsilon(1e-14));
  CHECK(std::fabs(approx_tail(so, 1e12)) < 1e-20);
  CHECK_THROWS_AS(approx_tail(so, 0.0), DomainError);
  CHECK_THROWS_AS(approx_tail(so, -1.0), DomainError);
}

TEST_CASE("G* at the validity point equals 1 - alpha") {
  for (double alpha : {0.5, 1.0, 2.0, 5.0}) {
    for (double sigma : {0.5, 1.0, 2.0}) {
      const Gpd g(sigma, alpha);
      CHECK(std::fabs(approx_tail(expansion(g), alpha * sigma) - (1.0 - alpha)) <= 1e-12);
      CHECK(std::fabs(tail(g, alpha * sigma) - std::exp2(-alpha)) <= 1e-12);
      CHECK(std::fabs(cdf(g, alpha * sigma) - validity_percentile(g)) <= 1e-12);
    }
  }
}

TEST_CASE("validity_percentile examples") {
  CHECK(validity_percentile(Gpd(0.5, 1.0)) == 0.5);
  CHECK(validity_percentile(Gpd(7.0, 2.0)) == 0.75);
  CHECK(std::fabs(validity_percentile(StudentT(2.0)) - 0.8536) < 5e-5);
  CHECK(validity_percentile(Burr(3.0, 0.5, 2.0)) == 0.75);
}

TEST_CASE("adjusted_percentile") {
  CHECK(adjusted_percentile(0, 100, 1.0) == 0.5);
  CHECK(adjusted_percentile(50, 100, 1.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(adjusted_percentile(99, 100, 2.0) == doctest::Approx(0.9975).epsilon(1e-15));
  CHECK_THROWS_AS(adjusted_percentile(100, 100, 1.0), DomainError);
  CHECK_THROWS_AS(adjusted_percentile(0, 100, 0.0), DomainError);

  for (double alpha : {0.3, 1.0, 2.5}) {
    double prev = -1.0;
    for (std::size_t below = 0; below < 200; ++below) {
      const double v = adjusted_percentile(below, 200, alpha);
      CHECK(v > prev);
      CHECK(v >= 1.0 - std::exp2(-alpha));
      CHECK(v < 1.0);
      prev = v;
    }
  }
  // 1 - 2^-alpha grows with alpha, so the percentile does too.
  for (std::size_t below : {0u, 10u, 150u}) {
    double prev = -1.0;
    for (double alpha = 0.1; alpha < 8.0; alpha += 0.1) {
      const double v = adjusted_percentile(below, 200, alpha);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("table1 reproduces the tabulated proportions") {
  const std::vector<double> printed = {0.25,   0.1464, 0.0908, 0.0581, 0.0378,
                                       0.0249, 0.0166, 0.0111, 0.0075, 0.0051};
  const auto rows = table1(table1_default_nu());
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].nu == static_cast<double>(i + 1));
    CHECK(std::fabs(rows[i].prob - printed[i]) <= 5e-4);
    CHECK(rows[i].two_sided() == 2.0 * rows[i].prob);
    CHECK(std::fabs(rows[i].prob - 0.5 * oracle::reg_inc_beta(0.5, 0.5 * rows[i].nu, 0.5)) <= 1e-10);
  }
  CHECK(rows[0].prob == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(rows[1].prob == doctest::Approx(0.5 - std::sqrt(2.0) / 4.0).epsilon(1e-14));
  const std::vector<double> bad = {2.0, 0.0};
  CHECK_THROWS_AS(table1(bad), DomainError);
}

namespace {

double d_estimate(const Family& fam, const SecondOrder& so, double scale) {
  const double x = scale * std::fmax(so.x_valid, 1.0);
  return oracle::second_coefficient_estimate([&](double t) { return tail(fam, t); },
                                             so.c, so.a, so.b, x);
}

}  // namespace

TEST_CASE("second coefficient matches the exact tail asymptotically") {
  const std::vector<Family> fams = {Gpd(0.5, 2.0), Burr(2.0, 1.5, 1.2), Frechet(1.5),
                                    StudentT(3.0), Gpd(1.3, 0.8), Burr(0.4, 2.0, 0.7)};
  for (const auto& fam : fams) {
    const SecondOrder so = expansion(fam);
    CAPTURE(describe(fam));
    const double e3 = d_estimate(fam, so, 1e3);
    const double e4 = d_estimate(fam, so, 1e4);
    CHECK(std::fabs(e3 - so.d) <= 0.01 * std::fabs(so.d));
    CHECK(std::fabs(e4 - so.d) <= 0.001 * std::fabs(so.d));
    CHECK(std::fabs(e4 - so.d) <= std::fabs(e3 - so.d));
  }
}

TEST_CASE("Burr second coefficient -alpha lambda^alpha is rejected by the oracle") {
  const Burr burr(2.0, 1.5, 1.2);
  const SecondOrder so = expansion(burr);
  const double alternative = -burr.alpha() * std::pow(burr.lambda(), burr.alpha());
  const double e4 = d_estimate(burr, so, 1e4);
  CHECK(std::fabs(e4 - alternative) > 0.01 * std::fabs(alternative));
}

TEST_CASE("GPD remainder bound beyond four times the validity point") {
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    for (double sigma : {0.5, 2.0}) {
      const Gpd g(sigma, alpha);
      const SecondOrder so = expansion(g);
      const double x0 = 4.0 * alpha * sigma;
      for (int i = 0; i < 200; ++i) {
        const double x = x0 * std::pow(1e4, i / 199.0);
        const double r = alpha * sigma / x;
        const double bound = alpha * (alpha + 1.0) * r * r * so.c * std::pow(x, -alpha);
        CHECK(std::fabs(tail(g, x) - approx_tail(so, x)) <= bound);
      }
    }
  }
}

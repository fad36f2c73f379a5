// Copyright 2026 The wrightcont Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <future>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wrightcont/interval.hpp"

using wrightcont::interval;

namespace {

// Independent high-precision scalar for containment oracles.
using ld = long double;

std::mt19937_64 rng(20260809u);

double random_double(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

interval random_interval(double scale) {
  double a = random_double(-scale, scale);
  double b = a + std::fabs(random_double(0.0, scale * 1e-3));
  return interval(a, b);
}

// atan enclosure on |x| <= 1/5 via the alternating Taylor series.
interval atan_series(const interval& x, int terms) {
  interval x2 = sqr(x);
  interval sum(0.0);
  interval power = x;
  for (int j = 0; j < terms; ++j) {
    interval term = power / interval(static_cast<double>(2 * j + 1));
    sum += (j % 2 == 0) ? term : -term;
    power *= x2;
  }
  double rem = (ipow(interval(x.mag()), 2 * terms + 1) /
                interval(static_cast<double>(2 * terms + 1)))
                   .hi();
  return sum + interval(-rem, rem);
}

std::string exact_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.30f", v);
  return buf;
}

}  // namespace

TEST_CASE("exact integer arithmetic stays exact") {
  interval three = interval(1.0) + interval(2.0);
  CHECK(three.lo() == 3.0);
  CHECK(three.hi() == 3.0);

  interval z = interval(0.0) * interval(-5.0, 7.0);
  CHECK(z.lo() == 0.0);
  CHECK(z.hi() == 0.0);

  interval q = interval(6.0) / interval(2.0);
  CHECK(q.lo() == 3.0);
  CHECK(q.hi() == 3.0);
}

TEST_CASE("decimal fractions are enclosed outward") {
  interval s = interval(0.1) + interval(0.2);
  // The exact sum of the two doubles lies strictly inside.
  ld exact = static_cast<ld>(0.1) + static_cast<ld>(0.2);
  CHECK(static_cast<ld>(s.lo()) <= exact);
  CHECK(exact <= static_cast<ld>(s.hi()));
  CHECK(s.contains(0.3));
  // Width at most 2 ulp of 0.3.
  double ulp = wrightcont::rnd::next_up(0.3) - 0.3;
  CHECK(s.width() <= 2 * ulp);
}

TEST_CASE("division by an interval containing zero throws") {
  CHECK_THROWS_AS(interval(1.0) / interval(-1.0, 1.0),
                  wrightcont::domain_error);
  CHECK_THROWS_AS(interval(1.0) / interval(0.0),
                  wrightcont::domain_error);
  CHECK_NOTHROW(interval(1.0) / interval(1e-30, 1.0));
}

TEST_CASE("NaN endpoints are rejected") {
  double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(interval(nan), wrightcont::domain_error);
  CHECK_THROWS_AS(interval(0.0, nan), wrightcont::domain_error);
  CHECK_THROWS_AS(interval(1.0, -1.0), wrightcont::domain_error);
}

TEST_CASE("point-sample containment over 1000 random pairs") {
  for (int trial = 0; trial < 1000; ++trial) {
    double a = random_double(-1e3, 1e3);
    double b = random_double(-1e3, 1e3);
    interval ia(a), ib(b);

    ld sum = static_cast<ld>(a) + static_cast<ld>(b);
    interval is = ia + ib;
    REQUIRE(static_cast<ld>(is.lo()) <= sum);
    REQUIRE(sum <= static_cast<ld>(is.hi()));

    ld dif = static_cast<ld>(a) - static_cast<ld>(b);
    interval id = ia - ib;
    REQUIRE(static_cast<ld>(id.lo()) <= dif);
    REQUIRE(dif <= static_cast<ld>(id.hi()));

    ld prd = static_cast<ld>(a) * static_cast<ld>(b);
    interval ip = ia * ib;
    REQUIRE(static_cast<ld>(ip.lo()) <= prd);
    REQUIRE(prd <= static_cast<ld>(ip.hi()));

    if (b != 0.0) {
      ld quo = static_cast<ld>(a) / static_cast<ld>(b);
      interval iq = ia / ib;
      REQUIRE(static_cast<ld>(iq.lo()) <= quo);
      REQUIRE(quo <= static_cast<ld>(iq.hi()));
    }
  }
}

TEST_CASE("inclusion monotonicity on random nested intervals") {
  for (int trial = 0; trial < 400; ++trial) {
    interval a = random_interval(10.0);
    interval b = random_interval(10.0);
    // Widen to build strict supersets.
    interval aw(a.lo() - 0.5, a.hi() + 0.25);
    interval bw(b.lo() - 0.125, b.hi() + 1.0);
    REQUIRE(aw.contains(a));
    REQUIRE(bw.contains(b));

    REQUIRE((aw + bw).contains(a + b));
    REQUIRE((aw - bw).contains(a - b));
    REQUIRE((aw * bw).contains(a * b));
    if (!bw.contains_zero()) REQUIRE((aw / bw).contains(a / b));
    REQUIRE(wrightcont::sin(aw).contains(wrightcont::sin(a)));
    REQUIRE(wrightcont::cos(aw).contains(wrightcont::cos(a)));
  }
}

TEST_CASE("arithmetic is deterministic across threads") {
  auto work = [] {
    std::mt19937_64 local(7u);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    interval acc(1.0, 1.0 + 1e-12);
    for (int i = 0; i < 2000; ++i) {
      interval x(dist(local));
      acc = acc * interval(0.9, 0.9000001) + wrightcont::sin(x) / interval(3.0);
    }
    return std::pair<double, double>(acc.lo(), acc.hi());
  };
  auto f1 = std::async(std::launch::async, work);
  auto f2 = std::async(std::launch::async, work);
  auto r1 = f1.get();
  auto r2 = f2.get();
  auto r3 = work();
  CHECK(r1 == r2);
  CHECK(r1 == r3);
}

TEST_CASE("pi and ln2 brackets are adjacent and on the right side") {
  interval pi = wrightcont::pi_interval();
  CHECK(wrightcont::rnd::next_up(pi.lo()) == pi.hi());
  CHECK(pi.lo() == std::numbers::pi);

  // Decide the bracket side with exact decimal expansions: the stored lower
  // endpoint must be below the literature digits of pi, the upper above.
  const std::string pi_digits = "3.141592653589793238462643383279";
  CHECK(exact_decimal(pi.lo()) < pi_digits);
  CHECK(exact_decimal(pi.hi()) > pi_digits);

  interval l2 = wrightcont::ln2_interval();
  CHECK(wrightcont::rnd::next_up(l2.lo()) == l2.hi());
  const std::string ln2_digits = "0.693147180559945309417232121458";
  CHECK(exact_decimal(l2.lo()) < ln2_digits);
  CHECK(exact_decimal(l2.hi()) > ln2_digits);

  // Machin: pi = 16 atan(1/5) - 4 atan(1/239), evaluated in interval
  // arithmetic, must agree with the stored bracket.
  interval a5 = atan_series(interval(1.0) / interval(5.0), 30);
  interval a239 = atan_series(interval(1.0) / interval(239.0), 12);
  interval machin = interval(16.0) * a5 - interval(4.0) * a239;
  CHECK(machin.width() < 1e-13);
  CHECK(machin.intersects(pi));

  // ln 2 = 2 artanh(1/3).
  interval t = interval(1.0) / interval(3.0);
  interval t2 = sqr(t);
  interval sum(0.0);
  interval power = t;
  for (int j = 0; j < 40; ++j) {
    sum += power / interval(static_cast<double>(2 * j + 1));
    power *= t2;
  }
  double rem = (ipow(t, 81) / (interval(81.0) * (interval(1.0) - t2))).hi();
  interval artanh = interval(2.0) * (sum + interval(-rem, rem));
  CHECK(artanh.width() < 1e-14);
  CHECK(artanh.intersects(l2));
}

TEST_CASE("sin and cos basics") {
  interval s0 = wrightcont::sin(interval(0.0));
  CHECK(s0.contains(0.0));
  CHECK(s0.width() <= 1e-15);

  interval full = wrightcont::cos(interval(0.0, wrightcont::two_pi_interval().hi()));
  CHECK(full.lo() == -1.0);
  CHECK(full.hi() == 1.0);

  interval near_peak = wrightcont::sin(wrightcont::half_pi_interval());
  CHECK(near_peak.hi() <= 1.0);
  CHECK(near_peak.contains(1.0));

  interval c0 = wrightcont::cos(interval(0.0));
  CHECK(c0.contains(1.0));
  CHECK(c0.hi() <= 1.0);
}

TEST_CASE("trig containment against long double libm") {
  for (int trial = 0; trial < 2000; ++trial) {
    double x = random_double(-3000.0, 3000.0);
    interval sx = wrightcont::sin(interval(x));
    interval cx = wrightcont::cos(interval(x));
    ld s = sinl(static_cast<ld>(x));
    ld c = cosl(static_cast<ld>(x));
    REQUIRE(static_cast<ld>(sx.lo()) <= s);
    REQUIRE(s <= static_cast<ld>(sx.hi()));
    REQUIRE(static_cast<ld>(cx.lo()) <= c);
    REQUIRE(c <= static_cast<ld>(cx.hi()));
    REQUIRE(sx.hi() <= 1.0);
    REQUIRE(sx.lo() >= -1.0);
  }
}

TEST_CASE("trig over wide intervals stays within the unit band") {
  for (int trial = 0; trial < 200; ++trial) {
    double a = random_double(-100.0, 100.0);
    double w = random_double(0.0, 10.0);
    interval x(a, a + w);
    interval s = wrightcont::sin(x);
    interval c = wrightcont::cos(x);
    // Sample containment across the argument range.
    for (int i = 0; i <= 20; ++i) {
      double t = a + w * i / 20.0;
      REQUIRE(s.contains(std::sin(t)) );
      REQUIRE(c.contains(std::cos(t)));
    }
  }
}

TEST_CASE("log enclosure") {
  CHECK_THROWS_AS(wrightcont::log(interval(0.0, 1.0)), wrightcont::domain_error);
  CHECK_THROWS_AS(wrightcont::log(interval(-2.0, -1.0)),
                  wrightcont::domain_error);
  for (int trial = 0; trial < 500; ++trial) {
    double x = std::exp(random_double(-20.0, 20.0));
    interval lx = wrightcont::log(interval(x));
    ld l = logl(static_cast<ld>(x));
    REQUIRE(static_cast<ld>(lx.lo()) <= l);
    REQUIRE(l <= static_cast<ld>(lx.hi()));
    REQUIRE(lx.width() < 1e-13);
  }
  interval l9 = wrightcont::log(interval(9.0));
  CHECK(l9.contains(2.1972245773362196));
}

TEST_CASE("ipow and sqr") {
  interval x(-2.0, 3.0);
  interval x2 = sqr(x);
  CHECK(x2.lo() == 0.0);
  CHECK(x2.hi() >= 9.0);
  CHECK(ipow(x, 0).lo() == 1.0);
  interval x3 = ipow(x, 3);
  CHECK(x3.contains(-8.0));
  CHECK(x3.contains(27.0));
  interval p = ipow(interval(2.0), 10);
  CHECK(p.contains(1024.0));
  CHECK(p.width() <= 1e-12);
}

TEST_CASE("mag mig mid and hull") {
  interval x(-3.0, 2.0);
  CHECK(x.mag() == 3.0);
  CHECK(x.mig() == 0.0);
  CHECK(interval(2.0, 5.0).mig() == 2.0);
  CHECK(hull(interval(1.0), interval(-1.0)).lo() == -1.0);
  CHECK(iabs(interval(-3.0, 2.0)).hi() == 3.0);
  CHECK(iabs(interval(-3.0, 2.0)).lo() == 0.0);
  CHECK(imax(interval(1.0, 2.0), interval(0.0, 5.0)).lo() == 1.0);
  CHECK(imax(interval(1.0, 2.0), interval(0.0, 5.0)).hi() == 5.0);
}

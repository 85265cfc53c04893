#include "support.hpp"

#include "equimorse/morse_series.hpp"

#include <random>

using namespace equimorse;
using test::ch;

TEST_CASE("polynomial rendering and equality") {
  CHECK(IntMorsePoly{1, 2, 1}.render() == "1 + 2*t + t^2");
  CHECK(IntMorsePoly{0, -1, 0, 3}.render() == "-t + 3*t^3");
  CHECK(IntMorsePoly{}.render() == "0");
  CHECK(IntMorsePoly{1, 0, 0} == IntMorsePoly{1});
  CHECK(IntMorsePoly{0, 0}.is_zero());
  CHECK((IntMorsePoly{1, 2} + IntMorsePoly{0, 1, 4}) == IntMorsePoly{1, 3, 4});
  CHECK((IntMorsePoly{1, 2} - IntMorsePoly{1, 2}).is_zero());
}

TEST_CASE("evaluation at t = -1") {
  CHECK(euler_eval(IntMorsePoly{1, 2, 1}) == 0);
  CHECK(euler_eval(IntMorsePoly{3}) == 3);
  CHECK(euler_eval(IntMorsePoly{0, 1, 0, 1}) == -2);
}

TEST_CASE("division by 1 + t") {
  auto check = [](IntMorsePoly p, IntMorsePoly q, std::int64_t r) {
    const auto d = div_one_plus_t(p);
    CHECK(d.quotient == q);
    CHECK(d.remainder == r);
  };
  check({1, 2, 1}, {1, 1}, 0);
  check({1, 0, 1}, {-1, 1}, 2);
  check({3, 3}, {3}, 0);
  check({}, {}, 0);
}

TEST_CASE("division identity on random polynomials") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-20, 20), deg(0, 7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigInt> c;
    for (int i = deg(rng); i >= 0; --i) c.emplace_back(coeff(rng));
    const IntMorsePoly p(c);
    const auto d = div_one_plus_t(p);
    CHECK(times_one_plus_t(d.quotient) + IntMorsePoly(std::vector<BigInt>{d.remainder}) == p);
    CHECK(d.remainder == euler_eval(p));
  }
}

TEST_CASE("Morse comparison") {
  const auto ok = morse_compare({2, 1}, {1});
  CHECK(ok.holds);
  CHECK(*ok.quotient == IntMorsePoly{1});
  CHECK_FALSE(ok.witness);

  const auto rem = morse_compare({1}, {2});
  CHECK_FALSE(rem.holds);
  CHECK_FALSE(rem.quotient);
  CHECK(std::get<RemainderWitness>(*rem.witness).value == -1);
  CHECK(describe(*rem.witness) == "remainder -1");

  const auto neg = morse_compare({-1, 1, 2}, {});
  CHECK_FALSE(neg.holds);
  const auto& w = std::get<NegativeCoefficientWitness>(*neg.witness);
  CHECK(w.degree == 0);
  CHECK(w.value == -1);

  CHECK(morse_compare({}, {}).holds);
}

TEST_CASE("a comparison holds exactly when L - R is (1 + t) times a non-negative Q") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> small(0, 4), any(-6, 6), deg(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> q, r;
    for (int i = deg(rng); i >= 0; --i) q.emplace_back(small(rng));
    for (int i = deg(rng); i >= 0; --i) r.emplace_back(any(rng));
    const IntMorsePoly rhs(r);
    const auto lhs = rhs + times_one_plus_t(IntMorsePoly(q));
    const auto v = morse_compare(lhs, rhs);
    REQUIRE(v.holds);
    CHECK(*v.quotient == IntMorsePoly(q));
    const auto bumped = morse_compare(lhs + IntMorsePoly{1}, rhs);
    CHECK_FALSE(bumped.holds);
    CHECK(std::get<RemainderWitness>(*bumped.witness).value == 1);
  }
}

TEST_CASE("weight restriction of character series") {
  const Window w(-3, 3);
  MorseSeries s(1, w);
  s.add_term(0, ch("1 + u^1", w));
  s.add_term(1, ch("u^1", w));
  CHECK(restrict_weight(s, Weight(1)) == IntMorsePoly{1, 1});
  CHECK(restrict_weight(s, Weight(0)) == IntMorsePoly{1});
  CHECK_ERROR(restrict_weight(s, Weight(5)), "weight outside window");
}

TEST_CASE("character-level comparison carries the failing weight") {
  const Window w(-2, 2);
  MorseSeries lhs(1, w), rhs(1, w);
  lhs.add_term(0, ch("1 + u^1", w));
  lhs.add_term(1, ch("u^1", w));
  rhs.add_term(0, ch("1", w));
  rhs.add_term(1, WindowedCharacter::finite({{-1, 1}}, w));
  const auto serial = morse_compare_char(lhs, rhs, w, Execution::serial);
  const auto parallel = morse_compare_char(lhs, rhs, w, Execution::parallel);
  CHECK_FALSE(serial.holds);
  REQUIRE(serial.per_weight.size() == 5);
  CHECK(serial.per_weight[1].k == Weight(-1));
  CHECK_FALSE(serial.per_weight[1].verdict.holds);
  CHECK(std::get<RemainderWitness>(*serial.per_weight[1].verdict.witness).value == 1);
  CHECK(serial.per_weight[3].verdict.holds);
  CHECK(*serial.per_weight[3].verdict.quotient == IntMorsePoly{1});
  CHECK(parallel.holds == serial.holds);
  for (std::size_t i = 0; i < serial.per_weight.size(); ++i) {
    CHECK(parallel.per_weight[i].verdict.holds == serial.per_weight[i].verdict.holds);
  }
}

TEST_CASE("series arithmetic checks degree and window") {
  MorseSeries a(1, Window(-1, 1));
  CHECK_THROWS_AS(a.add_term(2, WindowedCharacter::zero(Window(-1, 1))), Error);
  CHECK_THROWS_AS(a.add_term(0, WindowedCharacter::zero(Window(-2, 1))), Error);
  MorseSeries b(1, Window(-1, 2));
  CHECK_THROWS_AS(a + b, Error);
}

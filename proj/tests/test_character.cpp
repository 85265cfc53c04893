#include "support.hpp"

#include <random>

using namespace equimorse;
using test::ch;

namespace {

using Terms = WindowedCharacter::Terms;

Terms terms(std::initializer_list<std::pair<const std::int64_t, BigInt>> list) { return Terms(list); }

/// Product of geometric series sum_j u^{j*l} for each l, counted by enumeration.
BigInt brute_geometric_product(const std::vector<std::int64_t>& lambdas, std::int64_t k,
                               std::int64_t depth) {
  BigInt count = 0;
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t sum) {
    if (i == lambdas.size()) {
      if (sum == k) ++count;
      return;
    }
    for (std::int64_t j = 0; j <= depth; ++j) walk(i + 1, sum + j * lambdas[i]);
  };
  walk(0, 0);
  return count;
}

WindowedCharacter random_finite(std::mt19937& rng, const Window& w) {
  std::uniform_int_distribution<int> weight(w.lo() - 3, w.hi() + 3), coeff(-4, 4), count(0, 6);
  Terms t;
  for (int i = count(rng); i > 0; --i) t[weight(rng)] += coeff(rng);
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return WindowedCharacter::finite(t, w, true);
}

void check_support_sound(const WindowedCharacter& c) {
  for (const auto& [k, v] : c.terms()) {
    CHECK(v != 0);
    if (c.lower_bound()) CHECK(k >= *c.lower_bound());
    if (c.upper_bound()) CHECK(k <= *c.upper_bound());
  }
}

}  // namespace

TEST_CASE("canonical rendering") {
  const Window w(-10, 10);
  CHECK(WindowedCharacter::finite(terms({{-2, 3}, {0, 1}, {5, 2}}), w).render() == "3*u^-2 + 1 + 2*u^5");
  CHECK(WindowedCharacter::zero(w).render() == "0");
  CHECK(WindowedCharacter::finite(terms({{-1, -1}, {1, 1}}), w, true).render() == "-u^-1 + u^1");
  CHECK(WindowedCharacter::finite(terms({{0, 1}, {3, -2}}), w, true).render() == "1 - 2*u^3");
  for (const std::string text : {"3*u^-2 + 1 + 2*u^5", "u^1 + u^2", "7", "0", "-u^-1 + 4*u^3"}) {
    CHECK(WindowedCharacter::parse(text, w, true).render() == text);
  }
  CHECK(ch("u^2 + u^2 + 1", w).render() == "1 + 2*u^2");
  CHECK_THROWS_AS(ch("u^^2", w), Error);
  CHECK_THROWS_AS(ch("2*v^3", w), Error);
}

TEST_CASE("non-virtual characters reject negative multiplicities") {
  CHECK_THROWS_AS(WindowedCharacter::finite(terms({{0, -1}}), Window(-1, 1)), Error);
  CHECK_NOTHROW(WindowedCharacter::finite(terms({{0, -1}}), Window(-1, 1), true));
}

TEST_CASE("addition") {
  const Window w(-3, 3);
  CHECK(add(ch("u^2 + u^-1", w), ch("u^-1", w)) == ch("2*u^-1 + u^2", w));
  const auto a = ch("3*u^-2 + u^1", w);
  CHECK(add(a, WindowedCharacter::zero(w)) == a);

  const Window v(-2, 2);
  const auto sum = add(sym_line_series(1, v), sym_line_series(-1, v));
  CHECK(sum.render() == "u^-2 + u^-1 + 2 + u^1 + u^2");
  CHECK(sum.support_kind() == SupportKind::unbounded);
  CHECK_THROWS_AS(add(ch("1", w), ch("1", v)), Error);
}

TEST_CASE("multiplication") {
  const Window w(-3, 3);
  CHECK(mul(ch("u^1 + u^-1", w), ch("u^1 + u^-1", w)) == ch("u^-2 + 2 + u^2", w));

  const Window v(-4, 4);
  const auto shifted = mul(sym_line_series(1, v), ch("u^-2", v));
  CHECK(shifted.render() == "u^-2 + u^-1 + 1 + u^1 + u^2 + u^3 + u^4");
  CHECK(shifted.support_kind() == SupportKind::bounded_below);
  CHECK(shifted.lower_bound() == -2);

  const Window z(0, 6);
  const auto prod = mul(sym_line_series(1, z), sym_line_series(2, z));
  for (std::int64_t k = 0; k <= 6; ++k) {
    CHECK(prod.coeff_at(Weight(k)) == brute_geometric_product({1, 2}, k, 20));
  }
  CHECK(prod.render() == "1 + u^1 + 2*u^2 + 2*u^3 + 3*u^4 + 3*u^5 + 4*u^6");

  CHECK_ERROR(mul(sym_line_series(1, v), sym_line_series(-1, v)), "divergent convolution");
  CHECK_ERROR(mul(ch("1", w), ch("1", v)), "window mismatch");
}

TEST_CASE("products of geometric series match enumeration across the whole window") {
  const Window w(-12, 12);
  for (const auto& lambdas : std::vector<std::vector<std::int64_t>>{
           {1, 1}, {1, 2, 3}, {2, 3}, {-1, -2}, {-1, -1, -3}, {3, 1, 1, 2}}) {
    auto prod = WindowedCharacter::monomial(0, w);
    for (auto l : lambdas) prod = mul(prod, sym_line_series(l, w));
    for (std::int64_t k = w.lo(); k <= w.hi(); ++k) {
      CHECK(prod.coeff_at(Weight(k)) == brute_geometric_product(lambdas, k, 24));
    }
    check_support_sound(prod);
  }
}

TEST_CASE("geometric series") {
  const auto even = sym_line_series(2, Window(-5, 5));
  CHECK(even.render() == "1 + u^2 + u^4");
  CHECK(even.support_kind() == SupportKind::bounded_below);
  CHECK(even.lower_bound() == 0);

  const auto neg = sym_line_series(-1, Window(-3, 3));
  CHECK(neg.render() == "u^-3 + u^-2 + u^-1 + 1");
  CHECK(neg.support_kind() == SupportKind::bounded_above);
  CHECK(neg.upper_bound() == 0);

  CHECK_ERROR(sym_line_series(0, Window(-3, 3)), "zero isotropy weight");
}

TEST_CASE("coefficient access") {
  const Window w(-3, 3);
  CHECK(ch("u^2 + 2", w).coeff_at(Weight(0)) == 2);
  CHECK(sym_line_series(-1, w).coeff_at(Weight(-2)) == 1);
  CHECK_ERROR(ch("1", w).coeff_at(Weight(7)), "weight outside window");
}

TEST_CASE("rewindow and shift") {
  const Window w(-3, 3);
  const auto finite = ch("u^-3 + u^3", w);
  CHECK(finite.rewindow(Window(-1, 1)).render() == "0");
  CHECK(finite.rewindow(Window(-1, 1)).clipped());
  CHECK(finite.rewindow(Window(-1, 1)).rewindow(w) == finite);
  CHECK(sym_line_series(1, w).rewindow(Window(-10, 10)).coeff_at(Weight(9)) == 1);

  const auto data = WindowedCharacter::from_window_data(w, terms({{1, 5}}), std::nullopt, std::nullopt);
  CHECK_ERROR(data.rewindow(Window(-4, 3)), "insufficient window");
  CHECK(data.rewindow(Window(0, 2)).render() == "5*u^1");

  const auto moved = sym_line_series(1, w).shifted(-2);
  CHECK(moved.window() == Window(-5, 1));
  CHECK(moved.lower_bound() == -2);
  CHECK(moved.coeff_at(Weight(-2)) == 1);
}

TEST_CASE("ring laws on random finite characters") {
  std::mt19937 rng(11);
  const Window w(-8, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_finite(rng, w);
    const auto b = random_finite(rng, w);
    const auto c = random_finite(rng, w);
    CHECK(add(a, b) == add(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(a, b, Execution::serial) == mul(a, b, Execution::parallel));
    CHECK(subtract(a, a).is_zero());
  }
}

TEST_CASE("window coherence") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> lam(1, 3), sign(0, 1);
  const Window big(-15, 15);
  const Window small(-6, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int polarity = sign(rng) ? 1 : -1;
    std::vector<std::int64_t> lambdas = {polarity * lam(rng), polarity * lam(rng)};
    auto f_big = random_finite(rng, big);
    auto f_small = f_big.rewindow(small);
    auto on_big = mul(f_big, mul(sym_line_series(lambdas[0], big), sym_line_series(lambdas[1], big)));
    auto on_small =
        mul(f_small, mul(sym_line_series(lambdas[0], small), sym_line_series(lambdas[1], small)));
    CHECK(restrict_to(on_big, small).terms() == on_small.terms());
    check_support_sound(on_big);
    check_support_sound(on_small);
  }
}

TEST_CASE("geometric series inverts 1 - u^lambda") {
  const Window w(-9, 9);
  for (std::int64_t lambda : {-3, -2, -1, 1, 2, 3}) {
    const auto one_minus =
        WindowedCharacter::finite(terms({{0, 1}, {lambda, -1}}), w, true);
    const auto prod = mul(sym_line_series(lambda, w), one_minus);
    const Window inner(w.lo() + std::abs(lambda), w.hi() - std::abs(lambda));
    CHECK(restrict_to(prod, inner).render() == "1");
    CHECK(prod.render() == "1");
  }
}

TEST_CASE("constant series") {
  const auto c = WindowedCharacter::constant_series(3, Window(-1, 1));
  CHECK(c.render() == "3*u^-1 + 3 + 3*u^1");
  CHECK(c.support_kind() == SupportKind::unbounded);
  CHECK(c.rewindow(Window(-5, 5)).coeff_at(Weight(5)) == 3);
}

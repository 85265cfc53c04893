#include "equimorse/morse_series.hpp"

#include <sstream>

namespace equimorse {

IntMorsePoly::IntMorsePoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

IntMorsePoly::IntMorsePoly(std::initializer_list<std::int64_t> coeffs) {
  for (auto c : coeffs) coeffs_.emplace_back(c);
}

BigInt IntMorsePoly::operator[](std::size_t p) const {
  return p < coeffs_.size() ? coeffs_[p] : BigInt(0);
}

int IntMorsePoly::degree() const {
  for (int p = static_cast<int>(coeffs_.size()) - 1; p >= 0; --p) {
    if (!coeffs_[static_cast<std::size_t>(p)].is_zero()) return p;
  }
  return -1;
}

std::string IntMorsePoly::render() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    const auto& c = coeffs_[p];
    if (c.is_zero()) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (p == 0) {
      out << mag.str();
      continue;
    }
    if (mag != 1) out << mag.str() << '*';
    out << 't';
    if (p > 1) out << '^' << p;
  }
  return first ? "0" : out.str();
}

IntMorsePoly operator+(const IntMorsePoly& a, const IntMorsePoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = a[p] + b[p];
  return IntMorsePoly(std::move(out));
}

IntMorsePoly operator-(const IntMorsePoly& a, const IntMorsePoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = a[p] - b[p];
  return IntMorsePoly(std::move(out));
}

bool operator==(const IntMorsePoly& a, const IntMorsePoly& b) {
  const auto n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t p = 0; p < n; ++p) {
    if (a[p] != b[p]) return false;
  }
  return true;
}

IntMorsePoly times_one_plus_t(const IntMorsePoly& q) {
  std::vector<BigInt> out(q.coeffs().size() + 1);
  for (std::size_t p = 0; p < q.coeffs().size(); ++p) {
    out[p] += q.coeffs()[p];
    out[p + 1] += q.coeffs()[p];
  }
  return IntMorsePoly(std::move(out));
}

BigInt euler_eval(const IntMorsePoly& p) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i % 2 == 0) {
      sum += p.coeffs()[i];
    } else {
      sum -= p.coeffs()[i];
    }
  }
  return sum;
}

Division div_one_plus_t(const IntMorsePoly& p) {
  const int deg = p.degree();
  if (deg <= 0) return {IntMorsePoly{}, p[0]};
  // d_n = q_{n-1}, d_i = q_i + q_{i-1} (0 < i < n), d_0 = q_0 + r.
  std::vector<BigInt> q(static_cast<std::size_t>(deg));
  q[static_cast<std::size_t>(deg - 1)] = p[static_cast<std::size_t>(deg)];
  for (int i = deg - 1; i >= 1; --i) {
    q[static_cast<std::size_t>(i - 1)] = p[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i)];
  }
  BigInt r = p[0] - q[0];
  return {IntMorsePoly(std::move(q)), std::move(r)};
}

Verdict Verdict::success(IntMorsePoly q) {
  Verdict v;
  v.holds = true;
  v.quotient = std::move(q);
  return v;
}

Verdict Verdict::failure(Witness w) {
  Verdict v;
  v.holds = false;
  v.witness = std::move(w);
  return v;
}

std::string describe(const Witness& w) {
  struct Visitor {
    std::string operator()(const RemainderWitness& r) const { return "remainder " + r.value.str(); }
    std::string operator()(const NegativeCoefficientWitness& n) const {
      std::string s = "negative coefficient " + n.value.str() + " at degree " +
                      std::to_string(n.degree);
      if (n.weight) s += " (weight " + std::to_string(n.weight->value) + ")";
      return s;
    }
    std::string operator()(const FixedPointLeakWitness& f) const {
      return "fixed-point terms do not vanish: " + f.fixed_point_terms.render();
    }
  };
  return std::visit(Visitor{}, w);
}

Verdict morse_compare(const IntMorsePoly& lhs, const IntMorsePoly& rhs) {
  auto [q, r] = div_one_plus_t(lhs - rhs);
  if (!r.is_zero()) return Verdict::failure(RemainderWitness{r});
  for (std::size_t p = 0; p < q.coeffs().size(); ++p) {
    if (q.coeffs()[p] < 0) {
      return Verdict::failure(
          NegativeCoefficientWitness{static_cast<int>(p), std::nullopt, q.coeffs()[p]});
    }
  }
  return Verdict::success(std::move(q));
}

MorseSeries::MorseSeries(int max_degree, const Window& window) : window_(window) {
  if (max_degree < 0) throw Error("negative Morse degree");
  coeffs_.assign(static_cast<std::size_t>(max_degree) + 1, WindowedCharacter::zero(window));
}

const WindowedCharacter& MorseSeries::coeff(int p) const {
  if (p < 0 || p > max_degree()) throw Error("Morse degree out of range: " + std::to_string(p));
  return coeffs_[static_cast<std::size_t>(p)];
}

void MorseSeries::add_term(int p, const WindowedCharacter& c) {
  if (p < 0 || p > max_degree()) {
    throw Error("Morse degree " + std::to_string(p) + " exceeds bound " +
                std::to_string(max_degree()));
  }
  auto& slot = coeffs_[static_cast<std::size_t>(p)];
  slot = add(slot, c);
}

MorseSeries operator+(const MorseSeries& a, const MorseSeries& b) {
  if (a.max_degree() != b.max_degree()) throw Error("Morse degree mismatch");
  if (!(a.window() == b.window())) throw Error("window mismatch");
  MorseSeries out = a;
  for (int p = 0; p <= b.max_degree(); ++p) out.add_term(p, b.coeff(p));
  return out;
}

IntMorsePoly restrict_weight(const MorseSeries& s, Weight k) {
  std::vector<BigInt> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(c.coeff_at(k));
  return IntMorsePoly(std::move(out));
}

CharacterVerdict morse_compare_char(const MorseSeries& lhs, const MorseSeries& rhs,
                                    const Window& window, Execution exec) {
  if (!lhs.window().contains(window) || !rhs.window().contains(window)) {
    throw Error("weight outside window");
  }
  CharacterVerdict out;
  auto verdicts = kernels::sweep(window, exec, [&](std::int64_t k) {
    auto v = morse_compare(restrict_weight(lhs, Weight(k)), restrict_weight(rhs, Weight(k)));
    if (v.witness) {
      if (auto* neg = std::get_if<NegativeCoefficientWitness>(&*v.witness)) neg->weight = Weight(k);
    }
    return WeightVerdict{Weight(k), std::move(v)};
  });
  out.holds = true;
  for (const auto& wv : verdicts) out.holds = out.holds && wv.verdict.holds;
  out.per_weight = std::move(verdicts);
  return out;
}

}  // namespace equimorse

#include "loopspace/gca.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace loopspace {

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](unsigned e) { return e == 0; });
}

GradedAlgebra::GradedAlgebra() : GradedAlgebra(std::vector<Generator>{}) {}

GradedAlgebra::GradedAlgebra(std::vector<Generator> declared) {
  auto data = std::make_shared<Data>();
  for (const auto& g : declared) {
    if (g.degree < 1) throw std::invalid_argument("generator '" + g.name + "' must have degree >= 1");
    if (g.name.empty()) throw std::invalid_argument("generator names must be non-empty");
  }
  data->declared = std::move(declared);
  data->canonical = data->declared;
  std::stable_sort(data->canonical.begin(), data->canonical.end(),
                   [](const Generator& a, const Generator& b) { return a.degree < b.degree; });
  for (std::size_t i = 0; i < data->canonical.size(); ++i) {
    if (!data->index.emplace(data->canonical[i].name, i).second)
      throw std::invalid_argument("duplicate generator '" + data->canonical[i].name + "'");
  }
  data_ = std::move(data);
}

std::optional<std::size_t> GradedAlgebra::index_of(std::string_view name) const {
  const auto it = data_->index.find(name);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

int GradedAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * generator(i).degree;
  return d;
}

AlgebraElement GradedAlgebra::zero() const { return AlgebraElement(*this); }

AlgebraElement GradedAlgebra::one() const { return scalar(1); }

AlgebraElement GradedAlgebra::scalar(const Rational& q) const {
  AlgebraElement e(*this);
  e.add_term(Monomial(std::vector<unsigned>(size(), 0)), q);
  return e;
}

AlgebraElement GradedAlgebra::gen(std::string_view name) const {
  const auto i = index_of(name);
  if (!i) throw UnknownGenerator(std::string(name));
  std::vector<unsigned> exps(size(), 0);
  exps[*i] = 1;
  return monomial(Monomial(std::move(exps)));
}

AlgebraElement GradedAlgebra::monomial(const Monomial& m, const Rational& coefficient) const {
  if (m.size() != size()) throw std::invalid_argument("monomial does not belong to this algebra");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (generator(i).degree % 2 == 1 && m[i] > 1) return zero();
  AlgebraElement e(*this);
  e.add_term(m, coefficient);
  return e;
}

namespace {

void enumerate_basis(const std::vector<Generator>& gens, std::size_t i, int remaining, std::vector<unsigned>& exps,
                     std::vector<Monomial>& out, std::size_t max_size, int degree) {
  if (remaining == 0) {
    out.emplace_back(exps);
    if (out.size() > max_size) throw ResourceLimit(degree, out.size());
    return;
  }
  if (i == gens.size()) return;
  const int deg = gens[i].degree;
  const unsigned max_exp = deg % 2 == 1 ? 1u : static_cast<unsigned>(remaining / deg);
  // Largest exponent first keeps the output in basis order.
  for (unsigned e = std::min(max_exp, static_cast<unsigned>(remaining / deg)) + 1; e-- > 0;) {
    exps[i] = e;
    enumerate_basis(gens, i + 1, remaining - static_cast<int>(e) * deg, exps, out, max_size, degree);
  }
  exps[i] = 0;
}

}  // namespace

std::vector<Monomial> GradedAlgebra::basis(int degree, std::size_t max_size) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<unsigned> exps(size(), 0);
  enumerate_basis(generators(), 0, degree, exps, out, max_size, degree);
  return out;
}

int GradedAlgebra::multiply(const Monomial& a, const Monomial& b, Monomial& out) const {
  const std::size_t n = size();
  std::vector<unsigned> exps(n);
  // Moving each odd factor of b left past the odd factors of a that follow it
  // in canonical order contributes one sign flip per crossing.
  unsigned odd_after = 0;  // odd factors of a strictly after position i
  for (std::size_t i = 0; i < n; ++i)
    if (generator(i).degree % 2 == 1 && a[i] == 1) ++odd_after;
  unsigned crossings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool odd = generator(i).degree % 2 == 1;
    if (odd) {
      if (a[i] == 1) --odd_after;
      if (a[i] + b[i] > 1) return 0;
      if (b[i] == 1) crossings += odd_after;
    }
    exps[i] = a[i] + b[i];
  }
  out = Monomial(std::move(exps));
  return crossings % 2 == 0 ? 1 : -1;
}

std::string GradedAlgebra::format(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += generator(i).name;
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    const int d = algebra_.degree(m);
    if (deg && *deg != d) throw std::domain_error("element has mixed degree: " + to_string());
    deg = d;
  }
  return deg;
}

Rational AlgebraElement::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void AlgebraElement::require_same_algebra(const AlgebraElement& o) const {
  if (!(algebra_ == o.algebra_)) throw UnknownGenerator("<operand from a different algebra>");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_algebra(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_algebra(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (m.is_one()) {
      os << mag.get_str();
    } else {
      if (!unit) os << mag.get_str() << '*';
      os << algebra_.format(m);
    }
  }
  return os.str();
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.algebra() == b.algebra())) throw UnknownGenerator("<operand from a different algebra>");
  AlgebraElement out(a.algebra());
  Monomial prod;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int sign = a.algebra().multiply(ma, mb, prod);
      if (sign == 0) continue;
      out.add_term(prod, sign > 0 ? ca * cb : Rational(-(ca * cb)));
    }
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement power(const AlgebraElement& a, unsigned exponent) {
  AlgebraElement out = a.algebra().one();
  for (unsigned i = 0; i < exponent; ++i) out = multiply(out, a);
  return out;
}

AlgebraElement evaluate(const GradedAlgebra& algebra, const PolySpec& poly) {
  AlgebraElement out = algebra.zero();
  for (const auto& term : poly) {
    AlgebraElement t = algebra.scalar(term.coefficient);
    for (const auto& f : term.factors) t = multiply(t, power(algebra.gen(f.generator), f.exponent));
    out += t;
  }
  return out;
}

DgaModel::DgaModel(std::string name, std::vector<Generator> generators, std::vector<DifferentialSpec> differentials)
    : name_(std::move(name)), algebra_(std::move(generators)), declared_(std::move(differentials)) {
  differentials_.assign(algebra_.size(), algebra_.zero());
  std::set<std::string> seen;
  for (const auto& spec : declared_) {
    const auto i = algebra_.index_of(spec.generator);
    if (!i) throw UnknownGenerator(spec.generator);
    if (!seen.insert(spec.generator).second)
      throw std::invalid_argument("differential of '" + spec.generator + "' declared twice");
    differentials_[*i] = evaluate(algebra_, spec.value);
  }
}

AlgebraElement apply_differential(const AlgebraElement& x, const DgaModel& model) {
  const GradedAlgebra& alg = model.algebra();
  if (!(x.algebra() == alg)) throw UnknownGenerator("<element from a different algebra>");
  AlgebraElement out = alg.zero();
  const std::size_t n = alg.size();
  for (const auto& [m, c] : x.terms()) {
    // m = prefix * x_i^{e_i} * suffix in canonical order.
    int prefix_degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned e = m[i];
      if (e == 0) continue;
      const AlgebraElement& dx = model.differential(i);
      if (!dx.is_zero()) {
        std::vector<unsigned> prefix(n, 0), lower(n, 0), suffix(n, 0);
        for (std::size_t j = 0; j < i; ++j) prefix[j] = m[j];
        for (std::size_t j = i + 1; j < n; ++j) suffix[j] = m[j];
        lower[i] = e - 1;
        // d(x^e) = e x^{e-1} dx for even x; odd x has e = 1.
        AlgebraElement term = multiply(alg.monomial(Monomial(prefix)), alg.monomial(Monomial(lower)));
        term = multiply(multiply(term, dx), alg.monomial(Monomial(suffix)));
        Rational coeff = c * e;
        if (prefix_degree % 2 == 1) coeff = -coeff;
        out += coeff * term;
      }
      prefix_degree += static_cast<int>(e) * alg.generator(i).degree;
    }
  }
  return out;
}

ModelReport check_model(const DgaModel& model) {
  ModelReport report;
  const GradedAlgebra& alg = model.algebra();
  auto fail = [&report](bool& flag, std::string msg) {
    flag = false;
    report.failures.push_back(std::move(msg));
  };

  for (const auto& spec : model.declared_differentials()) {
    const Generator& g = alg.generator(*alg.index_of(spec.generator));
    for (const auto& term : spec.value) {
      int deg = 0;
      std::map<std::string, unsigned> odd_uses;
      for (const auto& f : term.factors) {
        const Generator& fg = alg.generator(*alg.index_of(f.generator));
        deg += fg.degree * static_cast<int>(f.exponent);
        if (fg.degree >= g.degree && report.minimal)
          fail(report.minimal, "d" + g.name + " uses " + fg.name + " of degree " + std::to_string(fg.degree) +
                                   ", not below " + std::to_string(g.degree));
        if (fg.degree % 2 == 1) odd_uses[fg.name] += f.exponent;
      }
      if (deg != g.degree + 1)
        fail(report.degree_raising, "d" + g.name + " has a term of degree " + std::to_string(deg) + ", expected " +
                                        std::to_string(g.degree + 1));
      for (const auto& [name, count] : odd_uses)
        if (count > 1) {
          fail(report.odd_squares_excluded, "d" + g.name + " contains a square of the odd generator " + name);
        }
    }
    const AlgebraElement& dg = model.differential(*alg.index_of(spec.generator));
    if (dg.is_zero() &&
        std::any_of(spec.value.begin(), spec.value.end(), [](const TermSpec& t) { return sgn(t.coefficient) != 0; })) {
      report.degenerate = true;
      report.failures.push_back("d" + g.name + " is written nonzero but evaluates to 0 (degenerate)");
    }
  }

  for (std::size_t i = 0; i < alg.size(); ++i) {
    const AlgebraElement dd = apply_differential(model.differential(i), model);
    if (!dd.is_zero())
      fail(report.d_squared_zero, "d(d" + alg.generator(i).name + ") = " + dd.to_string() + " is not zero");
  }
  return report;
}

}  // namespace loopspace

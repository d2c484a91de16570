#pragma once

// Free graded skew-commutative algebras over Q and Sullivan-style DGA models.

#include "loopspace/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace loopspace {

class UnknownGenerator : public std::invalid_argument {
 public:
  explicit UnknownGenerator(const std::string& name)
      : std::invalid_argument("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Raised when a degree's monomial basis exceeds the configured size bound.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(int degree, std::size_t size)
      : std::runtime_error("monomial basis in degree " + std::to_string(degree) + " exceeds limit (" +
                           std::to_string(size) + " elements)"),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

struct Generator {
  std::string name;
  int degree = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Exponent vector indexed by the canonical generator order of an algebra.
/// Odd generators only ever carry exponent 0 or 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

  const std::vector<unsigned>& exponents() const { return exponents_; }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  std::size_t size() const { return exponents_.size(); }
  bool is_one() const;

  // Basis order: descending lexicographic, so powers of the first generator lead.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exponents_ > b.exponents_; }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exponents_;
};

class AlgebraElement;

/// The free graded skew-commutative algebra on a set of generators.
/// Generators are stored in canonical order: by degree, then declaration order.
/// Cheap to copy; instances compare equal when their generator lists agree.
class GradedAlgebra {
 public:
  GradedAlgebra();
  explicit GradedAlgebra(std::vector<Generator> declared);

  std::size_t size() const { return data_->canonical.size(); }
  const std::vector<Generator>& generators() const { return data_->canonical; }
  const std::vector<Generator>& declared() const { return data_->declared; }
  const Generator& generator(std::size_t i) const { return data_->canonical[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  int degree(const Monomial& m) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement scalar(const Rational& q) const;
  /// Throws UnknownGenerator.
  AlgebraElement gen(std::string_view name) const;
  AlgebraElement monomial(const Monomial& m, const Rational& coefficient = 1) const;

  /// All monomials of the given degree in basis order. Throws ResourceLimit
  /// once more than max_size monomials would be produced.
  std::vector<Monomial> basis(int degree, std::size_t max_size = 200000) const;

  /// Product of two basis monomials: the sign (+1/-1) and the merged
  /// monomial, or sign 0 when an odd generator would be squared.
  int multiply(const Monomial& a, const Monomial& b, Monomial& out) const;

  std::string format(const Monomial& m) const;

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
    return a.data_ == b.data_ || a.data_->canonical == b.data_->canonical;
  }

 private:
  struct Data {
    std::vector<Generator> declared;
    std::vector<Generator> canonical;
    std::map<std::string, std::size_t, std::less<>> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Finite linear combination of monomials. No zero coefficients are stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(GradedAlgebra algebra) : algebra_(std::move(algebra)) {}

  const GradedAlgebra& algebra() const { return algebra_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Common degree of all terms; nullopt for zero. Throws std::domain_error
  /// on mixed degrees.
  std::optional<int> homogeneous_degree() const;

  /// Coefficient of a monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& q);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend AlgebraElement operator*(const Rational& q, AlgebraElement a) { return a *= q; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void require_same_algebra(const AlgebraElement& o) const;

  GradedAlgebra algebra_;
  std::map<Monomial, Rational> terms_;
};

/// Graded-commutative product. Throws UnknownGenerator if the operands live in
/// different algebras.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement power(const AlgebraElement& a, unsigned exponent);

// Declarative form of a polynomial, as written in a model file. Factor order is
// the written order, which matters for the sign of odd factors.
struct Factor {
  std::string generator;
  unsigned exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};
struct TermSpec {
  Rational coefficient = 1;
  std::vector<Factor> factors;
  friend bool operator==(const TermSpec&, const TermSpec&) = default;
};
using PolySpec = std::vector<TermSpec>;  // empty means 0

struct DifferentialSpec {
  std::string generator;
  PolySpec value;
  friend bool operator==(const DifferentialSpec&, const DifferentialSpec&) = default;
};

/// Evaluates a declared polynomial in the algebra. Throws UnknownGenerator.
AlgebraElement evaluate(const GradedAlgebra& algebra, const PolySpec& poly);

/// A free graded skew-commutative algebra with a differential on generators.
/// Generators without a declared differential are cocycles.
class DgaModel {
 public:
  DgaModel() : DgaModel("empty", {}, {}) {}
  /// Throws UnknownGenerator for differentials naming undeclared generators,
  /// std::invalid_argument for duplicate names, degrees < 1 or repeated
  /// differential declarations.
  DgaModel(std::string name, std::vector<Generator> generators, std::vector<DifferentialSpec> differentials);

  const std::string& name() const { return name_; }
  const GradedAlgebra& algebra() const { return algebra_; }
  /// Differential of the generator at a canonical index.
  const AlgebraElement& differential(std::size_t canonical_index) const { return differentials_[canonical_index]; }
  const std::vector<DifferentialSpec>& declared_differentials() const { return declared_; }

  friend bool operator==(const DgaModel& a, const DgaModel& b) {
    return a.name_ == b.name_ && a.algebra_.declared() == b.algebra_.declared() && a.declared_ == b.declared_;
  }

 private:
  std::string name_;
  GradedAlgebra algebra_;
  std::vector<DifferentialSpec> declared_;
  std::vector<AlgebraElement> differentials_;
};

/// Extends the generator differentials to the whole algebra by the graded
/// Leibniz rule d(ab) = (da)b + (-1)^{|a|} a(db).
AlgebraElement apply_differential(const AlgebraElement& x, const DgaModel& model);

struct ModelReport {
  bool degree_raising = true;
  bool d_squared_zero = true;
  bool minimal = true;
  bool odd_squares_excluded = true;
  /// Some generator's declared differential is nonzero as written but
  /// evaluates to zero in the algebra.
  bool degenerate = false;
  std::vector<std::string> failures;

  bool passed() const { return degree_raising && d_squared_zero && minimal && odd_squares_excluded && !degenerate; }
  /// The weaker condition cohomology needs: d has degree +1 and squares to zero.
  bool is_complex() const { return degree_raising && d_squared_zero; }
};

ModelReport check_model(const DgaModel& model);

}  // namespace loopspace

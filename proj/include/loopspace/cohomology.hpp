#pragma once

#include "loopspace/gca.hpp"
#include "loopspace/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loopspace {

inline constexpr int kDefaultMaxDegree = 24;

struct BettiTable {
  int max_degree = 0;
  std::vector<int> dims;  // indexed 0..max_degree
  /// Representative cocycles per degree, when requested.
  std::optional<std::vector<std::vector<AlgebraElement>>> representatives;

  int dim(int degree) const {
    return degree < 0 || degree > max_degree ? 0 : dims[static_cast<std::size_t>(degree)];
  }
  static BettiTable from_dims(std::vector<int> dims);

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.max_degree == b.max_degree && a.dims == b.dims && a.representatives == b.representatives;
  }
};

/// Degree-truncated cohomology of a DGA model, keeping the per-degree data
/// needed to work with cohomology classes.
///
/// Representatives in each degree are the kernel basis vectors (in the fixed
/// pivot order) that are independent modulo the coboundaries, taken greedily.
class CohomologyComputation {
 public:
  /// Requires d to raise degree by one and square to zero (minimality is not
  /// required). Throws std::invalid_argument otherwise, or for max_degree < 0;
  /// throws ResourceLimit when a basis grows past max_basis.
  CohomologyComputation(DgaModel model, int max_degree, std::size_t max_basis = 20000);

  const DgaModel& model() const { return model_; }
  int max_degree() const { return max_degree_; }

  const std::vector<Monomial>& basis(int degree) const;
  std::size_t cochain_dim(int degree) const { return basis(degree).size(); }
  /// Rank of d : C^degree -> C^{degree+1}.
  std::size_t differential_rank(int degree) const;
  std::size_t kernel_dim(int degree) const { return cochain_dim(degree) - differential_rank(degree); }
  int betti(int degree) const;
  const std::vector<AlgebraElement>& representatives(int degree) const;

  /// Coordinates of a homogeneous element in the monomial basis of its degree.
  std::vector<Rational> coordinates(const AlgebraElement& x, int degree) const;

  bool is_cocycle(const AlgebraElement& x) const;
  bool is_coboundary(const AlgebraElement& x, int degree) const;
  /// Coordinates of the class of a cocycle with respect to representatives(degree).
  std::vector<Rational> class_coordinates(const AlgebraElement& cocycle, int degree) const;
  /// True when the classes of the given cocycles are linearly independent.
  bool classes_independent(const std::vector<AlgebraElement>& cocycles, int degree) const;

  BettiTable table(bool with_representatives = true) const;

 private:
  struct Degree {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;
    Matrix differential;  // rows: C^{d+1}, columns: C^d
    std::size_t rank = 0;
    std::vector<std::vector<Rational>> coboundary_span;  // columns of the incoming differential
    std::vector<AlgebraElement> representatives;
  };
  const Degree& at(int degree) const;

  DgaModel model_;
  int max_degree_;
  std::vector<Degree> degrees_;  // 0..max_degree+1; the last has no differential data
};

/// Betti table up to max_degree (representatives included).
BettiTable cohomology(const DgaModel& model, int max_degree);

/// Q[w,z]/(w^a) with w, z of even degrees.
struct RingPresentation {
  int deg_w = 2;
  int deg_z = 2;
  int nilpotency = 1;
};

/// Dimensions of Q[w,z]/(w^a) by degree, 0..max_degree.
std::vector<int> presented_ring_dims(const RingPresentation& p, int max_degree);

struct RingReport {
  bool passed = false;
  std::optional<int> failing_degree;
  std::string message;
  std::vector<int> expected_dims;
  std::vector<int> actual_dims;
  std::optional<AlgebraElement> w;
  std::optional<AlgebraElement> z;
};

/// Checks that the cohomology of the model is Q[w,z]/(w^a) up to max_degree:
/// matching dimensions, a class w with w^a = 0 and w^{a-1} != 0, and a class z
/// such that the products w^i z^j (i < a) are independent in every degree.
/// Candidates for w and z are the representative cocycles in their degrees.
RingReport verify_ring_presentation(const DgaModel& model, const RingPresentation& p, int max_degree);

}  // namespace loopspace

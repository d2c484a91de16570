#pragma once

// Space forms S^n / Gamma, homotopy of the free-loop components and of their
// SO(2) homotopy quotients, their minimal models, and circle-bundle checks.

#include "loopspace/cohomology.hpp"
#include "loopspace/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace loopspace {

enum class Parity { even, odd };

/// Data of a space form S^n/Gamma and a loop class h != 1: the order r of the
/// centralizer C(h) = Z_r and the order of h itself.
class SpaceFormSpec {
 public:
  /// Throws std::invalid_argument unless n >= 2, element_order >= 2 divides r,
  /// and (r, element_order) = (2, 2) when n is even.
  SpaceFormSpec(int n, int centralizer_order, int element_order);

  int n() const { return n_; }
  Parity parity() const { return n_ % 2 == 0 ? Parity::even : Parity::odd; }
  /// k with n = 2k or n = 2k + 1.
  int k() const { return n_ / 2; }
  int centralizer_order() const { return r_; }
  int element_order() const { return order_; }

  friend bool operator==(const SpaceFormSpec&, const SpaceFormSpec&) = default;

 private:
  int n_;
  int r_;
  int order_;
};

/// f_i = h_i - id acting on pi_i(M) (x) Q.
struct ActionEntry {
  int degree = 2;
  int dimension = 0;
  Matrix f;
};

class ActionData {
 public:
  ActionData() = default;
  /// Throws std::invalid_argument for degrees < 2, non-increasing degrees or
  /// matrices that are not dimension x dimension.
  explicit ActionData(std::vector<ActionEntry> entries);

  const std::vector<ActionEntry>& entries() const { return entries_; }
  const ActionEntry* find(int degree) const;

 private:
  std::vector<ActionEntry> entries_;
};

/// Finite cyclic group Z_order; order 0 means "not computed".
struct CyclicGroup {
  int order = 0;
  bool computed() const { return order > 0; }
  bool trivial() const { return order == 1; }
  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;
};

struct HomotopyTable {
  int max_degree = 1;
  std::map<int, int> dims;  // degree (>= 2) -> dim of pi_i (x) Q; every degree 2..max_degree present
  CyclicGroup pi1;

  int dim(int degree) const {
    const auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
  }
  friend bool operator==(const HomotopyTable&, const HomotopyTable&) = default;
};

/// dim pi_i(S^n) (x) Q for i >= 2 (Cartan-Serre).
int sphere_rational_homotopy(int n, int i);

/// Rank bookkeeping of the exact sequence of the evaluation fibration
/// Omega M -> Lambda M[h] -> M over Q:
///   dim pi_i(Lambda M[h]) = dim ker f_i + dim coker f_{i+1},  i = 2..max_degree.
/// pi1 is left as "not computed".
HomotopyTable loop_space_dims(const ActionData& action, int max_degree);

/// Action of h on the rational homotopy of M = S^n/Gamma:
///   odd n:      f_n = 0 (deck transformations are rotations),
///   even n=2k:  f_{2k} = -2 (the antipodal map reverses orientation, h = -1),
///               f_{4k-1} = 0 (pi_{4k-1} is generated by the Whitehead square
///               [i_2k, i_2k], on which h acts by (-1)^2 = +1).
ActionData sphere_action(const SpaceFormSpec& spec);

/// pi_* (x) Q and pi_1 of the free-loop component Lambda M[h].
/// pi_1 = C(h) = Z_r for n >= 3 and Z_4 for RP^2.
HomotopyTable loop_component_homotopy(const SpaceFormSpec& spec, int max_degree);

/// pi_* (x) Q and pi_1 of the homotopy quotient LM[h]_{SO(2)}: one extra
/// rational class in degree 2 from the fibre S^1, pi_1 = C(h)/<h> for odd n and
/// trivial for even n.
HomotopyTable so2_quotient_homotopy(const SpaceFormSpec& spec, int max_degree);

/// Groups of order four arising as extensions 0 -> Z_2 -> G -> Z_2 -> 0.
class Order4Group {
 public:
  enum class Kind { cyclic4, klein4 };
  explicit Order4Group(Kind kind) : kind_(kind) {}

  Kind kind() const { return kind_; }
  /// Elements are 0..3 with 0 the identity. Z_4 uses addition mod 4; the
  /// Klein group uses bitwise xor.
  int op(int a, int b) const { return kind_ == Kind::cyclic4 ? (a + b) % 4 : (a ^ b); }
  int element_order(int a) const;
  bool has_element_of_order(int order) const;
  std::string name() const { return kind_ == Kind::cyclic4 ? "Z4" : "Z2xZ2"; }

 private:
  Kind kind_;
};

/// Decides the extension by exhaustive search over both groups of order four:
/// the group containing a kernel element kappa != 0 with 2 kappa = 0 and a
/// lift eta outside the kernel such that (2 eta == kappa) matches the input.
Order4Group classify_order4_extension(bool kappa_equals_two_eta);

/// Minimal model of LM[h]_{SO(2)}:
///   n = 2k:     u_2, u_{4k-2}, u_{4k-1} with d u_{4k-1} = u_2^{2k},
///   n = 2k + 1: u_2, u_{2k},   u_{2k+1} with d u_{2k+1} = u_2^{k+1}.
/// When the middle generator has degree 2 it is named v2.
DgaModel so2_quotient_model(const SpaceFormSpec& spec);

/// The presentation Q[w,z]/(w^a) expected for so2_quotient_model(spec):
/// (deg z, a) = (4k-2, 2k) for n = 2k and (2k, k+1) for n = 2k + 1.
RingPresentation so2_quotient_ring(const SpaceFormSpec& spec);

/// Cohomology data of a circle bundle E -> B: Betti numbers of the base,
/// cup product with the Euler class H^p(B) -> H^{p+2}(B) for p = 0..base
/// max_degree, and Betti numbers of the total space.
struct GysinInput {
  BettiTable base;
  std::vector<Matrix> euler_action;
  BettiTable total;
};

struct GysinReport {
  bool passed = false;
  std::optional<int> failing_degree;
  std::vector<int> predicted;  // coker + ker per degree of the total space
  std::string message;
};

/// Checks dim H^p(E) = dim coker(e: H^{p-2} -> H^p) + dim ker(e: H^{p-1} -> H^{p+1})
/// for p = 0..total.max_degree. Base degrees outside 0..base.max_degree and
/// maps leaving that range are zero. Throws std::invalid_argument when a
/// matrix shape does not match the base dimensions.
GysinReport gysin_check(const GysinInput& input);

/// Matrices of multiplication by the class of euler_cocycle (degree 2), in the
/// representative bases, for source degrees 0..comp.max_degree(). Targets past
/// the computed range get zero rows.
std::vector<Matrix> euler_multiplication(const CohomologyComputation& comp, const AlgebraElement& euler_cocycle);

/// Model of the total space of the circle bundle with Euler class e: the base
/// model plus one degree-1 generator with differential e.
DgaModel circle_bundle_model(const DgaModel& base, const PolySpec& euler_class, const std::string& fibre_name = "v");

}  // namespace loopspace

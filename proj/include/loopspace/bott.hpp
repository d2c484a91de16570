#pragma once

// Bott's index iteration: ind(gamma^m) = sum over z^m = 1 of I(z), with I a
// conjugation-symmetric step function on the unit circle.

#include "loopspace/cohomology.hpp"
#include "loopspace/rational.hpp"
#include "loopspace/spaceform.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loopspace {

/// A point exp(2 pi i t) of the unit circle, stored as exact turns t in [0, 1).
class Angle {
 public:
  Angle() = default;
  /// Reduces any rational modulo 1.
  explicit Angle(Rational turns);
  static Angle from_fraction(long num, long den) { return Angle(Rational(num, den)); }

  const Rational& turns() const { return turns_; }
  /// Complex conjugate: t -> 1 - t (mod 1).
  Angle conjugate() const { return Angle(-turns_); }
  bool is_real() const { return turns_ == 0 || turns_ == Rational(1, 2); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.turns_ == b.turns_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    const int c = cmp(a.turns_, b.turns_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  Rational turns_ = 0;
};

/// Step function I on the circle. arc_values[i] is the value on the open arc
/// from discontinuities[i] to discontinuities[i+1] (cyclically); with no
/// discontinuities it holds the single constant value. point_values[i] is the
/// value exactly at discontinuities[i].
class BottFunction {
 public:
  /// Throws std::invalid_argument on unsorted/duplicate discontinuities,
  /// mismatched list lengths, negative values, data not symmetric under
  /// complex conjugation, or more than 2n-2 discontinuities for a given n.
  BottFunction(std::vector<Angle> discontinuities, std::vector<int> arc_values, std::vector<int> point_values,
               std::optional<int> ambient_dimension = std::nullopt);

  static BottFunction constant(int value);
  /// Point values default to the minimum of the two adjacent arc values.
  static BottFunction with_default_points(std::vector<Angle> discontinuities, std::vector<int> arc_values,
                                          std::optional<int> ambient_dimension = std::nullopt);

  const std::vector<Angle>& discontinuities() const { return disc_; }
  const std::vector<int>& arc_values() const { return arcs_; }
  const std::vector<int>& point_values() const { return points_; }
  std::optional<int> ambient_dimension() const { return ambient_; }

  /// I(exp(2 pi i t)).
  int value_at(const Angle& a) const;
  int at_one() const { return value_at(Angle()); }
  int at_minus_one() const { return value_at(Angle(Rational(1, 2))); }

  std::string describe() const;

  friend bool operator==(const BottFunction& a, const BottFunction& b) {
    return a.disc_ == b.disc_ && a.arcs_ == b.arcs_ && a.points_ == b.points_;
  }
  friend auto operator<=>(const BottFunction& a, const BottFunction& b) {
    if (auto c = a.disc_ <=> b.disc_; c != 0) return c;
    if (auto c = a.arcs_ <=> b.arcs_; c != 0) return c;
    return a.points_ <=> b.points_;
  }

 private:
  std::vector<Angle> disc_;
  std::vector<int> arcs_;
  std::vector<int> points_;
  std::optional<int> ambient_;
};

/// Pointwise sum; both functions must share the same discontinuity set.
BottFunction operator+(const BottFunction& f, const BottFunction& g);

/// ind(gamma^m) = sum_{j=0}^{m-1} I(exp(2 pi i j/m)), m >= 1.
std::int64_t bott_index(const BottFunction& f, std::int64_t m);

/// True iff no discontinuity t has m t = 0 or 1/2 (mod 1), i.e. lambda^m != +-1.
bool is_nondegenerate(const BottFunction& f, std::int64_t m);

/// ind(gamma^m) - ind(gamma) is even.
bool schwarz_even(const BottFunction& f, std::int64_t m);

/// Parity of ind(gamma^m) from the real roots of unity alone: non-real roots
/// come in conjugate pairs with equal values, leaving I(1) (+ I(-1) for even m).
Parity index_parity(const BottFunction& f, std::int64_t m);

/// Iterates with their Morse indices; iterates strictly increasing.
class IndexSequence {
 public:
  IndexSequence() = default;
  explicit IndexSequence(std::vector<std::pair<std::int64_t, std::int64_t>> entries);

  /// (m, bott_index(f, m)) for each listed iterate.
  static IndexSequence of(const BottFunction& f, const std::vector<std::int64_t>& iterates);

  const std::vector<std::pair<std::int64_t, std::int64_t>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::int64_t, std::int64_t>> entries_;
};

/// Perfect Morse matching up to betti.max_degree: every degree d is hit by
/// exactly betti.dims[d] indices; indices beyond max_degree are ignored.
/// Throws std::invalid_argument for a malformed table.
bool morse_matches_betti(const IndexSequence& seq, const BettiTable& betti);

/// First degree where the matching fails with (index count, Betti number).
std::optional<std::pair<int, std::pair<int, int>>> morse_mismatch(const IndexSequence& seq, const BettiTable& betti);

/// Closed geodesics whose indices have different parity are distinct.
bool parity_distinct(std::int64_t ind_a, std::int64_t ind_b);

}  // namespace loopspace

#include "loopspace/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopspace {

namespace {

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

Angle::Angle(Rational turns) {
  turns.canonicalize();
  turns_ = turns - Rational(floor_of(turns));
}

BottFunction::BottFunction(std::vector<Angle> discontinuities, std::vector<int> arc_values,
                           std::vector<int> point_values, std::optional<int> ambient_dimension)
    : disc_(std::move(discontinuities)),
      arcs_(std::move(arc_values)),
      points_(std::move(point_values)),
      ambient_(ambient_dimension) {
  for (std::size_t i = 1; i < disc_.size(); ++i)
    if (!(disc_[i - 1] < disc_[i])) throw std::invalid_argument("discontinuities must be strictly increasing");
  const std::size_t expected_arcs = disc_.empty() ? 1 : disc_.size();
  if (arcs_.size() != expected_arcs)
    throw std::invalid_argument("expected " + std::to_string(expected_arcs) + " arc value(s), got " +
                                std::to_string(arcs_.size()));
  if (points_.size() != disc_.size())
    throw std::invalid_argument("expected one point value per discontinuity");
  auto negative = [](int v) { return v < 0; };
  if (std::any_of(arcs_.begin(), arcs_.end(), negative) || std::any_of(points_.begin(), points_.end(), negative))
    throw std::invalid_argument("Bott function values must be non-negative");
  if (ambient_) {
    if (*ambient_ < 2) throw std::invalid_argument("ambient dimension must be >= 2");
    if (disc_.size() > static_cast<std::size_t>(2 * *ambient_ - 2))
      throw std::invalid_argument("at most 2n-2 = " + std::to_string(2 * *ambient_ - 2) + " discontinuities allowed");
  }

  const std::size_t n = disc_.size();
  auto index_of = [this](const Angle& a) -> std::optional<std::size_t> {
    const auto it = std::lower_bound(disc_.begin(), disc_.end(), a);
    if (it == disc_.end() || !(*it == a)) return std::nullopt;
    return static_cast<std::size_t>(it - disc_.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = index_of(disc_[i].conjugate());
    if (!j)
      throw std::invalid_argument("discontinuity " + to_fraction_string(disc_[i].turns()) +
                                  " has no conjugate partner " + to_fraction_string(disc_[i].conjugate().turns()));
    if (points_[i] != points_[*j])
      throw std::invalid_argument("point values at conjugate discontinuities differ");
    // The arc (t_i, t_{i+1}) is conjugate to the arc starting at conj(t_{i+1}).
    const auto mirror = index_of(disc_[(i + 1) % n].conjugate());
    if (arcs_[i] != arcs_[*mirror]) throw std::invalid_argument("arc values are not symmetric under conjugation");
  }
}

BottFunction BottFunction::constant(int value) { return BottFunction({}, {value}, {}); }

BottFunction BottFunction::with_default_points(std::vector<Angle> discontinuities, std::vector<int> arc_values,
                                               std::optional<int> ambient_dimension) {
  std::vector<int> points;
  const std::size_t n = discontinuities.size();
  if (arc_values.size() == n) {
    for (std::size_t i = 0; i < n; ++i) points.push_back(std::min(arc_values[(i + n - 1) % n], arc_values[i]));
  }
  return BottFunction(std::move(discontinuities), std::move(arc_values), std::move(points), ambient_dimension);
}

int BottFunction::value_at(const Angle& a) const {
  if (disc_.empty()) return arcs_.front();
  const auto it = std::lower_bound(disc_.begin(), disc_.end(), a);
  if (it != disc_.end() && *it == a) return points_[static_cast<std::size_t>(it - disc_.begin())];
  // Arc starting at the last discontinuity below a; wraps to the last arc.
  if (it == disc_.begin()) return arcs_.back();
  return arcs_[static_cast<std::size_t>(it - disc_.begin()) - 1];
}

std::string BottFunction::describe() const {
  std::string s = "disc={";
  for (std::size_t i = 0; i < disc_.size(); ++i) s += (i ? "," : "") + disc_[i].turns().get_str();
  s += "} arcs={";
  for (std::size_t i = 0; i < arcs_.size(); ++i) s += (i ? "," : "") + std::to_string(arcs_[i]);
  s += "} points={";
  for (std::size_t i = 0; i < points_.size(); ++i) s += (i ? "," : "") + std::to_string(points_[i]);
  return s + "}";
}

BottFunction operator+(const BottFunction& f, const BottFunction& g) {
  if (f.discontinuities() != g.discontinuities())
    throw std::invalid_argument("Bott functions must share their discontinuity set to be added");
  std::vector<int> arcs(f.arc_values().size()), points(f.point_values().size());
  for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i] = f.arc_values()[i] + g.arc_values()[i];
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = f.point_values()[i] + g.point_values()[i];
  return BottFunction(f.discontinuities(), std::move(arcs), std::move(points));
}

std::int64_t bott_index(const BottFunction& f, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("iterate m must be >= 1");
  const auto& disc = f.discontinuities();
  if (disc.empty()) return static_cast<std::int64_t>(f.arc_values().front()) * m;

  const Rational mq(static_cast<long>(m));
  Integer total = 0;
  const std::size_t n = disc.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Rational lo = mq * disc[i].turns();
    const Rational hi = mq * (i + 1 < n ? disc[i + 1].turns() : disc[0].turns() + 1);
    // Integers j with lo < j < hi; the arc is shorter than a full turn, so
    // they are distinct residues mod m.
    const Integer count = ceil_of(hi) - floor_of(lo) - 1;
    total += count * f.arc_values()[i];
    if (is_integer(lo)) total += f.point_values()[i];
  }
  return total.get_si();
}

bool is_nondegenerate(const BottFunction& f, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("iterate m must be >= 1");
  const Rational mq(static_cast<long>(m));
  for (const auto& a : f.discontinuities()) {
    const Rational twice = 2 * mq * a.turns();
    if (is_integer(twice)) return false;  // m t is 0 or 1/2 mod 1
  }
  return true;
}

bool schwarz_even(const BottFunction& f, std::int64_t m) { return (bott_index(f, m) - bott_index(f, 1)) % 2 == 0; }

Parity index_parity(const BottFunction& f, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("iterate m must be >= 1");
  const int real_part = f.at_one() + (m % 2 == 0 ? f.at_minus_one() : 0);
  return real_part % 2 == 0 ? Parity::even : Parity::odd;
}

IndexSequence::IndexSequence(std::vector<std::pair<std::int64_t, std::int64_t>> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first < 1 || entries_[i].second < 0)
      throw std::invalid_argument("iterates must be positive and indices non-negative");
    if (i > 0 && entries_[i].first <= entries_[i - 1].first)
      throw std::invalid_argument("iterates must be strictly increasing");
  }
}

IndexSequence IndexSequence::of(const BottFunction& f, const std::vector<std::int64_t>& iterates) {
  std::vector<std::pair<std::int64_t, std::int64_t>> entries;
  entries.reserve(iterates.size());
  for (auto m : iterates) entries.emplace_back(m, bott_index(f, m));
  return IndexSequence(std::move(entries));
}

std::optional<std::pair<int, std::pair<int, int>>> morse_mismatch(const IndexSequence& seq, const BettiTable& betti) {
  if (betti.max_degree < 0 || betti.dims.size() != static_cast<std::size_t>(betti.max_degree) + 1)
    throw std::invalid_argument("Betti table length does not match its max_degree");
  std::vector<int> hits(betti.dims.size(), 0);
  for (const auto& [m, index] : seq.entries())
    if (index <= betti.max_degree) ++hits[static_cast<std::size_t>(index)];
  for (int d = 0; d <= betti.max_degree; ++d) {
    const auto i = static_cast<std::size_t>(d);
    if (hits[i] != betti.dims[i]) return std::make_pair(d, std::make_pair(hits[i], betti.dims[i]));
  }
  return std::nullopt;
}

bool morse_matches_betti(const IndexSequence& seq, const BettiTable& betti) { return !morse_mismatch(seq, betti); }

bool parity_distinct(std::int64_t ind_a, std::int64_t ind_b) {
  if (ind_a < 0 || ind_b < 0) throw std::invalid_argument("Morse indices must be non-negative");
  return (ind_a - ind_b) % 2 != 0;
}

}  // namespace loopspace

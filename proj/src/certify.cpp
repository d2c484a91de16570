#include "loopspace/certify.hpp"

#include <stdexcept>

namespace loopspace {

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::theorem4: return "theorem4";
    case CertificateKind::theorem5: return "theorem5";
    case CertificateKind::parity_remark: return "parity-remark";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  return verdict == Verdict::contradiction_established ? "contradiction-established" : "inconclusive";
}

namespace {

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

}  // namespace

Certificate certify_rp2(int grid, int values, std::int64_t cutoff) {
  if (grid < 2 || grid % 2 != 0) throw std::invalid_argument("grid denominator must be even and >= 2");
  if (values < 0) throw std::invalid_argument("value bound must be >= 0");
  if (cutoff % 2 == 0) throw std::invalid_argument("iterate cutoff must be odd");
  if (cutoff < 2 * static_cast<std::int64_t>(grid) + 1)
    throw std::invalid_argument("iterate cutoff must be >= 2 * grid + 1");

  const SpaceFormSpec rp2(2, 2, 2);
  const int truncation = static_cast<int>(2 * ((cutoff - 1) / 4));
  BettiTable target = BettiTable::from_dims(presented_ring_dims(so2_quotient_ring(rp2), truncation));

  std::vector<std::int64_t> odd_iterates;
  for (std::int64_t m = 1; m <= cutoff; m += 2) odd_iterates.push_back(m);

  Certificate cert;
  cert.kind = CertificateKind::theorem4;
  cert.parameters = {{"grid", std::to_string(grid)},
                     {"values", std::to_string(values)},
                     {"cutoff", std::to_string(cutoff)},
                     {"ambient_dimension", "2"},
                     {"betti_truncation", std::to_string(truncation)},
                     {"target_ring", "Q[w,z]/(w^2), deg w = 2, deg z = 2"}};
  cert.assumptions = {"a minimal non-contractible closed geodesic is simple with index 0",
                      "under the single-geodesic hypothesis its odd iterates give a perfect Morse matching of "
                      "H^*(LRP^2[h]_SO(2); Q)",
                      "the Bott function has at most 2n-2 = 2 discontinuities, conjugate-symmetric"};

  std::vector<BottFunction> candidates{BottFunction::constant(0)};
  for (int j = 1; j <= grid / 2; ++j) {
    const Angle t = Angle::from_fraction(j, grid);
    std::vector<Angle> disc{t};
    if (!t.is_real()) disc.push_back(t.conjugate());
    for (int v = 0; v <= values; ++v) {
      // Arc after t runs through -1; the arc after 1 - t runs through 1.
      std::vector<int> arcs = disc.size() == 2 ? std::vector<int>{v, 0} : std::vector<int>{0};
      if (disc.size() == 1 && v > 0) continue;  // single point at -1: the only arc passes through 1
      candidates.push_back(BottFunction::with_default_points(disc, std::move(arcs), 2));
    }
  }

  for (const auto& f : candidates) {
    const std::string desc = f.describe();
    const auto mismatch = morse_mismatch(IndexSequence::of(f, odd_iterates), target);
    if (mismatch) {
      const auto& [deg, counts] = *mismatch;
      cert.transcript.push_back({desc, "perfect Morse matching", false,
                                 "degree " + std::to_string(deg) + " hit " + std::to_string(counts.first) +
                                     " time(s), Betti number " + std::to_string(counts.second)});
      continue;
    }
    cert.transcript.push_back({desc, "perfect Morse matching", true,
                               "odd iterates up to " + std::to_string(cutoff) + " match up to degree " +
                                   std::to_string(truncation)});
    cert.survivors.push_back({desc, f});
  }

  bool all_refuted = !cert.survivors.empty();
  const std::vector<Angle> quarter{Angle::from_fraction(1, 4), Angle::from_fraction(3, 4)};
  for (const auto& s : cert.survivors) {
    const bool at_quarter = s.function.discontinuities() == quarter;
    cert.transcript.push_back({s.description, "discontinuities at {1/4, 3/4}", at_quarter, ""});
    const bool nondegenerate = is_nondegenerate(s.function, 2);
    cert.transcript.push_back({s.description, "second iterate non-degenerate", nondegenerate,
                               nondegenerate ? "" : "lambda^2 = -1 lies in the Poincare spectrum"});
    if (!at_quarter || nondegenerate) all_refuted = false;
  }
  cert.verdict = all_refuted ? Verdict::contradiction_established : Verdict::inconclusive;
  return cert;
}

Certificate certify_even_index_iterates(const SpaceFormSpec& spec, bool pairwise_nonconjugate, std::int64_t k,
                                        const BottFunction& f, std::int64_t iterates) {
  if (spec.parity() != Parity::odd) throw std::invalid_argument("requires an odd-dimensional sphere S^{2n+1}");
  if (spec.element_order() % 2 != 0) throw std::invalid_argument("h must have even order");
  if (!pairwise_nonconjugate) throw std::invalid_argument("elements of C(h) must be pairwise non-conjugate");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (iterates < 0) throw std::invalid_argument("iterate count must be >= 0");
  if (bott_index(f, k) != 0)
    throw std::invalid_argument("the minimal geodesic c = gamma^k must have index 0, got " +
                                std::to_string(bott_index(f, k)));

  const HomotopyTable quotient = so2_quotient_homotopy(spec, 2);
  const std::int64_t order = spec.element_order();

  Certificate cert;
  cert.kind = CertificateKind::theorem5;
  cert.parameters = {{"n", std::to_string(spec.n())},
                     {"centralizer_order", std::to_string(spec.centralizer_order())},
                     {"element_order", std::to_string(order)},
                     {"pairwise_nonconjugate", "true"},
                     {"k", std::to_string(k)},
                     {"iterates", std::to_string(iterates)},
                     {"pi1_order", std::to_string(quotient.pi1.order)}};
  cert.assumptions = {"a Morse complex whose critical points all have even index builds a CW structure "
                      "with only even-dimensional cells, which has trivial fundamental group"};
  cert.survivors.push_back({"sole simple geodesic gamma: " + f.describe(), f});

  if (quotient.pi1.trivial()) {
    cert.transcript.push_back({"pi_1(LM[h]_SO(2))", "nontrivial", false, "C(h)/<h> is trivial"});
    cert.verdict = Verdict::inconclusive;
    return cert;
  }
  cert.transcript.push_back(
      {"pi_1(LM[h]_SO(2))", "nontrivial", true, "Z_" + std::to_string(quotient.pi1.order)});

  bool all_even = true;
  for (std::int64_t l = 0; l <= iterates; ++l) {
    const std::int64_t m = k * (1 + order * l);
    const std::int64_t index = bott_index(f, m);
    const Parity parity = index % 2 == 0 ? Parity::even : Parity::odd;
    cert.transcript.push_back({"gamma^" + std::to_string(m), "even index", parity == Parity::even,
                               "index " + std::to_string(index) + " (" + parity_name(parity) + ")"});
    if (parity == Parity::odd) all_even = false;
  }
  cert.verdict = all_even ? Verdict::contradiction_established : Verdict::inconclusive;
  return cert;
}

Certificate certify_parity_remark(std::int64_t ind_a, std::int64_t ind_b) {
  Certificate cert;
  cert.kind = CertificateKind::parity_remark;
  cert.parameters = {{"index_a", std::to_string(ind_a)}, {"index_b", std::to_string(ind_b)}};
  cert.assumptions = {"both geodesics contribute to the rational homology of the SO(2) quotient"};
  const bool distinct = parity_distinct(ind_a, ind_b);
  cert.transcript.push_back({"(" + std::to_string(ind_a) + ", " + std::to_string(ind_b) + ")", "different parity",
                             distinct, ""});
  cert.verdict = distinct ? Verdict::contradiction_established : Verdict::inconclusive;
  return cert;
}

}  // namespace loopspace

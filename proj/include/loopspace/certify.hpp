#pragma once

// Machine-checkable transcripts of the closed-geodesic existence arguments:
// a single geodesic's iterates are shown unable to account for the topology.

#include "loopspace/bott.hpp"
#include "loopspace/spaceform.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace loopspace {

enum class CertificateKind { theorem4, theorem5, parity_remark };
enum class Verdict { contradiction_established, inconclusive };

std::string to_string(CertificateKind kind);
std::string to_string(Verdict verdict);

struct TranscriptEntry {
  std::string candidate;
  std::string condition;
  bool holds = false;
  std::string detail;
  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

struct Survivor {
  std::string description;
  BottFunction function;
  friend bool operator==(const Survivor&, const Survivor&) = default;
};

struct Certificate {
  CertificateKind kind = CertificateKind::theorem4;
  /// Everything needed to replay the search, in insertion order.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Survivor> survivors;
  Verdict verdict = Verdict::inconclusive;
  std::vector<TranscriptEntry> transcript;
  /// Implications taken as given rather than computed.
  std::vector<std::string> assumptions;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Search behind the RP^2 two-geodesics argument.
///
/// Candidates are Bott functions of a single minimal non-contractible geodesic
/// c on RP^2: discontinuities at a conjugate grid pair {j/N, 1 - j/N}
/// (1 <= j <= N/2), value 0 on the arc through 1 (ind c = 0), value
/// 0..values on the arc through -1, default point values; plus the zero
/// function. A candidate survives when the indices of c^m, m odd <= cutoff,
/// match Q[w,z]/(w^2) (deg w = deg z = 2) perfectly up to degree
/// 2 floor((cutoff - 1)/4), the largest degree those iterates can cover.
/// The contradiction is established when survivors exist and every one has
/// discontinuities at {1/4, 3/4} and a degenerate second iterate.
///
/// Throws std::invalid_argument unless grid is even and >= 2, values >= 0,
/// cutoff odd and cutoff >= 2 * grid + 1.
Certificate certify_rp2(int grid, int values, std::int64_t cutoff);

/// Search behind the even-index argument for S^{2n+1}/Gamma.
///
/// f is the Bott function of the hypothesized sole simple geodesic gamma with
/// c = gamma^k minimal (ind c = 0). With 2p the order of h, the iterates of c
/// in the class [h] are gamma^{k(1 + 2pl)}; when pi_1(LM[h]_{SO(2)}) is
/// nontrivial and all their indices (l = 0..iterates) are even the
/// contradiction is established.
///
/// Throws std::invalid_argument when n is even, the element order is odd,
/// pairwise_nonconjugate is false, k < 1, iterates < 0 or bott_index(f, k) != 0.
Certificate certify_even_index_iterates(const SpaceFormSpec& spec, bool pairwise_nonconjugate, std::int64_t k,
                                        const BottFunction& f, std::int64_t iterates);

/// Two geodesics contributing to homology with indices of different parity
/// are distinct; verdict is contradiction_established when they are.
Certificate certify_parity_remark(std::int64_t ind_a, std::int64_t ind_b);

}  // namespace loopspace

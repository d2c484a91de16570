#include "loopspace/spaceform.hpp"

#include <stdexcept>

namespace loopspace {

SpaceFormSpec::SpaceFormSpec(int n, int centralizer_order, int element_order)
    : n_(n), r_(centralizer_order), order_(element_order) {
  if (n < 2) throw std::invalid_argument("space form dimension n must be >= 2");
  if (element_order < 2) throw std::invalid_argument("h must be nontrivial: element order must be >= 2");
  if (centralizer_order < 1 || centralizer_order % element_order != 0)
    throw std::invalid_argument("element order " + std::to_string(element_order) +
                                " must divide the centralizer order " + std::to_string(centralizer_order));
  // Z_2 is the only nontrivial group acting freely on an even sphere.
  if (n % 2 == 0 && (centralizer_order != 2 || element_order != 2))
    throw std::invalid_argument("for even n only Gamma = Z_2 (r = 2, element order 2) is admissible");
}

ActionData::ActionData(std::vector<ActionEntry> entries) : entries_(std::move(entries)) {
  int last = 1;
  for (const auto& e : entries_) {
    if (e.degree < 2) throw std::invalid_argument("action degrees must be >= 2");
    if (e.degree <= last) throw std::invalid_argument("action degrees must be strictly increasing");
    if (e.dimension < 0) throw std::invalid_argument("negative homotopy dimension");
    const auto dim = static_cast<std::size_t>(e.dimension);
    if (e.f.rows() != dim || e.f.cols() != dim)
      throw std::invalid_argument("f_" + std::to_string(e.degree) + " must be a " + std::to_string(dim) + "x" +
                                  std::to_string(dim) + " matrix");
    last = e.degree;
  }
}

const ActionEntry* ActionData::find(int degree) const {
  for (const auto& e : entries_)
    if (e.degree == degree) return &e;
  return nullptr;
}

int sphere_rational_homotopy(int n, int i) {
  if (n < 2 || i < 2) throw std::invalid_argument("sphere_rational_homotopy needs n >= 2 and i >= 2");
  if (n % 2 == 0) return i == n || i == 2 * n - 1 ? 1 : 0;
  return i == n ? 1 : 0;
}

HomotopyTable loop_space_dims(const ActionData& action, int max_degree) {
  // For a square map, dim ker = dim coker = dim - rank.
  auto corank = [&action](int degree) -> int {
    const ActionEntry* e = action.find(degree);
    return e ? e->dimension - static_cast<int>(rank(e->f)) : 0;
  };
  HomotopyTable t;
  t.max_degree = max_degree;
  for (int i = 2; i <= max_degree; ++i) t.dims[i] = corank(i) + corank(i + 1);
  return t;
}

ActionData sphere_action(const SpaceFormSpec& spec) {
  auto scalar = [](int v) {
    Matrix m(1, 1);
    m(0, 0) = v;
    return m;
  };
  const int n = spec.n();
  if (spec.parity() == Parity::odd) return ActionData({{n, 1, scalar(0)}});
  return ActionData({{n, 1, scalar(-2)}, {2 * n - 1, 1, scalar(0)}});
}

HomotopyTable loop_component_homotopy(const SpaceFormSpec& spec, int max_degree) {
  HomotopyTable t = loop_space_dims(sphere_action(spec), max_degree);
  if (spec.n() == 2)
    t.pi1.order = classify_order4_extension(true).kind() == Order4Group::Kind::cyclic4 ? 4 : 0;
  else
    t.pi1.order = spec.centralizer_order();
  return t;
}

HomotopyTable so2_quotient_homotopy(const SpaceFormSpec& spec, int max_degree) {
  HomotopyTable t = loop_component_homotopy(spec, max_degree);
  if (max_degree >= 2) t.dims[2] += 1;
  if (spec.parity() == Parity::odd)
    t.pi1.order = spec.centralizer_order() / spec.element_order();
  else
    t.pi1.order = 1;
  return t;
}

int Order4Group::element_order(int a) const {
  int x = a;
  int k = 1;
  while (x != 0) {
    x = op(x, a);
    ++k;
  }
  return k;
}

bool Order4Group::has_element_of_order(int order) const {
  for (int a = 0; a < 4; ++a)
    if (element_order(a) == order) return true;
  return false;
}

Order4Group classify_order4_extension(bool kappa_equals_two_eta) {
  for (const auto kind : {Order4Group::Kind::cyclic4, Order4Group::Kind::klein4}) {
    const Order4Group g(kind);
    for (int kappa = 1; kappa < 4; ++kappa) {
      if (g.op(kappa, kappa) != 0) continue;
      for (int eta = 1; eta < 4; ++eta) {
        if (eta == kappa) continue;
        if ((g.op(eta, eta) == kappa) == kappa_equals_two_eta) return g;
      }
    }
  }
  throw std::logic_error("no group of order four realizes the extension");
}

DgaModel so2_quotient_model(const SpaceFormSpec& spec) {
  const int k = spec.k();
  const bool even = spec.parity() == Parity::even;
  const int mid = even ? 4 * k - 2 : 2 * k;
  const int top = mid + 1;
  const unsigned power = even ? static_cast<unsigned>(2 * k) : static_cast<unsigned>(k + 1);
  const std::string mid_name = mid == 2 ? "v2" : "u" + std::to_string(mid);
  const std::string top_name = "u" + std::to_string(top);
  return DgaModel("LM_SO2_n" + std::to_string(spec.n()), {{"u2", 2}, {mid_name, mid}, {top_name, top}},
                  {{top_name, {TermSpec{1, {{"u2", power}}}}}});
}

RingPresentation so2_quotient_ring(const SpaceFormSpec& spec) {
  const int k = spec.k();
  if (spec.parity() == Parity::even) return {2, 4 * k - 2, 2 * k};
  return {2, 2 * k, k + 1};
}

GysinReport gysin_check(const GysinInput& input) {
  const BettiTable& base = input.base;
  if (input.euler_action.size() != static_cast<std::size_t>(base.max_degree) + 1)
    throw std::invalid_argument("expected one Euler action matrix per base degree 0.." +
                                std::to_string(base.max_degree));
  std::vector<int> ranks;
  for (int p = 0; p <= base.max_degree; ++p) {
    const Matrix& e = input.euler_action[static_cast<std::size_t>(p)];
    const auto rows = static_cast<std::size_t>(base.dim(p + 2));
    const auto cols = static_cast<std::size_t>(base.dim(p));
    if (e.rows() != rows || e.cols() != cols)
      throw std::invalid_argument("Euler action at degree " + std::to_string(p) + " must be " + std::to_string(rows) +
                                  "x" + std::to_string(cols));
    ranks.push_back(static_cast<int>(rank(e)));
  }
  auto euler_rank = [&](int p) { return p < 0 || p > base.max_degree ? 0 : ranks[static_cast<std::size_t>(p)]; };

  GysinReport report;
  for (int p = 0; p <= input.total.max_degree; ++p) {
    const int coker = base.dim(p) - euler_rank(p - 2);
    const int ker = base.dim(p - 1) - euler_rank(p - 1);
    report.predicted.push_back(coker + ker);
    if (!report.failing_degree && coker + ker != input.total.dim(p)) {
      report.failing_degree = p;
      report.message = "degree " + std::to_string(p) + ": total space has " + std::to_string(input.total.dim(p)) +
                       ", Gysin sequence predicts " + std::to_string(coker) + " + " + std::to_string(ker);
    }
  }
  report.passed = !report.failing_degree;
  if (report.passed)
    report.message = "Gysin rank identity holds in degrees 0.." + std::to_string(input.total.max_degree);
  return report;
}

std::vector<Matrix> euler_multiplication(const CohomologyComputation& comp, const AlgebraElement& euler_cocycle) {
  if (euler_cocycle.homogeneous_degree().value_or(2) != 2) throw std::invalid_argument("Euler class must have degree 2");
  if (!comp.is_cocycle(euler_cocycle)) throw std::invalid_argument("Euler class representative is not a cocycle");
  std::vector<Matrix> out;
  for (int p = 0; p <= comp.max_degree(); ++p) {
    const auto& sources = comp.representatives(p);
    if (p + 2 > comp.max_degree()) {
      out.emplace_back(0, sources.size());
      continue;
    }
    Matrix m(comp.representatives(p + 2).size(), sources.size());
    for (std::size_t j = 0; j < sources.size(); ++j) {
      const auto coords = comp.class_coordinates(multiply(euler_cocycle, sources[j]), p + 2);
      for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

DgaModel circle_bundle_model(const DgaModel& base, const PolySpec& euler_class, const std::string& fibre_name) {
  std::vector<Generator> gens = base.algebra().declared();
  gens.push_back({fibre_name, 1});
  std::vector<DifferentialSpec> diffs = base.declared_differentials();
  diffs.push_back({fibre_name, euler_class});
  return DgaModel(base.name() + "_circle", std::move(gens), std::move(diffs));
}

}  // namespace loopspace

#include "loopspace/cohomology.hpp"

#include <algorithm>

namespace loopspace {

BettiTable BettiTable::from_dims(std::vector<int> dims) {
  if (dims.empty()) throw std::invalid_argument("Betti table needs at least degree 0");
  if (std::any_of(dims.begin(), dims.end(), [](int d) { return d < 0; }))
    throw std::invalid_argument("Betti numbers must be non-negative");
  BettiTable t;
  t.max_degree = static_cast<int>(dims.size()) - 1;
  t.dims = std::move(dims);
  return t;
}

CohomologyComputation::CohomologyComputation(DgaModel model, int max_degree, std::size_t max_basis)
    : model_(std::move(model)), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  const ModelReport report = check_model(model_);
  if (!report.is_complex())
    throw std::invalid_argument("model '" + model_.name() + "' is not a cochain complex: " + report.failures.front());

  const GradedAlgebra& alg = model_.algebra();
  degrees_.resize(static_cast<std::size_t>(max_degree) + 2);
  for (int d = 0; d <= max_degree + 1; ++d) {
    Degree& deg = degrees_[static_cast<std::size_t>(d)];
    deg.basis = alg.basis(d, max_basis);
    for (std::size_t i = 0; i < deg.basis.size(); ++i) deg.index.emplace(deg.basis[i], i);
  }

  for (int d = 0; d <= max_degree; ++d) {
    Degree& src = degrees_[static_cast<std::size_t>(d)];
    Degree& dst = degrees_[static_cast<std::size_t>(d) + 1];
    src.differential = Matrix(dst.basis.size(), src.basis.size());
    for (std::size_t j = 0; j < src.basis.size(); ++j) {
      const AlgebraElement image = apply_differential(alg.monomial(src.basis[j]), model_);
      for (const auto& [m, c] : image.terms()) src.differential(dst.index.at(m), j) = c;
    }
    src.rank = rank(src.differential);
    if (d + 1 <= max_degree) {
      for (std::size_t j = 0; j < src.basis.size(); ++j) {
        auto col = src.differential.column(j);
        if (std::any_of(col.begin(), col.end(), [](const Rational& q) { return sgn(q) != 0; }))
          dst.coboundary_span.push_back(std::move(col));
      }
    }
  }

  for (int d = 0; d <= max_degree; ++d) {
    Degree& deg = degrees_[static_cast<std::size_t>(d)];
    RowSpace span(deg.basis.size());
    for (const auto& v : deg.coboundary_span) span.insert(v);
    for (const auto& z : kernel_basis(deg.differential)) {
      if (!span.insert(z)) continue;
      AlgebraElement rep = alg.zero();
      for (std::size_t i = 0; i < z.size(); ++i) rep.add_term(deg.basis[i], z[i]);
      deg.representatives.push_back(std::move(rep));
    }
  }
}

const CohomologyComputation::Degree& CohomologyComputation::at(int degree) const {
  if (degree < 0 || degree > max_degree_)
    throw std::out_of_range("degree " + std::to_string(degree) + " outside computed range 0.." +
                            std::to_string(max_degree_));
  return degrees_[static_cast<std::size_t>(degree)];
}

const std::vector<Monomial>& CohomologyComputation::basis(int degree) const { return at(degree).basis; }

std::size_t CohomologyComputation::differential_rank(int degree) const { return at(degree).rank; }

int CohomologyComputation::betti(int degree) const {
  const std::size_t incoming = degree == 0 ? 0 : differential_rank(degree - 1);
  return static_cast<int>(kernel_dim(degree) - incoming);
}

const std::vector<AlgebraElement>& CohomologyComputation::representatives(int degree) const {
  return at(degree).representatives;
}

std::vector<Rational> CohomologyComputation::coordinates(const AlgebraElement& x, int degree) const {
  const Degree& deg = at(degree);
  std::vector<Rational> v(deg.basis.size());
  for (const auto& [m, c] : x.terms()) {
    const auto it = deg.index.find(m);
    if (it == deg.index.end()) throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(degree));
    v[it->second] = c;
  }
  return v;
}

bool CohomologyComputation::is_cocycle(const AlgebraElement& x) const {
  return apply_differential(x, model_).is_zero();
}

bool CohomologyComputation::is_coboundary(const AlgebraElement& x, int degree) const {
  const Degree& deg = at(degree);
  RowSpace span(deg.basis.size());
  for (const auto& v : deg.coboundary_span) span.insert(v);
  return span.contains(coordinates(x, degree));
}

std::vector<Rational> CohomologyComputation::class_coordinates(const AlgebraElement& cocycle, int degree) const {
  if (!is_cocycle(cocycle)) throw std::invalid_argument("class_coordinates: " + cocycle.to_string() + " is not a cocycle");
  const Degree& deg = at(degree);
  const std::size_t nb = deg.coboundary_span.size();
  const std::size_t nr = deg.representatives.size();
  Matrix m(deg.basis.size(), nb + nr);
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t i = 0; i < deg.basis.size(); ++i) m(i, j) = deg.coboundary_span[j][i];
  for (std::size_t j = 0; j < nr; ++j) {
    const auto v = coordinates(deg.representatives[j], degree);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, nb + j) = v[i];
  }
  const auto x = solve(m, coordinates(cocycle, degree));
  if (!x) throw std::logic_error("cocycle not in span of coboundaries and representatives");
  return {x->begin() + static_cast<std::ptrdiff_t>(nb), x->end()};
}

bool CohomologyComputation::classes_independent(const std::vector<AlgebraElement>& cocycles, int degree) const {
  const Degree& deg = at(degree);
  RowSpace span(deg.basis.size());
  for (const auto& v : deg.coboundary_span) span.insert(v);
  for (const auto& c : cocycles)
    if (!span.insert(coordinates(c, degree))) return false;
  return true;
}

BettiTable CohomologyComputation::table(bool with_representatives) const {
  BettiTable t;
  t.max_degree = max_degree_;
  for (int d = 0; d <= max_degree_; ++d) t.dims.push_back(betti(d));
  if (with_representatives) {
    t.representatives.emplace();
    for (int d = 0; d <= max_degree_; ++d) t.representatives->push_back(representatives(d));
  }
  return t;
}

BettiTable cohomology(const DgaModel& model, int max_degree) {
  return CohomologyComputation(model, max_degree).table();
}

std::vector<int> presented_ring_dims(const RingPresentation& p, int max_degree) {
  std::vector<int> dims(static_cast<std::size_t>(std::max(max_degree, -1) + 1), 0);
  for (int i = 0; i < p.nilpotency; ++i) {
    const int base = i * p.deg_w;
    if (base > max_degree) break;
    for (int d = base; d <= max_degree; d += p.deg_z) ++dims[static_cast<std::size_t>(d)];
  }
  return dims;
}

RingReport verify_ring_presentation(const DgaModel& model, const RingPresentation& p, int max_degree) {
  if (p.deg_w <= 0 || p.deg_z <= 0 || p.deg_w % 2 != 0 || p.deg_z % 2 != 0)
    throw std::invalid_argument("presentation generators must have positive even degrees");
  if (p.nilpotency < 1) throw std::invalid_argument("nilpotency must be >= 1");

  const CohomologyComputation comp(model, max_degree);
  RingReport report;
  report.expected_dims = presented_ring_dims(p, max_degree);
  for (int d = 0; d <= max_degree; ++d) report.actual_dims.push_back(comp.betti(d));

  for (int d = 0; d <= max_degree; ++d) {
    if (report.expected_dims[static_cast<std::size_t>(d)] != report.actual_dims[static_cast<std::size_t>(d)]) {
      report.failing_degree = d;
      report.message = "dimension mismatch at degree " + std::to_string(d) + ": cohomology has " +
                       std::to_string(report.actual_dims[static_cast<std::size_t>(d)]) + ", presentation has " +
                       std::to_string(report.expected_dims[static_cast<std::size_t>(d)]);
      return report;
    }
  }

  const int top = p.nilpotency * p.deg_w;
  if (top > max_degree || p.deg_z > max_degree) {
    report.message = "max_degree " + std::to_string(max_degree) + " is too small to exhibit w^" +
                     std::to_string(p.nilpotency) + " and z";
    return report;
  }

  std::vector<AlgebraElement> w_candidates;
  for (const auto& w : comp.representatives(p.deg_w)) {
    if (!comp.is_coboundary(power(w, static_cast<unsigned>(p.nilpotency)), top)) continue;
    const int below = (p.nilpotency - 1) * p.deg_w;
    if (comp.is_coboundary(power(w, static_cast<unsigned>(p.nilpotency - 1)), below)) continue;
    w_candidates.push_back(w);
  }
  if (w_candidates.empty()) {
    report.failing_degree = top;
    report.message = "no representative class w in degree " + std::to_string(p.deg_w) + " with w^" +
                     std::to_string(p.nilpotency) + " = 0 and w^" + std::to_string(p.nilpotency - 1) + " != 0";
    return report;
  }

  std::optional<int> worst;
  for (const auto& w : w_candidates) {
    for (const auto& z : comp.representatives(p.deg_z)) {
      std::optional<int> failed;
      for (int d = 0; d <= max_degree && !failed; ++d) {
        std::vector<AlgebraElement> products;
        for (int i = 0; i < p.nilpotency && i * p.deg_w <= d; ++i) {
          const int rest = d - i * p.deg_w;
          if (rest % p.deg_z != 0) continue;
          products.push_back(power(w, static_cast<unsigned>(i)) * power(z, static_cast<unsigned>(rest / p.deg_z)));
        }
        if (!comp.classes_independent(products, d)) failed = d;
      }
      if (!failed) {
        report.passed = true;
        report.w = w;
        report.z = z;
        report.message = "cohomology is Q[w,z]/(w^" + std::to_string(p.nilpotency) + ") up to degree " +
                         std::to_string(max_degree);
        return report;
      }
      if (!worst || *failed < *worst) worst = failed;
    }
  }
  report.failing_degree = worst;
  report.message = "no class z in degree " + std::to_string(p.deg_z) +
                   " makes the products w^i z^j independent in cohomology";
  return report;
}

}  // namespace loopspace

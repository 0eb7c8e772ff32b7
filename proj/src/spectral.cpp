#include "istforge/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "istforge/errors.hpp"

namespace istforge {

namespace {

void fill_degree(const Graph& g, SpectralProfile& p) {
  p.n = g.n();
  p.d = g.n() == 0 ? 0.0 : 2.0 * static_cast<double>(g.m()) / static_cast<double>(g.n());
  if (!is_regular(g)) p.warnings.push_back("graph is not regular; d is the average degree");
}

void finish(SpectralProfile& p) {
  p.ratio = p.lambda > 0 ? p.d / p.lambda : std::numeric_limits<double>::infinity();
}

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (Vertex v = 0; v < g.n(); ++v) {
    double s = 0;
    for (Vertex u : g.neighbors(v)) s += x[u];
    y[v] = s;
  }
}

void project_out(std::vector<double>& x, const std::vector<double>& unit) {
  const double c = std::inner_product(x.begin(), x.end(), unit.begin(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * unit[i];
}

double norm(const std::vector<double>& x) { return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0)); }

std::vector<Vertex> random_subset(std::size_t n, std::size_t size, Rng& rng) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (std::size_t i = 0; i < size; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(all[i], all[j]);
  }
  all.resize(size);
  return all;
}

}  // namespace

SpectralProfile spectral_profile(const Graph& g) {
  if (g.n() == 0) throw ParameterError("spectrum of an empty graph");
  if (g.n() > kDenseEigenLimit) return spectral_profile_iterative(g);
  SpectralProfile p;
  fill_degree(g, p);
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  p.lambda = n < 2 ? 0.0 : std::max(ev(n - 2), std::abs(ev(0)));
  finish(p);
  return p;
}

SpectralProfile spectral_profile_iterative(const Graph& g, std::size_t max_iterations) {
  if (g.n() == 0) throw ParameterError("spectrum of an empty graph");
  SpectralProfile p;
  p.exact = false;
  fill_degree(g, p);
  const std::size_t n = g.n();
  if (n < 2) return p;

  std::vector<double> principal(n);
  if (is_regular(g)) {
    std::fill(principal.begin(), principal.end(), 1.0);
  } else {
    for (Vertex v = 0; v < n; ++v) principal[v] = static_cast<double>(g.degree(v));
    p.warnings.push_back("deflating the degree vector; lambda is approximate");
  }
  const double pn = norm(principal);
  if (pn > 0) {
    for (double& x : principal) x /= pn;
  }

  Rng rng(0x5eed);
  std::vector<double> x(n), y(n);
  for (double& v : x) v = rng.uniform() - 0.5;
  project_out(x, principal);
  double nx = norm(x);
  for (double& v : x) v /= nx;

  double estimate = 0;
  std::size_t it = 0;
  for (; it < max_iterations; ++it) {
    multiply(g, x, y);
    project_out(y, principal);
    const double ny = norm(y);
    if (ny == 0) {
      estimate = 0;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
    // Two steps per estimate so oscillation between +lambda and -lambda cancels.
    multiply(g, x, y);
    project_out(y, principal);
    const double ny2 = norm(y);
    if (ny2 == 0) {
      estimate = 0;
      break;
    }
    const double next = std::sqrt(ny * ny2);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny2;
    if (it > 0 && std::abs(next - estimate) <= 1e-6 * next) {
      estimate = next;
      break;
    }
    estimate = next;
  }
  if (it == max_iterations) p.warnings.push_back("power iteration hit the iteration cap");
  p.lambda = estimate;
  finish(p);
  return p;
}

std::size_t edges_between(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<char> in_b(g.n(), 0);
  for (Vertex v : b) in_b[v] = 1;
  std::size_t e = 0;
  for (Vertex v : a) {
    for (Vertex u : g.neighbors(v)) e += in_b[u];
  }
  return e;
}

AuditReport mixing_audit(const Graph& g, double lambda, std::size_t trials, Rng& rng) {
  if (!is_regular(g)) throw ParameterError("mixing audit needs a regular graph");
  AuditReport rep;
  const std::size_t n = g.n();
  if (n == 0) return rep;
  const double d = static_cast<double>(g.degree(0));
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_subset(n, 1 + static_cast<std::size_t>(rng.below(n)), rng);
    const auto b = random_subset(n, 1 + static_cast<std::size_t>(rng.below(n)), rng);
    const double sa = static_cast<double>(a.size());
    const double sb = static_cast<double>(b.size());
    const double dev = std::abs(static_cast<double>(edges_between(g, a, b)) - sa * sb * d / static_cast<double>(n));
    const double bound = lambda * std::sqrt(sa * sb);
    ++rep.trials;
    if (dev > bound + 1e-9 * (1.0 + bound)) ++rep.violations;
    if (bound > 0) rep.max_ratio = std::max(rep.max_ratio, dev / bound);
  }
  return rep;
}

AuditReport joined_audit(const Graph& g, double lambda, std::size_t trials, Rng& rng) {
  AuditReport rep;
  const std::size_t n = g.n();
  if (n == 0) return rep;
  const double d = 2.0 * static_cast<double>(g.m()) / static_cast<double>(n);
  const auto size = static_cast<std::size_t>(std::floor(lambda * static_cast<double>(n) / d)) + 1;
  if (2 * size > n) throw ParameterError("sets of size lambda n / d do not fit twice into the graph");
  for (std::size_t t = 0; t < trials; ++t) {
    auto both = random_subset(n, 2 * size, rng);
    std::vector<Vertex> x(both.begin(), both.begin() + static_cast<std::ptrdiff_t>(size));
    std::vector<Vertex> y(both.begin() + static_cast<std::ptrdiff_t>(size), both.end());
    ++rep.trials;
    if (edges_between(g, x, y) == 0) ++rep.violations;
  }
  return rep;
}

}  // namespace istforge

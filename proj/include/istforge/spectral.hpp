#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "istforge/graph.hpp"
#include "istforge/rng.hpp"

namespace istforge {

inline constexpr std::size_t kDenseEigenLimit = 4000;

struct SpectralProfile {
  std::size_t n = 0;
  double d = 0;       // exact degree when regular, average degree otherwise
  double lambda = 0;  // max(lambda_2, |lambda_n|)
  double ratio = 0;   // d / lambda, infinite when lambda is zero
  bool exact = true;  // full eigensolve rather than power iteration
  std::vector<std::string> warnings;
};

/// Full symmetric eigensolve for n <= kDenseEigenLimit; above that, power
/// iteration on A^2 orthogonal to the principal direction (the all-ones vector
/// for regular graphs, the degree vector otherwise, with a warning), stopped at
/// relative change 1e-6. Throws ParameterError for an empty graph.
SpectralProfile spectral_profile(const Graph& g);

/// Always uses power iteration; exposed so tests can compare it with the exact path.
SpectralProfile spectral_profile_iterative(const Graph& g, std::size_t max_iterations = 20000);

struct AuditReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  double max_ratio = 0;  // max over trials of |e(A,B) - |A||B|d/n| / (lambda sqrt(|A||B|))
};

/// e(A, B): ordered pairs (a, b) with a in A, b in B and ab an edge. Edges
/// inside the overlap count twice.
std::size_t edges_between(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b);

/// Samples `trials` pairs of independent uniform random subsets (sizes uniform
/// in [1, n], so they usually overlap) and tests the mixing inequality
/// |e(A,B) - |A||B|d/n| <= lambda sqrt(|A||B|). The graph must be regular.
AuditReport mixing_audit(const Graph& g, double lambda, std::size_t trials, Rng& rng);

/// Samples `trials` disjoint pairs X, Y of size floor(lambda n / d) + 1 and
/// counts pairs with no edge between them; a violation means the graph is not
/// (lambda n / d)-joined.
AuditReport joined_audit(const Graph& g, double lambda, std::size_t trials, Rng& rng);

}  // namespace istforge

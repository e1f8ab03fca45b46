#pragma once

// Floating-point search for secant relations. Results are evidence only;
// exactify() turns a good candidate into a verified exact relation when the
// roots are recognisably rational or quadratic.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "strata/relations/relation.hpp"

namespace strata {

using Complex = std::complex<double>;

struct Candidate {
  Partition mu;
  int length = 0;
  /// roots[i][j] is the root of term i carrying multiplicity mu[j].
  std::vector<std::vector<Complex>> roots;
  std::vector<Complex> coeffs;  // unit 2-norm, on the normalised terms
  double residual = 0;          // max-norm of sum coeffs[i] * f_i / |f_i|
  double residual_l2 = 0;       // 2-norm of the same vector
  double sigma_next = 0;        // second smallest singular value of the terms
  double relative_residual = 0; // residual / min(sigma_next, min |coeffs[i]|)
  double separation = 0;        // smallest root or term distance, see below
  std::uint64_t seed = 0;
  std::uint64_t restart = 0;
  int iterations = 0;
};

struct SearchOptions {
  std::uint64_t restarts = 2000;
  std::uint64_t seed = 1;
  double accept_tol = 1e-10;
  double separation = 1e-4;
  int max_iterations = 150;
  double time_limit_seconds = 0;  // 0: no limit
};

/// A candidate is admissible when its separation is at least
/// options.separation, and accepted when both its residual and its relative
/// residual are below accept_tol. The relative residual rules out terms that
/// nearly coincide: three nearby points are always nearly dependent.
struct SearchResult {
  std::optional<Candidate> found;  // first accepted candidate
  std::optional<Candidate> best;   // lowest relative residual among admissible candidates
  std::uint64_t restarts_run = 0;
  double seconds = 0;
};

/// Random restarts of a damped Gauss-Newton iteration on the roots, with
/// the coefficients re-solved at every step as the smallest right singular
/// vector of the normalised term matrix. Restart k is seeded from (seed, k),
/// so results depend only on the options.
SearchResult search_relation(const Partition& mu, int length, const SearchOptions& options = {});

/// Residual, singular values and separation recomputed for given roots and
/// coefficients (coefficients are taken as given, not re-solved).
Candidate evaluate_candidate(const Partition& mu, const std::vector<std::vector<Complex>>& roots,
                             const std::vector<Complex>& coeffs);

/// Smallest chordal distance between two roots of one term, or between the
/// root multisets of two terms. Candidate::separation also takes the minimum
/// with the sine distance between the normalised terms.
double candidate_separation(const Partition& mu, const std::vector<std::vector<Complex>>& roots);

/// Tries Moebius frames sending shared roots to infinity, 0 and +-1, snaps
/// every root to a rational or to a common quadratic field, re-solves the
/// coefficients exactly and returns the relation if it verifies.
std::optional<SecantRelation> exactify(const Candidate& candidate);

/// Complex value of an element of Q or of Q[z]/(z^2 - D), taking z = sqrt(D)
/// (i sqrt(-D) for D < 0).
Complex to_complex(const FieldElement& x);

}  // namespace strata

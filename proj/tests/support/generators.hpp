#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ldq/algebra.hpp"
#include "ldq/reachability.hpp"
#include "ldq/term.hpp"
#include "ldq/web.hpp"

namespace ldq::testing {

using Rng = std::mt19937_64;

inline std::uint64_t pick(Rng& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Small shared pools keep the candidate spaces of oracle runs tractable and
// make random patterns actually match random data.
std::vector<Term> uri_pool();
std::vector<Term> literal_pool();
std::vector<Variable> variable_pool();

Term random_uri(Rng& rng);
Term random_object_term(Rng& rng);  // URI or literal
Triple random_triple(Rng& rng);
TripleSet random_graph(Rng& rng, std::size_t max_triples);

TriplePattern random_pattern(Rng& rng);
FilterPtr random_filter(Rng& rng, int depth);
ExprPtr random_expression(Rng& rng, int depth);

// A valid random web: every document dereferencable, some pool URIs broken,
// data drawn from the URI/literal pools so queries and criteria bite.
FiniteWeb random_finite_web(Rng& rng, std::size_t max_docs);

// Nonempty seed set drawn from the web's URI pool (may include broken URIs).
UriSet random_seeds(Rng& rng, std::size_t max_seeds);

}  // namespace ldq::testing

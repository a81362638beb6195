#pragma once

#include <string>

#include "ldq/algebra.hpp"
#include "ldq/term.hpp"

namespace ldq {

// Deterministic text serializations used for golden files and CLI output.
// Equal inputs produce byte-identical text across runs and processes.

// "⟨ <s> , <p> , <o> ⟩"
std::string enc_triple(const Triple& t);

// "⟨⟨ ⟨..⟩ , ⟨..⟩ ⟩⟩" with members in triple order; "⟨⟨ ⟩⟩" when empty.
std::string enc_triple_set(const TripleSet& G);

// "⟨⟨ ?a → <x> , ?b → "y" ⟩⟩" with variables in lexicographic order.
std::string enc_valuation(const Valuation& mu);

// One enc_valuation per line, lines sorted lexicographically; empty text for
// the empty set.
std::string enc_solution_set(const SolutionSet& omega);

}  // namespace ldq

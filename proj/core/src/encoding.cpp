#include "ldq/encoding.hpp"

#include <algorithm>
#include <vector>

namespace ldq {

namespace {

constexpr const char* kOpen = "⟨";        // ⟨
constexpr const char* kClose = "⟩";       // ⟩
constexpr const char* kOpenSet = "⟨⟨";   // ⟨⟨
constexpr const char* kCloseSet = "⟩⟩";  // ⟩⟩
constexpr const char* kArrow = "→";       // →

}  // namespace

std::string enc_triple(const Triple& t) {
  return std::string(kOpen) + " " + print_term(t.subject()) + " , " +
         print_term(t.predicate()) + " , " + print_term(t.object()) + " " + kClose;
}

std::string enc_triple_set(const TripleSet& G) {
  std::string out = kOpenSet;
  out += " ";
  bool first = true;
  for (const Triple& t : G) {
    if (!first) out += " , ";
    out += enc_triple(t);
    first = false;
  }
  if (!first) out += " ";
  out += kCloseSet;
  return out;
}

std::string enc_valuation(const Valuation& mu) {
  std::string out = kOpenSet;
  out += " ";
  bool first = true;
  for (const auto& [v, t] : mu) {
    if (!first) out += " , ";
    out += "?" + v.name + " " + kArrow + " " + print_term(t);
    first = false;
  }
  if (!first) out += " ";
  out += kCloseSet;
  return out;
}

std::string enc_solution_set(const SolutionSet& omega) {
  std::vector<std::string> lines;
  lines.reserve(omega.size());
  for (const Valuation& mu : omega) lines.push_back(enc_valuation(mu));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace ldq

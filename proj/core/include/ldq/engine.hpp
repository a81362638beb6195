#pragma once

#include <cstdint>
#include <deque>
#include <optional>

#include "ldq/algebra.hpp"
#include "ldq/reachability.hpp"
#include "ldq/web.hpp"

namespace ldq {

enum class ExecStatus { Complete, BudgetExhausted };

struct ExecutionReport {
  SolutionSet solutions;
  ExecStatus status = ExecStatus::Complete;
  std::uint64_t lookups_spent = 0;
  std::uint64_t iterations = 0;
  std::uint64_t part_size = 0;  // documents contributing data
};

// Evaluates P over all data of the web. Materializable webs are evaluated
// exactly (the budget is ignored, status Complete). A non-materializable web
// requires a finite budget (else BudgetRequired): its URI namespace is
// enumerated in canonical order, up to max_lookups dereferences, and the
// evaluation over the retrieved fraction is reported as BudgetExhausted.
ExecutionReport exec_full_web(const WebOfLinkedData& web, const SparqlExpression& P,
                              Budget budget);

// Expands the reachable part, then evaluates P over its data once. Status
// mirrors the completeness of the expansion. An unlimited budget is legal
// and may legitimately terminate even on infinite webs, but need not.
ExecutionReport exec_reach_terminating(const WebOfLinkedData& web, const UriSet& seeds,
                                       const ReachabilityCriterion& criterion,
                                       const SparqlExpression& P, Budget budget);

// Pull-based incremental execution: iteration j evaluates P over the triples
// retrieved so far, emits the valuations not seen before, then performs at
// most one admissible lookup. Single-consumer; the web must outlive the
// stream.
class SolutionStream {
 public:
  struct Item {
    std::uint64_t iteration;
    Valuation valuation;
  };

  SolutionStream(const WebOfLinkedData& web, const UriSet& seeds,
                 const ReachabilityCriterion& criterion, ExprPtr query, Budget budget);

  // Next emission; nullopt once the stream has terminated.
  std::optional<Item> next();

  // Final statistics; meaningful once next() has returned nullopt.
  const ExecutionReport& report() const { return report_; }
  bool finished() const { return done_ && buffer_.empty(); }

 private:
  void advance();

  LinkTraversal traversal_;
  ExprPtr query_;
  Budget budget_;
  std::uint64_t iteration_ = 0;
  std::deque<Item> buffer_;
  SolutionSet emitted_;
  bool done_ = false;
  ExecutionReport report_;
};

SolutionStream exec_reach_streaming(const WebOfLinkedData& web, const UriSet& seeds,
                                    const ReachabilityCriterion& criterion, ExprPtr query,
                                    Budget budget);

// True iff some solution binds at least one variable.
bool nontrivial_witness(const SolutionSet& solutions);

}  // namespace ldq

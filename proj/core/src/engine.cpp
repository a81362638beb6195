#include "ldq/engine.hpp"

namespace ldq {

ExecutionReport exec_full_web(const WebOfLinkedData& web, const SparqlExpression& P,
                              Budget budget) {
  ExecutionReport report;
  if (web.materializable()) {
    report.solutions = eval(P, all_data(web));
    report.status = ExecStatus::Complete;
    report.lookups_spent = 0;
    report.iterations = 1;
    report.part_size = document_count(web);
    return report;
  }

  if (budget.is_unlimited()) {
    throw Error(Errc::BudgetRequired,
                "full-web evaluation over an infinite web needs a finite budget");
  }

  TripleSet accumulated;
  std::set<DocumentId> seen;
  std::uint64_t spent = 0;
  bool namespace_ended = false;
  for (std::uint64_t i = 0; !budget.exhausted(spent); ++i) {
    std::optional<Term> uri = web.namespace_uri(i);
    if (!uri) {
      namespace_ended = true;
      break;
    }
    ++spent;
    std::optional<DocumentId> doc = web.dereference(*uri);
    if (!doc || !seen.insert(*doc).second) continue;
    TripleSet data = web.data(*doc);
    accumulated.insert(data.begin(), data.end());
  }

  report.solutions = eval(P, accumulated);
  report.status = namespace_ended ? ExecStatus::Complete : ExecStatus::BudgetExhausted;
  report.lookups_spent = spent;
  report.iterations = 1;
  report.part_size = seen.size();
  return report;
}

ExecutionReport exec_reach_terminating(const WebOfLinkedData& web, const UriSet& seeds,
                                       const ReachabilityCriterion& criterion,
                                       const SparqlExpression& P, Budget budget) {
  ReachablePart part = compute_reachable_part(web, seeds, criterion, P, budget);
  ExecutionReport report;
  report.solutions = eval(P, part.triples);
  report.status = part.complete ? ExecStatus::Complete : ExecStatus::BudgetExhausted;
  report.lookups_spent = part.lookups_spent;
  report.iterations = part.lookups_spent;
  report.part_size = part.documents.size();
  return report;
}

SolutionStream::SolutionStream(const WebOfLinkedData& web, const UriSet& seeds,
                               const ReachabilityCriterion& criterion, ExprPtr query,
                               Budget budget)
    : traversal_(web, seeds, criterion, *query), query_(std::move(query)), budget_(budget) {}

std::optional<SolutionStream::Item> SolutionStream::next() {
  while (buffer_.empty() && !done_) advance();
  if (buffer_.empty()) return std::nullopt;
  Item item = std::move(buffer_.front());
  buffer_.pop_front();
  return item;
}

// One iteration: evaluate over the current triples, queue the new solutions,
// then either halt or spend one lookup.
void SolutionStream::advance() {
  ++iteration_;
  SolutionSet current = eval(*query_, traversal_.triples());
  for (const Valuation& mu : current) {
    if (emitted_.insert(mu).second) buffer_.push_back({iteration_, mu});
  }
  if (!traversal_.pending()) {
    done_ = true;
    report_.status = ExecStatus::Complete;
  } else if (budget_.exhausted(traversal_.lookups_spent())) {
    done_ = true;
    report_.status = ExecStatus::BudgetExhausted;
  } else {
    traversal_.step();
    return;
  }
  report_.solutions = emitted_;
  report_.lookups_spent = traversal_.lookups_spent();
  report_.iterations = iteration_;
  report_.part_size = traversal_.documents().size();
}

SolutionStream exec_reach_streaming(const WebOfLinkedData& web, const UriSet& seeds,
                                    const ReachabilityCriterion& criterion, ExprPtr query,
                                    Budget budget) {
  return SolutionStream(web, seeds, criterion, std::move(query), budget);
}

bool nontrivial_witness(const SolutionSet& solutions) {
  for (const Valuation& mu : solutions) {
    if (!mu.empty()) return true;
  }
  return false;
}

}  // namespace ldq

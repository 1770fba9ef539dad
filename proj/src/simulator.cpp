#include "lamvm/simulator.hpp"

#include <algorithm>
#include <bit>

namespace lamvm {

uint64_t poly_p(uint64_t k) { return (k + 1) * (3 * k + 4); }

namespace {

uint64_t ceil_log2(uint64_t v) {
    return v <= 1 ? 0 : std::bit_width(v - 1);
}

TermPtr normal_form_of(const Program &body) {
    // the machine result represents an abstraction: Lam body Ret
    std::vector<Command> cmds;
    cmds.reserve(body.length() + 2);
    cmds.push_back(Command::lam());
    cmds.insert(cmds.end(), body.begin(), body.end());
    cmds.push_back(Command::ret());
    auto term = decompile(Program(std::move(cmds)));
    return term ? *term : nullptr;
}

}  // namespace

CombinedReport run_combined(const TermPtr &s, uint64_t k_cap) {
    if (!closed(s)) throw NotClosedError("run_combined: term is not closed");
    CombinedReport report;
    uint64_t term_size = s->size();
    for (uint64_t k = 0; k <= k_cap; ++k) {
        uint64_t m = term_size * poly_p(k);
        report.final_k = k;
        report.final_m = m;
        SubstOutcome subst = run_subst(s, k, m);
        report.total_machine_steps += subst.steps_taken;
        report.peak_subst_size =
            std::max(report.peak_subst_size, subst.peak_state_size);
        if (subst.status == SubstStatus::Normal) {
            report.iterations.push_back({k, m, IterationPath::SubstNormal});
            report.normal_form = normal_form_of(*subst.result);
            break;
        }
        if (subst.status == SubstStatus::SpaceBoundNotReached) {
            report.iterations.push_back({k, m, IterationPath::SubstStepOut});
            continue;
        }
        // space bound reached: the heap machine now runs within that bound
        HeapOutcome heap = run_heap(s, k);
        report.total_machine_steps += heap.steps_taken;
        report.peak_heap_size =
            std::max(report.peak_heap_size, heap.peak_state_size);
        if (heap.success) {
            report.iterations.push_back({k, m, IterationPath::HeapSucceeded});
            if (auto unfolded = unfold_closure(heap.heap, heap.result)) {
                if (auto term = decompile(*unfolded)) report.normal_form = *term;
            }
            break;
        }
        report.iterations.push_back({k, m, IterationPath::HeapTried});
    }
    report.modeled_space =
        std::max(report.peak_subst_size, report.peak_heap_size) +
        ceil_log2(report.final_k + 2) + ceil_log2(report.final_m + 2);
    return report;
}

double space_meter(const CombinedReport &report, const EvalReport &reference) {
    return double(report.modeled_space) / double(reference.space);
}

}  // namespace lamvm

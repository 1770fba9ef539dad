#pragma once

#include <cstdint>
#include <vector>

#include "lamvm/heap_machine.hpp"
#include "lamvm/subst_machine.hpp"
#include "lamvm/term.hpp"

// Space-aware interleaving of the two machines: for growing step budget k the
// substitution machine runs under space budget |s| * p(k); when it aborts on
// space the heap machine is tried with the same step budget, which is then
// guaranteed to stay within the aborted space budget.

namespace lamvm {

// p(k) = (k+1)(3k+4), dominating the heap machine's state size growth:
// after at most k steps that size is bounded by (k+1)(3k+4|s|) <= |s| * p(k)
uint64_t poly_p(uint64_t k);

enum class IterationPath { SubstNormal, SubstStepOut, HeapTried, HeapSucceeded };

struct CombinedIteration {
    uint64_t k = 0;
    uint64_t m = 0;
    IterationPath path = IterationPath::SubstStepOut;
};

struct CombinedReport {
    TermPtr normal_form;  // null when the budget was exhausted
    std::vector<CombinedIteration> iterations;
    uint64_t final_k = 0;
    uint64_t final_m = 0;
    uint64_t total_machine_steps = 0;  // across all iterations, both machines
    uint64_t peak_subst_size = 0;
    uint64_t peak_heap_size = 0;
    // max of the peaks actually reached plus the widths of the two binary
    // counters the algorithm maintains
    uint64_t modeled_space = 0;

    bool succeeded() const { return normal_form != nullptr; }
};

// Theorem-10 style driver; succeeds for every normalizing s once the step
// budget reaches 4*Time(s)+2. Throws NotClosedError on open input.
CombinedReport run_combined(const TermPtr &s, uint64_t k_cap);

// constant-factor space overhead realized on this input
double space_meter(const CombinedReport &report, const EvalReport &reference);

}  // namespace lamvm

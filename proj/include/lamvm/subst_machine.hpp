#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lamvm/program.hpp"
#include "lamvm/term.hpp"

// Substitution-based abstract machine: two stacks of programs, beta steps
// realized by program-level substitution, tail calls dropped so state size
// tracks term size.

namespace lamvm {

struct SubstState {
    // back() is the top of the stack
    std::vector<Program> tasks;
    std::vector<Program> values;
};

uint64_t state_size(const SubstState &state);

// initial state ([gamma s], []); throws NotClosedError
SubstState initial_subst(const TermPtr &s);

// one machine step; nullopt when no rule applies (terminal or stuck)
std::optional<SubstState> subst_step(const SubstState &state);

enum class SubstStatus { Normal, SpaceBoundReached, SpaceBoundNotReached };

struct SubstOutcome {
    SubstStatus status = SubstStatus::SpaceBoundNotReached;
    std::optional<Program> result;  // Normal only; represents the normal form
    uint64_t steps_taken = 0;
    uint64_t peak_state_size = 0;  // over fully formed states
};

// Runs at most step_budget steps from the initial state. Any state whose
// size would exceed space_budget -- including a partially built substitution
// result -- aborts the run with SpaceBoundReached (this outcome wins when the
// step budget runs out at the same moment). A terminal state ([], [P]) within
// budget yields Normal(P); otherwise SpaceBoundNotReached.
SubstOutcome run_subst(const TermPtr &s, uint64_t step_budget,
                       uint64_t space_budget);

// Stepping interface used by the runner, traces and tests.
class SubstMachine {
public:
    explicit SubstMachine(const TermPtr &s) : SubstMachine(initial_subst(s)) {}
    explicit SubstMachine(SubstState state);

    enum class Rule { Lambda, Application };

    // Fires one rule. nullopt when no rule applies, or when applying the rule
    // would push the state size beyond space_cap (space_exceeded reports
    // which of the two happened; the state is left unchanged in both cases).
    std::optional<Rule> step(uint64_t space_cap, bool &space_exceeded);
    std::optional<Rule> step();  // uncapped

    bool terminal() const;  // tasks empty, exactly one value
    std::optional<Program> result() const;
    const SubstState &state() const { return state_; }
    uint64_t size() const { return size_; }

private:
    SubstState state_;
    uint64_t size_ = 0;
};

}  // namespace lamvm

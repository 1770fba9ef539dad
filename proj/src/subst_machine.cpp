#include "lamvm/subst_machine.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamvm {

uint64_t state_size(const SubstState &state) {
    uint64_t total = 0;
    for (const Program &p : state.tasks) total += p.size();
    for (const Program &p : state.values) total += p.size();
    return total;
}

SubstState initial_subst(const TermPtr &s) {
    if (!closed(s)) throw NotClosedError("initial_subst: term is not closed");
    SubstState state;
    state.tasks.push_back(compile(s));
    return state;
}

SubstMachine::SubstMachine(SubstState state)
    : state_(std::move(state)), size_(state_size(state_)) {}

bool SubstMachine::terminal() const {
    return state_.tasks.empty() && state_.values.size() == 1;
}

std::optional<Program> SubstMachine::result() const {
    if (!terminal()) return std::nullopt;
    return state_.values.back();
}

std::optional<SubstMachine::Rule> SubstMachine::step(uint64_t space_cap,
                                                     bool &space_exceeded) {
    space_exceeded = false;
    if (state_.tasks.empty()) return std::nullopt;
    Program &top = state_.tasks.back();
    if (top.empty()) return std::nullopt;  // cannot occur under tailRec

    switch (top.front().op) {
        case Command::Op::Lam: {
            auto split = jump_target(top.drop_front());
            if (!split) return std::nullopt;
            auto &[body, rest] = *split;
            // Lam and the matching Ret leave the state: size shrinks by 2
            size_ -= 2;
            if (rest.empty()) {
                state_.tasks.pop_back();
            } else {
                top = rest;
            }
            state_.values.push_back(body);
            return Rule::Lambda;
        }
        case Command::Op::App: {
            if (state_.values.size() < 2) return std::nullopt;
            const Program &argument = state_.values[state_.values.size() - 1];
            const Program &callee = state_.values[state_.values.size() - 2];
            // successor minus the substitution output: App command and both
            // popped values are gone
            uint64_t base = size_ - 1 - argument.size() - callee.size();
            if (base > space_cap) {
                space_exceeded = true;
                return std::nullopt;
            }

            std::vector<Command> abs;
            abs.reserve(argument.length() + 2);
            abs.push_back(Command::lam());
            abs.insert(abs.end(), argument.begin(), argument.end());
            abs.push_back(Command::ret());
            Program abstraction(std::move(abs));

            auto new_task =
                subst_program_capped(callee, 0, abstraction, space_cap - base);
            if (!new_task) {
                space_exceeded = true;
                return std::nullopt;
            }
            size_ = base + new_task->size();
            Program rest = top.drop_front();
            if (rest.empty()) {
                state_.tasks.pop_back();
            } else {
                top = rest;
            }
            state_.values.pop_back();
            state_.values.pop_back();
            state_.tasks.push_back(std::move(*new_task));
            return Rule::Application;
        }
        default:
            return std::nullopt;  // Var/Ret on top: stuck
    }
}

std::optional<SubstMachine::Rule> SubstMachine::step() {
    bool ignored = false;
    return step(UINT64_MAX, ignored);
}

std::optional<SubstState> subst_step(const SubstState &state) {
    SubstMachine machine(state);
    if (!machine.step()) return std::nullopt;
    return machine.state();
}

SubstOutcome run_subst(const TermPtr &s, uint64_t step_budget,
                       uint64_t space_budget) {
    SubstMachine machine(s);
    SubstOutcome out;
    out.peak_state_size = machine.size();
    if (machine.size() > space_budget) {
        out.status = SubstStatus::SpaceBoundReached;
        return out;
    }
    while (true) {
        if (machine.terminal()) {
            out.status = SubstStatus::Normal;
            out.result = machine.result();
            return out;
        }
        if (out.steps_taken == step_budget) {
            out.status = SubstStatus::SpaceBoundNotReached;
            return out;
        }
        bool space_exceeded = false;
        auto rule = machine.step(space_budget, space_exceeded);
        if (!rule) {
            if (space_exceeded) {
                out.status = SubstStatus::SpaceBoundReached;
                return out;
            }
            throw std::logic_error("run_subst: stuck state on closed input");
        }
        out.steps_taken += 1;
        out.peak_state_size = std::max(out.peak_state_size, machine.size());
    }
}

}  // namespace lamvm

#include "lamvm/heap_machine.hpp"

#include <algorithm>

namespace lamvm {

std::optional<Closure> Heap::lookup(Address a, uint64_t n) const {
    while (true) {
        if (a == 0 || a > cells_.size()) return std::nullopt;
        const HeapEntry &entry = cells_[a - 1];
        if (n == 0) return entry.head;
        a = entry.tail;
        n -= 1;
    }
}

Address Heap::put(HeapEntry entry) {
    size_ += entry.size();
    cells_.push_back(std::move(entry));
    return static_cast<Address>(cells_.size());
}

uint64_t state_size_heap(const HeapState &state) {
    uint64_t total = 0;
    for (const Closure &g : state.tasks) total += g.size();
    for (const Closure &g : state.values) total += g.size();
    return total + state.heap.size();
}

HeapState initial_heap(const TermPtr &s) {
    if (!closed(s)) throw NotClosedError("initial_heap: term is not closed");
    HeapState state;
    state.tasks.push_back(Closure{compile(s), 0});
    return state;
}

HeapMachine::HeapMachine(HeapState state)
    : state_(std::move(state)), size_(state_size_heap(state_)) {}

bool HeapMachine::terminal() const {
    return state_.tasks.empty() && state_.values.size() == 1;
}

std::optional<HeapMachine::Rule> HeapMachine::step() {
    if (state_.tasks.empty()) return std::nullopt;
    Closure &top = state_.tasks.back();

    if (top.code.empty()) {
        size_ -= top.size();
        state_.tasks.pop_back();
        return Rule::Return;
    }

    switch (top.code.front().op) {
        case Command::Op::Var: {
            auto value = state_.heap.lookup(top.env, top.code.front().index);
            if (!value) return std::nullopt;
            size_ -= top.code.front().size();
            size_ += value->size();
            top.code = top.code.drop_front();
            state_.values.push_back(std::move(*value));
            return Rule::Var;
        }
        case Command::Op::Lam: {
            auto split = jump_target(top.code.drop_front());
            if (!split) return std::nullopt;
            auto &[body, rest] = *split;
            // Lam and Ret leave; the new value closure shares the task's env
            size_ -= 2;
            size_ += top.env;
            state_.values.push_back(Closure{body, top.env});
            top.code = rest;
            return Rule::Lambda;
        }
        case Command::Op::App: {
            if (state_.values.size() < 2) return std::nullopt;
            Closure argument = state_.values.back();
            state_.values.pop_back();
            Closure callee = state_.values.back();
            state_.values.pop_back();
            size_ -= 1;  // App command
            size_ -= argument.size() + callee.size();
            Address env = callee.env;
            Address addr =
                state_.heap.put(HeapEntry{std::move(argument), env});
            size_ += state_.heap.cell(addr).size();
            top.code = top.code.drop_front();
            state_.tasks.push_back(Closure{std::move(callee.code), addr});
            size_ += state_.tasks.back().size();
            return Rule::Application;
        }
        case Command::Op::Ret:
            return std::nullopt;  // stuck
    }
    return std::nullopt;
}

std::optional<HeapState> heap_step(const HeapState &state) {
    HeapMachine machine(state);
    if (!machine.step()) return std::nullopt;
    return machine.state();
}

HeapOutcome run_heap(const TermPtr &s, uint64_t step_budget) {
    HeapMachine machine(s);
    HeapOutcome out;
    out.peak_state_size = machine.size();
    while (true) {
        if (machine.terminal()) {
            out.success = true;
            out.result = machine.state().values.back();
            out.heap = machine.state().heap;
            return out;
        }
        if (out.steps_taken == step_budget) {
            out.heap = machine.state().heap;
            out.note = "step budget exhausted";
            return out;
        }
        if (!machine.step()) {
            out.heap = machine.state().heap;
            out.note = machine.state().tasks.empty()
                           ? "halted with multiple values"
                           : "no rule applies";
            return out;
        }
        out.steps_taken += 1;
        out.peak_state_size = std::max(out.peak_state_size, machine.size());
    }
}

std::optional<Program> unfold_closure(const Heap &heap, const Closure &g) {
    struct Frame {
        Program code;
        Address env;
        uint32_t depth;
        bool emit_ret_on_resume;
    };
    std::vector<Command> out;
    out.push_back(Command::lam());
    std::vector<Frame> pending;
    Program code = g.code;
    Address env = g.env;
    uint32_t depth = 1;

    while (true) {
        if (code.empty()) {
            if (pending.empty()) break;
            Frame frame = std::move(pending.back());
            pending.pop_back();
            if (frame.emit_ret_on_resume) out.push_back(Command::ret());
            code = std::move(frame.code);
            env = frame.env;
            depth = frame.depth;
            continue;
        }
        Command c = code.front();
        code = code.drop_front();
        switch (c.op) {
            case Command::Op::App:
                out.push_back(c);
                break;
            case Command::Op::Lam:
                out.push_back(c);
                depth += 1;
                break;
            case Command::Op::Ret:
                if (depth == 0) return std::nullopt;
                out.push_back(c);
                depth -= 1;
                break;
            case Command::Op::Var:
                if (c.index < depth) {
                    out.push_back(c);
                } else {
                    auto value = heap.lookup(env, c.index - depth);
                    if (!value) return std::nullopt;
                    out.push_back(Command::lam());
                    pending.push_back(Frame{std::move(code), env, depth, true});
                    code = value->code;
                    env = value->env;
                    depth = 1;
                }
                break;
        }
    }
    out.push_back(Command::ret());
    return Program(std::move(out));
}

bool unfolds(const Heap &heap, uint32_t k, const TermPtr &s, Address a,
             const TermPtr &target) {
    switch (s->kind()) {
        case Term::Kind::Var: {
            uint32_t n = s->index();
            if (n < k)
                return target->kind() == Term::Kind::Var && target->index() == n;
            auto value = heap.lookup(a, n - k);
            if (!value) return false;
            auto body = decompile(value->code);
            if (!body) return false;
            // the looked-up program must represent an abstraction
            if (compile(*body) != value->code) return false;
            return unfolds(heap, 0, lam(*body), value->env, target);
        }
        case Term::Kind::Lam:
            return target->kind() == Term::Kind::Lam &&
                   unfolds(heap, k + 1, s->body(), a, target->body());
        case Term::Kind::App:
            return target->kind() == Term::Kind::App &&
                   unfolds(heap, k, s->fun(), a, target->fun()) &&
                   unfolds(heap, k, s->arg(), a, target->arg());
    }
    return false;
}

}  // namespace lamvm

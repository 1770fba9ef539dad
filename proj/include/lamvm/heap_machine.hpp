#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamvm/program.hpp"
#include "lamvm/term.hpp"

// Heap-based abstract machine: closures over an append-only heap of
// linked-list environment cells. Beta steps allocate one cell instead of
// substituting, so intermediate states depend only on the initial term size
// and the step count.

namespace lamvm {

// 0 denotes the empty environment; valid cell addresses are 1..heap length
using Address = uint32_t;

struct Closure {
    Program code;
    Address env = 0;

    // unary accounting of the environment address
    uint64_t size() const { return code.size() + env; }
    bool operator==(const Closure &) const = default;
};

struct HeapEntry {
    Closure head;
    Address tail = 0;

    uint64_t size() const { return head.size() + tail; }
    bool operator==(const HeapEntry &) const = default;
};

class Heap {
public:
    // follows tail pointers n times from a and returns the head closure;
    // nullopt when any hop dangles (address 0 included)
    std::optional<Closure> lookup(Address a, uint64_t n) const;

    // appends the entry and returns its address (1 + old length)
    Address put(HeapEntry entry);

    size_t length() const { return cells_.size(); }
    const HeapEntry &cell(Address a) const { return cells_[a - 1]; }
    const std::vector<HeapEntry> &cells() const { return cells_; }

    uint64_t size() const { return size_; }  // sum of entry sizes

private:
    std::vector<HeapEntry> cells_;
    uint64_t size_ = 0;
};

struct HeapState {
    // back() is the top of the stack
    std::vector<Closure> tasks;
    std::vector<Closure> values;
    Heap heap;
};

uint64_t state_size_heap(const HeapState &state);

// initial state ([(gamma s, 0)], [], []); throws NotClosedError
HeapState initial_heap(const TermPtr &s);

// one machine step; nullopt when no rule applies (terminal or stuck)
std::optional<HeapState> heap_step(const HeapState &state);

struct HeapOutcome {
    bool success = false;
    Closure result;  // success only
    Heap heap;
    uint64_t steps_taken = 0;
    uint64_t peak_state_size = 0;
    std::string note;  // diagnostic on failure
};

// Runs at most step_budget steps; success when the terminal shape
// ([], [g], H) is reached within budget.
HeapOutcome run_heap(const TermPtr &s, uint64_t step_budget);

class HeapMachine {
public:
    explicit HeapMachine(const TermPtr &s) : HeapMachine(initial_heap(s)) {}
    explicit HeapMachine(HeapState state);

    enum class Rule { Var, Lambda, Application, Return };

    std::optional<Rule> step();

    bool terminal() const;  // tasks empty, exactly one value
    const HeapState &state() const { return state_; }
    uint64_t size() const { return size_; }

private:
    HeapState state_;
    uint64_t size_ = 0;
};

// f_H: unfold a closure into the compiled form of the abstraction it
// represents, resolving environment references through the heap. nullopt when
// a lookup dangles or a Ret occurs at binder depth zero.
std::optional<Program> unfold_closure(const Heap &heap, const Closure &g);

// decides the inductive unfolding relation: target is obtained from s by
// recursively substituting free variables (indices >= k) via environment a
bool unfolds(const Heap &heap, uint32_t k, const TermPtr &s, Address a,
             const TermPtr &target);

}  // namespace lamvm

#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamvm/term.hpp"

// Linear program encoding of terms: postfix commands with Lam/Ret bracketing
// abstraction bodies. Programs are immutable views into shared command
// buffers, so splitting off suffixes and subprograms is cheap; the weighted
// size (unary accounting of variable indices) is cached.

namespace lamvm {

struct Command {
    enum class Op : uint8_t { Ret, Var, Lam, App };

    Op op = Op::Ret;
    uint32_t index = 0;  // Var only

    // |var n| = 1+n, otherwise 1
    uint64_t size() const { return op == Op::Var ? 1 + uint64_t(index) : 1; }

    bool operator==(const Command &) const = default;

    static Command ret() { return {Op::Ret, 0}; }
    static Command var(uint32_t n) { return {Op::Var, n}; }
    static Command lam() { return {Op::Lam, 0}; }
    static Command app() { return {Op::App, 0}; }
};

class Program {
public:
    Program() = default;
    explicit Program(std::vector<Command> cmds);
    Program(std::initializer_list<Command> cmds)
        : Program(std::vector<Command>(cmds)) {}

    bool empty() const { return from_ == to_; }
    size_t length() const { return to_ - from_; }
    uint64_t size() const { return size_; }  // sum of command sizes

    const Command &front() const { return (*buf_)[from_]; }
    const Command &operator[](size_t i) const { return (*buf_)[from_ + i]; }

    const Command *begin() const { return buf_ ? buf_->data() + from_ : nullptr; }
    const Command *end() const { return buf_ ? buf_->data() + to_ : nullptr; }

    // view without the first command
    Program drop_front() const;
    // view of [a, b) with its weighted size precomputed by the caller
    Program slice(size_t a, size_t b, uint64_t slice_size) const;

    bool operator==(const Program &other) const;

private:
    std::shared_ptr<const std::vector<Command>> buf_;
    uint32_t from_ = 0;
    uint32_t to_ = 0;
    uint64_t size_ = 0;
};

inline uint64_t size_program(const Program &p) { return p.size(); }

// gamma: term -> program
Program compile(const TermPtr &s);

// delta: left inverse of compile; nullopt when no equation applies or the
// final accumulator is not a singleton
std::optional<TermPtr> decompile(const Program &p);

// phi: split the body of an abstraction from the rest, matching Lam with Ret
// like parentheses; nullopt when no matching Ret exists
std::optional<std::pair<Program, Program>> jump_target(const Program &p);

// program-level substitution: occurrences of Var k at matching depth are
// replaced by splicing q in-line
Program subst_program(const Program &p, uint32_t k, const Program &q);

// as above, but gives up once the output's weighted size exceeds size_cap
std::optional<Program> subst_program_capped(const Program &p, uint32_t k,
                                            const Program &q, uint64_t size_cap);

// P >> s: s is an abstraction whose body compiles to P
bool represents(const Program &p, const TermPtr &s);

// textual dump, space-separated tokens: L, R, A, Vn
std::string dump_program(const Program &p);
std::optional<Program> parse_program_dump(const std::string &text);

}  // namespace lamvm

#pragma once

#include <random>
#include <vector>

#include "lamvm/generators.hpp"
#include "lamvm/program.hpp"
#include "lamvm/term.hpp"

// Shared helpers for the test suites: a memoized corpus, independent oracles
// and exhaustive enumerators.

namespace testsupport {

using namespace lamvm;

inline const std::vector<TermPtr> &corpus(size_t count = 600) {
    static std::vector<TermPtr> cached = [count] {
        CorpusOptions options;
        options.count = count;
        return normalizing_corpus(0xC0FFEE, options);
    }();
    return cached;
}

// deliberately naive re-implementation of capturing substitution, kept
// independent of lamvm::subst_term (no sharing shortcuts)
inline TermPtr naive_subst(const TermPtr &s, uint32_t k, const TermPtr &u) {
    switch (s->kind()) {
        case Term::Kind::Var:
            if (s->index() == k) return u;
            return var(s->index());
        case Term::Kind::App:
            return app(naive_subst(s->fun(), k, u), naive_subst(s->arg(), k, u));
        case Term::Kind::Lam:
            return lam(naive_subst(s->body(), k + 1, u));
    }
    return s;
}

inline Program random_program(std::mt19937_64 &rng, size_t max_len) {
    std::vector<Command> cmds;
    size_t len = rng() % (max_len + 1);
    for (size_t i = 0; i < len; ++i) {
        switch (rng() % 4) {
            case 0: cmds.push_back(Command::ret()); break;
            case 1: cmds.push_back(Command::lam()); break;
            case 2: cmds.push_back(Command::app()); break;
            default:
                cmds.push_back(Command::var(static_cast<uint32_t>(rng() % 4)));
        }
    }
    return Program(std::move(cmds));
}

// all terms of exactly `size` whose free indices are < bound
inline void terms_of_size(uint64_t size, uint32_t bound,
                          std::vector<TermPtr> &out) {
    if (size == 0) return;
    if (size - 1 < bound) out.push_back(var(static_cast<uint32_t>(size - 1)));
    if (size >= 2) {
        std::vector<TermPtr> bodies;
        terms_of_size(size - 1, bound + 1, bodies);
        for (auto &b : bodies) out.push_back(lam(b));
    }
    for (uint64_t left = 1; left + 1 < size; ++left) {
        std::vector<TermPtr> funs, args;
        terms_of_size(left, bound, funs);
        terms_of_size(size - 1 - left, bound, args);
        for (auto &f : funs)
            for (auto &a : args) out.push_back(app(f, a));
    }
}

inline std::vector<TermPtr> closed_terms_up_to(uint64_t max_size) {
    std::vector<TermPtr> out;
    for (uint64_t n = 1; n <= max_size; ++n) terms_of_size(n, 0, out);
    return out;
}

// all programs whose summed command size is <= budget
inline void programs_up_to(uint64_t budget, std::vector<Command> &prefix,
                           std::vector<Program> &out) {
    out.push_back(Program(prefix));
    if (budget == 0) return;
    for (Command c : {Command::ret(), Command::lam(), Command::app()}) {
        prefix.push_back(c);
        programs_up_to(budget - 1, prefix, out);
        prefix.pop_back();
    }
    for (uint32_t n = 0; 1 + uint64_t(n) <= budget; ++n) {
        prefix.push_back(Command::var(n));
        programs_up_to(budget - 1 - n, prefix, out);
        prefix.pop_back();
    }
}

inline uint64_t count_programs_sigma_up_to(uint64_t budget) {
    std::vector<Command> prefix;
    std::vector<Program> all;
    programs_up_to(budget, prefix, all);
    return all.size();
}

}  // namespace testsupport

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

// de Bruijn terms of the weak call-by-value lambda calculus, with the
// natural cost measures: time = number of beta steps, space = size of the
// largest term in the reduction.

namespace lamvm {

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    enum class Kind : uint8_t { Var, App, Lam };

    Kind kind() const { return kind_; }
    uint32_t index() const { return index_; }       // Var only
    const TermPtr &fun() const { return left_; }    // App only
    const TermPtr &arg() const { return right_; }   // App only
    const TermPtr &body() const { return left_; }   // Lam only

    // |n| = 1+n, |st| = 1+|s|+|t|, |\s| = 1+|s|; cached at construction and
    // saturating at UINT64_MAX so meters never wrap on shared giant terms
    uint64_t size() const { return size_; }

    // least k such that every free index is < k; cached at construction
    uint32_t bound() const { return bound_; }

    Term(Kind k, uint32_t index, TermPtr left, TermPtr right, uint64_t size,
         uint32_t bound)
        : kind_(k), index_(index), left_(std::move(left)), right_(std::move(right)),
          size_(size), bound_(bound) {}

private:
    Kind kind_;
    uint32_t index_;
    TermPtr left_;
    TermPtr right_;
    uint64_t size_;
    uint32_t bound_;
};

TermPtr var(uint32_t n);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr lam(TermPtr body);

inline uint64_t size_term(const TermPtr &s) { return s->size(); }

// structural equality (shared subtrees compare in O(1))
bool equal(const TermPtr &a, const TermPtr &b);

// single-point capturing substitution: replace index k by u
TermPtr subst_term(const TermPtr &s, uint32_t k, const TermPtr &u);

// all free de Bruijn indices of s are < k
inline bool bounded(const TermPtr &s, uint32_t k) { return s->bound() <= k; }
inline bool closed(const TermPtr &s) { return bounded(s, 0); }

struct NotClosedError : std::invalid_argument {
    explicit NotClosedError(const char *what) : std::invalid_argument(what) {}
};

// one weak call-by-value reduction step; nullopt when irreducible
std::optional<TermPtr> step(const TermPtr &s);

struct EvalReport {
    TermPtr normal_form;
    uint64_t time = 0;   // beta steps taken
    uint64_t space = 0;  // max term size along the reduction, endpoints included
    std::optional<std::vector<TermPtr>> trace;
};

// Iterates step up to `fuel` times. nullopt = fuel exhausted before a value
// was reached. Throws NotClosedError on open input.
std::optional<EvalReport> evaluate(const TermPtr &s, uint64_t fuel,
                                   bool keep_trace = false);

struct BigStepReport {
    uint64_t time = 0;
    uint64_t space = 0;
    TermPtr normal_form;
};

// Simultaneous big-step time/space derivation. nullopt = recursion depth cap
// hit (in particular on divergent terms). Throws NotClosedError on open input.
std::optional<BigStepReport> eval_bigstep(const TermPtr &s,
                                          uint32_t depth_cap = 10000);

}  // namespace lamvm

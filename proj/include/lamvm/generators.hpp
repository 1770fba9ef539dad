#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lamvm/term.hpp"

namespace lamvm {

// \x.\y.x and \x.\y.y
TermPtr church_bool(bool b);

// \f.\x. f (f ... (f x)) with n applications
TermPtr church_nat(uint32_t n);

enum class Family {
    // s_E n: a linear number of beta steps builds (and then discards) a term
    // of size 2^n
    SizeExplosion,
    // s_P n: 3n beta steps over terms of stable size; sharing-based
    // evaluation allocates one heap cell per step
    PointerExplosion,
};

// n >= 1; throws std::invalid_argument otherwise
TermPtr gen_family(Family family, uint32_t n);

// (\x. x x)(\x. x x)
TermPtr omega();

struct RandomTermOptions {
    uint32_t max_depth = 14;
    uint32_t free_bound = 0;  // indices below this may occur free
    // weights for Var/Lam/App at interior nodes
    uint32_t var_weight = 3;
    uint32_t lam_weight = 3;
    uint32_t app_weight = 4;
};

TermPtr random_term(std::mt19937_64 &rng, const RandomTermOptions &options);

struct CorpusOptions {
    size_t count = 600;
    uint64_t fuel = 500;          // required beta steps to normalize within
    uint64_t max_space = 20000;   // reject runs whose space measure exceeds this
    RandomTermOptions term;
};

// deterministic corpus of closed terms normalizing within the fuel bound
std::vector<TermPtr> normalizing_corpus(uint64_t seed, const CorpusOptions &options);

}  // namespace lamvm

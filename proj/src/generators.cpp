#include "lamvm/generators.hpp"

#include <stdexcept>

namespace lamvm {

TermPtr church_bool(bool b) { return lam(lam(var(b ? 1 : 0))); }

TermPtr church_nat(uint32_t n) {
    TermPtr body = var(0);
    for (uint32_t i = 0; i < n; ++i) body = app(var(1), body);
    return lam(lam(body));
}

TermPtr omega() {
    TermPtr self_apply = lam(app(var(0), var(0)));
    return app(self_apply, self_apply);
}

TermPtr gen_family(Family family, uint32_t n) {
    if (n < 1) throw std::invalid_argument("gen_family: n must be >= 1");
    TermPtr tru = church_bool(true);
    switch (family) {
        case Family::SizeExplosion: {
            // \x. true true (x #2 (\x. x))
            TermPtr body = app(app(tru, tru),
                               app(app(var(0), church_nat(2)), lam(var(0))));
            return app(lam(body), church_nat(n));
        }
        case Family::PointerExplosion: {
            // N (N ... (N true)) with N = (\x.\y. x x) true
            TermPtr n_comb = app(lam(lam(app(var(1), var(1)))), tru);
            TermPtr out = tru;
            for (uint32_t i = 0; i < n; ++i) out = app(n_comb, out);
            return out;
        }
    }
    throw std::invalid_argument("gen_family: unknown family");
}

namespace {

TermPtr random_term_at(std::mt19937_64 &rng, const RandomTermOptions &options,
                       uint32_t depth, uint32_t bound) {
    uint32_t var_weight = bound > 0 ? options.var_weight : 0;
    if (depth >= options.max_depth) {
        // leaves only: a variable if one is in scope, else the identity
        if (var_weight == 0) return lam(var(0));
        return var(static_cast<uint32_t>(rng() % bound));
    }
    uint64_t total = var_weight + options.lam_weight + options.app_weight;
    uint64_t pick = rng() % total;
    if (pick < var_weight) return var(static_cast<uint32_t>(rng() % bound));
    if (pick < var_weight + options.lam_weight)
        return lam(random_term_at(rng, options, depth + 1, bound + 1));
    return app(random_term_at(rng, options, depth + 1, bound),
               random_term_at(rng, options, depth + 1, bound));
}

}  // namespace

TermPtr random_term(std::mt19937_64 &rng, const RandomTermOptions &options) {
    return random_term_at(rng, options, 0, options.free_bound);
}

std::vector<TermPtr> normalizing_corpus(uint64_t seed,
                                        const CorpusOptions &options) {
    std::mt19937_64 rng(seed);
    std::vector<TermPtr> corpus;
    corpus.reserve(options.count);
    size_t values = 0;  // terms that already are normal forms
    while (corpus.size() < options.count) {
        TermPtr candidate = random_term(rng, options.term);
        if (!closed(candidate)) continue;
        auto report = evaluate(candidate, options.fuel);
        if (!report || report->space > options.max_space) continue;
        if (report->time == 0) {
            // keep the corpus dominated by terms that actually reduce
            if (4 * values >= options.count) continue;
            values += 1;
        }
        corpus.push_back(candidate);
    }
    return corpus;
}

}  // namespace lamvm

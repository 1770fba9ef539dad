#include "lamvm/term.hpp"

#include <algorithm>

namespace lamvm {

namespace {

uint64_t sat_add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s < a ? UINT64_MAX : s;
}

}  // namespace

TermPtr var(uint32_t n) {
    if (n == UINT32_MAX)
        throw std::invalid_argument("var: de Bruijn index out of range");
    return std::make_shared<Term>(Term::Kind::Var, n, nullptr, nullptr,
                                  1 + uint64_t(n), n + 1);
}

TermPtr app(TermPtr fun, TermPtr arg) {
    uint64_t sz = sat_add(1, sat_add(fun->size(), arg->size()));
    uint32_t bound = std::max(fun->bound(), arg->bound());
    return std::make_shared<Term>(Term::Kind::App, 0, std::move(fun),
                                  std::move(arg), sz, bound);
}

TermPtr lam(TermPtr body) {
    uint64_t sz = sat_add(1, body->size());
    uint32_t bound = body->bound() > 0 ? body->bound() - 1 : 0;
    return std::make_shared<Term>(Term::Kind::Lam, 0, std::move(body), nullptr,
                                  sz, bound);
}

bool equal(const TermPtr &a, const TermPtr &b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind() || a->size() != b->size()) return false;
    switch (a->kind()) {
        case Term::Kind::Var: return a->index() == b->index();
        case Term::Kind::App:
            return equal(a->fun(), b->fun()) && equal(a->arg(), b->arg());
        case Term::Kind::Lam: return equal(a->body(), b->body());
    }
    return false;
}

TermPtr subst_term(const TermPtr &s, uint32_t k, const TermPtr &u) {
    if (s->bound() <= k) return s;  // index k cannot occur free in s
    switch (s->kind()) {
        case Term::Kind::Var:
            return s->index() == k ? u : s;
        case Term::Kind::App: {
            TermPtr f = subst_term(s->fun(), k, u);
            TermPtr a = subst_term(s->arg(), k, u);
            if (f.get() == s->fun().get() && a.get() == s->arg().get()) return s;
            return app(std::move(f), std::move(a));
        }
        case Term::Kind::Lam: {
            TermPtr b = subst_term(s->body(), k + 1, u);
            if (b.get() == s->body().get()) return s;
            return lam(std::move(b));
        }
    }
    return s;
}

std::optional<TermPtr> step(const TermPtr &s) {
    if (s->kind() != Term::Kind::App) return std::nullopt;
    const TermPtr &f = s->fun();
    const TermPtr &a = s->arg();
    if (f->kind() == Term::Kind::Lam) {
        if (a->kind() == Term::Kind::Lam) return subst_term(f->body(), 0, a);
        if (auto a2 = step(a)) return app(f, std::move(*a2));
        return std::nullopt;
    }
    if (auto f2 = step(f)) return app(std::move(*f2), a);
    return std::nullopt;
}

std::optional<EvalReport> evaluate(const TermPtr &s, uint64_t fuel,
                                   bool keep_trace) {
    if (!closed(s)) throw NotClosedError("evaluate: term is not closed");
    EvalReport report;
    if (keep_trace) report.trace.emplace();
    TermPtr current = s;
    report.space = current->size();
    if (keep_trace) report.trace->push_back(current);
    while (current->kind() != Term::Kind::Lam) {
        if (report.time == fuel) return std::nullopt;
        auto next = step(current);
        if (!next) return std::nullopt;  // stuck; unreachable for closed terms
        current = std::move(*next);
        report.time += 1;
        report.space = std::max(report.space, current->size());
        if (keep_trace) report.trace->push_back(current);
    }
    report.normal_form = current;
    return report;
}

namespace {

std::optional<BigStepReport> bigstep(const TermPtr &s, uint32_t depth,
                                     uint32_t depth_cap) {
    if (depth > depth_cap) return std::nullopt;
    if (s->kind() == Term::Kind::Lam)
        return BigStepReport{0, s->size(), s};
    if (s->kind() == Term::Kind::Var)
        throw NotClosedError("eval_bigstep: free variable reached");
    auto fr = bigstep(s->fun(), depth + 1, depth_cap);
    if (!fr) return std::nullopt;
    auto ar = bigstep(s->arg(), depth + 1, depth_cap);
    if (!ar) return std::nullopt;
    auto br = bigstep(subst_term(fr->normal_form->body(), 0, ar->normal_form),
                      depth + 1, depth_cap);
    if (!br) return std::nullopt;
    BigStepReport out;
    out.time = fr->time + ar->time + 1 + br->time;
    out.space = std::max({1 + fr->space + s->arg()->size(),
                          1 + fr->normal_form->size() + ar->space, br->space});
    out.normal_form = br->normal_form;
    return out;
}

}  // namespace

std::optional<BigStepReport> eval_bigstep(const TermPtr &s, uint32_t depth_cap) {
    if (!closed(s)) throw NotClosedError("eval_bigstep: term is not closed");
    return bigstep(s, 0, depth_cap);
}

}  // namespace lamvm

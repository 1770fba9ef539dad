#include <doctest.h>

#include "lamvm/generators.hpp"
#include "lamvm/simulator.hpp"
#include "support.hpp"

using namespace lamvm;

namespace {
const TermPtr id = lam(var(0));
const TermPtr id_id = app(id, id);
}  // namespace

TEST_CASE("polynomial budget") {
    CHECK(poly_p(0) == 4);
    CHECK(poly_p(1) == 14);
    // |s| * p(k) dominates the heap machine's analytic state bound
    for (uint64_t k = 0; k <= 10000; k += (k < 100 ? 1 : 97)) {
        for (uint64_t s = 1; s <= 100; ++s) {
            CHECK((k + 1) * (3 * k + 4 * s) <= s * poly_p(k));
        }
    }
}

TEST_CASE("combined run on the identity redex") {
    auto report = run_combined(id_id, 100);
    REQUIRE(report.succeeded());
    CHECK(equal(report.normal_form, id));
    CHECK(report.final_k <= 4);
    CHECK(report.iterations.back().path == IterationPath::SubstNormal);
    // earlier iterations ran out of steps
    for (size_t i = 0; i + 1 < report.iterations.size(); ++i)
        CHECK(report.iterations[i].path == IterationPath::SubstStepOut);
    CHECK_THROWS_AS(run_combined(var(0), 10), NotClosedError);
}

TEST_CASE("divergence exhausts the budget") {
    auto report = run_combined(omega(), 50);
    CHECK_FALSE(report.succeeded());
    CHECK(report.iterations.size() == 51);
    CHECK(report.final_k == 50);
}

TEST_CASE("agreement with the reference on the corpus") {
    for (const TermPtr &s : testsupport::corpus()) {
        auto reference = evaluate(s, 500);
        auto report = run_combined(s, 4 * reference->time + 2);
        REQUIRE(report.succeeded());  // k_cap = 4*Time+2 always suffices
        CHECK(equal(report.normal_form, reference->normal_form));
        CHECK(report.final_k <= 4 * reference->time + 2);
    }
}

TEST_CASE("heap runs stay within the aborted space budget") {
    // Whenever the heap machine is entered at budget k, the substitution
    // machine aborted on m = |s|*p(k), so the heap peak must stay below m.
    int heap_entries = 0;
    for (uint32_t n : {19u, 20u}) {
        TermPtr s = gen_family(Family::SizeExplosion, n);
        auto report = run_combined(s, 1u << 20);
        REQUIRE(report.succeeded());
        for (const CombinedIteration &it : report.iterations) {
            if (it.path == IterationPath::HeapTried ||
                it.path == IterationPath::HeapSucceeded) {
                heap_entries += 1;
                auto heap = run_heap(s, it.k);
                CHECK(heap.peak_state_size <= it.m);
            }
        }
    }
    CHECK(heap_entries > 0);
}

TEST_CASE("size explosion switches to the heap machine once large enough") {
    // For this family the substitution peak grows like 2^n while the budget
    // |s|*p(k) is polynomial in n, so from n = 19 on the space abort persists
    // until the heap machine has its 4*Time+2 steps.
    TermPtr s = gen_family(Family::SizeExplosion, 19);
    auto report = run_combined(s, 1u << 20);
    REQUIRE(report.succeeded());
    CHECK(report.iterations.back().path == IterationPath::HeapSucceeded);
    CHECK(equal(report.normal_form, church_bool(true)));
    CHECK(report.peak_heap_size > 0);
    CHECK(report.final_k == 98);  // 4*(19+5)+2
}

TEST_CASE("pointer explosion keeps the substitution path") {
    for (uint32_t n : {4u, 40u, 120u}) {
        TermPtr s = gen_family(Family::PointerExplosion, n);
        auto report = run_combined(s, 1u << 20);
        REQUIRE(report.succeeded());
        CHECK(report.iterations.back().path == IterationPath::SubstNormal);
        auto reference = evaluate(s, 100000);
        CHECK(equal(report.normal_form, reference->normal_form));
        CHECK(space_meter(report, *reference) <= 2.0);
    }
}

TEST_CASE("the counter widths enter the modeled space") {
    auto report = run_combined(id_id, 100);
    uint64_t peak = std::max(report.peak_subst_size, report.peak_heap_size);
    CHECK(report.modeled_space > peak);
    CHECK(report.modeled_space <= peak + 128);  // two counter widths
    auto reference = evaluate(id_id, 10);
    CHECK(space_meter(report, *reference) > 0.0);

    auto value_only = run_combined(id, 100);
    auto value_reference = evaluate(id, 10);
    CHECK(space_meter(value_only, *value_reference) > 0.0);
}

TEST_CASE("work across iterations stays within 2k steps each") {
    for (const TermPtr &s : testsupport::corpus()) {
        auto reference = evaluate(s, 500);
        auto report = run_combined(s, 4 * reference->time + 2);
        REQUIRE(report.succeeded());
        // sum over k = 0..final_k of 2k
        uint64_t budget = report.final_k * (report.final_k + 1);
        CHECK(report.total_machine_steps <= budget);
    }
}

TEST_CASE("final step counter stays logarithmic in the reference space") {
    // empirical form of the counting bound: log2(final_k) = O(Space)
    for (const TermPtr &s : testsupport::corpus()) {
        auto reference = evaluate(s, 500);
        auto report = run_combined(s, 4 * reference->time + 2);
        REQUIRE(report.succeeded());
        uint64_t width = 1;
        while ((uint64_t(1) << width) <= report.final_k + 1) width += 1;
        CHECK(width <= 5 * reference->space);
    }
}

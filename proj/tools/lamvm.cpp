// Command-line front end: evaluate terms under any of the four strategies
// with exact step/space meters, generate the example families, convert
// between surface syntax and compiled programs, and sweep a random corpus.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "lamvm/generators.hpp"
#include "lamvm/heap_machine.hpp"
#include "lamvm/program.hpp"
#include "lamvm/simulator.hpp"
#include "lamvm/subst_machine.hpp"
#include "lamvm/syntax.hpp"
#include "lamvm/term.hpp"

using json = nlohmann::ordered_json;
using namespace lamvm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitResource = 2;

struct RunConfig {
    std::string strategy = "reference";
    uint64_t fuel = 1'000'000;
    uint64_t k = 1'000'000;
    uint64_t m = 100'000'000;
    uint64_t kcap = 1u << 20;
    bool trace = false;
    bool json_output = false;
};

json reference_block(const TermPtr &s, uint64_t fuel) {
    auto report = evaluate(s, fuel);
    if (!report) return json{{"outcome", "diverged"}, {"fuel", fuel}};
    return json{{"time", report->time}, {"space", report->space}};
}

void print_report(const json &report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto &[key, value] : report.items()) {
        if (value.is_string()) {
            std::cout << key << ": " << value.get<std::string>() << "\n";
        } else {
            std::cout << key << ": " << value.dump() << "\n";
        }
    }
}

const char *path_name(IterationPath path) {
    switch (path) {
        case IterationPath::SubstNormal: return "subst-normal";
        case IterationPath::SubstStepOut: return "subst-step-out";
        case IterationPath::HeapTried: return "heap-tried";
        case IterationPath::HeapSucceeded: return "heap-succeeded";
    }
    return "?";
}

int run_reference(const TermPtr &s, const RunConfig &config, json &report) {
    auto result = evaluate(s, config.fuel, config.trace);
    if (!result) {
        report["outcome"] = "diverged";
        return kExitResource;
    }
    report["outcome"] = "normal";
    report["time"] = result->time;
    report["space"] = result->space;
    report["nf"] = print_term(result->normal_form, PrintStyle::Named);
    if (config.trace) {
        json steps = json::array();
        for (size_t i = 0; i < result->trace->size(); ++i)
            steps.push_back(json{
                {"step", i},
                {"size", size_term((*result->trace)[i])},
                {"term", print_term((*result->trace)[i], PrintStyle::DeBruijn)}});
        report["trace"] = std::move(steps);
    }
    return kExitOk;
}

json dump_stack(const std::vector<Program> &stack) {
    json out = json::array();  // top of the stack first
    for (auto it = stack.rbegin(); it != stack.rend(); ++it)
        out.push_back(dump_program(*it));
    return out;
}

int run_subst_strategy(const TermPtr &s, const RunConfig &config, json &report) {
    json trace = json::array();
    if (config.trace) {
        SubstMachine machine(s);
        uint64_t steps = 0;
        bool exceeded = false;
        while (steps < config.k && machine.size() <= config.m) {
            auto rule = machine.step(config.m, exceeded);
            if (!rule) break;
            steps += 1;
            trace.push_back(json{
                {"step", steps},
                {"rule", *rule == SubstMachine::Rule::Lambda ? "lam" : "app"},
                {"state_size", machine.size()},
                {"tasks", dump_stack(machine.state().tasks)},
                {"values", dump_stack(machine.state().values)}});
        }
    }
    auto outcome = run_subst(s, config.k, config.m);
    report["steps_taken"] = outcome.steps_taken;
    report["peak_state_size"] = outcome.peak_state_size;
    if (config.trace) report["trace"] = std::move(trace);
    switch (outcome.status) {
        case SubstStatus::Normal: {
            report["outcome"] = "normal";
            report["result_program"] = dump_program(*outcome.result);
            auto body = decompile(*outcome.result);
            if (body) report["nf"] = print_term(lam(*body), PrintStyle::Named);
            return kExitOk;
        }
        case SubstStatus::SpaceBoundReached:
            report["outcome"] = "space-bound-reached";
            return kExitResource;
        case SubstStatus::SpaceBoundNotReached:
            report["outcome"] = "space-bound-not-reached";
            return kExitResource;
    }
    return kExitResource;
}

int run_heap_strategy(const TermPtr &s, const RunConfig &config, json &report) {
    json trace = json::array();
    if (config.trace) {
        HeapMachine machine(s);
        uint64_t steps = 0;
        while (steps < config.k) {
            auto rule = machine.step();
            if (!rule) break;
            steps += 1;
            const char *name = "?";
            switch (*rule) {
                case HeapMachine::Rule::Var: name = "var"; break;
                case HeapMachine::Rule::Lambda: name = "lam"; break;
                case HeapMachine::Rule::Application: name = "app"; break;
                case HeapMachine::Rule::Return: name = "ret"; break;
            }
            trace.push_back(json{{"step", steps},
                                 {"rule", name},
                                 {"state_size", machine.size()},
                                 {"heap_len", machine.state().heap.length()}});
        }
    }
    auto outcome = run_heap(s, config.k);
    report["steps_taken"] = outcome.steps_taken;
    report["peak_state_size"] = outcome.peak_state_size;
    report["heap_len"] = outcome.heap.length();
    if (config.trace) report["trace"] = std::move(trace);
    if (!outcome.success) {
        report["outcome"] = "failure";
        if (!outcome.note.empty()) report["note"] = outcome.note;
        return kExitResource;
    }
    report["outcome"] = "normal";
    report["result"] = json{{"code", dump_program(outcome.result.code)},
                            {"env", outcome.result.env}};
    if (config.trace) {
        json heap_dump = json::array();
        for (const HeapEntry &e : outcome.heap.cells())
            heap_dump.push_back(json{{"head",
                                      json{{"code", dump_program(e.head.code)},
                                           {"env", e.head.env}}},
                                     {"tail", e.tail}});
        report["heap"] = std::move(heap_dump);
    }
    auto unfolded = unfold_closure(outcome.heap, outcome.result);
    if (unfolded) {
        auto nf = decompile(*unfolded);
        if (nf) report["nf"] = print_term(*nf, PrintStyle::Named);
    }
    return kExitOk;
}

int run_combined_strategy(const TermPtr &s, const RunConfig &config,
                          json &report) {
    auto result = run_combined(s, config.kcap);
    json paths = json::array();
    for (const CombinedIteration &it : result.iterations)
        paths.push_back(
            json{{"k", it.k}, {"m", it.m}, {"path", path_name(it.path)}});
    report["final_k"] = result.final_k;
    report["path_per_k"] = std::move(paths);
    report["peak_subst_size"] = result.peak_subst_size;
    report["peak_heap_size"] = result.peak_heap_size;
    report["modeled_space"] = result.modeled_space;
    report["reference"] = reference_block(s, config.fuel);
    if (!result.succeeded()) {
        report["outcome"] = "budget-exhausted";
        return kExitResource;
    }
    report["outcome"] = "normal";
    report["normal_form"] = print_term(result.normal_form, PrintStyle::Named);
    return kExitOk;
}

int cmd_run(const std::string &input, const RunConfig &config) {
    TermPtr term;
    try {
        term = parse_term(input);
        if (!closed(term)) {
            std::cerr << "error: term is not closed\n";
            return kExitInputError;
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error at position " << e.position << ": "
                  << e.what() << "\n";
        return kExitInputError;
    }
    json report;
    report["term"] = print_term(term, PrintStyle::Named);
    report["strategy"] = config.strategy;
    auto started = std::chrono::steady_clock::now();
    int code;
    if (config.strategy == "reference") {
        code = run_reference(term, config, report);
    } else if (config.strategy == "subst") {
        code = run_subst_strategy(term, config, report);
        report["reference"] = reference_block(term, config.fuel);
    } else if (config.strategy == "heap") {
        code = run_heap_strategy(term, config, report);
        report["reference"] = reference_block(term, config.fuel);
    } else if (config.strategy == "combined") {
        code = run_combined_strategy(term, config, report);
    } else {
        std::cerr << "error: unknown strategy '" << config.strategy << "'\n";
        return kExitInputError;
    }
    report["wall_ms"] =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started)
            .count();
    print_report(report, config.json_output);
    return code;
}

int cmd_gen(const std::string &kind, uint32_t n) {
    TermPtr term;
    if (kind == "size-explosion") {
        term = gen_family(Family::SizeExplosion, n);
    } else if (kind == "pointer-explosion") {
        term = gen_family(Family::PointerExplosion, n);
    } else if (kind == "church-nat") {
        term = church_nat(n);
    } else if (kind == "church-bool") {
        term = church_bool(n != 0);
    } else {
        std::cerr << "error: unknown kind '" << kind << "'\n";
        return kExitInputError;
    }
    std::cout << print_term(term, PrintStyle::Named) << "\n";
    return kExitOk;
}

int cmd_compile(const std::string &input) {
    try {
        std::cout << dump_program(compile(parse_term(input))) << "\n";
        return kExitOk;
    } catch (const ParseError &e) {
        std::cerr << "parse error at position " << e.position << ": "
                  << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_decompile(const std::string &dump) {
    auto program = parse_program_dump(dump);
    if (!program) {
        std::cerr << "error: malformed program dump\n";
        return kExitInputError;
    }
    auto term = decompile(*program);
    if (!term) {
        std::cerr << "error: program does not decode to a term\n";
        return kExitInputError;
    }
    std::cout << print_term(*term, PrintStyle::Named) << "\n";
    return kExitOk;
}

struct CorpusResult {
    json record;
    bool ok = true;
};

CorpusResult corpus_check(const TermPtr &term, uint64_t fuel) {
    CorpusResult out;
    auto reference = evaluate(term, fuel);
    out.record["term"] = print_term(term, PrintStyle::Named);
    out.record["size"] = size_term(term);
    out.record["time"] = reference->time;
    out.record["space"] = reference->space;

    auto subst = run_subst(term, 3 * reference->time + 1, uint64_t(1) << 62);
    bool subst_ok = subst.status == SubstStatus::Normal &&
                    subst.steps_taken == 3 * reference->time + 1 &&
                    reference->space <= subst.peak_state_size &&
                    subst.peak_state_size <= 2 * reference->space;
    out.record["subst_steps"] = subst.steps_taken;
    out.record["subst_peak"] = subst.peak_state_size;

    auto heap = run_heap(term, 4 * reference->time + 2);
    std::optional<Program> unfolded;
    if (heap.success) unfolded = unfold_closure(heap.heap, heap.result);
    std::optional<TermPtr> heap_nf;
    if (unfolded) heap_nf = decompile(*unfolded);
    bool heap_ok = heap.success && heap.steps_taken == 4 * reference->time + 2 &&
                   heap_nf && equal(*heap_nf, reference->normal_form);
    out.record["heap_steps"] = heap.steps_taken;
    out.record["heap_len"] = heap.heap.length();

    auto combined = run_combined(term, 4 * reference->time + 2);
    bool combined_ok = combined.succeeded() &&
                       equal(combined.normal_form, reference->normal_form);
    out.record["combined_final_k"] = combined.final_k;

    out.ok = subst_ok && heap_ok && combined_ok;
    out.record["agree"] = out.ok;
    return out;
}

int cmd_corpus(size_t count, uint64_t seed, uint64_t fuel, unsigned jobs,
               bool as_json) {
    CorpusOptions options;
    options.count = count;
    options.fuel = fuel;
    std::vector<TermPtr> corpus = normalizing_corpus(seed, options);

    std::vector<CorpusResult> results(corpus.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < corpus.size(); ++i)
            results[i] = corpus_check(corpus[i], fuel);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= corpus.size()) return;
                    results[i] = corpus_check(corpus[i], fuel);
                }
            });
        for (auto &worker : workers) worker.join();
    }

    size_t failures = 0;
    for (const CorpusResult &r : results)
        if (!r.ok) failures += 1;

    if (as_json) {
        json report;
        report["seed"] = seed;
        report["count"] = corpus.size();
        report["failures"] = failures;
        json terms = json::array();
        for (const CorpusResult &r : results) terms.push_back(r.record);
        report["terms"] = std::move(terms);
        std::cout << report.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < results.size(); ++i) {
            const json &r = results[i].record;
            std::printf("%5zu  size=%-5llu time=%-4llu space=%-6llu %s\n", i,
                        r["size"].get<unsigned long long>(),
                        r["time"].get<unsigned long long>(),
                        r["space"].get<unsigned long long>(),
                        results[i].ok ? "ok" : "MISMATCH");
        }
        std::printf("corpus: %zu terms, %zu failures\n", results.size(),
                    failures);
    }
    return failures == 0 ? kExitOk : kExitResource;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App cli{"virtual-machine laboratory for the weak call-by-value "
                 "lambda calculus"};
    cli.require_subcommand(1);

    RunConfig config;
    std::string input;
    auto *run = cli.add_subcommand("run", "evaluate a term");
    run->add_option("term", input, "term in surface syntax")->required();
    run->add_option("--strategy", config.strategy,
                    "reference | subst | heap | combined");
    run->add_option("--fuel", config.fuel, "beta-step budget (reference)");
    run->add_option("--k", config.k, "machine step budget (subst, heap)");
    run->add_option("--m", config.m, "state size budget (subst)");
    run->add_option("--kcap", config.kcap, "iteration cap (combined)");
    run->add_flag("--trace", config.trace, "emit per-step trace records");
    run->add_flag("--json", config.json_output, "machine-readable report");

    std::string kind;
    uint32_t n = 1;
    auto *gen = cli.add_subcommand("gen", "generate an example term");
    gen->add_option("kind", kind,
                    "size-explosion | pointer-explosion | church-nat | "
                    "church-bool")
        ->required();
    gen->add_option("n", n, "family parameter")->required();

    std::string compile_input;
    auto *comp = cli.add_subcommand("compile", "compile a term to a program");
    comp->add_option("term", compile_input, "term in surface syntax")
        ->required();

    std::string dump;
    auto *decomp =
        cli.add_subcommand("decompile", "decode a program dump to a term");
    decomp->add_option("program", dump, "tokens like 'L V0 R'")->required();

    size_t corpus_count = 100;
    uint64_t corpus_seed = 0xC0FFEE;
    uint64_t corpus_fuel = 500;
    unsigned corpus_jobs = 1;
    bool corpus_json = false;
    auto *corpus = cli.add_subcommand(
        "corpus", "run all strategies over a random corpus and compare");
    corpus->add_option("--count", corpus_count, "number of terms");
    corpus->add_option("--seed", corpus_seed, "generator seed");
    corpus->add_option("--fuel", corpus_fuel, "normalization bound");
    corpus->add_option("--jobs", corpus_jobs, "parallel workers");
    corpus->add_flag("--json", corpus_json, "machine-readable report");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return cli.exit(e);  // --help
        cli.exit(e);
        return kExitInputError;
    }

    try {
        if (run->parsed()) return cmd_run(input, config);
        if (gen->parsed()) return cmd_gen(kind, n);
        if (comp->parsed()) return cmd_compile(compile_input);
        if (decomp->parsed()) return cmd_decompile(dump);
        if (corpus->parsed())
            return cmd_corpus(corpus_count, corpus_seed, corpus_fuel,
                              corpus_jobs, corpus_json);
    } catch (const NotClosedError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

#include <doctest.h>

#include <random>

#include "lamvm/generators.hpp"
#include "lamvm/program.hpp"
#include "support.hpp"

using namespace lamvm;

namespace {
const Program id_body = {Command::var(0)};
const Program gamma_id = {Command::lam(), Command::var(0), Command::ret()};
}  // namespace

TEST_CASE("compile") {
    CHECK(compile(var(2)) == Program{Command::var(2)});
    CHECK(compile(lam(var(0))) == gamma_id);
    Program gamma_id_id = {Command::lam(), Command::var(0), Command::ret(),
                           Command::lam(), Command::var(0), Command::ret(),
                           Command::app()};
    CHECK(compile(app(lam(var(0)), lam(var(0)))) == gamma_id_id);
}

TEST_CASE("decompile") {
    auto t1 = decompile(gamma_id);
    REQUIRE(t1.has_value());
    CHECK(equal(*t1, lam(var(0))));

    auto t2 = decompile(Program{Command::var(3)});
    REQUIRE(t2.has_value());
    CHECK(equal(*t2, var(3)));

    CHECK_FALSE(decompile(Program{Command::app()}).has_value());
    Program lam_ret = {Command::lam(), Command::ret()};
    CHECK_FALSE(decompile(lam_ret).has_value());
    CHECK_FALSE(decompile(Program{Command::ret()}).has_value());
    CHECK_FALSE(decompile(Program{}).has_value());
}

TEST_CASE("decompile inverts compile on random terms") {
    std::mt19937_64 rng(11);
    RandomTermOptions options;
    options.max_depth = 10;
    options.free_bound = 3;
    for (int i = 0; i < 2000; ++i) {
        TermPtr s = random_term(rng, options);
        auto back = decompile(compile(s));
        REQUIRE(back.has_value());
        CHECK(equal(*back, s));
    }
}

TEST_CASE("program sizes") {
    CHECK(size_program(Program{Command::var(0)}) == 1);
    CHECK(size_program(gamma_id) == 3);
    CHECK(size_program(Program{}) == 0);
    CHECK(size_program(Program{Command::var(4)}) == 5);
}

TEST_CASE("compiled size is sandwiched by term size") {
    std::mt19937_64 rng(12);
    RandomTermOptions options;
    options.max_depth = 12;
    options.free_bound = 2;
    for (int i = 0; i < 2000; ++i) {
        TermPtr s = random_term(rng, options);
        if (size_term(s) > 200) continue;
        uint64_t term_size = size_term(s);
        uint64_t program_size = size_program(compile(s));
        CHECK(1 <= term_size);
        CHECK(term_size <= program_size);
        CHECK(program_size <= 2 * term_size - 1);
    }
}

TEST_CASE("jump target") {
    Program body_ret = {Command::var(0), Command::ret()};
    auto split = jump_target(body_ret);
    REQUIRE(split.has_value());
    CHECK(split->first == id_body);
    CHECK(split->second == Program{});

    Program nested_input = {Command::lam(), Command::var(0), Command::ret(),
                            Command::ret(), Command::app()};
    auto nested = jump_target(nested_input);
    REQUIRE(nested.has_value());
    CHECK(nested->first == gamma_id);
    CHECK(nested->second == Program{Command::app()});

    CHECK_FALSE(jump_target(Program{Command::var(0)}).has_value());
}

TEST_CASE("jump target splits compiled bodies exactly") {
    std::mt19937_64 rng(13);
    RandomTermOptions options;
    options.max_depth = 9;
    options.free_bound = 2;
    for (int i = 0; i < 1000; ++i) {
        TermPtr s = random_term(rng, options);
        Program body = compile(s);
        Program suffix = testsupport::random_program(rng, 6);
        std::vector<Command> joined(body.begin(), body.end());
        joined.push_back(Command::ret());
        joined.insert(joined.end(), suffix.begin(), suffix.end());
        auto split = jump_target(Program(std::move(joined)));
        REQUIRE(split.has_value());
        CHECK(split->first == body);
        CHECK(split->second == suffix);
    }
}

TEST_CASE("jump target components recombine to the input") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 1000; ++i) {
        Program p = testsupport::random_program(rng, 12);
        auto split = jump_target(p);
        if (!split) continue;
        std::vector<Command> recombined(split->first.begin(), split->first.end());
        recombined.push_back(Command::ret());
        recombined.insert(recombined.end(), split->second.begin(),
                          split->second.end());
        CHECK(Program(std::move(recombined)) == p);
    }
}

TEST_CASE("program substitution") {
    CHECK(subst_program(id_body, 0, gamma_id) == gamma_id);

    // gamma(\1)[0 := gamma(\0)] = gamma(\\0)
    Program q = compile(lam(var(0)));
    CHECK(subst_program(compile(lam(var(1))), 0, q) ==
          compile(subst_term(lam(var(1)), 0, lam(var(0)))));

    CHECK(subst_program(Program{}, 5, gamma_id) == Program{});

    // a Ret at depth zero truncates the rest
    Program ret_then_var = {Command::ret(), Command::var(9)};
    CHECK(subst_program(ret_then_var, 0, gamma_id) == Program{Command::ret()});
}

TEST_CASE("program substitution mirrors term substitution") {
    std::mt19937_64 rng(15);
    RandomTermOptions options;
    options.max_depth = 9;
    options.free_bound = 1;
    for (int i = 0; i < 1000; ++i) {
        TermPtr s = random_term(rng, options);
        TermPtr t = lam(random_term(rng, options));  // abstraction argument
        CHECK(subst_program(compile(s), 0, compile(t)) ==
              compile(subst_term(s, 0, t)));
    }
}

TEST_CASE("capped substitution stops at the size cap") {
    Program p = compile(lam(var(1)));
    Program q = compile(lam(var(0)));
    Program full = subst_program(p, 0, q);
    CHECK(subst_program_capped(p, 0, q, full.size()).has_value());
    CHECK_FALSE(subst_program_capped(p, 0, q, full.size() - 1).has_value());
}

TEST_CASE("represents") {
    CHECK(represents(id_body, lam(var(0))));
    CHECK_FALSE(represents(id_body, var(0)));
    CHECK(represents(gamma_id, lam(lam(var(0)))));
}

TEST_CASE("program dump round trip") {
    CHECK(dump_program(gamma_id) == "L V0 R");
    auto parsed = parse_program_dump("L V0 R");
    REQUIRE(parsed.has_value());
    CHECK(*parsed == gamma_id);
    CHECK(dump_program(Program{}) == "");
    CHECK_FALSE(parse_program_dump("L X R").has_value());

    std::mt19937_64 rng(16);
    for (int i = 0; i < 200; ++i) {
        Program p = testsupport::random_program(rng, 10);
        auto back = parse_program_dump(dump_program(p));
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
}

#include "lamvm/syntax.hpp"

#include <cctype>
#include <vector>

#include "lamvm/generators.hpp"

namespace lamvm {

namespace {

struct Parser {
    const std::string &text;
    size_t pos = 0;
    std::vector<std::string> binders;  // innermost last

    explicit Parser(const std::string &t) : text(t) {}

    [[noreturn]] void fail(const std::string &message, size_t at) {
        throw ParseError(message, at);
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            pos += 1;
    }

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    std::string read_ident() {
        skip_space();
        if (pos >= text.size() || !ident_start(text[pos]))
            fail("expected identifier", pos);
        size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) pos += 1;
        return text.substr(start, pos - start);
    }

    uint64_t read_nat() {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected number", pos);
        uint64_t n = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            n = n * 10 + uint64_t(text[pos] - '0');
            if (n > (1u << 24)) fail("number too large", pos);
            pos += 1;
        }
        return n;
    }

    void expect(char c) {
        skip_space();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'", pos);
        pos += 1;
    }

    bool atom_ahead() {
        char c = peek();
        return c == '(' || c == '#' || ident_start(c);
    }

    TermPtr parse_term() {
        if (peek() == '\\') {
            size_t at = pos;
            pos += 1;
            std::vector<std::string> names;
            names.push_back(read_ident());
            while (peek() != '.' ) {
                if (!ident_start(peek())) fail("expected binder or '.'", pos);
                names.push_back(read_ident());
            }
            expect('.');
            for (const std::string &name : names) {
                if (name == "true" || name == "false")
                    fail("keyword cannot be bound", at);
                binders.push_back(name);
            }
            TermPtr body = parse_term();
            for (size_t i = 0; i < names.size(); ++i) {
                binders.pop_back();
                body = lam(std::move(body));
            }
            return body;
        }
        TermPtr out = parse_atom();
        while (atom_ahead()) out = app(std::move(out), parse_atom());
        return out;
    }

    TermPtr parse_atom() {
        char c = peek();
        if (c == '(') {
            pos += 1;
            TermPtr inner = parse_term();
            expect(')');
            return inner;
        }
        if (c == '#') {
            pos += 1;
            return church_nat(static_cast<uint32_t>(read_nat()));
        }
        if (ident_start(c)) {
            size_t at = pos;
            std::string name = read_ident();
            if (name == "true") return church_bool(true);
            if (name == "false") return church_bool(false);
            for (size_t i = binders.size(); i > 0; --i) {
                if (binders[i - 1] == name)
                    return var(static_cast<uint32_t>(binders.size() - i));
            }
            fail("unbound variable '" + name + "'", at);
        }
        fail("expected term", pos);
    }
};

std::string binder_name(size_t depth) {
    static const char *names[] = {"x", "y", "z", "w", "v", "u",
                                  "s", "t", "r", "q", "p", "o"};
    constexpr size_t n = sizeof(names) / sizeof(names[0]);
    if (depth < n) return names[depth];
    return "x" + std::to_string(depth - n + 1);
}

// parenthesization: lambdas in either application position, applications in
// argument position
void print_named(const TermPtr &s, size_t depth, bool parens_app,
                 bool parens_lam, std::string &out) {
    switch (s->kind()) {
        case Term::Kind::Var: {
            size_t index = s->index();
            if (index < depth) {
                out += binder_name(depth - 1 - index);
            } else {
                out += "_" + std::to_string(index - depth);  // free index
            }
            return;
        }
        case Term::Kind::App: {
            if (parens_app) out += '(';
            print_named(s->fun(), depth, false, true, out);
            out += ' ';
            print_named(s->arg(), depth, true, true, out);
            if (parens_app) out += ')';
            return;
        }
        case Term::Kind::Lam: {
            if (parens_lam) out += '(';
            const Term *cursor = s.get();
            size_t binders = 0;
            while (cursor->kind() == Term::Kind::Lam) {
                out += '\\' + binder_name(depth + binders) + '.';
                cursor = cursor->body().get();
                binders += 1;
            }
            out += ' ';
            // reuse the shared_ptr chain to recurse on the innermost body
            const Term *walk = s.get();
            for (size_t i = 1; i < binders; ++i) walk = walk->body().get();
            print_named(walk->body(), depth + binders, false, false, out);
            if (parens_lam) out += ')';
            return;
        }
    }
}

void print_debruijn(const TermPtr &s, bool parens_app, bool parens_lam,
                    std::string &out) {
    switch (s->kind()) {
        case Term::Kind::Var:
            out += std::to_string(s->index());
            return;
        case Term::Kind::App:
            if (parens_app) out += '(';
            print_debruijn(s->fun(), false, true, out);
            out += ' ';
            print_debruijn(s->arg(), true, true, out);
            if (parens_app) out += ')';
            return;
        case Term::Kind::Lam:
            if (parens_lam) out += '(';
            out += "\xce\xbb";  // lambda
            print_debruijn(s->body(), false, false, out);
            if (parens_lam) out += ')';
            return;
    }
}

}  // namespace

TermPtr parse_term(const std::string &text) {
    Parser parser(text);
    TermPtr out = parser.parse_term();
    if (!parser.at_end()) parser.fail("trailing input", parser.pos);
    return out;
}

std::string print_term(const TermPtr &s, PrintStyle style) {
    std::string out;
    if (style == PrintStyle::Named) {
        print_named(s, 0, false, false, out);
    } else {
        print_debruijn(s, false, false, out);
    }
    return out;
}

}  // namespace lamvm

#include "lamvm/program.hpp"

#include <algorithm>
#include <sstream>

namespace lamvm {

namespace {

uint64_t sum_sizes(const std::vector<Command> &cmds) {
    uint64_t total = 0;
    for (const Command &c : cmds) total += c.size();
    return total;
}

}  // namespace

Program::Program(std::vector<Command> cmds) {
    size_ = sum_sizes(cmds);
    to_ = static_cast<uint32_t>(cmds.size());
    buf_ = std::make_shared<const std::vector<Command>>(std::move(cmds));
}

Program Program::drop_front() const {
    Program out = *this;
    out.size_ -= front().size();
    out.from_ += 1;
    return out;
}

Program Program::slice(size_t a, size_t b, uint64_t slice_size) const {
    Program out = *this;
    out.to_ = from_ + static_cast<uint32_t>(b);
    out.from_ += static_cast<uint32_t>(a);
    out.size_ = slice_size;
    return out;
}

bool Program::operator==(const Program &other) const {
    if (length() != other.length() || size_ != other.size_) return false;
    return std::equal(begin(), end(), other.begin());
}

namespace {

void emit(const TermPtr &s, std::vector<Command> &out) {
    switch (s->kind()) {
        case Term::Kind::Var:
            out.push_back(Command::var(s->index()));
            return;
        case Term::Kind::App:
            emit(s->fun(), out);
            emit(s->arg(), out);
            out.push_back(Command::app());
            return;
        case Term::Kind::Lam:
            out.push_back(Command::lam());
            emit(s->body(), out);
            out.push_back(Command::ret());
            return;
    }
}

}  // namespace

Program compile(const TermPtr &s) {
    std::vector<Command> cmds;
    cmds.reserve(s->size());
    emit(s, cmds);
    return Program(std::move(cmds));
}

std::optional<TermPtr> decompile(const Program &p) {
    uint32_t k = 0;
    std::vector<TermPtr> acc;
    for (const Command &c : p) {
        switch (c.op) {
            case Command::Op::Var:
                acc.push_back(var(c.index));
                break;
            case Command::Op::App: {
                if (acc.size() < 2) return std::nullopt;
                TermPtr t = std::move(acc.back());
                acc.pop_back();
                TermPtr s = std::move(acc.back());
                acc.pop_back();
                acc.push_back(app(std::move(s), std::move(t)));
                break;
            }
            case Command::Op::Lam:
                k += 1;
                break;
            case Command::Op::Ret: {
                if (k == 0 || acc.empty()) return std::nullopt;
                k -= 1;
                TermPtr s = std::move(acc.back());
                acc.pop_back();
                acc.push_back(lam(std::move(s)));
                break;
            }
        }
    }
    if (acc.size() != 1) return std::nullopt;
    return acc.front();
}

std::optional<std::pair<Program, Program>> jump_target(const Program &p) {
    uint32_t depth = 0;
    uint64_t body_size = 0;
    for (size_t i = 0; i < p.length(); ++i) {
        const Command &c = p[i];
        if (c.op == Command::Op::Ret) {
            if (depth == 0) {
                Program body = p.slice(0, i, body_size);
                Program rest = p.slice(i + 1, p.length(), p.size() - body_size - 1);
                return std::make_pair(std::move(body), std::move(rest));
            }
            depth -= 1;
        } else if (c.op == Command::Op::Lam) {
            depth += 1;
        }
        body_size += c.size();
    }
    return std::nullopt;
}

namespace {

// Shared walker for the two substitution variants. Returns false when the
// accumulated output size exceeds size_cap.
bool subst_into(const Program &p, uint32_t k, const Program &q,
                uint64_t size_cap, std::vector<Command> &out, uint64_t &out_size) {
    uint32_t depth = k;
    for (size_t i = 0; i < p.length(); ++i) {
        const Command &c = p[i];
        switch (c.op) {
            case Command::Op::Var:
                if (c.index == depth) {
                    out.insert(out.end(), q.begin(), q.end());
                    out_size += q.size();
                } else {
                    out.push_back(c);
                    out_size += c.size();
                }
                break;
            case Command::Op::Lam:
                depth += 1;
                out.push_back(c);
                out_size += 1;
                break;
            case Command::Op::App:
                out.push_back(c);
                out_size += 1;
                break;
            case Command::Op::Ret:
                // at depth 0 the rest of the program is discarded (Ret closes
                // an abstraction opened outside of p)
                out.push_back(c);
                out_size += 1;
                if (depth == 0) return out_size <= size_cap;
                depth -= 1;
                break;
        }
        if (out_size > size_cap) return false;
    }
    return true;
}

}  // namespace

Program subst_program(const Program &p, uint32_t k, const Program &q) {
    std::vector<Command> out;
    out.reserve(p.length());
    uint64_t out_size = 0;
    subst_into(p, k, q, UINT64_MAX, out, out_size);
    return Program(std::move(out));
}

std::optional<Program> subst_program_capped(const Program &p, uint32_t k,
                                            const Program &q, uint64_t size_cap) {
    std::vector<Command> out;
    out.reserve(p.length());
    uint64_t out_size = 0;
    if (!subst_into(p, k, q, size_cap, out, out_size)) return std::nullopt;
    return Program(std::move(out));
}

bool represents(const Program &p, const TermPtr &s) {
    if (s->kind() != Term::Kind::Lam) return false;
    return compile(s->body()) == p;
}

std::string dump_program(const Program &p) {
    std::string out;
    for (const Command &c : p) {
        if (!out.empty()) out += ' ';
        switch (c.op) {
            case Command::Op::Ret: out += 'R'; break;
            case Command::Op::Lam: out += 'L'; break;
            case Command::Op::App: out += 'A'; break;
            case Command::Op::Var: out += 'V' + std::to_string(c.index); break;
        }
    }
    return out;
}

std::optional<Program> parse_program_dump(const std::string &text) {
    std::vector<Command> cmds;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "R") {
            cmds.push_back(Command::ret());
        } else if (tok == "L") {
            cmds.push_back(Command::lam());
        } else if (tok == "A") {
            cmds.push_back(Command::app());
        } else if (tok.size() >= 2 && tok[0] == 'V') {
            uint64_t n = 0;
            for (size_t i = 1; i < tok.size(); ++i) {
                if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
                n = n * 10 + uint64_t(tok[i] - '0');
                if (n > UINT32_MAX) return std::nullopt;
            }
            cmds.push_back(Command::var(static_cast<uint32_t>(n)));
        } else {
            return std::nullopt;
        }
    }
    return Program(std::move(cmds));
}

}  // namespace lamvm

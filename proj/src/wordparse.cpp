#include "torsurg/wordparse.hpp"

#include "torsurg/errors.hpp"

#include <cctype>

namespace torsurg {

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& gens;
    std::size_t pos = 0;

    std::size_t col() const { return pos + 1; }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(col(), msg); }

    long long parse_int() {
        skip_ws();
        const std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer exponent");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw parse_error(start + 1, "exponent out of range");
            ++pos;
        }
        return neg ? -v : v;
    }

    Word parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected word");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            Word w = parse_word_inner();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return w;
        }
        if (c == '[') {
            ++pos;
            Word u = parse_word_inner();
            if (peek() != ',') fail("expected ','");
            ++pos;
            Word v = parse_word_inner();
            if (peek() != ']') fail("expected ']'");
            ++pos;
            return commutator(u, v);
        }
        if (c == '1') {
            ++pos;
            return {};
        }
        if (c >= 'a' && c <= 'z') {
            const std::size_t start = pos;
            ++pos;
            while (pos < text.size() && ((text[pos] >= 'a' && text[pos] <= 'z') ||
                                         (text[pos] >= '0' && text[pos] <= '9') ||
                                         text[pos] == '\''))
                ++pos;
            const std::string name = text.substr(start, pos - start);
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (gens[i] == name) return {make_letter(static_cast<int>(i), 1)};
            throw parse_error(start + 1, "undeclared generator '" + name + "'");
        }
        fail("expected word");
    }

    Word parse_term() {
        Word atom = parse_atom();
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            const long long e = parse_int();
            return pow(atom, e);
        }
        return atom;
    }

    Word parse_word_inner() {
        Word out = parse_term();
        for (;;) {
            skip_ws();
            if (pos >= text.size()) break;
            const char c = text[pos];
            if (c == '*') {
                ++pos;
                out = concat(out, parse_term());
                continue;
            }
            if (c == '(' || c == '[' || c == '1' || (c >= 'a' && c <= 'z')) {
                out = concat(out, parse_term());
                continue;
            }
            break;
        }
        return out;
    }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
    Parser p{text, generators};
    if (p.at_end()) throw parse_error(p.col(), "expected word");
    Word w = p.parse_word_inner();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return free_reduce(w);
}

std::string print_word(const Word& w, const std::vector<std::string>& generators) {
    return word_str(w, generators);
}

}  // namespace torsurg

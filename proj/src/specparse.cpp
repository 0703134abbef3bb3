#include <map>

#include "arcfact/groups.hpp"

namespace arcfact {

namespace {

using Family = GroupSpec::Family;

const std::map<std::string, Family>& family_names() {
    static const std::map<std::string, Family> names = {
        {"S", Family::S},         {"A", Family::A},
        {"C", Family::C},         {"D", Family::D},
        {"PSL2", Family::PSL2},   {"PGL2", Family::PGL2},
        {"PGammaL2", Family::PGammaL2},
        {"M11", Family::M11},     {"M12", Family::M12},
    };
    return names;
}

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }
    unsigned parse_uint() {
        skip_ws();
        std::size_t start = pos;
        unsigned long long v = 0;
        bool got = false;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            v = v * 10 + (text[pos] - '0');
            if (v > 0xFFFFFFFFull) throw parse_error("number too large", start);
            ++pos;
            got = true;
        }
        if (!got) throw parse_error("expected a number", pos);
        return static_cast<unsigned>(v);
    }
    std::string parse_word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum((unsigned char)text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected a name", pos);
        return text.substr(start, pos - start);
    }
    std::string parse_handle() {
        skip_ws();
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size() && (depth > 0 || (text[pos] != ',' && text[pos] != ')'))) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')') --depth;
            ++pos;
        }
        if (pos == start) throw parse_error("expected a subgroup handle", pos);
        return text.substr(start, pos - start);
    }

    GroupSpec parse_spec() {
        skip_ws();
        std::size_t start = pos;
        std::string word = parse_word();
        if (word == "wr") {
            GroupSpec s;
            s.family = Family::Wreath;
            expect('(');
            s.parts.push_back(parse_spec());
            expect(',');
            s.copies = parse_uint();
            expect(')');
            return s;
        }
        if (word == "dir") {
            GroupSpec s;
            s.family = Family::Direct;
            expect('(');
            s.parts.push_back(parse_spec());
            expect(',');
            s.parts.push_back(parse_spec());
            expect(')');
            return s;
        }
        if (word == "coset") {
            GroupSpec s;
            s.family = Family::Coset;
            expect('(');
            s.parts.push_back(parse_spec());
            expect(',');
            s.handle = parse_handle();
            expect(')');
            return s;
        }
        auto it = family_names().find(word);
        if (it == family_names().end())
            throw parse_error("unknown group family '" + word + "'", start);
        GroupSpec s;
        s.family = it->second;
        if (s.family == Family::M11 || s.family == Family::M12) return s;
        expect(':');
        s.n = parse_uint();
        return s;
    }
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    Parser p{text};
    GroupSpec s = p.parse_spec();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input after group spec", p.pos);
    return s;
}

std::string to_string(const GroupSpec& spec) {
    using F = Family;
    switch (spec.family) {
        case F::S: return "S:" + std::to_string(spec.n);
        case F::A: return "A:" + std::to_string(spec.n);
        case F::C: return "C:" + std::to_string(spec.n);
        case F::D: return "D:" + std::to_string(spec.n);
        case F::PSL2: return "PSL2:" + std::to_string(spec.n);
        case F::PGL2: return "PGL2:" + std::to_string(spec.n);
        case F::PGammaL2: return "PGammaL2:" + std::to_string(spec.n);
        case F::M11: return "M11";
        case F::M12: return "M12";
        case F::Wreath:
            return "wr(" + to_string(spec.parts.at(0)) + "," + std::to_string(spec.copies) + ")";
        case F::Direct:
            return "dir(" + to_string(spec.parts.at(0)) + "," + to_string(spec.parts.at(1)) + ")";
        case F::Coset:
            return "coset(" + to_string(spec.parts.at(0)) + "," + spec.handle + ")";
    }
    return "?";
}

}  // namespace arcfact

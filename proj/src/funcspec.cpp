#include "bfc/funcspec.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "bfc/errors.hpp"
#include "bfc/spectral.hpp"
#include "bfc/zoo.hpp"

namespace bfc {

namespace {

bool is_ident_char(char c) {
    return std::isalnum((unsigned char)c) || c == '_';
}

struct Parser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(size_t at, const std::string& what) const {
        throw domain_error("spec parse error at position " + std::to_string(at) +
                           ": " + what);
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool eat(char c) {
        if (peek() != c) return false;
        pos++;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(pos, std::string("expected '") + c + "'");
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++;
    }

    std::string ident() {
        size_t start = pos;
        while (pos < text.size() && is_ident_char(text[pos])) pos++;
        if (pos == start) fail(start, "expected a name");
        return text.substr(start, pos - start);
    }

    long long integer() {
        size_t start = pos;
        if (peek() == '-') pos++;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) pos++;
        if (pos == digits) fail(start, "expected an integer");
        try {
            return std::stoll(text.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            fail(start, "integer out of range");
        }
    }

    // does a `key=` follow?  distinguishes further zoo parameters from the
    // next argument of an enclosing compose/restrict after a comma
    bool at_key_value() const {
        size_t p = pos;
        while (p < text.size() &&
               (std::isalpha((unsigned char)text[p]) || text[p] == '_'))
            p++;
        return p > pos && p < text.size() && text[p] == '=';
    }

    FunctionSpec parse() {
        skip_ws();
        FunctionSpec s = expr();
        skip_ws();
        if (pos != text.size()) fail(pos, "unexpected trailing characters");
        return s;
    }

    FunctionSpec expr() {
        skip_ws();
        size_t head = pos;
        if (!(std::isalpha((unsigned char)peek()) || peek() == '_'))
            fail(head, "expected tt:, zoo:, compose(, negate( or restrict(");
        std::string word = ident();
        if (word == "tt" && peek() == ':') return table_spec(head);
        if (word == "zoo" && peek() == ':') return zoo_spec(head);
        if (word == "compose" && peek() == '(') {
            FunctionSpec s;
            s.kind = FunctionSpec::Kind::compose;
            expect('(');
            s.children.push_back(expr());
            skip_ws();
            expect(',');
            s.children.push_back(expr());
            skip_ws();
            expect(')');
            return s;
        }
        if (word == "negate" && peek() == '(') {
            FunctionSpec s;
            s.kind = FunctionSpec::Kind::negate;
            expect('(');
            s.children.push_back(expr());
            skip_ws();
            expect(')');
            return s;
        }
        if (word == "restrict" && peek() == '(') return restrict_spec();
        fail(head, "expected tt:, zoo:, compose(, negate( or restrict(");
    }

    FunctionSpec table_spec(size_t head) {
        expect(':');
        long long n = integer();
        expect(':');
        size_t hex_start = pos;
        while (pos < text.size() && std::isxdigit((unsigned char)text[pos])) pos++;
        if (pos == hex_start) fail(hex_start, "expected hex digits");
        FunctionSpec s;
        s.kind = FunctionSpec::Kind::table;
        try {
            s.table = TruthTable::parse("tt:" + std::to_string(n) + ":" +
                                        text.substr(hex_start, pos - hex_start));
        } catch (const domain_error& e) {
            fail(head, e.what());
        }
        return s;
    }

    FunctionSpec zoo_spec(size_t head) {
        expect(':');
        FunctionSpec s;
        s.kind = FunctionSpec::Kind::zoo;
        s.zoo_name = ident();
        if (eat(':')) {
            while (true) {
                size_t key_at = pos;
                if (!at_key_value()) fail(key_at, "expected key=value");
                std::string key = ident();
                for (const auto& [k, v] : s.zoo_params)
                    if (k == key) fail(key_at, "duplicate parameter \"" + key + "\"");
                expect('=');
                s.zoo_params.emplace_back(key, integer());
                if (peek() == ',' ) {
                    size_t comma = pos;
                    pos++;
                    if (!at_key_value()) {
                        pos = comma; // the comma belongs to an enclosing form
                        break;
                    }
                    continue;
                }
                break;
            }
        }
        std::sort(s.zoo_params.begin(), s.zoo_params.end());
        try {
            std::map<std::string, long long> m(s.zoo_params.begin(),
                                               s.zoo_params.end());
            (void)zoo_arity(s.zoo_name, m);
        } catch (const domain_error& e) {
            fail(head, e.what());
        }
        return s;
    }

    FunctionSpec restrict_spec() {
        FunctionSpec s;
        s.kind = FunctionSpec::Kind::restriction;
        expect('(');
        s.children.push_back(expr());
        skip_ws();
        expect(',');
        while (true) {
            skip_ws();
            size_t var_at = pos;
            long long var = integer();
            if (var < 1 || var > (1LL << 30))
                fail(var_at, "variable index out of range");
            for (const auto& [v, b] : s.assignments)
                if (v == var)
                    fail(var_at, "duplicate assignment to variable " +
                                     std::to_string(var));
            expect('=');
            size_t bit_at = pos;
            long long bit = integer();
            if (bit != 0 && bit != 1) fail(bit_at, "assignment bit must be 0 or 1");
            s.assignments.emplace_back((int)var, bit == 1);
            skip_ws();
            if (!eat(',')) break;
        }
        expect(')');
        std::sort(s.assignments.begin(), s.assignments.end());
        return s;
    }
};

TruthTable dense_of(const FunctionSpec& s, const Limits& lim) {
    FunctionHandle h = s.realize(lim);
    if (h.is_dense()) return std::move(*h.table);
    return materialize(*h.point, lim);
}

} // namespace

long long FunctionSpec::arity() const {
    switch (kind) {
    case Kind::table:
        return table.n();
    case Kind::zoo: {
        std::map<std::string, long long> m(zoo_params.begin(), zoo_params.end());
        return zoo_arity(zoo_name, m);
    }
    case Kind::compose: {
        long long outer = children[0].arity(), inner = children[1].arity();
        if (outer > 0 && inner > (1LL << 30) / outer)
            throw domain_error("compose: arity overflow (" +
                               std::to_string(outer) + " blocks of " +
                               std::to_string(inner) + " variables)");
        return outer * inner;
    }
    case Kind::negate:
        return children[0].arity();
    case Kind::restriction: {
        long long a = children[0].arity();
        for (const auto& [v, b] : assignments)
            if (v > a)
                throw domain_error("restrict: variable " + std::to_string(v) +
                                   " out of range for arity " +
                                   std::to_string(a));
        return a - (long long)assignments.size();
    }
    }
    throw internal_error("FunctionSpec::arity: bad kind");
}

std::string FunctionSpec::to_string() const {
    switch (kind) {
    case Kind::table:
        return table.to_spec();
    case Kind::zoo: {
        std::string out = "zoo:" + zoo_name;
        for (size_t i = 0; i < zoo_params.size(); i++)
            out += (i == 0 ? ":" : ",") + zoo_params[i].first + "=" +
                   std::to_string(zoo_params[i].second);
        return out;
    }
    case Kind::compose:
        return "compose(" + children[0].to_string() + "," +
               children[1].to_string() + ")";
    case Kind::negate:
        return "negate(" + children[0].to_string() + ")";
    case Kind::restriction: {
        std::string out = "restrict(" + children[0].to_string();
        for (const auto& [v, b] : assignments)
            out += "," + std::to_string(v) + "=" + (b ? "1" : "0");
        return out + ")";
    }
    }
    throw internal_error("FunctionSpec::to_string: bad kind");
}

FunctionHandle FunctionSpec::realize(const Limits& lim) const {
    switch (kind) {
    case Kind::table:
        return FunctionHandle::dense(table);
    case Kind::zoo: {
        std::map<std::string, long long> m(zoo_params.begin(), zoo_params.end());
        return make_zoo(zoo_name, m, lim).fn;
    }
    case Kind::compose:
        return FunctionHandle::dense(compose(dense_of(children[0], lim),
                                             dense_of(children[1], lim), lim));
    case Kind::negate:
        return FunctionHandle::dense(negate_inputs(dense_of(children[0], lim)));
    case Kind::restriction: {
        TruthTable f = dense_of(children[0], lim);
        std::vector<int> vars;
        for (const auto& [v, b] : assignments) {
            if (v > f.n())
                throw domain_error("restrict: variable " + std::to_string(v) +
                                   " out of range for arity " +
                                   std::to_string(f.n()));
            vars.push_back(v);
        }
        BitVector assign(f.n());
        for (const auto& [v, b] : assignments) assign.set(v - 1, b);
        return FunctionHandle::dense(
            restrict_function(f, Block::from_vars(f.n(), vars), assign));
    }
    }
    throw internal_error("FunctionSpec::realize: bad kind");
}

FunctionSpec parse_spec(const std::string& text) {
    Parser p{text};
    FunctionSpec s = p.parse();
    (void)s.arity(); // surfaces overflow and range problems up front
    return s;
}

FunctionHandle function_from_spec(const std::string& text, const Limits& lim) {
    return parse_spec(text).realize(lim);
}

} // namespace bfc

#include "bfc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bfc/errors.hpp"

namespace bfc {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.map.resize(n);
    for (int i = 0; i < n; i++) p.map[i] = i;
    return p;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(map.size(), false);
    for (int v : map) {
        if (v < 0 || v >= (int)map.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.map.resize(map.size());
    for (int i = 0; i < (int)map.size(); i++) p.map[map[i]] = i;
    return p;
}

Permutation Permutation::parse_cycles(int n, const std::string& text) {
    Permutation p = identity(n);
    std::vector<bool> used(n, false);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) i++; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw domain_error("Permutation::parse_cycles: expected '(' at position " +
                               std::to_string(i));
        i++;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i >= text.size())
                throw domain_error("Permutation::parse_cycles: unterminated cycle");
            if (text[i] == ')') { i++; break; }
            if (!std::isdigit((unsigned char)text[i]))
                throw domain_error("Permutation::parse_cycles: expected variable index at position " +
                                   std::to_string(i));
            int v = 0;
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
                v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > n)
                throw domain_error("Permutation::parse_cycles: variable " + std::to_string(v) +
                                   " outside 1.." + std::to_string(n));
            if (used[v - 1])
                throw domain_error("Permutation::parse_cycles: variable " +
                                   std::to_string(v) + " appears twice");
            used[v - 1] = true;
            cycle.push_back(v - 1);
        }
        for (size_t k = 0; k < cycle.size(); k++)
            p.map[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    if (!p.is_valid()) throw domain_error("Permutation::parse_cycles: not a bijection");
    return p;
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<bool> done(map.size(), false);
    bool any = false;
    for (int i = 0; i < (int)map.size(); i++) {
        if (done[i] || map[i] == i) { done[i] = true; continue; }
        out << '(';
        int j = i;
        bool first = true;
        while (!done[j]) {
            if (!first) out << ' ';
            out << (j + 1);
            done[j] = true;
            first = false;
            j = map[j];
        }
        out << ')';
        any = true;
    }
    return any ? out.str() : "()";
}

BitVector Permutation::apply_to_input(const BitVector& x) const {
    if (x.n() != (int)map.size())
        throw domain_error("Permutation::apply_to_input: arity mismatch");
    BitVector y(x.n());
    for (int j = 0; j < x.n(); j++)
        if (x.get(map[j])) y.set(j, true);
    return y;
}

bool orbit_transitive(const std::vector<Permutation>& gens, int n) {
    if (n <= 0) throw domain_error("orbit_transitive: n must be positive");
    for (const auto& g : gens) {
        if (g.n() != n) throw domain_error("orbit_transitive: generator arity mismatch");
        if (!g.is_valid()) throw domain_error("orbit_transitive: generator is not a bijection");
    }
    std::vector<Permutation> all = gens;
    for (const auto& g : gens) all.push_back(g.inverse());
    std::vector<bool> reach(n, false);
    std::vector<int> stack = {0};
    reach[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& g : all) {
            int u = g.map[v];
            if (!reach[u]) {
                reach[u] = true;
                count++;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

} // namespace bfc

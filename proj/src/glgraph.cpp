#include "bfc/glgraph.hpp"

#include <bit>

#include "bfc/errors.hpp"

namespace bfc {

CubeSubgraph::CubeSubgraph(int n_arity) : n(n_arity), member(1) {
    if (n < 0 || n > 30)
        throw domain_error("CubeSubgraph: arity out of range");
    member = PackedBits(uint64_t(1) << n);
}

CubeSubgraph CubeSubgraph::parse(const std::string& text) {
    if (text.rfind("vs:", 0) != 0)
        throw domain_error("CubeSubgraph::parse: expected \"vs:<n>:<hex>\"");
    size_t colon = text.find(':', 3);
    if (colon == std::string::npos)
        throw domain_error("CubeSubgraph::parse: missing second ':'");
    int n;
    try {
        size_t used = 0;
        n = std::stoi(text.substr(3, colon - 3), &used);
        if (used != colon - 3) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw domain_error("CubeSubgraph::parse: bad arity field");
    }
    if (n < 0 || n > 30)
        throw domain_error("CubeSubgraph::parse: arity out of range");
    CubeSubgraph g(n);
    g.member = PackedBits::from_hex(uint64_t(1) << n, text.substr(colon + 1));
    return g;
}

std::string CubeSubgraph::to_spec() const {
    return "vs:" + std::to_string(n) + ":" + member.to_hex();
}

CubeSubgraph function_to_subgraph(const TruthTable& f) {
    CubeSubgraph g(f.n());
    for (uint64_t x = 0; x < g.size(); x++)
        g.member.set(x, ((int)f.get(x) + std::popcount(x)) % 2 == 0);
    return g;
}

TruthTable subgraph_to_function(const CubeSubgraph& g) {
    TruthTable f(g.n);
    for (uint64_t x = 0; x < g.size(); x++)
        f.set(x, (std::popcount(x) & 1) ^ (g.contains(x) ? 0 : 1));
    return f;
}

int side_degree(const CubeSubgraph& g, uint64_t v) {
    bool side = g.contains(v);
    int d = 0;
    for (int i = 0; i < g.n; i++)
        d += g.contains(v ^ (uint64_t(1) << i)) == side;
    return d;
}

int gamma(const CubeSubgraph& g) {
    int best = 0;
    int64_t size = (int64_t)g.size();
#pragma omp parallel for reduction(max : best) schedule(static)
    for (int64_t v = 0; v < size; v++)
        best = std::max(best, side_degree(g, (uint64_t)v));
    return best;
}

bool balanced(const CubeSubgraph& g) {
    return g.n >= 1 && g.vertex_count() == g.size() / 2;
}

} // namespace bfc

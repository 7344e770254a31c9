#include "bfc/zoo.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "bfc/errors.hpp"

namespace bfc {

namespace {

long long need_param(const std::map<std::string, long long>& ps,
                     const std::string& who, const std::string& key) {
    auto it = ps.find(key);
    if (it == ps.end())
        throw domain_error("zoo:" + who + ": missing parameter " + key);
    return it->second;
}

long long opt_param(const std::map<std::string, long long>& ps,
                    const std::string& key, long long fallback) {
    auto it = ps.find(key);
    return it == ps.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, long long>& ps,
                    const std::string& who,
                    std::initializer_list<const char*> allowed) {
    for (const auto& [key, v] : ps) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw domain_error("zoo:" + who + ": unknown parameter " + key);
    }
}

void check_table_arity(const std::string& who, long long n) {
    if (n > 30)
        throw limit_error("zoo:" + who + ": arity " + std::to_string(n) +
                          " too large for a dense table");
}

ZooClaim exact_claim(std::string measure, long long v, std::string note = "") {
    return {std::move(measure), v, false, std::move(note)};
}

ZooClaim asym_claim(std::string measure, std::string note) {
    return {std::move(measure), 0, true, std::move(note)};
}

// one group of a k^2-variable input, as stored in a table index word
uint64_t group_bits(uint64_t x, int i, int k) {
    return (x >> (i * k)) & ((uint64_t(1) << k) - 1);
}

bool group_is_adjacent_pair(uint64_t c, int k) {
    for (int j = 0; j + 1 < k; j++)
        if (c == (uint64_t(3) << j)) return true;
    return false;
}

// fixed symbols of the k^2-long pattern, as (offset, bit) pairs; the
// unconstrained slots are simply absent
std::vector<std::pair<long long, bool>> chakraborty_fixed(int k) {
    if (k < 8) throw domain_error("zoo:chakraborty: k must be >= 8");
    std::vector<std::pair<long long, bool>> fixed;
    long long pos = 0;
    auto ones = [&](int c) { while (c--) fixed.emplace_back(pos++, true); };
    auto zeros = [&](int c) { while (c--) fixed.emplace_back(pos++, false); };
    auto skip = [&](int c) { pos += c; };
    ones(2);
    zeros(k - 2);
    for (int r = 0; r < k - 2; r++) {
        ones(5);
        skip(k - 5);
    }
    ones(5);
    skip(k - 8);
    ones(3);
    if (pos != (long long)k * k)
        throw internal_error("zoo:chakraborty: pattern length " +
                             std::to_string(pos) + " != k^2");
    return fixed;
}

long long pw(long long base, int e) {
    long long r = 1;
    while (e--) r *= base;
    return r;
}

} // namespace

std::string ZooFunction::spec_string() const {
    std::string s = "zoo:" + name;
    char sep = ':';
    for (const auto& [key, v] : params) {
        s += sep;
        s += key + "=" + std::to_string(v);
        sep = ',';
    }
    return s;
}

std::vector<ZooInfo> zoo_list() {
    return {
        {"parity", "n >= 1", "XOR of all n inputs"},
        {"and", "n >= 1", "1 only on the all-ones input"},
        {"or", "n >= 1", "0 only on the all-zero input"},
        {"and_of_ors", "k >= 1 (n = k^2)",
         "AND of k ORs over k disjoint groups of k"},
        {"rubinstein", "k >= 2 (n = k^2)",
         "1 iff some group of k is exactly one adjacent pair of 1s"},
        {"kushilevitz", "levels >= 1 (n = 6^levels)",
         "the 6-variable degree-3 function, composed with itself"},
        {"chakraborty", "k >= 8, n >= k^2 (default n = k^3)",
         "1 iff some cyclic rotation matches a fixed k^2-long pattern"},
    };
}

TruthTable parity_table(int n) {
    if (n < 1) throw domain_error("zoo:parity: n must be >= 1");
    check_table_arity("parity", n);
    TruthTable t(n);
    for (uint64_t x = 0; x < t.size(); x++) t.set(x, std::popcount(x) & 1);
    return t;
}

TruthTable and_table(int n) {
    if (n < 1) throw domain_error("zoo:and: n must be >= 1");
    check_table_arity("and", n);
    TruthTable t(n);
    t.set(t.size() - 1, true);
    return t;
}

TruthTable or_table(int n) {
    if (n < 1) throw domain_error("zoo:or: n must be >= 1");
    check_table_arity("or", n);
    TruthTable t(n);
    for (uint64_t x = 1; x < t.size(); x++) t.set(x, true);
    return t;
}

TruthTable and_of_ors_table(int k) {
    if (k < 1) throw domain_error("zoo:and_of_ors: k must be >= 1");
    check_table_arity("and_of_ors", (long long)k * k);
    TruthTable t(k * k);
    for (uint64_t x = 0; x < t.size(); x++) {
        bool all = true;
        for (int i = 0; i < k && all; i++) all = group_bits(x, i, k) != 0;
        t.set(x, all);
    }
    return t;
}

TruthTable rubinstein_table(int k) {
    if (k < 2) throw domain_error("zoo:rubinstein: k must be >= 2");
    check_table_arity("rubinstein", (long long)k * k);
    TruthTable t(k * k);
    for (uint64_t x = 0; x < t.size(); x++) {
        bool any = false;
        for (int i = 0; i < k && !any; i++)
            any = group_is_adjacent_pair(group_bits(x, i, k), k);
        t.set(x, any);
    }
    return t;
}

PointFunction and_of_ors_point(int k) {
    if (k < 1) throw domain_error("zoo:and_of_ors: k must be >= 1");
    PointFunction p;
    p.n = k * k;
    p.eval = [k](const BitVector& x) {
        for (int i = 0; i < k; i++) {
            bool any = false;
            for (int j = 0; j < k && !any; j++) any = x.get(i * k + j);
            if (!any) return false;
        }
        return true;
    };
    return p;
}

PointFunction rubinstein_point(int k) {
    if (k < 2) throw domain_error("zoo:rubinstein: k must be >= 2");
    PointFunction p;
    p.n = k * k;
    p.eval = [k](const BitVector& x) {
        for (int i = 0; i < k; i++) {
            int count = 0, lo = -1, hi = -1;
            for (int j = 0; j < k; j++)
                if (x.get(i * k + j)) {
                    if (lo < 0) lo = j;
                    hi = j;
                    count++;
                }
            if (count == 2 && hi == lo + 1) return true;
        }
        return false;
    };
    return p;
}

TruthTable kushilevitz_table() {
    static const int cubic[10][3] = {{1, 3, 4}, {1, 2, 5}, {1, 4, 5}, {2, 3, 4},
                                     {2, 3, 5}, {1, 2, 6}, {1, 3, 6}, {2, 4, 6},
                                     {3, 5, 6}, {4, 5, 6}};
    TruthTable t(6);
    for (uint64_t x = 0; x < 64; x++) {
        long long w = std::popcount(x);
        long long v = w - w * (w - 1) / 2;
        for (const auto& m : cubic) {
            uint64_t mask = 0;
            for (int z : m) mask |= uint64_t(1) << (z - 1);
            if ((x & mask) == mask) v++;
        }
        if (v != 0 && v != 1)
            throw internal_error(
                "zoo:kushilevitz: polynomial value " + std::to_string(v) +
                " at input " + std::to_string(x) + " is not Boolean");
        t.set(x, v == 1);
    }
    return t;
}

PointFunction chakraborty_point(int k, long long n) {
    auto fixed = chakraborty_fixed(k);
    if (n < (long long)k * k)
        throw domain_error("zoo:chakraborty: n must be >= k^2");
    if (n > (1LL << 30))
        throw limit_error("zoo:chakraborty: n too large");
    PointFunction p;
    p.n = (int)n;
    p.eval = [fixed, n](const BitVector& x) {
        for (long long i = 0; i < n; i++) {
            bool match = true;
            for (const auto& [off, bit] : fixed) {
                long long j = i + off;
                if (j >= n) j -= n;
                if (x.get((int)j) != bit) {
                    match = false;
                    break;
                }
            }
            if (match) return true;
        }
        return false;
    };
    return p;
}

BitVector chakraborty_witness(int k, long long n) {
    auto fixed = chakraborty_fixed(k);
    if (n < (long long)k * k)
        throw domain_error("zoo:chakraborty: n must be >= k^2");
    BitVector w((int)n);
    for (const auto& [off, bit] : fixed) w.set((int)off, bit);
    return w;
}

long long zoo_arity(const std::string& name,
                    const std::map<std::string, long long>& params) {
    if (name == "parity" || name == "and" || name == "or") {
        reject_unknown(params, name, {"n"});
        long long n = need_param(params, name, "n");
        if (n < 1) throw domain_error("zoo:" + name + ": n must be >= 1");
        if (n > (1LL << 30)) throw limit_error("zoo:" + name + ": n too large");
        return n;
    }
    if (name == "and_of_ors" || name == "rubinstein") {
        reject_unknown(params, name, {"k"});
        long long k = need_param(params, name, "k");
        long long kmin = name == "rubinstein" ? 2 : 1;
        if (k < kmin)
            throw domain_error("zoo:" + name + ": k must be >= " +
                               std::to_string(kmin));
        if (k > (1 << 15)) throw limit_error("zoo:" + name + ": k too large");
        return k * k;
    }
    if (name == "kushilevitz") {
        reject_unknown(params, name, {"levels"});
        long long levels = opt_param(params, "levels", 1);
        if (levels < 1)
            throw domain_error("zoo:kushilevitz: levels must be >= 1");
        if (levels > 15)
            throw limit_error("zoo:kushilevitz: levels too large");
        return pw(6, (int)levels);
    }
    if (name == "chakraborty") {
        reject_unknown(params, name, {"k", "n"});
        long long k = need_param(params, name, "k");
        if (k < 8) throw domain_error("zoo:chakraborty: k must be >= 8");
        if (k > 1024) throw limit_error("zoo:chakraborty: k too large");
        long long n = opt_param(params, "n", k * k * k);
        if (n < k * k)
            throw domain_error("zoo:chakraborty: n must be >= k^2");
        if (n > (1LL << 30))
            throw limit_error("zoo:chakraborty: n too large");
        return n;
    }
    throw domain_error("zoo: unknown function " + name);
}

ZooFunction make_zoo(const std::string& name,
                     const std::map<std::string, long long>& params,
                     const Limits& lim) {
    ZooFunction z;
    z.name = name;

    auto simple = [&](long long n, TruthTable (*tbl)(int),
                      std::function<bool(const BitVector&)> ev) {
        if (n <= lim.dense) {
            z.fn = FunctionHandle::dense(tbl((int)n));
        } else {
            PointFunction p;
            p.n = (int)n;
            p.eval = std::move(ev);
            z.fn = FunctionHandle::sparse(p);
        }
    };

    if (name == "parity") {
        reject_unknown(params, name, {"n"});
        long long n = need_param(params, name, "n");
        if (n < 1) throw domain_error("zoo:parity: n must be >= 1");
        if (n > (1LL << 30)) throw limit_error("zoo:parity: n too large");
        z.params = {{"n", n}};
        simple(n, parity_table,
               [](const BitVector& x) { return x.popcount() & 1; });
        z.claims = {exact_claim("s", n),   exact_claim("bs", n),
                    exact_claim("C", n),   exact_claim("D", n),
                    exact_claim("deg", n), exact_claim("degf2", 1),
                    exact_claim("dpar", 1, "one parity query decides")};
    } else if (name == "and" || name == "or") {
        reject_unknown(params, name, {"n"});
        long long n = need_param(params, name, "n");
        if (n < 1) throw domain_error("zoo:" + name + ": n must be >= 1");
        if (n > (1LL << 30)) throw limit_error("zoo:" + name + ": n too large");
        z.params = {{"n", n}};
        bool is_and = name == "and";
        simple(n, is_and ? and_table : or_table,
               [is_and, n](const BitVector& x) {
                   return is_and ? x.popcount() == n : x.any();
               });
        z.claims = {exact_claim("s", n),     exact_claim("bs", n),
                    exact_claim("C", n),     exact_claim("D", n),
                    exact_claim("deg", n),   exact_claim("degf2", n),
                    exact_claim("dpar", n, "full mod-2 degree forces depth n")};
    } else if (name == "and_of_ors") {
        reject_unknown(params, name, {"k"});
        long long k = need_param(params, name, "k");
        if (k < 1) throw domain_error("zoo:and_of_ors: k must be >= 1");
        if (k > (1 << 15)) throw limit_error("zoo:and_of_ors: k too large");
        long long n = k * k;
        z.params = {{"k", k}};
        if (n <= lim.dense)
            z.fn = FunctionHandle::dense(and_of_ors_table((int)k));
        else
            z.fn = FunctionHandle::sparse(and_of_ors_point((int)k));
        z.claims = {exact_claim("s", k),       exact_claim("bs", k),
                    exact_claim("C", k),       exact_claim("D", n),
                    exact_claim("deg", n),     exact_claim("degf2", n),
                    exact_claim("dpar", n, "full mod-2 degree forces depth n")};
    } else if (name == "rubinstein") {
        reject_unknown(params, name, {"k"});
        long long k = need_param(params, name, "k");
        if (k < 2) throw domain_error("zoo:rubinstein: k must be >= 2");
        if (k > (1 << 15)) throw limit_error("zoo:rubinstein: k too large");
        z.params = {{"k", k}};
        if (k * k <= lim.dense)
            z.fn = FunctionHandle::dense(rubinstein_table((int)k));
        else
            z.fn = FunctionHandle::sparse(rubinstein_point((int)k));
        // profiles of the two smallest instances, from exhaustive search
        if (k == 2)
            z.claims = {exact_claim("s", 2), exact_claim("bs", 2),
                        exact_claim("C", 2), exact_claim("D", 4),
                        exact_claim("deg", 4)};
        else if (k == 3)
            z.claims = {exact_claim("s", 6), exact_claim("bs", 6),
                        exact_claim("C", 6), exact_claim("D", 9),
                        exact_claim("deg", 9)};
        else
            z.claims = {asym_claim("s", "grows as 2k = 2*sqrt(n)"),
                        asym_claim("bs", "grows as k*floor(k/2), linear in n")};
    } else if (name == "kushilevitz") {
        reject_unknown(params, name, {"levels"});
        long long levels = opt_param(params, "levels", 1);
        if (levels < 1)
            throw domain_error("zoo:kushilevitz: levels must be >= 1");
        if (levels > 15)
            throw limit_error("zoo:kushilevitz: levels too large");
        z.params = {{"levels", levels}};
        TruthTable h = kushilevitz_table();
        TruthTable f = h;
        for (long long i = 1; i < levels; i++) f = compose(f, h, lim);
        z.fn = FunctionHandle::dense(std::move(f));
        long long n = pw(6, (int)levels), d = pw(3, (int)levels);
        z.claims = {exact_claim("s", n),  exact_claim("bs", n),
                    exact_claim("C", n),  exact_claim("D", n),
                    exact_claim("deg", d, "degree 3 per level")};
    } else if (name == "chakraborty") {
        reject_unknown(params, name, {"k", "n"});
        long long k = need_param(params, name, "k");
        if (k < 8) throw domain_error("zoo:chakraborty: k must be >= 8");
        if (k > 1024) throw limit_error("zoo:chakraborty: k too large");
        long long n = opt_param(params, "n", k * k * k);
        z.params = {{"k", k}, {"n", n}};
        z.fn = FunctionHandle::sparse(chakraborty_point((int)k, n));
        z.claims = {asym_claim("s", "n^(1/3) at n = k^3"),
                    asym_claim("bs", "n^(2/3) at n = k^3"),
                    asym_claim("C", "n^(2/3) at n = k^3")};
    } else {
        throw domain_error("zoo: unknown function " + name);
    }
    return z;
}

ZooVerification verify_zoo(const ZooFunction& z, const Limits& lim) {
    ZooVerification out;

    std::vector<std::string> names;
    for (const auto& c : z.claims)
        if (!c.asymptotic &&
            std::find(names.begin(), names.end(), c.measure) == names.end())
            names.push_back(c.measure);

    if (!names.empty()) {
        MeasureReport rep = compute_measures(z.fn, names, lim);
        for (const auto& c : z.claims) {
            if (c.asymptotic) continue;
            ClaimCheck cc;
            cc.measure = c.measure;
            cc.expected = c.expected;
            const MeasureValue* got = rep.find(c.measure);
            if (!got)
                throw internal_error("verify_zoo: no result for " + c.measure);
            cc.got = *got;
            if (got->exact)
                cc.status = got->value == c.expected ? "pass" : "fail";
            else
                cc.status = got->lo <= c.expected && c.expected <= got->hi
                                ? "window-pass"
                                : "window-fail";
            out.all_ok = out.all_ok &&
                         (cc.status == "pass" || cc.status == "window-pass");
            out.checks.push_back(std::move(cc));
        }
    }

    auto param = [&](const std::string& key) {
        for (const auto& [k, v] : z.params)
            if (k == key) return v;
        throw internal_error("verify_zoo: missing parameter " + key);
    };

    if (z.name == "kushilevitz") {
        bool ok = true;
        try {
            (void)kushilevitz_table();
        } catch (const std::exception&) {
            ok = false;
        }
        out.extra.emplace_back("polynomial is Boolean on all 64 inputs", ok);
    }

    if (z.name == "rubinstein" || z.name == "and_of_ors") {
        long long k = param("k");
        if (k <= 4 && k >= (z.name == "rubinstein" ? 2 : 1)) {
            TruthTable t = z.name == "rubinstein" ? rubinstein_table((int)k)
                                                  : and_of_ors_table((int)k);
            PointFunction p = z.name == "rubinstein"
                                  ? rubinstein_point((int)k)
                                  : and_of_ors_point((int)k);
            bool agree = true;
            for (uint64_t x = 0; x < t.size() && agree; x++)
                agree = t.get(x) == p(BitVector::from_word(t.n(), x));
            out.extra.emplace_back("table and evaluator forms agree", agree);
        }
    }

    if (z.name == "chakraborty") {
        long long k = param("k"), n = param("n");
        const PointFunction& p = *z.fn.point;
        out.extra.emplace_back("pattern witness evaluates to 1",
                               p(chakraborty_witness((int)k, n)));
        out.extra.emplace_back("all-zero input evaluates to 0",
                               !p(BitVector((int)n)));
        Permutation rot;
        rot.map.resize(n);
        for (long long j = 0; j < n; j++) rot.map[j] = (int)((j + 1) % n);
        out.extra.emplace_back(
            "invariant under cyclic shift (sampled)",
            is_invariant_sampled(p, rot, lim.invariance_samples));
        out.extra.emplace_back("shift generates a transitive group",
                               orbit_transitive({rot}, (int)n));
    }

    for (const auto& [what, ok] : out.extra) out.all_ok = out.all_ok && ok;
    return out;
}

} // namespace bfc

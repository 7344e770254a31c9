#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bfc/analytic.hpp"
#include "bfc/errors.hpp"
#include "bfc/explorer.hpp"
#include "bfc/funcspec.hpp"
#include "bfc/function.hpp"
#include "bfc/glgraph.hpp"
#include "bfc/lattice.hpp"
#include "bfc/limits.hpp"
#include "bfc/measures.hpp"
#include "bfc/permutation.hpp"
#include "bfc/spectral.hpp"
#include "bfc/zoo.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { json, plain, csv };

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!s.empty()) out.push_back(cur);
    return out;
}

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw bfc::domain_error(what + ": bad integer \"" + s + "\"");
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

bfc::TruthTable dense_from(const bfc::FunctionHandle& h, const bfc::Limits& lim) {
    if (h.is_dense()) return *h.table;
    return bfc::materialize(*h.point, lim);
}

std::string bits_of(int n, uint64_t x) {
    return bfc::BitVector::from_word(n, x).to_string();
}

ordered_json measure_json(const bfc::MeasureValue& v) {
    ordered_json j;
    if (v.exact) {
        j["exact"] = v.value;
    } else {
        j["lo"] = v.lo;
        j["hi"] = v.hi;
        j["reason"] = v.reason;
    }
    return j;
}

ordered_json exact_int(const boost::multiprecision::cpp_int& v) {
    static const boost::multiprecision::cpp_int lo =
        std::numeric_limits<long long>::min();
    static const boost::multiprecision::cpp_int hi =
        std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str(); // exact decimal string once 64-bit JSON integers run out
}

ordered_json rational_json(const bfc::Rational& r) {
    ordered_json j;
    j["num"] = exact_int(boost::multiprecision::numerator(r));
    j["den"] = exact_int(boost::multiprecision::denominator(r));
    return j;
}

std::string rational_str(const bfc::Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---- measures ----

struct MeasuresOpts {
    std::string fn, set, at;
};

int run_measures(const MeasuresOpts& o, Format fmt, const bfc::Limits& lim) {
    bfc::FunctionSpec spec = bfc::parse_spec(o.fn);
    bfc::FunctionHandle h = spec.realize(lim);
    std::vector<std::string> names = o.set.empty()
                                         ? std::vector<std::string>{}
                                         : split(o.set, ',');
    std::vector<std::pair<std::string, bfc::MeasureValue>> entries;

    ordered_json out;
    out["fn"] = spec.to_string();
    out["n"] = h.n;

    if (!o.at.empty()) {
        bfc::BitVector x = bfc::BitVector::parse(h.n, o.at);
        out["at"] = x.to_string();
        if (names.empty())
            names = h.is_dense() ? std::vector<std::string>{"s", "bs", "C"}
                                 : std::vector<std::string>{"s"};
        for (const auto& name : names) {
            if (name == "s") {
                int v = h.is_dense() ? bfc::sensitivity_at(*h.table, x.word())
                                     : bfc::sensitivity_at(*h.point, x);
                entries.emplace_back(name, bfc::MeasureValue::of(v));
            } else if (name == "bs" && h.is_dense()) {
                entries.emplace_back(
                    name, bfc::block_sensitivity_at(*h.table, x.word(), lim));
            } else if (name == "C" && h.is_dense()) {
                entries.emplace_back(
                    name, bfc::certificate_at(*h.table, x.word(), lim).size);
            } else if (name == "bs" || name == "C") {
                entries.emplace_back(
                    name, bfc::MeasureValue::window(
                              0, h.n, "only point evaluation available"));
            } else {
                throw bfc::domain_error(
                    "measures: --at supports s, bs, C (got \"" + name + "\")");
            }
        }
    } else {
        entries = bfc::compute_measures(h, names, lim).entries;
    }

    bool windowed = false;
    ordered_json ms = ordered_json::object();
    for (const auto& [name, v] : entries) {
        ms[name] = measure_json(v);
        windowed = windowed || !v.exact;
    }
    out["measures"] = ms;

    if (fmt == Format::plain) {
        for (const auto& [name, v] : entries) {
            std::string val = v.exact ? std::to_string(v.value)
                                      : std::to_string(v.lo) + ".." +
                                            std::to_string(v.hi);
            if (entries.size() == 1)
                std::cout << val << "\n";
            else
                std::cout << name << " " << val << "\n";
        }
    } else if (fmt == Format::csv) {
        std::cout << "measure,lo,hi\n";
        for (const auto& [name, v] : entries)
            std::cout << name << "," << v.lo << "," << v.hi << "\n";
    } else {
        print_json(out);
    }
    return windowed ? 2 : 0;
}

// ---- spectrum ----

struct SpectrumOpts {
    std::string fn, values = "pm";
    bool min_c = false, l1 = false, support = false;
};

int run_spectrum(const SpectrumOpts& o, Format fmt, const bfc::Limits& lim) {
    bfc::FunctionSpec spec = bfc::parse_spec(o.fn);
    bfc::TruthTable t = dense_from(spec.realize(lim), lim);
    bfc::Values conv = bfc::parse_values(o.values);
    bfc::FourierSpectrum sp = bfc::fourier_transform(t, conv);

    ordered_json out;
    out["fn"] = spec.to_string();
    out["n"] = t.n();
    out["values"] = conv == bfc::Values::plus_minus ? "pm" : "01";

    if (o.min_c) {
        ordered_json m;
        m["num"] = sp.min_nonzero_abs();
        m["log2den"] = t.n();
        out["min"] = m;
        if (fmt == Format::plain)
            std::cout << sp.min_nonzero_abs() << "/2^" << t.n() << "\n";
        else if (fmt == Format::csv)
            std::cout << "num,log2den\n"
                      << sp.min_nonzero_abs() << "," << t.n() << "\n";
        else
            print_json(out);
        return 0;
    }
    if (o.l1) {
        ordered_json m;
        m["num"] = sp.l1_numerator();
        m["log2den"] = t.n();
        out["l1"] = m;
        if (fmt == Format::plain)
            std::cout << sp.l1_numerator() << "/2^" << t.n() << "\n";
        else if (fmt == Format::csv)
            std::cout << "num,log2den\n"
                      << sp.l1_numerator() << "," << t.n() << "\n";
        else
            print_json(out);
        return 0;
    }
    if (o.support) {
        out["sparsity"] = sp.sparsity();
        ordered_json masks = ordered_json::array();
        for (uint64_t S = 0; S < (uint64_t(1) << t.n()); S++)
            if (sp.a[S] != 0) masks.push_back(S);
        out["support"] = masks;
        if (fmt == Format::plain) {
            for (size_t i = 0; i < masks.size(); i++)
                std::cout << (i ? " " : "") << masks[i].get<uint64_t>();
            std::cout << "\n";
        } else if (fmt == Format::csv) {
            std::cout << "S\n";
            for (const auto& m : masks) std::cout << m.get<uint64_t>() << "\n";
        } else {
            print_json(out);
        }
        return 0;
    }

    out["sparsity"] = sp.sparsity();
    ordered_json coeffs = ordered_json::array();
    for (uint64_t S = 0; S < (uint64_t(1) << t.n()); S++) {
        if (sp.a[S] == 0) continue;
        ordered_json c;
        c["S"] = S;
        c["num"] = sp.a[S];
        c["log2den"] = t.n();
        coeffs.push_back(c);
    }
    out["coefficients"] = coeffs;
    if (fmt == Format::plain) {
        for (const auto& c : coeffs)
            std::cout << c["S"].get<uint64_t>() << " "
                      << c["num"].get<long long>() << "/2^" << t.n() << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "S,num,log2den\n";
        for (const auto& c : coeffs)
            std::cout << c["S"].get<uint64_t>() << ","
                      << c["num"].get<long long>() << "," << t.n() << "\n";
    } else {
        print_json(out);
    }
    return 0;
}

// ---- rank ----

struct RankOpts {
    std::string fn, op, values = "pm";
    bool exact = false;
};

int run_rank(const RankOpts& o, Format fmt, const bfc::Limits& lim) {
    bfc::FunctionSpec spec = bfc::parse_spec(o.fn);
    bfc::TruthTable t = dense_from(spec.realize(lim), lim);
    bfc::Combiner op = bfc::parse_combiner(o.op);
    bfc::Values conv = bfc::parse_values(o.values);
    bfc::RankResult r = bfc::comm_rank(t, op, conv, lim, o.exact);

    if (fmt == Format::plain) {
        std::cout << r.rank << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "rank,method\n" << r.rank << "," << r.method << "\n";
    } else {
        ordered_json out;
        out["fn"] = spec.to_string();
        out["n"] = t.n();
        out["op"] = o.op;
        out["values"] = conv == bfc::Values::plus_minus ? "pm" : "01";
        out["rank"] = r.rank;
        out["method"] = r.method;
        print_json(out);
    }
    return 0;
}

// ---- shi ----

struct ShiOpts {
    std::string fn, line, t;
    bool sweep = false;
    int grid = 32;
};

int run_shi(const ShiOpts& o, Format fmt, const bfc::Limits& lim) {
    if (fmt == Format::csv) throw bfc::domain_error("shi: no CSV form");
    bfc::FunctionSpec spec = bfc::parse_spec(o.fn);
    bfc::TruthTable t = dense_from(spec.realize(lim), lim);

    ordered_json out;
    out["fn"] = spec.to_string();
    out["n"] = t.n();

    if (o.line.empty()) {
        bfc::SweepResult sr = bfc::sup_derivative_sweep(t, o.grid, lim);
        out["grid"] = o.grid;
        out["sup"] = rational_json(sr.value);
        ordered_json w;
        w["a"] = bits_of(t.n(), sr.a);
        w["b"] = bits_of(t.n(), sr.b);
        long long g = std::gcd(sr.tnum, sr.tden);
        ordered_json tv;
        tv["num"] = g ? sr.tnum / g : 0;
        tv["den"] = g ? sr.tden / g : 1;
        w["t"] = tv;
        out["witness"] = w;
        out["sensitivity"] = bfc::sensitivity(t);
        if (fmt == Format::plain)
            std::cout << rational_str(sr.value) << "\n";
        else
            print_json(out);
        return 0;
    }

    std::vector<std::string> ends = split(o.line, ',');
    if (ends.size() != 2)
        throw bfc::domain_error("shi: --line wants two inputs \"a,b\"");
    if (o.t.empty()) throw bfc::domain_error("shi: --line requires --t");
    bfc::BitVector a = bfc::BitVector::parse(t.n(), ends[0]);
    bfc::BitVector b = bfc::BitVector::parse(t.n(), ends[1]);
    std::vector<std::string> frac = split(o.t, '/');
    if (frac.empty() || frac.size() > 2)
        throw bfc::domain_error("shi: --t wants \"p/q\"");
    long long p = parse_ll(frac[0], "shi: --t");
    long long q = frac.size() == 2 ? parse_ll(frac[1], "shi: --t") : 1;
    if (q < 1 || p < 0 || p > q)
        throw bfc::domain_error("shi: t must lie in [0, 1]");

    bfc::MultilinearPoly poly = bfc::mobius_extend(t, lim);
    bfc::Line line;
    for (int i = 0; i < t.n(); i++) {
        line.a.emplace_back(a.get(i) ? 1 : 0);
        line.b.emplace_back(b.get(i) ? 1 : 0);
    }
    bfc::Rational d =
        bfc::line_restriction_derivative(poly, line, bfc::Rational(p, q));
    out["a"] = a.to_string();
    out["b"] = b.to_string();
    ordered_json tv;
    tv["num"] = p;
    tv["den"] = q;
    out["t"] = tv;
    out["derivative"] = rational_json(d);
    out["abs"] = rational_json(boost::multiprecision::abs(d));
    if (fmt == Format::plain)
        std::cout << rational_str(d) << "\n";
    else
        print_json(out);
    return 0;
}

// ---- gl ----

struct GlOpts {
    std::string fn, graph;
};

int run_gl(const GlOpts& o, Format fmt, const bfc::Limits& lim) {
    if (fmt == Format::csv) throw bfc::domain_error("gl: no CSV form");
    if (o.fn.empty() == o.graph.empty())
        throw bfc::domain_error("gl: give exactly one of --fn / --graph");

    ordered_json out;
    bfc::CubeSubgraph g;
    if (!o.fn.empty()) {
        bfc::FunctionSpec spec = bfc::parse_spec(o.fn);
        bfc::TruthTable t = dense_from(spec.realize(lim), lim);
        g = bfc::function_to_subgraph(t);
        out["fn"] = spec.to_string();
        out["n"] = t.n();
        out["graph"] = g.to_spec();
        out["vertices"] = g.vertex_count();
        out["gamma"] = bfc::gamma(g);
        out["balanced"] = bfc::balanced(g);
        out["sensitivity"] = bfc::sensitivity(t);
    } else {
        std::ifstream in(o.graph);
        if (!in) throw bfc::domain_error("gl: cannot open " + o.graph);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        while (!text.empty() && std::isspace((unsigned char)text.back()))
            text.pop_back();
        size_t lead = 0;
        while (lead < text.size() && std::isspace((unsigned char)text[lead]))
            lead++;
        g = bfc::CubeSubgraph::parse(text.substr(lead));
        out["graph"] = g.to_spec();
        out["n"] = g.n;
        out["vertices"] = g.vertex_count();
        out["gamma"] = bfc::gamma(g);
        out["balanced"] = bfc::balanced(g);
        if (g.n <= lim.dense)
            out["fn"] = bfc::subgraph_to_function(g).to_spec();
    }
    if (fmt == Format::plain)
        std::cout << out["gamma"].get<int>() << "\n";
    else
        print_json(out);
    return 0;
}

// ---- lattice ----

struct LatticeOpts {
    std::string fn, input, blocks;
    bool auto_blocks = false, strict = false;
    long long radius = -1;
    bool radius_set = false;
};

int run_lattice(const LatticeOpts& o, Format fmt, const bfc::Limits& lim) {
    if (fmt == Format::csv) throw bfc::domain_error("lattice: no CSV form");
    bfc::FunctionSpec spec = bfc::parse_spec(o.fn);
    bfc::FunctionHandle h = spec.realize(lim);
    bfc::BitVector x = bfc::BitVector::parse(h.n, o.input);

    std::vector<bfc::Block> blocks;
    if (o.auto_blocks) {
        if (!o.blocks.empty())
            throw bfc::domain_error("lattice: --blocks and --auto-blocks clash");
        if (!h.is_dense())
            throw bfc::domain_error("lattice: --auto-blocks needs a dense table");
        auto packs = bfc::optimal_packings(*h.table, x.word());
        if (!packs.empty())
            for (uint64_t m : packs.front())
                blocks.push_back(bfc::Block::from_mask(h.n, m));
    } else {
        if (o.blocks.empty())
            throw bfc::domain_error("lattice: give --blocks or --auto-blocks");
        for (const auto& grp : split(o.blocks, '|')) {
            std::vector<int> vars;
            for (const auto& tok : split(grp, ','))
                vars.push_back((int)parse_ll(tok, "lattice: --blocks"));
            blocks.push_back(bfc::Block::from_vars(h.n, vars));
        }
    }

    bfc::LatticeColoring c = bfc::build_coloring(h, x, blocks, o.strict);
    std::vector<long long> origin(c.dimension(), 0);
    bfc::BoxSweep sw = o.radius_set ? bfc::coloring_sensitivity_box(c, o.radius, lim)
                                    : bfc::coloring_sensitivity_exact(c, lim);

    ordered_json out;
    out["fn"] = spec.to_string();
    out["n"] = h.n;
    out["input"] = x.to_string();
    ordered_json bl = ordered_json::array();
    for (const auto& b : c.blocks()) bl.push_back(b.vars());
    out["blocks"] = bl;
    out["dimension"] = c.dimension();
    out["base_value"] = c.base_value() ? 1 : 0;
    ordered_json periods = ordered_json::array();
    for (int i = 0; i < c.dimension(); i++) periods.push_back(c.period(i));
    out["periods"] = periods;
    out["nontrivial"] = bfc::nontrivial(c);
    out["origin_sensitivity"] = bfc::coloring_sensitivity_at(c, origin);
    ordered_json sj;
    sj["value"] = sw.value;
    sj["exact"] = sw.exact;
    sj["argmax"] = sw.argmax;
    out["sweep"] = sj;

    if (fmt == Format::plain)
        std::cout << sw.value << "\n";
    else
        print_json(out);
    return 0;
}

// ---- zoo ----

ordered_json claims_json(const bfc::ZooFunction& z) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : z.claims) {
        ordered_json j;
        j["measure"] = c.measure;
        if (c.asymptotic) {
            j["asymptotic"] = true;
        } else {
            j["expected"] = c.expected;
        }
        if (!c.note.empty()) j["note"] = c.note;
        arr.push_back(j);
    }
    return arr;
}

int run_zoo_list(Format fmt) {
    std::vector<bfc::ZooInfo> infos = bfc::zoo_list();
    if (fmt == Format::plain) {
        for (const auto& z : infos)
            std::cout << z.name << "  " << z.params << "  " << z.summary << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "name,params,summary\n";
        for (const auto& z : infos)
            std::cout << csv_quote(z.name) << "," << csv_quote(z.params) << ","
                      << csv_quote(z.summary) << "\n";
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& z : infos) {
            ordered_json j;
            j["name"] = z.name;
            j["params"] = z.params;
            j["summary"] = z.summary;
            arr.push_back(j);
        }
        print_json(arr);
    }
    return 0;
}

struct ZooMakeOpts {
    std::string name, emit = "json";
    std::map<std::string, long long> params;
};

int run_zoo_make(const ZooMakeOpts& o, Format fmt, const bfc::Limits& lim) {
    bfc::ZooFunction z = bfc::make_zoo(o.name, o.params, lim);
    if (o.emit == "tt") {
        std::cout << dense_from(z.fn, lim).to_spec() << "\n";
        return 0;
    }
    if (o.emit == "spec") {
        std::cout << z.spec_string() << "\n";
        return 0;
    }
    if (o.emit == "witness") {
        if (o.name != "chakraborty")
            throw bfc::domain_error("zoo: only chakraborty has a designated witness");
        long long k = 0, n = 0;
        for (const auto& [key, v] : z.params) {
            if (key == "k") k = v;
            if (key == "n") n = v;
        }
        std::cout << bfc::chakraborty_witness((int)k, n).to_string() << "\n";
        return 0;
    }
    if (o.emit != "json")
        throw bfc::domain_error("zoo: --emit wants tt, witness, spec or json");

    ordered_json out;
    out["name"] = z.name;
    ordered_json ps = ordered_json::object();
    for (const auto& [key, v] : z.params) ps[key] = v;
    out["params"] = ps;
    out["spec"] = z.spec_string();
    out["n"] = z.fn.n;
    out["dense"] = z.fn.is_dense();
    out["claims"] = claims_json(z);
    if (fmt == Format::plain)
        std::cout << z.spec_string() << "\n";
    else
        print_json(out);
    return 0;
}

int run_zoo_verify(const ZooMakeOpts& o, Format fmt, const bfc::Limits& lim) {
    bfc::ZooFunction z = bfc::make_zoo(o.name, o.params, lim);
    bfc::ZooVerification v = bfc::verify_zoo(z, lim);

    if (fmt == Format::plain) {
        for (const auto& c : v.checks)
            std::cout << c.measure << " expected " << c.expected << " "
                      << c.status << "\n";
        for (const auto& [what, ok] : v.extra)
            std::cout << what << " " << (ok ? "pass" : "fail") << "\n";
        std::cout << (v.all_ok ? "ok" : "FAIL") << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "check,expected,status\n";
        for (const auto& c : v.checks)
            std::cout << csv_quote(c.measure) << "," << c.expected << ","
                      << c.status << "\n";
        for (const auto& [what, ok] : v.extra)
            std::cout << csv_quote(what) << ",," << (ok ? "pass" : "fail")
                      << "\n";
    } else {
        ordered_json out;
        out["name"] = z.name;
        out["spec"] = z.spec_string();
        out["n"] = z.fn.n;
        ordered_json checks = ordered_json::array();
        for (const auto& c : v.checks) {
            ordered_json j;
            j["measure"] = c.measure;
            j["expected"] = c.expected;
            j["got"] = measure_json(c.got);
            j["status"] = c.status;
            checks.push_back(j);
        }
        out["checks"] = checks;
        ordered_json extra = ordered_json::array();
        for (const auto& [what, ok] : v.extra) {
            ordered_json j;
            j["check"] = what;
            j["ok"] = ok;
            extra.push_back(j);
        }
        out["extra"] = extra;
        out["ok"] = v.all_ok;
        print_json(out);
    }
    return v.all_ok ? 0 : 3;
}

// ---- scan / report ----

struct ScanOpts {
    int n = 3;
    std::string out;
    bool npn = false, resume = false, allow_large = false;
};

int run_scan(const ScanOpts& o, Format fmt, const bfc::Limits& lim) {
    if (o.resume && o.out.empty())
        throw bfc::domain_error("scan: --resume needs --out");
    bfc::ScanOptions so;
    so.n = o.n;
    so.npn = o.npn;
    so.allow_large = o.allow_large;
    so.out = o.out;
    so.resume = o.resume;
    bfc::ScanSummary sum = bfc::scan(so, lim);

    auto witness_spec = [](const bfc::GapEntry& e) {
        return bfc::TruthTable::from_value(e.witness.n, e.witness.table)
            .to_spec();
    };

    if (fmt == Format::plain) {
        std::cout << "records " << sum.records << "\n";
        std::cout << "emitted " << sum.emitted << "\n";
        for (const auto& e : sum.board.entries) {
            std::cout << e.ratio << " " << e.num << "/" << e.den;
            if (e.has_witness) std::cout << " at " << witness_spec(e);
            std::cout << "\n";
        }
    } else if (fmt == Format::csv) {
        std::cout << "ratio,kind,num,den,witness\n";
        for (const auto& e : sum.board.entries)
            std::cout << csv_quote(e.ratio) << ","
                      << (e.logarithmic ? "log2" : "plain") << "," << e.num
                      << "," << e.den << ","
                      << (e.has_witness ? witness_spec(e) : "") << "\n";
    } else {
        ordered_json out;
        out["n"] = o.n;
        out["npn"] = o.npn;
        if (!o.out.empty()) out["out"] = o.out;
        out["records"] = sum.records;
        out["emitted"] = sum.emitted;
        ordered_json lb = ordered_json::array();
        for (const auto& e : sum.board.entries) {
            ordered_json j;
            j["ratio"] = e.ratio;
            j["kind"] = e.logarithmic ? "log2" : "plain";
            j["num"] = e.num;
            j["den"] = e.den;
            j["witness"] =
                e.has_witness ? ordered_json(witness_spec(e)) : ordered_json();
            lb.push_back(j);
        }
        out["leaderboard"] = lb;
        print_json(out);
    }
    return 0;
}

struct ReportOpts {
    std::string in, format = "json";
};

int run_report(const ReportOpts& o, const bfc::Limits& lim) {
    std::cout << bfc::render_report(o.in, o.format, lim);
    return 0;
}

// ---- eval / invariance / transitive ----

struct EvalOpts {
    std::string fn, at;
};

int run_eval(const EvalOpts& o, Format fmt, const bfc::Limits& lim) {
    bfc::FunctionSpec spec = bfc::parse_spec(o.fn);
    bfc::FunctionHandle h = spec.realize(lim);
    bfc::BitVector x = bfc::BitVector::parse(h.n, o.at);
    int v = h.eval(x) ? 1 : 0;
    if (fmt == Format::plain || fmt == Format::csv) {
        std::cout << v << "\n";
    } else {
        ordered_json out;
        out["fn"] = spec.to_string();
        out["n"] = h.n;
        out["at"] = x.to_string();
        out["value"] = v;
        print_json(out);
    }
    return 0;
}

struct InvOpts {
    std::string fn, perm;
    long long samples = 0;
};

int run_invariance(const InvOpts& o, Format fmt, const bfc::Limits& lim) {
    bfc::FunctionSpec spec = bfc::parse_spec(o.fn);
    bfc::FunctionHandle h = spec.realize(lim);
    bfc::Permutation sigma = bfc::Permutation::parse_cycles(h.n, o.perm);

    ordered_json out;
    out["fn"] = spec.to_string();
    out["n"] = h.n;
    out["perm"] = sigma.to_cycles();
    bool inv;
    if (h.is_dense()) {
        inv = bfc::is_invariant(*h.table, sigma);
        out["mode"] = "exhaustive";
    } else {
        long long s = o.samples > 0 ? o.samples : lim.invariance_samples;
        inv = bfc::is_invariant_sampled(*h.point, sigma, s);
        out["mode"] = "sampled";
        out["samples"] = s;
    }
    out["invariant"] = inv;
    if (fmt == Format::plain)
        std::cout << (inv ? "true" : "false") << "\n";
    else
        print_json(out);
    return 0;
}

struct TransOpts {
    int n = 0;
    std::vector<std::string> perms;
};

int run_transitive(const TransOpts& o, Format fmt) {
    std::vector<bfc::Permutation> gens;
    for (const auto& p : o.perms)
        gens.push_back(bfc::Permutation::parse_cycles(o.n, p));
    bool tr = bfc::orbit_transitive(gens, o.n);
    if (fmt == Format::plain) {
        std::cout << (tr ? "true" : "false") << "\n";
    } else {
        ordered_json out;
        out["n"] = o.n;
        ordered_json gj = ordered_json::array();
        for (const auto& g : gens) gj.push_back(g.to_cycles());
        out["generators"] = gj;
        out["transitive"] = tr;
        print_json(out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact complexity measures for Boolean functions"};
    app.require_subcommand(1);

    bool plain = false, csv = false, json_flag = false;
    int threads = 0;
    app.add_flag("--json", json_flag, "JSON output (default)");
    app.add_flag("--plain", plain, "bare text output");
    app.add_flag("--csv", csv, "CSV output where a row shape exists");
    app.add_option("--threads", threads, "cap the OpenMP thread count");

    MeasuresOpts mo;
    auto* m = app.add_subcommand("measures", "complexity measures of a function");
    m->fallthrough();
    m->add_option("--fn", mo.fn, "function spec")->required();
    m->add_option("--set", mo.set, "comma list among s,bs,C,D,deg,degf2,dpar");
    m->add_option("--at", mo.at, "input bits: report s/bs/C at that input");

    SpectrumOpts so;
    auto* sp = app.add_subcommand("spectrum", "Walsh-Hadamard coefficients");
    sp->fallthrough();
    sp->add_option("--fn", so.fn, "function spec")->required();
    sp->add_option("--values", so.values, "pm (default) or 01");
    auto* fmin = sp->add_flag("--min", so.min_c, "smallest nonzero |coefficient|");
    auto* fl1 = sp->add_flag("--l1", so.l1, "spectral L1 norm");
    auto* fsup = sp->add_flag("--support", so.support, "support masks only");
    fmin->excludes(fl1);
    fmin->excludes(fsup);
    fl1->excludes(fsup);

    RankOpts ro;
    auto* rk = app.add_subcommand("rank", "communication matrix rank");
    rk->fallthrough();
    rk->add_option("--fn", ro.fn, "function spec")->required();
    rk->add_option("--op", ro.op, "and, or or xor")->required();
    rk->add_option("--values", ro.values, "pm (default) or 01");
    rk->add_flag("--exact", ro.exact, "skip the modular pre-pass");

    ShiOpts sho;
    auto* sh = app.add_subcommand("shi", "derivatives along cube segments");
    sh->fallthrough();
    sh->add_option("--fn", sho.fn, "function spec")->required();
    auto* fsweep = sh->add_flag("--sweep", sho.sweep, "vertex-pair sweep (default)");
    sh->add_option("--grid", sho.grid, "t grid denominator for the sweep");
    auto* fline = sh->add_option("--line", sho.line, "two endpoints \"bits,bits\"");
    sh->add_option("--t", sho.t, "parameter p/q in [0,1]");
    fsweep->excludes(fline);

    GlOpts go;
    auto* gl = app.add_subcommand("gl", "hypercube subgraph translation");
    gl->fallthrough();
    gl->add_option("--fn", go.fn, "function spec");
    gl->add_option("--graph", go.graph, "file holding vs:<n>:<hex>");

    LatticeOpts lo;
    auto* la = app.add_subcommand("lattice", "integer lattice coloring");
    la->fallthrough();
    la->add_option("--fn", lo.fn, "function spec")->required();
    la->add_option("--input", lo.input, "base input bits")->required();
    la->add_option("--blocks", lo.blocks, "groups like \"1,2|3|4,5\"");
    la->add_flag("--auto-blocks", lo.auto_blocks,
                 "use an optimal sensitive-block packing at the input");
    la->add_flag("--strict", lo.strict, "require each block to be sensitive");
    auto* lrad = la->add_option("--radius", lo.radius, "box sweep radius");

    auto* zoo = app.add_subcommand("zoo", "named function families");
    zoo->fallthrough();
    zoo->require_subcommand(1);
    auto* zl = zoo->add_subcommand("list", "available generators");
    zl->fallthrough();
    ZooMakeOpts zmo;
    long long zk = 0, zn = 0, zlev = 0;
    auto* zm = zoo->add_subcommand("make", "instantiate a generator");
    zm->fallthrough();
    zm->add_option("--name", zmo.name, "generator name")->required();
    auto* zmk = zm->add_option("--k", zk, "parameter k");
    auto* zmn = zm->add_option("--n", zn, "parameter n");
    auto* zml = zm->add_option("--levels", zlev, "parameter levels");
    zm->add_option("--emit", zmo.emit, "json (default), tt, witness or spec");
    ZooMakeOpts zvo;
    long long vk = 0, vn = 0, vlev = 0;
    auto* zv = zoo->add_subcommand("verify", "check a generator's claims");
    zv->fallthrough();
    zv->add_option("--name", zvo.name, "generator name")->required();
    auto* zvk = zv->add_option("--k", vk, "parameter k");
    auto* zvn = zv->add_option("--n", vn, "parameter n");
    auto* zvl = zv->add_option("--levels", vlev, "parameter levels");

    ScanOpts sco;
    auto* sc = app.add_subcommand("scan", "enumerate all functions at a size");
    sc->fallthrough();
    sc->add_option("--n", sco.n, "arity to enumerate")->required();
    sc->add_option("--out", sco.out, "JSONL sink path");
    sc->add_flag("--npn", sco.npn, "emit only NPN-canonical tables");
    sc->add_flag("--resume", sco.resume, "continue a previous sink");
    sc->add_flag("--allow-n5", sco.allow_large, "opt in to the n=5 walk");

    ReportOpts rpo;
    auto* rp = app.add_subcommand("report", "render a scan sink");
    rp->fallthrough();
    rp->add_option("--in", rpo.in, "JSONL sink path")->required();
    rp->add_option("--format", rpo.format, "csv, json or md")->required();

    EvalOpts eo;
    auto* ev = app.add_subcommand("eval", "evaluate at one input");
    ev->fallthrough();
    ev->add_option("--fn", eo.fn, "function spec")->required();
    ev->add_option("--at", eo.at, "input bits")->required();

    InvOpts io;
    auto* iv = app.add_subcommand("invariance", "permutation invariance check");
    iv->fallthrough();
    iv->add_option("--fn", io.fn, "function spec")->required();
    iv->add_option("--perm", io.perm, "cycles like \"(1 2 3)(4 5)\"")->required();
    iv->add_option("--samples", io.samples, "sample count for point functions");

    TransOpts tro;
    auto* tr = app.add_subcommand("transitive", "orbit transitivity of a group");
    tr->fallthrough();
    tr->add_option("--n", tro.n, "ground set size")->required();
    tr->add_option("--perm", tro.perms, "generator in cycle notation")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (plain && csv)
            throw bfc::domain_error("choose one of --plain / --csv");
        Format fmt = csv ? Format::csv : plain ? Format::plain : Format::json;
        bfc::Limits lim = bfc::Limits::from_env();

        lo.radius_set = lrad->count() > 0;
        if (zmk->count()) zmo.params["k"] = zk;
        if (zmn->count()) zmo.params["n"] = zn;
        if (zml->count()) zmo.params["levels"] = zlev;
        if (zvk->count()) zvo.params["k"] = vk;
        if (zvn->count()) zvo.params["n"] = vn;
        if (zvl->count()) zvo.params["levels"] = vlev;

        if (m->parsed()) return run_measures(mo, fmt, lim);
        if (sp->parsed()) return run_spectrum(so, fmt, lim);
        if (rk->parsed()) return run_rank(ro, fmt, lim);
        if (sh->parsed()) return run_shi(sho, fmt, lim);
        if (gl->parsed()) return run_gl(go, fmt, lim);
        if (la->parsed()) return run_lattice(lo, fmt, lim);
        if (zl->parsed()) return run_zoo_list(fmt);
        if (zm->parsed()) return run_zoo_make(zmo, fmt, lim);
        if (zv->parsed()) return run_zoo_verify(zvo, fmt, lim);
        if (sc->parsed()) return run_scan(sco, fmt, lim);
        if (rp->parsed()) return run_report(rpo, lim);
        if (ev->parsed()) return run_eval(eo, fmt, lim);
        if (iv->parsed()) return run_invariance(io, fmt, lim);
        if (tr->parsed()) return run_transitive(tro, fmt);
        throw bfc::internal_error("no subcommand dispatched");
    } catch (const bfc::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const bfc::limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bfc::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

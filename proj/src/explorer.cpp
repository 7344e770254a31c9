#include "bfc/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "bfc/errors.hpp"
#include "bfc/glgraph.hpp"
#include "bfc/measures.hpp"
#include "bfc/reference.hpp"
#include "bfc/spectral.hpp"

using nlohmann::ordered_json;

namespace bfc {

ScanRecord measure_record(int n, uint64_t table, const Limits& lim) {
    if (n < 1 || n > 6) throw domain_error("measure_record: n out of range");
    TruthTable t = TruthTable::from_value(n, table);
    ScanRecord r;
    r.n = n;
    r.table = table;
    r.s = sensitivity(t);
    MeasureValue bs = block_sensitivity(t, lim);
    MeasureValue C = certificate_complexity(t, lim);
    MeasureValue D = decision_tree_depth(t, lim);
    MeasureValue dp = parity_tree_depth(t, lim);
    if (!bs.exact || !C.exact || !D.exact || !dp.exact)
        throw limit_error("measure_record: limits too low for an exact record");
    r.bs = (int)bs.value;
    r.C = (int)C.value;
    r.D = (int)D.value;
    r.dpar = (int)dp.value;
    r.degf2 = degree_mod2(t);
    FourierSpectrum sp = fourier_transform(t, Values::plus_minus);
    r.deg = sp.max_degree();
    r.sparsity = sp.sparsity();
    r.min_hat_num = sp.min_nonzero_abs();
    r.l1_num = sp.l1_numerator();
    r.depends_all = depends_on_all(t);
    r.full_degree = r.deg == n;
    return r;
}

namespace {

[[noreturn]] void relation_fail(const ScanRecord& r, const std::string& what) {
    throw internal_error("relation violated: " + what + "; reproduce with " +
                         TruthTable::from_value(r.n, r.table).to_spec());
}

} // namespace

void check_relations(const ScanRecord& r) {
    auto want = [&](bool ok, const char* what) {
        if (!ok) relation_fail(r, what);
    };
    want(0 <= r.s && r.s <= r.bs, "s <= bs");
    want(r.bs <= r.C, "bs <= C");
    want(r.C <= r.D, "C <= D");
    want(r.D <= r.n, "D <= n");
    if (r.s >= 1)
        want(r.C <= r.s * r.bs, "C <= s*bs");
    else
        want(r.C == 0, "C = 0 for a constant function");
    want(r.D <= r.C * r.bs, "D <= C*bs");
    want(r.bs <= 2 * r.deg * r.deg, "bs <= 2*deg^2");
    want(r.degf2 <= r.dpar, "mod-2 degree <= parity tree depth");
    want(r.sparsity <= (1LL << (2 * r.dpar)), "sparsity <= 4^(parity depth)");
    const double two_pi = 6.283185307179586;
    double kk = (2.0 / std::sqrt(two_pi)) * std::exp((double)r.s) *
                std::sqrt((double)r.s);
    want((double)r.bs <= kk + 1e-6, "bs <= (2/sqrt(2 pi)) e^s sqrt(s)");
    if (r.depends_all && r.n >= 2) {
        double lg = std::log2((double)r.n);
        double bound = 0.5 * lg - 0.5 * std::log2(lg) + 0.5;
        want((double)r.s >= bound - 1e-9,
             "s >= log(n)/2 - log(log(n))/2 + 1/2 when all variables matter");
    }
    TruthTable t = TruthTable::from_value(r.n, r.table);
    want(balanced(function_to_subgraph(t)) == (r.deg < r.n),
         "full degree <=> unbalanced side split");
}

namespace {

// smallest table value of f's class under variable permutation, input
// negation and output negation; early-exits once anything beats `stop`
uint64_t npn_min_value(int n, uint64_t orig, uint64_t stop, bool early) {
    uint64_t size = uint64_t(1) << n;
    uint64_t full = n == 6 ? ~uint64_t(0) : (uint64_t(1) << size) - 1;
    uint64_t best = orig;
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    std::vector<uint32_t> pidx(size);
    do {
        for (uint64_t x = 0; x < size; x++) {
            uint64_t y = 0;
            for (int j = 0; j < n; j++)
                if ((x >> j) & 1) y |= uint64_t(1) << perm[j];
            pidx[x] = (uint32_t)y;
        }
        for (uint64_t m = 0; m < size; m++) {
            uint64_t v = 0;
            for (uint64_t x = 0; x < size; x++)
                if ((orig >> (pidx[x] ^ m)) & 1) v |= uint64_t(1) << x;
            best = std::min({best, v, v ^ full});
            if (early && best < stop) return best;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool npn_is_canonical(int n, uint64_t table) {
    return npn_min_value(n, table, table, true) == table;
}

} // namespace

TruthTable npn_canonical(const TruthTable& f) {
    if (f.n() > 6) throw limit_error("npn_canonical: n > 6");
    if (f.n() < 1) return f;
    return TruthTable::from_value(
        f.n(), npn_min_value(f.n(), f.value(), 0, false));
}

Leaderboard::Leaderboard() {
    auto add = [&](const char* ratio, bool log) {
        GapEntry e;
        e.ratio = ratio;
        e.logarithmic = log;
        entries.push_back(std::move(e));
    };
    add("bs/s", false);
    add("bs/s^2", false);
    add("deg/s^2", false);
    add("C/bs", false);
    add("D/deg", false);
    add("dpar/s^2", false);
    add("log2(sparsity)/s", true);
}

void Leaderboard::offer(const ScanRecord& r) {
    auto improve = [&](GapEntry& e, long long num, long long den) {
        if (den <= 0) return;
        bool better;
        if (!e.has_witness) {
            better = true;
        } else if (!e.logarithmic) {
            better = num * e.den > e.num * den;
        } else {
            using boost::multiprecision::cpp_int;
            better = pow(cpp_int(num), (unsigned)e.den) >
                     pow(cpp_int(e.num), (unsigned)den);
        }
        if (better) {
            e.num = num;
            e.den = den;
            e.has_witness = true;
            e.witness = r;
        }
    };
    long long s2 = (long long)r.s * r.s;
    for (GapEntry& e : entries) {
        if (e.ratio == "bs/s") improve(e, r.bs, r.s);
        else if (e.ratio == "bs/s^2") improve(e, r.bs, s2);
        else if (e.ratio == "deg/s^2") improve(e, r.deg, s2);
        else if (e.ratio == "C/bs") improve(e, r.C, r.bs);
        else if (e.ratio == "D/deg") improve(e, r.D, r.deg);
        else if (e.ratio == "dpar/s^2") improve(e, r.dpar, s2);
        else improve(e, r.sparsity, r.s);
    }
}

namespace {

ordered_json record_json(const ScanRecord& r) {
    ordered_json j;
    j["n"] = r.n;
    j["table"] = r.table;
    j["s"] = r.s;
    j["bs"] = r.bs;
    j["C"] = r.C;
    j["D"] = r.D;
    j["deg"] = r.deg;
    j["degf2"] = r.degf2;
    j["dpar"] = r.dpar;
    j["sparsity"] = r.sparsity;
    j["min_hat"] = {{"num", r.min_hat_num}, {"log2den", r.n}};
    j["l1"] = {{"num", r.l1_num}, {"log2den", r.n}};
    j["depends_all"] = r.depends_all;
    j["full_degree"] = r.full_degree;
    return j;
}

ScanRecord record_from_json(const ordered_json& j) {
    ScanRecord r;
    r.n = j.at("n").get<int>();
    r.table = j.at("table").get<uint64_t>();
    r.s = j.at("s").get<int>();
    r.bs = j.at("bs").get<int>();
    r.C = j.at("C").get<int>();
    r.D = j.at("D").get<int>();
    r.deg = j.at("deg").get<int>();
    r.degf2 = j.at("degf2").get<int>();
    r.dpar = j.at("dpar").get<int>();
    r.sparsity = j.at("sparsity").get<long long>();
    r.min_hat_num = j.at("min_hat").at("num").get<long long>();
    r.l1_num = j.at("l1").at("num").get<long long>();
    r.depends_all = j.at("depends_all").get<bool>();
    r.full_degree = j.at("full_degree").get<bool>();
    return r;
}

// Replays the complete lines of an existing sink.  Returns the resume
// cursor; truncates any partial trailing line in place.
uint64_t replay_sink(const std::string& path, int n, ScanSummary& sum,
                     uint64_t& checkpoint_seen) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("scan: cannot open " + path + " for resume");
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    in.close();
    uint64_t cursor = 0;
    size_t keep = 0, pos = 0;
    while (pos < content.size()) {
        size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) break;
        ordered_json j = ordered_json::parse(
            content.substr(pos, nl - pos), nullptr, false);
        if (j.is_discarded()) break;
        if (j.contains("checkpoint")) {
            checkpoint_seen =
                std::max(checkpoint_seen, j.at("checkpoint").get<uint64_t>());
            cursor = std::max(cursor, checkpoint_seen);
        } else {
            ScanRecord r = record_from_json(j);
            if (r.n != n)
                throw domain_error("scan: resume file holds records for n=" +
                                   std::to_string(r.n));
            sum.board.offer(r);
            sum.records++;
            cursor = std::max(cursor, r.table + 1);
        }
        keep = nl + 1;
        pos = nl + 1;
    }
    if (keep != content.size()) std::filesystem::resize_file(path, keep);
    return cursor;
}

} // namespace

ScanSummary scan(const ScanOptions& opt, const Limits& lim) {
    if (opt.n < 1) throw domain_error("scan: n must be >= 1");
    if (opt.n > 5) throw domain_error("scan: n > 5 is not enumerable");
    if (opt.n == 5 && !(opt.npn && opt.allow_large))
        throw domain_error(
            "scan: n=5 walks 2^32 tables (hours of CPU even with the "
            "canonicity filter); requires both the canonical-only mode and "
            "the explicit large-scan opt-in");

    ScanSummary sum;
    uint64_t total = uint64_t(1) << (uint64_t(1) << opt.n);
    uint64_t cursor = 0, checkpoint_seen = 0;
    std::ofstream out;
    if (!opt.out.empty()) {
        if (opt.resume && std::filesystem::exists(opt.out))
            cursor = replay_sink(opt.out, opt.n, sum, checkpoint_seen);
        out.open(opt.out, std::ios::binary |
                              (opt.resume ? std::ios::app : std::ios::trunc));
        if (!out) throw domain_error("scan: cannot open " + opt.out);
        // a fresh run interleaves checkpoints with records at a fixed
        // cadence; reproduce the one a truncated file may have lost
        if (cursor > 0 && cursor % 4096 == 0 && checkpoint_seen < cursor)
            out << "{\"checkpoint\":" << cursor << "}\n";
    }

    std::atomic<bool> failed{false};
    std::string fail_msg;
    int fail_kind = 0; // 1 domain, 2 limit, 3 internal

    int64_t first = (int64_t)cursor, last = (int64_t)total;
#pragma omp parallel for ordered schedule(dynamic, 64)
    for (int64_t t = first; t < last; t++) {
        ScanRecord rec;
        std::string line, err;
        int kind = 0;
        bool emit = false;
        if (!failed.load(std::memory_order_relaxed)) {
            try {
                if (!opt.npn || npn_is_canonical(opt.n, (uint64_t)t)) {
                    rec = measure_record(opt.n, (uint64_t)t, lim);
                    check_relations(rec);
                    if (opt.n <= 3) {
                        TruthTable tt =
                            TruthTable::from_value(opt.n, (uint64_t)t);
                        if (naive_block_sensitivity(tt) != rec.bs)
                            throw internal_error(
                                "scan: block sensitivity disagrees with the "
                                "naive oracle at " + tt.to_spec());
                        if (naive_certificate(tt) != rec.C)
                            throw internal_error(
                                "scan: certificate complexity disagrees with "
                                "the naive oracle at " + tt.to_spec());
                    }
                    line = record_json(rec).dump();
                    emit = true;
                }
            } catch (const domain_error& e) { err = e.what(); kind = 1; }
            catch (const limit_error& e) { err = e.what(); kind = 2; }
            catch (const std::exception& e) { err = e.what(); kind = 3; }
        }
#pragma omp ordered
        {
            if (!failed.load()) {
                if (kind != 0) {
                    failed = true;
                    fail_msg = err;
                    fail_kind = kind;
                } else {
                    if (emit) {
                        sum.board.offer(rec);
                        sum.records++;
                        sum.emitted++;
                        if (out.is_open()) out << line << '\n';
                    }
                    if (out.is_open() && ((uint64_t)t + 1) % 4096 == 0)
                        out << "{\"checkpoint\":" << (uint64_t)t + 1 << "}\n";
                }
            }
        }
    }
    if (fail_kind == 1) throw domain_error(fail_msg);
    if (fail_kind == 2) throw limit_error(fail_msg);
    if (fail_kind == 3) throw internal_error(fail_msg);
    return sum;
}

namespace {

std::string csv_report(const std::vector<ScanRecord>& recs) {
    std::ostringstream os;
    os << "n,table,s,bs,C,D,deg,degf2,dpar,sparsity,min_hat_num,l1_num,"
          "depends_all,full_degree\n";
    for (const ScanRecord& r : recs)
        os << r.n << ',' << r.table << ',' << r.s << ',' << r.bs << ','
           << r.C << ',' << r.D << ',' << r.deg << ',' << r.degf2 << ','
           << r.dpar << ',' << r.sparsity << ',' << r.min_hat_num << ','
           << r.l1_num << ',' << (int)r.depends_all << ','
           << (int)r.full_degree << '\n';
    return os.str();
}

ordered_json entry_json(const GapEntry& e) {
    ordered_json j;
    j["ratio"] = e.ratio;
    j["kind"] = e.logarithmic ? "log2" : "plain";
    if (e.has_witness) {
        j["num"] = e.num;
        j["den"] = e.den;
        j["witness"] = record_json(e.witness);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

// side quantities reported for a witness, stated but never asserted
ordered_json observation_json(const GapEntry& e, const Limits& lim) {
    TruthTable w = TruthTable::from_value(e.witness.n, e.witness.table);
    RankResult ra = comm_rank(w, Combiner::and_op, Values::plus_minus, lim);
    RankResult ro = comm_rank(w, Combiner::or_op, Values::plus_minus, lim);
    ordered_json j;
    j["ratio"] = e.ratio;
    j["witness"] = w.to_spec();
    j["deg"] = e.witness.deg;
    j["s"] = e.witness.s;
    j["rank_and_pm"] = ra.rank;
    j["rank_or_pm"] = ro.rank;
    j["min_hat"] = {{"num", e.witness.min_hat_num},
                    {"log2den", e.witness.n}};
    return j;
}

} // namespace

std::string render_report(const std::string& jsonl_path,
                          const std::string& format, const Limits& lim) {
    if (format != "csv" && format != "json" && format != "md")
        throw domain_error("report: format must be csv, json or md");
    std::ifstream in(jsonl_path, std::ios::binary);
    if (!in) throw domain_error("report: cannot open " + jsonl_path);
    std::vector<ScanRecord> recs;
    Leaderboard board;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ordered_json j = ordered_json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw domain_error("report: malformed line in " + jsonl_path);
        if (j.contains("checkpoint")) continue;
        ScanRecord r = record_from_json(j);
        board.offer(r);
        recs.push_back(r);
    }

    if (format == "csv") return csv_report(recs);

    ordered_json doc;
    doc["records"] = recs.size();
    doc["leaderboard"] = ordered_json::array();
    doc["observations"] = ordered_json::array();
    for (const GapEntry& e : board.entries) {
        doc["leaderboard"].push_back(entry_json(e));
        if (e.has_witness)
            doc["observations"].push_back(observation_json(e, lim));
    }
    if (format == "json") return doc.dump(2) + "\n";

    std::ostringstream os;
    os << "# Scan report\n\n" << recs.size() << " records\n\n";
    os << "## Extremal ratios\n\n";
    os << "| ratio | value | witness |\n|---|---|---|\n";
    for (const GapEntry& e : board.entries) {
        os << "| " << e.ratio << " | ";
        if (!e.has_witness) {
            os << "- | - |\n";
            continue;
        }
        if (e.logarithmic)
            os << "log2(" << e.num << ")/" << e.den;
        else
            os << e.num << "/" << e.den;
        os << " | "
           << TruthTable::from_value(e.witness.n, e.witness.table).to_spec()
           << " |\n";
    }
    os << "\n## Witness observations\n\n";
    os << "| ratio | witness | deg | s | rank(and) | rank(or) | min "
          "coefficient |\n|---|---|---|---|---|---|---|\n";
    for (const GapEntry& e : board.entries) {
        if (!e.has_witness) continue;
        ordered_json o = observation_json(e, lim);
        os << "| " << e.ratio << " | " << o["witness"].get<std::string>()
           << " | " << e.witness.deg << " | " << e.witness.s << " | "
           << o["rank_and_pm"].get<int>() << " | "
           << o["rank_or_pm"].get<int>() << " | " << e.witness.min_hat_num
           << "/2^" << e.witness.n << " |\n";
    }
    return os.str();
}

} // namespace bfc

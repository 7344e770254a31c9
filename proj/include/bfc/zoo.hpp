#pragma once

#include <map>
#include <string>
#include <vector>

#include "bfc/function.hpp"
#include "bfc/limits.hpp"
#include "bfc/measures.hpp"

namespace bfc {

// Expected measure value attached to a generator; asymptotic claims are
// informational and never machine-checked.
struct ZooClaim {
    std::string measure;
    long long expected = 0;
    bool asymptotic = false;
    std::string note;
};

struct ZooFunction {
    std::string name;
    std::vector<std::pair<std::string, long long>> params;
    FunctionHandle fn;
    std::vector<ZooClaim> claims;

    std::string spec_string() const; // "zoo:<name>:<p>=<v>,..."
};

struct ZooInfo {
    std::string name;
    std::string params;  // human-readable parameter schema
    std::string summary;
};

std::vector<ZooInfo> zoo_list();

// Validates parameters and reports the arity a generator would have,
// without building anything.
long long zoo_arity(const std::string& name,
                    const std::map<std::string, long long>& params);

// Generators switch to point representation automatically once 2^n storage
// would exceed the dense limit.
ZooFunction make_zoo(const std::string& name,
                     const std::map<std::string, long long>& params,
                     const Limits& lim = Limits());

// individual constructions
TruthTable parity_table(int n);
TruthTable and_table(int n);
TruthTable or_table(int n);
TruthTable and_of_ors_table(int k);   // k ORs of k, ANDed; n = k^2
TruthTable rubinstein_table(int k);   // n = k^2
PointFunction and_of_ors_point(int k);
PointFunction rubinstein_point(int k);
TruthTable kushilevitz_table();       // the 6-variable degree-3 function
PointFunction chakraborty_point(int k, long long n); // cyclic pattern matcher
BitVector chakraborty_witness(int k, long long n);

struct ClaimCheck {
    std::string measure;
    long long expected = 0;
    MeasureValue got;
    std::string status; // "pass", "fail", "window-pass", "window-fail"
};

struct ZooVerification {
    std::vector<ClaimCheck> checks;
    std::vector<std::pair<std::string, bool>> extra; // named structural checks
    bool all_ok = true;
};

ZooVerification verify_zoo(const ZooFunction& z, const Limits& lim = Limits());

} // namespace bfc

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bfc/function.hpp"
#include "bfc/limits.hpp"

namespace bfc {

// Parsed form of a function expression:
//
//   tt:<n>:<hex>
//   zoo:<name>[:key=value,...]
//   compose(<spec>,<spec>)
//   negate(<spec>)
//   restrict(<spec>,<var>=<bit>,...)
//
// Printing is canonical (zoo parameters and restrict assignments sorted),
// and parsing the printed form reproduces the spec.  Parse errors carry
// the byte offset of the offending character.
struct FunctionSpec {
    enum class Kind { table, zoo, compose, negate, restriction };

    Kind kind = Kind::table;
    TruthTable table;                                        // table
    std::string zoo_name;                                    // zoo
    std::vector<std::pair<std::string, long long>> zoo_params;
    std::vector<FunctionSpec> children;                      // combinators
    std::vector<std::pair<int, bool>> assignments;           // restriction

    // number of variables, computed without generating any table
    long long arity() const;

    std::string to_string() const;

    // builds the function; dense whenever 2^n fits the limit
    FunctionHandle realize(const Limits& lim = Limits()) const;
};

FunctionSpec parse_spec(const std::string& text);

// parse + realize in one step
FunctionHandle function_from_spec(const std::string& text,
                                  const Limits& lim = Limits());

} // namespace bfc

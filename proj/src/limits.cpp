#include "bfc/limits.hpp"

#include <cstdlib>
#include <string>

#include "bfc/errors.hpp"

namespace bfc {

static void read_env(const char* name, int& slot) {
    const char* v = std::getenv(name);
    if (!v) return;
    try {
        slot = std::stoi(v);
    } catch (const std::exception&) {
        throw domain_error(std::string(name) + ": not an integer: " + v);
    }
    if (slot < 0) throw domain_error(std::string(name) + ": negative");
}

Limits Limits::from_env() {
    Limits lim;
    read_env("BFC_DENSE_LIMIT", lim.dense);
    read_env("BFC_BS_LIMIT", lim.bs);
    read_env("BFC_C_LIMIT", lim.cert);
    read_env("BFC_D_LIMIT", lim.dtree);
    read_env("BFC_DPAR_LIMIT", lim.dpar);
    read_env("BFC_RANK_LIMIT", lim.rank);
    read_env("BFC_EXT_LIMIT", lim.ext);
    return lim;
}

} // namespace bfc

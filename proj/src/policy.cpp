#include "nmlab/policy.hpp"

#include <stdexcept>

namespace nmlab {

namespace {

struct Name {
    std::string_view token;
    PolicyKind kind;
};

constexpr Name LONG_NAMES[] = {
    {"nonull", PolicyKind::NoNull},
    {"std", PolicyKind::Standard},
    {"verified", PolicyKind::Verified},
    {"vrfd", PolicyKind::Verified},
    {"var-nocut2", PolicyKind::VarNoCutoffReduce2},
    {"var-reduce1", PolicyKind::VarReduceOneEverywhere},
    {"var-reduce12", PolicyKind::VarReduceOneThenTwo},
};

}  // namespace

PruningPolicy PruningPolicy::parse(std::string_view token, int r) {
    std::string_view base = token;
    int suffix_r = 0;
    if (!base.empty() && base.back() >= '1' && base.back() <= '9' &&
        base != "var-nocut2" && base != "var-reduce1" && base != "var-reduce12") {
        suffix_r = base.back() - '0';
        base.remove_suffix(1);
    }
    for (const Name& n : LONG_NAMES) {
        if (base == n.token) {
            PruningPolicy p{n.kind, 3};
            if (n.kind == PolicyKind::NoNull) p.reduction = 1;
            if (suffix_r) p.reduction = suffix_r;
            if (r > 0) p.reduction = r;
            if (p.reduction < 1)
                throw std::invalid_argument("policy reduction must be >= 1");
            return p;
        }
    }
    throw std::invalid_argument("unknown policy '" + std::string(token) + "'");
}

std::string PruningPolicy::label() const {
    switch (kind) {
        case PolicyKind::NoNull: return "nonull";
        case PolicyKind::Standard: return "std R=" + std::to_string(reduction);
        case PolicyKind::Verified: return "vrfd R=" + std::to_string(reduction);
        case PolicyKind::VarNoCutoffReduce2: return "var-nocut2 R=" + std::to_string(reduction);
        case PolicyKind::VarReduceOneEverywhere: return "var-reduce1 R=" + std::to_string(reduction);
        case PolicyKind::VarReduceOneThenTwo: return "var-reduce12 R=" + std::to_string(reduction);
    }
    return "?";
}

std::string PruningPolicy::token() const {
    switch (kind) {
        case PolicyKind::NoNull: return "nonull";
        case PolicyKind::Standard: return "std" + std::to_string(reduction);
        case PolicyKind::Verified: return "vrfd" + std::to_string(reduction);
        case PolicyKind::VarNoCutoffReduce2: return "var-nocut2";
        case PolicyKind::VarReduceOneEverywhere: return "var-reduce1";
        case PolicyKind::VarReduceOneThenTwo: return "var-reduce12";
    }
    return "?";
}

bool null_move_allowed(const Position& p, int depth, bool verify) {
    if (p.in_check()) return false;
    if (p.null_count() != 0) return false;
    if (p.only_king_and_pawns(p.side_to_move())) return false;
    if (verify && depth == 1) return false;
    return true;
}

}  // namespace nmlab

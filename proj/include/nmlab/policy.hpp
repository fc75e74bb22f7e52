#pragma once

#include <string>
#include <string_view>

#include "nmlab/position.hpp"
#include "nmlab/types.hpp"

namespace nmlab {

// What happens when the reduced-depth null-move search fails high:
//   NoNull                 - null move never tried
//   Standard               - cut off immediately, returning the null value
//   Verified               - first fail-high on a path reduces the depth by
//                            one and continues (verifying the cutoff); the
//                            subtree below then cuts off immediately; a
//                            verified node whose move loop stays below beta
//                            is a zugzwang and is re-searched at full depth
//   VarNoCutoffReduce2     - never cut off, reduce the depth by two
//   VarReduceOneEverywhere - never cut off anywhere, reduce the depth by one
//   VarReduceOneThenTwo    - reduce by one at verifying nodes, by two in
//                            their subtrees, never cut off
enum class PolicyKind {
    NoNull,
    Standard,
    Verified,
    VarNoCutoffReduce2,
    VarReduceOneEverywhere,
    VarReduceOneThenTwo,
};

struct PruningPolicy {
    PolicyKind kind = PolicyKind::Verified;
    int reduction = 3;  // plies subtracted for the null-move search, >= 1

    static PruningPolicy no_null() { return {PolicyKind::NoNull, 1}; }
    static PruningPolicy standard(int r) { return {PolicyKind::Standard, r}; }
    static PruningPolicy verified(int r = 3) { return {PolicyKind::Verified, r}; }

    // Compact token, e.g. "std2", "vrfd3", "nonull", "var-reduce1";
    // also accepts the long selector names combined with an explicit R.
    static PruningPolicy parse(std::string_view token, int r = 0);

    std::string label() const;       // human form, e.g. "std R=2"
    std::string token() const;       // round-trips through parse()

    bool uses_verify_flag() const {
        return kind == PolicyKind::Verified || kind == PolicyKind::VarReduceOneThenTwo;
    }

    bool operator==(const PruningPolicy&) const = default;
};

// True when a null-move search may be tried at this node: not in check, the
// previous ply was not a null move, the side to move has a piece other than
// king and pawns, and a verifying node still has depth left to verify with.
bool null_move_allowed(const Position& p, int depth, bool verify);

}  // namespace nmlab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autodel/constructions.hpp"
#include "autodel/permgroup.hpp"

namespace autodel {

struct VerifyOptions {
    std::size_t abstract_group_cap = 10000;
    int iso_order_cap = 512;
};

struct VerificationReport {
    bigint aut_before_order = 0;
    bigint aut_after_order = 0;
    bool iso_before = false;
    bool iso_after = false;
    std::optional<std::vector<int>> map_before; // Aut(G) element index -> gamma1 index
    std::optional<std::vector<int>> map_after;
    double elapsed_before_s = 0;
    double elapsed_after_s = 0;
    bool resource_limited = false;
    std::string note;

    bool pass() const { return iso_before && iso_after; }
};

// Computes Aut(G) and Aut(G - target), converts both to abstract groups
// and tests isomorphism against the claimed gamma1/gamma2. Order
// mismatches fail fast without abstract extraction; cap overruns yield a
// partial report (orders only) flagged resource_limited.
VerificationReport verify_witness(const Witness& w, const VerifyOptions& options = {});

// Every generator of Stab_Aut(g)(v), restricted to the deleted id space,
// must be an automorphism of g - v.
bool check_stabilizer_subgroup(const Graph& g, int v);

} // namespace autodel

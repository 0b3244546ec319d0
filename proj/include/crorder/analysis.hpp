#pragma once

#include "crorder/chains.hpp"
#include "crorder/instance.hpp"
#include "crorder/order.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crorder {

struct PerRootEntry {
    RootId root = 0;
    Order order = Order::infinite();
    std::optional<std::vector<RootId>> witness;
};

struct AnalysisReport {
    InstanceSpec spec;
    std::shared_ptr<const RootSystem> system;  ///< null for Lee extensions

    int cr_dim = 0;
    int cr_codim = 0;
    bool fundamental = false;
    std::optional<bool> fundamental_criterion;  ///< Phi_o criterion (root-level instances only)
    std::optional<bool> adapted_basis;
    bool weakly_nondegenerate = false;
    Order levi_order = Order(0);
    Order contact_order = Order(0);
    std::optional<Order> brace_contact_order;
    std::optional<bool> minimal_type;

    std::vector<RootSet> levi_chain;
    std::vector<RootSet> contact_chain;
    std::vector<std::size_t> levi_chain_dims;     ///< Lee extensions
    std::vector<std::size_t> contact_chain_dims;  ///< Lee extensions
    std::vector<PerRootEntry> per_root;

    std::vector<std::pair<std::string, bool>> checks;
    bool checks_pass() const;
    bool check(const std::string& name) const;
};

/// Runs every computation and cross-check, recording failures as flags.
AnalysisReport analyze_unchecked(const InstanceSpec& spec);
/// As analyze_unchecked, then throws InternalInconsistency naming the first failed check.
AnalysisReport analyze(const InstanceSpec& spec);

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string report_json(const AnalysisReport& report);
std::string report_text(const AnalysisReport& report);

struct TheoremTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
};

struct EnumerationItem {
    std::size_t sigma_index = 0;
    unsigned phi_mask = 0;
    AnalysisReport report;
};

struct EnumerationResult {
    CartanType type;
    int rank;
    std::size_t sigma_count = 0;
    std::vector<EnumerationItem> items;  ///< sorted by (sigma_index, phi_mask)
    std::vector<TheoremTally> tallies;
    const TheoremTally& tally(const std::string& name) const;
};

/// Every Phi and every signed-permutation involution preserving R (the first `bound`
/// involutions if given). Runs on worker_count() threads.
EnumerationResult enumerate_instances(CartanType type, int rank, std::optional<std::size_t> bound = std::nullopt);

/// Theorem tallies over a set of reports.
std::vector<TheoremTally> tally_theorems(const std::vector<EnumerationItem>& items);

nlohmann::ordered_json to_json(const EnumerationResult& result);
std::string enumeration_text(const EnumerationResult& result);

/// CRORDER_THREADS if set to a positive integer, else the hardware concurrency.
unsigned worker_count();

}  // namespace crorder

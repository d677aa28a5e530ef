#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mcasim {

/// Per-component average power constants (45 nm figures).
struct ComponentPowerTable {
    double im = 37e-6;                 // W, interface module
    double sigmoid_neuron = 8e-6;      // W, analog sigmoidal neuron
    double voltage_converter = 24e-6;  // W
    double opamp_neuron = 104e-6;      // W, opamp-based sigmoidal neuron

    double lookup(const std::string& key) const;
};

/// Documented constants for the Wheatstone-bridge baseline; reported only,
/// never computed.
struct BridgeBaselineConstants {
    static constexpr double total_10x4_w = 230e-3;
    static constexpr double sigmoid_neuron_w = 2.06e-3;
};

enum class ArchitectureKind { Proposed, DualRowConverter, DualColumnOpamp };

std::string architecture_name(ArchitectureKind arch);

using ComponentCounts = std::map<std::string, long long>;

/// Component counts for a topology under each architecture's counting rule.
/// Proposed: one IM and one sigmoid neuron per neuron. DualColumnOpamp: one
/// opamp neuron per neuron. DualRowConverter: one voltage converter per layer
/// input plus one sigmoid neuron per neuron.
ComponentCounts component_counts(ArchitectureKind arch, const std::vector<int>& topology);

/// Sum of count * component power. Unknown component keys are an error.
double total_power(const ComponentCounts& counts, const ComponentPowerTable& table);

/// 100 * (p_reference - p_proposed) / p_reference.
double reduction_percent(double p_proposed, double p_reference);

struct PowerRow {
    ArchitectureKind arch;
    double computed_w = 0.0;
    std::optional<double> published_mw;    // reference value where known
    std::optional<double> reduction_pct;   // computed vs the proposed row
    bool discrepancy_flag = false;         // computed and published value disagree > 5%
};

struct PowerReport {
    std::string preset;  // "mnist", "asl", "cifar10" or "" for a custom topology
    std::vector<int> topology;
    std::vector<PowerRow> rows;  // Proposed, DualRowConverter, DualColumnOpamp
};

/// Architecture comparison for a topology; preset_name attaches published
/// reference values when it names a known preset.
PowerReport make_power_report(const std::vector<int>& topology,
                              const ComponentPowerTable& table,
                              const std::string& preset_name = "");

/// Topology for a named preset (mnist, asl, cifar10).
std::vector<int> preset_topology(const std::string& preset);

std::string format_report_table(const PowerReport& report);
std::string format_report_csv(const PowerReport& report);

}  // namespace mcasim

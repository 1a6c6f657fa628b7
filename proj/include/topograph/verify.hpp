#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topograph/graph.hpp"

namespace topograph {

/// Deterministic generator configuration: the same seed yields the same
/// graph sequence, byte for byte.
struct GenConfig {
    std::uint64_t seed = 1;
    int max_vertices = 6;
    int max_edges = 10;
    bool allow_partial = false;
    bool allow_omega = false;
    bool allow_relative = false;
};

/// Draws the index-th graph of the configured family. Roughly 30% of the
/// graphs are forced to contain a singular vertex and 30% a cycle so that
/// the at-infinity and lasso machinery is exercised on every run.
Graph random_graph(const GenConfig& cfg, std::uint64_t index);

struct CheckOutcome {
    enum class Status { Pass, Skip, Fail };
    Status status = Status::Pass;
    std::string detail;

    static CheckOutcome pass() { return {}; }
    static CheckOutcome skip(std::string why) { return {Status::Skip, std::move(why)}; }
    static CheckOutcome fail(std::string why) { return {Status::Fail, std::move(why)}; }
    bool failed() const { return status == Status::Fail; }
    bool ran() const { return status != Status::Skip; }
};

/// Cross-construction invariants, each usable on its own. All skip (rather
/// than fail) when the graph is outside their precondition.
CheckOutcome check_counting_identities(const Graph& g, int k, const Graph& ek);
CheckOutcome check_k_invariance(const Graph& g);
CheckOutcome check_relative_k_invariance(const Graph& g, const std::set<VertexId>& u);
CheckOutcome check_factor_maps(const Graph& g, int k);
CheckOutcome check_sgds_fixed_point(const Graph& g);
CheckOutcome check_boundary_bijection(const Graph& g, int k);
CheckOutcome check_groupoid_axioms(const Graph& g, int bound, std::size_t max_units = 16);
CheckOutcome check_isotropy_lattice(const Graph& g, int bound, std::size_t max_units = 60);
CheckOutcome check_unitality_chain(const Graph& g);
CheckOutcome check_snf_certificate(const Graph& g);

struct CaseReport {
    std::uint64_t index = 0;
    std::string graph_text;
    std::vector<std::pair<std::string, CheckOutcome>> checks;

    bool passed() const;
};

struct SuiteReport {
    GenConfig cfg;
    std::uint64_t cases = 0;
    std::vector<CaseReport> case_reports;

    std::uint64_t failures() const;
    bool all_passed() const { return failures() == 0; }
    /// Deterministic text; failing cases embed the offending graph so a
    /// report alone is enough to replay them.
    std::string render() const;
};

SuiteReport run_suite(const GenConfig& cfg, std::uint64_t cases);

}  // namespace topograph

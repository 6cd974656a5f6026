#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "wallflip/numex.hpp"
#include "wallflip/strata.hpp"

namespace wallflip {

using Json = nlohmann::ordered_json;

// Parsed problem description (one JSON document drives every subcommand).
struct ProblemSpec {
    std::optional<SurfaceLattice> lattice;
    std::optional<ChernData> chern;
    std::optional<AmpleCone> cone;
    std::optional<NumClass> path_start, path_end;
    std::optional<NumClass> wall_point, twist_start, twist_end;
    std::vector<ChernData> candidates;
    std::optional<NumClass> polarization;
    std::optional<NumClass> probe;
    int family_count = 0;
    Int approx_d = 0;
    int approx_count = 0;
    std::optional<std::vector<NumClass>> nef_generators;
    int shrink_steps = 0;
    std::optional<std::pair<NumClass, NumClass>> plot_basis;
    bool plot_coords = false;

    const SurfaceLattice& need_lattice() const;
    const ChernData& need_chern() const;
    const AmpleCone& need_cone() const;
};

ProblemSpec parse_spec(const Json& doc);
ProblemSpec parse_spec_file(const std::string& path);

// JSON renderings; every rational value appears as an exact "num/den" string.
Json to_json(const NumClass& x);
Json to_json(const ChernData& e);
Json to_json(const WallSet& ws);
Json to_json(const NefHeuristicResult& res);
Json to_json(const ChamberPath& path);
Json to_json(const TwistStratification& st, const SurfaceLattice& lat);
Json to_json(const FlipReport& rep, const SurfaceLattice& lat);
Json to_json(const UnboundedFamily& fam);
Json to_json(const SurdApprox& a);

std::string render_text(const Json& report);

}  // namespace wallflip

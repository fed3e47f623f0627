#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "comcore/grid.hpp"
#include "comcore/path.hpp"
#include "comcore/sim.hpp"

namespace comcore {

struct Scenario {
    GridSpec grid{1, 1};
    std::vector<AgentSpec> agents;
    SimConfig sim;
    std::string name;
    std::optional<std::uint64_t> seed;
};

namespace detail {

inline Cell parse_cell(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer()) {
        throw Error(ErrorKind::Scenario, where + ": expected [x,y] integer pair");
    }
    return Cell{j[0].get<int>(), j[1].get<int>()};
}

inline nlohmann::json cell_json(const Cell& c) {
    return nlohmann::json::array({c.x, c.y});
}

// Uniform draw from [0, n) using only the engine's specified output stream,
// so generated scenarios are identical across platforms.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

}  // namespace detail

// Parse and fully validate a scenario document. Defaults: cell_size_m 10,
// trigger distance 3, max_iterations 100, swap policy "flag", heading
// inferred from the goal direction.
inline Scenario load_scenario(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Scenario, std::string("scenario parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorKind::Scenario, "scenario root must be an object");
    }

    Scenario s;
    s.name = doc.value("name", std::string{});
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) {
            throw Error(ErrorKind::Scenario, "seed must be a non-negative integer");
        }
        s.seed = doc["seed"].get<std::uint64_t>();
    }

    if (!doc.contains("grid") || !doc["grid"].is_object()) {
        throw Error(ErrorKind::Scenario, "missing grid object");
    }
    const auto& g = doc["grid"];
    if (!g.contains("cols") || !g.contains("rows") ||
        !g["cols"].is_number_integer() || !g["rows"].is_number_integer()) {
        throw Error(ErrorKind::Scenario, "grid.cols and grid.rows must be integers");
    }
    const double cell_size = g.value("cell_size_m", 10.0);
    std::set<Cell> blocked;
    if (g.contains("blocked")) {
        if (!g["blocked"].is_array()) {
            throw Error(ErrorKind::Scenario, "grid.blocked must be an array of [x,y]");
        }
        for (const auto& b : g["blocked"]) {
            blocked.insert(detail::parse_cell(b, "grid.blocked"));
        }
    }
    s.grid = GridSpec(g["cols"].get<int>(), g["rows"].get<int>(), cell_size,
                      std::move(blocked));

    if (!doc.contains("agents") || !doc["agents"].is_array() ||
        doc["agents"].empty()) {
        throw Error(ErrorKind::Scenario, "scenario needs a non-empty agents array");
    }
    const auto& agents_json = doc["agents"];
    s.agents.resize(agents_json.size());
    std::vector<bool> seen(agents_json.size(), false);
    for (const auto& a : agents_json) {
        if (!a.is_object() || !a.contains("id") || !a["id"].is_number_integer()) {
            throw Error(ErrorKind::Scenario, "each agent needs an integer id");
        }
        const int id = a["id"].get<int>();
        if (id < 0 || id >= static_cast<int>(s.agents.size())) {
            throw Error(ErrorKind::Scenario,
                        "agent ids must be dense from 0; got id " + std::to_string(id) +
                            " with " + std::to_string(s.agents.size()) + " agents");
        }
        if (seen[static_cast<size_t>(id)]) {
            throw Error(ErrorKind::Scenario, "duplicate agent id " + std::to_string(id));
        }
        seen[static_cast<size_t>(id)] = true;
        if (!a.contains("start") || !a.contains("goal")) {
            throw Error(ErrorKind::Scenario,
                        "agent " + std::to_string(id) + " needs start and goal");
        }
        AgentSpec spec;
        spec.id = id;
        spec.start = detail::parse_cell(a["start"], "agent " + std::to_string(id) + " start");
        spec.goal = detail::parse_cell(a["goal"], "agent " + std::to_string(id) + " goal");
        if (a.contains("heading")) {
            const auto h = parse_heading(a["heading"].get<std::string>());
            if (!h) {
                throw Error(ErrorKind::Scenario,
                            "agent " + std::to_string(id) + " heading must be N, E, S or W");
            }
            spec.start_heading = *h;
        } else {
            spec.start_heading = infer_heading(spec.start, spec.goal);
        }
        s.agents[static_cast<size_t>(id)] = spec;
    }

    for (const AgentSpec& a : s.agents) {
        if (!s.grid.in_bounds(a.start)) {
            throw Error(ErrorKind::Scenario, "agent " + std::to_string(a.id) +
                                                 " start " + to_string(a.start) +
                                                 " out of bounds");
        }
        if (!s.grid.in_bounds(a.goal)) {
            throw Error(ErrorKind::Scenario, "agent " + std::to_string(a.id) +
                                                 " goal " + to_string(a.goal) +
                                                 " out of bounds");
        }
        if (s.grid.is_blocked(a.start) || s.grid.is_blocked(a.goal)) {
            throw Error(ErrorKind::Scenario, "agent " + std::to_string(a.id) +
                                                 " start or goal is a blocked cell");
        }
    }
    for (size_t i = 0; i < s.agents.size(); ++i) {
        for (size_t j = i + 1; j < s.agents.size(); ++j) {
            if (s.agents[i].start == s.agents[j].start) {
                throw Error(ErrorKind::Scenario,
                            "agents " + std::to_string(s.agents[i].id) + " and " +
                                std::to_string(s.agents[j].id) + " share start " +
                                to_string(s.agents[i].start));
            }
            if (s.agents[i].goal == s.agents[j].goal) {
                throw Error(ErrorKind::Scenario,
                            "agents " + std::to_string(s.agents[i].id) + " and " +
                                std::to_string(s.agents[j].id) + " share goal " +
                                to_string(s.agents[i].goal));
            }
        }
    }

    if (doc.contains("sim")) {
        const auto& sim = doc["sim"];
        if (!sim.is_object()) {
            throw Error(ErrorKind::Scenario, "sim must be an object");
        }
        s.sim.trigger_distance_cells =
            sim.value("trigger_distance_cells", s.sim.trigger_distance_cells);
        s.sim.max_iterations = sim.value("max_iterations", s.sim.max_iterations);
        if (sim.contains("swap_policy")) {
            const auto p = parse_swap_policy(sim["swap_policy"].get<std::string>());
            if (!p) {
                throw Error(ErrorKind::Scenario,
                            "swap_policy must be ignore, flag or delay");
            }
            s.sim.swap_policy = *p;
        }
    }
    if (s.sim.trigger_distance_cells < 1) {
        throw Error(ErrorKind::Scenario, "trigger_distance_cells must be >= 1");
    }
    if (s.sim.max_iterations < 1) {
        throw Error(ErrorKind::Scenario, "max_iterations must be >= 1");
    }
    return s;
}

inline nlohmann::json scenario_json(const Scenario& s) {
    nlohmann::json g;
    g["cols"] = s.grid.cols();
    g["rows"] = s.grid.rows();
    g["cell_size_m"] = s.grid.cell_size_m();
    g["blocked"] = nlohmann::json::array();
    for (const Cell& c : s.grid.blocked()) {
        g["blocked"].push_back(detail::cell_json(c));
    }
    nlohmann::json agents = nlohmann::json::array();
    for (const AgentSpec& a : s.agents) {
        nlohmann::json aj;
        aj["id"] = a.id;
        aj["start"] = detail::cell_json(a.start);
        aj["heading"] = heading_name(a.start_heading);
        aj["goal"] = detail::cell_json(a.goal);
        agents.push_back(aj);
    }
    nlohmann::json sim;
    sim["trigger_distance_cells"] = s.sim.trigger_distance_cells;
    sim["swap_policy"] = to_string(s.sim.swap_policy);
    sim["max_iterations"] = s.sim.max_iterations;

    nlohmann::json doc;
    doc["name"] = s.name;
    if (s.seed) doc["seed"] = *s.seed;
    doc["grid"] = g;
    doc["agents"] = agents;
    doc["sim"] = sim;
    return doc;
}

inline std::string save_scenario(const Scenario& s) {
    return scenario_json(s).dump(2) + "\n";
}

// Seeded random scenario: agent_count distinct starts and distinct goals on
// an empty grid_size x grid_size grid, reproducible bit-for-bit from the seed.
inline Scenario gen_bench(int agent_count, int grid_size, std::uint64_t seed) {
    if (agent_count < 1) {
        throw Error(ErrorKind::Generation, "agent_count must be >= 1");
    }
    if (grid_size < 1) {
        throw Error(ErrorKind::Generation, "grid_size must be >= 1");
    }
    const int cells = grid_size * grid_size;
    if (agent_count > cells) {
        throw Error(ErrorKind::Generation,
                    std::to_string(agent_count) + " agents do not fit in " +
                        std::to_string(cells) + " cells");
    }

    std::mt19937_64 rng(seed);
    auto sample_distinct = [&](int n) {
        std::vector<Cell> pool;
        pool.reserve(static_cast<size_t>(cells));
        for (int y = 0; y < grid_size; ++y) {
            for (int x = 0; x < grid_size; ++x) pool.push_back(Cell{x, y});
        }
        for (int i = 0; i < n; ++i) {
            const auto j = static_cast<size_t>(i) +
                           detail::bounded_rand(rng, static_cast<std::uint64_t>(cells - i));
            std::swap(pool[static_cast<size_t>(i)], pool[j]);
        }
        pool.resize(static_cast<size_t>(n));
        return pool;
    };
    const std::vector<Cell> starts = sample_distinct(agent_count);
    const std::vector<Cell> goals = sample_distinct(agent_count);

    Scenario s;
    s.grid = GridSpec(grid_size, grid_size, 10.0);
    s.name = "bench-g" + std::to_string(grid_size) + "-a" +
             std::to_string(agent_count) + "-s" + std::to_string(seed);
    s.seed = seed;
    s.agents.reserve(static_cast<size_t>(agent_count));
    for (int i = 0; i < agent_count; ++i) {
        AgentSpec a;
        a.id = i;
        a.start = starts[static_cast<size_t>(i)];
        a.goal = goals[static_cast<size_t>(i)];
        a.start_heading = infer_heading(a.start, a.goal);
        s.agents.push_back(a);
    }
    return s;
}

}  // namespace comcore

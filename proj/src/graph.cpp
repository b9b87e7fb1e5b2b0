#include "ptabkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "ptabkit/crystal.hpp"
#include "ptabkit/io.hpp"
#include "ptabkit/rsk.hpp"

namespace ptab {

CrystalComponent explore(const Ptableau& seed, std::size_t max_nodes) {
    const int n = seed.n_rows();
    const Ptableau start = justify(seed, Side::Left);

    // Phase 1: close the seed under raising and lowering.
    std::map<Ptableau, std::size_t> discovered;
    std::deque<Ptableau> frontier;
    discovered.emplace(start, 0);
    frontier.push_back(start);
    while (!frontier.empty()) {
        Ptableau node = std::move(frontier.front());
        frontier.pop_front();
        for (int i = 1; i < n; ++i) {
            for (Direction dir : {Direction::Raise, Direction::Lower}) {
                auto next = crystal_ptab(node, i, dir);
                if (!next) continue;
                if (discovered.emplace(*next, discovered.size()).second) {
                    if (discovered.size() > max_nodes)
                        throw error(errc::limit_exceeded,
                                    "component exceeds " + std::to_string(max_nodes) + " nodes",
                                    (long long)(discovered.size()));
                    frontier.push_back(std::move(*next));
                }
            }
        }
    }

    // Phase 2: renumber deterministically, breadth-first from the source
    // along lowering edges, each layer ordered by canonical text.
    std::vector<const Ptableau*> sources;
    for (const auto& [node, idx] : discovered)
        if (is_highest_weight(node)) sources.push_back(&node);
    if (sources.size() != 1)
        throw error(errc::internal_inconsistency,
                    "component has " + std::to_string(sources.size()) +
                        " highest-weight vertices instead of one");

    CrystalComponent comp;
    std::map<Ptableau, std::size_t> order;
    auto admit = [&](const Ptableau& node) {
        order.emplace(node, comp.nodes.size());
        comp.nodes.push_back(node);
    };
    admit(*sources.front());
    std::size_t layer_begin = 0;
    while (layer_begin < comp.nodes.size()) {
        const std::size_t layer_end = comp.nodes.size();
        std::vector<Ptableau> next_layer;
        for (std::size_t idx = layer_begin; idx < layer_end; ++idx)
            for (int i = 1; i < n; ++i) {
                auto next = crystal_ptab(comp.nodes[idx], i, Direction::Lower);
                if (!next || order.count(*next)) continue;
                if (std::find(next_layer.begin(), next_layer.end(), *next) == next_layer.end())
                    next_layer.push_back(std::move(*next));
            }
        std::sort(next_layer.begin(), next_layer.end(),
                  [](const Ptableau& a, const Ptableau& b) {
                      const std::string ta = format_ptableau(a);
                      const std::string tb = format_ptableau(b);
                      if (ta != tb) return ta < tb;
                      return a < b;
                  });
        for (auto& node : next_layer) admit(node);
        layer_begin = layer_end;
    }
    if (comp.nodes.size() != discovered.size())
        throw error(errc::internal_inconsistency,
                    "lowering edges reach " + std::to_string(comp.nodes.size()) + " of " +
                        std::to_string(discovered.size()) + " component nodes");

    std::size_t sinks = 0;
    for (std::size_t idx = 0; idx < comp.nodes.size(); ++idx) {
        bool lowest = true;
        for (int i = 1; i < n; ++i) {
            auto next = crystal_ptab(comp.nodes[idx], i, Direction::Lower);
            if (!next) continue;
            lowest = false;
            comp.edges.push_back({idx, i, order.at(*next)});
        }
        if (lowest) {
            comp.sink = idx;
            ++sinks;
        }
    }
    if (sinks != 1)
        throw error(errc::internal_inconsistency,
                    "component has " + std::to_string(sinks) +
                        " lowest-weight vertices instead of one");
    comp.source = 0;
    return comp;
}

std::string export_component(const CrystalComponent& comp, ExportFormat format) {
    if (format == ExportFormat::Dot) {
        std::string out = "digraph crystal {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
        for (std::size_t idx = 0; idx < comp.nodes.size(); ++idx) {
            std::string label = format_ptableau(comp.nodes[idx]);
            std::string escaped;
            for (char ch : label) {
                if (ch == '\n')
                    escaped += "\\n";
                else
                    escaped += ch;
            }
            out += "  n" + std::to_string(idx) + " [label=\"" + escaped + "\"];\n";
        }
        for (const auto& edge : comp.edges)
            out += "  n" + std::to_string(edge.from) + " -> n" + std::to_string(edge.to) +
                   " [label=\"f" + std::to_string(edge.index) + "\"];\n";
        out += "}\n";
        return out;
    }
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& node : comp.nodes) {
        nlohmann::ordered_json entry = json_ptableau(node);
        entry["weight"] = weight(node);
        j["nodes"].push_back(std::move(entry));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& edge : comp.edges)
        j["edges"].push_back({{"from", edge.from}, {"index", edge.index}, {"to", edge.to}});
    j["source"] = comp.source;
    j["sink"] = comp.sink;
    return j.dump(2) + "\n";
}

Ptableau plactic_class(const Ptableau& t) { return ptab_rsk(t).pt; }

unsigned long long weyl_dimension(std::vector<long long> lambda, int n) {
    if (n < 1) throw error(errc::index_out_of_range, "rank must be positive");
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (int(lambda.size()) > n)
        throw error(errc::malformed_input,
                    "partition has more than " + std::to_string(n) + " parts");
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] < 0 || (i + 1 < lambda.size() && lambda[i] < lambda[i + 1]))
            throw error(errc::malformed_input, "shape must be a partition");
    lambda.resize(std::size_t(n), 0);
    unsigned long long num = 1, den = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            num *= (unsigned long long)(lambda[std::size_t(i) - 1] - lambda[std::size_t(j) - 1] +
                                        j - i);
            den *= (unsigned long long)(j - i);
            const unsigned long long g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    if (den != 1)
        throw error(errc::internal_inconsistency, "dimension product failed to divide out");
    return num;
}

}  // namespace ptab

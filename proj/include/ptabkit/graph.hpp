// Crystal-graph exploration.
//
// The crystal graph on n-row perforated tableaux has an edge x --i--> y when
// lower_i(x) = y.  explore() computes the connected component of a seed by
// closing under raising and lowering, then renumbers the nodes
// deterministically -- breadth-first from the highest-weight source along
// lowering edges in increasing index order, ties within a layer broken by
// canonical text -- so that exports are byte-identical no matter which node
// of the component seeded the search.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ptabkit/errors.hpp"
#include "ptabkit/ptableau.hpp"

namespace ptab {

struct CrystalEdge {
    std::size_t from = 0;  // node index
    int index = 0;         // operator index i
    std::size_t to = 0;    // node index; lower_i(nodes[from]) == nodes[to]

    friend bool operator==(const CrystalEdge& a, const CrystalEdge& b) {
        return a.from == b.from && a.index == b.index && a.to == b.to;
    }
};

struct CrystalComponent {
    std::vector<Ptableau> nodes;     // canonical layout, deterministic order
    std::vector<CrystalEdge> edges;  // sorted by (from, index)
    std::size_t source = 0;          // unique node with all raises null
    std::size_t sink = 0;            // unique node with all lowers null
};

inline constexpr std::size_t kDefaultNodeLimit = 100000;

// Throws ptab::error(limit_exceeded) -- with detail() = number of nodes
// discovered -- when the component exceeds max_nodes.
CrystalComponent explore(const Ptableau& seed, std::size_t max_nodes = kDefaultNodeLimit);

enum class ExportFormat { Dot, Json };

std::string export_component(const CrystalComponent& comp, ExportFormat format);

// The canonical representative of t's plactic class: the insertion tableau
// ptab_rsk(t).pt.  Two tableaux share a representative exactly when they sit
// at the same position of isomorphic components.
Ptableau plactic_class(const Ptableau& t);

// dim of the irreducible GL_n module of highest weight lambda (a partition,
// padded with zeros to n parts): the product formula
// prod_{1<=i<j<=n} (lambda_i - lambda_j + j - i) / (j - i).
unsigned long long weyl_dimension(std::vector<long long> lambda, int n);

}  // namespace ptab

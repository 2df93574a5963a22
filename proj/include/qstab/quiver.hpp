#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "qstab/errors.hpp"

namespace qstab {

struct Arrow {
    std::string id;
    int tail = -1;  // vertex indices
    int head = -1;
};

// Finite acyclic quiver. Vertices carry stable string ids and are indexed
// by their position in the input order. Parallel arrows are allowed.
class Quiver {
   public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices,
           std::vector<std::tuple<std::string, std::string, std::string>> arrows);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_id(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int vertex_index(const std::string& id) const;

    friend bool operator==(const Quiver& a, const Quiver& b);

   private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, int> vindex_;
};

// Topological order of the vertices; throws AcyclicityError on a cycle.
std::vector<int> validate_quiver(const Quiver& q);

// Composable arrow sequence, stored in application order: arrows[0] is
// applied first. Empty sequence encodes the trivial path e_v with
// source == target == v.
struct Path {
    std::vector<int> arrows;
    int source = -1;
    int target = -1;
};

// All nontrivial paths, by dynamic programming over a topological order.
std::vector<Path> enumerate_paths(const Quiver& q);
// Number of paths including the trivial ones.
long path_count(const Quiver& q);

}  // namespace qstab

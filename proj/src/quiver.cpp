#include "qstab/quiver.hpp"

#include <algorithm>
#include <tuple>

namespace qstab {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertices_(std::move(vertices)) {
    for (int i = 0; i < num_vertices(); ++i) {
        if (!vindex_.emplace(vertices_[i], i).second)
            throw InputError("duplicate vertex id '" + vertices_[i] + "'");
    }
    for (const auto& [id, tail, head] : arrows) {
        Arrow a;
        a.id = id;
        a.tail = vertex_index(tail);
        a.head = vertex_index(head);
        arrows_.push_back(std::move(a));
    }
    for (size_t i = 0; i < arrows_.size(); ++i)
        for (size_t j = i + 1; j < arrows_.size(); ++j)
            if (arrows_[i].id == arrows_[j].id)
                throw InputError("duplicate arrow id '" + arrows_[i].id + "'");
}

int Quiver::vertex_index(const std::string& id) const {
    auto it = vindex_.find(id);
    if (it == vindex_.end()) throw InputError("unknown vertex id '" + id + "'");
    return it->second;
}

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_) return false;
    if (a.arrows_.size() != b.arrows_.size()) return false;
    for (size_t i = 0; i < a.arrows_.size(); ++i) {
        const Arrow &x = a.arrows_[i], &y = b.arrows_[i];
        if (x.id != y.id || x.tail != y.tail || x.head != y.head) return false;
    }
    return true;
}

std::vector<int> validate_quiver(const Quiver& q) {
    const int n = q.num_vertices();
    std::vector<int> indeg(n, 0);
    for (const Arrow& a : q.arrows()) ++indeg[a.head];
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> ready;
    for (int v = n - 1; v >= 0; --v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (const Arrow& a : q.arrows())
            if (a.tail == v && --indeg[a.head] == 0) ready.push_back(a.head);
    }
    if (static_cast<int>(order.size()) != n)
        throw AcyclicityError("quiver has an oriented cycle");
    return order;
}

std::vector<Path> enumerate_paths(const Quiver& q) {
    std::vector<int> order = validate_quiver(q);
    // paths_to[v]: all nontrivial paths ending at v
    std::vector<std::vector<Path>> paths_to(q.num_vertices());
    for (int v : order) {
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            if (ar.head != v) continue;
            Path p;
            p.arrows = {a};
            p.source = ar.tail;
            p.target = v;
            paths_to[v].push_back(p);
            for (const Path& pre : paths_to[ar.tail]) {
                Path ext = pre;
                ext.arrows.push_back(a);
                ext.target = v;
                paths_to[v].push_back(std::move(ext));
            }
        }
    }
    std::vector<Path> all;
    for (auto& bucket : paths_to)
        for (auto& p : bucket) all.push_back(std::move(p));
    return all;
}

long path_count(const Quiver& q) {
    return q.num_vertices() + static_cast<long>(enumerate_paths(q).size());
}

}  // namespace qstab

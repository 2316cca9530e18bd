#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace liptree {

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Address of a tree vertex as the child-index path from the root.
/// The root is the empty path; depth() equals the vertex length |v|.
class VertexId {
public:
    VertexId() = default;
    explicit VertexId(std::vector<int> path) : path_(std::move(path)) {
        for (int i : path_)
            if (i < 0) throw std::invalid_argument("VertexId: child indices must be non-negative");
    }

    static VertexId root() { return VertexId{}; }

    int depth() const { return static_cast<int>(path_.size()); }
    bool is_root() const { return path_.empty(); }
    const std::vector<int>& path() const { return path_; }

    VertexId parent() const {
        if (is_root()) throw std::logic_error("VertexId: root has no parent");
        std::vector<int> p(path_.begin(), path_.end() - 1);
        return VertexId{std::move(p)};
    }

    VertexId child(int index) const {
        std::vector<int> p = path_;
        p.push_back(index);
        return VertexId{std::move(p)};
    }

    bool operator==(const VertexId& o) const { return path_ == o.path_; }
    bool operator!=(const VertexId& o) const { return path_ != o.path_; }

    /// "o" for the root, else slash-joined child indices, e.g. "0/1/0".
    std::string to_string() const {
        if (is_root()) return "o";
        std::ostringstream out;
        for (std::size_t i = 0; i < path_.size(); ++i) {
            if (i) out << '/';
            out << path_[i];
        }
        return out.str();
    }

    static VertexId from_string(const std::string& s) {
        if (s.empty() || s == "o") return root();
        std::vector<int> p;
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, '/')) {
            if (tok.empty()) throw std::invalid_argument("VertexId: empty path component");
            p.push_back(std::stoi(tok));
        }
        return VertexId{std::move(p)};
    }

private:
    std::vector<int> path_;
};

/// Branching description: uniform child count, or a per-level list where
/// entry i-1 is the child count of vertices at depth i-1 (forming sphere i).
/// A list shorter than the truncation depth repeats its last entry.
class TreeShape {
public:
    static TreeShape uniform(int b) {
        if (b < 1) throw InvalidShapeError("TreeShape: child count must be >= 1");
        return TreeShape{std::vector<int>{b}};
    }

    static TreeShape per_level(std::vector<int> counts) {
        if (counts.empty()) throw InvalidShapeError("TreeShape: per-level list must be non-empty");
        for (int c : counts)
            if (c < 1) throw InvalidShapeError("TreeShape: every level's child count must be >= 1");
        return TreeShape{std::move(counts)};
    }

    /// Child count of a vertex at depth `level - 1`, i.e. the branching
    /// producing sphere `level` (level >= 1).
    int branching_at(int level) const {
        if (level < 1) throw std::out_of_range("TreeShape: level must be >= 1");
        std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(level) - 1, counts_.size() - 1);
        return counts_[i];
    }

    const std::vector<int>& counts() const { return counts_; }

private:
    explicit TreeShape(std::vector<int> counts) : counts_(std::move(counts)) {}
    std::vector<int> counts_;
};

/// A rooted tree without terminal vertices, cut at depth D.  Vertices are
/// enumerated breadth-first; all geometry is derived from sphere offsets.
/// Immutable after construction.
class TreeTruncation {
public:
    static constexpr std::size_t kDefaultVertexCap = 10'000'000;

    static TreeTruncation build(const TreeShape& shape, int depth,
                                std::size_t vertex_cap = kDefaultVertexCap) {
        if (depth < 1) throw std::invalid_argument("TreeTruncation: depth must be >= 1");
        std::vector<std::size_t> sizes(static_cast<std::size_t>(depth) + 1, 0);
        std::vector<std::size_t> offsets(static_cast<std::size_t>(depth) + 2, 0);
        sizes[0] = 1;
        offsets[0] = 0;
        std::size_t total = 1;
        for (int j = 1; j <= depth; ++j) {
            std::size_t b = static_cast<std::size_t>(shape.branching_at(j));
            std::size_t prev = sizes[static_cast<std::size_t>(j) - 1];
            if (prev > vertex_cap / b)
                throw CapacityError("TreeTruncation: vertex count exceeds cap");
            sizes[static_cast<std::size_t>(j)] = prev * b;
            offsets[static_cast<std::size_t>(j)] = total;
            total += sizes[static_cast<std::size_t>(j)];
            if (total > vertex_cap)
                throw CapacityError("TreeTruncation: vertex count exceeds cap");
        }
        offsets[static_cast<std::size_t>(depth) + 1] = total;
        return TreeTruncation{shape, depth, std::move(sizes), std::move(offsets), total};
    }

    int depth() const { return depth_; }
    const TreeShape& shape() const { return shape_; }
    std::size_t vertex_count() const { return vertex_count_; }

    std::size_t sphere_size(int j) const {
        check_level(j);
        return sizes_[static_cast<std::size_t>(j)];
    }

    /// BFS index of the first vertex at depth j.
    std::size_t sphere_offset(int j) const {
        check_level(j);
        return offsets_[static_cast<std::size_t>(j)];
    }

    int depth_of_index(std::size_t idx) const {
        if (idx >= vertex_count_) throw std::out_of_range("TreeTruncation: index out of range");
        auto it = std::upper_bound(offsets_.begin(), offsets_.end(), idx);
        return static_cast<int>(it - offsets_.begin()) - 1;
    }

    std::size_t parent_index(std::size_t idx) const {
        int j = depth_of_index(idx);
        if (j == 0) throw std::logic_error("TreeTruncation: root has no parent");
        std::size_t pos = idx - offsets_[static_cast<std::size_t>(j)];
        std::size_t b = static_cast<std::size_t>(shape_.branching_at(j));
        return offsets_[static_cast<std::size_t>(j) - 1] + pos / b;
    }

    std::size_t index_of(const VertexId& v) const {
        int j = v.depth();
        if (j > depth_) throw std::out_of_range("TreeTruncation: vertex deeper than truncation");
        std::size_t pos = 0;
        for (int lvl = 1; lvl <= j; ++lvl) {
            int b = shape_.branching_at(lvl);
            int c = v.path()[static_cast<std::size_t>(lvl) - 1];
            if (c >= b) throw std::out_of_range("TreeTruncation: child index exceeds branching");
            pos = pos * static_cast<std::size_t>(b) + static_cast<std::size_t>(c);
        }
        return offsets_[static_cast<std::size_t>(j)] + pos;
    }

    VertexId vertex_at(std::size_t idx) const {
        int j = depth_of_index(idx);
        std::size_t pos = idx - offsets_[static_cast<std::size_t>(j)];
        std::vector<int> path(static_cast<std::size_t>(j));
        for (int lvl = j; lvl >= 1; --lvl) {
            std::size_t b = static_cast<std::size_t>(shape_.branching_at(lvl));
            path[static_cast<std::size_t>(lvl) - 1] = static_cast<int>(pos % b);
            pos /= b;
        }
        return VertexId{std::move(path)};
    }

    bool contains(const VertexId& v) const {
        if (v.depth() > depth_) return false;
        for (int lvl = 1; lvl <= v.depth(); ++lvl)
            if (v.path()[static_cast<std::size_t>(lvl) - 1] >= shape_.branching_at(lvl)) return false;
        return true;
    }

    /// Vertices at depth D have no children inside the truncation; this is
    /// an artifact of cutting, not a terminal vertex of the modeled tree.
    bool at_boundary(const VertexId& v) const { return v.depth() == depth_; }

private:
    TreeTruncation(TreeShape shape, int depth, std::vector<std::size_t> sizes,
                   std::vector<std::size_t> offsets, std::size_t total)
        : shape_(std::move(shape)),
          depth_(depth),
          sizes_(std::move(sizes)),
          offsets_(std::move(offsets)),
          vertex_count_(total) {}

    void check_level(int j) const {
        if (j < 0 || j > depth_) throw std::out_of_range("TreeTruncation: level out of range");
    }

    TreeShape shape_;
    int depth_;
    std::vector<std::size_t> sizes_;    // sphere size per level 0..D
    std::vector<std::size_t> offsets_;  // BFS offset per level 0..D, plus total
    std::size_t vertex_count_;
};

inline VertexId parent(const VertexId& v) { return v.parent(); }

inline std::vector<VertexId> children(const VertexId& v, const TreeTruncation& t) {
    if (!t.contains(v)) throw std::out_of_range("children: vertex outside truncation");
    if (t.at_boundary(v)) return {};
    int b = t.shape().branching_at(v.depth() + 1);
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) out.push_back(v.child(i));
    return out;
}

inline std::vector<VertexId> sphere(const TreeTruncation& t, int j) {
    if (j < 0 || j > t.depth()) throw std::out_of_range("sphere: level out of range");
    std::vector<VertexId> out;
    out.reserve(t.sphere_size(j));
    std::size_t off = t.sphere_offset(j);
    for (std::size_t i = 0; i < t.sphere_size(j); ++i) out.push_back(t.vertex_at(off + i));
    return out;
}

inline int distance(const VertexId& v, const VertexId& w) {
    std::size_t common = 0;
    std::size_t lim = std::min(v.path().size(), w.path().size());
    while (common < lim && v.path()[common] == w.path()[common]) ++common;
    return v.depth() + w.depth() - 2 * static_cast<int>(common);
}

}  // namespace liptree

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "gvcnet/common.hpp"
#include "gvcnet/io.hpp"
#include "gvcnet/matrix.hpp"
#include "gvcnet/rng.hpp"

namespace gvc {

// Weighted undirected graph over named regions of interest.
// Adjacency is symmetric, non-negative, zero diagonal.
struct RoiGraph {
    std::vector<std::string> node_names;
    Matrix adjacency;

    std::size_t size() const { return node_names.size(); }

    std::size_t index_of(const std::string& roi) const {
        auto it = std::find(node_names.begin(), node_names.end(), roi);
        require(it != node_names.end(), "unknown ROI: " + roi);
        return static_cast<std::size_t>(it - node_names.begin());
    }

    void validate() const {
        require(adjacency.rows() == node_names.size() && adjacency.cols() == node_names.size(),
                "RoiGraph: adjacency dimension does not match node list");
        for (std::size_t i = 0; i < size(); ++i) {
            require(adjacency(i, i) == 0.0, "RoiGraph: nonzero diagonal at " + node_names[i]);
            for (std::size_t j = i + 1; j < size(); ++j) {
                require(std::fabs(adjacency(i, j) - adjacency(j, i)) <= 1e-12,
                        "RoiGraph: asymmetric adjacency at (" + node_names[i] + "," + node_names[j] + ")");
                require(adjacency(i, j) >= 0.0, "RoiGraph: negative weight at (" + node_names[i] + "," +
                                                    node_names[j] + ")");
            }
        }
    }
};

struct Edge {
    std::string src, dst;
    double weight;
};

struct GraphLoadResult {
    RoiGraph graph;
    std::size_t self_loops_dropped = 0;
};

// Builds a symmetric adjacency from a directed edge list. Repeats of the same
// directed edge sum; a mirrored pair must agree within 1e-9 and deduplicates
// to a single weight rather than double-counting the connection.
inline GraphLoadResult build_graph(std::vector<std::string> node_names, const std::vector<Edge>& edges) {
    GraphLoadResult out;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < node_names.size(); ++i) {
        require(index.emplace(node_names[i], i).second, "duplicate node name: " + node_names[i]);
    }
    const std::size_t n = node_names.size();

    std::map<std::pair<std::size_t, std::size_t>, double> directed;
    for (const Edge& e : edges) {
        auto si = index.find(e.src);
        require(si != index.end(), "unknown node name: " + e.src);
        auto di = index.find(e.dst);
        require(di != index.end(), "unknown node name: " + e.dst);
        require(e.weight >= 0.0, "negative weight on edge " + e.src + "," + e.dst);
        if (si->second == di->second) {
            ++out.self_loops_dropped;
            continue;
        }
        directed[{si->second, di->second}] += e.weight;
    }

    Matrix adj(n, n);
    for (const auto& [key, w] : directed) {
        const auto [i, j] = key;
        if (i > j) continue;  // handled from the (j, i) entry below
        auto mirror = directed.find({j, i});
        if (mirror != directed.end()) {
            require(std::fabs(w - mirror->second) <= 1e-9,
                    "asymmetric duplicate edge " + node_names[i] + "," + node_names[j] + ": " +
                        format_double(w) + " vs " + format_double(mirror->second));
            adj(i, j) = adj(j, i) = w;
        } else {
            adj(i, j) = adj(j, i) = w;
        }
    }
    for (const auto& [key, w] : directed) {
        const auto [i, j] = key;
        if (i > j && directed.find({j, i}) == directed.end()) adj(i, j) = adj(j, i) = w;
    }

    out.graph = RoiGraph{std::move(node_names), std::move(adj)};
    out.graph.validate();
    return out;
}

// Node universe CSV: header `roi_name`, one name per row (order defines index).
inline std::vector<std::string> load_node_list(const std::string& path) {
    auto lines = read_lines(path);
    require(!lines.empty(), path + ": empty node list file");
    require(trim(lines[0]) == "roi_name", path + ": expected header 'roi_name'");
    std::vector<std::string> names;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) continue;
        names.push_back(trim(lines[r]));
    }
    require(!names.empty(), path + ": no nodes listed");
    return names;
}

// Edge-list CSV: header `src,dst,weight`.
inline GraphLoadResult load_graph(const std::string& edges_path, const std::string& nodes_path) {
    auto names = load_node_list(nodes_path);
    auto lines = read_lines(edges_path);
    require(!lines.empty(), edges_path + ": empty edge file");
    {
        auto header = split_csv_line(lines[0]);
        require(header.size() == 3 && trim(header[0]) == "src" && trim(header[1]) == "dst" &&
                    trim(header[2]) == "weight",
                edges_path + ": expected header 'src,dst,weight'");
    }
    std::vector<Edge> edges;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) continue;
        auto f = split_csv_line(lines[r]);
        require(f.size() == 3, edges_path + ": row " + std::to_string(r) + ": expected 3 fields");
        edges.push_back({trim(f[0]), trim(f[1]), parse_double(f[2], edges_path + " row " + std::to_string(r))});
    }
    return build_graph(std::move(names), edges);
}

inline std::string graph_nodes_csv(const RoiGraph& g) {
    std::string s = "roi_name\n";
    for (const auto& n : g.node_names) s += n + "\n";
    return s;
}

inline std::string graph_edges_csv(const RoiGraph& g) {
    std::string s = "src,dst,weight\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.adjacency(i, j) != 0.0)
                s += g.node_names[i] + "," + g.node_names[j] + "," + format_double(g.adjacency(i, j)) + "\n";
    return s;
}

// Combinatorial Laplacian L = D - A; rows sum to zero.
inline Matrix laplacian(const RoiGraph& g) {
    g.validate();
    const std::size_t n = g.size();
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            deg += g.adjacency(i, j);
            l(i, j) = -g.adjacency(i, j);
        }
        l(i, i) = deg;
    }
    return l;
}

struct ScaledLaplacian {
    Matrix matrix;  // 2L/lambda_max - I, eigenvalues in [-1, 1]
    double lambda_max = 0.0;
};

namespace detail {

inline void check_laplacian_input(const Matrix& l) {
    require(l.rows() == l.cols(), "scale_laplacian: matrix not square");
    for (std::size_t i = 0; i < l.rows(); ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < l.cols(); ++j) {
            require(std::fabs(l(i, j) - l(j, i)) <= 1e-9, "scale_laplacian: matrix not symmetric");
            row_sum += l(i, j);
        }
        require(std::fabs(row_sum) <= 1e-9, "scale_laplacian: row sums not zero (not a Laplacian)");
    }
}

}  // namespace detail

// Largest eigenvalue by power iteration from a fixed seeded start vector.
inline double power_iteration_lambda_max(const Matrix& a, double tol = 1e-10,
                                         std::size_t max_iters = 10000) {
    const std::size_t n = a.rows();
    Rng rng(0xC0FFEEULL ^ static_cast<std::uint64_t>(n));
    Matrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform(-1.0, 1.0);
    double norm = std::sqrt(dot(v, v));
    v *= 1.0 / norm;

    double lambda = 0.0;
    double residual = 0.0;
    for (std::size_t it = 0; it < max_iters; ++it) {
        Matrix av = matmul(a, v);
        lambda = dot(v, av);
        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = av[i] - lambda * v[i];
            residual += r * r;
        }
        residual = std::sqrt(residual);
        if (residual <= tol * std::max(1.0, std::fabs(lambda))) return lambda;
        norm = std::sqrt(dot(av, av));
        if (norm == 0.0) return 0.0;  // v landed in the kernel; caller rejects lambda 0
        v = av;
        v *= 1.0 / norm;
    }
    throw NumericError("power iteration did not converge: residual " + format_double(residual));
}

inline ScaledLaplacian scale_laplacian(const Matrix& l) {
    detail::check_laplacian_input(l);
    const double lambda_max = power_iteration_lambda_max(l);
    if (lambda_max <= 0.0) throw ValidationError("degenerate Laplacian: lambda_max is zero");
    Matrix scaled = l;
    scaled *= 2.0 / lambda_max;
    for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, i) -= 1.0;
    return ScaledLaplacian{std::move(scaled), lambda_max};
}

// Induced subgraph with one ROI removed; survivor order preserved.
inline RoiGraph remove_node(const RoiGraph& g, const std::string& roi) {
    const std::size_t drop = g.index_of(roi);
    const std::size_t n = g.size();
    RoiGraph out;
    out.node_names.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        if (i != drop) out.node_names.push_back(g.node_names[i]);
    out.adjacency = Matrix(n - 1, n - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == drop) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == drop) continue;
            out.adjacency(r, c) = g.adjacency(i, j);
            ++c;
        }
        ++r;
    }
    return out;
}

// [T_0(Lt)X, ..., T_{K-1}(Lt)X] by the Chebyshev recurrence
// T_k = 2*Lt*T_{k-1} - T_{k-2}.
inline std::vector<Matrix> cheb_apply(const ScaledLaplacian& lt, const Matrix& x, std::size_t order) {
    require(order >= 1, "cheb_apply: order must be >= 1");
    require(x.rows() == lt.matrix.rows(), "cheb_apply: X rows must match graph size");
    std::vector<Matrix> t;
    t.reserve(order);
    t.push_back(x);
    if (order > 1) t.push_back(matmul(lt.matrix, x));
    for (std::size_t k = 2; k < order; ++k) {
        Matrix next = matmul(lt.matrix, t[k - 1]);
        next *= 2.0;
        next -= t[k - 2];
        t.push_back(std::move(next));
    }
    return t;
}

}  // namespace gvc

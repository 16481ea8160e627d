#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace absep {

// Dimension factorization m|n a bipartite criterion is judged against.
struct Bipartition {
    int m = 2;
    int n = 2;

    Bipartition() = default;
    Bipartition(int m_, int n_) : m(m_), n(n_) {
        if (m < 2 || n < 2) throw std::invalid_argument("Bipartition: factors must be >= 2");
    }
    int dim() const { return m * n; }
};

// Factorization n_1|…|n_N for multipartite criteria.
struct MultiPartition {
    std::vector<int> dims;

    MultiPartition() = default;
    explicit MultiPartition(std::vector<int> d) : dims(std::move(d)) {
        if (dims.size() < 2) throw std::invalid_argument("MultiPartition: need at least 2 factors");
        for (int v : dims)
            if (v < 2) throw std::invalid_argument("MultiPartition: factors must be >= 2");
    }
    static MultiPartition qubits(int n) { return MultiPartition(std::vector<int>(n, 2)); }

    int dim() const {
        return std::accumulate(dims.begin(), dims.end(), 1, [](int a, int b) { return a * b; });
    }
    bool all_qubits() const {
        for (int v : dims)
            if (v != 2) return false;
        return true;
    }
    int count() const { return static_cast<int>(dims.size()); }
};

using Partition = std::variant<Bipartition, MultiPartition>;

int partition_dim(const Partition& p);
std::string partition_to_string(const Partition& p);
// Accepts "MxN" (e.g. "2x4") and "2^N" (e.g. "2^3").
Partition parse_partition(const std::string& text);

}  // namespace absep

#include "absep/partition.hpp"

#include <cstdlib>

namespace absep {

int partition_dim(const Partition& p) {
    return std::visit([](const auto& v) { return v.dim(); }, p);
}

std::string partition_to_string(const Partition& p) {
    if (const auto* b = std::get_if<Bipartition>(&p))
        return std::to_string(b->m) + "x" + std::to_string(b->n);
    const auto& mp = std::get<MultiPartition>(p);
    if (mp.all_qubits()) return "2^" + std::to_string(mp.count());
    std::string s;
    for (std::size_t i = 0; i < mp.dims.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(mp.dims[i]);
    }
    return s;
}

namespace {
bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || v < 0 || v > 1 << 20) return false;
    out = static_cast<int>(v);
    return true;
}
}  // namespace

Partition parse_partition(const std::string& text) {
    const auto caret = text.find('^');
    if (caret != std::string::npos) {
        int base = 0, n = 0;
        if (!parse_int(text.substr(0, caret), base) || base != 2 ||
            !parse_int(text.substr(caret + 1), n) || n < 2)
            throw std::invalid_argument("partition: expected 2^N with N >= 2, got '" + text + "'");
        return MultiPartition::qubits(n);
    }
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("partition: expected MxN or 2^N, got '" + text + "'");
    int m = 0, n = 0;
    if (!parse_int(text.substr(0, x), m) || !parse_int(text.substr(x + 1), n) || m < 2 || n < 2)
        throw std::invalid_argument("partition: factors must be integers >= 2 in '" + text + "'");
    return Bipartition(m, n);
}

}  // namespace absep

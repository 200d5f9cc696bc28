#include "random_graph.hpp"

#include <random>
#include <vector>

#include "errors.hpp"
#include "format.hpp"

namespace lowd {

namespace {

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1)
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string gnp_edge_list(std::uint32_t n, double p, bool weighted, std::uint64_t seed) {
    if (n < 2) throw ValidationError("gnp needs at least 2 nodes");
    if (!(p > 0.0) || p > 1.0) throw ValidationError("gnp needs p in (0,1]");

    std::mt19937_64 rng(seed);
    std::string out;
    std::vector<char> incident(n, 0);
    for (;;) {
        out.clear();
        std::fill(incident.begin(), incident.end(), 0);
        bool all_incident = true;
        for (std::uint32_t u = 0; u < n; ++u) {
            for (std::uint32_t v = u + 1; v < n; ++v) {
                if (unit_double(rng) >= p) continue;
                incident[u] = incident[v] = 1;
                out += std::to_string(u);
                out += ' ';
                out += std::to_string(v);
                if (weighted) {
                    out += ' ';
                    out += format_double(2.0 - 2.0 * unit_double(rng));  // (0,2]
                }
                out += '\n';
            }
        }
        for (char c : incident)
            if (!c) all_incident = false;
        if (!out.empty() && all_incident) return out;
    }
}

}  // namespace lowd

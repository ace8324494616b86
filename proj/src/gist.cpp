#include "catcomp/gist.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace catcomp {

StructuralManifold structural_manifold(const CategoryStructure& s) {
    const int d = s.dims();
    StructuralManifold m;
    m.proportions.resize(d, 0.0);
    for (int i = 0; i < d; ++i) {
        const int bit = d - 1 - i;
        // project A onto the other dimensions by deleting bit i
        std::map<Stimulus, int> multiplicity;
        for (Stimulus x : s.a_set()) {
            const Stimulus high = static_cast<Stimulus>(x >> (bit + 1));
            const Stimulus low = static_cast<Stimulus>(x & ((1u << bit) - 1));
            const Stimulus projected =
                static_cast<Stimulus>((high << bit) | low);
            ++multiplicity[projected];
        }
        int invariant = 0;
        for (Stimulus x : s.a_set()) {
            const Stimulus high = static_cast<Stimulus>(x >> (bit + 1));
            const Stimulus low = static_cast<Stimulus>(x & ((1u << bit) - 1));
            const Stimulus projected =
                static_cast<Stimulus>((high << bit) | low);
            if (multiplicity[projected] >= 2)
                ++invariant;
        }
        m.proportions[i] =
            static_cast<double>(invariant) / static_cast<double>(s.a_size());
        m.phi_hat += m.proportions[i] * m.proportions[i];
    }
    m.phi_hat = std::sqrt(m.phi_hat);
    return m;
}

std::string format_manifold(const StructuralManifold& m) {
    std::string out = "(";
    for (size_t i = 0; i < m.proportions.size(); ++i) {
        if (i > 0)
            out += ',';
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", m.proportions[i]);
        out += buf;
    }
    out += ')';
    return out;
}

} // namespace catcomp

#include "ttlab/container.hpp"

#include <cmath>

#include "ttlab/construct.hpp"
#include "ttlab/error.hpp"

namespace ttlab {

DensityResult density_m(const BlowupSpec & spec)
{
    if (spec.levels < 1 || spec.size < 1)
        throw ArgumentError("blow-up needs at least one level of at least one vertex");
    if (spec.arcs() < 2)
        throw ArgumentError("m(H) is undefined for T_" + std::to_string(spec.levels) + "^"
                            + std::to_string(spec.size) + ": it has fewer than two arcs");
    Digraph h = realize(spec);
    int n = h.order();

    DensityResult result;
    result.spec = spec;
    bool found = false;
    for (VertexMask s = 1; s <= full_mask(n); ++s) {
        int v = popcount(s);
        if (v < 3)
            continue;
        int e = 0;
        for (VertexMask rest = s; rest; rest &= rest - 1)
            e += popcount(h.out_mask(std::countr_zero(rest)) & s);
        if (e < 2)
            continue;
        Ratio value(e - 1, v - 2);
        if (found) {
            if (value < result.m)
                continue;
            if (value == result.m) {
                int best_v = popcount(result.vertices);
                if (v > best_v)
                    continue;
                if (v == best_v && ! (h.induced(s) < result.argmax))
                    continue;
            }
        }
        found = true;
        result.m = value;
        result.vertices = s;
        result.argmax = h.induced(s);
    }
    return result;
}

ContainerExponent container_exponent(int n, const BlowupSpec & spec)
{
    ContainerExponent out;
    out.density = density_m(spec);
    out.exponent = Ratio(2) - Ratio(1) / out.density.m;
    out.n = n;
    if (n >= 1) {
        double e = boost::rational_cast<double>(out.exponent);
        out.bound_shape = std::pow(static_cast<double>(n), e) * std::log2(static_cast<double>(n));
    }
    return out;
}

} // namespace ttlab

#include "cygan/normalize.hpp"

#include <algorithm>

#include "cygan/metric.hpp"

namespace cygan {
namespace {

std::array<ClosurePoint, 4> map_all(const Quadruple& q, const Generator& g) {
    return {apply_generator(g, q[0]), apply_generator(g, q[1]), apply_generator(g, q[2]),
            apply_generator(g, q[3])};
}

// Translation taking `base` to (0, 0, base.u); nullopt when it is the identity.
std::optional<gen::Translation> translation_to_axis(const ClosurePoint& base) {
    const auto& c = base.coords();
    if (c.zeta == Complex(0.0, 0.0) && c.v == 0.0)
        return std::nullopt;
    return gen::Translation{-c.zeta, -c.v};
}

void append_translation(Normalized& out, const gen::Translation& t) {
    out.quadruple = make_quadruple(map_all(out.quadruple, t));
    out.word.generators.emplace_back(t);
}

void append_inversion(Normalized& out) {
    out.quadruple = make_quadruple(map_all(out.quadruple, gen::InversionClosure{}));
    out.word.generators.emplace_back(gen::InversionClosure{});
}

std::array<int, 4> compose(const std::array<int, 4>& outer, const std::array<int, 4>& inner) {
    // Applying `outer` to an already relabelled quadruple.
    return {inner[outer[0]], inner[outer[1]], inner[outer[2]], inner[outer[3]]};
}

} // namespace

std::array<int, 4> relabel_to_last(int index) {
    switch (index) {
    case 0: return {3, 2, 1, 0};
    case 1: return {2, 3, 0, 1};
    case 2: return {1, 0, 3, 2};
    case 3: return {0, 1, 2, 3};
    default: throw Error(ErrorKind::InvalidArgument, "quadruple index out of range");
    }
}

Normalized translate_min_height_to_origin(const Quadruple& q) {
    for (const auto& p : q.points())
        if (!p.is_interior())
            throw Error(ErrorKind::NotInterior, "all four points must be interior (u > 0)");

    int lowest = 0;
    for (int i = 1; i < 4; ++i)
        if (q[i].coords().u < q[lowest].coords().u)
            lowest = i;

    Normalized out{q.permuted(relabel_to_last(lowest)), {}, relabel_to_last(lowest), 0.0,
                   ReductionBranch::Interior};
    if (const auto t = translation_to_axis(out.quadruple[3]))
        append_translation(out, *t);

    const double shift = out.quadruple[3].coords().u;
    std::array<ClosurePoint, 4> lowered = out.quadruple.points();
    for (auto& p : lowered) {
        const auto& c = p.coords();
        p = ClosurePoint::finite(c.zeta, c.v, c.u - shift);
    }
    out.quadruple = make_quadruple(lowered);
    out.height_shift = shift;
    return out;
}

Normalized invert_to_infinity(const Quadruple& q) {
    if (!q[3].is_origin())
        throw Error(ErrorKind::BadBasePoint, "fourth point must be the origin o");
    Normalized out{q, {}, {0, 1, 2, 3}, 0.0, ReductionBranch::Interior};
    append_inversion(out);
    return out;
}

Normalized reduce_to_infinity_form(const Quadruple& q) {
    const auto& pts = q.points();

    const auto inf = std::find_if(pts.begin(), pts.end(), [](const ClosurePoint& p) { return p.is_infinity(); });
    if (inf != pts.end()) {
        const auto perm = relabel_to_last(static_cast<int>(inf - pts.begin()));
        return Normalized{q.permuted(perm), {}, perm, 0.0, ReductionBranch::AlreadyAtInfinity};
    }

    int base = -1;
    if (q[3].is_boundary()) {
        base = 3;
    } else {
        const auto b = std::find_if(pts.begin(), pts.end(), [](const ClosurePoint& p) { return p.is_boundary(); });
        if (b != pts.end())
            base = static_cast<int>(b - pts.begin());
    }
    if (base >= 0) {
        const auto perm = relabel_to_last(base);
        Normalized out{q.permuted(perm), {}, perm, 0.0, ReductionBranch::Boundary};
        if (const auto t = translation_to_axis(out.quadruple[3]))
            append_translation(out, *t);
        append_inversion(out);
        return out;
    }

    Normalized out = translate_min_height_to_origin(q);
    const Normalized inverted = invert_to_infinity(out.quadruple);
    out.quadruple = inverted.quadruple;
    out.word.generators.insert(out.word.generators.end(), inverted.word.generators.begin(),
                               inverted.word.generators.end());
    out.permutation = compose(inverted.permutation, out.permutation);
    return out;
}

} // namespace cygan

#include "sombor/sombor.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

#include "sombor/products.hpp"

namespace sombor {

namespace {

using i64 = long;

RadicalSum term(i64 coefficient, std::uint64_t radicand) {
    return RadicalSum::from_term(Rational(coefficient), radicand);
}

RadicalSum integer(i64 value) {
    return RadicalSum::from_rational(Rational(value));
}

std::uint64_t sq(std::uint64_t x) { return x * x; }

// |diff| / sqrt(2) == (|diff| / 2) * sqrt(2)
RadicalSum over_sqrt2(i64 diff_abs_sum) {
    return RadicalSum::from_term(Rational(diff_abs_sum, 2), 2);
}

i64 abs_diff(std::size_t a, std::size_t b) {
    return a > b ? static_cast<i64>(a - b) : static_cast<i64>(b - a);
}

i64 sum_edge_degree_gaps(const Graph& g) {
    i64 total = 0;
    for (const auto& [u, v] : g.edges()) {
        total += abs_diff(g.degree(u), g.degree(v));
    }
    return total;
}

}  // namespace

RadicalSum sombor_index(const Graph& g) {
    std::map<std::uint64_t, i64> per_radicand;
    for (const auto& [u, v] : g.edges()) {
        ++per_radicand[sq(g.degree(u)) + sq(g.degree(v))];
    }
    RadicalSum total;
    for (const auto& [n, count] : per_radicand) {
        total += term(count, n);
    }
    return total;
}

RadicalSum sombor_from_census(const DegreeCensus& census) {
    RadicalSum total;
    for (const auto& [key, count] : census.counts) {
        total += term(static_cast<i64>(count), sq(key.first) + sq(key.second));
    }
    return total;
}

bool has_erratum(Family family) {
    return family == Family::Ladder || family == Family::Book || family == Family::Grid;
}

void validate_closed_form_domain(const FamilySpec& spec) {
    const i64 n = spec.first;
    const i64 m = spec.second;
    bool ok = true;
    switch (spec.family) {
        case Family::Path: ok = n >= 3; break;
        case Family::Cycle: ok = n >= 3; break;
        case Family::Complete: ok = n >= 2; break;
        case Family::Star: ok = n >= 1; break;
        case Family::CompleteBipartite: ok = n >= 1 && m >= 1; break;
        case Family::Wheel: ok = n >= 4; break;
        case Family::Ladder: ok = n >= 3; break;
        case Family::Friendship: ok = n >= 1; break;
        case Family::Book: ok = n >= 3; break;
        case Family::DutchWindmill: ok = n >= 3 && m >= 2; break;
        case Family::Grid: ok = n >= 3 && m >= 3; break;
        case Family::TriangularChain:
        case Family::ParaSquareChain:
        case Family::OrthoSquareChain:
        case Family::OrthoHexChain:
        case Family::ParaHexChain:
        case Family::MetaHexChain: ok = n >= 2; break;
        case Family::PathCorona: ok = n >= 3; break;
        case Family::CycleCorona: ok = n >= 3; break;
    }
    if (!ok) {
        throw FamilyError("closed form undefined for " + to_string(spec));
    }
}

RadicalSum closed_form(const FamilySpec& spec) {
    validate_closed_form_domain(spec);
    const i64 n = spec.first;
    switch (spec.family) {
        case Family::Path:
            return term(2, 5) + term(2 * n - 6, 2);
        case Family::Cycle:
            return term(2 * n, 2);
        case Family::Complete:
            return RadicalSum::from_term(Rational(n * (n - 1) * (n - 1), 2), 2);
        case Family::Star:
            return term(n, sq(n) + 1);
        case Family::CompleteBipartite: {
            const i64 m = spec.first;
            const i64 k = spec.second;
            return term(m * k, sq(m) + sq(k));
        }
        case Family::Wheel:
            return term(3 * n - 3, 2) + term(n - 1, 9 + sq(n - 1));
        case Family::Ladder:
            // census {(2,2):2, (2,3):4, (3,3):3n-8}
            return term(9 * n - 20, 2) + term(4, 13);
        case Family::Friendship:
            return term(2 * n, 2) + term(4 * n, sq(n) + 1);
        case Family::Book:
            // hubs of degree n+1: {(2,2):n, (2,n+1):2n, (n+1,n+1):1}
            return term(3 * n + 1, 2) + term(2 * n, 4 + sq(n + 1));
        case Family::DutchWindmill: {
            const i64 cycle = spec.first;
            const i64 copies = spec.second;
            return term(2 * copies * (cycle - 2), 2) + term(4 * copies, sq(copies) + 1);
        }
        case Family::Grid: {
            // {(2,3):8, (3,3):2m+2n-12, (3,4):2m+2n-8, (4,4):2mn-5m-5n+12}
            const i64 a = spec.first;
            const i64 b = spec.second;
            return term(8 * a * b - 14 * a - 14 * b + 12, 2) + term(8, 13) +
                   integer(10 * (a + b - 4));
        }
        case Family::TriangularChain:
            return term(4 * n - 4, 2) + term(4 * n, 5);
        case Family::ParaSquareChain:
            return term(8, 2) + term(8 * n - 8, 5);
        case Family::OrthoSquareChain:
            return term(6 * n - 4, 2) + term(4 * n, 5);
        case Family::OrthoHexChain:
            return term(10 * n - 4, 2) + term(4 * n, 5);
        case Family::ParaHexChain:
        case Family::MetaHexChain:
            return term(4 * n + 8, 2) + term(8 * n - 8, 5);
        case Family::PathCorona:
            return term(3 * n - 9, 2) + term(n - 2, 10) + term(2, 5) + term(2, 13);
        case Family::CycleCorona:
            return term(3 * n, 2) + term(n, 10);
    }
    throw FamilyError("unknown family");
}

RadicalSum closed_form_as_printed(const FamilySpec& spec) {
    validate_closed_form_domain(spec);
    const i64 n = spec.first;
    switch (spec.family) {
        case Family::Ladder:
            return term(9 * n - 22, 2) + term(4, 13);
        case Family::Book:
            return term(3 * n - 1, 2) + term(2 * n, 4 + sq(n - 1));
        case Family::Grid: {
            const i64 a = spec.first;
            const i64 b = spec.second;
            return term(8 * a * b - 17 * a - 17 * b - 60, 2) + term(4, 13) +
                   integer(10 * (a + b - 4));
        }
        default:
            return closed_form(spec);
    }
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::StrictLess: return "<";
        case Relation::LessOrEqual: return "<=";
        case Relation::GreaterOrEqual: return ">=";
    }
    return "?";
}

BoundReport make_report(RadicalSum lhs, RadicalSum rhs, Relation relation, std::string note) {
    Ordering o = compare(lhs, rhs);
    bool holds = false;
    switch (relation) {
        case Relation::StrictLess: holds = o == Ordering::Less; break;
        case Relation::LessOrEqual: holds = o != Ordering::Greater; break;
        case Relation::GreaterOrEqual: holds = o != Ordering::Less; break;
    }
    return BoundReport{std::move(lhs), std::move(rhs), relation, holds, std::move(note)};
}

RadicalSum subdivision_formula(const Graph& g, std::size_t k) {
    if (k < 2) {
        throw std::invalid_argument("subdivision_formula: k must be at least 2");
    }
    const i64 m = static_cast<i64>(g.edge_count());
    RadicalSum total = term(2 * m * static_cast<i64>(k - 2), 2);
    for (std::size_t d : g.degrees()) {
        if (d > 0) {
            total += term(static_cast<i64>(d), sq(d) + 4);
        }
    }
    return total;
}

SubdivisionBounds subdivision_bounds(const Graph& g, std::size_t k) {
    if (g.edge_count() == 0) {
        throw std::invalid_argument("subdivision_bounds: graph has no edges");
    }
    RadicalSum value = subdivision_formula(g, k);
    const i64 m = static_cast<i64>(g.edge_count());
    const i64 n = static_cast<i64>(g.vertex_count());
    RadicalSum paths = term(2 * m * static_cast<i64>(k - 2), 2);
    auto bound = [&](std::size_t d) {
        return paths + (d == 0 ? RadicalSum{} : term(n * static_cast<i64>(d), sq(d) + 4));
    };
    return SubdivisionBounds{
        make_report(value, bound(min_degree(g)), Relation::GreaterOrEqual),
        make_report(value, bound(max_degree(g)), Relation::LessOrEqual),
    };
}

BoundReport edge_removal_bound(const Graph& g, Vertex u, Vertex v) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v)) {
        throw GraphError(GraphError::Kind::MissingEdge,
                         "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    Graph reduced = g;
    reduced.remove_edge(u, v);
    RadicalSum rhs = sombor_index(g) - over_sqrt2(abs_diff(g.degree(u), g.degree(v)));
    return make_report(sombor_index(reduced), std::move(rhs), Relation::StrictLess);
}

BoundReport vertex_removal_bound(const Graph& g, Vertex v) {
    if (v >= g.vertex_count()) {
        throw GraphError(GraphError::Kind::MissingVertex, "no vertex " + std::to_string(v));
    }
    i64 gaps = 0;
    for (Vertex u : g.neighbors(v)) {
        gaps += abs_diff(g.degree(u), g.degree(v));
    }
    Graph reduced = g;
    reduced.remove_vertex(v);
    std::string note;
    if (g.degree(v) == 0) {
        note = "degenerate: isolated vertex, removal leaves SO unchanged";
    }
    return make_report(sombor_index(reduced), sombor_index(g) - over_sqrt2(gaps),
                       Relation::StrictLess, std::move(note));
}

BoundReport nordhaus_gaddum_lower(const Graph& g) {
    const auto d = g.degrees();
    i64 gaps = 0;
    for (std::size_t a = 0; a < d.size(); ++a) {
        for (std::size_t b = a + 1; b < d.size(); ++b) {
            gaps += abs_diff(d[a], d[b]);
        }
    }
    return make_report(sombor_index(g) + sombor_index(complement(g)), over_sqrt2(gaps),
                       Relation::GreaterOrEqual);
}

BoundReport join_lower_bound(const Graph& g, const Graph& h) {
    const i64 n = static_cast<i64>(g.vertex_count());
    const i64 m = static_cast<i64>(h.vertex_count());
    i64 gaps = sum_edge_degree_gaps(g) + sum_edge_degree_gaps(h);
    for (std::size_t du : g.degrees()) {
        for (std::size_t dv : h.degrees()) {
            i64 x = static_cast<i64>(du) - static_cast<i64>(dv) + m - n;
            gaps += x < 0 ? -x : x;
        }
    }
    return make_report(sombor_index(join(g, h)), over_sqrt2(gaps), Relation::GreaterOrEqual);
}

namespace {

BoundReport corona_bound(const Graph& g, const Graph& h, i64 cross_weight, i64 h_copies,
                         std::string note) {
    if (g.vertex_count() == 0) {
        throw std::invalid_argument("corona bound: first graph must have at least one vertex");
    }
    const i64 m = static_cast<i64>(h.vertex_count());
    i64 gaps = sum_edge_degree_gaps(g) + h_copies * sum_edge_degree_gaps(h);
    for (std::size_t du : g.degrees()) {
        for (std::size_t dv : h.degrees()) {
            i64 x = static_cast<i64>(du) - static_cast<i64>(dv) + m - 1;
            gaps += cross_weight * (x < 0 ? -x : x);
        }
    }
    return make_report(sombor_index(corona(g, h)), over_sqrt2(gaps), Relation::GreaterOrEqual,
                       std::move(note));
}

}  // namespace

BoundReport corona_lower_bound(const Graph& g, const Graph& h) {
    return corona_bound(g, h, static_cast<i64>(h.vertex_count()), 1, "as printed");
}

BoundReport corona_lower_bound_corrected(const Graph& g, const Graph& h) {
    return corona_bound(g, h, 1, static_cast<i64>(g.vertex_count()), "corrected");
}

}  // namespace sombor

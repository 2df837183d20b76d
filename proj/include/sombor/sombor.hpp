#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "sombor/generators.hpp"
#include "sombor/graph.hpp"
#include "sombor/radical.hpp"

namespace sombor {

/// Sum over edges uv of sqrt(d_u^2 + d_v^2). Empty graph gives 0.
RadicalSum sombor_index(const Graph& g);

/// Sum over census entries of count * sqrt(a^2 + b^2).
RadicalSum sombor_from_census(const DegreeCensus& census);

// ---------------------------------------------------------------------------
// Closed forms.
//
// Validity domains: Path n>=3, Cycle n>=3, Complete n>=2, Star n>=1,
// CompleteBipartite m,n>=1, Wheel n>=4, Ladder n>=3, Friendship n>=1,
// Book n>=3, DutchWindmill n>=3 m>=2, Grid m,n>=3, chains n>=2,
// PathCorona n>=3, CycleCorona n>=3. Outside them FamilyError is thrown.
//
// Ladder, Book and Grid use formulas re-derived from the edge census of the
// generated graphs; the printed expressions for those three disagree with
// a direct evaluation and are available through closed_form_as_printed.

RadicalSum closed_form(const FamilySpec& spec);
/// Printed expression; differs from closed_form only for Ladder, Book, Grid.
RadicalSum closed_form_as_printed(const FamilySpec& spec);
/// True for the families whose printed formula is corrected here.
bool has_erratum(Family family);
/// Throws FamilyError when spec is outside the closed form's domain.
void validate_closed_form_domain(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Inequalities. Every 1/sqrt(2) factor is carried as (1/2)*sqrt(2).

enum class Relation { StrictLess, LessOrEqual, GreaterOrEqual };

struct BoundReport {
    RadicalSum lhs;
    RadicalSum rhs;
    Relation relation;
    bool holds;
    std::string note;
};

/// Builds a report with `holds` decided by exact comparison.
BoundReport make_report(RadicalSum lhs, RadicalSum rhs, Relation relation, std::string note = {});
std::string to_string(Relation r);

/// 2m(k-2)sqrt(2) + sum_u d_u sqrt(d_u^2 + 4). Throws for k < 2.
RadicalSum subdivision_formula(const Graph& g, std::size_t k);

struct SubdivisionBounds {
    /// lhs = subdivision value, rhs = delta-based bound, GreaterOrEqual.
    BoundReport lower;
    /// lhs = subdivision value, rhs = Delta-based bound, LessOrEqual.
    BoundReport upper;
};
/// Throws std::invalid_argument when g has no edge or k < 2.
SubdivisionBounds subdivision_bounds(const Graph& g, std::size_t k);

/// SO(G - uv) < SO(G) - |d_u - d_v|/sqrt(2), degrees taken in G.
BoundReport edge_removal_bound(const Graph& g, Vertex u, Vertex v);

/// SO(G - v) < SO(G) - sum over edges vu of |d_u - d_v|/sqrt(2). For an
/// isolated vertex both sides equal SO(G) and the report carries a note.
BoundReport vertex_removal_bound(const Graph& g, Vertex v);

/// SO(G) + SO(complement G) >= sum over unordered pairs of |d_u - d_v|/sqrt(2).
BoundReport nordhaus_gaddum_lower(const Graph& g);

/// Lower bound for SO(G v H) in terms of the degrees before joining.
BoundReport join_lower_bound(const Graph& g, const Graph& h);

/// Lower bound for SO(G o H) with the cross sum weighted by m = |V(H)| per
/// (u, v) pair, exactly as printed. Not valid in general once m >= 2.
BoundReport corona_lower_bound(const Graph& g, const Graph& h);

/// Lower bound obtained from the exact corona expansion: one cross edge per
/// (u, v) pair and n = |V(G)| copies of every edge of H.
BoundReport corona_lower_bound_corrected(const Graph& g, const Graph& h);

}  // namespace sombor

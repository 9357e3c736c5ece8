#pragma once

#include "gambier/field.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gambier {

struct ExactSolution {
    bool consistent = false;
    std::vector<Rat> x;
    int rank = 0;
};

// Solves A x = b exactly. Rows are scaled to integers and eliminated with
// fraction-free (Bareiss) steps; free variables are set to zero.
ExactSolution solve_linear_exact(const std::vector<std::vector<Rat>>& A,
                                 const std::vector<Rat>& b);

namespace detail {

// Rows of the monomial-coordinate matrix: one row per (component, monomial)
// appearing anywhere in the given fields.
template <int N>
std::map<std::pair<int, Mono<N>>, int> coordinate_rows(
    const std::vector<const VField<N>*>& fields) {
    std::map<std::pair<int, Mono<N>>, int> rows;
    for (const VField<N>* f : fields)
        for (int c = 0; c < N; ++c)
            for (const auto& [m, coef] : f->comp[c].terms()) {
                (void)coef;
                rows.emplace(std::make_pair(c, m), 0);
            }
    int idx = 0;
    for (auto& [key, val] : rows) val = idx++;
    return rows;
}

}  // namespace detail

// Exact coordinates of F in the rational span of gens, or absent.
template <int N>
std::optional<std::vector<Rat>> coords_in_span(const VField<N>& F,
                                               const std::vector<VField<N>>& gens) {
    if (gens.empty()) throw std::invalid_argument("coords_in_span: empty generator list");
    std::vector<const VField<N>*> all;
    for (const auto& g : gens) all.push_back(&g);
    all.push_back(&F);
    auto rows = detail::coordinate_rows<N>(all);

    std::vector<std::vector<Rat>> A(rows.size(), std::vector<Rat>(gens.size(), Rat(0)));
    std::vector<Rat> b(rows.size(), Rat(0));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (int c = 0; c < N; ++c)
            for (const auto& [m, coef] : gens[g].comp[c].terms())
                A[rows.at({c, m})][g] = coef;
    for (int c = 0; c < N; ++c)
        for (const auto& [m, coef] : F.comp[c].terms()) b[rows.at({c, m})] = coef;

    ExactSolution sol = solve_linear_exact(A, b);
    if (!sol.consistent) return std::nullopt;
    // Guard against any elimination subtlety: verify the combination exactly.
    VField<N> rebuilt;
    for (std::size_t g = 0; g < gens.size(); ++g) rebuilt += gens[g].scaled(sol.x[g]);
    if (!(rebuilt == F)) return std::nullopt;
    return sol.x;
}

template <int N>
int span_rank(const std::vector<VField<N>>& fields) {
    if (fields.empty()) return 0;
    std::vector<const VField<N>*> all;
    for (const auto& f : fields) all.push_back(&f);
    auto rows = detail::coordinate_rows<N>(all);
    std::vector<std::vector<Rat>> A(rows.size(), std::vector<Rat>(fields.size(), Rat(0)));
    for (std::size_t g = 0; g < fields.size(); ++g)
        for (int c = 0; c < N; ++c)
            for (const auto& [m, coef] : fields[g].comp[c].terms())
                A[rows.at({c, m})][g] = coef;
    ExactSolution sol = solve_linear_exact(A, std::vector<Rat>(rows.size(), Rat(0)));
    return sol.rank;
}

template <int N>
bool in_span(const VField<N>& F, const std::vector<VField<N>>& gens) {
    if (F.is_zero()) return true;
    return coords_in_span(F, gens).has_value();
}

template <int N>
struct ClosureReport {
    bool closed = false;
    std::vector<VField<N>> basis;  // independent basis found so far
    std::optional<VField<N>> offender;  // bracket that would exceed the cap
    std::string offender_desc;
    int dimension() const { return static_cast<int>(basis.size()); }
};

// Adjoins brackets until the span is a Lie algebra or its dimension would
// exceed dim_cap.
template <int N>
ClosureReport<N> bracket_closure(const std::vector<VField<N>>& gens, int dim_cap) {
    if (dim_cap < static_cast<int>(gens.size()))
        throw std::invalid_argument("bracket_closure: dim_cap below generator count");
    ClosureReport<N> rep;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (rep.basis.empty() || !in_span(g, rep.basis)) rep.basis.push_back(g);
    }
    for (std::size_t j = 1; j < rep.basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            VField<N> br = lie_bracket(rep.basis[i], rep.basis[j]);
            if (br.is_zero() || in_span(br, rep.basis)) continue;
            if (static_cast<int>(rep.basis.size()) + 1 > dim_cap) {
                rep.closed = false;
                rep.offender = br;
                rep.offender_desc = "[basis_" + std::to_string(i) + ",basis_" +
                                    std::to_string(j) + "]";
                return rep;
            }
            rep.basis.push_back(br);
        }
    }
    rep.closed = true;
    return rep;
}

}  // namespace gambier

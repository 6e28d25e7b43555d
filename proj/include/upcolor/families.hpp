#pragma once

// Named graph families, the closed-form gamma_uc intervals known for some of
// them, and the audit that evaluates every general inequality on a
// concrete coloured graph.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upcolor/exact.hpp"
#include "upcolor/graph.hpp"

namespace upcolor {

enum class FamilyKind { Path, Cycle, Complete, CompleteBipartite, Star, Hairy, Cone, CliqueFlower, House };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> family_from_string(std::string_view name);

struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    std::size_t n = 0;  // path, cycle, complete, star (leaves), clique_flower
    std::size_t r = 0;  // complete_bipartite
    std::size_t s = 0;
    std::size_t l = 0;  // hairs per vertex
    std::optional<Graph> base;  // hairy, cone
    /// clique_flower only: attach each K_n by sharing one vertex with the
    /// central clique instead of joining it completely.
    bool shared_attachment = false;
};

struct FamilyGraph {
    Graph graph;
    std::optional<Coloring> coloring;  // a chi-colouring when the family has an obvious one
};

FamilyGraph generate(const FamilySpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t r, std::size_t s);
Graph star_graph(std::size_t leaves);
/// l pendant vertices per vertex; the pendants of vertex v are
/// n + v*l .. n + v*l + l - 1.
Graph hairy_graph(const Graph& base, std::size_t l);
/// base plus an apex (id n) adjacent to everything.
Graph cone_graph(const Graph& base);
Graph clique_flower(std::size_t n, bool shared_attachment = false);
Graph house_graph();
/// Triangle 0,1,2 with one pendant on 0 and two on 1; its dominating top
/// colour classes come in sizes 2, 3 and 4.
Graph top_class_example_graph();

enum class ColoringKind { Any, Optimal };

struct FormulaBounds {
    std::size_t lo = 0;
    std::size_t hi = 0;
    /// When set, gamma_uc must be one of these values (not just in [lo, hi]).
    std::vector<std::size_t> allowed;

    bool admits(std::size_t value) const;
};

/// Predicted range of gamma_uc for paths, cycles and complete bipartite
/// graphs; UnsupportedFamily otherwise.
FormulaBounds family_formula_bounds(const FamilySpec& spec, ColoringKind kind);

/// Exact non-negative rational used by the bound audit.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t n, std::int64_t d = 1);
    std::string str() const;
    friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
};

enum class Relation { LessEqual, Iff };

struct BoundCheck {
    std::string name;
    Rational left;
    Rational right;
    Relation relation = Relation::LessEqual;
    bool holds = true;
    std::string detail;
};

struct BoundReport {
    std::vector<BoundCheck> checks;
    std::size_t violations() const;
    bool omega_audited = false;
};

struct AuditOptions {
    std::size_t omega_limit = 8;  // Omega_uc only for connected graphs with 5 <= n <= omega_limit
    SearchLimits limits{};
};

BoundReport audit_bounds(const ColoredGraph& cg, const AuditOptions& options = {});

enum class Comparison { Less, Equal, Greater };

struct RomanComparison {
    Weight omega = 0;
    std::size_t gamma_r = 0;
    Comparison relation = Comparison::Equal;
};

std::string_view to_string(Comparison c);

RomanComparison roman_comparison(const Graph& g, const SearchLimits& limits = {});

struct ColorFloor {
    Weight omega = 0;
    std::size_t min_colors = 0;
    Coloring example;  // an Omega_uc-optimal colouring with min_colors colours
};

/// Smallest number of colours among all Omega_uc-optimal colourings of
/// hairy(g, l), by exhaustive enumeration.
ColorFloor hairy_color_floor(const Graph& g, std::size_t l, const SearchLimits& limits = {});

/// Sizes of the top colour class over all chi-colourings whose top class
/// dominates the graph.
std::vector<std::size_t> dominating_top_class_sizes(const Graph& g);

}  // namespace upcolor

#include "upcolor/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace upcolor {

std::string_view to_string(VertexRole role) {
    switch (role) {
        case VertexRole::ElementCopy: return "element_copy";
        case VertexRole::Subset: return "subset";
        case VertexRole::Root: return "root";
        case VertexRole::Dummy: return "dummy";
        case VertexRole::BaseTrue: return "T";
        case VertexRole::BaseFalse: return "F";
        case VertexRole::BaseBase: return "B";
        case VertexRole::Literal: return "literal";
        case VertexRole::ClauseGadget: return "clause_gadget";
        case VertexRole::HBAffirmed: return "hb_affirmed";
        case VertexRole::HBNegated: return "hb_negated";
        case VertexRole::Hair: return "hair";
        case VertexRole::Alpha: return "alpha";
        case VertexRole::Connector: return "connector";
        case VertexRole::LiteralHair: return "literal_hair";
    }
    return "unknown";
}

namespace {

std::size_t element_index(const MinCoverInstance& inst, int label) {
    const auto it = std::find(inst.universe.begin(), inst.universe.end(), label);
    if (it == inst.universe.end()) {
        throw Error(ErrorCode::BadParameters, "subset element " + std::to_string(label) + " is not in the universe");
    }
    return static_cast<std::size_t>(it - inst.universe.begin());
}

void validate_cover(const MinCoverInstance& inst) {
    if (inst.subsets.empty()) throw Error(ErrorCode::EmptyCollection, "the collection of subsets is empty");
    for (const auto& sub : inst.subsets) {
        if (sub.size() > 3) throw Error(ErrorCode::BadParameters, "subsets may hold at most 3 elements");
        for (int e : sub) element_index(inst, e);
    }
}

bool literal_value(int lit, const std::vector<bool>& assignment) {
    const bool v = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
    return lit > 0 ? v : !v;
}

void check_literal(int lit, std::size_t variables) {
    if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > variables) {
        throw Error(ErrorCode::BadParameters, "literal " + std::to_string(lit) + " is out of range");
    }
}

}  // namespace

ReductionOutput reduce_min_cover(const MinCoverInstance& inst, bool dummy_triangle) {
    validate_cover(inst);
    const std::size_t copies = inst.subsets.size();
    const std::size_t elems = inst.universe.size();
    const auto subset_base = static_cast<Vertex>(elems * copies);
    const auto root = static_cast<Vertex>(subset_base + inst.subsets.size());
    const std::size_t n = root + 1 + (dummy_triangle ? 3 : 0);

    std::vector<Edge> edges;
    std::vector<Color> colors(n);
    ReductionOutput out;
    out.roles.resize(n);
    for (Vertex v = 0; v < subset_base; ++v) {
        colors[v] = 1;
        out.roles[v] = VertexRole::ElementCopy;
    }
    for (std::size_t j = 0; j < inst.subsets.size(); ++j) {
        const auto sv = static_cast<Vertex>(subset_base + j);
        colors[sv] = 2;
        out.roles[sv] = VertexRole::Subset;
        edges.push_back({sv, root});
        auto members = inst.subsets[j];
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int e : members) {
            const std::size_t idx = element_index(inst, e);
            for (std::size_t c = 0; c < copies; ++c) edges.push_back({static_cast<Vertex>(idx * copies + c), sv});
        }
    }
    colors[root] = 3;
    out.roles[root] = VertexRole::Root;
    if (dummy_triangle) {
        for (Vertex i = 0; i < 3; ++i) {
            colors[root + 1 + i] = static_cast<Color>(i + 1);
            out.roles[root + 1 + i] = VertexRole::Dummy;
        }
        edges.push_back({root + 1, root + 2});
        edges.push_back({root + 1, root + 3});
        edges.push_back({root + 2, root + 3});
    }
    out.graph = new_graph(n, edges);
    out.coloring = Coloring(std::move(colors));
    out.k = inst.t + 1 + (dummy_triangle ? 1 : 0);
    return out;
}

std::optional<MinCoverSolution> solve_min_cover(const MinCoverInstance& inst) {
    validate_cover(inst);
    const std::size_t m = inst.subsets.size();
    if (m > 20) throw Error(ErrorCode::TooLarge, "minimum cover enumeration is limited to 20 subsets");
    if (inst.universe.size() > 64) throw Error(ErrorCode::TooLarge, "minimum cover universe is limited to 64 elements");
    std::vector<std::uint64_t> masks(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        for (int e : inst.subsets[j]) masks[j] |= std::uint64_t{1} << element_index(inst, e);
    }
    const std::size_t u = inst.universe.size();
    const std::uint64_t full = u == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << u) - 1;
    std::optional<MinCoverSolution> best;
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << m); ++pick) {
        const auto size = static_cast<std::size_t>(std::popcount(pick));
        if (best && size >= best->size) continue;
        std::uint64_t covered = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (pick >> j & 1U) covered |= masks[j];
        }
        if (covered != full) continue;
        MinCoverSolution s;
        s.size = size;
        for (std::size_t j = 0; j < m; ++j) {
            if (pick >> j & 1U) s.chosen.push_back(j);
        }
        best = s;
    }
    return best;
}

ReductionOutput reduce_3sat_chromatic(const ThreeSatInstance& inst) {
    if (inst.variables == 0) throw Error(ErrorCode::EmptyFormula, "formula has no variables");
    for (const auto& clause : inst.clauses) {
        if (clause.empty() || clause.size() > 3) {
            throw Error(ErrorCode::BadParameters, "clauses must hold between 1 and 3 literals");
        }
        for (int lit : clause) check_literal(lit, inst.variables);
    }
    const Vertex t = 0, f = 1, b = 2;
    const std::size_t n = 3 + 2 * inst.variables + 6 * inst.clauses.size();
    ReductionOutput out;
    out.roles.resize(n, VertexRole::ClauseGadget);
    out.roles[t] = VertexRole::BaseTrue;
    out.roles[f] = VertexRole::BaseFalse;
    out.roles[b] = VertexRole::BaseBase;
    std::vector<Edge> edges{{t, f}, {t, b}, {f, b}};
    auto literal_vertex = [&](int lit) {
        const auto i = static_cast<Vertex>(std::abs(lit) - 1);
        return static_cast<Vertex>(3 + 2 * i + (lit > 0 ? 0 : 1));
    };
    for (Vertex i = 0; i < inst.variables; ++i) {
        const Vertex pos = 3 + 2 * i;
        out.roles[pos] = out.roles[pos + 1] = VertexRole::Literal;
        edges.push_back({pos, pos + 1});
        edges.push_back({pos, b});
        edges.push_back({pos + 1, b});
    }
    auto base = static_cast<Vertex>(3 + 2 * inst.variables);
    for (const auto& clause : inst.clauses) {
        std::array<int, 3> lits{};
        for (std::size_t k = 0; k < 3; ++k) lits[k] = clause[std::min(k, clause.size() - 1)];
        const Vertex p1 = base, q1 = base + 1, r1 = base + 2, p2 = base + 3, q2 = base + 4, r2 = base + 5;
        edges.insert(edges.end(), {{p1, q1}, {p1, r1}, {q1, r1}, {p2, q2}, {p2, r2}, {q2, r2}});
        edges.push_back({literal_vertex(lits[0]), p1});
        edges.push_back({literal_vertex(lits[1]), q1});
        edges.push_back({r1, p2});
        edges.push_back({literal_vertex(lits[2]), q2});
        edges.push_back({f, r2});
        edges.push_back({b, r2});
        base += 6;
    }
    out.graph = new_graph(n, edges);
    out.k = 3;
    return out;
}

std::optional<std::vector<bool>> solve_3sat(const ThreeSatInstance& inst) {
    if (inst.variables > 24) throw Error(ErrorCode::TooLarge, "3-SAT enumeration is limited to 24 variables");
    for (const auto& clause : inst.clauses) {
        for (int lit : clause) check_literal(lit, inst.variables);
    }
    std::vector<bool> a(inst.variables);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << inst.variables); ++bits) {
        for (std::size_t i = 0; i < inst.variables; ++i) a[i] = (bits >> i & 1U) != 0;
        const bool ok = std::all_of(inst.clauses.begin(), inst.clauses.end(), [&](const std::vector<int>& c) {
            return std::any_of(c.begin(), c.end(), [&](int lit) { return literal_value(lit, a); });
        });
        if (ok) return a;
    }
    return std::nullopt;
}

ReductionOutput reduce_balanced_e2sat(const BalancedE2SatInstance& inst) {
    const std::size_t r = inst.variables;
    const std::size_t s = inst.clauses.size();
    if (r == 0 || s == 0) throw Error(ErrorCode::EmptyFormula, "formula has no variables or no clauses");
    if (inst.target == 0 || inst.target > s) throw Error(ErrorCode::BadParameters, "target must satisfy 0 < l <= s");
    std::vector<long> balance(r, 0);
    for (const auto& clause : inst.clauses) {
        for (int lit : clause) {
            check_literal(lit, r);
            balance[static_cast<std::size_t>(std::abs(lit) - 1)] += lit > 0 ? 1 : -1;
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (balance[i] != 0) {
            throw Error(ErrorCode::NotBalanced, "variable " + std::to_string(i + 1) + " is not balanced");
        }
    }

    const std::size_t block = 12 * s;
    const std::size_t n = 12 * r * s + 6 * s;
    ReductionOutput out;
    out.roles.resize(n);
    E2SatLayout layout;
    layout.r = r;
    layout.s = s;
    layout.variable.assign(n, -1);
    layout.side.assign(n, 0);
    layout.hb.resize(r);
    std::vector<Edge> edges;

    for (std::size_t i = 0; i < r; ++i) {
        const auto base = static_cast<Vertex>(i * block);
        for (Vertex k = 0; k < 6 * s; ++k) {
            const Vertex kv = base + k;
            const Vertex hair = kv + static_cast<Vertex>(6 * s);
            const int side = k < 3 * s ? 0 : 1;
            out.roles[kv] = side == 0 ? VertexRole::HBAffirmed : VertexRole::HBNegated;
            out.roles[hair] = VertexRole::Hair;
            layout.variable[kv] = layout.variable[hair] = static_cast<int>(i);
            layout.side[kv] = side;
            layout.side[hair] = 1 - side;
            layout.hb[i].push_back(kv);
            edges.push_back({kv, hair});
        }
        for (Vertex a = 0; a < 3 * s; ++a) {
            for (Vertex q = 0; q < 3 * s; ++q) {
                edges.push_back({base + a, static_cast<Vertex>(base + 3 * s + q)});
            }
        }
    }

    std::vector<std::array<std::size_t, 2>> used(r, {0, 0});  // next free K-vertex per side
    auto take = [&](std::size_t i, int side) {
        if (used[i][side] >= 3 * s) {
            throw Error(ErrorCode::TooManyOccurrences, "variable " + std::to_string(i + 1) + " has too many occurrences");
        }
        const auto k = static_cast<Vertex>(i * block + static_cast<std::size_t>(side) * 3 * s + used[i][side]++);
        return k;
    };
    const auto gadgets = static_cast<Vertex>(r * block);
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Vertex> a_block;
        std::array<Vertex, 2> alphas{};
        for (std::size_t t = 0; t < 2; ++t) {
            const int lit = inst.clauses[j][t];
            const auto i = static_cast<std::size_t>(std::abs(lit) - 1);
            const int sign = lit > 0 ? 0 : 1;
            const auto alpha = static_cast<Vertex>(gadgets + 6 * j + 3 * t);
            const Vertex p = alpha + 1, h = alpha + 2;
            const Vertex k_alpha = take(i, 1 - sign);
            const Vertex k_p = take(i, sign);
            edges.insert(edges.end(), {{alpha, k_alpha}, {alpha, p}, {p, k_p}, {p, h}});
            out.roles[alpha] = VertexRole::Alpha;
            out.roles[p] = VertexRole::Connector;
            out.roles[h] = VertexRole::LiteralHair;
            for (Vertex v : {alpha, p, h}) layout.variable[v] = static_cast<int>(i);
            layout.side[alpha] = layout.side[h] = sign;
            layout.side[p] = 1 - sign;
            const auto hair_of = [&](Vertex k) { return static_cast<Vertex>(k + 6 * s); };
            a_block.insert(a_block.end(), {alpha, p, h, k_alpha, hair_of(k_alpha), k_p, hair_of(k_p)});
            alphas[t] = alpha;
        }
        edges.push_back({alphas[0], alphas[1]});
        std::sort(a_block.begin(), a_block.end());
        layout.clause_block.push_back(std::move(a_block));
        layout.alphas.push_back(alphas);
    }
    out.graph = new_graph(n, edges);
    out.k = 6 * r * s + 3 * s + 2 * (s - inst.target);
    out.layout = std::move(layout);
    return out;
}

WitnessLabeling phi_labeling(const ReductionOutput& out, const std::vector<bool>& assignment) {
    if (!out.layout) throw Error(ErrorCode::BadParameters, "output does not come from the exact-2-SAT construction");
    const auto& lay = *out.layout;
    if (assignment.size() != lay.r) {
        throw Error(ErrorCode::BadAssignmentLength, "assignment has " + std::to_string(assignment.size()) +
                                                        " values for " + std::to_string(lay.r) + " variables");
    }
    WitnessLabeling w;
    w.phi.resize(out.graph.order());
    for (Vertex v = 0; v < out.graph.order(); ++v) {
        const int selected = assignment[static_cast<std::size_t>(lay.variable[v])] ? 0 : 1;
        w.phi[v] = lay.side[v] == selected ? 1 : 0;
    }
    for (const auto& pair : lay.alphas) {
        if (w.phi[pair[0]] == 0 && w.phi[pair[1]] == 0) ++w.n0;
    }
    return w;
}

WeightWitness build_weight_witness(const ReductionOutput& out, const std::vector<bool>& assignment) {
    WeightWitness w;
    w.labeling = phi_labeling(out, assignment);
    const auto& lay = *out.layout;
    const std::size_t n = out.graph.order();
    std::vector<Color> colors(w.labeling.phi.begin(), w.labeling.phi.end());
    VertexSet d(n);
    for (Vertex v = 0; v < n; ++v) {
        if (colors[v] == 1) d.insert(v);
    }
    for (const auto& pair : lay.alphas) {
        const Vertex lo = std::min(pair[0], pair[1]);
        const Vertex hi = std::max(pair[0], pair[1]);
        if (colors[lo] != colors[hi]) {
            ++w.satisfied;
            continue;
        }
        if (colors[lo] == 1) {
            // Both literals true: the lifted alpha dominates its partner.
            ++w.satisfied;
            colors[lo] = 2;
            d.erase(hi);
        } else {
            colors[lo] = 2;
            d.insert(lo);
        }
    }
    w.coloring = Coloring(std::move(colors));
    w.dominating = d;
    w.weight = w.coloring.weight_of(d);
    const auto cg = orient(out.graph, w.coloring);
    if (!is_up_color_dominating(cg, d).dominating) {
        throw Error(ErrorCode::InternalVerificationFailed, "assignment witness is not up-color dominating");
    }
    return w;
}

std::size_t count_satisfied(const std::vector<std::array<int, 2>>& clauses, const std::vector<bool>& assignment) {
    return static_cast<std::size_t>(std::count_if(clauses.begin(), clauses.end(), [&](const std::array<int, 2>& c) {
        return literal_value(c[0], assignment) || literal_value(c[1], assignment);
    }));
}

MaxE2SatSolution solve_max_e2sat(const BalancedE2SatInstance& inst) {
    if (inst.variables > 20) throw Error(ErrorCode::TooLarge, "MAX-E2-SAT enumeration is limited to 20 variables");
    for (const auto& c : inst.clauses) {
        for (int lit : c) check_literal(lit, inst.variables);
    }
    MaxE2SatSolution best;
    best.assignment.assign(inst.variables, false);
    best.satisfied = count_satisfied(inst.clauses, best.assignment);
    std::vector<bool> a(inst.variables);
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << inst.variables); ++bits) {
        for (std::size_t i = 0; i < inst.variables; ++i) a[i] = (bits >> i & 1U) != 0;
        const std::size_t sat = count_satisfied(inst.clauses, a);
        if (sat > best.satisfied) {
            best.satisfied = sat;
            best.assignment = a;
        }
    }
    return best;
}

StructureAudit audit_reduction_structure(const ReductionOutput& out) {
    StructureAudit a;
    const auto& g = out.graph;
    a.vertices = g.order();
    auto flag = [&](std::string msg) {
        a.ok = false;
        a.violations.push_back(std::move(msg));
    };
    if (out.roles.size() != g.order()) flag("role annotation does not cover every vertex");
    if (out.coloring && !validate_coloring(g, *out.coloring).proper) flag("attached colouring is not proper");
    if (!out.layout) {
        a.expected_vertices = g.order();
        return a;
    }
    const auto& lay = *out.layout;
    const std::size_t r = lay.r, s = lay.s;
    a.expected_vertices = 12 * r * s + 6 * s;
    if (g.order() != a.expected_vertices) {
        flag("vertex count " + std::to_string(g.order()) + " differs from 12rs+6s = " +
             std::to_string(a.expected_vertices));
    }
    if (lay.variable.size() != g.order() || lay.side.size() != g.order()) {
        flag("layout does not cover every vertex");
        return a;
    }
    auto pendant = [&](Vertex v) { return g.degree(v) == 1; };
    for (std::size_t i = 0; i < lay.hb.size(); ++i) {
        if (lay.hb[i].size() != 6 * s) flag("variable " + std::to_string(i + 1) + " does not have 6s HB vertices");
        for (Vertex k : lay.hb[i]) {
            const auto& nb = g.neighbors(k);
            const auto hairs = std::count_if(nb.begin(), nb.end(), pendant);
            if (hairs != 1) {
                flag("HB vertex " + std::to_string(k) + " carries " + std::to_string(hairs) + " hairs");
            }
        }
    }
    for (const auto& e : g.edges()) {
        if (lay.variable[e.u] == lay.variable[e.v] && lay.side[e.u] == lay.side[e.v]) {
            flag("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " breaks the bipartition of variable " +
                 std::to_string(lay.variable[e.u] + 1));
        }
    }
    for (std::size_t j = 0; j < lay.clause_block.size(); ++j) {
        const auto& blk = lay.clause_block[j];
        const auto hairs = static_cast<std::size_t>(std::count_if(blk.begin(), blk.end(), pendant));
        a.block_sizes.push_back(blk.size());
        a.block_hairs.push_back(hairs);
        if (blk.size() != 14) flag("A(c_" + std::to_string(j + 1) + ") has " + std::to_string(blk.size()) + " vertices");
        if (hairs != 6) flag("A(c_" + std::to_string(j + 1) + ") has " + std::to_string(hairs) + " hairs");
    }
    std::vector<std::array<std::size_t, 2>> sides(r, {0, 0});
    for (Vertex v = 0; v < g.order(); ++v) {
        if (lay.variable[v] < 0) continue;
        ++sides[static_cast<std::size_t>(lay.variable[v])][static_cast<std::size_t>(lay.side[v])];
    }
    for (std::size_t i = 0; i < r; ++i) {
        a.phi_total += sides[i][0];
        if (sides[i][0] != sides[i][1]) {
            flag("variable " + std::to_string(i + 1) + " has unbalanced sides " + std::to_string(sides[i][0]) + "/" +
                 std::to_string(sides[i][1]));
        }
    }
    if (a.phi_total != 6 * r * s + 3 * s) {
        flag("phi total " + std::to_string(a.phi_total) + " differs from 6rs+3s = " + std::to_string(6 * r * s + 3 * s));
    }
    return a;
}

}  // namespace upcolor

/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/graph.hpp"

#include <set>
#include <stdexcept>

namespace hyperalg {

Hypervector encode_graph(const ModelAlgebra& model, const ItemMemory& nodes,
                         std::span<const GraphEdge> edges, const PermutationSpec& rho) {
    if (edges.empty()) throw std::invalid_argument("encode_graph: no edges");
    if (!(nodes.space() == model.space()))
        throw std::invalid_argument("encode_graph: node memory space does not match the model");
    std::vector<Hypervector> terms;
    terms.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.from == e.to)
            throw std::invalid_argument("encode_graph: self-loop on node '" + e.from + "'");
        const Hypervector& u = nodes.get(e.from);
        const Hypervector& v = nodes.get(e.to);
        if (e.directed) {
            terms.push_back(bind(model, u, permute(v, rho)));
        } else {
            terms.push_back(bind(model, u, v));
        }
    }
    return superpose(model, terms, NormMode::none);
}

std::string to_string(RelationStyle style) {
    switch (style) {
        case RelationStyle::role_filler: return "role-filler";
        case RelationStyle::sbdr_cdt: return "sbdr-cdt";
        case RelationStyle::permutation: return "permutation";
    }
    throw std::logic_error("unreachable relation style");
}

RelationStyle relation_style_from_string(const std::string& name) {
    if (name == "role-filler") return RelationStyle::role_filler;
    if (name == "sbdr-cdt") return RelationStyle::sbdr_cdt;
    if (name == "permutation") return RelationStyle::permutation;
    throw std::invalid_argument("unknown relation style: " + name);
}

RelationCodec::RelationCodec(const ModelAlgebra& model, RelationSchema schema, std::uint64_t seed)
    : model_(&model), schema_(std::move(schema)), seed_(seed),
      predicate_hv_(Hypervector::zeros(model.space())) {
    std::set<std::string> seen;
    for (const auto& r : schema_.roles)
        if (!seen.insert(r).second)
            throw std::invalid_argument("relation schema: duplicate role '" + r + "'");
    if (schema_.style == RelationStyle::sbdr_cdt && model.name() != ModelName::sbdr)
        throw std::invalid_argument("sbdr-cdt relation style needs the SBDR model");
    RngStream rng(seed_, "rel-pred/" + schema_.predicate);
    predicate_hv_ = model.random_atom(rng);
    role_hvs_.reserve(schema_.roles.size());
    for (const auto& r : schema_.roles) {
        RngStream rrng(seed_, "rel-role/" + schema_.predicate + "/" + r);
        role_hvs_.push_back(model.random_atom(rrng));
    }
}

Hypervector RelationCodec::encode(std::span<const Hypervector> arguments) const {
    if (arguments.size() != schema_.roles.size())
        throw std::invalid_argument("relation arity mismatch: schema '" + schema_.predicate +
                                    "' expects " + std::to_string(schema_.roles.size()) +
                                    " arguments");
    const ModelAlgebra& model = *model_;
    if (arguments.empty()) return predicate_hv_;

    switch (schema_.style) {
        case RelationStyle::role_filler: {
            std::vector<Hypervector> terms;
            terms.reserve(arguments.size() + 2);
            terms.push_back(predicate_hv_);
            terms.push_back(superpose(model, arguments)); // <sum of arguments>
            for (std::size_t i = 0; i < arguments.size(); ++i)
                terms.push_back(bind(model, role_hvs_[i], arguments[i]));
            return superpose(model, terms);
        }
        case RelationStyle::sbdr_cdt: {
            // inner brackets bind each role to its filler, the outer one binds the pairs
            std::vector<Hypervector> pairs;
            pairs.reserve(arguments.size());
            for (std::size_t i = 0; i < arguments.size(); ++i) {
                std::vector<Hypervector> pair{role_hvs_[i], arguments[i]};
                pairs.push_back(cdt(model, pair));
            }
            return cdt(model, pairs);
        }
        case RelationStyle::permutation: {
            std::vector<Hypervector> terms;
            terms.reserve(2 * arguments.size() + 1);
            terms.push_back(predicate_hv_);
            for (const auto& a : arguments) terms.push_back(a);
            for (std::size_t i = 0; i < arguments.size(); ++i) {
                const auto rho = PermutationSpec::seeded(
                    seed_, "rel-perm/" + schema_.predicate + "/" + schema_.roles[i]);
                terms.push_back(permute(arguments[i], rho));
            }
            return superpose(model, terms);
        }
    }
    throw std::logic_error("unreachable relation style");
}

} // namespace hyperalg

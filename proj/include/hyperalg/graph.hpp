/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "hyperalg/item_memory.hpp"
#include "hyperalg/model.hpp"

namespace hyperalg {

struct GraphEdge {
    std::string from;
    std::string to;
    bool directed = false;
};

/**
 * Whole-graph encoding: the unconstrained superposition of one binding per
 * edge. Undirected edges bind the two node vectors directly (commutative
 * binding, so (u,v) == (v,u)); directed edges permute the head first:
 * bind(u, rho(v)). Self-loops are rejected. The dot product of two graph
 * vectors over the same node codebook estimates D times the shared edge
 * count.
 */
Hypervector encode_graph(const ModelAlgebra& model, const ItemMemory& nodes,
                         std::span<const GraphEdge> edges,
                         const PermutationSpec& rho = PermutationSpec::cyclic(1));

enum class RelationStyle {
    role_filler, // <pred + <sum args> + sum bind(role_i, arg_i)>
    sbdr_cdt,    // nested CDT of role/filler disjunctions
    permutation, // <pred + sum args + sum rho_role_i(arg_i)>
};

std::string to_string(RelationStyle style);
RelationStyle relation_style_from_string(const std::string& name);

struct RelationSchema {
    std::string predicate;
    std::vector<std::string> roles; // unique within the predicate
    RelationStyle style = RelationStyle::role_filler;
};

/**
 * Predicate/role vectors are seeded from (seed, predicate, role name), so
 * two schemas with the same names agree on them. Arguments may themselves be
 * relation encodings (nesting).
 */
class RelationCodec {
public:
    RelationCodec(const ModelAlgebra& model, RelationSchema schema, std::uint64_t seed);

    const RelationSchema& schema() const noexcept { return schema_; }
    const Hypervector& predicate_hv() const noexcept { return predicate_hv_; }
    const Hypervector& role_hv(std::size_t i) const { return role_hvs_.at(i); }

    /// Arity must match the schema; nullary relations return the predicate vector.
    Hypervector encode(std::span<const Hypervector> arguments) const;

private:
    const ModelAlgebra* model_;
    RelationSchema schema_;
    std::uint64_t seed_;
    Hypervector predicate_hv_;
    std::vector<Hypervector> role_hvs_;
};

} // namespace hyperalg

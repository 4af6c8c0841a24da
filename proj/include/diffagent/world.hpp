// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffagent/rng.hpp"
#include "diffagent/vocab.hpp"

namespace diffagent {

struct Fact {
    int entity = 0;
    int attr = 0;
    int value = 0;
    bool operator==(const Fact& o) const {
        return entity == o.entity && attr == o.attr && value == o.value;
    }
};

struct EntityRec {
    int id = 0;
    std::vector<int> values; // values[attr] in [0, n_values)
};

// One document holds a contiguous slice of one entity's facts, plus a
// pointer to the next document in that entity's chain. Chains are circular
// so the full fact set is reachable from any entry point (-1 when single).
struct DocRec {
    int id = 0;
    int entity = 0;
    std::vector<Fact> facts;
    int next_doc = -1;
};

struct WorldParams {
    int n_entities = 20;
    int n_attrs = 4;
    int n_values = 8;
    int max_docs_per_entity = 2; // chain length drawn in [1, max]
};

struct World {
    uint64_t seed = 0;
    WorldParams params;
    std::vector<EntityRec> entities;
    std::vector<DocRec> documents;

    // Documents of one entity in chain order.
    std::vector<int> entity_docs(int entity) const {
        std::vector<int> out;
        for (const auto& d : documents)
            if (d.entity == entity) out.push_back(d.id);
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct Constraint {
    int attr = 0;
    int value = 0;
};

struct TaskSpec {
    std::string task_id;
    uint64_t seed = 0;
    std::vector<Constraint> constraints;
    int gold_entity = -1;

    std::string gold_answer() const { return "e" + std::to_string(gold_entity); }
};

inline bool entity_satisfies(const EntityRec& e, const std::vector<Constraint>& cs) {
    for (const auto& c : cs)
        if (e.values[c.attr] != c.value) return false;
    return true;
}

inline std::vector<int> satisfying_entities(const World& w, const std::vector<Constraint>& cs) {
    std::vector<int> out;
    for (const auto& e : w.entities)
        if (entity_satisfies(e, cs)) out.push_back(e.id);
    return out;
}

// Deterministic world construction. Entities get pairwise-distinct attribute
// vectors; each entity's facts are split across a short chain of documents
// so that some answers require following cross-document pointers. Every
// attribute fact lands in exactly one document.
inline World generate_world(uint64_t seed, const WorldParams& p = {}) {
    if (p.n_entities < 2 || p.n_attrs < 1 || p.n_values < 2 || p.max_docs_per_entity < 1)
        throw std::invalid_argument("world size params must be positive");
    if (p.n_entities > Vocab::kMaxEntities || p.n_attrs > Vocab::kMaxAttrs ||
        p.n_values > Vocab::kMaxValues)
        throw std::invalid_argument("world size exceeds vocabulary slots");
    if (p.n_entities > p.max_docs_per_entity * Vocab::kMaxDocs ||
        p.n_entities * p.max_docs_per_entity > Vocab::kMaxDocs)
        throw std::invalid_argument("document budget exceeds vocabulary slots");
    double combos = 1.0;
    for (int a = 0; a < p.n_attrs; ++a) combos *= p.n_values;
    if (combos < 2.0 * p.n_entities)
        throw std::invalid_argument("attribute space too small for unique-answer tasks");

    World w;
    w.seed = seed;
    w.params = p;
    Rng rng(derive_seed(seed, fnv1a64("world")));

    std::set<std::vector<int>> seen;
    for (int e = 0; e < p.n_entities; ++e) {
        std::vector<int> vals(p.n_attrs);
        int attempts = 0;
        do {
            for (int a = 0; a < p.n_attrs; ++a)
                vals[a] = static_cast<int>(rng.next_below(p.n_values));
            if (++attempts > 10000)
                throw std::invalid_argument("cannot draw distinct entities; enlarge value space");
        } while (seen.count(vals));
        seen.insert(vals);
        w.entities.push_back({e, vals});
    }

    int next_doc_id = 0;
    for (int e = 0; e < p.n_entities; ++e) {
        const int chain = 1 + static_cast<int>(rng.next_below(p.max_docs_per_entity));
        const int g = std::min(chain, p.n_attrs);
        // Split attrs [0, n_attrs) into g contiguous groups.
        std::vector<int> doc_ids;
        for (int k = 0; k < g; ++k) doc_ids.push_back(next_doc_id++);
        for (int k = 0; k < g; ++k) {
            const int lo = p.n_attrs * k / g;
            const int hi = p.n_attrs * (k + 1) / g;
            DocRec d;
            d.id = doc_ids[k];
            d.entity = e;
            for (int a = lo; a < hi; ++a) d.facts.push_back({e, a, w.entities[e].values[a]});
            d.next_doc = (k + 1 < g) ? doc_ids[k + 1] : -1;
            w.documents.push_back(std::move(d));
        }
    }
    if (next_doc_id > Vocab::kMaxDocs)
        throw std::invalid_argument("generated too many documents for vocabulary");
    return w;
}

// Documents whose fact set contains attr=value, as (entity, doc) pairs
// sorted by entity id. This is the ground truth behind the search tool.
inline std::vector<std::pair<int, int>> docs_matching(const World& w, int attr, int value) {
    std::vector<std::pair<int, int>> out;
    for (const auto& d : w.documents)
        for (const auto& f : d.facts)
            if (f.attr == attr && f.value == value) {
                out.emplace_back(d.entity, d.id);
                break;
            }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- JSON persistence ----

inline nlohmann::json world_to_json(const World& w) {
    nlohmann::json j;
    j["seed"] = w.seed;
    j["vocab_size"] = Vocab::kSize;
    j["n_entities"] = w.params.n_entities;
    j["n_attrs"] = w.params.n_attrs;
    j["n_values"] = w.params.n_values;
    j["max_docs_per_entity"] = w.params.max_docs_per_entity;
    j["entities"] = nlohmann::json::array();
    for (const auto& e : w.entities) j["entities"].push_back({{"id", e.id}, {"values", e.values}});
    j["documents"] = nlohmann::json::array();
    for (const auto& d : w.documents) {
        nlohmann::json facts = nlohmann::json::array();
        for (const auto& f : d.facts) facts.push_back({f.entity, f.attr, f.value});
        j["documents"].push_back(
            {{"id", d.id}, {"entity", d.entity}, {"facts", facts}, {"next_doc", d.next_doc}});
    }
    return j;
}

inline World world_from_json(const nlohmann::json& j) {
    World w;
    w.seed = j.at("seed").get<uint64_t>();
    w.params.n_entities = j.at("n_entities").get<int>();
    w.params.n_attrs = j.at("n_attrs").get<int>();
    w.params.n_values = j.at("n_values").get<int>();
    w.params.max_docs_per_entity = j.at("max_docs_per_entity").get<int>();
    for (const auto& e : j.at("entities"))
        w.entities.push_back({e.at("id").get<int>(), e.at("values").get<std::vector<int>>()});
    for (const auto& d : j.at("documents")) {
        DocRec r;
        r.id = d.at("id").get<int>();
        r.entity = d.at("entity").get<int>();
        r.next_doc = d.at("next_doc").get<int>();
        for (const auto& f : d.at("facts")) r.facts.push_back({f[0], f[1], f[2]});
        w.documents.push_back(std::move(r));
    }
    return w;
}

inline nlohmann::json task_to_json(const TaskSpec& t) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : t.constraints) cs.push_back({c.attr, c.value});
    return {{"task_id", t.task_id}, {"seed", t.seed}, {"constraints", cs}, {"gold", t.gold_entity}};
}

inline TaskSpec task_from_json(const nlohmann::json& j) {
    TaskSpec t;
    t.task_id = j.at("task_id").get<std::string>();
    t.seed = j.at("seed").get<uint64_t>();
    t.gold_entity = j.at("gold").get<int>();
    for (const auto& c : j.at("constraints")) t.constraints.push_back({c[0], c[1]});
    return t;
}

} // namespace diffagent

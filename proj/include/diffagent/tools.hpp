// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "diffagent/actions.hpp"
#include "diffagent/world.hpp"

namespace diffagent {

struct Observation {
    TokenSeq tokens; // payload only; history serialization adds <obs>/<sep>
    bool ok = true;
};

// Per-episode virtual filesystem; keyed by detokenized path string.
class VirtualStore {
public:
    bool has(const std::string& path) const { return files_.count(path) > 0; }
    void write(const std::string& path, TokenSeq text) { files_[path] = std::move(text); }
    const TokenSeq* read(const std::string& path) const {
        auto it = files_.find(path);
        return it == files_.end() ? nullptr : &it->second;
    }

private:
    std::map<std::string, TokenSeq> files_;
};

namespace detail {

inline Observation error_obs(Token what) {
    Observation o;
    o.ok = false;
    o.tokens = {Vocab::kKwError, what};
    return o;
}

inline Observation not_found_obs() {
    Observation o;
    o.ok = false;
    o.tokens = {Vocab::kKwNotFound};
    return o;
}

// Expects value tokens [attrJ, =, vK]; returns false on anything else.
inline bool parse_query_constraint(const TokenSeq& v, int& attr, int& value) {
    if (v.size() != 3 || !Vocab::is_attr(v[0]) || v[1] != Vocab::kEq || !Vocab::is_value(v[2]))
        return false;
    attr = Vocab::attr_index(v[0]);
    value = Vocab::value_index(v[2]);
    return true;
}

// Facts about one entity in one doc, plus the chain pointer when present.
inline void append_doc_facts(const World& w, const DocRec& d, TokenSeq& out) {
    for (const auto& f : d.facts) {
        out.push_back(Vocab::attr(f.attr));
        out.push_back(Vocab::kEq);
        out.push_back(Vocab::value(f.value));
    }
    if (d.next_doc >= 0) {
        out.push_back(Vocab::kArgDoc);
        out.push_back(Vocab::doc(d.next_doc));
    }
    (void)w;
}

} // namespace detail

// Deterministic tool semantics over the synthetic world. Every failure mode
// is an observation, never an exception: the agent loop treats tool output
// as opaque environment feedback, mirroring real agent stacks.
inline Observation execute_tool(const ToolCall& call, const World& world, VirtualStore& store) {
    const Vocab& vocab = Vocab::instance();
    switch (call.tool) {
        case ToolId::Think:
        case ToolId::Reflect: {
            Observation o;
            o.tokens = {Vocab::kKwOk};
            return o;
        }
        case ToolId::BatchWebSearch: {
            int attr = 0, value = 0;
            if (!detail::parse_query_constraint(call.args.at(Vocab::kArgQuery), attr, value))
                return detail::not_found_obs();
            auto pairs = docs_matching(world, attr, value);
            if (pairs.empty()) return detail::not_found_obs();
            Observation o;
            o.tokens.push_back(Vocab::kKwFound);
            for (auto [entity, doc] : pairs) {
                o.tokens.push_back(Vocab::entity(entity));
                o.tokens.push_back(Vocab::doc(doc));
            }
            return o;
        }
        case ToolId::UrlCrawler: {
            const TokenSeq& v = call.args.at(Vocab::kArgDoc);
            if (v.size() != 1 || !Vocab::is_doc(v[0])) return detail::not_found_obs();
            const int doc = Vocab::doc_index(v[0]);
            for (const auto& d : world.documents) {
                if (d.id != doc) continue;
                Observation o;
                o.tokens.push_back(Vocab::doc(d.id));
                o.tokens.push_back(Vocab::entity(d.entity));
                detail::append_doc_facts(world, d, o.tokens);
                return o;
            }
            return detail::not_found_obs();
        }
        case ToolId::DocumentQa: {
            const TokenSeq& dv = call.args.at(Vocab::kArgDoc);
            const TokenSeq& qv = call.args.at(Vocab::kArgQuery);
            if (dv.size() != 1 || !Vocab::is_doc(dv[0]) || qv.size() != 1 ||
                !Vocab::is_entity(qv[0]))
                return detail::not_found_obs();
            const int doc = Vocab::doc_index(dv[0]);
            const int entity = Vocab::entity_index(qv[0]);
            for (const auto& d : world.documents) {
                if (d.id != doc) continue;
                if (d.entity != entity) return detail::not_found_obs();
                Observation o;
                o.tokens.push_back(Vocab::entity(entity));
                detail::append_doc_facts(world, d, o.tokens);
                return o;
            }
            return detail::not_found_obs();
        }
        case ToolId::FileRead: {
            const std::string path = vocab.detokenize(call.args.at(Vocab::kArgPath));
            const TokenSeq* text = store.read(path);
            if (!text) return detail::error_obs(Vocab::kKwNotFound);
            Observation o;
            o.tokens = *text;
            if (o.tokens.empty()) o.tokens = {Vocab::kKwOk};
            return o;
        }
        case ToolId::FileWrite: {
            const std::string path = vocab.detokenize(call.args.at(Vocab::kArgPath));
            store.write(path, call.args.at(Vocab::kArgText));
            Observation o;
            o.tokens = {Vocab::kKwOk};
            return o;
        }
        case ToolId::AssignTasks: {
            Observation o;
            o.tokens = {Vocab::kKwTaskAssigned};
            return o;
        }
        case ToolId::TaskDone: {
            Observation o;
            o.tokens = {Vocab::kKwDone};
            return o;
        }
    }
    return detail::not_found_obs();
}

} // namespace diffagent

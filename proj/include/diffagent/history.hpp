// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "diffagent/actions.hpp"
#include "diffagent/tools.hpp"
#include "diffagent/world.hpp"

namespace diffagent {

// Query rendering: `<query> find entity with (attrJ = vK)* <sep>`.
inline TokenSeq serialize_query(const TaskSpec& task) {
    TokenSeq out{Vocab::kRoleQuery, Vocab::kKwFind, Vocab::kKwEntity, Vocab::kKwWith};
    for (const auto& c : task.constraints) {
        out.push_back(Vocab::attr(c.attr));
        out.push_back(Vocab::kEq);
        out.push_back(Vocab::value(c.value));
    }
    out.push_back(Vocab::kSep);
    return out;
}

inline TokenSeq serialize_observation(const Observation& obs) {
    TokenSeq out{Vocab::kRoleObs};
    out.insert(out.end(), obs.tokens.begin(), obs.tokens.end());
    out.push_back(Vocab::kSep);
    return out;
}

// Accumulated interaction history. Rounds strictly alternate action then
// observation; the serialized form is append-only so the model's training
// context at round t is byte-identical to what the runtime feeds at round t.
class History {
public:
    enum class EntryKind { Query, Action, Obs };
    struct Entry {
        EntryKind kind;
        Token role; // actor role for actions, <query>/<obs> otherwise
        TokenSeq tokens;
    };

    explicit History(const TaskSpec& task) {
        Entry q{EntryKind::Query, Vocab::kRoleQuery, serialize_query(task)};
        token_count_ = static_cast<int>(q.tokens.size());
        entries_.push_back(std::move(q));
    }

    void append_action(TokenSeq action_tokens) {
        if (!expect_action()) throw std::logic_error("history alternation violated: action");
        Token role = action_tokens.empty() ? Vocab::kRolePlanner : action_tokens.front();
        token_count_ += static_cast<int>(action_tokens.size());
        entries_.push_back({EntryKind::Action, role, std::move(action_tokens)});
    }

    void append_observation(const Observation& obs) {
        if (expect_action()) throw std::logic_error("history alternation violated: obs");
        TokenSeq t = serialize_observation(obs);
        token_count_ += static_cast<int>(t.size());
        entries_.push_back({EntryKind::Obs, Vocab::kRoleObs, std::move(t)});
    }

    // True when the next append must be an action.
    bool expect_action() const { return entries_.back().kind != EntryKind::Action; }

    int token_count() const { return token_count_; }
    int rounds() const { return static_cast<int>((entries_.size() - 1) / 2); }
    const std::vector<Entry>& entries() const { return entries_; }

    TokenSeq serialize() const {
        TokenSeq out;
        out.reserve(token_count_);
        for (const auto& e : entries_) out.insert(out.end(), e.tokens.begin(), e.tokens.end());
        return out;
    }

private:
    std::vector<Entry> entries_;
    int token_count_ = 0;
};

} // namespace diffagent

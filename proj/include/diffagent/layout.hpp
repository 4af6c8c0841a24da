// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace diffagent {

// Index bookkeeping for one training example: a clean context prefix
// [0, ctx_len) followed by the action span [ctx_len, total_len).
// The two sets are disjoint, jointly contiguous, and the context strictly
// precedes the action span, so the pair of lengths determines both sets.
struct SpanLayout {
    int ctx_len = 0;
    int total_len = 0;

    int span_len() const { return total_len - ctx_len; }
    bool in_ctx(int i) const { return i >= 0 && i < ctx_len; }
    bool in_loss(int i) const { return i >= ctx_len && i < total_len; }

    void validate() const {
        if (ctx_len < 1 || total_len <= ctx_len)
            throw std::invalid_argument("malformed span layout");
    }
};

} // namespace diffagent

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "diffagent/layout.hpp"

namespace diffagent {

enum class MaskKind { Causal, SpanAware, BlockDecode, NaiveBlock };

inline const char* mask_kind_name(MaskKind k) {
    switch (k) {
        case MaskKind::Causal: return "causal";
        case MaskKind::SpanAware: return "span_aware";
        case MaskKind::BlockDecode: return "block_decode";
        case MaskKind::NaiveBlock: return "naive_block";
    }
    return "?";
}

// Dense boolean attention mask. allow(i, j) == true means query i may
// attend to key j. Materialized matrices keep every mask property
// directly checkable at desk scale; nothing here is performance-critical.
class AttentionMask {
public:
    AttentionMask(int n, MaskKind kind) : n_(n), kind_(kind), allow_(size_t(n) * n, 0) {
        if (n < 1) throw std::invalid_argument("mask size must be >= 1");
    }

    int size() const { return n_; }
    MaskKind kind() const { return kind_; }

    bool allow(int i, int j) const { return allow_[size_t(i) * n_ + j] != 0; }
    void set(int i, int j, bool v) { allow_[size_t(i) * n_ + j] = v ? 1 : 0; }

    bool operator==(const AttentionMask& o) const { return n_ == o.n_ && allow_ == o.allow_; }
    bool operator!=(const AttentionMask& o) const { return !(*this == o); }

    bool row_equal(const AttentionMask& o, int i) const {
        if (n_ != o.n_) return false;
        for (int j = 0; j < n_; ++j)
            if (allow(i, j) != o.allow(i, j)) return false;
        return true;
    }

    // Compact row-bitmap dump: each row as a hex string, LSB = column 0.
    std::string row_hex(int i) const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        const int nibbles = (n_ + 3) / 4;
        for (int nb = nibbles - 1; nb >= 0; --nb) {
            int v = 0;
            for (int b = 0; b < 4; ++b) {
                const int j = nb * 4 + b;
                if (j < n_ && allow(i, j)) v |= 1 << b;
            }
            out += digits[v];
        }
        return out;
    }

private:
    int n_;
    MaskKind kind_;
    std::vector<uint8_t> allow_;
};

// Strict lower-triangular-plus-diagonal visibility: allow(i, j) iff j <= i.
inline AttentionMask causal_mask(int n) {
    AttentionMask m(n, MaskKind::Causal);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m.set(i, j, true);
    return m;
}

// Training-time mask for one context-prefix + action-span example.
// Action queries see causal context plus the whole span bidirectionally;
// context queries stay causal within the context and never see span keys,
// so no attention edge exists at train time that is absent at decode time.
inline AttentionMask span_aware_mask(const SpanLayout& layout) {
    layout.validate();
    const int n = layout.total_len;
    AttentionMask m(n, MaskKind::SpanAware);
    for (int i = 0; i < n; ++i) {
        if (layout.in_loss(i)) {
            for (int j = 0; j < n; ++j)
                m.set(i, j, (layout.in_ctx(j) && j < i) || layout.in_loss(j));
        } else {
            for (int j = 0; j <= i; ++j) m.set(i, j, layout.in_ctx(j));
        }
    }
    return m;
}

// Decode-time mask while denoising the block [block_start, block_start+block_len).
// Positions before the block (context + committed tokens) are causal keys for
// the block; the block itself is bidirectional; positions after the block are
// unreachable (their rows are self-only, their outputs unused during decode).
inline AttentionMask block_decode_mask(int ctx_len, int block_start, int block_len, int total_len) {
    if (ctx_len < 0 || block_start < ctx_len || block_len < 1 || block_start + block_len > total_len)
        throw std::invalid_argument("block out of bounds");
    AttentionMask m(total_len, MaskKind::BlockDecode);
    const int block_end = block_start + block_len;
    for (int i = 0; i < total_len; ++i) {
        if (i < block_start) {
            for (int j = 0; j <= i; ++j) m.set(i, j, true);
        } else if (i < block_end) {
            for (int j = 0; j < block_start; ++j) m.set(i, j, true);
            for (int j = block_start; j < block_end; ++j) m.set(i, j, true);
        } else {
            m.set(i, i, true);
        }
    }
    return m;
}

// The unaligned baseline: partition [0, n) into fixed-width blocks starting
// at 0, bidirectional inside each block, block-causal across blocks. Blocks
// that straddle the context/action boundary create edges that never exist
// at decode time; mismatch_edge_count makes that measurable.
inline AttentionMask naive_block_mask(int n, int block_len) {
    if (n < 1 || block_len < 1) throw std::invalid_argument("bad naive block mask size");
    AttentionMask m(n, MaskKind::NaiveBlock);
    for (int i = 0; i < n; ++i) {
        const int bi = i / block_len;
        for (int j = 0; j < n; ++j) m.set(i, j, j / block_len <= bi);
    }
    return m;
}

// Number of attention edges present in `train` but absent in `decode`.
// Zero iff every edge the model trains with is also available at decode.
inline long mismatch_edge_count(const AttentionMask& train, const AttentionMask& decode) {
    if (train.size() != decode.size()) throw std::invalid_argument("mask size mismatch");
    long count = 0;
    for (int i = 0; i < train.size(); ++i)
        for (int j = 0; j < train.size(); ++j)
            if (train.allow(i, j) && !decode.allow(i, j)) ++count;
    return count;
}

inline std::string mask_to_bitmap_json(const AttentionMask& m) {
    std::string out = "{\"n\":" + std::to_string(m.size()) + ",\"kind\":\"";
    out += mask_kind_name(m.kind());
    out += "\",\"rows\":[";
    for (int i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += m.row_hex(i);
        out += '"';
    }
    out += "]}";
    return out;
}

} // namespace diffagent

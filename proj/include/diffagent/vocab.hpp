// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace diffagent {

using Token = int;
using TokenSeq = std::vector<Token>;

// Fixed 256-symbol vocabulary. Ids are stable constants: every artifact
// (datasets, checkpoints, traces) is tied to this layout, and vocab_size
// is recorded in run manifests so mixing artifacts across layouts fails
// loudly rather than silently.
class Vocab {
public:
    static constexpr int kPad = 0;
    static constexpr int kMask = 1;
    static constexpr int kSep = 2;
    static constexpr int kBeginAction = 3;
    static constexpr int kEndAction = 4;
    static constexpr int kQuote = 5;
    static constexpr int kEq = 6;

    static constexpr int kRoleQuery = 7;
    static constexpr int kRolePlanner = 8;
    static constexpr int kRoleSeeker = 9;
    static constexpr int kRoleWriter = 10;
    static constexpr int kRoleObs = 11;

    static constexpr int kKwToolcall = 12;
    static constexpr int kKwTerminate = 13;
    static constexpr int kKwOk = 14;
    static constexpr int kKwFound = 15;
    static constexpr int kKwNotFound = 16;
    static constexpr int kKwError = 17;
    static constexpr int kKwTaskAssigned = 18;
    static constexpr int kKwInvalidAction = 19;
    static constexpr int kKwPleaseTerminate = 20;
    static constexpr int kKwFind = 21;
    static constexpr int kKwEntity = 22;
    static constexpr int kKwWith = 23;
    static constexpr int kKwDone = 24;

    static constexpr int kArgQuery = 25;
    static constexpr int kArgDoc = 26;
    static constexpr int kArgPath = 27;
    static constexpr int kArgText = 28;
    static constexpr int kArgAnswer = 29;
    static constexpr int kArgTask = 30;

    static constexpr int kToolThink = 31;
    static constexpr int kToolReflect = 32;
    static constexpr int kToolBatchWebSearch = 33;
    static constexpr int kToolUrlCrawler = 34;
    static constexpr int kToolDocumentQa = 35;
    static constexpr int kToolFileRead = 36;
    static constexpr int kToolFileWrite = 37;
    static constexpr int kToolAssignTasks = 38;
    static constexpr int kToolTaskDone = 39;
    static constexpr int kWordSearch = 40; // alias surface for batch_web_search

    static constexpr int kLetterBase = 41;  // 'a'..'z'
    static constexpr int kDigitBase = 67;   // '0'..'9'
    static constexpr int kEntityBase = 77;  // e0..e63
    static constexpr int kMaxEntities = 64;
    static constexpr int kAttrBase = 141;   // attr0..attr7
    static constexpr int kMaxAttrs = 8;
    static constexpr int kValueBase = 149;  // v0..v15
    static constexpr int kMaxValues = 16;
    static constexpr int kDocBase = 165;    // d0..d63
    static constexpr int kMaxDocs = 64;
    static constexpr int kFillerBase = 229; // u0..u26
    static constexpr int kSize = 256;

    Vocab() {
        surfaces_.resize(kSize);
        surfaces_[kPad] = "<pad>";
        surfaces_[kMask] = "<mask>";
        surfaces_[kSep] = "<sep>";
        surfaces_[kBeginAction] = "<begin_action>";
        surfaces_[kEndAction] = "<end_action>";
        surfaces_[kQuote] = "<q>";
        surfaces_[kEq] = "=";
        surfaces_[kRoleQuery] = "<query>";
        surfaces_[kRolePlanner] = "<planner>";
        surfaces_[kRoleSeeker] = "<seeker>";
        surfaces_[kRoleWriter] = "<writer>";
        surfaces_[kRoleObs] = "<obs>";
        surfaces_[kKwToolcall] = "toolcall";
        surfaces_[kKwTerminate] = "terminate";
        surfaces_[kKwOk] = "ok";
        surfaces_[kKwFound] = "found";
        surfaces_[kKwNotFound] = "not_found";
        surfaces_[kKwError] = "error";
        surfaces_[kKwTaskAssigned] = "task_assigned";
        surfaces_[kKwInvalidAction] = "invalid_action";
        surfaces_[kKwPleaseTerminate] = "please_terminate";
        surfaces_[kKwFind] = "find";
        surfaces_[kKwEntity] = "entity";
        surfaces_[kKwWith] = "with";
        surfaces_[kKwDone] = "done";
        surfaces_[kArgQuery] = "query";
        surfaces_[kArgDoc] = "doc";
        surfaces_[kArgPath] = "path";
        surfaces_[kArgText] = "text";
        surfaces_[kArgAnswer] = "answer";
        surfaces_[kArgTask] = "task";
        surfaces_[kToolThink] = "think";
        surfaces_[kToolReflect] = "reflect";
        surfaces_[kToolBatchWebSearch] = "batch_web_search";
        surfaces_[kToolUrlCrawler] = "url_crawler";
        surfaces_[kToolDocumentQa] = "document_qa";
        surfaces_[kToolFileRead] = "file_read";
        surfaces_[kToolFileWrite] = "file_write";
        surfaces_[kToolAssignTasks] = "assign_tasks";
        surfaces_[kToolTaskDone] = "task_done";
        surfaces_[kWordSearch] = "search";
        for (int i = 0; i < 26; ++i) surfaces_[kLetterBase + i] = std::string(1, char('a' + i));
        for (int i = 0; i < 10; ++i) surfaces_[kDigitBase + i] = std::string(1, char('0' + i));
        for (int i = 0; i < kMaxEntities; ++i) surfaces_[kEntityBase + i] = "e" + std::to_string(i);
        for (int i = 0; i < kMaxAttrs; ++i) surfaces_[kAttrBase + i] = "attr" + std::to_string(i);
        for (int i = 0; i < kMaxValues; ++i) surfaces_[kValueBase + i] = "v" + std::to_string(i);
        for (int i = 0; i < kMaxDocs; ++i) surfaces_[kDocBase + i] = "d" + std::to_string(i);
        for (int i = kFillerBase; i < kSize; ++i) surfaces_[i] = "u" + std::to_string(i - kFillerBase);
        for (int i = 0; i < kSize; ++i) by_surface_[surfaces_[i]] = i;
    }

    static const Vocab& instance() {
        static const Vocab v;
        return v;
    }

    int size() const { return kSize; }

    const std::string& surface(Token t) const {
        if (t < 0 || t >= kSize) throw std::invalid_argument("token id out of range");
        return surfaces_[t];
    }

    int lookup(const std::string& s) const {
        auto it = by_surface_.find(s);
        return it == by_surface_.end() ? -1 : it->second;
    }

    static Token entity(int i) { return check_slot(i, kMaxEntities, "entity"), kEntityBase + i; }
    static Token attr(int i) { return check_slot(i, kMaxAttrs, "attr"), kAttrBase + i; }
    static Token value(int i) { return check_slot(i, kMaxValues, "value"), kValueBase + i; }
    static Token doc(int i) { return check_slot(i, kMaxDocs, "doc"), kDocBase + i; }

    static bool is_entity(Token t) { return t >= kEntityBase && t < kEntityBase + kMaxEntities; }
    static bool is_attr(Token t) { return t >= kAttrBase && t < kAttrBase + kMaxAttrs; }
    static bool is_value(Token t) { return t >= kValueBase && t < kValueBase + kMaxValues; }
    static bool is_doc(Token t) { return t >= kDocBase && t < kDocBase + kMaxDocs; }
    static bool is_tool(Token t) { return t >= kToolThink && t <= kToolTaskDone; }
    static bool is_arg_key(Token t) { return t >= kArgQuery && t <= kArgTask; }

    static int entity_index(Token t) { return t - kEntityBase; }
    static int attr_index(Token t) { return t - kAttrBase; }
    static int value_index(Token t) { return t - kValueBase; }
    static int doc_index(Token t) { return t - kDocBase; }

    // Greedy longest-match tokenization of a whitespace-free word
    // ("attr2=v7" -> [attr2, =, v7]). Throws if a prefix cannot match.
    TokenSeq tokenize_word(const std::string& word) const {
        TokenSeq out;
        size_t pos = 0;
        while (pos < word.size()) {
            int best = -1;
            size_t best_len = 0;
            for (size_t len = std::min(word.size() - pos, max_surface_len()); len >= 1; --len) {
                auto it = by_surface_.find(word.substr(pos, len));
                if (it != by_surface_.end()) {
                    best = it->second;
                    best_len = len;
                    break;
                }
            }
            if (best < 0) throw std::invalid_argument("untokenizable text: " + word.substr(pos));
            out.push_back(best);
            pos += best_len;
        }
        return out;
    }

    // Inverse of tokenize_word: concatenation of surfaces.
    std::string detokenize(const TokenSeq& ts) const {
        std::string out;
        for (Token t : ts) out += surface(t);
        return out;
    }

    // Space-joined rendering for logs and debug dumps.
    std::string render(const TokenSeq& ts) const {
        std::string out;
        for (size_t i = 0; i < ts.size(); ++i) {
            if (i) out += ' ';
            out += surface(ts[i]);
        }
        return out;
    }

private:
    static size_t max_surface_len() { return 16; }
    static void check_slot(int i, int max, const char* what) {
        if (i < 0 || i >= max) throw std::invalid_argument(std::string(what) + " slot out of range");
    }

    std::vector<std::string> surfaces_;
    std::unordered_map<std::string, int> by_surface_;
};

} // namespace diffagent

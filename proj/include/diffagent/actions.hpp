// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "diffagent/vocab.hpp"

namespace diffagent {

enum class ToolId {
    Think,
    Reflect,
    BatchWebSearch,
    UrlCrawler,
    DocumentQa,
    FileRead,
    FileWrite,
    AssignTasks,
    TaskDone,
};

inline const char* tool_name(ToolId t) {
    switch (t) {
        case ToolId::Think: return "think";
        case ToolId::Reflect: return "reflect";
        case ToolId::BatchWebSearch: return "batch_web_search";
        case ToolId::UrlCrawler: return "url_crawler";
        case ToolId::DocumentQa: return "document_qa";
        case ToolId::FileRead: return "file_read";
        case ToolId::FileWrite: return "file_write";
        case ToolId::AssignTasks: return "assign_tasks";
        case ToolId::TaskDone: return "task_done";
    }
    return "?";
}

// Cognitive operators are free; environment-facing tools consume tool budget.
inline bool tool_env_facing(ToolId t) {
    return t != ToolId::Think && t != ToolId::Reflect;
}

inline std::optional<ToolId> tool_from_token(Token t) {
    switch (t) {
        case Vocab::kToolThink: return ToolId::Think;
        case Vocab::kToolReflect: return ToolId::Reflect;
        case Vocab::kToolBatchWebSearch: return ToolId::BatchWebSearch;
        case Vocab::kToolUrlCrawler: return ToolId::UrlCrawler;
        case Vocab::kToolDocumentQa: return ToolId::DocumentQa;
        case Vocab::kToolFileRead: return ToolId::FileRead;
        case Vocab::kToolFileWrite: return ToolId::FileWrite;
        case Vocab::kToolAssignTasks: return ToolId::AssignTasks;
        case Vocab::kToolTaskDone: return ToolId::TaskDone;
        case Vocab::kWordSearch: return ToolId::BatchWebSearch; // accepted alias
        default: return std::nullopt;
    }
}

inline Token tool_token(ToolId t) {
    switch (t) {
        case ToolId::Think: return Vocab::kToolThink;
        case ToolId::Reflect: return Vocab::kToolReflect;
        case ToolId::BatchWebSearch: return Vocab::kToolBatchWebSearch;
        case ToolId::UrlCrawler: return Vocab::kToolUrlCrawler;
        case ToolId::DocumentQa: return Vocab::kToolDocumentQa;
        case ToolId::FileRead: return Vocab::kToolFileRead;
        case ToolId::FileWrite: return Vocab::kToolFileWrite;
        case ToolId::AssignTasks: return Vocab::kToolAssignTasks;
        case ToolId::TaskDone: return Vocab::kToolTaskDone;
    }
    throw std::invalid_argument("bad tool id");
}

// Argument keys a tool requires, in canonical serialization order.
inline const std::vector<Token>& tool_schema(ToolId t) {
    static const std::vector<Token> kText = {Vocab::kArgText};
    static const std::vector<Token> kQuery = {Vocab::kArgQuery};
    static const std::vector<Token> kDoc = {Vocab::kArgDoc};
    static const std::vector<Token> kDocQuery = {Vocab::kArgDoc, Vocab::kArgQuery};
    static const std::vector<Token> kPath = {Vocab::kArgPath};
    static const std::vector<Token> kPathText = {Vocab::kArgPath, Vocab::kArgText};
    static const std::vector<Token> kTask = {Vocab::kArgTask};
    static const std::vector<Token> kNone = {};
    switch (t) {
        case ToolId::Think:
        case ToolId::Reflect: return kText;
        case ToolId::BatchWebSearch: return kQuery;
        case ToolId::UrlCrawler: return kDoc;
        case ToolId::DocumentQa: return kDocQuery;
        case ToolId::FileRead: return kPath;
        case ToolId::FileWrite: return kPathText;
        case ToolId::AssignTasks: return kTask;
        case ToolId::TaskDone: return kNone;
    }
    throw std::invalid_argument("bad tool id");
}

// Arguments are kept as token sequences; string views are derived on demand,
// which keeps round-trips exact (no re-tokenization ambiguity on hot paths).
struct ToolCall {
    ToolId tool = ToolId::Think;
    std::map<Token, TokenSeq> args; // key token -> value tokens
};

struct Terminate {
    TokenSeq answer;
};

struct StructuredAction {
    std::variant<ToolCall, Terminate> body;

    bool is_terminate() const { return std::holds_alternative<Terminate>(body); }
    const ToolCall& call() const { return std::get<ToolCall>(body); }
    const Terminate& terminate() const { return std::get<Terminate>(body); }
};

enum class ParseReason { MissingDelimiter, UnknownTool, BadArgs, MultipleSpans };

inline const char* parse_reason_name(ParseReason r) {
    switch (r) {
        case ParseReason::MissingDelimiter: return "missing_delimiter";
        case ParseReason::UnknownTool: return "unknown_tool";
        case ParseReason::BadArgs: return "bad_args";
        case ParseReason::MultipleSpans: return "multiple_spans";
    }
    return "?";
}

struct ParseError {
    ParseReason reason;
    std::string detail;
};

using ParseResult = std::variant<StructuredAction, ParseError>;

inline bool parse_ok(const ParseResult& r) { return std::holds_alternative<StructuredAction>(r); }

// Canonical serialization (no delimiters): `toolcall <tool> (<key> = <q> ... <q>)*`
// or `terminate answer = <q> ... <q>`. Args follow the tool's schema order.
inline TokenSeq serialize_action_body(const StructuredAction& a) {
    TokenSeq out;
    if (a.is_terminate()) {
        out.push_back(Vocab::kKwTerminate);
        out.push_back(Vocab::kArgAnswer);
        out.push_back(Vocab::kEq);
        out.push_back(Vocab::kQuote);
        out.insert(out.end(), a.terminate().answer.begin(), a.terminate().answer.end());
        out.push_back(Vocab::kQuote);
        return out;
    }
    const auto& call = a.call();
    out.push_back(Vocab::kKwToolcall);
    out.push_back(tool_token(call.tool));
    for (Token key : tool_schema(call.tool)) {
        auto it = call.args.find(key);
        if (it == call.args.end()) throw std::invalid_argument("missing arg for serialization");
        out.push_back(key);
        out.push_back(Vocab::kEq);
        out.push_back(Vocab::kQuote);
        out.insert(out.end(), it->second.begin(), it->second.end());
        out.push_back(Vocab::kQuote);
    }
    return out;
}

inline TokenSeq wrap_action_span(const StructuredAction& a, Token role) {
    TokenSeq out{role, Vocab::kBeginAction};
    TokenSeq body = serialize_action_body(a);
    out.insert(out.end(), body.begin(), body.end());
    out.push_back(Vocab::kEndAction);
    return out;
}

// Deterministic parser over arbitrary token input. Locates exactly one
// BEGIN/END-delimited span; tokens outside the span are ignored except
// that stray delimiters count as multiple spans. Never throws on input.
inline ParseResult parse_action(const TokenSeq& raw) {
    int begin = -1, end = -1;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == Vocab::kBeginAction) {
            if (begin >= 0) return ParseError{ParseReason::MultipleSpans, "second begin delimiter"};
            begin = static_cast<int>(i);
        } else if (raw[i] == Vocab::kEndAction) {
            if (begin < 0) return ParseError{ParseReason::MultipleSpans, "end before begin"};
            if (end >= 0) return ParseError{ParseReason::MultipleSpans, "second end delimiter"};
            end = static_cast<int>(i);
        }
    }
    if (begin < 0) return ParseError{ParseReason::MissingDelimiter, "no begin delimiter"};
    if (end < 0) return ParseError{ParseReason::MissingDelimiter, "no end delimiter"};

    TokenSeq body(raw.begin() + begin + 1, raw.begin() + end);
    if (body.empty()) return ParseError{ParseReason::BadArgs, "empty action span"};

    size_t pos = 0;
    auto parse_args = [&](std::map<Token, TokenSeq>& args) -> std::optional<ParseError> {
        while (pos < body.size()) {
            Token key = body[pos];
            if (!Vocab::is_arg_key(key))
                return ParseError{ParseReason::BadArgs, "expected argument key"};
            if (args.count(key)) return ParseError{ParseReason::BadArgs, "duplicate argument key"};
            if (pos + 2 >= body.size() || body[pos + 1] != Vocab::kEq ||
                body[pos + 2] != Vocab::kQuote)
                return ParseError{ParseReason::BadArgs, "expected = \" after key"};
            pos += 3;
            TokenSeq value;
            while (pos < body.size() && body[pos] != Vocab::kQuote) value.push_back(body[pos++]);
            if (pos >= body.size())
                return ParseError{ParseReason::BadArgs, "unterminated argument value"};
            ++pos; // closing quote
            args[key] = std::move(value);
        }
        return std::nullopt;
    };

    if (body[0] == Vocab::kKwTerminate) {
        pos = 1;
        std::map<Token, TokenSeq> args;
        if (auto err = parse_args(args)) return *err;
        auto it = args.find(Vocab::kArgAnswer);
        if (it == args.end() || args.size() != 1)
            return ParseError{ParseReason::BadArgs, "terminate requires exactly answer=..."};
        if (it->second.empty()) return ParseError{ParseReason::BadArgs, "empty answer"};
        StructuredAction a;
        a.body = Terminate{it->second};
        return a;
    }

    if (body[0] != Vocab::kKwToolcall)
        return ParseError{ParseReason::BadArgs, "expected toolcall or terminate"};
    if (body.size() < 2) return ParseError{ParseReason::BadArgs, "missing tool name"};
    auto tool = tool_from_token(body[1]);
    if (!tool) return ParseError{ParseReason::UnknownTool, "unknown tool token"};

    pos = 2;
    std::map<Token, TokenSeq> args;
    if (auto err = parse_args(args)) return *err;

    const auto& schema = tool_schema(*tool);
    for (Token key : schema)
        if (!args.count(key))
            return ParseError{ParseReason::BadArgs,
                              std::string("missing required arg for ") + tool_name(*tool)};
    for (const auto& [key, value] : args) {
        bool known = false;
        for (Token k : schema) known = known || k == key;
        if (!known) return ParseError{ParseReason::BadArgs, "unexpected argument key"};
        if (value.empty()) return ParseError{ParseReason::BadArgs, "empty argument value"};
    }

    StructuredAction a;
    a.body = ToolCall{*tool, std::move(args)};
    return a;
}

} // namespace diffagent

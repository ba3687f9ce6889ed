#pragma once
// Domain types for a repeated-sampling experiment: raw generation records,
// parsed ideas, and response-level scores.

#include <optional>
#include <string>
#include <vector>

#include "varcomp/error.hpp"
#include "varcomp/text.hpp"
#include "varcomp/util.hpp"

namespace varcomp {

enum class ParseStatus { parsed, parse_failed, excluded };

// One raw generator output, keyed by (model, prompt, run).
struct GenerationRecord {
    std::string model_id;
    std::string prompt_id;
    long run_index = 0;
    std::string raw_text;
    ParseStatus parse_status = ParseStatus::parsed;
};

// One parsed idea with its normalized form and structural features.
struct Idea {
    std::string text;
    std::string normalized;
    long char_count = 0;
    bool has_colon = false;
    bool has_hyphen = false;
    bool has_digit = false;
    std::string category;  // assigned by classification; empty until then
    std::optional<double> originality;
};

inline Idea make_idea(std::string text) {
    Idea idea;
    idea.normalized = normalize_idea(text);
    idea.char_count = utf8_length(text);
    idea.has_colon = contains_colon(text);
    idea.has_hyphen = contains_dash(text);
    idea.has_digit = contains_digit(text);
    idea.text = std::move(text);
    return idea;
}

// An idea in corpus position: which response it came from and where.
struct IdeaRow {
    std::string model_id;
    std::string prompt_id;
    long run_index = 0;
    long idea_index = 0;
    Idea idea;
};

// Response-level metrics: fluency is the count of valid ideas, originality
// the mean over scored ideas (absent when nothing is scored).
struct ResponseScore {
    std::string model_id;
    std::string prompt_id;
    long run_index = 0;
    std::optional<double> originality;
    long fluency = 0;
};

inline ResponseScore response_metrics(const std::vector<Idea>& ideas) {
    ResponseScore score;
    score.fluency = static_cast<long>(ideas.size());
    double sum = 0.0;
    long n = 0;
    for (const Idea& idea : ideas) {
        if (idea.originality) {
            sum += *idea.originality;
            ++n;
        }
    }
    if (n > 0) score.originality = sum / static_cast<double>(n);
    return score;
}

}  // namespace varcomp

#pragma once
// Long-format numeric table over the crossed (model, prompt, run) design.

#include <cmath>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "varcomp/dataset.hpp"
#include "varcomp/error.hpp"

namespace varcomp {

struct Observation {
    std::string model_id;
    std::string prompt_id;
    long run_index = 0;
    double value = 0.0;
};

class ObservationTable {
public:
    ObservationTable() = default;
    explicit ObservationTable(std::string metric_name) : metric_name_(std::move(metric_name)) {}

    const std::string& metric_name() const { return metric_name_; }
    const std::vector<Observation>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    void add(Observation obs) {
        if (!std::isfinite(obs.value))
            throw InvalidSpec("non-finite value at (" + obs.model_id + ", " + obs.prompt_id + ")");
        std::string key = obs.model_id + '\x1f' + obs.prompt_id + '\x1f' + std::to_string(obs.run_index);
        if (!seen_.insert(std::move(key)).second)
            throw DuplicateIndex("(" + obs.model_id + ", " + obs.prompt_id + ", " +
                                 std::to_string(obs.run_index) + ") appears twice");
        rows_.push_back(std::move(obs));
    }

    // True when every (model, prompt) cell of the full cross has the same
    // positive row count.
    bool balanced() const {
        if (rows_.empty()) return true;
        std::map<std::pair<std::string, std::string>, long> counts;
        std::unordered_set<std::string> models, prompts;
        for (const Observation& o : rows_) {
            ++counts[{o.model_id, o.prompt_id}];
            models.insert(o.model_id);
            prompts.insert(o.prompt_id);
        }
        if (counts.size() != models.size() * prompts.size()) return false;
        long first = counts.begin()->second;
        for (const auto& [cell, n] : counts)
            if (n != first) return false;
        return true;
    }

private:
    std::string metric_name_;
    std::vector<Observation> rows_;
    std::unordered_set<std::string> seen_;
};

enum class Metric { originality, fluency };

inline const char* metric_name(Metric m) {
    return m == Metric::originality ? "originality" : "fluency";
}

// Builds the long table for one metric. Originality rows exist only for
// responses that carry a score; fluency rows cover every parsed response.
inline ObservationTable build_table(const std::vector<ResponseScore>& scores, Metric metric) {
    ObservationTable table{metric_name(metric)};
    for (const ResponseScore& s : scores) {
        if (metric == Metric::originality) {
            if (!s.originality) continue;
            table.add({s.model_id, s.prompt_id, s.run_index, *s.originality});
        } else {
            table.add({s.model_id, s.prompt_id, s.run_index, static_cast<double>(s.fluency)});
        }
    }
    return table;
}

}  // namespace varcomp

#pragma once
// Pluggable originality scoring. Real scores come from an external service
// via the scores file; the stub exists for fully offline, deterministic
// pipelines and fixtures.

#include <string>

#include "varcomp/dataset.hpp"
#include "varcomp/util.hpp"

namespace varcomp {

class Scorer {
public:
    virtual ~Scorer() = default;
    // Returns an originality score in [1, 5] for a parsed idea.
    virtual double score(const Idea& idea) const = 0;
};

// Hash-based scorer: a fixed pure function of the normalized idea text.
class StubScorer : public Scorer {
public:
    double score(const Idea& idea) const override {
        double u = static_cast<double>(fnv1a64(idea.normalized) >> 11) * 0x1.0p-53;
        return 1.0 + 4.0 * u;
    }
};

}  // namespace varcomp

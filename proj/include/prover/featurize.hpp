#pragma once

// Assertion registry and featurization of proof obligations into fixed
// length bit vectors.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prover/kernel.hpp"

namespace prover {

using FeatureVector = std::vector<uint8_t>; // entries 0 or 1

struct Assertion {
    int index;
    std::string name;
    std::function<bool(const ProofState&, const Theory&)> predicate;
};

struct FeaturizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The fixed desk-scale registry (16 assertions, indices 0..15).
const std::vector<Assertion>& assertion_catalog();

FeatureVector featurize(const ProofState& state, const Theory& theory);

// bracketed 0/1 list, e.g. [1,0,0,1,0]
std::string to_bracket_string(const FeatureVector& v);

// Feature dump: header `goal_id,a0..a{K-1}`, one 0/1 row per obligation.
std::string feature_csv(const std::vector<std::string>& ids,
                        const std::vector<FeatureVector>& rows);
// inverse of feature_csv; throws FeaturizeError on malformed text
void parse_feature_csv(const std::string& text, std::vector<std::string>& ids,
                       std::vector<FeatureVector>& rows);

} // namespace prover

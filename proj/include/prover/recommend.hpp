#pragma once

// Per-method height-2 regression trees: one-vs-rest extraction, training by
// squared-error variance reduction, evaluation, and the text codec.

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prover/featurize.hpp"

namespace prover {

struct DataPoint {
    FeatureVector features;
    int label = 0; // 1 = the labeled method was used on this obligation
};

struct TreeChild {
    int assertion = 0;
    double if_true = 0.0;
    double if_false = 0.0;
};

// Complete height-2 tree. Local leaf order: (root true, child true) = 0,
// (T,F) = 1, (F,T) = 2, (F,F) = 3.
struct MethodTree {
    std::string method;
    int root = 0;
    TreeChild when_true;
    TreeChild when_false;
};

bool operator==(const TreeChild& a, const TreeChild& b);
bool operator==(const MethodTree& a, const MethodTree& b);

struct TreeParseError : std::runtime_error {
    int position;
    TreeParseError(const std::string& what, int pos)
        : std::runtime_error(what), position(pos) {}
};

struct ConfigMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// label 1 iff the entry's method equals target
std::vector<DataPoint> extract_datapoints(
    std::span<const std::pair<FeatureVector, std::string>> corpus,
    const std::string& target);

// Root and child splits minimize total squared-error impurity; ties break
// to the lowest assertion index; an empty partition inherits its parent's
// mean and tests assertion 0. Leaf expectation = mean label at the leaf.
MethodTree train_tree(std::span<const DataPoint> points, const std::string& method);

struct LeafEval {
    int leaf = 0; // local index 0..3
    double expectation = 0.0;
};

LeafEval eval_tree(const MethodTree& tree, const FeatureVector& v);

// `(R, (T, expectation X, expectation Y), (F, expectation Z, expectation W))`
// with the true-branch node first; floats in shortest round-trip form.
std::string serialize_tree(const MethodTree& tree);
MethodTree parse_tree(std::string_view text); // method name left empty

struct TreeBank {
    std::vector<MethodTree> trees; // sorted by method name
    size_t leaf_count() const { return 4 * trees.size(); }
};

// one line per method: `methodname ` + serialized tree, sorted
std::string treebank_to_string(const TreeBank& bank);
TreeBank parse_treebank(std::string_view text);

} // namespace prover

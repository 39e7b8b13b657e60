#include "prover/recommend.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace prover {

bool operator==(const TreeChild& a, const TreeChild& b) {
    return a.assertion == b.assertion && a.if_true == b.if_true && a.if_false == b.if_false;
}

bool operator==(const MethodTree& a, const MethodTree& b) {
    return a.method == b.method && a.root == b.root && a.when_true == b.when_true &&
           a.when_false == b.when_false;
}

std::vector<DataPoint> extract_datapoints(
    std::span<const std::pair<FeatureVector, std::string>> corpus,
    const std::string& target) {
    std::vector<DataPoint> out;
    out.reserve(corpus.size());
    for (const auto& [v, method] : corpus)
        out.push_back(DataPoint{v, method == target ? 1 : 0});
    return out;
}

namespace {

// exact squared-error impurity of a binary 0/1 split as a fraction
struct Impurity {
    __int128 num = 0;
    __int128 den = 1;
    bool operator<(const Impurity& o) const { return num * o.den < o.num * den; }
};

Impurity split_impurity(std::span<const size_t> idx, std::span<const DataPoint> pts,
                        int assertion) {
    long long n1 = 0, p1 = 0, n0 = 0, p0 = 0;
    for (size_t i : idx) {
        if (pts[i].features[static_cast<size_t>(assertion)]) {
            ++n1;
            p1 += pts[i].label;
        } else {
            ++n0;
            p0 += pts[i].label;
        }
    }
    // SSE of a 0/1 leaf with n points and p positives is p(n-p)/n
    if (n1 == 0) return {static_cast<__int128>(p0) * (n0 - p0), n0};
    if (n0 == 0) return {static_cast<__int128>(p1) * (n1 - p1), n1};
    return {static_cast<__int128>(p1) * (n1 - p1) * n0 +
                static_cast<__int128>(p0) * (n0 - p0) * n1,
            static_cast<__int128>(n1) * n0};
}

int best_split(std::span<const size_t> idx, std::span<const DataPoint> pts, size_t k) {
    int best = 0;
    Impurity best_imp = split_impurity(idx, pts, 0);
    for (size_t a = 1; a < k; ++a) {
        Impurity imp = split_impurity(idx, pts, static_cast<int>(a));
        if (imp < best_imp) { // ties keep the lowest index
            best_imp = imp;
            best = static_cast<int>(a);
        }
    }
    return best;
}

double mean_label(std::span<const size_t> idx, std::span<const DataPoint> pts,
                  double fallback) {
    if (idx.empty()) return fallback;
    long long p = 0;
    for (size_t i : idx) p += pts[i].label;
    return static_cast<double>(p) / static_cast<double>(idx.size());
}

TreeChild train_child(std::span<const size_t> idx, std::span<const DataPoint> pts, size_t k,
                      double parent_mean) {
    if (idx.empty()) return TreeChild{0, parent_mean, parent_mean};
    const double node_mean = mean_label(idx, pts, parent_mean);
    const int a = best_split(idx, pts, k);
    std::vector<size_t> t, f;
    for (size_t i : idx)
        (pts[i].features[static_cast<size_t>(a)] ? t : f).push_back(i);
    return TreeChild{a, mean_label(t, pts, node_mean), mean_label(f, pts, node_mean)};
}

} // namespace

MethodTree train_tree(std::span<const DataPoint> points, const std::string& method) {
    if (points.empty()) throw ConfigMismatch("train_tree: empty point set");
    const size_t k = points[0].features.size();
    std::vector<size_t> all(points.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;

    MethodTree tree;
    tree.method = method;
    tree.root = best_split(all, points, k);
    const double root_mean = mean_label(all, points, 0.0);

    std::vector<size_t> t, f;
    for (size_t i : all)
        (points[i].features[static_cast<size_t>(tree.root)] ? t : f).push_back(i);
    tree.when_true = train_child(t, points, k, root_mean);
    tree.when_false = train_child(f, points, k, root_mean);
    return tree;
}

LeafEval eval_tree(const MethodTree& tree, const FeatureVector& v) {
    auto bit = [&](int a) -> bool {
        if (a < 0 || static_cast<size_t>(a) >= v.size())
            throw ConfigMismatch("assertion index " + std::to_string(a) +
                                 " out of range for feature vector of length " +
                                 std::to_string(v.size()));
        return v[static_cast<size_t>(a)] != 0;
    };
    if (bit(tree.root)) {
        if (bit(tree.when_true.assertion)) return {0, tree.when_true.if_true};
        return {1, tree.when_true.if_false};
    }
    if (bit(tree.when_false.assertion)) return {2, tree.when_false.if_true};
    return {3, tree.when_false.if_false};
}

namespace {

std::string shortest_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, p);
}

struct TreeScanner {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw TreeParseError(what + " at position " + std::to_string(pos + 1),
                             static_cast<int>(pos + 1));
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    int integer() {
        skip_ws();
        int value = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || p == text.data() + pos) fail("expected integer");
        pos = static_cast<size_t>(p - text.data());
        return value;
    }
    double number() {
        skip_ws();
        double value = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || p == text.data() + pos) fail("expected number");
        pos = static_cast<size_t>(p - text.data());
        return value;
    }
    void keyword(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) != w) fail("expected '" + std::string(w) + "'");
        pos += w.size();
    }
    TreeChild node() {
        expect('(');
        TreeChild c;
        c.assertion = integer();
        expect(',');
        keyword("expectation");
        c.if_true = number();
        expect(',');
        keyword("expectation");
        c.if_false = number();
        expect(')');
        return c;
    }
    MethodTree tree() {
        MethodTree t;
        expect('(');
        t.root = integer();
        expect(',');
        t.when_true = node();
        expect(',');
        t.when_false = node();
        expect(')');
        skip_ws();
        if (pos != text.size()) fail("unexpected trailing input");
        return t;
    }
};

std::string serialize_node(const TreeChild& c) {
    return "(" + std::to_string(c.assertion) + ", expectation " + shortest_double(c.if_true) +
           ", expectation " + shortest_double(c.if_false) + ")";
}

} // namespace

std::string serialize_tree(const MethodTree& tree) {
    return "(" + std::to_string(tree.root) + ", " + serialize_node(tree.when_true) + ", " +
           serialize_node(tree.when_false) + ")";
}

MethodTree parse_tree(std::string_view text) {
    TreeScanner s{text};
    return s.tree();
}

std::string treebank_to_string(const TreeBank& bank) {
    std::ostringstream os;
    for (const auto& t : bank.trees) os << t.method << ' ' << serialize_tree(t) << "\n";
    return os.str();
}

TreeBank parse_treebank(std::string_view text) {
    TreeBank bank;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        size_t sp = line.find(' ');
        if (sp == std::string::npos || sp == 0)
            throw TreeParseError("expected 'method (tree)' on line " + std::to_string(line_no),
                                 line_no);
        MethodTree t = parse_tree(std::string_view(line).substr(sp + 1));
        t.method = line.substr(0, sp);
        bank.trees.push_back(std::move(t));
    }
    for (size_t i = 0; i + 1 < bank.trees.size(); ++i) {
        if (bank.trees[i].method == bank.trees[i + 1].method)
            throw TreeParseError("duplicate method " + bank.trees[i].method, 0);
        if (bank.trees[i].method > bank.trees[i + 1].method)
            throw TreeParseError("treebank not sorted by method name", 0);
    }
    return bank;
}

} // namespace prover

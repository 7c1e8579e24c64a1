#include "hopfren/forest.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfren {

namespace {

// Tree nodes in preorder; node i's subtree occupies [i, i + size).
struct FlatTree {
    struct Node {
        const IrreducibleWord* tree;
        std::vector<std::size_t> children;
        std::size_t size;
    };
    std::vector<Node> nodes;

    explicit FlatTree(const IrreducibleWord& root) { add(root); }

    std::size_t add(const IrreducibleWord& t) {
        const std::size_t index = nodes.size();
        nodes.push_back({&t, {}, 1});
        for (const auto& c : t.children()) {
            const std::size_t ci = add(c);
            nodes[index].children.push_back(ci);
            nodes[index].size += nodes[ci].size;
        }
        return index;
    }

    IrreducibleWord without(std::size_t i, const std::vector<bool>& removed) const {
        std::vector<IrreducibleWord> kept;
        for (std::size_t c : nodes[i].children)
            if (!removed[c]) kept.push_back(without(c, removed));
        return IrreducibleWord(nodes[i].tree->root(), std::move(kept));
    }
};

// Calls visit(selection) for every antichain of non-root nodes, including the empty one.
template <typename Visit>
void for_each_forest(const FlatTree& flat, std::size_t index, std::vector<std::size_t>& chosen, Visit& visit) {
    if (index >= flat.nodes.size()) {
        visit(chosen);
        return;
    }
    for_each_forest(flat, index + 1, chosen, visit);
    if (index == 0) return;
    chosen.push_back(index);
    for_each_forest(flat, index + flat.nodes[index].size, chosen, visit);
    chosen.pop_back();
}

class ForestSolver {
public:
    explicit ForestSolver(Scheme scheme) : model_(scheme) {}

    RegValue counterterm(const IrreducibleWord& tree) {
        if (auto it = memo_.find(tree.text()); it != memo_.end()) return it->second;

        const FlatTree flat(tree);
        RegValue bar = phi(Word(tree));
        std::vector<std::size_t> chosen;
        auto visit = [&](const std::vector<std::size_t>& forest) {
            if (forest.empty()) return;
            std::vector<bool> removed(flat.nodes.size(), false);
            RegValue z = RegValue::one();
            for (std::size_t i : forest) {
                removed[i] = true;
                z = z * counterterm(*flat.nodes[i].tree);
            }
            bar += z * phi(Word(flat.without(0, removed)));
        };
        for_each_forest(flat, 0, chosen, visit);

        RegValue z = -model_.apply_scheme(bar);
        memo_.emplace(tree.text(), z);
        return z;
    }

private:
    ToyModel model_;
    std::map<std::string, RegValue> memo_;
};

}  // namespace

RegValue forest_formula(const Word& w, Scheme scheme) {
    if (!is_irreducible(w)) throw NotIrreducible(w.text());
    return ForestSolver(scheme).counterterm(w.factors().front());
}

std::size_t count_proper_forests(const IrreducibleWord& w) {
    const FlatTree flat(w);
    std::size_t count = 0;
    std::vector<std::size_t> chosen;
    auto visit = [&](const std::vector<std::size_t>& forest) { count += forest.empty() ? 0 : 1; };
    for_each_forest(flat, 0, chosen, visit);
    return count;
}

}  // namespace hopfren

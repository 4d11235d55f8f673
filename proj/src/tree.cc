#include <iop/errors.hh>
#include <iop/tree.hh>

#include <omp.h>

#include <cassert>
#include <queue>
#include <string>

namespace iop {

using std::string;
using std::to_string;
using std::vector;

RootedTree RootedTree::build(Graph g, int root)
{
    if (g.order() == 0 || root < 0 || root >= g.order())
        throw PreconditionError("root " + to_string(root) + " is not a vertex of the tree");
    if (g.size() != g.order() - 1)
        throw PreconditionError("not a tree: " + to_string(g.order()) + " vertices but " + to_string(g.size()) + " edges");

    RootedTree t;
    t.root = root;
    t.father.assign(g.order(), -1);
    t.father_edge.assign(g.order(), -1);
    t.distance.assign(g.order(), -1);
    t.distance[root] = 0;

    std::queue<int> queue;
    queue.push(root);
    while (! queue.empty()) {
        int v = queue.front();
        queue.pop();
        t.order.push_back(v);
        for (auto [w, e] : g.incident(v))
            if (t.distance[w] == -1) {
                t.distance[w] = t.distance[v] + 1;
                t.father[w] = v;
                t.father_edge[w] = e;
                queue.push(w);
            }
    }
    if (static_cast<int>(t.order.size()) != g.order())
        throw PreconditionError("not a tree: graph is disconnected");

    t.tree = std::move(g);
    return t;
}

namespace {
    class TreeOrienter {
    public:
        explicit TreeOrienter(const RootedTree & t) :
            t_(t), g_(t.tree), forward_(g_.size(), true), value_(g_.order(), 0)
        {
        }

        Orientation run()
        {
            for (int v : t_.order)
                visit(v);
            return Orientation(g_, forward_);
        }

    private:
        // Direct edge e from `from` to `to` for the first time.
        void point(int e, int from, int to)
        {
            forward_[e] = (g_.edge(e).u == from);
            --value_[from];
            ++value_[to];
        }

        void flip(int e)
        {
            int tail = g_.edge(e).u, head = g_.edge(e).v;
            if (! forward_[e])
                std::swap(tail, head);
            forward_[e] = ! forward_[e];
            value_[tail] += 2;
            value_[head] -= 2;
        }

        // Orient the child edges of v, lowest-index children inward first,
        // so that value_[v] ends at target.
        void orient_children(int v, int target)
        {
            int children = g_.degree(v) - (t_.father[v] == -1 ? 0 : 1);
            int need = target - value_[v];
            assert((children + need) % 2 == 0 && -children <= need && need <= children);
            int inward = (children + need) / 2;
            for (auto [w, e] : g_.incident(v)) {
                if (w == t_.father[v])
                    continue;
                if (inward > 0) {
                    point(e, w, v);
                    --inward;
                }
                else
                    point(e, v, w);
            }
        }

        void visit(int v)
        {
            const int d = g_.degree(v);
            // Even levels aim for positive values, odd levels for negative.
            const int sign = (t_.distance[v] % 2 == 0) ? 1 : -1;
            const int natural = sign * (d % 2 == 1 ? 1 : 2);

            if (t_.father[v] == -1) {
                if (d > 0)
                    orient_children(v, natural);
                return;
            }

            const int f = t_.father[v];
            const int fe = t_.father_edge[v];
            const bool into_v = forward_[fe] == (g_.edge(fe).u == f);
            const bool aligned = (into_v ? 1 : -1) == sign;

            if (aligned || d >= 3) {
                orient_children(v, natural);
            }
            else if (d == 2) {
                if (value_[f] != 0)
                    orient_children(v, 0);
                else {
                    // Father sits at 0: take the father edge too and reach 2 * sign.
                    flip(fe);
                    orient_children(v, 2 * sign);
                }
            }
            else if (d == 1) {
                if (value_[f] == value_[v])
                    flip(fe);
            }
        }

        const RootedTree & t_;
        const Graph & g_;
        vector<bool> forward_;
        vector<int> value_;
    };
}

Orientation orient_tree(const RootedTree & t)
{
    return TreeOrienter(t).run();
}

Orientation orient_any_tree(const Graph & g, int workers)
{
    auto parts = components(g);
    for (const auto & c : parts)
        if (c.graph.size() != c.graph.order() - 1)
            throw PreconditionError("not a forest: the component of vertex " + to_string(c.vertices.front()) + " contains a cycle");

    const int count = static_cast<int>(parts.size());
    vector<Orientation> local(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers > 0 ? workers : 1)
    for (int i = 0; i < count; ++i)
        local[i] = orient_tree(RootedTree::build(parts[i].graph, 0));

    vector<bool> forward(g.size(), true);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < parts[i].graph.size(); ++j)
            forward[parts[i].edges[j]] = local[i].forward(j);
    return Orientation(g, std::move(forward));
}

}  // namespace iop

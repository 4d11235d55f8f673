#include <iop/errors.hh>
#include <iop/subcubic.hh>

#include <algorithm>
#include <limits>
#include <queue>

namespace iop {

using boost::rational;
using std::optional;
using std::vector;

FeasibilitySystem build_feasibility_system(const Graph & c, const vector<bool> & dummy, const Bipartition & sides)
{
    if (! sides.bipartite())
        throw PreconditionError("feasibility system needs a bipartite component");

    FeasibilitySystem system;
    system.columns = 2 * c.size();
    system.x_end.resize(c.size());
    system.y_end.resize(c.size());
    for (int e = 0; e < c.size(); ++e) {
        auto [u, v] = c.edge(e);
        bool u_in_x = sides.side[u] == Side::X;
        system.x_end[e] = u_in_x ? u : v;
        system.y_end[e] = u_in_x ? v : u;
    }

    for (int v = 0; v < c.order(); ++v) {
        if (dummy[v])
            continue;
        vector<int> row;
        bool in_x = sides.side[v] == Side::X;
        for (auto [w, e] : c.incident(v))
            row.push_back(in_x ? 2 * e : 2 * e + 1);
        system.rows.push_back(std::move(row));
        system.rhs.push_back(in_x ? (c.degree(v) + 1) / 2 : (c.degree(v) - 1) / 2);
    }
    system.vertex_rows = static_cast<int>(system.rows.size());

    for (int e = 0; e < c.size(); ++e) {
        system.rows.push_back({2 * e, 2 * e + 1});
        system.rhs.push_back(1);
    }
    return system;
}

namespace {
    // Dinic's algorithm; small and sufficient for unit-capacity demand networks.
    class MaxFlow {
    public:
        explicit MaxFlow(int nodes) : adjacency_(nodes), level_(nodes), cursor_(nodes) {}

        int add_edge(int from, int to, int capacity)
        {
            int id = static_cast<int>(arcs_.size());
            arcs_.push_back({to, capacity});
            adjacency_[from].push_back(id);
            arcs_.push_back({from, 0});
            adjacency_[to].push_back(id + 1);
            return id;
        }

        void set_capacity(int arc, int capacity) { arcs_[arc].capacity = capacity; }

        /// Flow currently on arc (as returned by add_edge).
        int flow(int arc) const { return arcs_[arc ^ 1].capacity; }

        long long augment(int source, int sink)
        {
            long long total = 0;
            while (levels(source, sink)) {
                std::fill(cursor_.begin(), cursor_.end(), 0);
                while (int pushed = push(source, sink, std::numeric_limits<int>::max()))
                    total += pushed;
            }
            return total;
        }

    private:
        struct Arc {
            int to;
            int capacity;
        };

        bool levels(int source, int sink)
        {
            std::fill(level_.begin(), level_.end(), -1);
            std::queue<int> queue;
            level_[source] = 0;
            queue.push(source);
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop();
                for (int id : adjacency_[v])
                    if (arcs_[id].capacity > 0 && level_[arcs_[id].to] == -1) {
                        level_[arcs_[id].to] = level_[v] + 1;
                        queue.push(arcs_[id].to);
                    }
            }
            return level_[sink] != -1;
        }

        int push(int v, int sink, int limit)
        {
            if (v == sink)
                return limit;
            for (auto & i = cursor_[v]; i < adjacency_[v].size(); ++i) {
                int id = adjacency_[v][i];
                auto & arc = arcs_[id];
                if (arc.capacity <= 0 || level_[arc.to] != level_[v] + 1)
                    continue;
                if (int got = push(arc.to, sink, std::min(limit, arc.capacity))) {
                    arc.capacity -= got;
                    arcs_[id ^ 1].capacity += got;
                    return got;
                }
            }
            return 0;
        }

        vector<Arc> arcs_;
        vector<vector<int>> adjacency_;
        vector<int> level_;
        vector<std::size_t> cursor_;
    };
}

optional<vector<int>> solve_by_flow(const FeasibilitySystem & system)
{
    // Source -> one node per coupling row (capacity 1: the edge has one head)
    // -> the vertex row holding that column, or a free node for columns no
    // vertex row mentions (dummy ends) -> sink. Vertex rows must be filled
    // exactly: first saturate them alone, then open the free node. Augmenting
    // never lowers flow into the sink, so the vertex rows stay exact.
    const int pairs = static_cast<int>(system.rows.size()) - system.vertex_rows;
    const int source = 0, sink = 1, free_node = 2, first_pair = 3, first_row = first_pair + pairs;
    MaxFlow network(first_row + system.vertex_rows);

    vector<int> row_of_column(system.columns, -1);
    for (int r = 0; r < system.vertex_rows; ++r)
        for (int column : system.rows[r])
            row_of_column[column] = r;

    vector<int> column_arc(system.columns);
    for (int p = 0; p < pairs; ++p) {
        network.add_edge(source, first_pair + p, system.rhs[system.vertex_rows + p]);
        for (int column : system.rows[system.vertex_rows + p]) {
            int r = row_of_column[column];
            column_arc[column] = network.add_edge(first_pair + p, r == -1 ? free_node : first_row + r, 1);
        }
    }
    long long demand = 0;
    for (int r = 0; r < system.vertex_rows; ++r) {
        network.add_edge(first_row + r, sink, system.rhs[r]);
        demand += system.rhs[r];
    }
    int free_arc = network.add_edge(free_node, sink, 0);

    if (network.augment(source, sink) != demand)
        return std::nullopt;
    network.set_capacity(free_arc, pairs);
    if (demand + network.augment(source, sink) != pairs)
        return std::nullopt;

    vector<int> x(system.columns);
    for (int column = 0; column < system.columns; ++column)
        x[column] = network.flow(column_arc[column]);
    return x;
}

optional<vector<rational<long long>>> solve_relaxation(const FeasibilitySystem & system)
{
    // Phase one of the simplex method on A x + s = b, x, s >= 0, minimising
    // the sum of the artificial variables s. Bland's rule prevents cycling.
    using Q = rational<long long>;
    const int m = static_cast<int>(system.rows.size());
    const int n = system.columns;
    const int width = n + m + 1;

    vector<vector<Q>> tableau(m + 1, vector<Q>(width, Q(0)));
    vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int column : system.rows[i])
            tableau[i][column] = 1;
        tableau[i][n + i] = 1;
        tableau[i][width - 1] = system.rhs[i];
        basis[i] = n + i;
    }
    auto & cost = tableau[m];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < width; ++j)
            if (j < n || j == width - 1)
                cost[j] -= tableau[i][j];

    while (true) {
        int entering = -1;
        for (int j = 0; j < n + m; ++j)
            if (cost[j] < Q(0)) {
                entering = j;
                break;
            }
        if (entering == -1)
            break;

        int leaving = -1;
        Q best;
        for (int i = 0; i < m; ++i) {
            if (tableau[i][entering] <= Q(0))
                continue;
            Q ratio = tableau[i][width - 1] / tableau[i][entering];
            if (leaving == -1 || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
                leaving = i;
                best = ratio;
            }
        }
        // Phase one is bounded below by zero, so some row always qualifies.
        if (leaving == -1)
            throw std::logic_error("phase-one simplex reported an unbounded direction");

        Q pivot = tableau[leaving][entering];
        for (auto & value : tableau[leaving])
            value /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leaving || tableau[i][entering] == Q(0))
                continue;
            Q factor = tableau[i][entering];
            for (int j = 0; j < width; ++j)
                tableau[i][j] -= factor * tableau[leaving][j];
        }
        basis[leaving] = entering;
    }

    if (cost[width - 1] != Q(0))
        return std::nullopt;

    vector<Q> x(n, Q(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n)
            x[basis[i]] = tableau[i][width - 1];
    return x;
}

}  // namespace iop

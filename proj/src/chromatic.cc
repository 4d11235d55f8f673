#include <iop/exact.hh>

#include <algorithm>

namespace iop {

using std::vector;

namespace {
    // k-colourability by backtracking, always branching on the uncoloured
    // vertex with the most distinct neighbour colours.
    class Colouring {
    public:
        Colouring(const Graph & g, int colours) : g_(g), colours_(colours), colour_(g.order(), -1) {}

        bool solve(int coloured)
        {
            if (coloured == g_.order())
                return true;

            int best = -1, best_saturation = -1;
            for (int v = 0; v < g_.order(); ++v) {
                if (colour_[v] != -1)
                    continue;
                int s = saturation(v);
                if (s > best_saturation || (s == best_saturation && g_.degree(v) > g_.degree(best))) {
                    best = v;
                    best_saturation = s;
                }
            }

            // A fresh colour is interchangeable with any other unused one.
            int used = *std::max_element(colour_.begin(), colour_.end()) + 1;
            for (int c = 0; c < std::min(colours_, used + 1); ++c) {
                if (clashes(best, c))
                    continue;
                colour_[best] = c;
                if (solve(coloured + 1))
                    return true;
                colour_[best] = -1;
            }
            return false;
        }

    private:
        int saturation(int v) const
        {
            vector<bool> seen(colours_, false);
            int count = 0;
            for (auto [w, e] : g_.incident(v))
                if (colour_[w] != -1 && ! seen[colour_[w]]) {
                    seen[colour_[w]] = true;
                    ++count;
                }
            return count;
        }

        bool clashes(int v, int c) const
        {
            for (auto [w, e] : g_.incident(v))
                if (colour_[w] == c)
                    return true;
            return false;
        }

        const Graph & g_;
        int colours_;
        vector<int> colour_;
    };
}

int chromatic_number(const Graph & g)
{
    if (g.order() == 0)
        return 0;
    for (int k = 1;; ++k) {
        Colouring attempt(g, k);
        if (attempt.solve(0))
            return k;
    }
}

}  // namespace iop

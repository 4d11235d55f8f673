#include "search.hh"

#include <algorithm>
#include <cstdlib>

namespace iop::detail {

using std::vector;

PartialOrientation::PartialOrientation(const Graph & g, int width, vector<int> order) :
    graph_(&g),
    width_(width),
    order_(std::move(order)),
    value_(g.order(), 0),
    remaining_(g.order(), 0),
    forward_(g.size(), true)
{
    for (int v = 0; v < g.order(); ++v)
        remaining_[v] = g.degree(v);
}

bool PartialOrientation::assign_next(bool forward)
{
    int e = order_[depth_++];
    const auto & edge = graph_->edge(e);
    forward_[e] = forward;
    int head = forward ? edge.v : edge.u;
    int tail = forward ? edge.u : edge.v;
    ++value_[head];
    --value_[tail];
    --remaining_[edge.u];
    --remaining_[edge.v];
    return consistent(e);
}

void PartialOrientation::undo()
{
    int e = order_[--depth_];
    const auto & edge = graph_->edge(e);
    int head = forward_[e] ? edge.v : edge.u;
    int tail = forward_[e] ? edge.u : edge.v;
    --value_[head];
    ++value_[tail];
    ++remaining_[edge.u];
    ++remaining_[edge.v];
}

bool PartialOrientation::viable(int x) const
{
    int lo = value_[x] - remaining_[x];
    int hi = value_[x] + remaining_[x];
    // Reachable values share the parity of lo; clamp to [-k, k] keeping parity.
    if (lo < -width_)
        lo += (-width_ - lo + 1) / 2 * 2;
    if (hi > width_)
        hi -= (hi - width_ + 1) / 2 * 2;
    if (lo > hi)
        return false;
    if (remaining_[x] == 0)
        return true;

    for (int t = lo; t <= hi; t += 2) {
        bool taken = false;
        for (auto [y, e] : graph_->incident(x))
            if (remaining_[y] == 0 && value_[y] == t) {
                taken = true;
                break;
            }
        if (! taken)
            return true;
    }
    return false;
}

bool PartialOrientation::consistent(int e) const
{
    const auto & edge = graph_->edge(e);
    if (! viable(edge.u) || ! viable(edge.v))
        return false;
    for (int x : {edge.u, edge.v}) {
        if (remaining_[x] != 0)
            continue;
        for (auto [y, f] : graph_->incident(x)) {
            if (remaining_[y] == 0) {
                if (value_[y] == value_[x])
                    return false;
            }
            else if (! viable(y))
                return false;
        }
    }
    return true;
}

vector<bool> PartialOrientation::prefix() const
{
    vector<bool> result(depth_);
    for (int i = 0; i < depth_; ++i)
        result[i] = forward_[order_[i]];
    return result;
}

Orientation PartialOrientation::orientation() const
{
    return Orientation(*graph_, forward_);
}

bool NodeBudget::charge()
{
    ++local_total_;
    if (! shared_)
        return local_total_ <= limit_;

    if (++unflushed_ >= batch) {
        flush();
        if (shared_->load(std::memory_order_relaxed) > limit_)
            return false;
    }
    return ! (stop_ && stop_->load(std::memory_order_relaxed));
}

void NodeBudget::flush()
{
    if (shared_ && unflushed_ != 0) {
        shared_->fetch_add(unflushed_, std::memory_order_relaxed);
        unflushed_ = 0;
    }
}

}  // namespace iop::detail

#include <ramsey/colouring.hpp>

#include <ramsey/families.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ramsey {

std::vector<std::uint32_t> ListAssignment::masks() const
{
    std::vector<std::uint32_t> out;
    out.reserve(lists.size());
    for (auto [a, b] : lists)
        out.push_back((std::uint32_t{1} << a) | (std::uint32_t{1} << b));
    return out;
}

ListAssignment ListAssignment::identical(Vertex n)
{
    return {std::vector<std::array<int, 2>>(static_cast<std::size_t>(n), {1, 2})};
}

bool is_proper(const UniformHypergraph & h, std::span<const int> colouring)
{
    if (colouring.size() != static_cast<std::size_t>(h.vertex_count()))
        return false;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        bool mono = true;
        for (auto v : e)
            mono = mono && colouring[v] == colouring[e[0]];
        if (mono)
            return false;
    }
    return true;
}

namespace {

void check_palette(int r)
{
    if (r < 1 || r > max_colours)
        throw std::invalid_argument("palette size must lie in [1, " + std::to_string(max_colours) + "]");
}

// Backtracking state shared by the one-shot and the reusable colourer.
class Solver {
public:
    Solver(const UniformHypergraph & h, int r) :
        h_(h),
        s_(h.uniformity()),
        r_(r),
        n_(h.vertex_count()),
        full_(((std::uint32_t{1} << (r + 1)) - 1) & ~std::uint32_t{1}),
        dom_(static_cast<std::size_t>(n_)),
        colour_(static_cast<std::size_t>(n_)),
        count_(h.edge_count() * static_cast<std::size_t>(r + 1)),
        open_(h.edge_count()),
        used_(static_cast<std::size_t>(r + 1))
    {
        check_palette(r);
    }

    // symmetric: every domain is the full palette and colours are interchangeable.
    std::optional<std::vector<int>> solve(std::span<const std::uint32_t> domains, bool symmetric, Budget & budget)
    {
        budget_ = &budget;
        symmetric_ = symmetric;
        std::fill(colour_.begin(), colour_.end(), 0);
        std::fill(count_.begin(), count_.end(), 0);
        std::fill(used_.begin(), used_.end(), 0);
        for (std::size_t e = 0; e < h_.edge_count(); ++e)
            open_[e] = static_cast<std::uint16_t>(s_);
        dom_trail_.clear();
        assigned_.clear();
        queue_.clear();
        for (Vertex v = 0; v < n_; ++v) {
            dom_[v] = domains.empty() ? full_ : (domains[v] & full_);
            if (dom_[v] == 0)
                return std::nullopt;
            if (std::has_single_bit(dom_[v]))
                queue_.push_back({v, std::countr_zero(dom_[v])});
        }
        if (!propagate() || !search())
            return std::nullopt;
        return colour_;
    }

private:
    struct Pending {
        Vertex v;
        int c;
    };

    std::uint16_t & count(std::size_t e, int c) { return count_[e * static_cast<std::size_t>(r_ + 1) + c]; }

    void narrow(Vertex v, std::uint32_t mask)
    {
        dom_trail_.push_back({v, dom_[v]});
        dom_[v] = mask;
    }

    bool propagate()
    {
        bool ok = true;
        while (ok && !queue_.empty()) {
            auto [v, c] = queue_.back();
            queue_.pop_back();
            if (colour_[v] != 0) {
                ok = colour_[v] == c;
                continue;
            }
            if (!(dom_[v] >> c & 1)) {
                ok = false;
                continue;
            }
            colour_[v] = c;
            assigned_.push_back(v);
            ++used_[c];
            narrow(v, std::uint32_t{1} << c);
            // Finish the bookkeeping for every edge even after a conflict so undo stays exact.
            for (auto e : h_.incident(v)) {
                auto & k = count(e, c);
                ++k;
                --open_[e];
                if (k == s_)
                    ok = false;
                else if (ok && k == s_ - 1 && open_[e] == 1) {
                    for (auto w : h_.edge(e))
                        if (colour_[w] == 0) {
                            if (dom_[w] >> c & 1) {
                                narrow(w, dom_[w] & ~(std::uint32_t{1} << c));
                                if (dom_[w] == 0)
                                    ok = false;
                                else if (std::has_single_bit(dom_[w]))
                                    queue_.push_back({w, std::countr_zero(dom_[w])});
                            }
                            break;
                        }
                }
            }
        }
        queue_.clear();
        return ok;
    }

    void undo(std::size_t assigned_mark, std::size_t dom_mark)
    {
        while (assigned_.size() > assigned_mark) {
            auto v = assigned_.back();
            assigned_.pop_back();
            auto c = colour_[v];
            for (auto e : h_.incident(v)) {
                --count(e, c);
                ++open_[e];
            }
            --used_[c];
            colour_[v] = 0;
        }
        while (dom_trail_.size() > dom_mark) {
            auto [v, mask] = dom_trail_.back();
            dom_trail_.pop_back();
            dom_[v] = mask;
        }
    }

    bool search()
    {
        budget_->tick();
        Vertex pick = -1;
        int best_size = 0;
        std::size_t best_degree = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] != 0)
                continue;
            int size = std::popcount(dom_[v]);
            auto degree = h_.degree(v);
            if (pick < 0 || size < best_size || (size == best_size && degree > best_degree)) {
                pick = v;
                best_size = size;
                best_degree = degree;
            }
        }
        if (pick < 0)
            return true;

        int limit = r_;
        if (symmetric_) {
            int highest = 0;
            for (int c = 1; c <= r_; ++c)
                if (used_[c] > 0)
                    highest = c;
            limit = std::min(r_, highest + 1);
        }
        for (auto m = dom_[pick]; m != 0; m &= m - 1) {
            int c = std::countr_zero(m);
            if (c > limit)
                break;
            auto assigned_mark = assigned_.size();
            auto dom_mark = dom_trail_.size();
            queue_.push_back({pick, c});
            if (propagate() && search())
                return true;
            undo(assigned_mark, dom_mark);
        }
        return false;
    }

    const UniformHypergraph & h_;
    int s_;
    int r_;
    Vertex n_;
    std::uint32_t full_;
    std::vector<std::uint32_t> dom_;
    std::vector<int> colour_;
    std::vector<std::uint16_t> count_;
    std::vector<std::uint16_t> open_;
    std::vector<int> used_;
    std::vector<std::pair<Vertex, std::uint32_t>> dom_trail_;
    std::vector<Vertex> assigned_;
    std::vector<Pending> queue_;
    bool symmetric_ = false;
    Budget * budget_ = nullptr;
};

} // namespace

ColouringResult proper_colouring(const UniformHypergraph & h, int r, SearchLimits limits, std::span<const std::uint32_t> domains)
{
    check_palette(r);
    if (!domains.empty() && domains.size() != static_cast<std::size_t>(h.vertex_count()))
        throw std::invalid_argument("one colour list per vertex required");
    ColouringResult result;
    Budget budget(limits);
    Solver solver(h, r);
    try {
        auto found = solver.solve(domains, domains.empty(), budget);
        result.verdict = to_verdict(found.has_value());
        if (found)
            result.colouring = std::move(*found);
    }
    catch (const BudgetExceeded &) {
        result.verdict = Verdict::inconclusive;
    }
    result.nodes = budget.nodes();
    return result;
}

struct ListColourer::Impl {
    Solver solver;
};

ListColourer::ListColourer(const UniformHypergraph & h, int colours) : impl_(std::make_shared<Impl>(Impl{Solver{h, colours}}))
{
}

std::optional<std::vector<int>> ListColourer::solve(std::span<const std::uint32_t> domains, Budget & budget)
{
    return impl_->solver.solve(domains, false, budget);
}

UniformHypergraph copies_in(const Graph & h, const Graph & g)
{
    if (h.edge_count() < 2)
        throw std::invalid_argument("copies hypergraph needs a pattern with at least two edges");
    return UniformHypergraph{static_cast<int>(h.edge_count()), static_cast<Vertex>(g.edge_count()), enumerate_copies(h, g)};
}

ArrowResult arrow_check(const Graph & g, const Graph & h, int r, SearchLimits limits)
{
    if (r < 2)
        throw std::invalid_argument("arrowing needs r >= 2");
    if (h.edge_count() == 0)
        throw std::invalid_argument("arrowing needs H with an edge");
    ArrowResult result;
    if (h.edge_count() == 1) {
        // Every edge of G is a copy of K_2.
        result.verdict = to_verdict(g.edge_count() > 0);
        if (g.edge_count() == 0)
            result.colouring.clear();
        return result;
    }
    auto copies = copies_in(h, g);
    auto col = proper_colouring(copies, r, limits);
    result.nodes = col.nodes;
    if (col.verdict == Verdict::inconclusive)
        return result;
    result.verdict = col.verdict == Verdict::yes ? Verdict::no : Verdict::yes;
    if (col.verdict == Verdict::yes)
        result.colouring = std::move(col.colouring);
    return result;
}

bool is_h_free_colouring(const Graph & g, const Graph & h, std::span<const int> edge_colours)
{
    if (edge_colours.size() != g.edge_count())
        return false;
    for (const auto & copy : enumerate_copies(h, g)) {
        bool mono = true;
        for (auto e : copy)
            mono = mono && edge_colours[e] == edge_colours[copy[0]];
        if (mono)
            return false;
    }
    return true;
}

std::uint64_t count_monochromatic(const UniformHypergraph & h, std::span<const int> colouring)
{
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        bool mono = true;
        for (auto v : e)
            mono = mono && colouring[v] == colouring[e[0]];
        if (mono)
            total += h.multiplicity(i);
    }
    return total;
}

namespace {

// Greedy in degree order, then single-vertex recolouring until no move helps.
std::vector<int> greedy_colouring(const UniformHypergraph & h, int r, const std::vector<Vertex> & order)
{
    std::vector<int> colour(static_cast<std::size_t>(h.vertex_count()), 0);
    auto damage = [&](Vertex v, int c) {
        std::uint64_t bad = 0;
        for (auto i : h.incident(v)) {
            bool mono = true;
            for (auto w : h.edge(i))
                mono = mono && (w == v ? true : colour[w] == c);
            bad += mono ? h.multiplicity(i) : 0;
        }
        return bad;
    };
    for (auto v : order) {
        int best = 1;
        std::uint64_t best_bad = 0;
        for (int c = 1; c <= r; ++c) {
            colour[v] = 0;
            auto bad = damage(v, c);
            if (c == 1 || bad < best_bad) {
                best = c;
                best_bad = bad;
            }
        }
        colour[v] = best;
    }
    for (bool improved = true; improved;) {
        improved = false;
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            auto current = damage(v, colour[v]);
            for (int c = 1; c <= r; ++c)
                if (c != colour[v] && damage(v, c) < current) {
                    colour[v] = c;
                    current = damage(v, c);
                    improved = true;
                }
        }
    }
    return colour;
}

class MinMono {
public:
    MinMono(const UniformHypergraph & h, int r, std::vector<Vertex> order, Budget & budget) :
        h_(h),
        r_(r),
        order_(std::move(order)),
        budget_(budget),
        colour_(static_cast<std::size_t>(h.vertex_count()), 0),
        closing_(static_cast<std::size_t>(h.vertex_count()))
    {
        std::vector<int> position(static_cast<std::size_t>(h.vertex_count()));
        for (std::size_t i = 0; i < order_.size(); ++i)
            position[order_[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            Vertex last = h.edge(i)[0];
            for (auto v : h.edge(i))
                if (position[v] > position[last])
                    last = v;
            closing_[last].push_back(static_cast<std::uint32_t>(i));
        }
    }

    void run(std::uint64_t & best, std::vector<int> & best_colouring)
    {
        best_ = &best;
        best_colouring_ = &best_colouring;
        search(0, 0, 0);
    }

private:
    void search(std::size_t depth, std::uint64_t cost, int highest)
    {
        if (cost >= *best_)
            return;
        if (depth == order_.size()) {
            *best_ = cost;
            *best_colouring_ = colour_;
            return;
        }
        budget_.tick();
        auto v = order_[depth];
        for (int c = 1; c <= std::min(r_, highest + 1); ++c) {
            colour_[v] = c;
            std::uint64_t added = 0;
            for (auto i : closing_[v]) {
                bool mono = true;
                for (auto w : h_.edge(i))
                    mono = mono && colour_[w] == c;
                added += mono ? h_.multiplicity(i) : 0;
            }
            search(depth + 1, cost + added, std::max(highest, c));
        }
        colour_[v] = 0;
    }

    const UniformHypergraph & h_;
    int r_;
    std::vector<Vertex> order_;
    Budget & budget_;
    std::vector<int> colour_;
    std::vector<std::vector<std::uint32_t>> closing_;
    std::uint64_t * best_ = nullptr;
    std::vector<int> * best_colouring_ = nullptr;
};

} // namespace

MonochromaticResult min_monochromatic_edges(const UniformHypergraph & h, int r, Vertex vertex_cap, SearchLimits limits)
{
    check_palette(r);
    if (r < 2)
        throw std::invalid_argument("min_monochromatic_edges needs r >= 2");
    std::vector<Vertex> order(static_cast<std::size_t>(h.vertex_count()));
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });

    MonochromaticResult result;
    result.colouring = greedy_colouring(h, r, order);
    result.value = count_monochromatic(h, result.colouring);
    if (h.vertex_count() > vertex_cap || result.value == 0) {
        result.exact = result.value == 0;
        return result;
    }
    Budget budget(limits);
    try {
        MinMono(h, r, order, budget).run(result.value, result.colouring);
        result.exact = true;
    }
    catch (const BudgetExceeded &) {
        result.exact = false;
    }
    return result;
}

} // namespace ramsey

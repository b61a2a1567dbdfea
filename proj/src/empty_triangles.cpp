#include "tricount/empty_triangles.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace tricount {

namespace {

bool triple_is_empty(const std::vector<Point>& S, int i, int j, int k) {
    const Point& a = S[i];
    const Point& b = S[j];
    const Point& c = S[k];
    if (orient(a, b, c) == 0) return false;
    RatPoint ra(a), rb(b), rc(c);
    for (int m = 0; m < (int)S.size(); ++m) {
        if (m == i || m == j || m == k) continue;
        if (point_in_triangle(RatPoint(S[m]), ra, rb, rc) != Region::Outside) return false;
    }
    return true;
}

} // namespace

TriangleUniverse enumerate_empty(const std::vector<Point>& S, int threads) {
    if (S.size() < 3) throw InvalidInput("enumerate_empty: need at least 3 points");
    {
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& p : S) {
            if (!seen.insert({p.x.get_str(), p.y.get_str()}).second)
                throw InvalidInput("enumerate_empty: duplicate points");
        }
    }
    int n = (int)S.size();
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, std::max(1, n - 2));

    // Each worker owns a stripe of i values; stripes are concatenated in order
    // so the result does not depend on the worker count.
    std::vector<std::vector<EmptyTriangle>> chunks(threads);
    auto work = [&](int w) {
        for (int i = w; i < n - 2; i += threads) {
            for (int j = i + 1; j < n - 1; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    if (triple_is_empty(S, i, j, k)) chunks[w].push_back({i, j, k});
                }
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    TriangleUniverse out;
    out.points = S;
    for (auto& ch : chunks)
        out.triangles.insert(out.triangles.end(), ch.begin(), ch.end());
    std::sort(out.triangles.begin(), out.triangles.end());
    return out;
}

} // namespace tricount

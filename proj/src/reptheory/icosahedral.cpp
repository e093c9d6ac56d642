#include "qv/rep.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qv {

std::vector<Mat> binary_icosahedral_generators(const FieldCtx& ctx, int galois) {
    auto eps = [&](long k) { return CycNum::root_of_unity(ctx, k * galois, 5); };
    Mat S(ctx, 2, 2);
    S(0, 0) = eps(3);
    S(1, 1) = eps(2);
    CycNum a = eps(1) - eps(4), b = eps(2) - eps(3);
    CycNum r = sqrt_rational(ctx, 5).inverse();
    Mat T(ctx, 2, 2);
    T(0, 0) = -a * r;
    T(0, 1) = b * r;
    T(1, 0) = b * r;
    T(1, 1) = a * r;
    return {S, T};
}

std::vector<int> find_isomorphism(const std::vector<Mat>& gens, const CoverGroup& g, const std::vector<int>& target,
                                  const std::function<bool(int gen, int id)>& filter) {
    if (gens.empty()) return {};
    const std::size_t k = gens.size();
    const int n_target = static_cast<int>(target.size());
    std::vector<std::vector<int>> cand(k);
    for (std::size_t i = 0; i < k; ++i) {
        int ord = matrix_order(gens[i]);
        for (int id : target)
            if (g.element_order(id) == ord && (!filter || filter(static_cast<int>(i), id))) cand[i].push_back(id);
        if (cand[i].empty()) return {};
    }
    // Cheap necessary condition on words of length 2.
    std::vector<std::vector<int>> pair_order(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) pair_order[i][j] = matrix_order(gens[i] * gens[j]);

    std::vector<int> choice(k, 0);
    std::vector<int> img(k);
    auto try_choice = [&]() -> bool {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (g.element_order(g.mul(img[i], img[j])) != pair_order[i][j]) return false;
        // Grow the graph of the would-be homomorphism; it must be a
        // well-defined injective map onto `target`.
        std::unordered_map<Mat, int, MatHash> graph;
        std::vector<std::pair<Mat, int>> queue;
        Mat one = Mat::identity(gens.front().ctx(), gens.front().rows());
        graph.emplace(one, 0);
        queue.emplace_back(one, 0);
        std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
        hit[0] = 1;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (std::size_t i = 0; i < k; ++i) {
                Mat m = queue[q].first * gens[i];
                int y = g.mul(queue[q].second, img[i]);
                auto it = graph.find(m);
                if (it != graph.end()) {
                    if (it->second != y) return false;
                    continue;
                }
                if (hit[static_cast<std::size_t>(y)]) return false;
                hit[static_cast<std::size_t>(y)] = 1;
                graph.emplace(m, y);
                queue.emplace_back(std::move(m), y);
                if (static_cast<int>(queue.size()) > n_target) return false;
            }
        return static_cast<int>(queue.size()) == n_target;
    };
    while (true) {
        for (std::size_t i = 0; i < k; ++i) img[i] = cand[i][static_cast<std::size_t>(choice[i])];
        if (try_choice()) return img;
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (++choice[i] < static_cast<int>(cand[i].size())) break;
            choice[i] = 0;
        }
        if (i == k) return {};
    }
}

}  // namespace qv

#include <ramsey/prestars.hpp>

#include <algorithm>
#include <stdexcept>

namespace ramsey {

std::vector<BigCount> prestars_by_centre(const std::vector<std::vector<Vertex>> & y, Vertex modulus)
{
    if (modulus < 1)
        throw std::invalid_argument("modulus must be positive");
    const auto n = static_cast<std::size_t>(modulus);
    std::vector<BigCount> total(n, 1);
    std::vector<std::uint64_t> rays(n);
    std::vector<char> hit(n);
    for (auto set : y) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        if (!set.empty() && (set.front() < 0 || set.back() >= modulus))
            throw std::invalid_argument("prestar set element outside Z_N");
        std::fill(rays.begin(), rays.end(), 0);
        for (auto a : set)
            for (auto b : set) {
                // One ray (a, b) counts once per centre even if two relations agree.
                std::size_t sum = static_cast<std::size_t>((a + b) % modulus);
                std::size_t diff = static_cast<std::size_t>(((a - b) % modulus + modulus) % modulus);
                std::size_t back = static_cast<std::size_t>(((b - a) % modulus + modulus) % modulus);
                ++rays[sum];
                if (diff != sum)
                    ++rays[diff];
                if (back != sum && back != diff)
                    ++rays[back];
            }
        for (std::size_t c = 0; c < n; ++c)
            total[c] *= rays[c];
    }
    return total;
}

BigCount count_prestars(const std::vector<std::vector<Vertex>> & y, Vertex modulus)
{
    BigCount sum = 0;
    for (const auto & c : prestars_by_centre(y, modulus))
        sum += c;
    return sum;
}

BigCount count_preconstellations(const std::vector<std::vector<Vertex>> & y, Vertex modulus)
{
    auto p = prestars_by_centre(y, modulus);
    BigCount sum = 0;
    for (Vertex a = 0; a < modulus; ++a) {
        if (p[a] == 0)
            continue;
        for (Vertex b = 0; b < modulus; ++b)
            sum += p[a] * p[b] * p[static_cast<std::size_t>((a - b + modulus) % modulus)];
    }
    return sum;
}

bool preconstellation_bound_holds(const BigCount & preconstellations, const BigCount & prestars, int t, Vertex modulus)
{
    BigCount lhs = preconstellations * pow(BigCount{2}, static_cast<unsigned>(6 * t))
        * pow(BigCount{modulus}, static_cast<unsigned>(3 * t + 4));
    return lhs >= pow(prestars, 6);
}

} // namespace ramsey

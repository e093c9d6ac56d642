#include "qv/monomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qv {

namespace {

void fill(int n, int d, int pos, Exponent& cur, std::vector<Exponent>& out) {
    if (pos == n - 1) {
        cur[static_cast<std::size_t>(pos)] = d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = e;
        fill(n, d - e, pos + 1, cur, out);
    }
}

struct Table {
    std::vector<Exponent> list;
    std::unordered_map<std::uint64_t, int> index;
};

std::mutex mu;
std::map<std::pair<int, int>, Table>& tables() {
    static std::map<std::pair<int, int>, Table> t;
    return t;
}

const Table& table(int n, int d) {
    std::lock_guard<std::mutex> lock(mu);
    auto& t = tables();
    auto it = t.find({n, d});
    if (it != t.end()) return it->second;
    if (n < 1 || n > 8 || d < 0 || d > 255) throw std::invalid_argument("monomials: unsupported (n, d)");
    Table tb;
    Exponent cur(static_cast<std::size_t>(n), 0);
    fill(n, d, 0, cur, tb.list);
    for (std::size_t i = 0; i < tb.list.size(); ++i) tb.index[pack_exponent(tb.list[i])] = static_cast<int>(i);
    // std::map never invalidates references on insert.
    return t.emplace(std::make_pair(n, d), std::move(tb)).first->second;
}

}  // namespace

const std::vector<Exponent>& monomials(int n, int d) { return table(n, d).list; }

const std::unordered_map<std::uint64_t, int>& monomial_index_map(int n, int d) { return table(n, d).index; }

int monomial_index(const Exponent& e) {
    int d = 0;
    for (int x : e) d += x;
    const Table& t = table(static_cast<int>(e.size()), d);
    auto it = t.index.find(pack_exponent(e));
    return it == t.index.end() ? -1 : it->second;
}

long monomial_count(int n, int d) {
    // C(n + d - 1, d)
    long r = 1;
    for (int i = 1; i <= d; ++i) r = r * (n - 1 + i) / i;
    return r;
}

std::uint64_t pack_exponent(const Exponent& e) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k |= static_cast<std::uint64_t>(e[i] & 0xff) << (8 * i);
    return k;
}

Exponent unpack_exponent(std::uint64_t key, int n) {
    Exponent e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>((key >> (8 * i)) & 0xff);
    return e;
}

}  // namespace qv

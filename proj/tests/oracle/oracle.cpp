#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

std::vector<Rows> partitions(int n)
{
    std::vector<Rows> out;
    Rows cur;
    std::function<void(int, int)> rec = [&](int rest, int top) {
        if (rest == 0) out.push_back(cur);
        for (int k = std::min(rest, top); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool dominates(const Rows& a, const Rows& b)
{
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

bool valid(const Rows& p, char letter)
{
    std::map<int, int> mult;
    for (int x : p) ++mult[x];
    int bad = letter == 'C' ? 1 : 0;
    for (auto [v, m] : mult)
        if (v % 2 == bad && m % 2) return false;
    return true;
}

Rows collapse(const Rows& p, char letter)
{
    int n = 0;
    for (int x : p) n += x;
    std::vector<Rows> below;
    for (auto& q : partitions(n))
        if (valid(q, letter) && dominates(p, q)) below.push_back(q);
    for (auto& q : below)
        if (std::all_of(below.begin(), below.end(), [&](const Rows& r) { return dominates(q, r); })) return q;
    throw std::logic_error("no dominance maximum");
}

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

std::int64_t md(std::int64_t x) { return ((x % prime) + prime) % prime; }

std::int64_t power(std::int64_t b, std::int64_t e)
{
    std::int64_t r = 1;
    b = md(b);
    for (; e; e >>= 1, b = b * b % prime)
        if (e & 1) r = r * b % prime;
    return r;
}

Mat zeros(int r, int c) { return Mat(r, std::vector<std::int64_t>(c, 0)); }

Mat mul(const Mat& a, const Mat& b)
{
    Mat c = zeros(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (!a[i][k]) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % prime;
        }
    return c;
}

Mat inverse(Mat a)
{
    int n = static_cast<int>(a.size());
    Mat inv = zeros(n, n);
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (!a[p][c]) ++p;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        std::int64_t s = power(a[c][c], prime - 2);
        for (int j = 0; j < n; ++j) {
            a[c][j] = a[c][j] * s % prime;
            inv[c][j] = inv[c][j] * s % prime;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || !a[r][c]) continue;
            std::int64_t f = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] = md(a[r][j] - f * a[c][j]);
                inv[r][j] = md(inv[r][j] - f * inv[c][j]);
            }
        }
    }
    return inv;
}

}

int rank_mod_p(Mat m)
{
    int rows = static_cast<int>(m.size());
    if (!rows) return 0;
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && !m[p][c]) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::int64_t s = power(m[r][c], prime - 2);
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * s % prime;
        for (int i = r + 1; i < rows; ++i) {
            if (!m[i][c]) continue;
            std::int64_t f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = md(m[i][j] - f * m[r][j]);
        }
        ++r;
    }
    return r;
}

std::vector<int> power_ranks(const Mat& m, int k)
{
    std::vector<int> out;
    Mat cur = m;
    for (int i = 0; i < k; ++i) {
        out.push_back(rank_mod_p(cur));
        if (i + 1 < k) cur = mul(m, cur);
    }
    return out;
}

long orbit_dim(const Rows& p, char letter)
{
    int n = 0;
    for (int x : p) n += x;
    Mat X = zeros(n, n), J = zeros(n, n);
    // blocks: offset and size; wrong parity rows are paired with their twin
    int at = 0;
    std::map<int, int> pending;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int r = p[i];
        for (int k = 0; k + 1 < r; ++k) X[at + k + 1][at + k] = 1;
        bool self = letter == 'A' || (letter == 'C' ? r % 2 == 0 : r % 2 == 1);
        if (letter != 'A') {
            if (self) {
                for (int k = 0; k < r; ++k) J[at + k][at + r - 1 - k] = md(k % 2 ? -1 : 1);
            } else if (pending.count(r)) {
                int v = pending[r];
                pending.erase(r);
                std::int64_t sym = letter == 'C' ? -1 : 1;
                for (int k = 0; k < r; ++k) {
                    J[v + k][at + r - 1 - k] = md(k % 2 ? -1 : 1);
                    J[at + r - 1 - k][v + k] = md(sym * (k % 2 ? -1 : 1));
                }
            } else {
                pending[r] = at;
            }
        }
        at += r;
    }
    if (!pending.empty()) throw std::invalid_argument("partition is not valid for the family");
    std::vector<Mat> basis;
    if (letter == 'A') {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Mat e = zeros(n, n);
                e[i][j] = 1;
                basis.push_back(e);
            }
    } else {
        Mat Jinv = inverse(J);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                if (letter != 'C' && i == j) continue;
                Mat e = zeros(n, n);
                e[i][j] = 1;
                e[j][i] = letter == 'C' ? 1 : prime - 1;
                basis.push_back(mul(Jinv, e));
            }
    }
    Mat images;
    for (const auto& a : basis) {
        Mat ax = mul(a, X), xa = mul(X, a);
        std::vector<std::int64_t> row;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) row.push_back(md(ax[i][j] - xa[i][j]));
        images.push_back(row);
    }
    return rank_mod_p(images);
}

std::vector<std::vector<int>> cartan(char letter, int rank)
{
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    if (letter == 'A') {
        for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
    } else if (letter == 'D') {
        for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
        link(rank - 3, rank - 1);
    } else if (letter == 'E') {
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < rank; ++i) link(i, i + 1);
    } else {
        throw std::invalid_argument("simply laced types only");
    }
    return c;
}

LieAlgebra::LieAlgebra(const std::vector<std::vector<int>>& c) : rank_(static_cast<int>(c.size())), cartan_(c)
{
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < rank_; ++i) {
        std::vector<int> r(rank_, 0);
        r[i] = 1;
        frontier.push_back(r);
    }
    std::vector<std::vector<int>> positive = frontier;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& r : frontier)
            for (int i = 0; i < rank_; ++i) {
                int pair = 0;
                for (int j = 0; j < rank_; ++j) pair += r[j] * c[j][i];
                if (pair != -1) continue;
                auto s = r;
                ++s[i];
                if (std::find(positive.begin(), positive.end(), s) == positive.end()) {
                    positive.push_back(s);
                    next.push_back(s);
                }
            }
        frontier = next;
    }
    for (const auto& r : positive) {
        roots_.push_back(r);
        auto m = r;
        for (auto& x : m) x = -x;
        roots_.push_back(m);
    }
    std::sort(roots_.begin(), roots_.end());
}

int LieAlgebra::index(const std::vector<int>& r) const
{
    auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
    return (it != roots_.end() && *it == r) ? static_cast<int>(it - roots_.begin()) : -1;
}

int LieAlgebra::eps(const std::vector<int>& a, const std::vector<int>& b) const
{
    int e = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            bool minus = i == j || (i < j && cartan_[i][j] == -1);
            if (minus) e += a[i] * b[j];
        }
    return (e % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<std::int64_t>> LieAlgebra::ad(const std::vector<std::pair<int, std::int64_t>>& element) const
{
    int R = static_cast<int>(roots_.size());
    int n = dim();
    Mat m = zeros(n, n);
    // basis: e_root for roots, then h_1..h_rank (simple coroots)
    for (auto [ai, coef] : element) {
        const auto& a = roots_[ai];
        for (int bi = 0; bi < R; ++bi) {
            const auto& b = roots_[bi];
            std::vector<int> s(rank_);
            bool zero = true;
            for (int i = 0; i < rank_; ++i) {
                s[i] = a[i] + b[i];
                zero = zero && s[i] == 0;
            }
            if (zero) {
                // [e_a, e_-a] = eps(a,-a) h_a
                for (int i = 0; i < rank_; ++i) m[R + i][bi] = md(m[R + i][bi] + coef * eps(a, b) * a[i]);
                continue;
            }
            int si = index(s);
            if (si >= 0) m[si][bi] = md(m[si][bi] + coef * eps(a, b));
        }
        for (int i = 0; i < rank_; ++i) {
            // [e_a, h_i] = -a(h_i) e_a
            int pair = 0;
            for (int j = 0; j < rank_; ++j) pair += a[j] * cartan_[j][i];
            m[ai][R + i] = md(m[ai][R + i] - coef * pair);
        }
    }
    return m;
}

std::int64_t random_unit(std::uint64_t& state)
{
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::int64_t>((state >> 33) % (prime - 1)) + 1;
}

}

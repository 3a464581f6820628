#include <jacquet/weyl.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>

#include <jacquet/errors.hpp>

namespace jacquet
{

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : m_perm(std::move(perm)), m_signs(std::move(signs))
{
    if (m_perm.size() != m_signs.size()) {
        throw InvalidParams("signed permutation: perm and sign vectors differ in length");
    }
    const int n = static_cast<int>(m_perm.size());
    std::vector<bool> hit(n + 1, false);
    for (int v : m_perm) {
        if (v < 1 || v > n || hit[v]) {
            throw NonBijection("signed permutation: not a bijection of {1.." + std::to_string(n) + "}");
        }
        hit[v] = true;
    }
    for (int s : m_signs) {
        if (s != 1 && s != -1) {
            throw InvalidParams("signed permutation: signs must be +1 or -1");
        }
    }
}

SignedPermutation SignedPermutation::identity(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    return SignedPermutation(std::move(p), std::vector<int>(n, 1));
}

SignedPermutation SignedPermutation::simple_reflection(int n, int i)
{
    if (i < 1 || i > n) {
        throw InvalidParams("simple reflection index out of range");
    }
    auto w = identity(n);
    if (i < n) {
        std::swap(w.m_perm[i - 1], w.m_perm[i]);
    } else {
        w.m_signs[n - 1] = -1;
    }
    return w;
}

SignedPermutation operator*(const SignedPermutation &x, const SignedPermutation &y)
{
    // x(y(e_j)) = y.sign(j) * x.sign(y(j)) * e_{x(y(j))}.
    const int n = y.n();
    std::vector<int> p(n);
    std::vector<int> s(n);
    for (int j = 0; j < n; ++j) {
        const int yj = y.m_perm[j];
        p[j] = x.m_perm[yj - 1];
        s[j] = y.m_signs[j] * x.m_signs[yj - 1];
    }
    return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::inverse() const
{
    const int n = this->n();
    std::vector<int> p(n);
    std::vector<int> s(n);
    for (int j = 0; j < n; ++j) {
        p[m_perm[j] - 1] = j + 1;
        s[m_perm[j] - 1] = m_signs[j];
    }
    return SignedPermutation(std::move(p), std::move(s));
}

std::vector<int> SignedPermutation::apply(std::span<const int> v) const
{
    std::vector<int> out(v.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        out[m_perm[j] - 1] += m_signs[j] * v[j];
    }
    return out;
}

namespace
{

bool is_positive(std::span<const int> v)
{
    for (int x : v) {
        if (x != 0) {
            return x > 0;
        }
    }
    return false;
}

// Positive roots of C_n: e_i - e_j, e_i + e_j (i < j), 2 e_i.
const std::vector<std::vector<int>> &positive_roots(int n)
{
    static std::map<int, std::vector<std::vector<int>>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto &roots = cache[n];
    if (roots.empty()) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> v(n, 0);
                v[i] = 1;
                v[j] = -1;
                roots.push_back(v);
                v[j] = 1;
                roots.push_back(v);
            }
            std::vector<int> v(n, 0);
            v[i] = 2;
            roots.push_back(v);
        }
    }
    return roots;
}

std::vector<int> simple_root(int n, int i)
{
    std::vector<int> v(n, 0);
    if (i < n) {
        v[i - 1] = 1;
        v[i] = -1;
    } else {
        v[n - 1] = 2;
    }
    return v;
}

void check_range(int n, int i1, int i2)
{
    if (n < 1 || i1 < 1 || i2 < 1 || i1 > n || i2 > n) {
        throw InvalidParams("need 1 <= i1, i2 <= n (n=" + std::to_string(n) + ", i1=" + std::to_string(i1)
                            + ", i2=" + std::to_string(i2) + ")");
    }
}

void check_bound(int n, int bound)
{
    if (n > bound) {
        throw BoundExceeded("brute-force Weyl enumeration limited to n <= " + std::to_string(bound) + ", got n="
                            + std::to_string(n));
    }
}

} // namespace

int SignedPermutation::length() const
{
    int count = 0;
    for (const auto &r : positive_roots(n())) {
        if (!is_positive(apply(r))) {
            ++count;
        }
    }
    return count;
}

std::string SignedPermutation::cycle_notation() const
{
    const int n = this->n();
    std::vector<bool> seen(n + 1, false);
    std::string out;
    for (int start = 1; start <= n; ++start) {
        if (seen[start] || m_perm[start - 1] == start) {
            seen[start] = true;
            continue;
        }
        out += '(';
        int j = start;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) {
                out += ' ';
            }
            out += std::to_string(j);
            first = false;
            j = m_perm[j - 1];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::string SignedPermutation::sign_string() const
{
    std::string out = "(";
    for (std::size_t j = 0; j < m_signs.size(); ++j) {
        if (j) {
            out += ',';
        }
        out += m_signs[j] > 0 ? '+' : '-';
    }
    return out + ")";
}

bool GeomParams::admissible() const
{
    if (n < 1 || i1 < 1 || i2 < 1 || i1 > n || i2 > n) {
        return false;
    }
    if (d < 0 || d > std::min(i1, i2)) {
        return false;
    }
    return k >= std::max(0, (i1 + i2 - n) - d) && k <= std::min(i1, i2) - d;
}

std::string GeomParams::to_string() const
{
    return "n=" + std::to_string(n) + " i1=" + std::to_string(i1) + " i2=" + std::to_string(i2)
           + " d=" + std::to_string(d) + " k=" + std::to_string(k);
}

SignedPermutation p_rep(const GeomParams &q)
{
    if (!q.admissible()) {
        throw InvalidParams("inadmissible Weyl parameters: " + q.to_string());
    }
    std::vector<int> p(q.n, 0);
    for (int j = 1; j <= q.n; ++j) {
        int image = 0;
        if (j <= q.k) {
            image = j;
        } else if (j <= q.i2 - q.d) {
            image = j + q.i1 - q.k;
        } else if (j <= q.i2) {
            image = (q.i1 + q.i2 - q.d + 1) - j;
        } else if (j <= q.i1 + q.i2 - q.d - q.k) {
            image = j - q.i2 + q.k;
        } else {
            image = j;
        }
        p[j - 1] = image;
    }
    try {
        return SignedPermutation(std::move(p), std::vector<int>(q.n, 1));
    } catch (const NonBijection &) {
        throw NonBijection("p_n(d,k) branches do not form a bijection for " + q.to_string());
    }
}

SignedPermutation q_rep(const GeomParams &q)
{
    auto p = p_rep(q);
    std::vector<int> signs(q.n, 1);
    for (int j = q.i2 - q.d + 1; j <= q.i2; ++j) {
        signs[j - 1] = -1;
    }
    return SignedPermutation(p.perm(), std::move(signs));
}

std::vector<GeomParams> enumerate_geom_params(int n, int i1, int i2)
{
    check_range(n, i1, i2);
    std::vector<GeomParams> out;
    for (int d = 0; d <= std::min(i1, i2); ++d) {
        for (int k = std::max(0, (i1 + i2 - n) - d); k <= std::min(i1, i2) - d; ++k) {
            out.push_back(GeomParams{n, i1, i2, d, k});
        }
    }
    return out;
}

std::vector<SignedPermutation> hyperoctahedral_group(int n)
{
    std::vector<SignedPermutation> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> s(n);
            for (int j = 0; j < n; ++j) {
                s[j] = (mask >> (n - 1 - j)) & 1 ? 1 : -1;
            }
            out.emplace_back(p, std::move(s));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DoubleCoset> double_cosets(int n, int i1, int i2, int bound)
{
    check_range(n, i1, i2);
    check_bound(n, bound);
    const auto group = hyperoctahedral_group(n);
    std::map<SignedPermutation, std::size_t> index;
    for (std::size_t i = 0; i < group.size(); ++i) {
        index.emplace(group[i], i);
    }
    std::vector<SignedPermutation> left;
    std::vector<SignedPermutation> right;
    for (int i = 1; i <= n; ++i) {
        if (i != i1) {
            left.push_back(SignedPermutation::simple_reflection(n, i));
        }
        if (i != i2) {
            right.push_back(SignedPermutation::simple_reflection(n, i));
        }
    }

    std::vector<bool> seen(group.size(), false);
    std::vector<DoubleCoset> out;
    for (std::size_t start = 0; start < group.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<SignedPermutation> members;
        std::deque<std::size_t> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const auto &w = group[queue.front()];
            queue.pop_front();
            members.push_back(w);
            auto visit = [&](const SignedPermutation &v) {
                const auto idx = index.at(v);
                if (!seen[idx]) {
                    seen[idx] = true;
                    queue.push_back(idx);
                }
            };
            for (const auto &s : left) {
                visit(s * w);
            }
            for (const auto &s : right) {
                visit(w * s);
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<int> lengths;
        lengths.reserve(members.size());
        for (const auto &m : members) {
            lengths.push_back(m.length());
        }
        const auto min_len = *std::min_element(lengths.begin(), lengths.end());
        const auto first = std::find(lengths.begin(), lengths.end(), min_len);
        const bool unique = std::count(lengths.begin(), lengths.end(), min_len) == 1;
        auto minimal = members[static_cast<std::size_t>(first - lengths.begin())];
        out.push_back(DoubleCoset{std::move(members), std::move(minimal), unique});
    }
    return out;
}

std::set<SignedPermutation> brute_force_coset_reps(int n, int i1, int i2, int bound, Exec exec)
{
    check_range(n, i1, i2);
    check_bound(n, bound);
    std::set<SignedPermutation> out;
    if (exec == Exec::serial) {
        for (const auto &c : double_cosets(n, i1, i2, bound)) {
            out.insert(c.minimal);
        }
        return out;
    }

    // w is minimal in W_I w W_J iff w^{-1}(alpha) > 0 for alpha in I and
    // w(beta) > 0 for beta in J.
    const auto group = hyperoctahedral_group(n);
    std::vector<std::vector<int>> left_roots;
    std::vector<std::vector<int>> right_roots;
    for (int i = 1; i <= n; ++i) {
        if (i != i1) {
            left_roots.push_back(simple_root(n, i));
        }
        if (i != i2) {
            right_roots.push_back(simple_root(n, i));
        }
    }
    std::vector<char> minimal(group.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(group.size()); ++idx) {
        const auto &w = group[static_cast<std::size_t>(idx)];
        const auto winv = w.inverse();
        bool ok = true;
        for (const auto &a : left_roots) {
            ok = ok && is_positive(winv.apply(a));
        }
        for (const auto &b : right_roots) {
            ok = ok && is_positive(w.apply(b));
        }
        minimal[static_cast<std::size_t>(idx)] = ok ? 1 : 0;
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (minimal[i]) {
            out.insert(group[i]);
        }
    }
    return out;
}

OracleReport compare_with_oracle(int n, int i1, int i2, int bound, Exec exec)
{
    OracleReport r;
    r.params = enumerate_geom_params(n, i1, i2);
    for (const auto &p : r.params) {
        r.closed_form.insert(q_rep(p));
    }
    r.brute_force = brute_force_coset_reps(n, i1, i2, bound, exec);
    r.match = r.closed_form == r.brute_force;
    return r;
}

int LeviTuple::n() const
{
    int total = anchor_size;
    for (const auto &b : blocks) {
        total += b.size;
    }
    return total;
}

std::string LeviTuple::to_string() const
{
    std::string out = "(";
    for (const auto &b : blocks) {
        if (b.size == 0) {
            continue;
        }
        std::string item = b.label;
        if (b.dual) {
            item = "dual(" + item + ")";
        }
        if (b.twisted) {
            item = "lambda*" + item;
        }
        out += item + ", ";
    }
    return out + anchor + ")";
}

LeviTuple levi_action(const SignedPermutation &w, const LeviTuple &tuple, GroupMode mode)
{
    const int n = tuple.n();
    if (w.n() != n) {
        throw IncompatibleLevi("Weyl element of rank " + std::to_string(w.n()) + " acting on a Levi of rank "
                               + std::to_string(n));
    }
    // Image start position -> transformed block.
    std::map<int, LeviBlock> placed;
    int pos = 1;
    for (const auto &b : tuple.blocks) {
        if (b.size < 0) {
            throw IncompatibleLevi("negative block size");
        }
        if (b.size == 0) {
            continue;
        }
        const int first = pos;
        const int last = pos + b.size - 1;
        pos += b.size;
        bool forward = true;
        bool backward = true;
        for (int j = first; j <= last; ++j) {
            forward = forward && w.sign(j) == 1 && w.image(j) == w.image(first) + (j - first);
            backward = backward && w.sign(j) == -1 && w.image(j) == w.image(first) - (j - first);
        }
        if (!forward && !backward) {
            throw IncompatibleLevi("block '" + b.label + "' is not carried onto a block");
        }
        LeviBlock out = b;
        int start = w.image(first);
        if (!forward) {
            start = w.image(last);
            out.dual = !out.dual;
            if (mode == GroupMode::GU) {
                out.twisted = !out.twisted;
            }
        }
        placed.emplace(start, std::move(out));
    }
    for (int j = pos; j <= n; ++j) {
        if (w.image(j) != j || w.sign(j) != 1) {
            throw IncompatibleLevi("anchor coordinates must be fixed by the Weyl element");
        }
    }
    LeviTuple result{{}, tuple.anchor, tuple.anchor_size};
    for (auto &[start, b] : placed) {
        result.blocks.push_back(std::move(b));
    }
    return result;
}

} // namespace jacquet

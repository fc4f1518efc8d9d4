#include "qadj/cartan.hpp"

#include <cctype>
#include <numeric>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace qadj {

std::string Weight::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (k) os << ",";
        os << coords[k];
    }
    os << "]";
    return os.str();
}

namespace {

// Exact determinant by Bareiss fraction-free elimination.
long long int_determinant(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    long long prev = 1;
    long long sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

// Adjacency matrix from the nonzero off-diagonal pattern; returns whether
// the graph on I is connected.
bool is_connected(const std::vector<std::vector<long long>>& dot) {
    const std::size_t n = dot.size();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (!seen[j] && dot[i][j] != 0) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

// Symmetrized pairing matrix from per-node lengths d_i (= i.i/2) and the
// edge list with dot products.
std::vector<std::vector<int>> build_dot(const std::vector<int>& d,
                                        const std::vector<std::tuple<int, int, int>>& edges) {
    const std::size_t n = d.size();
    std::vector<std::vector<int>> dot(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) dot[i][i] = 2 * d[i];
    for (auto [i, j, val] : edges) {
        dot[i][j] = val;
        dot[j][i] = val;
    }
    return dot;
}

} // namespace

CartanDatum::CartanDatum(std::vector<std::vector<int>> dot) : dot_(std::move(dot)) {
    e_ = 1;
    for (std::size_t i = 0; i < rank(); ++i) e_ = std::max(e_, v_exponent(i));
}

std::vector<std::size_t> CartanDatum::short_nodes() const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < rank(); ++i)
        if (is_short(i)) r.push_back(i);
    return r;
}

std::vector<std::size_t> CartanDatum::long_nodes() const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < rank(); ++i)
        if (is_long(i)) r.push_back(i);
    return r;
}

CartanDatum CartanDatum::preset(char family, int rank) {
    auto bad = [&] {
        std::ostringstream os;
        os << "unknown preset: family " << family << ", rank " << rank;
        return std::invalid_argument(os.str());
    };
    const int n = rank;
    std::vector<int> d;
    std::vector<std::tuple<int, int, int>> edges;
    switch (std::toupper(static_cast<unsigned char>(family))) {
    case 'A':
        if (n < 1) throw bad();
        d.assign(n, 1);
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, -1);
        break;
    case 'B': // nodes 1..n-1 long, node n short
        if (n < 2) throw bad();
        d.assign(n, 2);
        d[n - 1] = 1;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, -2);
        break;
    case 'C': // nodes 1..n-1 short, node n long
        if (n < 2) throw bad();
        d.assign(n, 1);
        d[n - 1] = 2;
        for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1, -1);
        edges.emplace_back(n - 2, n - 1, -2);
        break;
    case 'D': // chain 1..n-2, nodes n-1 and n both attached to n-2
        if (n < 4) throw bad();
        d.assign(n, 1);
        for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1, -1);
        edges.emplace_back(n - 3, n - 1, -1);
        break;
    case 'E': // Bourbaki: node 2 attached to node 4; chain 1-3-4-5-...-n
        if (n < 6 || n > 8) throw bad();
        d.assign(n, 1);
        edges.emplace_back(0, 2, -1);
        edges.emplace_back(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1, -1);
        break;
    case 'F': // nodes 1,2 long; 3,4 short
        if (n != 4) throw bad();
        d = {2, 2, 1, 1};
        edges = {{0, 1, -2}, {1, 2, -2}, {2, 3, -1}};
        break;
    case 'G': // node 1 short, node 2 long
        if (n != 2) throw bad();
        d = {1, 3};
        edges = {{0, 1, -3}};
        break;
    default:
        throw bad();
    }
    return CartanDatum(build_dot(d, edges));
}

CartanDatum CartanDatum::preset(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("unknown preset: " + name);
    char fam = name[0];
    int rank = 0;
    for (std::size_t k = 1; k < name.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(name[k])))
            throw std::invalid_argument("unknown preset: " + name);
        rank = rank * 10 + (name[k] - '0');
    }
    return preset(fam, rank);
}

DatumValidation CartanDatum::validate(const std::vector<std::vector<long long>>& raw) {
    DatumValidation v;
    const std::size_t n = raw.size();
    if (n == 0) {
        v.issues.push_back("empty matrix");
        return v;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (raw[i].size() != n) {
            v.issues.push_back("matrix is not square");
            return v;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (raw[i][j] != raw[j][i]) {
                std::ostringstream os;
                os << "not symmetric at (" << i + 1 << "," << j + 1 << "): " << raw[i][j]
                   << " vs " << raw[j][i];
                v.issues.push_back(os.str());
            }
    // Sylvester's criterion with exact integer minors.
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<long long>> minor(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = raw[i][j];
        long long det = int_determinant(minor);
        if (det <= 0) {
            std::ostringstream os;
            os << "not positive definite: leading principal minor of order " << k << " is "
               << det;
            v.issues.push_back(os.str());
        }
    }
    bool has_short = false;
    for (std::size_t i = 0; i < n; ++i) {
        long long half = raw[i][i] / 2;
        if (raw[i][i] <= 0 || raw[i][i] % 2 != 0 || half > 3) {
            std::ostringstream os;
            os << "node " << i + 1 << ": i.i/2 must be in {1,2,3}, got i.i = " << raw[i][i];
            v.issues.push_back(os.str());
        } else if (half == 1) {
            has_short = true;
        }
    }
    if (!has_short) v.issues.push_back("no node with i.i/2 = 1 (normalization)");
    for (std::size_t i = 0; i < n; ++i) {
        if (raw[i][i] <= 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            long long num = 2 * raw[i][j];
            if (num % raw[i][i] != 0 || num / raw[i][i] > 0) {
                std::ostringstream os;
                os << "pair (" << i + 1 << "," << j + 1 << "): 2(i.j)/(i.i) = 2*" << raw[i][j]
                   << "/" << raw[i][i] << " is not a nonpositive integer";
                v.issues.push_back(os.str());
            }
        }
    }
    if (!is_connected(raw)) v.issues.push_back("not irreducible: pairing graph is disconnected");
    return v;
}

CartanDatum CartanDatum::from_dot(const std::vector<std::vector<long long>>& raw) {
    DatumValidation v = validate(raw);
    if (!v.ok()) {
        std::string msg = "invalid Cartan datum:";
        for (const auto& s : v.issues) msg += "\n  - " + s;
        throw std::invalid_argument(msg);
    }
    std::vector<std::vector<int>> dot(raw.size(), std::vector<int>(raw.size()));
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = 0; j < raw.size(); ++j) dot[i][j] = static_cast<int>(raw[i][j]);
    return CartanDatum(std::move(dot));
}

} // namespace qadj

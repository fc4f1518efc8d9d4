#include "qadj/adjoint.hpp"

#include <sstream>
#include <stdexcept>

namespace qadj {

PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t n = x.n_;
    PolyMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const LaurentPoly& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const LaurentPoly& ykj = y.at(k, j);
                if (ykj.is_zero()) continue;
                r.at(i, j) += xik * ykj;
            }
        }
    return r;
}

PolyMatrix operator*(const LaurentPoly& s, const PolyMatrix& x) {
    PolyMatrix r = x;
    for (auto& p : r.a_) p = s * p;
    return r;
}

PolyMatrix PolyMatrix::pow(unsigned k) const {
    PolyMatrix r = identity(n_);
    for (unsigned t = 0; t < k; ++t) r = r * *this;
    return r;
}

std::vector<LaurentPoly> PolyMatrix::apply(const std::vector<LaurentPoly>& vec) const {
    if (vec.size() != n_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<LaurentPoly> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const LaurentPoly& m = at(i, j);
            if (!m.is_zero() && !vec[j].is_zero()) out[i] += m * vec[j];
        }
    return out;
}

std::string AdjointModule::label_of(std::size_t b) const {
    BasisElement be = basis_element(b);
    if (be.kind == BasisElement::RootVector) return "X" + rs_.roots()[be.index].str();
    return "t[" + std::to_string(be.index + 1) + "]";
}

PolyMatrix AdjointModule::E(std::size_t i) const {
    const std::size_t n = datum().rank();
    const int di = datum().v_exponent(i);
    const Weight ip = Weight::simple_root(n, i);
    PolyMatrix m(dim());
    for (std::size_t b = 0; b < dim(); ++b) {
        BasisElement be = basis_element(b);
        if (be.kind == BasisElement::RootVector) {
            const Weight& alpha = rs_.roots()[be.index];
            if (alpha == -ip) {
                m.at(t_basis_index(i), b) = LaurentPoly{1};
            } else {
                RootString s = rs_.string_at(be.index, i);
                if (s.p > 0)
                    m.at(rs_.index_of(alpha + ip), b) = q_int(s.q + 1, di);
            }
        } else {
            const std::size_t j = be.index;
            long long pair = datum().pairing(j, ip);
            LaurentPoly c = q_int(static_cast<int>(pair < 0 ? -pair : pair),
                                  datum().v_exponent(j));
            if (!c.is_zero()) m.at(rs_.index_of(ip), b) = c;
        }
    }
    return m;
}

PolyMatrix AdjointModule::F(std::size_t i) const {
    const std::size_t n = datum().rank();
    const int di = datum().v_exponent(i);
    const Weight ip = Weight::simple_root(n, i);
    PolyMatrix m(dim());
    for (std::size_t b = 0; b < dim(); ++b) {
        BasisElement be = basis_element(b);
        if (be.kind == BasisElement::RootVector) {
            const Weight& alpha = rs_.roots()[be.index];
            if (alpha == ip) {
                m.at(t_basis_index(i), b) = LaurentPoly{1};
            } else {
                RootString s = rs_.string_at(be.index, i);
                if (s.q > 0)
                    m.at(rs_.index_of(alpha - ip), b) = q_int(s.p + 1, di);
            }
        } else {
            const std::size_t j = be.index;
            long long pair = datum().pairing(j, ip);
            LaurentPoly c = q_int(static_cast<int>(pair < 0 ? -pair : pair),
                                  datum().v_exponent(j));
            if (!c.is_zero()) m.at(rs_.index_of(-ip), b) = c;
        }
    }
    return m;
}

PolyMatrix AdjointModule::K(const std::vector<int>& y) const {
    if (y.size() != datum().rank()) throw std::invalid_argument("K: y must index I");
    PolyMatrix m(dim());
    for (std::size_t b = 0; b < dim(); ++b) {
        Weight lambda = weight_of(b);
        long long exp = 0;
        for (std::size_t i = 0; i < y.size(); ++i)
            exp += static_cast<long long>(y[i]) * datum().pairing(i, lambda);
        m.at(b, b) = LaurentPoly::power_of_v(static_cast<int>(exp));
    }
    return m;
}

PolyMatrix AdjointModule::E_divided(std::size_t i, unsigned k) const {
    if (k == 0) return PolyMatrix::identity(dim());
    if (k == 1) return E(i);
    const std::size_t n = datum().rank();
    const int di = datum().v_exponent(i);
    const Weight ip = Weight::simple_root(n, i);
    PolyMatrix m(dim());
    for (std::size_t b = 0; b < dim(); ++b) {
        BasisElement be = basis_element(b);
        if (be.kind != BasisElement::RootVector) continue;  // E^{(k)} t_j = 0, k >= 2
        const Weight& alpha = rs_.roots()[be.index];
        if (alpha == -ip) {
            if (k == 2) m.at(rs_.index_of(ip), b) = LaurentPoly{1};
            continue;
        }
        RootString s = rs_.string_at(be.index, i);
        if (static_cast<int>(k) <= s.p)
            m.at(rs_.index_of(alpha + static_cast<int>(k) * ip), b) =
                q_binomial(s.q + static_cast<int>(k), static_cast<int>(k), di);
    }
    return m;
}

PolyMatrix AdjointModule::F_divided(std::size_t i, unsigned k) const {
    if (k == 0) return PolyMatrix::identity(dim());
    if (k == 1) return F(i);
    const std::size_t n = datum().rank();
    const int di = datum().v_exponent(i);
    const Weight ip = Weight::simple_root(n, i);
    PolyMatrix m(dim());
    for (std::size_t b = 0; b < dim(); ++b) {
        BasisElement be = basis_element(b);
        if (be.kind != BasisElement::RootVector) continue;
        const Weight& alpha = rs_.roots()[be.index];
        if (alpha == ip) {
            if (k == 2) m.at(rs_.index_of(-ip), b) = LaurentPoly{1};
            continue;
        }
        RootString s = rs_.string_at(be.index, i);
        if (static_cast<int>(k) <= s.q)
            m.at(rs_.index_of(alpha - static_cast<int>(k) * ip), b) =
                q_binomial(s.p + static_cast<int>(k), static_cast<int>(k), di);
    }
    return m;
}

} // namespace qadj

#include "oracle.hpp"

#include <gmpxx.h>

namespace oracle {

using volterra::RatMatrix;
using volterra::RatVector;
using volterra::Rational;

namespace {

using Grid = std::vector<std::vector<mpq_class>>;

Grid to_grid(const RatMatrix& m) {
    Grid g(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = mpq_class(m(r, c).str());
    for (auto& row : g)
        for (auto& x : row) x.canonicalize();
    return g;
}

Rational from_mpq(const mpq_class& q) { return Rational::parse(q.get_str()); }

struct Reduced {
    Grid rows;                        // independent rows, each with its pivot entry scaled to 1
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Repeatedly take the bottom-most remaining nonzero row, pivot on its
// rightmost nonzero entry, clear that column everywhere else.
Reduced reduce(Grid g, std::size_t cols) {
    Reduced out;
    while (!g.empty()) {
        std::vector<mpq_class> row = std::move(g.back());
        g.pop_back();
        std::size_t piv = cols;
        for (std::size_t c = cols; c-- > 0;)
            if (row[c] != 0) {
                piv = c;
                break;
            }
        if (piv == cols) continue;
        const mpq_class lead = row[piv];
        for (auto& x : row) x /= lead;
        for (auto& other : g) {
            if (other[piv] == 0) continue;
            const mpq_class f = other[piv];
            for (std::size_t c = 0; c < cols; ++c) other[c] -= f * row[c];
        }
        for (auto& other : out.rows) {
            if (other[piv] == 0) continue;
            const mpq_class f = other[piv];
            for (std::size_t c = 0; c < cols; ++c) other[c] -= f * row[c];
        }
        out.rows.push_back(std::move(row));
        out.pivots.push_back(piv);
    }
    return out;
}

}  // namespace

std::vector<RatVector> kernel(const RatMatrix& m) {
    const std::size_t cols = m.cols();
    const Reduced red = reduce(to_grid(m), cols);
    std::vector<bool> pivot(cols, false);
    for (auto p : red.pivots) pivot[p] = true;

    std::vector<RatVector> out;
    for (std::size_t f = cols; f-- > 0;) {
        if (pivot[f]) continue;
        std::vector<mpq_class> v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < red.rows.size(); ++r) v[red.pivots[r]] = -red.rows[r][f];
        RatVector rv;
        for (const auto& x : v) rv.push_back(from_mpq(x));
        out.push_back(std::move(rv));
    }
    return out;
}

std::size_t rank(const RatMatrix& m) { return reduce(to_grid(m), m.cols()).rows.size(); }

RatVector product(const volterra::Algebra& alg, const RatVector& x, const RatVector& y) {
    const int n = alg.dimension();
    RatVector z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rational p = alg.structure_constant(i, j, k);
                if (p.is_zero()) continue;
                z[static_cast<std::size_t>(k)] += p * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            }
    return z;
}

RatMatrix derivation_constraints(const volterra::Algebra& alg) {
    const auto n = static_cast<std::size_t>(alg.dimension());
    RatMatrix m(n * n * n, n * n);
    auto e = [n](std::size_t i) {
        RatVector v(n);
        v[i] = 1;
        return v;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            // D = E_ac: D(e_a) = e_c, every other basis vector maps to 0.
            auto D = [&](const RatVector& x) {
                RatVector out(n);
                out[c] = x[a];
                return out;
            };
            std::size_t row = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const RatVector lhs = D(product(alg, e(i), e(j)));
                    const RatVector r1 = product(alg, D(e(i)), e(j));
                    const RatVector r2 = product(alg, e(i), D(e(j)));
                    for (std::size_t k = 0; k < n; ++k) m(row++, a * n + c) = lhs[k] - r1[k] - r2[k];
                }
        }
    return m;
}

std::vector<RatVector> derivations(const volterra::Algebra& alg) { return kernel(derivation_constraints(alg)); }

}  // namespace oracle

#include "volterra/local.hpp"

namespace volterra {

SubspaceBasis orbit(const DerivationSpace& space, std::span<const Rational> x) {
    const auto n = static_cast<std::size_t>(space.n);
    if (x.size() != n)
        throw DimensionMismatch("orbit: point of length " + std::to_string(x.size()) + " in dimension " +
                                std::to_string(n));
    std::vector<RatVector> images;
    for (const auto& d : space.matrices()) images.push_back(apply_map(d, x));
    return SubspaceBasis::span(n, images);
}

SubspaceBasis local_conditions_at(const DerivationSpace& space, std::span<const Rational> x) {
    const auto n = static_cast<std::size_t>(space.n);
    const SubspaceBasis functionals = annihilator(orbit(space, x));

    // f(Delta(x)) = sum_{i,j} x_i f_j delta_ij
    RatMatrix conditions(0, n * n);
    for (const auto& f : functionals.vectors()) {
        RatVector row(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!f[j].is_zero()) row[i * n + j] = x[i] * f[j];
        }
        conditions.append_row(row);
    }
    if (conditions.rows() == 0) return SubspaceBasis::full(n * n);
    return kernel_basis(conditions);
}

namespace {

// Appends sum_k signs[k] * e_{support[k]} for every support of the given size
// (lexicographic) and every sign pattern in the list.
void add_patterns(std::vector<RatVector>& out, std::size_t n, std::size_t size,
                  const std::vector<std::vector<int>>& patterns) {
    std::vector<std::size_t> idx(size);
    for (std::size_t k = 0; k < size; ++k) idx[k] = k;
    if (size > n) return;
    while (true) {
        for (const auto& signs : patterns) {
            RatVector v(n);
            for (std::size_t k = 0; k < size; ++k) v[idx[k]] = signs[k];
            out.push_back(std::move(v));
        }
        std::size_t k = size;
        while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
        if (k == 0) return;
        ++idx[k - 1];
        for (std::size_t m = k; m < size; ++m) idx[m] = idx[m - 1] + 1;
    }
}

}  // namespace

std::vector<RatVector> structured_samples(int n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<RatVector> out;
    add_patterns(out, un, 1, {{1}});
    add_patterns(out, un, 2, {{1, 1}});
    add_patterns(out, un, 3, {{1, 1, 1}});
    out.emplace_back(un, Rational(1));
    add_patterns(out, un, 2, {{1, -1}});
    add_patterns(out, un, 3, {{1, 1, -1}, {1, -1, 1}, {1, -1, -1}});
    return out;
}

RatVector random_sample(int n, Lcg& rng) {
    RatVector v(static_cast<std::size_t>(n));
    for (auto& c : v) {
        const long a = static_cast<long>(rng.below(7)) - 3;
        const long q = static_cast<long>(rng.below(3)) + 1;
        c = Rational(a, q);
    }
    return v;
}

namespace {

class RunningIntersection {
public:
    explicit RunningIntersection(const DerivationSpace& der)
        : der_(der), current_(SubspaceBasis::full(static_cast<std::size_t>(der.n * der.n))) {
        out_.n = der.n;
    }

    std::size_t add(std::span<const Rational> x) {
        current_ = subspace_intersect(current_, local_conditions_at(der_, x));
        ++out_.samples_used;
        out_.dims_after_step.push_back(current_.dim());
        if (!subspace_includes(current_, der_.basis)) {
            out_.lower_bound_held = false;
            throw LocalDerivationError("local-derivation intersection lost a derivation after sample " +
                                       std::to_string(out_.samples_used));
        }
        return current_.dim();
    }

    LocalDerivationSpace finish() {
        out_.basis = current_;
        return std::move(out_);
    }

    LocalDerivationSpace& result() { return out_; }

private:
    const DerivationSpace& der_;
    SubspaceBasis current_;
    LocalDerivationSpace out_;
};

}  // namespace

LocalDerivationSpace intersect_local_conditions(const DerivationSpace& der, const std::vector<RatVector>& samples) {
    RunningIntersection run(der);
    for (const auto& x : samples) run.add(x);
    return run.finish();
}

LocalDerivationSpace local_derivation_space(const Algebra& alg, const DerivationSpace& der,
                                            const LocalSamplingOptions& options) {
    if (der.n != alg.dimension()) throw DimensionMismatch("local_derivation_space: derivation space of wrong size");
    RunningIntersection run(der);
    run.result().seed = options.seed;

    std::size_t dim = 0;
    for (const auto& x : structured_samples(alg.dimension())) dim = run.add(x);

    Lcg rng(options.seed);
    int unchanged = 0;
    for (int drawn = 0; drawn < options.max_random_samples && unchanged < options.stable_run; ++drawn) {
        const std::size_t next = run.add(random_sample(alg.dimension(), rng));
        unchanged = next == dim ? unchanged + 1 : 0;
        dim = next;
    }
    run.result().stabilized = unchanged >= options.stable_run;
    return run.finish();
}

LocalDerivationSpace local_derivation_space(const Algebra& alg, const LocalSamplingOptions& options) {
    return local_derivation_space(alg, derivation_space(alg), options);
}

const char* to_string(LocalOutcome outcome) {
    switch (outcome) {
        case LocalOutcome::Equal: return "equal";
        case LocalOutcome::NotEqual: return "not_equal";
        case LocalOutcome::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

LocalOutcome compare_local(const DerivationSpace& der, const LocalDerivationSpace& local) {
    if (!local.stabilized) return LocalOutcome::Inconclusive;
    return subspace_equal(der.basis, local.basis) ? LocalOutcome::Equal : LocalOutcome::NotEqual;
}

LocalOutcome local_equals_der(const Algebra& alg, const LocalSamplingOptions& options) {
    const DerivationSpace der = derivation_space(alg);
    return compare_local(der, local_derivation_space(alg, der, options));
}

std::optional<RatMatrix> local_witness(const DerivationSpace& der, const RatMatrix& delta,
                                       std::span<const Rational> x) {
    const auto mats = der.matrices();
    std::vector<RatVector> columns;
    for (const auto& d : mats) columns.push_back(apply_map(d, x));
    const RatVector target = apply_map(delta, x);
    if (columns.empty()) {
        if (is_zero(target)) return RatMatrix(static_cast<std::size_t>(der.n), static_cast<std::size_t>(der.n));
        return std::nullopt;
    }
    const auto coeffs = solve_combination(columns, target);
    if (!coeffs) return std::nullopt;
    RatMatrix w(static_cast<std::size_t>(der.n), static_cast<std::size_t>(der.n));
    for (std::size_t k = 0; k < mats.size(); ++k) {
        if ((*coeffs)[k].is_zero()) continue;
        for (std::size_t i = 0; i < w.rows(); ++i)
            for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) += (*coeffs)[k] * mats[k](i, j);
    }
    return w;
}

}  // namespace volterra

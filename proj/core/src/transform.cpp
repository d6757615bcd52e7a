#include "optibench/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "optibench/errors.hpp"

namespace optibench::transform
{
    Matrix Matrix::identity(const std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    double Matrix::orthonormality_error() const
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
            {
                double dot = 0.0;
                for (std::size_t k = 0; k < n_; ++k)
                    dot += (*this)(i, k) * (*this)(j, k);
                worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
            }
        return worst;
    }

    BooleanTransform BooleanTransform::make_identity(const std::size_t n)
    {
        BooleanTransform t;
        t.xor_mask.assign(n, 0);
        t.permutation.resize(n);
        std::iota(t.permutation.begin(), t.permutation.end(), std::size_t{0});
        t.identity = true;
        return t;
    }

    ContinuousTransform ContinuousTransform::make_identity(const std::size_t n)
    {
        return {Solution(n, 0.0), Matrix::identity(n), 0.0, true};
    }

    std::size_t InstanceTransform::dimension() const
    {
        return std::visit([](const auto &t) { return t.dimension(); }, domain_transform);
    }

    double InstanceTransform::f_offset() const noexcept
    {
        if (const auto *c = std::get_if<ContinuousTransform>(&domain_transform))
            return c->f_offset;
        return 0.0;
    }

    double InstanceTransform::apply_range(const double y) const noexcept
    {
        return transform::apply_range(range, y) + f_offset();
    }

    std::uint64_t derive_seed(const int problem_id, const int instance_id, const Domain domain)
    {
        return static_cast<std::uint64_t>(problem_id) * 10000u + static_cast<std::uint64_t>(instance_id) +
               (domain == Domain::Continuous ? 500000000u : 0u);
    }

    InstanceTransform make_boolean_transform(const int problem_id, const int instance_id, const std::size_t n)
    {
        if (instance_id == 1)
            return {BooleanTransform::make_identity(n), RangeAffine{}};

        std::mt19937_64 rng(derive_seed(problem_id, instance_id, Domain::Boolean));
        std::bernoulli_distribution coin(0.5);

        BooleanTransform t;
        t.identity = false;
        t.xor_mask.resize(n);
        for (auto &z : t.xor_mask)
            z = coin(rng) ? 1 : 0;

        t.permutation.resize(n);
        std::iota(t.permutation.begin(), t.permutation.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i)
        {
            std::uniform_int_distribution<std::size_t> pick(0, i - 1);
            std::swap(t.permutation[i - 1], t.permutation[pick(rng)]);
        }

        std::uniform_real_distribution<double> log_scale(std::log(0.2), std::log(5.0));
        std::uniform_real_distribution<double> offset(-1000.0, 1000.0);
        RangeAffine range;
        range.scale = std::exp(log_scale(rng));
        range.offset = offset(rng);
        return {std::move(t), range};
    }

    InstanceTransform make_continuous_transform(const int problem_id, const int instance_id, const std::size_t n,
                                                const bool use_rotation)
    {
        if (instance_id == 1)
            return {ContinuousTransform::make_identity(n), RangeAffine{}};

        std::mt19937_64 rng(derive_seed(problem_id, instance_id, Domain::Continuous));
        std::uniform_real_distribution<double> shift(-4.0, 4.0);
        std::uniform_real_distribution<double> offset(-1000.0, 1000.0);

        ContinuousTransform t;
        t.identity = false;
        t.shift.resize(n);
        for (auto &s : t.shift)
            s = shift(rng);
        t.f_offset = std::round(offset(rng) * 100.0) / 100.0;
        t.rotation = use_rotation ? random_rotation(n, rng) : Matrix::identity(n);
        return {std::move(t), RangeAffine{}};
    }

    Bits apply_boolean(const BooleanTransform &t, const std::span<const int> x)
    {
        if (x.size() != t.dimension())
            throw DimensionError("boolean transform of dimension " + std::to_string(t.dimension()) +
                                 " applied to a vector of length " + std::to_string(x.size()));
        if (t.identity)
            return {x.begin(), x.end()};
        Bits y(x.size());
        for (std::size_t j = 0; j < y.size(); ++j)
            y[j] = x[t.permutation[j]] ^ t.xor_mask[j];
        return y;
    }

    Solution apply_continuous(const ContinuousTransform &t, const std::span<const double> x)
    {
        if (x.size() != t.dimension())
            throw DimensionError("continuous transform of dimension " + std::to_string(t.dimension()) +
                                 " applied to a vector of length " + std::to_string(x.size()));
        if (t.identity)
            return {x.begin(), x.end()};
        const auto n = x.size();
        Solution centered(n);
        for (std::size_t i = 0; i < n; ++i)
            centered[i] = x[i] - t.shift[i];
        Solution y(n, 0.0);
        for (std::size_t r = 0; r < n; ++r)
        {
            const auto row = t.rotation.row(r);
            y[r] = std::inner_product(row.begin(), row.end(), centered.begin(), 0.0);
        }
        return y;
    }

    double apply_range(const RangeAffine &r, const double y) noexcept
    {
        return r.scale * y + r.offset;
    }
} // namespace optibench::transform

#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "types.hpp"

//! Instance transformations: T_x on the search space and T_y on the objective value.
namespace optibench::transform
{
    //! Square row-major matrix.
    class Matrix
    {
    public:
        Matrix() = default;
        explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

        static Matrix identity(std::size_t n);

        [[nodiscard]] std::size_t size() const noexcept { return n_; }
        [[nodiscard]] double &operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
        [[nodiscard]] double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
        [[nodiscard]] std::span<const double> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

        //! max_ij |(A A^T - I)_ij|
        [[nodiscard]] double orthonormality_error() const;

        bool operator==(const Matrix &) const = default;

    private:
        std::size_t n_ = 0;
        std::vector<double> data_;
    };

    //! y_j = x_{permutation[j]} xor xor_mask[j]
    struct BooleanTransform
    {
        Bits xor_mask;
        std::vector<std::size_t> permutation;
        bool identity = true;

        static BooleanTransform make_identity(std::size_t n);
        [[nodiscard]] std::size_t dimension() const noexcept { return permutation.size(); }

        bool operator==(const BooleanTransform &) const = default;
    };

    //! x -> R (x - shift); f_offset is added on the range side.
    struct ContinuousTransform
    {
        Solution shift;
        Matrix rotation;
        double f_offset = 0.0;
        bool identity = true;

        static ContinuousTransform make_identity(std::size_t n);
        [[nodiscard]] std::size_t dimension() const noexcept { return shift.size(); }

        bool operator==(const ContinuousTransform &) const = default;
    };

    //! y -> scale * y + offset, scale > 0.
    struct RangeAffine
    {
        double scale = 1.0;
        double offset = 0.0;

        bool operator==(const RangeAffine &) const = default;
    };

    struct InstanceTransform
    {
        std::variant<BooleanTransform, ContinuousTransform> domain_transform;
        RangeAffine range;

        [[nodiscard]] Domain domain() const noexcept
        {
            return std::holds_alternative<BooleanTransform>(domain_transform) ? Domain::Boolean : Domain::Continuous;
        }
        [[nodiscard]] std::size_t dimension() const;
        [[nodiscard]] const BooleanTransform &boolean() const { return std::get<BooleanTransform>(domain_transform); }
        [[nodiscard]] const ContinuousTransform &continuous() const
        {
            return std::get<ContinuousTransform>(domain_transform);
        }

        //! f_offset of the continuous part, 0 for boolean transforms.
        [[nodiscard]] double f_offset() const noexcept;

        //! T_y(y) = scale * y + offset + f_offset
        [[nodiscard]] double apply_range(double y) const noexcept;

        bool operator==(const InstanceTransform &) const = default;
    };

    //! problem_id * 10^4 + instance_id, plus 5 * 10^8 for continuous problems.
    [[nodiscard]] std::uint64_t derive_seed(int problem_id, int instance_id, Domain domain);

    //! Instance 1 is the identity; later instances draw mask, permutation, then (a, b).
    [[nodiscard]] InstanceTransform make_boolean_transform(int problem_id, int instance_id, std::size_t n);

    //! Instance 1 is the identity; later instances draw shift, f_offset, then the rotation if requested.
    [[nodiscard]] InstanceTransform make_continuous_transform(int problem_id, int instance_id, std::size_t n,
                                                              bool use_rotation);

    //! Modified Gram-Schmidt orthonormalization of the rows of a matrix of N(0,1) draws.
    template <typename Rng>
    [[nodiscard]] Matrix random_rotation(std::size_t n, Rng &rng);

    [[nodiscard]] Bits apply_boolean(const BooleanTransform &t, std::span<const int> x);
    [[nodiscard]] Solution apply_continuous(const ContinuousTransform &t, std::span<const double> x);
    [[nodiscard]] double apply_range(const RangeAffine &r, double y) noexcept;
} // namespace optibench::transform

#include "transform_impl.hpp"

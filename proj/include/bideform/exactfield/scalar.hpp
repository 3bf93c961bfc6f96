#pragma once

#include <concepts>

namespace bideform {

/// Per-scalar hooks used by the generic algorithms. Specialized next to each
/// scalar type:
///   is_zero(x), conjugate(x), pivot_cost(x) (lower is a better pivot),
///   real_sign(x) (only meaningful when is_real(x)), is_real(x).
template <class F>
struct ScalarTraits;

template <class F>
concept FieldScalar = requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    F(0);
    F(1);
    { ScalarTraits<F>::is_zero(a) } -> std::convertible_to<bool>;
};

template <class F>
bool is_zero(const F& x) {
    return ScalarTraits<F>::is_zero(x);
}

template <class F>
F conjugate(const F& x) {
    return ScalarTraits<F>::conjugate(x);
}

}  // namespace bideform

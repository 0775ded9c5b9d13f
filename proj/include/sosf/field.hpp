#ifndef SOSF_FIELD_HPP
#define SOSF_FIELD_HPP

#include <concepts>
#include <cstdint>

#include "sosf/extension_field.hpp"
#include "sosf/prime_field.hpp"
#include "sosf/rational.hpp"

namespace sosf {

/// The one coefficient-field abstraction the rest of the library is written
/// against. A field is a lightweight context object. Its elements are
/// immutable values that carry enough information to detect cross-field
/// arithmetic, which throws field_mismatch.
template <typename F>
concept CoefficientField = requires(const F f, const typename F::Element a, const typename F::Element b) {
    typename F::Element;
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Element>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.is_finite() } -> std::convertible_to<bool>;
    { f == f } -> std::convertible_to<bool>;
    { a + b } -> std::same_as<typename F::Element>;
    { a - b } -> std::same_as<typename F::Element>;
    { a * b } -> std::same_as<typename F::Element>;
    { a / b } -> std::same_as<typename F::Element>;
    { -a } -> std::same_as<typename F::Element>;
    { a.inverse() } -> std::same_as<typename F::Element>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<ExtensionField>);

/// Finite fields additionally support deterministic enumeration.
template <typename F>
concept FiniteField = CoefficientField<F> && requires(const F f, std::uint64_t i) {
    { f.size() } -> std::convertible_to<std::uint64_t>;
    { f.element_at(i) } -> std::same_as<typename F::Element>;
};

static_assert(FiniteField<PrimeField>);
static_assert(FiniteField<ExtensionField>);
static_assert(!FiniteField<RationalField>);

} // namespace sosf

#endif

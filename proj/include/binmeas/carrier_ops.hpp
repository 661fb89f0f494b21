#pragma once

#include <cstddef>

namespace binmeas {

/// Set operations a carrier must provide so the generic measure checkers can
/// run over it. Specialized next to each carrier type.
template <class E>
struct SetOpsFor;  // intersect, unite, empty, is_empty, equal

template <class E>
concept Carrier = requires(const E& a, const E& b) {
    { SetOpsFor<E>::intersect(a, b) } -> std::convertible_to<E>;
    { SetOpsFor<E>::unite(a, b) } -> std::convertible_to<E>;
    { SetOpsFor<E>::empty() } -> std::convertible_to<E>;
    { SetOpsFor<E>::is_empty(a) } -> std::convertible_to<bool>;
    { SetOpsFor<E>::equal(a, b) } -> std::convertible_to<bool>;
};

}  // namespace binmeas

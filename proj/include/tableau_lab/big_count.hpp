#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace tableau_lab {

/// Exact non-negative count; never rounds, never wraps.
using BigCount = boost::multiprecision::cpp_int;

BigCount factorial(int n);

/// Counter that stays in a machine word until it would overflow, then
/// promotes to BigCount. The limb is a template parameter so the promotion
/// path can be exercised in tests without 2^64 increments.
template <typename Limb = std::uint64_t>
class CheckedAccumulator {
public:
    void add(Limb delta = 1) {
        if (promoted_) {
            big_ += delta;
            return;
        }
        Limb next;
        if (__builtin_add_overflow(small_, delta, &next)) {
            promoted_ = true;
            big_ = BigCount(small_) + delta;
        } else {
            small_ = next;
        }
    }

    BigCount value() const { return promoted_ ? big_ : BigCount(small_); }
    bool promoted() const { return promoted_; }

private:
    Limb small_ = 0;
    BigCount big_ = 0;
    bool promoted_ = false;
};

}  // namespace tableau_lab

#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace codesift {

/// Incremental 64-bit FNV-1a, used for manifest and database digests.
class Fnv1a
{
  public:
    Fnv1a& update(std::string_view bytes) noexcept
    {
        for (unsigned char c : bytes) {
            state_ ^= c;
            state_ *= 0x100000001b3ULL;
        }
        return *this;
    }

    /// Feeds a field terminator so that ("ab","c") and ("a","bc") differ.
    Fnv1a& field(std::string_view bytes) noexcept
    {
        update(bytes);
        return update(std::string_view("\x1f", 1));
    }

    [[nodiscard]] std::uint64_t value() const noexcept { return state_; }

    [[nodiscard]] std::string hex() const
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
        return buf;
    }

  private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

} // namespace codesift

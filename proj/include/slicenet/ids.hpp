#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace slicenet {

/// Opaque identifier, distinct per entity kind.
template <class Tag>
struct Id {
    std::uint64_t value = 0;

    friend auto operator<=>(const Id&, const Id&) = default;
};

struct CloudTag {};
struct NfTag {};
struct SliceTag {};
struct ServiceTag {};
struct SliceletTag {};

using CloudId = Id<CloudTag>;
using NfId = Id<NfTag>;
using SliceId = Id<SliceTag>;
using ServiceId = Id<ServiceTag>;
using SliceletId = Id<SliceletTag>;

template <class Tag>
std::string to_string(Id<Tag> id) {
    return std::to_string(id.value);
}

}  // namespace slicenet

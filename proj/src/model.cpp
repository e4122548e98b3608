#include "slicenet/model.hpp"

#include <cmath>

#include "slicenet/error.hpp"

namespace slicenet {

bool valid_share(double pct) noexcept {
    return std::isfinite(pct) && pct > 0 && pct <= 100;
}

ResourceVector Cloud::allocated() const {
    ResourceVector sum;
    for (const auto& [nf, amount] : allocations) sum = rv_add(sum, amount);
    return sum;
}

ResourceVector Cloud::residual() const {
    const ResourceVector used = allocated();
    return {capacity.compute() - used.compute(), capacity.memory() - used.memory(),
            capacity.storage() - used.storage()};
}

double Cloud::utilization_ratio(Dimension d) const {
    const int i = static_cast<int>(d);
    return allocated().at(i) / capacity.at(i);
}

std::array<double, kDimensions> Cloud::utilization_ratios() const {
    const ResourceVector used = allocated();
    std::array<double, kDimensions> out{};
    for (int d = 0; d < kDimensions; ++d) out[d] = used.at(d) / capacity.at(d);
    return out;
}

double nf_utilization(const Nf& nf) noexcept {
    double sum = 0;
    for (const auto& [slice, pct] : nf.slice_shares) sum += pct;
    return sum;
}

double nf_remaining_share(const Nf& nf) noexcept {
    return 100.0 - nf_utilization(nf);
}

void StaticSlice::compose(NfId nf, double pct) {
    if (!valid_share(pct)) {
        throw ValidationError("slice '" + name + "': share must be in (0, 100], got " +
                              std::to_string(pct));
    }
    composition[nf] = pct;
}

void Service::compose(SliceId slice, double pct) {
    if (!valid_share(pct)) {
        throw ValidationError("service '" + name + "': share must be in (0, 100], got " +
                              std::to_string(pct));
    }
    composition[slice] = pct;
}

}  // namespace slicenet

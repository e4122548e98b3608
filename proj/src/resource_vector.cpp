#include "slicenet/resource_vector.hpp"

#include <cmath>
#include <fmt/format.h>

#include "slicenet/error.hpp"

namespace slicenet {

namespace {

void check_component(double v, const char* what) {
    if (!std::isfinite(v) || v < 0) {
        throw ValidationError(fmt::format("resource {} must be finite and >= 0, got {}", what, v));
    }
}

}  // namespace

ResourceVector::ResourceVector(double compute, double memory, double storage)
    : compute_(compute), memory_(memory), storage_(storage) {
    check_component(compute, "compute");
    check_component(memory, "memory");
    check_component(storage, "storage");
}

double ResourceVector::at(int dim) const {
    switch (dim) {
        case 0: return compute_;
        case 1: return memory_;
        case 2: return storage_;
        default: throw ValidationError(fmt::format("dimension index {} out of range", dim));
    }
}

const char* dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Compute: return "compute";
        case Dimension::Memory: return "memory";
        case Dimension::Storage: return "storage";
    }
    return "?";
}

Dimension parse_dimension(const std::string& name) {
    if (name == "compute") return Dimension::Compute;
    if (name == "memory") return Dimension::Memory;
    if (name == "storage") return Dimension::Storage;
    throw ValidationError("unknown dimension '" + name + "' (expected compute, memory or storage)");
}

ResourceVector rv_add(const ResourceVector& a, const ResourceVector& b) {
    const double c = a.compute() + b.compute();
    const double m = a.memory() + b.memory();
    const double s = a.storage() + b.storage();
    if (!std::isfinite(c) || !std::isfinite(m) || !std::isfinite(s)) {
        throw ValidationError("resource addition overflowed: " + to_string(a) + " + " + to_string(b));
    }
    return {c, m, s};
}

ResourceVector rv_sub(const ResourceVector& a, const ResourceVector& b) {
    if (!rv_fits_within(b, a)) {
        throw ValidationError("resource subtraction underflows: " + to_string(a) + " - " + to_string(b));
    }
    return {a.compute() - b.compute(), a.memory() - b.memory(), a.storage() - b.storage()};
}

bool rv_fits_within(const ResourceVector& demand, const ResourceVector& residual) noexcept {
    return demand.compute() <= residual.compute() && demand.memory() <= residual.memory() &&
           demand.storage() <= residual.storage();
}

std::string to_string(const ResourceVector& v) {
    return fmt::format("({}, {}, {})", v.compute(), v.memory(), v.storage());
}

}  // namespace slicenet

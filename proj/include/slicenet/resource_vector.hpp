#pragma once

#include <compare>
#include <string>

namespace slicenet {

/// A (compute, memory, storage) triple in abstract units. Every component is
/// finite and non-negative; the constructor enforces it.
class ResourceVector {
public:
    constexpr ResourceVector() = default;
    ResourceVector(double compute, double memory, double storage);

    double compute() const noexcept { return compute_; }
    double memory() const noexcept { return memory_; }
    double storage() const noexcept { return storage_; }

    /// Component by dimension index 0..2 (compute, memory, storage).
    double at(int dim) const;

    bool is_zero() const noexcept { return compute_ == 0 && memory_ == 0 && storage_ == 0; }
    bool all_positive() const noexcept { return compute_ > 0 && memory_ > 0 && storage_ > 0; }

    friend bool operator==(const ResourceVector&, const ResourceVector&) = default;

private:
    double compute_ = 0;
    double memory_ = 0;
    double storage_ = 0;
};

enum class Dimension { Compute = 0, Memory = 1, Storage = 2 };

inline constexpr int kDimensions = 3;

const char* dimension_name(Dimension d);
Dimension parse_dimension(const std::string& name);

/// Componentwise sum. Throws ValidationError if any component overflows.
ResourceVector rv_add(const ResourceVector& a, const ResourceVector& b);

/// Componentwise a - b. Throws ValidationError if any component would go negative.
ResourceVector rv_sub(const ResourceVector& a, const ResourceVector& b);

/// True iff demand <= residual in every component.
bool rv_fits_within(const ResourceVector& demand, const ResourceVector& residual) noexcept;

std::string to_string(const ResourceVector& v);

}  // namespace slicenet

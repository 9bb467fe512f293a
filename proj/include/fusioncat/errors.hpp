#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fusioncat {

// Base class for all domain errors. Each error carries a stable name that the
// CLI prints on the diagnostic stream (exit code 1).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define FUSIONCAT_DEFINE_ERROR(NAME)                                          \
    struct NAME : Error {                                                      \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}         \
    }

// fusion_ring
FUSIONCAT_DEFINE_ERROR(MalformedRing);
FUSIONCAT_DEFINE_ERROR(NonVerifiedRing);
FUSIONCAT_DEFINE_ERROR(LabelOutOfRange);
FUSIONCAT_DEFINE_ERROR(NonIntegralRing);

// catalog
FUSIONCAT_DEFINE_ERROR(DegenerateBicharacter);
FUSIONCAT_DEFINE_ERROR(NonCyclicGroup);
FUSIONCAT_DEFINE_ERROR(LevelTooSmall);
FUSIONCAT_DEFINE_ERROR(UnknownName);

// center
FUSIONCAT_DEFINE_ERROR(GroupTooLarge);
FUSIONCAT_DEFINE_ERROR(NotBicharacter);
FUSIONCAT_DEFINE_ERROR(NotAntisymmetric);
FUSIONCAT_DEFINE_ERROR(NonCoprime);
FUSIONCAT_DEFINE_ERROR(NotQPreserving);
FUSIONCAT_DEFINE_ERROR(UnknownMultiplier);
FUSIONCAT_DEFINE_ERROR(NonPrimeOrder);

// spin_chain
FUSIONCAT_DEFINE_ERROR(WindowTooSmall);

// temperley_lieb
FUSIONCAT_DEFINE_ERROR(StrandMismatch);
FUSIONCAT_DEFINE_ERROR(IndexOutOfRange);
FUSIONCAT_DEFINE_ERROR(ZeroLoopParameter);
FUSIONCAT_DEFINE_ERROR(TooManyStrands);
FUSIONCAT_DEFINE_ERROR(SingularQuantumInteger);

// lsm / channels
FUSIONCAT_DEFINE_ERROR(MetricGroupMismatch);
FUSIONCAT_DEFINE_ERROR(RingMismatch);

#undef FUSIONCAT_DEFINE_ERROR

} // namespace fusioncat

#include "entcat/spectrum.hpp"

#include "entcat/majorization.hpp"

namespace entcat {

ExactSpectrum make_exact_spectrum(std::span<const std::string> decimals, bool normalize) {
    std::vector<Rational> values;
    values.reserve(decimals.size());
    for (const auto& d : decimals) values.push_back(parse_rational(d));
    return ExactSpectrum::make(values, normalize);
}

Spectrum to_double(const ExactSpectrum& exact) {
    std::vector<double> values;
    values.reserve(exact.size());
    for (const auto& v : exact.coefficients()) values.push_back(to_double(v));
    return Spectrum::make(values);
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Equivalent: return "Equivalent";
        case Verdict::SourceToTarget: return "SourceToTarget";
        case Verdict::TargetToSource: return "TargetToSource";
        case Verdict::Incomparable: return "Incomparable";
    }
    return "Unknown";
}

}  // namespace entcat

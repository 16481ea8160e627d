#include "absep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "absep/tolerances.hpp"

namespace absep {

Spectrum Spectrum::state(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("Spectrum: empty");
    for (double& v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("Spectrum: non-finite value");
        if (v < -kSpectrumClamp)
            throw std::invalid_argument("Spectrum: negative value below clamp threshold");
        if (v < 0.0) v = 0.0;
    }
    std::sort(values.begin(), values.end(), std::greater<double>());
    double s = 0.0;
    for (double v : values) s += v;
    if (std::abs(s - 1.0) > kTraceTol)
        throw std::invalid_argument("Spectrum: state spectrum does not sum to 1");
    return Spectrum(std::move(values), true);
}

Spectrum Spectrum::raw(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("Spectrum: empty");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("Spectrum: non-finite value");
    std::sort(values.begin(), values.end(), std::greater<double>());
    return Spectrum(std::move(values), false);
}

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : v_) s += v;
    return s;
}

double Spectrum::purity() const {
    double s = 0.0;
    for (double v : v_) s += v * v;
    return s;
}

bool majorizes(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) throw std::invalid_argument("majorizes: length mismatch");
    double pa = 0.0, pb = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        pa += a[k];
        pb += b[k];
        if (pa < pb - kMajorizeTol) return false;
    }
    return true;
}

double entropy(const Spectrum& s) {
    double h = 0.0;
    for (double v : s.values())
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

}  // namespace absep

#pragma once

#include <cstddef>
#include <vector>

namespace absep {

// Decreasingly ordered real eigenvalue vector.  The universal currency of
// every spectral separability criterion: all of them depend on the state
// through its ordered spectrum only.
//
// Two flavours share the type:
//   state  — probability spectrum; entries in [-1e-12, 0) are clamped to 0,
//            anything more negative or a sum away from 1 is rejected.
//   raw    — unmodified eigensolver output, sign preserved (witness searches
//            rely on true negativity).
class Spectrum {
public:
    static Spectrum state(std::vector<double> values);
    static Spectrum raw(std::vector<double> values);

    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }
    const std::vector<double>& values() const { return v_; }
    bool is_state() const { return state_; }

    double sum() const;
    double purity() const;  // Σ λ_k²
    double min() const { return v_.empty() ? 0.0 : v_.back(); }
    double max() const { return v_.empty() ? 0.0 : v_.front(); }

private:
    Spectrum(std::vector<double> v, bool state) : v_(std::move(v)), state_(state) {}
    std::vector<double> v_;  // sorted decreasing
    bool state_ = false;
};

// Partial-sum dominance: true iff Σ_{i<k} a_i ≥ Σ_{i<k} b_i for every k
// (tolerance kMajorizeTol).  Requires equal lengths and equal totals.
bool majorizes(const Spectrum& a, const Spectrum& b);

// Von Neumann entropy in nats, with 0·log 0 := 0.  Requires a state spectrum.
double entropy(const Spectrum& s);

}  // namespace absep

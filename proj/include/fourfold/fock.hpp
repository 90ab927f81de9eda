#pragma once

#include <complex>
#include <map>
#include <string>

#include "fourfold/mode.hpp"

namespace fourfold {

// Amplitudes smaller than this are dropped when states are assembled.
inline constexpr double kAmplitudePruneTol = 1e-12;

/// Sparse number-definite bosonic state: a map from occupation vectors to
/// complex amplitudes, all with the same total photon number. Values are
/// immutable once constructed; every operation below is a pure function.
class FockState {
public:
    using TermMap = std::map<OccupationVector, std::complex<double>>;

    // Zero state of the given photon-number sector.
    explicit FockState(int photon_number = 0);

    // Prunes amplitudes below kAmplitudePruneTol; every occupation vector
    // must carry exactly `photon_number` photons.
    FockState(int photon_number, TermMap terms);

    int photon_number() const { return photon_number_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Amplitude of one occupation vector, zero when absent.
    std::complex<double> amplitude(const OccupationVector& occ) const;

private:
    int photon_number_;
    TermMap terms_;
};

/// |0>: the single empty occupation vector with amplitude one.
FockState vacuum();

/// Applies a creation operator: each |..., n, ...> picks up sqrt(n + 1) and
/// one more photon on `mode`. The result is generally unnormalized.
FockState apply_creation(const FockState& state, const Mode& mode);

/// <s1|s2>. States from different photon-number sectors are orthogonal.
std::complex<double> inner_product(const FockState& s1, const FockState& s2);

double norm(const FockState& state);

/// Scales the state to unit norm. Throws ZeroStateError when the norm is
/// below the pruning tolerance.
FockState normalize(const FockState& state);

/// Multiplies by a unit-modulus scalar so the amplitude of the first stored
/// occupation vector (canonical ordering) is real and positive. Idempotent.
/// Throws ZeroStateError on the zero state.
FockState canonical_phase(const FockState& state);

/// Four-photon state emitted by a second-order two-mode down-conversion
/// source on spatial modes `a1` and `a2`: the normalized square of the
/// polarization-singlet pair-creation operator. Exactly three terms.
FockState pdc_second_order(const std::string& a1, const std::string& a2);

// Linear combinations stay inside one photon-number sector.
FockState operator*(std::complex<double> scale, const FockState& state);
FockState operator+(const FockState& lhs, const FockState& rhs);
FockState operator-(const FockState& lhs, const FockState& rhs);

} // namespace fourfold

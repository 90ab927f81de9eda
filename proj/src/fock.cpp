#include "fourfold/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "fourfold/errors.hpp"

namespace fourfold {

FockState::FockState(int photon_number) : photon_number_(photon_number) {
    if (photon_number < 0) {
        throw std::invalid_argument("photon number must be non-negative");
    }
}

FockState::FockState(int photon_number, TermMap terms) : FockState(photon_number) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.total() != photon_number) {
            throw std::invalid_argument("occupation " + it->first.to_string() + " does not carry " +
                                        std::to_string(photon_number) + " photons");
        }
        if (std::abs(it->second) < kAmplitudePruneTol) {
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    terms_ = std::move(terms);
}

std::complex<double> FockState::amplitude(const OccupationVector& occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

FockState vacuum() {
    return {0, {{OccupationVector{}, {1.0, 0.0}}}};
}

FockState apply_creation(const FockState& state, const Mode& mode) {
    FockState::TermMap raised;
    for (const auto& [occ, amp] : state.terms()) {
        double ladder = std::sqrt(static_cast<double>(occ.count(mode)) + 1.0);
        raised.emplace(occ.with_added(mode), ladder * amp);
    }
    return {state.photon_number() + 1, std::move(raised)};
}

std::complex<double> inner_product(const FockState& s1, const FockState& s2) {
    if (s1.photon_number() != s2.photon_number()) {
        return {0.0, 0.0};
    }
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [occ, amp] : s1.terms()) {
        sum += std::conj(amp) * s2.amplitude(occ);
    }
    return sum;
}

double norm(const FockState& state) {
    return std::sqrt(inner_product(state, state).real());
}

FockState normalize(const FockState& state) {
    double n = norm(state);
    if (n < kAmplitudePruneTol) {
        throw ZeroStateError("cannot normalize a zero state");
    }
    return {1.0 / n, state};
}

FockState canonical_phase(const FockState& state) {
    if (state.is_zero()) {
        throw ZeroStateError("cannot fix the phase of a zero state");
    }
    std::complex<double> pivot = state.terms().begin()->second;
    std::complex<double> rotation = std::abs(pivot) / pivot;
    return {rotation, state};
}

FockState pdc_second_order(const std::string& a1, const std::string& a2) {
    if (a1.empty() || a2.empty()) {
        throw ModeError("source requires non-empty spatial labels");
    }
    if (a1 == a2) {
        throw ModeError("source requires two distinct spatial modes, got '" + a1 + "' twice");
    }
    FockState pair_plus = apply_creation(apply_creation(vacuum(), {a1, Pol::H}), {a2, Pol::V});
    FockState pair_minus = apply_creation(apply_creation(vacuum(), {a1, Pol::V}), {a2, Pol::H});
    FockState singlet_pair = pair_plus - pair_minus;

    FockState squared(4);
    for (const auto& [occ, amp] : singlet_pair.terms()) {
        FockState lifted = singlet_pair;
        for (const auto& [mode, n] : occ.counts()) {
            for (int k = 0; k < n; ++k) {
                lifted = apply_creation(lifted, mode);
            }
        }
        squared = squared + (amp * lifted);
    }
    return {1.0 / (2.0 * std::sqrt(3.0)), squared};
}

FockState operator*(std::complex<double> scale, const FockState& state) {
    FockState::TermMap scaled;
    for (const auto& [occ, amp] : state.terms()) {
        scaled.emplace(occ, scale * amp);
    }
    return {state.photon_number(), std::move(scaled)};
}

FockState operator+(const FockState& lhs, const FockState& rhs) {
    if (lhs.is_zero()) {
        return rhs;
    }
    if (rhs.is_zero()) {
        return lhs;
    }
    if (lhs.photon_number() != rhs.photon_number()) {
        throw std::invalid_argument("cannot superpose states from different photon-number sectors");
    }
    FockState::TermMap sum = lhs.terms();
    for (const auto& [occ, amp] : rhs.terms()) {
        sum[occ] += amp;
    }
    return {lhs.photon_number(), std::move(sum)};
}

FockState operator-(const FockState& lhs, const FockState& rhs) {
    return lhs + (std::complex<double>{-1.0, 0.0} * rhs);
}

} // namespace fourfold

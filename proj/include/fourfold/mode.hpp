#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace fourfold {

// Polarization of a spatial mode. H orders before V; together with the
// lexicographic order on spatial labels this fixes the canonical channel
// ordering used for all matrices, tensor indices, and file output.
enum class Pol : std::uint8_t { H = 0, V = 1 };

inline char to_char(Pol p) { return p == Pol::H ? 'H' : 'V'; }

// One polarization-resolved optical channel, e.g. ("d1", V).
struct Mode {
    std::string spatial;
    Pol pol = Pol::H;

    friend auto operator<=>(const Mode&, const Mode&) = default;
};

inline Mode hpol(std::string spatial) { return {std::move(spatial), Pol::H}; }
inline Mode vpol(std::string spatial) { return {std::move(spatial), Pol::V}; }

std::string to_string(const Mode& mode);

// Photon counts per channel. Zero counts are never stored, so equal
// occupations compare equal and map lookups are canonical.
class OccupationVector {
public:
    using CountMap = std::map<Mode, int>;

    OccupationVector() = default;
    OccupationVector(std::initializer_list<std::pair<Mode, int>> counts);

    int count(const Mode& mode) const;
    int total() const;
    bool empty() const { return counts_.empty(); }
    const CountMap& counts() const { return counts_; }

    // Returns a copy with `delta` photons added on `mode`; the resulting
    // count must be non-negative.
    OccupationVector with_added(const Mode& mode, int delta = 1) const;

    // Total photons in one spatial mode, both polarizations.
    int spatial_count(const std::string& spatial) const;

    friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;

    std::string to_string() const;

private:
    CountMap counts_;
};

} // namespace fourfold

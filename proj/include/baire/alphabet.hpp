#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "baire/common.hpp"

namespace baire {

// Letters are bit-vectors over named tracks, indexed lexicographically with the
// first track as most significant bit. Symbolic alphabets name their letters.
class Alphabet {
public:
    Alphabet() = default;
    static Alphabet tracks(std::vector<std::string> names);
    static Alphabet symbols(std::vector<std::string> names);

    std::size_t size() const;
    bool symbolic() const { return !symbols_.empty(); }
    const std::vector<std::string>& track_names() const { return tracks_; }
    const std::vector<std::string>& symbol_names() const { return symbols_; }
    std::size_t track_count() const { return tracks_.size(); }
    std::optional<std::size_t> track_index(std::string_view name) const;

    bool bit(LetterId a, std::size_t track) const;
    LetterId from_bits(const std::vector<bool>& bits) const;
    std::string letter_name(LetterId a) const;
    std::optional<LetterId> parse_letter(std::string_view text) const;
    void check_letter(LetterId a) const;

    // Header form used by the text format: `X Y` or `{0,1,R}`.
    std::string describe() const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> tracks_;
    std::vector<std::string> symbols_;
};

// Splits a track alphabet into parameter tracks (leading) and quantified
// tracks (trailing).
struct TrackSplit {
    Alphabet sigma;
    Alphabet gamma;
    std::size_t gamma_bits = 0;

    LetterId combine(LetterId a, LetterId b) const { return (a << gamma_bits) | b; }
};

TrackSplit split_tracks(const Alphabet& full, std::size_t quantified);
TrackSplit split_tracks(const Alphabet& full, const std::vector<std::string>& quantified);

// Maps each letter of `to` to the letter of `from` obtained by dropping or
// zero-filling tracks by name. Tracks of `from` must be a subset of `to`.
std::vector<LetterId> restrict_letters(const Alphabet& to, const Alphabet& from);

}  // namespace baire

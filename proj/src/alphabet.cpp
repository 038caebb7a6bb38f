#include "baire/alphabet.hpp"

#include <algorithm>
#include <set>

namespace baire {

Alphabet Alphabet::tracks(std::vector<std::string> names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw Error("empty track name");
        if (!seen.insert(n).second) throw Error("duplicate track name '" + n + "'");
    }
    if (names.size() > 20) throw Error("too many tracks");
    Alphabet a;
    a.tracks_ = std::move(names);
    return a;
}

Alphabet Alphabet::symbols(std::vector<std::string> names) {
    if (names.empty()) throw Error("symbolic alphabet needs at least one letter");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw Error("empty letter name");
        if (!seen.insert(n).second) throw Error("duplicate letter '" + n + "'");
    }
    Alphabet a;
    a.symbols_ = std::move(names);
    return a;
}

std::size_t Alphabet::size() const {
    if (symbolic()) return symbols_.size();
    return std::size_t{1} << tracks_.size();
}

std::optional<std::size_t> Alphabet::track_index(std::string_view name) const {
    for (std::size_t i = 0; i < tracks_.size(); ++i)
        if (tracks_[i] == name) return i;
    return std::nullopt;
}

bool Alphabet::bit(LetterId a, std::size_t track) const {
    return (a >> (tracks_.size() - 1 - track)) & 1u;
}

LetterId Alphabet::from_bits(const std::vector<bool>& bits) const {
    if (bits.size() != tracks_.size()) throw Error("bit-vector length does not match track count");
    LetterId a = 0;
    for (bool b : bits) a = (a << 1) | (b ? 1u : 0u);
    return a;
}

std::string Alphabet::letter_name(LetterId a) const {
    check_letter(a);
    if (symbolic()) return symbols_[a];
    if (tracks_.empty()) return "-";
    std::string s;
    for (std::size_t t = 0; t < tracks_.size(); ++t) s += bit(a, t) ? '1' : '0';
    return s;
}

std::optional<LetterId> Alphabet::parse_letter(std::string_view text) const {
    if (symbolic()) {
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i] == text) return static_cast<LetterId>(i);
        return std::nullopt;
    }
    if (tracks_.empty()) {
        if (text == "-") return 0;
        return std::nullopt;
    }
    if (text.size() != tracks_.size()) return std::nullopt;
    LetterId a = 0;
    for (char c : text) {
        if (c != '0' && c != '1') return std::nullopt;
        a = (a << 1) | (c == '1' ? 1u : 0u);
    }
    return a;
}

void Alphabet::check_letter(LetterId a) const {
    if (a >= size()) throw Error("letter index " + std::to_string(a) + " out of alphabet");
}

std::string Alphabet::describe() const {
    if (symbolic()) {
        std::string s = "{";
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i) s += ",";
            s += symbols_[i];
        }
        return s + "}";
    }
    std::string s;
    for (std::size_t i = 0; i < tracks_.size(); ++i) {
        if (i) s += " ";
        s += tracks_[i];
    }
    return s;
}

TrackSplit split_tracks(const Alphabet& full, std::size_t quantified) {
    if (full.symbolic()) throw Error("alphabet not factorable: symbolic letters");
    if (quantified == 0 || quantified > full.track_count())
        throw Error("alphabet not factorable: need between 1 and " + std::to_string(full.track_count()) +
                    " quantified tracks");
    const auto& names = full.track_names();
    std::size_t k = names.size() - quantified;
    TrackSplit s;
    s.sigma = Alphabet::tracks({names.begin(), names.begin() + static_cast<std::ptrdiff_t>(k)});
    s.gamma = Alphabet::tracks({names.begin() + static_cast<std::ptrdiff_t>(k), names.end()});
    s.gamma_bits = quantified;
    return s;
}

TrackSplit split_tracks(const Alphabet& full, const std::vector<std::string>& quantified) {
    if (full.symbolic()) throw Error("alphabet not factorable: symbolic letters");
    const auto& names = full.track_names();
    if (quantified.empty() || quantified.size() > names.size())
        throw Error("alphabet not factorable: bad quantified track list");
    std::size_t k = names.size() - quantified.size();
    for (std::size_t i = 0; i < quantified.size(); ++i)
        if (names[k + i] != quantified[i])
            throw Error("alphabet not factorable: quantified tracks must be the trailing tracks in order");
    return split_tracks(full, quantified.size());
}

std::vector<LetterId> restrict_letters(const Alphabet& to, const Alphabet& from) {
    if (to.symbolic() || from.symbolic()) {
        if (to == from) {
            std::vector<LetterId> id(to.size());
            for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<LetterId>(i);
            return id;
        }
        throw Error("cannot relate symbolic alphabets");
    }
    std::vector<std::size_t> pos;
    for (const auto& name : from.track_names()) {
        auto i = to.track_index(name);
        if (!i) throw Error("track '" + name + "' missing from target alphabet");
        pos.push_back(*i);
    }
    std::vector<LetterId> out(to.size());
    for (LetterId a = 0; a < to.size(); ++a) {
        std::vector<bool> bits;
        for (auto p : pos) bits.push_back(to.bit(a, p));
        out[a] = from.from_bits(bits);
    }
    return out;
}

}  // namespace baire

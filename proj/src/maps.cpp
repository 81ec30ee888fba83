#include "homomesy/maps.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "homomesy/codes.hpp"
#include "homomesy/errors.hpp"

namespace homomesy {

namespace {

Permutation lehmer_rotation(const Permutation& p) {
    Code code = lehmer_encode(p);
    const int n = static_cast<int>(code.size());
    // Entry i (0-based) lives in 0..n-1-i; rotate it one step around its own
    // cyclic group of size n-i.  The last entry's group is trivial.
    for (int i = 0; i < n; ++i)
        code[static_cast<std::size_t>(i)] = (code[static_cast<std::size_t>(i)] + 1) % (n - i);
    return lehmer_decode(code);
}

Permutation lehmer_rotation_inverse(const Permutation& p) {
    Code code = lehmer_encode(p);
    const int n = static_cast<int>(code.size());
    for (int i = 0; i < n; ++i)
        code[static_cast<std::size_t>(i)] =
            (code[static_cast<std::size_t>(i)] + (n - i) - 1) % (n - i);
    return lehmer_decode(code);
}

// Grow the image one letter at a time.  Appending the next letter a to the
// word w: mark every letter of w bigger than a when w ends with a letter
// bigger than a, every letter smaller than a otherwise (the final letter of
// w is marked either way); the marks close blocks, each block rotates one
// step right, and a is appended.
Permutation foata(const Permutation& p) {
    const std::vector<int>& line = p.line();
    std::vector<int> word{line[0]};
    for (std::size_t k = 1; k < line.size(); ++k) {
        const int a = line[k];
        const bool mark_bigger = word.back() > a;
        std::vector<int> next;
        next.reserve(word.size() + 1);
        std::size_t block_begin = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            const bool marked = mark_bigger ? word[i] > a : word[i] < a;
            if (!marked) continue;
            // Block block_begin..i rotates right: last letter moves to front.
            next.push_back(word[i]);
            for (std::size_t j = block_begin; j < i; ++j) next.push_back(word[j]);
            block_begin = i + 1;
        }
        next.push_back(a);
        word = std::move(next);
    }
    return Permutation(std::move(word));
}

// Undo one growth step at a time: the last letter a of the current word was
// the appended one; in the remainder the block leaders are exactly the
// letters on the same side of a as the first letter, and each block rotates
// one step left.
Permutation foata_inverse(const Permutation& p) {
    std::vector<int> word = p.line();
    std::vector<int> recovered(word.size());
    for (std::size_t k = word.size(); k >= 2; --k) {
        const int a = word.back();
        recovered[k - 1] = a;
        word.pop_back();
        const bool lead_bigger = word.front() > a;
        std::vector<int> previous;
        previous.reserve(word.size());
        std::size_t i = 0;
        while (i < word.size()) {
            std::size_t next_lead = i + 1;
            while (next_lead < word.size()) {
                const bool leads = lead_bigger ? word[next_lead] > a : word[next_lead] < a;
                if (leads) break;
                ++next_lead;
            }
            // Block i..next_lead-1 rotates left: leader moves to the back.
            for (std::size_t j = i + 1; j < next_lead; ++j) previous.push_back(word[j]);
            previous.push_back(word[i]);
            i = next_lead;
        }
        word = std::move(previous);
    }
    recovered[0] = word.front();
    return Permutation(std::move(recovered));
}

Permutation lcode_to_mcode(const Permutation& p) { return major_decode(lehmer_encode(p)); }

Permutation mcode_to_lcode(const Permutation& p) { return lehmer_decode(major_encode(p)); }

Permutation kreweras(const Permutation& p) {
    return Permutation::long_cycle(p.degree()).compose(p.inverse());
}

Permutation kreweras_inverse(const Permutation& p) {
    return p.inverse().compose(Permutation::long_cycle(p.degree()));
}

const std::vector<MapInfo>& registry_storage() {
    static const std::vector<MapInfo> registry = {
        {MapId::LcodeToMcode, 62, "lcode_to_mcode", "Lehmer code read as a major code"},
        {MapId::Reverse, 64, "reverse", "reverse of the one-line notation"},
        {MapId::Foata, 67, "foata", "Foata transform (major index to inversions)"},
        {MapId::Complement, 69, "complement", "value complement"},
        {MapId::McodeToLcode, 73, "mcode_to_lcode", "major code read as a Lehmer code"},
        {MapId::Kreweras, 88, "kreweras", "Kreweras complement (long cycle after inverse)"},
        {MapId::KrewerasInverse, 89, "kreweras_inverse", "inverse Kreweras complement"},
        {MapId::LehmerRotation, 149, "lehmer_rotation", "cyclic rotation of the Lehmer code"},
        {MapId::FoataInverse, 175, "foata_inverse", "inverse Foata transform"},
        {MapId::Inverse, 0, "inverse_map", "group inverse"},
    };
    return registry;
}

}  // namespace

const std::vector<MapInfo>& map_registry() { return registry_storage(); }

const MapInfo& map_info(MapId id) {
    for (const auto& info : registry_storage())
        if (info.id == id) return info;
    throw std::logic_error("map id missing from registry");
}

const MapInfo* find_map(const std::string& key) {
    if (key.empty()) return nullptr;
    std::string k = key;
    if (k.size() > 2 && k[0] == 'M' && k[1] == 'p') k = k.substr(2);
    if (std::all_of(k.begin(), k.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const int number = std::stoi(k);
        if (number == 0) return nullptr;  // 0 is the sentinel for the plain inverse
        for (const auto& info : registry_storage())
            if (info.number == number) return &info;
        return nullptr;
    }
    if (k == "inverse") k = "inverse_map";
    for (const auto& info : registry_storage())
        if (info.name == k) return &info;
    return nullptr;
}

Permutation apply_map(MapId id, const Permutation& p) {
    switch (id) {
        case MapId::LehmerRotation: return lehmer_rotation(p);
        case MapId::Reverse: return p.reverse();
        case MapId::Complement: return p.complement();
        case MapId::Foata: return foata(p);
        case MapId::FoataInverse: return foata_inverse(p);
        case MapId::LcodeToMcode: return lcode_to_mcode(p);
        case MapId::McodeToLcode: return mcode_to_lcode(p);
        case MapId::Kreweras: return kreweras(p);
        case MapId::KrewerasInverse: return kreweras_inverse(p);
        case MapId::Inverse: return p.inverse();
    }
    throw std::logic_error("unhandled map id");
}

Permutation apply_map_inverse(MapId id, const Permutation& p) {
    switch (id) {
        case MapId::LehmerRotation: return lehmer_rotation_inverse(p);
        case MapId::Reverse: return p.reverse();
        case MapId::Complement: return p.complement();
        case MapId::Foata: return foata_inverse(p);
        case MapId::FoataInverse: return foata(p);
        case MapId::LcodeToMcode: return mcode_to_lcode(p);
        case MapId::McodeToLcode: return lcode_to_mcode(p);
        case MapId::Kreweras: return kreweras_inverse(p);
        case MapId::KrewerasInverse: return kreweras(p);
        case MapId::Inverse: return p.inverse();
    }
    throw std::logic_error("unhandled map id");
}

Permutation kreweras_power(const Permutation& p, long j) {
    const int n = p.degree();
    // Wrap an arbitrary integer into 1..n.
    auto wrap = [n](long x) { return static_cast<int>(((x - 1) % n + n) % n + 1); };
    std::vector<int> line(static_cast<std::size_t>(n));
    if (j % 2 == 0) {
        // Even powers shift positions down and values up by j/2: the long
        // cycle and the inverse cancel in pairs.
        const long h = j / 2;
        for (int i = 1; i <= n; ++i)
            line[static_cast<std::size_t>(i - 1)] = wrap(p(wrap(i - h)) + h);
    } else {
        // Odd powers leave a single inverse behind.
        const long h = (j - 1) / 2;  // exact: j - 1 is even
        const Permutation inv = p.inverse();
        for (int i = 1; i <= n; ++i)
            line[static_cast<std::size_t>(i - 1)] = wrap(inv(wrap(i - h)) + h + 1);
    }
    return Permutation(std::move(line));
}

}  // namespace homomesy

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chordal {

enum class passage : std::uint8_t { over, under };

inline passage opposite(passage p) { return p == passage::over ? passage::under : passage::over; }

// One letter of a Gauss word: a chord endpoint or a bar.
struct token {
    bool bar = false;
    int label = 0;
    passage pass = passage::over;
    int sign = 1;

    static token make_bar() { return token{true, 0, passage::over, 1}; }
    static token end(int label, passage p, int sign) { return token{false, label, p, sign}; }

    bool is_over() const { return !bar && pass == passage::over; }
    bool is_under() const { return !bar && pass == passage::under; }
    std::string to_string() const;

    friend bool operator==(const token& a, const token& b)
    {
        if (a.bar || b.bar) return a.bar == b.bar;
        return a.label == b.label && a.pass == b.pass && a.sign == b.sign;
    }
};

struct position {
    std::size_t comp = 0;
    std::size_t offset = 0;
    friend bool operator==(const position& a, const position& b) = default;
};

struct chord {
    int label = 0;
    position over;
    position under;
    int sign = 1;
};

class gauss_diagram {
public:
    // The unknot: one component without tokens.
    gauss_diagram();
    // Validates labels; throws parse_error on a malformed chord table.
    explicit gauss_diagram(std::vector<std::vector<token>> components);

    const std::vector<std::vector<token>>& components() const { return comps_; }
    const std::vector<token>& component(std::size_t i) const { return comps_.at(i); }
    std::size_t component_count() const { return comps_.size(); }
    const token& at(position p) const { return comps_.at(p.comp).at(p.offset); }
    position next(position p) const;
    position prev(position p) const;
    bool adjacent(position a, position b) const;  // b directly follows a

    // Sorted by label.
    const std::vector<chord>& chords() const { return chords_; }
    const chord& chord_of(int label) const;
    bool has_chord(int label) const;
    std::size_t chord_count() const { return chords_.size(); }
    std::size_t bar_count() const { return bars_; }
    std::size_t token_count() const;
    int next_label() const;
    bool is_knot() const { return comps_.size() == 1; }

private:
    std::vector<std::vector<token>> comps_;
    std::vector<chord> chords_;
    std::size_t bars_ = 0;
};

// Rotation- and relabeling-invariant identity of a diagram.
std::vector<std::int64_t> canonical_key(const gauss_diagram& d);
bool operator==(const gauss_diagram& a, const gauss_diagram& b);
inline bool operator!=(const gauss_diagram& a, const gauss_diagram& b) { return !(a == b); }

gauss_diagram parse_gauss_code(const std::string& text);
// Each component at its minimal rotation, components joined by " / ".
std::string serialize(const gauss_diagram& d);
std::string to_json_string(const gauss_diagram& d);
gauss_diagram from_json_string(const std::string& text);

gauss_diagram mirror(const gauss_diagram& d);
gauss_diagram reverse(const gauss_diagram& d);
gauss_diagram crossing_change(const gauss_diagram& d, int label);
gauss_diagram delete_chord(const gauss_diagram& d, int label);
int writhe(const gauss_diagram& d);

// Forgets sign and passage. Labels are kept so chords stay identifiable.
struct flat_token {
    bool bar = false;
    int label = 0;
    friend bool operator==(const flat_token& a, const flat_token& b) = default;
};

struct flat_diagram {
    std::vector<std::vector<flat_token>> components;
    std::string to_string() const;
};

flat_diagram flat_projection(const gauss_diagram& d);

// Normal form over rotation, component order and relabeling; with
// allow_reversal each component may also be read backwards.
flat_diagram canonical_flat(const flat_diagram& f, bool allow_reversal);

// Throws diagram_error unless d has one component and no bars.
void require_virtual_knot(const gauss_diagram& d, const char* what);

} // namespace chordal

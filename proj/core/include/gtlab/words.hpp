#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtlab {

// A letter of the free group on x1..xn: +i encodes xi, -i encodes xi^-1.
using Letter = std::int32_t;

inline Letter inv(Letter l) { return -l; }
inline int gen_of(Letter l) { return l > 0 ? l : -l; }

// Letter order: x1 < x1^-1 < x2 < x2^-1 < ...
inline bool letter_less(Letter a, Letter b) {
    if (gen_of(a) != gen_of(b)) return gen_of(a) < gen_of(b);
    return a > 0 && b < 0;
}

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Freely reduced word in x1..xn.
class GroupWord {
public:
    GroupWord() = default;
    // Reduces on construction; throws InputError on a generator index
    // outside 1..n (n == 0 skips the range check).
    explicit GroupWord(std::vector<Letter> letters, int n_gens = 0);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& rhs) const;
    GroupWord pow(int k) const;

    // Sum of exponents of generator i (1-based).
    long exponent_sum(int i) const;
    int max_generator() const;

    auto operator<=>(const GroupWord& rhs) const = default;

private:
    std::vector<Letter> letters_;
};

// Cyclically reduced word stored in its lexicographically minimal rotation;
// canonical representative of a conjugacy class.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(const GroupWord& w);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    // Some linear representative of the class.
    GroupWord representative() const { return GroupWord(letters_); }
    long exponent_sum(int i) const { return representative().exponent_sum(i); }
    int max_generator() const { return representative().max_generator(); }

    auto operator<=>(const CyclicWord& rhs) const = default;

private:
    friend CyclicWord cyclic_canonical(const GroupWord&);
    std::vector<Letter> letters_;
};

// Canonicalization of a conjugacy class.
CyclicWord cyclic_canonical(const GroupWord& w);

// Word syntax: whitespace-separated "x<i>" and "x<i>^-1" tokens.
// "1" denotes the empty word. Errors name the offending token and position.
GroupWord parse_word(const std::string& text, int n_gens = 0);
std::string format_word(const GroupWord& w);
std::string format_word(const CyclicWord& w);

}  // namespace gtlab

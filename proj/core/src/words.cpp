#include "gtlab/words.hpp"

#include <algorithm>
#include <sstream>

namespace gtlab {

namespace {

std::vector<Letter> reduce(std::vector<Letter> in) {
    std::vector<Letter> out;
    out.reserve(in.size());
    for (Letter l : in) {
        if (!out.empty() && out.back() == inv(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

bool word_lex_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        letter_less);
}

}  // namespace

GroupWord::GroupWord(std::vector<Letter> letters, int n_gens) {
    for (std::size_t k = 0; k < letters.size(); ++k) {
        Letter l = letters[k];
        if (l == 0 || (n_gens > 0 && gen_of(l) > n_gens))
            throw InputError("generator index out of range at letter " +
                             std::to_string(k + 1));
    }
    letters_ = reduce(std::move(letters));
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> r(letters_.rbegin(), letters_.rend());
    for (Letter& l : r) l = inv(l);
    return GroupWord(std::move(r));
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return GroupWord(std::move(cat));
}

GroupWord GroupWord::pow(int k) const {
    GroupWord base = k >= 0 ? *this : inverse();
    GroupWord acc;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) acc = acc * base;
    return acc;
}

long GroupWord::exponent_sum(int i) const {
    long s = 0;
    for (Letter l : letters_) {
        if (l == i) ++s;
        if (l == -i) --s;
    }
    return s;
}

int GroupWord::max_generator() const {
    int m = 0;
    for (Letter l : letters_) m = std::max(m, gen_of(l));
    return m;
}

CyclicWord::CyclicWord(const GroupWord& w) { *this = cyclic_canonical(w); }

CyclicWord cyclic_canonical(const GroupWord& w) {
    std::vector<Letter> v = w.letters();
    // Cyclic reduction: strip matching first/last letters.
    while (v.size() >= 2 && v.front() == inv(v.back())) {
        v.erase(v.begin());
        v.pop_back();
    }
    // Minimal rotation under the letter order.
    if (!v.empty()) {
        std::vector<Letter> best = v;
        std::vector<Letter> cur = v;
        for (std::size_t r = 1; r < v.size(); ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (word_lex_less(cur, best)) best = cur;
        }
        v = best;
    }
    CyclicWord out;
    out.letters_ = std::move(v);
    return out;
}

GroupWord parse_word(const std::string& text, int n_gens) {
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::string tok;
    int pos = 0;
    while (in >> tok) {
        ++pos;
        if (tok == "1" && letters.empty() && pos == 1) continue;
        bool invert = false;
        std::string body = tok;
        if (auto c = body.find('^'); c != std::string::npos) {
            std::string e = body.substr(c + 1);
            body = body.substr(0, c);
            if (e != "-1")
                throw InputError("bad exponent '" + e + "' in token " +
                                 std::to_string(pos) + " ('" + tok + "')");
            invert = true;
        }
        if (body.size() < 2 || body[0] != 'x' ||
            body.find_first_not_of("0123456789", 1) != std::string::npos)
            throw InputError("bad word token " + std::to_string(pos) + " ('" +
                             tok + "')");
        int idx = std::stoi(body.substr(1));
        if (idx < 1 || (n_gens > 0 && idx > n_gens))
            throw InputError("generator index out of range in token " +
                             std::to_string(pos) + " ('" + tok + "')");
        letters.push_back(invert ? -idx : idx);
    }
    return GroupWord(std::move(letters), n_gens);
}

namespace {
std::string format_letters(const std::vector<Letter>& v) {
    if (v.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += "x" + std::to_string(gen_of(v[i]));
        if (v[i] < 0) out += "^-1";
    }
    return out;
}
}  // namespace

std::string format_word(const GroupWord& w) { return format_letters(w.letters()); }
std::string format_word(const CyclicWord& w) { return format_letters(w.letters()); }

}  // namespace gtlab

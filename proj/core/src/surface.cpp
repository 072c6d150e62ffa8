#include "gtlab/surface.hpp"

#include <sstream>

namespace gtlab {

LoopSum& LoopSum::add(const FramedClass& c, const Rat& q) {
    if (q == 0) return *this;
    auto [it, inserted] = terms_.emplace(c, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LoopSum LoopSum::operator+(const LoopSum& rhs) const {
    LoopSum out = *this;
    for (const auto& [c, q] : rhs.terms_) out.add(c, q);
    return out;
}

LoopSum LoopSum::operator-(const LoopSum& rhs) const {
    LoopSum out = *this;
    for (const auto& [c, q] : rhs.terms_) out.add(c, -q);
    return out;
}

LoopSum LoopSum::scaled(const Rat& q) const {
    LoopSum out;
    if (q == 0) return out;
    for (const auto& [c, k] : terms_) out.terms_.emplace(c, k * q);
    return out;
}

LoopSum LoopSum::without_trivial() const {
    LoopSum out;
    for (const auto& [c, q] : terms_)
        if (!c.word.empty()) out.terms_.emplace(c, q);
    return out;
}

FramedClass r_action(const FramedClass& c, long k) {
    return FramedClass{c.word, c.rot0 + k};
}

long rot_f(const FramedClass& c, const Framing& f) {
    long r = c.rot0;
    for (std::size_t i = 0; i < f.shifts.size(); ++i)
        r += f.shifts[i] * c.word.exponent_sum(static_cast<int>(i) + 1);
    return r;
}

FramedClass s_f(const CyclicWord& w, const Framing& f) {
    long shift = 0;
    for (std::size_t i = 0; i < f.shifts.size(); ++i)
        shift += f.shifts[i] * w.exponent_sum(static_cast<int>(i) + 1);
    return FramedClass{w, -shift};
}

std::pair<CyclicWord, long> tilde_phi_f(const FramedClass& c, const Framing& f) {
    return {c.word, rot_f(c, f)};
}

TruncSeries eps_f(const LoopSum& s, const Framing& f, int n_gens, int trunc) {
    TruncSeries out(n_gens, trunc);
    for (const auto& [c, q] : s.terms()) {
        long r = rot_f(c, f);
        // exp(r * rho) truncated.
        Rat fact(1);
        Rat rk(1);
        for (int k = 0; k <= trunc; ++k) {
            if (k > 0) {
                fact *= k;
                rk *= r;
            }
            out.add_term(Mono{{}, static_cast<unsigned>(k)}, q * rk / fact);
        }
    }
    return out;
}

FramedClass parse_loop_literal(const std::string& text, int n_gens,
                               const TautResolver& taut) {
    auto open = text.find('{');
    auto close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close <= open)
        throw InputError("loop literal must look like '{word; rot}': '" + text +
                         "'");
    std::string body = text.substr(open + 1, close - open - 1);
    auto semi = body.find(';');
    if (semi == std::string::npos)
        throw InputError("loop literal missing ';' separator: '" + text + "'");
    GroupWord w = parse_word(body.substr(0, semi), n_gens);
    CyclicWord cw = cyclic_canonical(w);

    std::string rot_text = body.substr(semi + 1);
    // strip blanks
    std::string rt;
    for (char c : rot_text)
        if (!std::isspace(static_cast<unsigned char>(c))) rt += c;
    if (rt.empty()) throw InputError("loop literal missing rotation: '" + text + "'");

    long rot = 0;
    if (rt.rfind("taut", 0) == 0) {
        if (!taut) throw InputError("'taut' rotation not resolvable here");
        rot = taut(cw);
        std::string rest = rt.substr(4);
        if (!rest.empty()) {
            if (rest[0] != '+' && rest[0] != '-')
                throw InputError("bad rotation token '" + rt + "'");
            try {
                rot += std::stol(rest);
            } catch (const std::exception&) {
                throw InputError("bad rotation token '" + rt + "'");
            }
        }
    } else {
        try {
            rot = std::stol(rt);
        } catch (const std::exception&) {
            throw InputError("bad rotation token '" + rt + "'");
        }
    }
    return FramedClass{cw, rot};
}

std::string format_loop(const FramedClass& c) {
    return "{" + format_word(c.word) + "; " + std::to_string(c.rot0) + "}";
}

std::string format_loop_sum(const LoopSum& s) {
    if (s.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [c, q] : s.terms()) {
        if (!first) out << " + ";
        first = false;
        out << rat_str(q) << " * " << format_loop(c);
    }
    return out.str();
}

}  // namespace gtlab

#include "gtlab/series.hpp"

#include <algorithm>
#include <sstream>

namespace gtlab {

TruncSeries::TruncSeries(int n_gens, int trunc) : n_(n_gens), N_(trunc) {
    if (n_gens < 0 || trunc < 0) throw InputError("bad series parameters");
}

TruncSeries TruncSeries::one(int n, int N) {
    return constant(Rat(1), n, N);
}

TruncSeries TruncSeries::constant(const Rat& c, int n, int N) {
    TruncSeries s(n, N);
    s.add_term(Mono{}, c);
    return s;
}

TruncSeries TruncSeries::gen(int i, int n, int N) {
    if (i < 1 || i > n) throw InputError("generator index out of range 1..n");
    TruncSeries s(n, N);
    s.add_term(Mono{{static_cast<std::uint8_t>(i)}, 0}, Rat(1));
    return s;
}

TruncSeries TruncSeries::rho(int n, int N, unsigned k) {
    TruncSeries s(n, N);
    s.add_term(Mono{{}, k}, Rat(1));
    return s;
}

Rat TruncSeries::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

TruncSeries& TruncSeries::add_term(Mono m, const Rat& c) {
    if (c == 0) return *this;
    if (m.degree() > static_cast<std::size_t>(N_)) return *this;
    for (auto l : m.word)
        if (l < 1 || l > n_) throw InputError("monomial letter out of range");
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

void TruncSeries::require_compatible(const TruncSeries& rhs) const {
    if (n_ != rhs.n_ || N_ != rhs.N_)
        throw InputError("mismatched trunc_degree or generator count");
}

TruncSeries TruncSeries::operator+(const TruncSeries& rhs) const {
    require_compatible(rhs);
    TruncSeries out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& rhs) const {
    require_compatible(rhs);
    TruncSeries out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

TruncSeries TruncSeries::operator-() const { return scaled(Rat(-1)); }

TruncSeries TruncSeries::scaled(const Rat& c) const {
    TruncSeries out(n_, N_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& rhs) const {
    require_compatible(rhs);
    TruncSeries out(n_, N_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            if (ma.degree() + mb.degree() > static_cast<std::size_t>(N_)) continue;
            Mono m;
            m.word = ma.word;
            m.word.insert(m.word.end(), mb.word.begin(), mb.word.end());
            m.rho = ma.rho + mb.rho;
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

TruncSeries TruncSeries::truncated(int new_N) const {
    TruncSeries out(n_, new_N);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

TruncSeries TruncSeries::component(std::size_t d) const {
    TruncSeries out(n_, N_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) out.terms_.emplace(m, c);
    return out;
}

std::size_t TruncSeries::top_degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool TruncSeries::rho_free() const {
    for (const auto& [m, c] : terms_)
        if (m.rho != 0) return false;
    return true;
}

TruncSeries magnus_expand(const GroupWord& w, int n_gens, int trunc) {
    TruncSeries acc = TruncSeries::one(n_gens, trunc);
    for (Letter l : w.letters()) {
        int i = gen_of(l);
        TruncSeries f(n_gens, trunc);
        if (l > 0) {
            f = TruncSeries::one(n_gens, trunc) + TruncSeries::gen(i, n_gens, trunc);
        } else {
            // (1 + X_i)^-1 = sum_k (-X_i)^k
            for (int k = 0; k <= trunc; ++k) {
                Mono m;
                m.word.assign(k, static_cast<std::uint8_t>(i));
                f.add_term(std::move(m), Rat(k % 2 == 0 ? 1 : -1));
            }
        }
        acc = acc * f;
    }
    return acc;
}

TruncSeries series_log(const TruncSeries& s) {
    if (s.constant_term() != 1)
        throw InputError("series_log requires constant term 1");
    const int N = s.trunc();
    TruncSeries u = s - TruncSeries::one(s.gens(), N);
    TruncSeries out(s.gens(), N);
    TruncSeries p = TruncSeries::one(s.gens(), N);
    for (int m = 1; m <= N; ++m) {
        p = p * u;
        if (p.is_zero()) break;
        out = out + p.scaled(Rat(m % 2 == 1 ? 1 : -1, m));
    }
    return out;
}

TruncSeries series_exp(const TruncSeries& s) {
    if (s.constant_term() != 0)
        throw InputError("series_exp requires constant term 0");
    const int N = s.trunc();
    TruncSeries out = TruncSeries::one(s.gens(), N);
    TruncSeries p = TruncSeries::one(s.gens(), N);
    Rat fact(1);
    for (int m = 1; m <= N; ++m) {
        p = p * s;
        if (p.is_zero()) break;
        fact *= m;
        out = out + p.scaled(Rat(1) / fact);
    }
    return out;
}

TruncSeries bch(const TruncSeries& a, const TruncSeries& b) {
    if (a.constant_term() != 0 || b.constant_term() != 0)
        throw InputError("bch requires zero constant terms");
    return series_log(series_exp(a) * series_exp(b));
}

TruncSeries right_partial(const TruncSeries& s, int i) {
    if (!s.rho_free()) throw InputError("right_partial requires rho-free input");
    if (i < 1 || i > s.gens()) throw InputError("generator index out of range 1..n");
    TruncSeries out(s.gens(), s.trunc());
    for (const auto& [m, c] : s.terms()) {
        if (m.word.empty() || m.word.back() != i) continue;
        Mono r = m;
        r.word.pop_back();
        out.add_term(std::move(r), c);
    }
    return out;
}

TruncSeries dynkin_left_bracket(const TruncSeries& s) {
    if (!s.rho_free()) throw InputError("dynkin map requires rho-free input");
    TruncSeries out(s.gens(), s.trunc());
    for (const auto& [m, c] : s.terms()) {
        if (m.word.empty()) continue;
        // acc = X_{i1}; acc <- [acc, X_{ik}] iteratively.
        TruncSeries acc = TruncSeries::gen(m.word[0], s.gens(), s.trunc());
        for (std::size_t k = 1; k < m.word.size(); ++k) {
            TruncSeries x = TruncSeries::gen(m.word[k], s.gens(), s.trunc());
            acc = acc * x - x * acc;
        }
        out = out + acc.scaled(c);
    }
    return out;
}

bool is_lie_element(const TruncSeries& s) {
    if (!s.rho_free()) return false;
    if (s.constant_term() != 0) return false;
    for (std::size_t d = 1; d <= s.top_degree(); ++d) {
        TruncSeries comp = s.component(d);
        if (dynkin_left_bracket(comp) != comp.scaled(Rat(static_cast<long>(d))))
            return false;
    }
    return true;
}

Mono necklace_canonical(Mono m) {
    if (m.word.size() > 1) {
        auto best = m.word;
        auto cur = m.word;
        for (std::size_t r = 1; r < m.word.size(); ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        m.word = best;
    }
    return m;
}

CyclicSeries::CyclicSeries(int n_gens, int trunc) : n_(n_gens), N_(trunc) {}

CyclicSeries& CyclicSeries::add_term(Mono m, const Rat& c) {
    if (c == 0) return *this;
    if (m.degree() > static_cast<std::size_t>(N_)) return *this;
    auto key = necklace_canonical(std::move(m));
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

CyclicSeries CyclicSeries::operator+(const CyclicSeries& rhs) const {
    if (n_ != rhs.n_ || N_ != rhs.N_)
        throw InputError("mismatched trunc_degree or generator count");
    CyclicSeries out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

CyclicSeries CyclicSeries::operator-(const CyclicSeries& rhs) const {
    return *this + rhs.scaled(Rat(-1));
}

CyclicSeries CyclicSeries::operator-() const { return scaled(Rat(-1)); }

CyclicSeries CyclicSeries::scaled(const Rat& c) const {
    CyclicSeries out(n_, N_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

CyclicSeries CyclicSeries::component(std::size_t d) const {
    CyclicSeries out(n_, N_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) out.terms_.emplace(m, c);
    return out;
}

CyclicSeries CyclicSeries::truncated(int new_N) const {
    CyclicSeries out(n_, new_N);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

CyclicSeries CyclicSeries::without_trivial() const {
    CyclicSeries out(n_, N_);
    for (const auto& [m, c] : terms_)
        if (!m.word.empty()) out.terms_.emplace(m, c);
    return out;
}

CyclicSeries CyclicSeries::rho_zero() const {
    CyclicSeries out(n_, N_);
    for (const auto& [m, c] : terms_)
        if (m.rho == 0) out.terms_.emplace(m, c);
    return out;
}

CyclicSeries cyclic_project(const TruncSeries& s) {
    CyclicSeries out(s.gens(), s.trunc());
    for (const auto& [m, c] : s.terms()) out.add_term(m, c);
    return out;
}

TensorSeries TensorSeries::tensor_of(const TruncSeries& a, const TruncSeries& b) {
    if (a.gens() != b.gens() || a.trunc() != b.trunc())
        throw InputError("mismatched tensor factors");
    if (!a.rho_free() || !b.rho_free())
        throw InputError("tensor factors must be rho-free");
    TensorSeries out(a.gens(), a.trunc());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(ma, mb, ca * cb);
    return out;
}

TensorSeries& TensorSeries::add_term(Mono a, Mono b, const Rat& c) {
    if (c == 0) return *this;
    if (a.degree() + b.degree() > static_cast<std::size_t>(N_)) return *this;
    auto key = std::make_pair(std::move(a), std::move(b));
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

TensorSeries TensorSeries::operator+(const TensorSeries& rhs) const {
    TensorSeries out = *this;
    if (out.n_ == 0 && out.N_ == 0) { out.n_ = rhs.n_; out.N_ = rhs.N_; }
    for (const auto& [m, c] : rhs.terms_) out.add_term(m.first, m.second, c);
    return out;
}

TensorSeries TensorSeries::operator-(const TensorSeries& rhs) const {
    TensorSeries out = *this;
    if (out.n_ == 0 && out.N_ == 0) { out.n_ = rhs.n_; out.N_ = rhs.N_; }
    for (const auto& [m, c] : rhs.terms_) out.add_term(m.first, m.second, -c);
    return out;
}

TensorSeries coproduct(const TruncSeries& s) {
    if (!s.rho_free()) throw InputError("coproduct requires rho-free input");
    TensorSeries out(s.gens(), s.trunc());
    for (const auto& [m, c] : s.terms()) {
        // Delta(X_i) = X_i(x)1 + 1(x)X_i + X_i(x)X_i, multiplied out along
        // the word.
        std::vector<std::pair<std::pair<Mono, Mono>, Rat>> acc;
        acc.push_back({{Mono{}, Mono{}}, c});
        for (auto l : m.word) {
            std::vector<std::pair<std::pair<Mono, Mono>, Rat>> next;
            next.reserve(acc.size() * 3);
            for (const auto& [pm, pc] : acc) {
                for (int choice = 0; choice < 3; ++choice) {
                    auto key = pm;
                    if (choice == 0 || choice == 2) key.first.word.push_back(l);
                    if (choice == 1 || choice == 2) key.second.word.push_back(l);
                    if (key.first.degree() + key.second.degree() >
                        static_cast<std::size_t>(s.trunc()))
                        continue;
                    next.push_back({std::move(key), pc});
                }
            }
            acc = std::move(next);
        }
        for (auto& [key, pc] : acc) out.add_term(key.first, key.second, pc);
    }
    return out;
}

std::string format_mono(const Mono& m) {
    std::string out;
    if (m.rho > 0) {
        out += "rho";
        if (m.rho > 1) out += "^" + std::to_string(m.rho);
    }
    if (!m.word.empty()) {
        if (!out.empty()) out += " * ";
        for (std::size_t i = 0; i < m.word.size(); ++i) {
            if (i) out += '.';
            out += "X" + std::to_string(m.word[i]);
        }
    }
    return out;
}

namespace {
std::string format_terms(const std::map<Mono, Rat>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) out << " + ";
        first = false;
        std::string ms = format_mono(m);
        if (ms.empty())
            out << rat_str(c);
        else
            out << rat_str(c) << " * " << ms;
    }
    return out.str();
}
}  // namespace

std::string format_series(const TruncSeries& s) { return format_terms(s.terms()); }
std::string format_series(const CyclicSeries& s) { return format_terms(s.terms()); }

TruncSeries parse_series(const std::string& text, int n_gens, int trunc) {
    TruncSeries out(n_gens, trunc);
    std::string t = text;
    if (t == "0") return out;
    // Split on " + ".
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        auto next = t.find(" + ", pos);
        parts.push_back(t.substr(pos, next == std::string::npos
                                          ? std::string::npos
                                          : next - pos));
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    for (const auto& part : parts) {
        // coeff [* rho[^k]] [* X1.X2...]
        std::vector<std::string> factors;
        std::size_t fpos = 0;
        while (true) {
            auto next = part.find(" * ", fpos);
            factors.push_back(part.substr(
                fpos, next == std::string::npos ? std::string::npos : next - fpos));
            if (next == std::string::npos) break;
            fpos = next + 3;
        }
        if (factors.empty()) throw InputError("empty series term");
        Mono m;
        Rat c = parse_rat(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i) {
            const std::string& f = factors[i];
            if (f.rfind("rho", 0) == 0) {
                m.rho = f == "rho" ? 1u
                                   : static_cast<unsigned>(std::stoul(f.substr(4)));
            } else if (!f.empty() && f[0] == 'X') {
                std::size_t p = 0;
                while (p < f.size()) {
                    auto dot = f.find('.', p);
                    std::string x =
                        f.substr(p, dot == std::string::npos ? std::string::npos
                                                             : dot - p);
                    if (x.size() < 2 || x[0] != 'X')
                        throw InputError("bad monomial factor '" + x + "'");
                    int idx = std::stoi(x.substr(1));
                    m.word.push_back(static_cast<std::uint8_t>(idx));
                    if (dot == std::string::npos) break;
                    p = dot + 1;
                }
            } else {
                throw InputError("bad series factor '" + f + "'");
            }
        }
        out.add_term(std::move(m), c);
    }
    return out;
}

}  // namespace gtlab

#include "trichain/words.hpp"

#include <sstream>

namespace trichain {

Word Word::inverse() const {
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        out.letters.push_back({it->index, -it->exponent});
    }
    return out;
}

Word Word::operator*(const Word& rhs) const {
    Word out = *this;
    for (const Letter& l : rhs.letters) {
        if (!out.letters.empty() && out.letters.back().index == l.index &&
            out.letters.back().exponent == -l.exponent) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

Word parse_word(const std::string& text, int n) {
    Word w;
    if (text.empty()) return w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.size() < 2 || tok[0] != 'c') {
            throw DomainError("malformed word token: " + tok);
        }
        const auto caret = tok.find('^');
        int exponent = 1;
        std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        if (caret != std::string::npos) {
            const std::string e = tok.substr(caret + 1);
            if (e == "1") {
                exponent = 1;
            } else if (e == "-1") {
                exponent = -1;
            } else {
                throw DomainError("word exponents must be +-1, got: " + e);
            }
        }
        int index;
        try {
            index = std::stoi(idx);
        } catch (const std::exception&) {
            throw DomainError("malformed generator index in word token: " + tok);
        }
        if (index < 1 || index > n) {
            throw DomainError("generator index out of range in word token: " + tok);
        }
        w.letters.push_back({index - 1, exponent});
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string out;
    for (size_t k = 0; k < w.letters.size(); ++k) {
        if (k) out += '*';
        out += 'c' + std::to_string(w.letters[k].index + 1);
        if (w.letters[k].exponent == -1) out += "^-1";
    }
    return out;
}

PantsCurves make_pants_curves(int n) {
    if (n < 3) throw DomainError("puncture count must be at least 3");
    PantsCurves pc;
    pc.n = n;
    for (int i = 1; i <= n - 3; ++i) {
        Word w;
        for (int j = i + 1; j >= 1; --j) {
            w.letters.push_back({j - 1, -1});
        }
        pc.b.push_back(std::move(w));
    }
    return pc;
}

Isometry evaluate(const Word& w, const std::vector<Isometry>& rep) {
    Isometry g;
    for (const Letter& l : w.letters) {
        if (l.index < 0 || l.index >= static_cast<int>(rep.size())) {
            throw DomainError("word letter index exceeds representation size");
        }
        g = g * (l.exponent == 1 ? rep[l.index] : rep[l.index].inverse());
    }
    return g;
}

}  // namespace trichain

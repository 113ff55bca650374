#pragma once

// Test-side reader for polynomial literals such as "x^2 - 1/2*y*z + 3".

#include "branchdiv/exactalg/mpoly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace testsupport {

class PolyReader {
public:
    PolyReader(branchdiv::Vars v, std::string s) : v_(std::move(v)), s_(std::move(s)) {}

    branchdiv::MPoly read() {
        auto p = sum();
        skip();
        if (i_ != s_.size()) throw std::invalid_argument("trailing input in " + s_);
        return p;
    }

private:
    branchdiv::Vars v_;
    std::string s_;
    size_t i_ = 0;

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    branchdiv::MPoly sum() {
        branchdiv::MPoly r(v_);
        bool neg = eat('-');
        if (!neg) eat('+');
        r = neg ? -product() : product();
        for (;;) {
            if (eat('+')) r += product();
            else if (eat('-')) r -= product();
            else return r;
        }
    }
    branchdiv::MPoly product() {
        auto r = power();
        while (eat('*')) r = r * power();
        return r;
    }
    branchdiv::MPoly power() {
        auto b = atom();
        if (eat('^')) {
            skip();
            size_t j = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            unsigned e = static_cast<unsigned>(std::stoul(s_.substr(j, i_ - j)));
            auto r = branchdiv::MPoly::constant(v_, branchdiv::Rational(1));
            for (unsigned k = 0; k < e; ++k) r = r * b;
            return r;
        }
        return b;
    }
    branchdiv::MPoly atom() {
        skip();
        if (eat('(')) {
            auto r = sum();
            if (!eat(')')) throw std::invalid_argument("missing ) in " + s_);
            return r;
        }
        size_t j = i_;
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/')) ++i_;
            return branchdiv::MPoly::constant(v_, branchdiv::Rational(s_.substr(j, i_ - j)));
        }
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (j == i_) throw std::invalid_argument("unexpected character in " + s_);
        return branchdiv::MPoly::variable(v_, s_.substr(j, i_ - j));
    }
};

inline branchdiv::MPoly poly(const branchdiv::Vars& v, const std::string& s) { return PolyReader(v, s).read(); }

} // namespace testsupport

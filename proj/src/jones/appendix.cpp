#include "daha/jones/appendix.hpp"

#include <cctype>
#include <stdexcept>

#include "daha/ring/poly_ops.hpp"

namespace daha {

const std::vector<AppendixTable>& appendix_polynomials() {
    static const std::vector<AppendixTable> t = {
        {"trefoil", 2, R"(J_2 = v q - t^{-1} q^{2}+( - t^{-1} + t )q^{4} -t q^{6}+ v q^{7} -v q^{9} - t^{-1} q ^{10}+( t^{-1} - t )q^{12} -v q^{15}+ t^{-1} q^{18})"},
        {"trefoil", 3, R"(J_3 = v^2 q^{2} - t^{-1} v q^{3}+( -1 + t^{-2} + t^2 )q^{4}+( -2 t^{-1} v + t v )q^{5}+( -1 + t^{-2} )q^{6}+( - t^{-1} v + t v )q^{7}+( t^{-2} + v^2 )q^{8} - t^{-1}vq^{9}+( -1 + t^{-2} )q^{10} - t^{-1} vq^{11} +t^{-2} q^{12} -t v q^{13}+( 1 - t^2 )q^{14} -t v q^{15}+( 1 - v^2 )q^{16}+( t^{-1} v - t v )q^{17}+( 1 - t^2 - v^2 )q^{18}+( 2 t^{-1} v - t v )q^{19}+( 2 - t^{-2} )q^{20}+( 2 t^{-1} v - t v )q^{21}+( - t^{-2} + t^2 - v^2 )q^{22}+( t^{-1} v - t v )q^{23}+( 2 - t^{-2} - t^2 )q^{24}+( t^{-1} v + t v )q^{25}+( - t^{-2} + t^2 - v^2 )q^{26}+ t^{-1} v q^{27} + t^{-1} v q^{29}+( 1 - t^{-2} + v^2 )q^{30}+( t^{-1} v + t v )q^{31}+( -2 + t^2 - v^2 )q^{32} - t^{-1} v q^{33}+( 1 - t^{-2} + v^2 )q^{34}+ t v q^{35}+ t v q^{37}+( -1 + t^{-2} )q^{38} - t^{-1} v q^{39}+( - t^{-2} + v^2 )q^{40}+( -1 + t^{-2} )q^{42} - t^{-1} v q^{43} - t^{-1} v q^{45}+ t^{-2} q^{48})"},
        {"torus:2", 2, R"(J_2 = v q+( - t^{-1} + t )q^{2}+( - t^{-1} + t )q^{4}+ v q^{5} -t q^{6}+ v q^{7}+( - t^{-1} + t )q^{8} -v q^{9} - t^{-1} q^{10}+ v q^{11}+( t^{-1} - t )q^{12} - t^{-1} q^{14} -v q^{15}+( t^{-1} - t )q^{18} -v q^{21}+( t^{-1} - t )q^{24} -v q^{27}+ t^{-1} q^{30})"},
        {"fig8", 2, R"(J_2 = -t q^{-10} -v q^{-7}+( t^{-1} - t )q^{-4} -v q^{-1}+ v q+( - t^{-1} + t )q^{4}+ v q^{7} - t^{-1} q^{10})"},
        {"fig8", 3, R"(J_3 = t^2 q^{-28}+ t v q^{-25}+ t v q^{-23}+( -1 + t^2 )q^{-22}+( -t^2 + v^2 )q^{-20}+ t v q^{-19}+( -1 + t^2 )q^{-18}+ - t^{-1} v q^{-17}+( -1 + t^2 )q^{-16} - t^{-1} v q^{-15}+( 1 - t^2 + v^2 )q^{-14}+ 2 t v q^{-13}+( -2 + t^{-2} + t^2 - v^2 )q^{-12} - t^{-1} v q^{-11}+ v^2 q^{-10} -t v q^{-9}+( 1 - t^2 + v^2 )q^{-8}+( -1 + t^{-2} - 2 v^2 )q^{-6}+( - t^{-1} v - t v )q^{-5}+( 2 - t^{-2} )q^{-4}+( 2 t^{-1} v - 2 t v )q^{-3}+( 2 - 2 t^2 )q^{-2}+( 2 t^{-1} v - t v )q^{-1}+( 1 - 2 v^2 )+( t^{-1} v - 2 t v )q+( 2 - 2 t^{-2} )q^{2}+( 2 t^{-1} v - 2 t v )q^{3}+( 2 - t^2 )q^{4}+( t^{-1} v + t v )q^{5}+( -1 + t^2 - 2 v^2 )q^{6}+( 1 - t^{-2} + v^2 )q^{8}+ t^{-1} v q^{9}+ v^2 q^{10}+ t v q^{11}+( -2 + t^{-2} + t^2 - v^2 )q^{12} -2 t^{-1} v q^{13}+( 1 - t^{-2} + v^2 )q^{14}+ t v q^{15}+( -1 + t^{-2} )q^{16}+ t v q^{17}+( -1 + t^{-2} )q^{18} - t^{-1} v q^{19}+( - t^{-2} + v^2 )q^{20}+( -1 + t^{-2} )q^{22} - t^{-1} v q^{23} - t^{-1} v q^{25}+ t^{-2} q^{28})"},
    };
    return t;
}

const std::vector<AppendixExpansion>& appendix_expansions() {
    static const std::vector<AppendixExpansion> e = {
        {"trefoil", 2, {
            R"(-q^2-q^6-q^{10}+q^{18})",
            R"(q^2+2 q^4-q^6+q^{10}-2 q^{12}-q^{18})",
            R"(-q^2-q^4-q^{10}+q^{12}+q^{18})",
        }},
        {"trefoil", 3, {
            R"(q^4+q^8+q^{12}+q^{16}+q^{20}-q^{32}-q^{36}-q^{40}+q^{48})",
            R"(-2 \Big(q^6+q^8+q^{10}+q^{12}+q^{14}+q^{18}-q^{20}-2 q^{22}-2 q^{26}-q^{30}-q^{32}-q^{34}+q^{38}-q^{40}+q^{42}+q^{48}\Big))",
            R"(4 q^4+3 q^6+3 q^8+3 q^{10}+3 q^{12}-q^{14}-q^{18}-3 q^{20}-2 q^{22}-4 q^{24}-2 q^{26}-3 q^{30}+q^{32}-3 q^{34}+3 q^{38}-3 q^{40}+3 q^{42}+3 q^{48})",
        }},
        {"trefoil", 4, {
            R"(-q^6-q^{10}-q^{14}-q^{18}-q^{22}-q^{26}-q^{30}+q^{46}+q^{50}+q^{54}+q^{58}+q^{62}-q^{74}-q^{78}-q^{82}+q^{90})",
            R"(q^6+2 q^8-q^{10}+4 q^{12}+3 q^{14}+2 q^{16}+3 q^{18}+3 q^{22}+4 q^{24}+q^{26}+2 q^{28}-q^{30}-2 q^{34}-4 q^{36}-2 q^{38}-8 q^{40}-4 q^{42}-6 q^{44}-3 q^{46}-6 q^{48}-3 q^{50}+q^{54}+q^{58}-q^{62}+6 q^{64}+6 q^{68}+2 q^{72}+3 q^{74}+q^{78}-2 q^{80}+3 q^{82}-2 q^{84}-3 q^{90})",
        }},
        {"torus:2", 2, {
            R"(-q^6-q^{10}-q^{14}+q^{30})",
            R"(2 q^2+2 q^4-q^6+2 q^8+q^{10}-2 q^{12}+q^{14}-2 q^{18}-2 q^{24}-q^{30})",
            R"(-q^2-q^4-q^8-q^{10}+q^{12}-q^{14}+q^{18}+q^{24}+q^{30})",
        }},
        {"torus:2", 3, {
            R"(q^{12}+q^{16}+q^{20}+q^{24}+q^{28}-q^{56}-q^{60}-q^{64}+q^{80})",
            R"(-2 \Big(q^8+q^{10}+q^{12}+2 q^{14}+q^{16}+2 q^{18}+q^{20}+q^{22}+q^{28}-q^{30}-2 q^{34}-2 q^{36}-q^{40}-q^{42}-q^{44}- \\ 2 q^{46}-q^{48}-q^{52}-2 q^{54}-q^{58}+q^{62}-q^{64}+q^{68}+q^{70}+q^{74}+q^{80}\Big))",
        }},
    };
    return e;
}

namespace {

class TvParser {
public:
    explicit TvParser(std::string s) : s_(std::move(s)) {}

    LaurentPoly run() {
        LaurentPoly r = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_tv: " + what + " at offset " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == '*')) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    bool digit() const { return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])); }

    long integer() {
        skip();
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++i_;
            skip();
        }
        if (!digit()) fail("expected digit");
        long v = 0;
        while (digit()) v = 10 * v + (s_[i_++] - '0');
        return neg ? -v : v;
    }

    int exponent() {
        if (!peek('^')) return 1;
        ++i_;
        if (peek('{')) {
            ++i_;
            const long e = integer();
            expect('}');
            return static_cast<int>(e);
        }
        // Unbraced: a signed integer in text form, a single digit in LaTeX.
        skip();
        if (peek('-')) return static_cast<int>(integer());
        if (!digit()) fail("expected exponent");
        return static_cast<int>(integer());
    }

    bool at_factor() {
        skip();
        if (i_ >= s_.size()) return false;
        const char c = s_[i_];
        return c == 'q' || c == 't' || c == 'v' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    LaurentPoly factor() {
        skip();
        const char c = s_[i_];
        LaurentPoly base;
        if (c == '(') {
            ++i_;
            base = expr();
            expect(')');
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            return LaurentPoly(integer());
        } else {
            ++i_;
            Var v = c == 'q' ? Var::q : c == 't' ? Var::t1 : Var::t2;
            if (c == 't' && i_ < s_.size() && (s_[i_] == '1' || s_[i_] == '2')) v = s_[i_++] == '1' ? Var::t1 : Var::t2;
            base = LaurentPoly::var(v);
        }
        return base.pow(exponent());
    }

    LaurentPoly term() {
        long sign = 1;
        while (peek('+') || peek('-')) sign *= s_[i_++] == '-' ? -1 : 1;
        LaurentPoly r(sign);
        if (!at_factor()) fail("expected a factor");
        while (at_factor()) r *= factor();
        return r;
    }

    LaurentPoly expr() {
        LaurentPoly r = term();
        while (peek('+') || peek('-')) r += term();
        return r;
    }

    std::string s_;
    std::size_t i_ = 0;
};

std::string clean(std::string_view src) {
    std::string s(src);
    if (auto eq = s.find('='); eq != std::string::npos) s = s.substr(eq + 1);
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.compare(i, 4, "\\Big") == 0) {
            i += 3;
            continue;
        }
        if (s.compare(i, 2, "\\\\") == 0) {
            ++i;
            continue;
        }
        if (s[i] == ',') continue;
        out += s[i];
    }
    return out;
}

}  // namespace

LaurentPoly parse_tv(std::string_view src) { return TvParser(clean(src)).run(); }

LaurentPoly expand_v(const LaurentPoly& f) {
    const auto t2 = LaurentPoly::var(Var::t2);
    return substitute(f, Var::t2, t2 - t2.pow(-1));
}

}  // namespace daha

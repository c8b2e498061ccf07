#ifndef HALLFORGE_EXPR_HPP
#define HALLFORGE_EXPR_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hallforge/serialize.hpp"

namespace hallforge {

enum class Algebra { B, Heis, Lattice, F };

inline Algebra algebra_from_string(const std::string& s) {
    if (s == "B" || s == "b") return Algebra::B;
    if (s == "heis") return Algebra::Heis;
    if (s == "lattice") return Algebra::Lattice;
    if (s == "f" || s == "F") return Algebra::F;
    throw ConfigError("unknown algebra '" + s + "' (expected B|heis|lattice|f)");
}

/// Expression AST. Generators carry their site / object name / K vector;
/// scalars are rationals or the named constants v and q.
struct ExprAst {
    enum class Kind { Rational, SymV, SymQ, GenZ, GenZSite, GenZp, GenZm, GenK, GenKm, GenX, Add, Sub, Mul, Pow, Neg };
    Kind kind;
    Rat rational{0};
    int site = 0;
    std::string name;
    K0 kvec;
    long exponent = 0;
    std::shared_ptr<ExprAst> lhs, rhs;

    static std::shared_ptr<ExprAst> make(Kind k) {
        auto p = std::make_shared<ExprAst>();
        p->kind = k;
        return p;
    }
};

using AstPtr = std::shared_ptr<ExprAst>;

inline bool ast_equal(const AstPtr& a, const AstPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    if (a->rational != b->rational || a->site != b->site || a->name != b->name ||
        a->kvec != b->kvec || a->exponent != b->exponent)
        return false;
    return ast_equal(a->lhs, b->lhs) && ast_equal(a->rhs, b->rhs);
}

// ---- parser ----

class ExprParser {
public:
    ExprParser(std::string src, Algebra target) : src_(std::move(src)), target_(target) {}

    AstPtr parse() {
        if (src_.find_first_not_of(" \t\r\n") == std::string::npos)
            throw ParseError("empty expression", 0);
        AstPtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

private:
    std::string src_;
    Algebra target_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    AstPtr expr() {
        bool neg = eat('-');
        AstPtr e = term();
        if (neg) {
            auto n = ExprAst::make(ExprAst::Kind::Neg);
            n->lhs = e;
            e = n;
        }
        while (true) {
            skip_ws();
            if (eat('+')) {
                auto n = ExprAst::make(ExprAst::Kind::Add);
                n->lhs = e;
                n->rhs = term();
                e = n;
            } else if (eat('-')) {
                auto n = ExprAst::make(ExprAst::Kind::Sub);
                n->lhs = e;
                n->rhs = term();
                e = n;
            } else {
                return e;
            }
        }
    }

    AstPtr term() {
        AstPtr e = factor();
        while (eat('*')) {
            auto n = ExprAst::make(ExprAst::Kind::Mul);
            n->lhs = e;
            n->rhs = factor();
            e = n;
        }
        return e;
    }

    AstPtr factor() {
        AstPtr a = atom();
        if (eat('^')) {
            auto n = ExprAst::make(ExprAst::Kind::Pow);
            n->lhs = a;
            n->exponent = integer();
            return n;
        }
        return a;
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
        while (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return std::stol(src_.substr(start, pos_ - start));
    }

    AstPtr atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            AstPtr e = expr();
            expect(')');
            return e;
        }
        if (isdigit(static_cast<unsigned char>(c))) return rational_atom();
        if (isalpha(static_cast<unsigned char>(c))) return symbol_atom();
        throw ParseError("unexpected character", pos_);
    }

    AstPtr rational_atom() {
        size_t start = pos_;
        while (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string num = src_.substr(start, pos_ - start);
        std::string den = "1";
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            size_t ds = pos_;
            while (pos_ < src_.size() && isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ == ds) throw ParseError("expected denominator", pos_);
            den = src_.substr(ds, pos_ - ds);
        }
        auto n = ExprAst::make(ExprAst::Kind::Rational);
        n->rational = Rat(num + "/" + den);
        n->rational.canonicalize();
        return n;
    }

    AstPtr symbol_atom() {
        size_t start = pos_;
        while (pos_ < src_.size() && isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string word = src_.substr(start, pos_ - start);
        if (word == "v") return ExprAst::make(ExprAst::Kind::SymV);
        if (word == "q") return ExprAst::make(ExprAst::Kind::SymQ);
        if (word == "Z") {
            if (peek_is('{')) {
                require_algebra(Algebra::Lattice, "Z{m}[...]", start);
                expect('{');
                int m = static_cast<int>(integer());
                expect('}');
                auto n = ExprAst::make(ExprAst::Kind::GenZSite);
                n->site = m;
                n->name = bracket_name();
                return n;
            }
            require_algebra(Algebra::B, "Z[...]", start);
            auto n = ExprAst::make(ExprAst::Kind::GenZ);
            n->name = bracket_name();
            return n;
        }
        if (word == "Zp" || word == "Zm") {
            require_algebra(Algebra::Heis, word + "[...]", start);
            auto n = ExprAst::make(word == "Zp" ? ExprAst::Kind::GenZp : ExprAst::Kind::GenZm);
            n->name = bracket_name();
            return n;
        }
        if (word == "X") {
            require_algebra(Algebra::F, "X{m}[...]", start);
            expect('{');
            int m = static_cast<int>(integer());
            expect('}');
            auto n = ExprAst::make(ExprAst::Kind::GenX);
            n->site = m;
            n->name = bracket_name();
            return n;
        }
        if (word == "K" || word == "Km") {
            if (word == "Km") require_algebra(Algebra::Heis, "Km[...]", start);
            else if (target_ == Algebra::F) throw WrongAlgebra("K generators are not part of F(A)");
            auto n = ExprAst::make(word == "K" ? ExprAst::Kind::GenK : ExprAst::Kind::GenKm);
            n->kvec = k_vector();
            return n;
        }
        throw ParseError("unknown symbol '" + word + "'", start);
    }

    void require_algebra(Algebra a, const std::string& what, size_t at) {
        (void)at;
        if (target_ != a)
            throw WrongAlgebra(what + " is not a generator of the selected algebra");
    }

    std::string bracket_name() {
        expect('[');
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != ']') ++pos_;
        if (pos_ >= src_.size()) throw ParseError("unterminated generator name", start);
        std::string name = src_.substr(start, pos_ - start);
        while (!name.empty() && isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
        ++pos_;
        if (name.empty()) throw ParseError("empty generator name", start);
        return name;
    }

    K0 k_vector() {
        expect('[');
        expect('(');
        K0 v;
        v.push_back(static_cast<int>(integer()));
        while (eat(',')) v.push_back(static_cast<int>(integer()));
        expect(')');
        expect(']');
        return v;
    }
};

inline AstPtr parse_expr(const std::string& src, Algebra target) {
    return ExprParser(src, target).parse();
}

// ---- renderer ----

namespace detail {
inline int precedence(ExprAst::Kind k) {
    switch (k) {
        case ExprAst::Kind::Add:
        case ExprAst::Kind::Sub:
        case ExprAst::Kind::Neg: return 1;
        case ExprAst::Kind::Mul: return 2;
        case ExprAst::Kind::Pow: return 3;
        default: return 4;
    }
}
} // namespace detail

inline std::string render_expr(const AstPtr& a) {
    auto wrap = [](const AstPtr& child, int minprec) {
        std::string s = render_expr(child);
        if (detail::precedence(child->kind) < minprec) return "(" + s + ")";
        return s;
    };
    switch (a->kind) {
        case ExprAst::Kind::Rational: return rat_str(a->rational);
        case ExprAst::Kind::SymV: return "v";
        case ExprAst::Kind::SymQ: return "q";
        case ExprAst::Kind::GenZ: return "Z[" + a->name + "]";
        case ExprAst::Kind::GenZSite: return "Z{" + std::to_string(a->site) + "}[" + a->name + "]";
        case ExprAst::Kind::GenZp: return "Zp[" + a->name + "]";
        case ExprAst::Kind::GenZm: return "Zm[" + a->name + "]";
        case ExprAst::Kind::GenX: return "X{" + std::to_string(a->site) + "}[" + a->name + "]";
        case ExprAst::Kind::GenK: return "K[" + k0_str(a->kvec) + "]";
        case ExprAst::Kind::GenKm: return "Km[" + k0_str(a->kvec) + "]";
        case ExprAst::Kind::Add: return render_expr(a->lhs) + " + " + wrap(a->rhs, 2);
        case ExprAst::Kind::Sub: return render_expr(a->lhs) + " - " + wrap(a->rhs, 2);
        case ExprAst::Kind::Neg: return "-" + wrap(a->lhs, 2);
        case ExprAst::Kind::Mul: return wrap(a->lhs, 2) + "*" + wrap(a->rhs, 3);
        case ExprAst::Kind::Pow: return wrap(a->lhs, 4) + "^" + std::to_string(a->exponent);
    }
    return "";
}

// ---- evaluation ----

struct EvalResult {
    Algebra algebra;
    BElem b;
    HeisElem h;
    LatticeElem l;
    FElem f;

    nlohmann::json to_json(const CategoryTable& t) const {
        switch (algebra) {
            case Algebra::B: return belem_json(t, b);
            case Algebra::Heis: return heis_json(t, h);
            case Algebra::Lattice: return lattice_json(t, l);
            case Algebra::F: return felem_json(t, f);
        }
        return {};
    }
    std::string to_text(const CategoryTable& t) const {
        switch (algebra) {
            case Algebra::B: return belem_text(t, b);
            case Algebra::Heis: return heis_text(t, h);
            case Algebra::Lattice: return lattice_text(t, l);
            case Algebra::F: return felem_text(t, f);
        }
        return "";
    }
};



inline ClassId resolve_name(const CategoryTable& t, const std::string& name) {
    auto c = t.find_class(name);
    if (!c) throw UnknownName(name);
    return *c;
}

inline K0 check_kvec(const CategoryTable& t, const K0& v) {
    if (v.size() != t.quiver().num_vertices())
        throw ConfigError("K vector length must equal vertex count");
    return v;
}

inline EvalResult eval_expr(const CategoryTable& t, const AstPtr& ast, Algebra target);

namespace detail {

template <typename Elem>
Elem eval_generic(const CategoryTable& t, const AstPtr& a, Algebra target,
                  const std::function<Elem(const AstPtr&)>& genfn,
                  const std::function<Elem(const Elem&, const Elem&)>& mul,
                  const std::function<Elem()>& unit,
                  const std::function<Elem(const Elem&, const Coeff&)>& scale,
                  const std::function<Elem(const Elem&, long)>& powfn) {
    std::function<Elem(const AstPtr&)> go = [&](const AstPtr& node) -> Elem {
        switch (node->kind) {
            case ExprAst::Kind::Rational:
                return scale(unit(), Coeff::of(t.ground(), node->rational));
            case ExprAst::Kind::SymV: return scale(unit(), vpow(t.ground(), 1));
            case ExprAst::Kind::SymQ: return scale(unit(), vpow(t.ground(), 2));
            case ExprAst::Kind::Add: return [&] {
                Elem r = go(node->lhs);
                for (auto& [k, c] : go(node->rhs)) add_term(r, k, c);
                return r;
            }();
            case ExprAst::Kind::Sub: return [&] {
                Elem r = go(node->lhs);
                for (auto& [k, c] : go(node->rhs)) add_term(r, k, -c);
                return r;
            }();
            case ExprAst::Kind::Neg: return scale(go(node->lhs), -Coeff::one(t.ground()));
            case ExprAst::Kind::Mul: return mul(go(node->lhs), go(node->rhs));
            case ExprAst::Kind::Pow: return powfn(go(node->lhs), node->exponent);
            default: return genfn(node);
        }
    };
    (void)target;
    return go(a);
}

} // namespace detail

inline EvalResult eval_expr(const CategoryTable& t, const AstPtr& ast, Algebra target) {
    EvalResult out;
    out.algebra = target;
    auto one = Coeff::one(t.ground());

    switch (target) {
        case Algebra::B: {
            std::function<BElem(const BElem&, long)> powfn = [&](const BElem& x, long e) -> BElem {
                if (e >= 0) {
                    BElem r = b_unit(t);
                    for (long i = 0; i < e; ++i) r = hall_mul(t, r, x);
                    return r;
                }
                if (x.size() != 1 || x.begin()->first.obj != t.zero_class())
                    throw ConfigError("negative power requires a single K term");
                BElem inv = {{BKey{k0_neg(x.begin()->first.alpha), t.zero_class()},
                              x.begin()->second.inv()}};
                return powfn(inv, -e);
            };
            out.b = detail::eval_generic<BElem>(
                t, ast, target,
                [&](const AstPtr& n) -> BElem {
                    if (n->kind == ExprAst::Kind::GenZ) return b_gen(t, resolve_name(t, n->name));
                    if (n->kind == ExprAst::Kind::GenK) return b_k(t, check_kvec(t, n->kvec));
                    throw WrongAlgebra("generator not valid in B");
                },
                [&](const BElem& x, const BElem& y) { return hall_mul(t, x, y); },
                [&] { return b_unit(t); }, [&](const BElem& x, const Coeff& c) { return b_scale(x, c); },
                powfn);
            break;
        }
        case Algebra::Heis: {
            std::function<HeisElem(const HeisElem&, long)> powfn = [&](const HeisElem& x,
                                                                       long e) -> HeisElem {
                if (e >= 0) {
                    HeisElem r = heis_unit(t);
                    for (long i = 0; i < e; ++i) r = heis_mul(t, r, x);
                    return r;
                }
                if (x.size() != 1 || x.begin()->first.minus.obj != t.zero_class() ||
                    x.begin()->first.plus.obj != t.zero_class())
                    throw ConfigError("negative power requires a single K term");
                const HeisKey& k = x.begin()->first;
                Coeff c = x.begin()->second.inv();
                // (Km_b K_a)^{-1} = K_{-a} Km_{-b} = (a|b)^{... } handled by heis_mul of inverses
                HeisElem inv = heis_mul(t, heis_kplus(t, k0_neg(k.plus.alpha)),
                                        heis_kminus(t, k0_neg(k.minus.alpha)));
                return powfn(heis_scale(inv, c), -e);
            };
            out.h = detail::eval_generic<HeisElem>(
                t, ast, target,
                [&](const AstPtr& n) -> HeisElem {
                    if (n->kind == ExprAst::Kind::GenZp) return heis_zplus(t, resolve_name(t, n->name));
                    if (n->kind == ExprAst::Kind::GenZm) return heis_zminus(t, resolve_name(t, n->name));
                    if (n->kind == ExprAst::Kind::GenK) return heis_kplus(t, check_kvec(t, n->kvec));
                    if (n->kind == ExprAst::Kind::GenKm) return heis_kminus(t, check_kvec(t, n->kvec));
                    throw WrongAlgebra("generator not valid in heis");
                },
                [&](const HeisElem& x, const HeisElem& y) { return heis_mul(t, x, y); },
                [&] { return heis_unit(t); },
                [&](const HeisElem& x, const Coeff& c) { return heis_scale(x, c); }, powfn);
            break;
        }
        case Algebra::Lattice: {
            std::function<LatticeElem(const LatticeElem&, long)> powfn =
                [&](const LatticeElem& x, long e) -> LatticeElem {
                if (e >= 0) {
                    LatticeElem r = lat_unit(t);
                    for (long i = 0; i < e; ++i) r = lat_mul(t, r, x);
                    return r;
                }
                if (x.size() != 1 || !x.begin()->first.sites.empty())
                    throw ConfigError("negative power requires a single K term");
                LatticeElem inv = lat_scale(lat_k(t, k0_neg(x.begin()->first.alpha)),
                                            x.begin()->second.inv());
                return powfn(inv, -e);
            };
            out.l = detail::eval_generic<LatticeElem>(
                t, ast, target,
                [&](const AstPtr& n) -> LatticeElem {
                    if (n->kind == ExprAst::Kind::GenZSite)
                        return lat_gen(t, n->site, resolve_name(t, n->name));
                    if (n->kind == ExprAst::Kind::GenK) return lat_k(t, check_kvec(t, n->kvec));
                    throw WrongAlgebra("generator not valid in lattice");
                },
                [&](const LatticeElem& x, const LatticeElem& y) { return lat_mul(t, x, y); },
                [&] { return lat_unit(t); },
                [&](const LatticeElem& x, const Coeff& c) { return lat_scale(x, c); }, powfn);
            break;
        }
        case Algebra::F: {
            std::function<FElem(const FElem&, long)> powfn = [&](const FElem& x, long e) -> FElem {
                if (e < 0) throw ConfigError("negative powers are not available in F(A)");
                FElem r = f_unit(t);
                for (long i = 0; i < e; ++i) r = f_mul(t, r, x);
                return r;
            };
            out.f = detail::eval_generic<FElem>(
                t, ast, target,
                [&](const AstPtr& n) -> FElem {
                    if (n->kind == ExprAst::Kind::GenX)
                        return f_gen(t, n->site, resolve_name(t, n->name));
                    throw WrongAlgebra("generator not valid in f");
                },
                [&](const FElem& x, const FElem& y) { return f_mul(t, x, y); },
                [&] { return f_unit(t); },
                [&](const FElem& x, const Coeff& c) { return f_scale(x, c); }, powfn);
            break;
        }
    }
    (void)one;
    return out;
}

} // namespace hallforge

#endif

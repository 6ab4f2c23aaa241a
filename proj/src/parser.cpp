#include "arithsite/parser.hpp"

#include <cctype>
#include <optional>

#include "arithsite/numeric.hpp"

namespace arithsite {

namespace {

enum class Tok {
    End,
    Number,
    Ident,   // keywords, function names (may end in '?', may contain '-')
    LAngle,  // <
    RAngle,  // >
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Caret,
    Star,
    Slash,
    Minus,
    Equals,
    Bang,
    Amp,
    Pipe,
    MeetOp,    // /\ .
    JoinOp,    // \/
    ImpliesOp, // ->
    ActOp,     // (.)
    InKw,      // in
    Question,
};

struct Token {
    Tok kind;
    std::size_t pos;
    std::uint64_t number = 0;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        cur_.pos = i_;
        cur_.text.clear();
        if (i_ >= s_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                std::uint64_t d = static_cast<std::uint64_t>(s_[i_] - '0');
                if (v > (UINT64_MAX - d) / 10)
                    throw ParseError("integer literal too large", cur_.pos);
                v = v * 10 + d;
                ++i_;
            }
            cur_.kind = Tok::Number;
            cur_.number = v;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' ||
                    s_[i_] == '-')) {
                // '-' is part of an identifier only when followed by a letter
                // (e.g. in-gp?); otherwise it terminates the identifier so
                // that "x ->" and "2 - 3" lex as expected.
                if (s_[i_] == '-') {
                    if (i_ + 1 >= s_.size() ||
                        !std::isalpha(static_cast<unsigned char>(s_[i_ + 1])))
                        break;
                }
                id += s_[i_++];
            }
            if (i_ < s_.size() && s_[i_] == '?') {
                id += s_[i_++];
            }
            cur_.kind = id == "in" ? Tok::InKw : Tok::Ident;
            cur_.text = std::move(id);
            return;
        }
        switch (c) {
            case '<': cur_.kind = Tok::LAngle; ++i_; return;
            case '>': cur_.kind = Tok::RAngle; ++i_; return;
            case '(':
                if (i_ + 2 < s_.size() && s_[i_ + 1] == '.' && s_[i_ + 2] == ')') {
                    cur_.kind = Tok::ActOp;
                    i_ += 3;
                    return;
                }
                cur_.kind = Tok::LParen;
                ++i_;
                return;
            case ')': cur_.kind = Tok::RParen; ++i_; return;
            case '{': cur_.kind = Tok::LBrace; ++i_; return;
            case '}': cur_.kind = Tok::RBrace; ++i_; return;
            case '[': cur_.kind = Tok::LBracket; ++i_; return;
            case ']': cur_.kind = Tok::RBracket; ++i_; return;
            case ',': cur_.kind = Tok::Comma; ++i_; return;
            case '^': cur_.kind = Tok::Caret; ++i_; return;
            case '*': cur_.kind = Tok::Star; ++i_; return;
            case '=': cur_.kind = Tok::Equals; ++i_; return;
            case '!': cur_.kind = Tok::Bang; ++i_; return;
            case '&': cur_.kind = Tok::Amp; ++i_; return;
            case '?': cur_.kind = Tok::Question; ++i_; return;
            case '|': cur_.kind = Tok::Pipe; ++i_; return;
            case '/':
                if (i_ + 1 < s_.size() && s_[i_ + 1] == '\\') {
                    cur_.kind = Tok::MeetOp;
                    i_ += 2;
                    return;
                }
                cur_.kind = Tok::Slash;
                ++i_;
                return;
            case '\\':
                if (i_ + 1 < s_.size() && s_[i_ + 1] == '/') {
                    cur_.kind = Tok::JoinOp;
                    i_ += 2;
                    return;
                }
                throw ParseError("stray backslash", cur_.pos);
            case '-':
                if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
                    cur_.kind = Tok::ImpliesOp;
                    i_ += 2;
                    return;
                }
                cur_.kind = Tok::Minus;
                ++i_;
                return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", cur_.pos);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token cur_;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::End: return "end of input";
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::LAngle: return "'<'";
        case Tok::RAngle: return "'>'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Caret: return "'^'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Minus: return "'-'";
        case Tok::Equals: return "'='";
        case Tok::Bang: return "'!'";
        case Tok::Amp: return "'&'";
        case Tok::Pipe: return "'|'";
        case Tok::MeetOp: return "'/\\'";
        case Tok::JoinOp: return "'\\/'";
        case Tok::ImpliesOp: return "'->'";
        case Tok::ActOp: return "'(.)'";
        case Tok::InKw: return "'in'";
        case Tok::Question: return "'?'";
    }
    return "?";
}

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Statement statement() {
        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "let") {
            lex_.take();
            Token name = expect(Tok::Ident, "binding name");
            expect(Tok::Equals, "'='");
            Statement st;
            st.binding = name.text;
            st.expr = expression();
            end();
            return st;
        }
        Statement st;
        st.expr = expression();
        end();
        return st;
    }

    Expr full_expression() {
        Expr e = expression();
        end();
        return e;
    }

  private:
    void end() {
        if (lex_.peek().kind != Tok::End)
            throw ParseError(std::string("expected end of input, found ") +
                                 tok_name(lex_.peek().kind),
                             lex_.peek().pos);
    }

    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind)
            throw ParseError("expected " + what + ", found " + tok_name(lex_.peek().kind),
                             lex_.peek().pos);
        return lex_.take();
    }

    // expression := membership
    Expr expression() { return membership(); }

    // membership := ['member?'] implication ['in' implication] ['?']
    Expr membership() {
        bool member_kw = false;
        std::size_t pos = lex_.peek().pos;
        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "member?") {
            lex_.take();
            member_kw = true;
        }
        Expr lhs = implication();
        if (lex_.peek().kind == Tok::InKw) {
            lex_.take();
            Expr rhs = implication();
            if (lex_.peek().kind == Tok::Question) lex_.take();
            Expr e;
            e.kind = Expr::Kind::In;
            e.pos = pos;
            e.args.push_back(std::move(lhs));
            e.args.push_back(std::move(rhs));
            return e;
        }
        if (member_kw)
            throw ParseError("'member?' needs 'in'", lex_.peek().pos);
        return lhs;
    }

    // implication := disjunction ['->' implication]   (right associative)
    Expr implication() {
        Expr lhs = disjunction();
        if (lex_.peek().kind == Tok::ImpliesOp) {
            std::size_t pos = lex_.take().pos;
            Expr rhs = implication();
            Expr e;
            e.kind = Expr::Kind::Implies;
            e.pos = pos;
            e.args.push_back(std::move(lhs));
            e.args.push_back(std::move(rhs));
            return e;
        }
        return lhs;
    }

    Expr disjunction() {
        Expr lhs = conjunction();
        while (lex_.peek().kind == Tok::JoinOp || lex_.peek().kind == Tok::Pipe) {
            Token op = lex_.take();
            Expr rhs = conjunction();
            Expr e;
            e.kind = Expr::Kind::Join;
            e.pos = op.pos;
            e.formula_op = op.kind == Tok::Pipe;
            e.args.push_back(std::move(lhs));
            e.args.push_back(std::move(rhs));
            lhs = std::move(e);
        }
        return lhs;
    }

    Expr conjunction() {
        Expr lhs = action();
        while (lex_.peek().kind == Tok::MeetOp || lex_.peek().kind == Tok::Amp) {
            Token op = lex_.take();
            Expr rhs = action();
            Expr e;
            e.kind = Expr::Kind::Meet;
            e.pos = op.pos;
            e.formula_op = op.kind == Tok::Amp;
            e.args.push_back(std::move(lhs));
            e.args.push_back(std::move(rhs));
            lhs = std::move(e);
        }
        return lhs;
    }

    Expr action() {
        Expr lhs = unary();
        while (lex_.peek().kind == Tok::ActOp) {
            std::size_t pos = lex_.take().pos;
            Expr rhs = unary();
            Expr e;
            e.kind = Expr::Kind::Act;
            e.pos = pos;
            e.args.push_back(std::move(lhs));
            e.args.push_back(std::move(rhs));
            lhs = std::move(e);
        }
        return lhs;
    }

    Expr unary() {
        if (lex_.peek().kind == Tok::Bang) {
            std::size_t pos = lex_.take().pos;
            Expr e;
            e.kind = Expr::Kind::Not;
            e.pos = pos;
            e.args.push_back(unary());
            return e;
        }
        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "neg") {
            std::size_t pos = lex_.take().pos;
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.pos = pos;
            e.args.push_back(unary());
            return e;
        }
        return primary();
    }

    Expr primary() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::LAngle: return sieve_literal();
            case Tok::LBrace: return primeset_literal();
            case Tok::Number:
            case Tok::Minus: return number_literal();
            case Tok::LParen: {
                std::size_t pos = lex_.take().pos;
                Expr first = expression();
                if (lex_.peek().kind == Tok::Comma) {
                    lex_.take();
                    Expr second = expression();
                    expect(Tok::RParen, "')'");
                    Expr e;
                    e.kind = Expr::Kind::LatticePair;
                    e.pos = pos;
                    e.args.push_back(std::move(first));
                    e.args.push_back(std::move(second));
                    return e;
                }
                expect(Tok::RParen, "')'");
                return first;
            }
            case Tok::Ident: return ident_or_call();
            default:
                throw ParseError(std::string("expected an expression, found ") +
                                     tok_name(t.kind),
                                 t.pos);
        }
    }

    Expr sieve_literal() {
        Token open = expect(Tok::LAngle, "'<'");
        std::vector<std::uint64_t> gens;
        if (lex_.peek().kind != Tok::RAngle) {
            gens.push_back(expect(Tok::Number, "generator").number);
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                gens.push_back(expect(Tok::Number, "generator").number);
            }
        }
        expect(Tok::RAngle, "'>'");
        Expr e;
        e.kind = Expr::Kind::SieveLit;
        e.pos = open.pos;
        try {
            e.sieve = Sieve::from_generators(gens);
        } catch (const Error& err) {
            throw ParseError(err.what(), open.pos);
        }
        return e;
    }

    Expr primeset_literal() {
        Token open = expect(Tok::LBrace, "'{'");
        std::vector<std::uint64_t> ps;
        if (lex_.peek().kind != Tok::RBrace) {
            ps.push_back(expect(Tok::Number, "prime").number);
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                ps.push_back(expect(Tok::Number, "prime").number);
            }
        }
        expect(Tok::RBrace, "'}'");
        for (std::uint64_t p : ps)
            if (!is_prime(p))
                throw ParseError(std::to_string(p) + " is not prime", open.pos);
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        Expr e;
        e.kind = Expr::Kind::PrimeSetLit;
        e.pos = open.pos;
        e.primes = std::move(ps);
        return e;
    }

    Expr number_literal() {
        std::size_t pos = lex_.peek().pos;
        bool negative = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negative = true;
        }
        Token num = expect(Tok::Number, "number");
        if (lex_.peek().kind == Tok::Slash) {
            lex_.take();
            Token den = expect(Tok::Number, "denominator");
            Expr e;
            e.kind = Expr::Kind::RatLit;
            e.pos = pos;
            if (num.number > INT64_MAX || den.number > INT64_MAX)
                throw ParseError("rational component too large", pos);
            try {
                e.rat = Rational(negative ? -static_cast<std::int64_t>(num.number)
                                          : static_cast<std::int64_t>(num.number),
                                 static_cast<std::int64_t>(den.number));
            } catch (const Error& err) {
                throw ParseError(err.what(), pos);
            }
            return e;
        }
        Expr e;
        if (negative) {
            if (num.number > INT64_MAX) throw ParseError("rational too large", pos);
            e.kind = Expr::Kind::RatLit;
            e.rat = Rational(-static_cast<std::int64_t>(num.number), 1);
        } else {
            e.kind = Expr::Kind::NatLit;
            e.nat = num.number;
        }
        e.pos = pos;
        return e;
    }

    Expr supernatural_literal(std::size_t pos) {
        expect(Tok::LParen, "'('");
        Supernatural::Default def = Supernatural::Default::Zero;
        std::map<std::uint64_t, Exponent> exc;

        auto add_factor = [&](std::uint64_t base, Exponent expo, std::size_t at) {
            if (base < 2) {
                if (base == 1) return; // sn(1); contributes nothing
                throw ParseError("factor base must be >= 1", at);
            }
            for (const auto& [p, e] : factorize(base)) {
                Exponent contribution = expo.is_infinite()
                                            ? Exponent::infinite()
                                            : Exponent::finite(checked_mul(
                                                  e, expo.finite_value()));
                auto it = exc.find(p);
                if (it == exc.end())
                    exc.emplace(p, contribution);
                else
                    it->second = it->second + contribution;
            }
        };

        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "all") {
            lex_.take();
            expect(Tok::Caret, "'^'");
            Token e = expect(Tok::Ident, "'inf'");
            if (e.text != "inf") throw ParseError("expected 'inf' after all^", e.pos);
            def = Supernatural::Default::Inf;
            while (lex_.peek().kind == Tok::Slash) {
                lex_.take();
                Token base = expect(Tok::Number, "prime");
                expect(Tok::Caret, "'^'");
                Token expo = expect(Tok::Number, "finite exponent");
                if (!is_prime(base.number))
                    throw ParseError(std::to_string(base.number) + " is not prime", base.pos);
                exc.insert_or_assign(base.number, Exponent::finite(expo.number));
            }
        } else {
            for (;;) {
                Token base = expect(Tok::Number, "factor");
                Exponent expo = Exponent::finite(1);
                if (lex_.peek().kind == Tok::Caret) {
                    lex_.take();
                    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "inf") {
                        lex_.take();
                        expo = Exponent::infinite();
                    } else {
                        expo = Exponent::finite(expect(Tok::Number, "exponent").number);
                    }
                }
                add_factor(base.number, expo, base.pos);
                if (lex_.peek().kind != Tok::Star) break;
                lex_.take();
            }
        }
        expect(Tok::RParen, "')'");
        Expr e;
        e.kind = Expr::Kind::SupernaturalLit;
        e.pos = pos;
        try {
            // Zero exponents from explicit p^0 factors are dropped by make().
            std::map<std::uint64_t, Exponent> cleaned;
            for (const auto& [p, ex] : exc) {
                if (def == Supernatural::Default::Zero && !ex.is_infinite() &&
                    ex.finite_value() == 0)
                    continue;
                cleaned.emplace(p, ex);
            }
            e.sn = Supernatural::make(def, std::move(cleaned));
        } catch (const Error& err) {
            throw ParseError(err.what(), pos);
        }
        return e;
    }

    Expr ring_literal_brackets(std::size_t pos) {
        // after 'Z': optional [1/p, 1/q, ...]
        std::vector<std::uint64_t> inv;
        if (lex_.peek().kind == Tok::LBracket) {
            lex_.take();
            for (;;) {
                Token one = expect(Tok::Number, "'1'");
                if (one.number != 1) throw ParseError("expected 1/p", one.pos);
                expect(Tok::Slash, "'/'");
                inv.push_back(expect(Tok::Number, "prime").number);
                if (lex_.peek().kind != Tok::Comma) break;
                lex_.take();
            }
            expect(Tok::RBracket, "']'");
        }
        Expr e;
        e.kind = Expr::Kind::RingLit;
        e.pos = pos;
        try {
            e.ring = DenominatorSpec{PrimeSetDesc::finite(inv)};
        } catch (const Error& err) {
            throw ParseError(err.what(), pos);
        }
        return e;
    }

    Expr ident_or_call() {
        Token id = lex_.take();
        const std::string& name = id.text;

        if (name == "sn") return supernatural_literal(id.pos);
        if (name == "Xs") {
            Expr inner = sieve_literal();
            Expr e;
            e.kind = Expr::Kind::ConstructibleLit;
            e.pos = id.pos;
            e.formula = Constructible::atom(inner.sieve);
            return e;
        }
        if (name == "Xa") {
            Expr ps = primeset_literal();
            Expr e;
            e.kind = Expr::Kind::ConstructibleLit;
            e.pos = id.pos;
            // X_a(P) is the complement of X_s over the primes of P.
            e.formula = Constructible::negation(
                Constructible::atom(Sieve::from_generators(ps.primes)));
            return e;
        }
        if (name == "any" || name == "none") {
            Expr e;
            e.kind = Expr::Kind::ConstructibleLit;
            e.pos = id.pos;
            e.formula = name == "any" ? Constructible::truth() : Constructible::falsity();
            return e;
        }
        if (name == "true" || name == "false") {
            Expr e;
            e.kind = Expr::Kind::BoolLit;
            e.pos = id.pos;
            e.boolean = name == "true";
            return e;
        }
        if (name == "th") {
            expect(Tok::LParen, "'('");
            Expr dom = expression();
            expect(Tok::Comma, "','");
            Expr support = expression();
            expect(Tok::RParen, "')'");
            Expr e;
            e.kind = Expr::Kind::ThetaLit;
            e.pos = id.pos;
            e.args.push_back(std::move(dom));
            e.args.push_back(std::move(support));
            return e;
        }
        if (name == "Q") {
            Expr e;
            e.kind = Expr::Kind::RingLit;
            e.pos = id.pos;
            e.ring = DenominatorSpec{PrimeSetDesc::cofinite_complement({})};
            return e;
        }
        if (name == "Z") return ring_literal_brackets(id.pos);
        if (name == "Z_") {
            expect(Tok::LParen, "'('");
            std::vector<std::uint64_t> excluded;
            excluded.push_back(expect(Tok::Number, "prime").number);
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                excluded.push_back(expect(Tok::Number, "prime").number);
            }
            expect(Tok::RParen, "')'");
            Expr e;
            e.kind = Expr::Kind::RingLit;
            e.pos = id.pos;
            try {
                e.ring = DenominatorSpec{PrimeSetDesc::cofinite_complement(excluded)};
            } catch (const Error& err) {
                throw ParseError(err.what(), id.pos);
            }
            return e;
        }
        if (name == "stalk" || name == "sections") {
            Token mode = expect(Tok::Ident, "'i' or 'j'");
            if (mode.text != "i" && mode.text != "j")
                throw ParseError("expected 'i' or 'j' after '" + name + "'", mode.pos);
            Expr arg = primary();
            Expr e;
            e.kind = Expr::Kind::Call;
            e.pos = id.pos;
            e.name = name + "_" + mode.text;
            e.args.push_back(std::move(arg));
            return e;
        }
        if (lex_.peek().kind == Tok::LParen) {
            lex_.take();
            Expr e;
            e.kind = Expr::Kind::Call;
            e.pos = id.pos;
            e.name = name;
            if (lex_.peek().kind != Tok::RParen) {
                e.args.push_back(expression());
                while (lex_.peek().kind == Tok::Comma) {
                    lex_.take();
                    e.args.push_back(expression());
                }
            }
            expect(Tok::RParen, "')'");
            return e;
        }
        Expr e;
        e.kind = Expr::Kind::Ident;
        e.pos = id.pos;
        e.name = name;
        return e;
    }

    Lexer lex_;
};

} // namespace

Expr parse(const std::string& text) {
    Parser p(text);
    return p.full_expression();
}

Statement parse_statement(const std::string& text) {
    Parser p(text);
    return p.statement();
}

} // namespace arithsite

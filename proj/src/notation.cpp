#include "knotnum/notation.hpp"

#include "knotnum/catalog.hpp"
#include "knotnum/error.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace knotnum {

namespace {

class Parser {
public:
    Parser(std::string_view text, const PositionResolver* resolve) : text_(text), resolve_(resolve) {}

    KnotExpr run() {
        skip_ws();
        if (pos_ == text_.size())
            throw ParseError("empty notation", pos_);
        KnotExpr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    KnotExpr expr() {
        std::vector<KnotExpr> operands{factor()};
        std::optional<KnotExpr::Kind> op;
        for (;;) {
            skip_ws();
            if (pos_ == text_.size())
                break;
            const char c = text_[pos_];
            KnotExpr::Kind k;
            if (c == '*')
                k = KnotExpr::Kind::Star;
            else if (c == 'x')
                k = KnotExpr::Kind::Times;
            else
                break;
            if (op && *op != k)
                throw ParseError("mixed '*' and 'x' need parentheses", pos_);
            op = k;
            ++pos_;
            operands.push_back(factor());
        }
        if (!op)
            return operands.front();
        return *op == KnotExpr::Kind::Star ? star_of(std::move(operands)) : times_of(std::move(operands));
    }

    KnotExpr factor() {
        skip_ws();
        if (pos_ == text_.size())
            throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            KnotExpr e = expr();
            skip_ws();
            if (pos_ == text_.size() || text_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (c == '@' && resolve_) {
            ++pos_;
            const auto at = pos_;
            const auto n = integer();
            try {
                return (*resolve_)(n);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(std::string("unresolved reference: ") + e.what(), at);
            }
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return atom_name();
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    KnotExpr atom_name() {
        const auto start = pos_;
        int chirality = +1;
        if (text_[pos_] == '-') {
            chirality = -1;
            ++pos_;
        }
        const auto crossings = integer();
        if (pos_ == text_.size() || text_[pos_] != '_')
            throw ParseError("expected '_' in atom name", pos_);
        ++pos_;
        const auto index = integer();
        constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<int>::max());
        if (crossings > kMax || index > kMax)
            throw ParseError("atom number out of range", start);
        const PrimeKnotId id{static_cast<int>(crossings), static_cast<int>(index), chirality};
        if (!KnotCatalog::contains(id))
            throw UnknownAtom("unknown prime knot " + id.name() + " at offset " + std::to_string(start));
        return atom(id);
    }

    std::uint64_t integer() {
        const auto start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                throw ParseError("integer overflow", start);
            v = v * 10 + d;
            ++pos_;
        }
        if (pos_ == start)
            throw ParseError("expected digits", pos_);
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    const PositionResolver* resolve_;
    std::size_t pos_ = 0;
};

} // namespace

KnotExpr parse(std::string_view text) { return Parser(text, nullptr).run(); }

std::string render(const KnotExpr& k) { return k.text(); }

KnotExpr parse_template(std::string_view text, const PositionResolver& resolve) {
    return Parser(text, &resolve).run();
}

} // namespace knotnum

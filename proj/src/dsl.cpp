#include "traintrack/dsl.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace traintrack::dsl {

namespace {

using diagrams::DiagramWord;
using diagrams::Generator;
using diagrams::Level;

struct Token {
    enum class Kind { Ident, Nat, Semi, Star, LParen, RParen, LBracket, RBracket, End };
    Kind kind;
    std::string text;
    std::size_t begin;
    std::size_t end;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t begin = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_'))
                ++i;
            tokens.push_back(Token{Token::Kind::Ident, text.substr(begin, i - begin), begin, i});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back(Token{Token::Kind::Nat, text.substr(begin, i - begin), begin, i});
        } else {
            Token::Kind kind;
            switch (c) {
                case ';': kind = Token::Kind::Semi; break;
                case '*': kind = Token::Kind::Star; break;
                case '(': kind = Token::Kind::LParen; break;
                case ')': kind = Token::Kind::RParen; break;
                case '[': kind = Token::Kind::LBracket; break;
                case ']': kind = Token::Kind::RBracket; break;
                default:
                    throw SpannedError(ErrorCode::ParseError,
                                       std::string("unexpected character '") + c + "'", begin,
                                       begin + 1);
            }
            ++i;
            tokens.push_back(Token{kind, text.substr(begin, 1), begin, i});
        }
    }
    tokens.push_back(Token{Token::Kind::End, "", text.size(), text.size()});
    return tokens;
}

// A parsed subexpression together with the byte span it came from, so
// elaboration errors can point back into the source.
struct Spanned {
    DiagramWord diagram;
    std::size_t begin;
    std::size_t end;
};

class Parser {
  public:
    Parser(std::vector<Token> tokens, const ColourSet& colours)
        : tokens_(std::move(tokens)), colours_(colours) {}

    DiagramWord parse() {
        Spanned result = parse_term();
        expect(Token::Kind::End, "end of input");
        return std::move(result.diagram);
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }

    Token advance() { return tokens_[pos_++]; }

    Token expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind)
            throw SpannedError(ErrorCode::ParseError,
                               "expected " + what + ", got " +
                                   (peek().kind == Token::Kind::End ? "end of input"
                                                                    : "'" + peek().text + "'"),
                               peek().begin, peek().end);
        return advance();
    }

    Spanned parse_term() {
        Spanned acc = parse_factor();
        while (peek().kind == Token::Kind::Semi) {
            advance();
            Spanned next = parse_factor();
            try {
                acc.diagram = diagrams::compose(acc.diagram, next.diagram);
            } catch (const TrainTrackError& e) {
                if (e.code() != ErrorCode::BoundaryMismatch) throw;
                throw SpannedError(ErrorCode::ArityError,
                                   "stages do not compose: lower has " +
                                       std::to_string(acc.diagram.outputs()) +
                                       " outputs, upper wants " +
                                       std::to_string(next.diagram.inputs) + " inputs",
                                   acc.begin, next.end);
            }
            acc.end = next.end;
        }
        return acc;
    }

    Spanned parse_factor() {
        Spanned acc = parse_atom();
        while (peek().kind == Token::Kind::Star) {
            advance();
            Spanned next = parse_atom();
            acc.diagram = diagrams::tensor(acc.diagram, next.diagram);
            acc.end = next.end;
        }
        return acc;
    }

    Spanned parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Kind::LParen: {
                Token open = advance();
                Spanned inner = parse_term();
                Token close = expect(Token::Kind::RParen, "')'");
                return Spanned{std::move(inner.diagram), open.begin, close.end};
            }
            case Token::Kind::Ident: {
                Token name = advance();
                if (name.text == "alpha")
                    return Spanned{diagrams::build(2, {Level{0, Generator::alpha()}}), name.begin,
                                   name.end};
                if (name.text == "beta")
                    return Spanned{diagrams::build(1, {Level{0, Generator::beta()}}), name.begin,
                                   name.end};
                if (name.text == "id") {
                    expect(Token::Kind::LBracket, "'['");
                    Token nat = expect(Token::Kind::Nat, "a strand count");
                    Token close = expect(Token::Kind::RBracket, "']'");
                    long strands = std::stol(nat.text);
                    if (strands < 1)
                        throw SpannedError(ErrorCode::ParseError,
                                           "id[0] denotes the excluded empty object", nat.begin,
                                           nat.end);
                    return Spanned{diagrams::identity_diagram(static_cast<int>(strands)),
                                   name.begin, close.end};
                }
                if (!colours_.contains(name.text))
                    throw SpannedError(ErrorCode::UnknownColour,
                                       "unknown colour '" + name.text + "'", name.begin,
                                       name.end);
                return Spanned{
                    diagrams::build(1, {Level{0, Generator::train(colours_.id_of(name.text))}}),
                    name.begin, name.end};
            }
            default:
                throw SpannedError(ErrorCode::ParseError,
                                   "expected 'alpha', 'beta', 'id[n]', a colour, or '(', got " +
                                       (tok.kind == Token::Kind::End ? "end of input"
                                                                     : "'" + tok.text + "'"),
                                   tok.begin, tok.end);
        }
    }

    std::vector<Token> tokens_;
    const ColourSet& colours_;
    std::size_t pos_ = 0;
};

} // namespace

DiagramWord parse_dsl(const std::string& text, const ColourSet& colours) {
    return Parser(lex(text), colours).parse();
}

std::string print_dsl(const DiagramWord& d, const ColourSet& colours) {
    if (d.levels.empty()) return "id[" + std::to_string(d.inputs) + "]";
    std::vector<int> widths = d.widths();
    std::string out;
    for (std::size_t t = 0; t < d.levels.size(); ++t) {
        const Level& lv = d.levels[t];
        int in_arity = lv.gen.kind == diagrams::GenKind::Alpha ? 2 : 1;
        int right = widths[t] - lv.offset - in_arity;
        if (t) out += " ; ";
        if (lv.offset > 0) out += "id[" + std::to_string(lv.offset) + "] * ";
        switch (lv.gen.kind) {
            case diagrams::GenKind::Alpha: out += "alpha"; break;
            case diagrams::GenKind::Beta: out += "beta"; break;
            case diagrams::GenKind::Train: out += colours.name_of(lv.gen.colour); break;
        }
        if (right > 0) out += " * id[" + std::to_string(right) + "]";
    }
    return out;
}

} // namespace traintrack::dsl

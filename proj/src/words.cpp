#include <sstream>

#include "braids/rep.hpp"

namespace braids {

namespace {

Token parse_token(int n, std::string text) {
    Token tok;
    // Inverse suffixes.
    if (text.size() >= 1 && text.back() == '\'') {
        tok.power = -1;
        text.pop_back();
    } else if (text.size() >= 3 && text.compare(text.size() - 3, 3, "^-1") == 0) {
        tok.power = -1;
        text.erase(text.size() - 3);
    }
    if (text.empty()) throw ParseError("empty word token");
    if (text[0] == 's') {
        std::string body = text.substr(1);
        int i = 0, j = 0;
        auto comma = body.find(',');
        if (comma != std::string::npos) {
            try {
                i = std::stoi(body.substr(0, comma));
                j = std::stoi(body.substr(comma + 1));
            } catch (const std::exception&) {
                throw ParseError("bad generator token: " + text);
            }
        } else if (body.size() == 2 && std::isdigit((unsigned char)body[0]) &&
                   std::isdigit((unsigned char)body[1])) {
            i = body[0] - '0';
            j = body[1] - '0';
        } else {
            throw ParseError("generator token needs a comma for multi-digit labels: " +
                             text);
        }
        if (i > j) std::swap(i, j);
        make_edge(i, j, n);
        tok.payload = GeneratorToken{i, j};
        return tok;
    }
    if (text[0] == 'd') {
        tok.payload = parse_partition(n, text.substr(1));
        return tok;
    }
    throw ParseError("unknown word token: " + text);
}

}  // namespace

BraidWord parse_word(int n, const std::string& text) {
    BraidWord w;
    w.n = n;
    std::istringstream stream(text);
    std::string tok;
    while (stream >> tok) w.tokens.push_back(parse_token(n, tok));
    return w;
}

std::string word_str(const BraidWord& w) {
    std::ostringstream os;
    bool first = true;
    for (const Token& tok : w.tokens) {
        if (!first) os << " ";
        first = false;
        if (const auto* gen = std::get_if<GeneratorToken>(&tok.payload)) {
            if (gen->j <= 9)
                os << "s" << gen->i << gen->j;
            else
                os << "s" << gen->i << "," << gen->j;
        } else {
            os << "d" << std::get<NCPartition>(tok.payload).str();
        }
        if (tok.power == -1) os << "'";
    }
    return os.str();
}

}  // namespace braids

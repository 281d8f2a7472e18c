#include "cdp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cdp/error.hpp"

namespace cdp {

Permutation Permutation::identity(int n) {
    if (n < 1) throw Error("invalid-degree", "permutation degree must be >= 1");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) throw Error("invalid-degree", "permutation degree must be >= 1");
    std::vector<bool> seen(n, false);
    for (int v : images_) {
        if (v < 0 || v >= n)
            throw Error("out-of-range", "image " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        if (seen[v])
            throw Error("not-bijective", "repeated image " + std::to_string(v));
        seen[v] = true;
    }
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw Error("dimension-error", "compose: degrees " + std::to_string(degree()) + " vs " +
                                           std::to_string(other.degree()));
    std::vector<int> img(images_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = images_[other.images_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

int Permutation::fixed_points() const {
    int c = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] == static_cast<int>(i)) ++c;
    return c;
}

bool Permutation::completely_different(const Permutation& other) const {
    if (degree() != other.degree())
        throw Error("dimension-error", "completely_different: degree mismatch");
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] == other.images_[i]) return false;
    return true;
}

Eigen::MatrixXd Permutation::matrix() const {
    const int n = degree();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) m(images_[j], j) = 1.0;
    return m;
}

Eigen::MatrixXcd Permutation::cmatrix() const {
    return matrix().cast<std::complex<double>>();
}

Eigen::MatrixXd perm_matrix(const Permutation& p) { return p.matrix(); }

namespace {

std::vector<std::vector<int>> tokenize_cycles(const std::string& text, int base, int n) {
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text.compare(pos, 2, "id") == 0) {
        pos += 2;
        skip_ws();
        if (pos != text.size()) throw Error("malformed-cycles", "trailing characters after 'id'");
        return cycles;
    }
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw Error("malformed-cycles", "expected '(' at position " + std::to_string(pos));
        ++pos;
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos) throw Error("malformed-cycles", "unterminated cycle");
        std::string body = text.substr(pos, close - pos);
        pos = close + 1;
        skip_ws();

        std::vector<int> cyc;
        auto parse_symbol = [](const std::string& sym) {
            try {
                std::size_t used = 0;
                const int value = std::stoi(sym, &used);
                if (used != sym.size() || value < 0)
                    throw Error("malformed-cycles", "bad cycle symbol '" + sym + "'");
                return value;
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                throw Error("malformed-cycles", "bad cycle symbol '" + sym + "'");
            }
        };
        const bool separated = body.find_first_of(", \t") != std::string::npos;
        if (separated) {
            std::string tok;
            std::istringstream in(body);
            while (std::getline(in, tok, ',')) {
                std::istringstream ws(tok);
                std::string sym;
                while (ws >> sym) cyc.push_back(parse_symbol(sym));
            }
        } else {
            for (char ch : body) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw Error("malformed-cycles", std::string("unexpected character '") + ch + "' in cycle");
                cyc.push_back(ch - '0');
            }
        }
        for (int& s : cyc) {
            s -= base;
            if (s < 0 || s >= n)
                throw Error("out-of-range",
                            "cycle symbol " + std::to_string(s + base) + " outside declared ground set");
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    return cycles;
}

}  // namespace

Permutation Permutation::from_cycles(const std::string& text, int n, int base) {
    if (n < 1) throw Error("invalid-degree", "permutation degree must be >= 1");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(n, false);
    for (const auto& cyc : tokenize_cycles(text, base, n)) {
        for (int s : cyc) {
            if (used[s])
                throw Error("malformed-cycles", "symbol " + std::to_string(s + base) + " repeated");
            used[s] = true;
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return Permutation(std::move(img));
}

std::string Permutation::to_cycles(int base) const {
    const int n = degree();
    bool wide = (n + base - 1) > 9;
    std::vector<bool> seen(n, false);
    std::ostringstream out;
    bool any = false;
    for (int start = 0; start < n; ++start) {
        if (seen[start] || images_[start] == start) continue;
        out << '(';
        int cur = start;
        bool first = true;
        while (!seen[cur]) {
            seen[cur] = true;
            if (!first && wide) out << ' ';
            out << (cur + base);
            first = false;
            cur = images_[cur];
        }
        out << ')';
        any = true;
    }
    return any ? out.str() : "()";
}

}  // namespace cdp

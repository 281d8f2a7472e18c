#include "cdp/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "cdp/error.hpp"

namespace cdp::io {

json perms_to_json(const CdpSet& s) {
    json perms = json::array();
    for (const auto& p : s.perms()) perms.push_back(p.images());
    return json{{"n", s.n()}, {"perms", perms}};
}

CdpSet perms_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("perms"))
        throw Error("malformed-json", "expected {\"n\":.., \"perms\":[..]}");
    const int n = j.at("n").get<int>();
    std::vector<Permutation> perms;
    for (const auto& row : j.at("perms")) {
        std::vector<int> img = row.get<std::vector<int>>();
        if (static_cast<int>(img.size()) != n)
            throw Error("dimension-error", "permutation length does not match n");
        perms.emplace_back(std::move(img));
    }
    return CdpSet::verify(std::move(perms));
}

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
        return Complex(j.at(0).get<double>(), j.at(1).get<double>());
    throw Error("malformed-json", "complex entries are numbers or [re, im] pairs");
}

}  // namespace

json family_to_json(const CoefficientFamily& f) {
    json mats = json::array();
    for (const auto& a : f.mats) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(complex_to_json(a(i, j)));
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    return json{{"n", f.n()}, {"mats", mats}};
}

CoefficientFamily family_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("mats"))
        throw Error("malformed-json", "expected {\"n\":.., \"mats\":[..]}");
    const int n = j.at("n").get<int>();
    std::vector<CMat> mats;
    for (const auto& rows : j.at("mats")) {
        if (static_cast<int>(rows.size()) != n) throw Error("dimension-error", "matrix row count");
        CMat a(n, n);
        for (int r = 0; r < n; ++r) {
            const auto& row = rows.at(r);
            if (static_cast<int>(row.size()) != n) throw Error("dimension-error", "matrix column count");
            for (int c = 0; c < n; ++c) a(r, c) = complex_from_json(row.at(c));
        }
        mats.push_back(std::move(a));
    }
    if (static_cast<int>(mats.size()) != n)
        throw Error("dimension-error", "family needs exactly n matrices");
    return CoefficientFamily(std::move(mats));
}

json dense_to_json(const CMat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json report_to_json(const SeparabilityReport& r) {
    json j{{"n", r.n},
           {"hermitian", r.hermitian},
           {"psd", r.psd},
           {"normalized", r.normalized},
           {"abelian", r.abelian},
           {"ppt", r.ppt},
           {"pt_min_eigenvalue", r.pt_min_eigenvalue},
           {"pt_block_min", r.pt_block_min},
           {"realignment_sum", r.realignment_sum},
           {"realignment_pass", r.realignment_pass},
           {"realignment_closed_form", r.realignment_closed_form},
           {"majorisation",
            json{{"vs_rho1", r.majorisation.vs_rho1}, {"vs_rho2", r.majorisation.vs_rho2}}}};
    if (r.pt_family) j["pt_family"] = family_to_json(*r.pt_family);
    if (r.pt_sigma) j["pt_sigma"] = perms_to_json(*r.pt_sigma);
    return j;
}

std::vector<Permutation> read_cycles_text(const std::string& text, int n, int base) {
    std::istringstream in(text);
    std::string line;
    int file_base = 0;
    std::vector<std::string> bodies;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        std::string comment = hash == std::string::npos ? "" : line.substr(hash + 1);
        if (hash != std::string::npos) line = line.substr(0, hash);
        // directive: "# base: 1"
        const auto basepos = comment.find("base:");
        if (basepos != std::string::npos) {
            try {
                file_base = std::stoi(comment.substr(basepos + 5));
            } catch (const std::exception&) {
                throw Error("malformed-cycles", "unreadable base directive: " + comment);
            }
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        bodies.push_back(line.substr(first, last - first + 1));
    }
    const int use_base = base >= 0 ? base : file_base;
    if (n <= 0) {
        // infer the degree from the largest symbol; numeric tokens when the
        // notation is separated, single digits otherwise
        int max_sym = -1;
        auto as_symbol = [](const std::string& tok) {
            try {
                return std::stoi(tok);
            } catch (const std::exception&) {
                throw Error("malformed-cycles", "bad cycle symbol '" + tok + "'");
            }
        };
        for (const auto& b : bodies) {
            if (b.find_first_of(", \t") != std::string::npos) {
                std::string tok;
                for (char ch : b + " ") {
                    if (std::isdigit(static_cast<unsigned char>(ch))) {
                        tok += ch;
                    } else if (!tok.empty()) {
                        max_sym = std::max(max_sym, as_symbol(tok));
                        tok.clear();
                    }
                }
            } else {
                for (char ch : b)
                    if (std::isdigit(static_cast<unsigned char>(ch)))
                        max_sym = std::max(max_sym, ch - '0');
            }
        }
        if (max_sym < 0) throw Error("malformed-cycles", "cannot infer degree from file");
        n = max_sym - use_base + 1;
    }
    std::vector<Permutation> perms;
    perms.reserve(bodies.size());
    for (const auto& b : bodies) perms.push_back(Permutation::from_cycles(b, n, use_base));
    return perms;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io-error", "cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

CdpSet load_set(const std::string& path, int n, int base) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return perms_from_json(json::parse(text));
    return CdpSet::verify(read_cycles_text(text, n, base));
}

CoefficientFamily load_family(const std::string& path) {
    return family_from_json(json::parse(read_file(path)));
}

std::vector<std::vector<int>> load_table(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<int>> table;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream row(line);
        std::vector<int> vals;
        int v;
        while (row >> v) vals.push_back(v);
        if (!vals.empty()) table.push_back(std::move(vals));
    }
    return table;
}

namespace {

std::string format_entry(const Complex& z, bool structural_zero) {
    if (structural_zero) return "·";
    std::ostringstream out;
    if (std::abs(z.imag()) < 1e-15) {
        const double re = z.real();
        if (re == std::floor(re) && std::abs(re) < 1e6) {
            out << static_cast<long long>(re);
        } else {
            out << std::setprecision(6) << re;
        }
    } else {
        out << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+")
            << std::setprecision(6) << std::abs(z.imag()) << "i";
    }
    return out.str();
}

std::string grid_impl(const CMat& dense, int block,
                      const std::function<bool(int, int)>& structural) {
    const int dim = static_cast<int>(dense.rows());
    std::vector<std::vector<std::string>> cells(dim, std::vector<std::string>(dim));
    std::size_t width = 1;
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            cells[r][c] = format_entry(dense(r, c), structural(r, c));
            // the dot glyph is multibyte; count it as one column
            const std::size_t w = cells[r][c] == "·" ? 1 : cells[r][c].size();
            width = std::max(width, w);
        }
    std::ostringstream out;
    for (int r = 0; r < dim; ++r) {
        if (block > 0 && r > 0 && r % block == 0) out << '\n';
        for (int c = 0; c < dim; ++c) {
            if (block > 0 && c > 0 && c % block == 0) out << " |";
            const std::size_t w = cells[r][c] == "·" ? 1 : cells[r][c].size();
            out << ' ' << std::string(width - w, ' ') << cells[r][c];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render_grid(const CMat& dense, const CdpSet& sigma) {
    const int n = sigma.n();
    if (dense.rows() != n * n || dense.cols() != n * n)
        throw Error("dimension-error", "grid: dense matrix must be n^2 x n^2");
    std::vector<std::vector<int>> block_of(n, std::vector<int>(n, -1));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) block_of[i][sigma[k](i)] = k;
    return grid_impl(dense, n, [&](int r, int c) {
        const int i = r / n, p = r % n, j = c / n, q = c % n;
        return sigma[block_of[i][p]](j) != q;
    });
}

std::string render_grid(const CMat& dense, int block) {
    return grid_impl(dense, block, [&](int r, int c) { return dense(r, c) == Complex(0.0, 0.0); });
}

}  // namespace cdp::io

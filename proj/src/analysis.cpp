#include "xsolve/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xsolve {

double tau(const std::vector<double>& t) {
    if (t.empty())
        throw std::invalid_argument("tau of an empty vector");
    for (double x : t)
        if (!(x > 0))
            throw std::invalid_argument("tau entries must be positive");
    if (t.size() == 1)
        return 1.0;

    auto residual = [&](double b) {
        double s = -1.0;
        for (double x : t)
            s += std::pow(b, -x);
        return s;
    };

    double lo = 1.0, hi = 2.0;
    while (residual(hi) > 0)
        hi *= 2;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (residual(mid) > 0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15)
            break;
    }
    return 0.5 * (lo + hi);
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

BranchTerm parseExpr(const std::string& text, const std::string& where) {
    BranchTerm out;
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty branch expression in " + where);

    size_t i = 0;
    while (i < s.size()) {
        double sign = 1.0;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1.0 : 1.0;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-')
            ++j;
        std::string atom = s.substr(i, j - i);
        i = j;

        auto factors = splitOn(atom, '*');
        size_t pos = 0;
        double coef;
        try {
            coef = std::stod(factors[0], &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad term '" + atom + "' in " + where);
        }
        if (pos != factors[0].size())
            throw std::invalid_argument("bad coefficient '" + factors[0] + "' in " + where);
        coef *= sign;

        bool hasW = false, hasD = false, hasH = false;
        for (size_t k = 1; k < factors.size(); ++k) {
            if (factors[k] == "w")
                hasW = true;
            else if (factors[k] == "d")
                hasD = true;
            else if (factors[k] == "h")
                hasH = true;
            else
                throw std::invalid_argument("unknown factor '" + factors[k] + "' in " + where);
        }
        if (hasW && hasD)
            throw std::invalid_argument("w*d term not supported in " + where);
        if (hasW)
            (hasH ? out.cwh : out.cw) += coef;
        else if (hasD)
            (hasH ? out.cdh : out.cd) += coef;
        else if (hasH)
            out.ch += coef;
        else
            out.c += coef;
    }
    return out;
}

} // namespace

std::vector<CatalogEntry> parseCatalog(std::istream& in) {
    std::vector<CatalogEntry> out;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#')
            continue;
        std::string where = "catalog line " + std::to_string(lineNo);
        auto fields = splitOn(s, '|');
        if (fields.size() != 4)
            throw std::invalid_argument(where + ": expected 4 '|' fields");

        CatalogEntry e;
        e.name = strip(fields[0]);
        if (e.name.empty())
            throw std::invalid_argument(where + ": empty name");

        for (const std::string& expr : splitOn(fields[1], ';'))
            e.terms.push_back(parseExpr(expr, where));
        if (e.terms.size() < 2)
            throw std::invalid_argument(where + ": need at least two branches");

        std::string hr = strip(fields[2]);
        if (hr == "-") {
            e.hLo = 1;
            e.hHi = 0;
        } else if (hr.rfind("h=", 0) == 0) {
            size_t dots = hr.find("..");
            if (dots == std::string::npos)
                throw std::invalid_argument(where + ": bad h-range '" + hr + "'");
            e.hLo = std::stoi(hr.substr(2, dots - 2));
            e.hHi = std::stoi(hr.substr(dots + 2));
            if (e.hLo > e.hHi)
                throw std::invalid_argument(where + ": empty h-range");
        } else {
            throw std::invalid_argument(where + ": bad h-range '" + hr + "'");
        }

        std::string ex = strip(fields[3]);
        if (ex != "-")
            e.expected = std::stod(ex);

        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> parseCatalogText(const std::string& text) {
    std::istringstream in(text);
    return parseCatalog(in);
}

CatalogEvalResult catalogEval(const std::vector<CatalogEntry>& entries, double w) {
    if (entries.empty())
        throw std::invalid_argument("empty catalog");
    CatalogEvalResult r;
    for (const auto& e : entries) {
        CatalogRow row;
        row.name = e.name;
        row.expected = e.expected;
        bool noH = e.hLo > e.hHi;
        int lo = noH ? 0 : e.hLo;
        int hi = noH ? 0 : e.hHi;
        double best = -1;
        int bestH = lo;
        for (int h = lo; h <= hi; ++h) {
            std::vector<double> v;
            for (const auto& term : e.terms)
                v.push_back(term.value(w, h));
            double t = tau(v);
            if (t > best) {
                best = t;
                bestH = h;
            }
        }
        row.tauValue = best;
        row.hStar = bestH;
        if (best > r.maxTau) {
            r.maxTau = best;
            r.maxName = e.name;
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

WeightSearchResult weightSearch(const std::vector<CatalogEntry>& entries,
                                double lo, double hi, double step) {
    if (!(step > 0) || !(hi >= lo))
        throw std::invalid_argument("bad weight search range");
    WeightSearchResult r;
    double best = std::numeric_limits<double>::infinity();
    long n = (long)std::floor((hi - lo) / step + 1e-9);
    for (long i = 0; i <= n; ++i) {
        double w = lo + i * step;
        double m = catalogEval(entries, w).maxTau;
        r.curve.emplace_back(w, m);
        best = std::min(best, m);
    }
    // report the midpoint of the minimizing plateau; the curve is flat near
    // its optimum, so any single grid argmin would be arbitrary
    double first = 0, last = 0;
    bool seen = false;
    for (const auto& [w, m] : r.curve)
        if (m <= best + 1e-9) {
            if (!seen)
                first = w;
            last = w;
            seen = true;
        }
    r.bestW = 0.5 * (first + last);
    r.bestTau = best;
    return r;
}

void recordBranch(SearchStats& stats, double parentMu,
                  const std::vector<double>& childMus) {
    for (double c : childMus) {
        stats.branchDrops.emplace_back(parentMu, c);
        double drop = parentMu - c;
        if (drop < stats.minBranchDrop)
            stats.minBranchDrop = drop;
        if (c >= parentMu - 1e-9)
            ++stats.measureViolations;
    }
}

} // namespace xsolve

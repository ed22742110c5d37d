#include "braids/json_io.hpp"

namespace braids {

Json to_json(const Laurent& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["q"] = e.q;
        term["t"] = e.t;
        term["c"] = c.get_str();
        terms.push_back(std::move(term));
    }
    return terms;
}

Laurent laurent_from_json(const Json& j) {
    Laurent p;
    for (const auto& term : j) {
        mpz_class c(term.at("c").get<std::string>(), 10);
        p += Laurent::monomial(c, term.at("q").get<int>(), term.at("t").get<int>());
    }
    return p;
}

std::string mpq_str(const mpq_class& x) {
    return x.get_den() == 1 ? x.get_num().get_str() : x.get_str();
}

mpq_class mpq_from_str(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        mpz_class num, den(1);
        try {
            num = mpz_class(digits, 10);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational: " + s);
        }
        for (size_t k = 0; k < frac_len; ++k) den *= 10;
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    }
    try {
        mpq_class r(s, 10);
        if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: " + s);
    }
}

Json to_json(const SymMatrix& m) {
    Json j;
    j["n"] = m.n();
    Json rows = Json::array();
    for (int r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const RatMatrix& m) {
    Json j;
    j["n"] = m.n();
    Json rows = Json::array();
    for (int r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(mpq_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const FloatMatrix& m) {
    Json j;
    j["n"] = m.n();
    Json rows = Json::array();
    for (int r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

SymMatrix sym_matrix_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    SymMatrix m(n);
    const Json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != m.dim())
        throw ParseError("matrix row count mismatch");
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) m.at(r, c) = laurent_from_json(rows[r][c]);
    return m;
}

Json to_json(Edge e) { return Json::array({e.i, e.j}); }

Edge edge_from_json(const Json& j, int n) {
    if (!j.is_array() || j.size() != 2) throw ParseError("edge must be [i, j]");
    return make_edge(j[0].get<int>(), j[1].get<int>(), n);
}

Json to_json(const NCPartition& p) {
    Json j;
    j["n"] = p.n;
    j["blocks"] = p.blocks;
    return j;
}

NCPartition partition_from_json(const Json& j) {
    return make_partition(j.at("n").get<int>(),
                          j.at("blocks").get<std::vector<std::vector<int>>>());
}

Json to_json(const RatNorms& v) {
    Json j;
    j["n"] = v.n;
    Json a = Json::array();
    for (const auto& x : v.a) a.push_back(mpq_str(x));
    j["a"] = std::move(a);
    return j;
}

Json to_json(const FloatNorms& v) {
    Json j;
    j["n"] = v.n;
    j["a"] = v.a;
    return j;
}

RatNorms rat_norms_from_json(const Json& j) {
    RatNorms v;
    v.n = j.at("n").get<int>();
    for (const auto& x : j.at("a")) {
        if (x.is_string())
            v.a.push_back(mpq_from_str(x.get<std::string>()));
        else if (x.is_number_integer())
            v.a.push_back(mpq_class(x.get<long>()));
        else
            throw ParseError("norm entries must be exact rationals");
    }
    if (static_cast<int>(v.a.size()) != edge_count(v.n))
        throw ParseError("norm vector length mismatch");
    return v;
}

Json to_json(const Report& r) {
    Json j;
    j["title"] = r.title;
    j["total"] = r.total();
    j["passed"] = r.total() - r.failed();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace braids

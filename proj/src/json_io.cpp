#include "ncbir/json_io.hpp"

#include <utility>

namespace ncbir {

using nlohmann::json;

namespace {

const json& require_key(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(where) + ": missing key '" + key + "'");
    return j.at(key);
}

}  // namespace

json ring_to_json(const RingDescriptor& ring) {
    switch (ring.kind()) {
        case RingKind::Fraction:
            return json{{"kind", "fraction"}};
        case RingKind::ModP:
            return json{{"kind", "mod-p"}, {"modulus", ring.modulus()}};
        case RingKind::BlockMatrix:
            return json{{"kind", "block-matrix"},
                        {"block_size", ring.block_size()},
                        {"inner", ring_to_json(ring.inner())}};
    }
    throw Error("unreachable ring kind");
}

RingDescriptor ring_from_json(const json& j) {
    const json& kind = require_key(j, "kind", "ring descriptor");
    if (!kind.is_string()) throw ParseError("ring descriptor: 'kind' must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "fraction") return RingDescriptor::fraction();
    if (k == "mod-p") {
        const json& m = require_key(j, "modulus", "ring descriptor");
        if (!m.is_number_unsigned() && !m.is_number_integer())
            throw ParseError("ring descriptor: 'modulus' must be an integer");
        const long long v = m.get<long long>();
        if (v < 2) throw ParseError("ring descriptor: modulus must be >= 2");
        return RingDescriptor::mod_p(static_cast<std::uint64_t>(v));
    }
    if (k == "block-matrix") {
        const json& bs = require_key(j, "block_size", "ring descriptor");
        if (!bs.is_number_integer() && !bs.is_number_unsigned())
            throw ParseError("ring descriptor: 'block_size' must be an integer");
        return RingDescriptor::block_matrix(bs.get<int>(),
                                            ring_from_json(require_key(j, "inner", "ring descriptor")));
    }
    throw ParseError("ring descriptor: unknown kind '" + k + "'");
}

json elem_to_json(const RingElem& x) {
    switch (x.ring().kind()) {
        case RingKind::Fraction: {
            const mpq_class& q = x.fraction_value();
            return q.get_num().get_str() + "/" + q.get_den().get_str();
        }
        case RingKind::ModP:
            return x.residue_value();
        case RingKind::BlockMatrix: {
            const int k = x.ring().block_size();
            json rows = json::array();
            for (int i = 0; i < k; ++i) {
                json row = json::array();
                for (int jj = 0; jj < k; ++jj)
                    row.push_back(elem_to_json(x.block_entries()[i * k + jj]));
                rows.push_back(std::move(row));
            }
            return rows;
        }
    }
    throw Error("unreachable ring kind");
}

RingElem elem_from_json(const RingDescriptor& ring, const json& j) {
    switch (ring.kind()) {
        case RingKind::Fraction: {
            if (j.is_number_integer())
                return RingElem::from_int(ring, j.get<long long>());
            if (!j.is_string())
                throw ParseError("fraction element must be a \"num/den\" string or an integer");
            try {
                mpq_class q(j.get<std::string>(), 10);
                if (q.get_den() == 0) throw ParseError("fraction with zero denominator");
                q.canonicalize();
                return RingElem::fraction(q);
            } catch (const std::invalid_argument&) {
                throw ParseError("malformed fraction '" + j.get<std::string>() + "'");
            }
        }
        case RingKind::ModP: {
            if (j.is_number_unsigned()) return RingElem::residue(ring, j.get<std::uint64_t>());
            if (j.is_number_integer()) return RingElem::from_int(ring, j.get<long long>());
            throw ParseError("mod-p element must be an integer");
        }
        case RingKind::BlockMatrix: {
            const int k = ring.block_size();
            if (!j.is_array() || static_cast<int>(j.size()) != k)
                throw ParseError("block element must be an array of " + std::to_string(k) +
                                 " rows");
            const RingDescriptor inner = ring.inner();
            std::vector<RingElem> entries;
            entries.reserve(static_cast<std::size_t>(k) * k);
            for (const json& row : j) {
                if (!row.is_array() || static_cast<int>(row.size()) != k)
                    throw ParseError("block element rows must have " + std::to_string(k) +
                                     " entries");
                for (const json& cell : row) entries.push_back(elem_from_json(inner, cell));
            }
            return RingElem::block(ring, std::move(entries));
        }
    }
    throw Error("unreachable ring kind");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int jj = 0; jj < m.n(); ++jj) row.push_back(elem_to_json(m.at(i, jj)));
        rows.push_back(std::move(row));
    }
    return json{{"ring", ring_to_json(m.ring())}, {"n", m.n()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    const RingDescriptor ring = ring_from_json(require_key(j, "ring", "matrix"));
    const json& nj = require_key(j, "n", "matrix");
    if (!nj.is_number_integer() && !nj.is_number_unsigned())
        throw ParseError("matrix: 'n' must be an integer");
    const int n = nj.get<int>();
    if (n < 1) throw ParseError("matrix: 'n' must be >= 1");
    const json& entries = require_key(j, "entries", "matrix");
    if (!entries.is_array() || static_cast<int>(entries.size()) != n)
        throw ParseError("matrix: 'entries' must be an array of " + std::to_string(n) + " rows");
    Matrix m(ring, n);
    for (int r = 0; r < n; ++r) {
        const json& row = entries.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("matrix: row " + std::to_string(r + 1) + " must have " +
                             std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c) m.set(r, c, elem_from_json(ring, row.at(c)));
    }
    return m;
}

json hat_to_json(const HatParams& p) {
    return json{{"ring", ring_to_json(p.ring())},
                {"a", elem_to_json(p.a)},
                {"b", elem_to_json(p.b)},
                {"c", elem_to_json(p.c)},
                {"d", elem_to_json(p.d)}};
}

HatParams hat_from_json(const json& j) {
    const RingDescriptor ring = ring_from_json(require_key(j, "ring", "hat parameters"));
    return HatParams(elem_from_json(ring, require_key(j, "a", "hat parameters")),
                     elem_from_json(ring, require_key(j, "b", "hat parameters")),
                     elem_from_json(ring, require_key(j, "c", "hat parameters")),
                     elem_from_json(ring, require_key(j, "d", "hat parameters")));
}

json witness_to_json(const EquivWitness& w, const RingDescriptor& ring) {
    json out{{"ring", ring_to_json(ring)}, {"verified", true}};
    if (w.kind == EquivWitness::Kind::CentralConjugation) {
        out["kind"] = "central-conjugation";
        out["x"] = elem_to_json(*w.x);
    } else {
        out["kind"] = "diag-pair";
    }
    json d1 = json::array(), d2 = json::array();
    for (const RingElem& e : w.pair.d1) d1.push_back(elem_to_json(e));
    for (const RingElem& e : w.pair.d2) d2.push_back(elem_to_json(e));
    out["d1"] = std::move(d1);
    out["d2"] = std::move(d2);
    return out;
}

json domain_report_to_json(const DomainReport& r) {
    json checklist = json::array();
    for (const ChecklistEntry& e : r.checklist)
        checklist.push_back(json{{"label", e.label}, {"invertible", e.invertible}});
    json out{{"member", r.member}, {"checklist", std::move(checklist)}};
    if (r.failing_element) out["failing_element"] = *r.failing_element;
    return out;
}

json suite_report_to_json(const Report& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        json entry{{"name", c.name},
                   {"trials_run", c.trials_run},
                   {"rejections", c.rejections},
                   {"passes", c.passes},
                   {"failures", c.failures}};
        if (c.first_counterexample) entry["first_counterexample"] = *c.first_counterexample;
        if (c.note) entry["note"] = *c.note;
        checks.push_back(std::move(entry));
    }
    json config{{"ring", ring_to_json(r.config.ring)},
                {"trials", r.config.trials},
                {"seed", r.config.seed},
                {"depth", r.config.depth},
                {"checks", r.config.checks}};
    return json{{"report_version", r.report_version},
                {"config", std::move(config)},
                {"checks", std::move(checks)},
                {"overall", r.overall_pass ? "pass" : "fail"}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ncbir

#include "hopfca/json_io.hpp"

#include <fstream>
#include <limits>

#include "hopfca/errors.hpp"

namespace hopfca {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("malformed JSON: " + what); }

std::size_t get_size(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) bad(std::string(key) + " must be a nonnegative integer");
    return j[key].get<std::size_t>();
}

Json tensor_to_json(const SparseTensor& t) {
    Json out = Json::array();
    for (const TensorEntry& e : t) out.push_back({e.i, e.j, e.k, scalar_to_json(e.c)});
    return out;
}

SparseTensor tensor_from_json(const FieldSpec& f, std::size_t dim, const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    SparseTensor t;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 4) bad(std::string(what) + " entries must be [i,j,k,c]");
        TensorEntry te;
        te.i = e[0].get<std::size_t>();
        te.j = e[1].get<std::size_t>();
        te.k = e[2].get<std::size_t>();
        if (te.i >= dim || te.j >= dim || te.k >= dim) bad(std::string(what) + " index out of range");
        te.c = scalar_from_json(f, e[3]);
        t.push_back(std::move(te));
    }
    sort_tensor(t);
    return t;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Scalar& s : v) out.push_back(scalar_to_json(s));
    return out;
}

Vec vec_from_json(const FieldSpec& f, std::size_t dim, const Json& j, const char* what) {
    if (!j.is_array() || j.size() != dim) bad(std::string(what) + " must be an array of length dim");
    Vec v;
    for (const Json& e : j) v.push_back(scalar_from_json(f, e));
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.row(r)));
    return out;
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j, const char* what,
                        std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) bad(std::string(what) + " has the wrong number of rows");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vec row = vec_from_json(f, cols, j[r], what);
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

IntMat intmat_from_json(const Json& j, const char* what, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) bad(std::string(what) + " has the wrong number of rows");
    IntMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) bad(std::string(what) + " has ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_number_integer()) bad(std::string(what) + " entries must be integers");
            m.at(r, c) = j[r][c].get<long long>();
        }
    }
    return m;
}

Json intmat_to_json(const IntMat& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

Json field_to_json(const FieldSpec& f) {
    Json j;
    if (f.is_prime_field()) {
        j["kind"] = "prime";
        j["p"] = f.p;
    } else {
        j["kind"] = "rational";
    }
    return j;
}

FieldSpec field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("field.kind missing");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") {
        if (!j.contains("p") || !j["p"].is_number_unsigned()) bad("field.p missing");
        return FieldSpec::prime(j["p"].get<std::uint64_t>());
    }
    bad("field.kind must be \"prime\" or \"rational\"");
}

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return Json(s.residue());
    if (s.den() == 1) {
        // emit plain integers when they fit, else a fraction string
        if (s.num() >= std::numeric_limits<std::int64_t>::min() &&
            s.num() <= std::numeric_limits<std::int64_t>::max())
            return Json(static_cast<std::int64_t>(s.num()));
    }
    return Json(s.num().str() + "/" + s.den().str());
}

Scalar scalar_from_json(const FieldSpec& f, const Json& j) {
    if (j.is_number_integer()) return Scalar::of(f, j.get<long long>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Scalar::of_big(f, BigInt(s));
            return Scalar::fraction(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::exception&) {
            bad("unparsable scalar \"" + s + "\"");
        }
    }
    bad("scalar must be an integer or a \"num/den\" string");
}

Json hopf_to_json(const HopfPtr& h) {
    Json j;
    j["field"] = field_to_json(h->field());
    j["dim"] = h->dim();
    if (!h->basis_names().empty()) j["basis_names"] = h->basis_names();
    j["mul"] = tensor_to_json(h->mul());
    j["unit"] = vec_to_json(h->unit());
    j["comul"] = tensor_to_json(h->comul());
    j["counit"] = vec_to_json(h->counit());
    j["antipode"] = matrix_to_json(h->antipode());
    const HopfMetadata& md = h->metadata();
    if (!md.origin.empty() || md.known_group_likes || md.known_dual_group_likes) {
        Json m;
        if (!md.origin.empty()) m["origin"] = md.origin;
        if (md.known_group_likes) {
            Json g = Json::array();
            for (const Vec& v : *md.known_group_likes) g.push_back(vec_to_json(v));
            m["group_likes"] = std::move(g);
        }
        if (md.known_dual_group_likes) {
            Json g = Json::array();
            for (const Vec& v : *md.known_dual_group_likes) g.push_back(vec_to_json(v));
            m["dual_group_likes"] = std::move(g);
        }
        j["metadata"] = std::move(m);
    }
    return j;
}

HopfPtr hopf_from_json(const Json& j) {
    if (!j.is_object()) bad("Hopf algebra must be a JSON object");
    FieldSpec f = field_from_json(j.contains("field") ? j["field"] : Json());
    std::size_t dim = get_size(j, "dim");
    if (dim == 0) bad("dim must be positive");
    std::vector<std::string> names;
    if (j.contains("basis_names")) {
        if (!j["basis_names"].is_array() || j["basis_names"].size() != dim)
            bad("basis_names must list one name per basis vector");
        for (const Json& n : j["basis_names"]) names.push_back(n.get<std::string>());
    }
    if (!j.contains("mul") || !j.contains("unit") || !j.contains("comul") || !j.contains("counit") ||
        !j.contains("antipode"))
        bad("missing structure tensors (need mul, unit, comul, counit, antipode)");
    SparseTensor mul = tensor_from_json(f, dim, j["mul"], "mul");
    Vec unit = vec_from_json(f, dim, j["unit"], "unit");
    SparseTensor comul = tensor_from_json(f, dim, j["comul"], "comul");
    Vec counit = vec_from_json(f, dim, j["counit"], "counit");
    Matrix antipode = matrix_from_json(f, j["antipode"], "antipode", dim, dim);
    HopfMetadata md;
    if (j.contains("metadata")) {
        const Json& m = j["metadata"];
        if (!m.is_object()) bad("metadata must be an object");
        if (m.contains("origin")) md.origin = m["origin"].get<std::string>();
        auto read_vecs = [&](const char* key) -> std::optional<std::vector<Vec>> {
            if (!m.contains(key)) return std::nullopt;
            std::vector<Vec> out;
            for (const Json& v : m[key]) out.push_back(vec_from_json(f, dim, v, key));
            return out;
        };
        md.known_group_likes = read_vecs("group_likes");
        md.known_dual_group_likes = read_vecs("dual_group_likes");
    }
    return std::make_shared<const HopfPresentation>(f, dim, std::move(mul), std::move(unit),
                                                    std::move(comul), std::move(counit),
                                                    std::move(antipode), std::move(names),
                                                    std::move(md));
}

Json morphism_to_json(const HopfMorphism& f) {
    Json j;
    j["source"] = hopf_to_json(f.source);
    j["target"] = hopf_to_json(f.target);
    j["matrix"] = matrix_to_json(f.matrix);
    return j;
}

HopfMorphism morphism_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("matrix"))
        bad("morphism needs source, target, matrix");
    HopfMorphism f;
    f.source = hopf_from_json(j["source"]);
    f.target = hopf_from_json(j["target"]);
    f.matrix = matrix_from_json(f.source->field(), j["matrix"], "matrix", f.target->dim(),
                                f.source->dim());
    if (!(f.source->field() == f.target->field())) bad("morphism endpoints live over different fields");
    return f;
}

Json cw_to_json(const CWComplexData& kw) {
    Json j;
    j["cells"] = kw.cells;
    Json b = Json::array();
    for (const IntMat& m : kw.boundary) b.push_back(intmat_to_json(m));
    j["boundary"] = std::move(b);
    if (!kw.name.empty()) j["name"] = kw.name;
    return j;
}

CWComplexData cw_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array()) bad("CW complex needs cells");
    CWComplexData kw;
    for (const Json& c : j["cells"]) kw.cells.push_back(c.get<std::size_t>());
    if (j.contains("boundary")) {
        const Json& b = j["boundary"];
        if (!b.is_array() || (kw.cells.size() >= 1 && b.size() + 1 != kw.cells.size()))
            bad("CW complex needs one boundary matrix per positive dimension");
        for (std::size_t q = 1; q < kw.cells.size(); ++q)
            kw.boundary.push_back(intmat_from_json(b[q - 1], "boundary", kw.cells[q - 1], kw.cells[q]));
    }
    if (j.contains("name")) kw.name = j["name"].get<std::string>();
    kw.validate();
    return kw;
}

SubcomplexSpec subcomplex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("keep") || !j["keep"].is_array()) bad("subcomplex needs a keep array");
    SubcomplexSpec s;
    for (const Json& dim : j["keep"]) {
        std::vector<std::size_t> idx;
        for (const Json& i : dim) idx.push_back(i.get<std::size_t>());
        s.push_back(std::move(idx));
    }
    return s;
}

Json fp_chain_to_json(const FpChainComplex& c) {
    Json j;
    j["p"] = c.field.p;
    j["dims"] = c.dims;
    Json b = Json::array();
    for (const Matrix& m : c.boundary) b.push_back(matrix_to_json(m));
    j["boundary"] = std::move(b);
    return j;
}

FpChainComplex fp_chain_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("dims")) bad("chain complex needs p and dims");
    FpChainComplex c;
    c.field = FieldSpec::prime(j["p"].get<std::uint64_t>());
    for (const Json& d : j["dims"]) c.dims.push_back(d.get<std::size_t>());
    if (j.contains("boundary"))
        for (std::size_t q = 1; q < c.dims.size(); ++q)
            c.boundary.push_back(matrix_from_json(c.field, j["boundary"][q - 1], "boundary",
                                                  c.dims[q - 1], c.dims[q]));
    c.validate();
    return c;
}

Json action_to_json(const ActionSpec& spec) {
    Json j;
    j["prime"] = spec.prime;
    Json t = Json::array();
    for (const HopfMorphism& f : spec.table) t.push_back(matrix_to_json(f.matrix));
    j["table"] = std::move(t);
    return j;
}

ActionSpec action_from_json(const Json& j, const HopfPtr& base) {
    if (!j.is_object() || !j.contains("prime")) bad("action needs a prime");
    std::uint64_t p = j["prime"].get<std::uint64_t>();
    if (j.contains("canonical") && j["canonical"].get<bool>()) return canonical_action(base, p);
    if (!j.contains("table")) bad("action needs canonical: true or a table");
    ActionSpec spec;
    spec.base = base;
    spec.prime = p;
    for (const Json& m : j["table"])
        spec.table.push_back({base, base, matrix_from_json(base->field(), m, "table", base->dim(),
                                                           base->dim())});
    CheckReport rep = verify_action(spec);
    if (!rep.all_pass()) throw MathError("action table fails ring laws: " + rep.summary());
    return spec;
}

Json homology_result_to_json(const HomologyResult& r, bool emit_presentations) {
    Json j = Json::array();
    for (const DegreeSummary& s : r.degrees) {
        Json d;
        d["degree"] = s.degree;
        d["dim"] = s.dim;
        if (s.ge) d["ge"] = *s.ge;
        if (s.ge_dual) d["ge_dual"] = *s.ge_dual;
        d["semisimple"] = s.semisimple;
        d["cosemisimple"] = s.cosemisimple;
        d["class"] = to_string(s.cls);
        if (emit_presentations) d["presentation"] = hopf_to_json(s.algebra);
        j.push_back(std::move(d));
    }
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace hopfca

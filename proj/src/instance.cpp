#include "laxepi/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace laxepi {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    fail(ErrorCode::Parse, where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) parse_fail(where, "missing field '" + key + "'");
    return *it;
}

std::string str(const Json& j, const std::string& where) {
    if (!j.is_string()) parse_fail(where, "expected a string");
    return j.get<std::string>();
}

std::size_t count(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        parse_fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

Rational rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) parse_fail(where, "expected a rational as \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        parse_fail(where, e.what());
    }
}

Vector vector_of(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array");
    if (j.size() != n) parse_fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix matrix_of(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array of rows");
    // An empty list stands for any matrix with no entries.
    if (j.empty() && rows * cols == 0) return Matrix(rows, cols);
    if (j.size() != rows)
        parse_fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row = vector_of(j[r], cols, where + "[" + std::to_string(r) + "]");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        a.push_back(std::move(row));
    }
    return a;
}

std::size_t object_index(const LinearCategory& c, const Json& j, const std::string& where) {
    std::string id = str(j, where);
    auto i = c.find(id);
    if (!i) parse_fail(where, "unknown object '" + id + "'");
    return *i;
}

// ---- categories ----

QuiverData parse_quiver(const Json& j, const std::string& where) {
    QuiverData out;
    Quiver& q = out.quiver;
    const Json& verts = field(j, "vertices", where);
    if (!verts.is_array()) parse_fail(where + ".vertices", "expected an array");
    for (std::size_t i = 0; i < verts.size(); ++i) q.vertices.push_back(str(verts[i], where + ".vertices"));
    auto vertex = [&](const Json& v, const std::string& w) {
        std::string id = str(v, w);
        for (std::size_t i = 0; i < q.vertices.size(); ++i)
            if (q.vertices[i] == id) return i;
        parse_fail(w, "unknown vertex '" + id + "'");
    };
    if (j.contains("arrows")) {
        const Json& arrows = j["arrows"];
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            std::string w = where + ".arrows[" + std::to_string(i) + "]";
            q.arrows.push_back({str(field(arrows[i], "name", w), w + ".name"),
                                vertex(field(arrows[i], "source", w), w + ".source"),
                                vertex(field(arrows[i], "target", w), w + ".target")});
        }
    }
    auto arrow = [&](const Json& a, const std::string& w) {
        std::string id = str(a, w);
        for (std::size_t i = 0; i < q.arrows.size(); ++i)
            if (q.arrows[i].name == id) return i;
        parse_fail(w, "unknown arrow '" + id + "'");
    };
    if (j.contains("relations")) {
        const Json& rels = j["relations"];
        for (std::size_t r = 0; r < rels.size(); ++r) {
            QuiverRelation rel;
            for (std::size_t t = 0; t < rels[r].size(); ++t) {
                std::string w = where + ".relations[" + std::to_string(r) + "][" + std::to_string(t) + "]";
                const Json& term = rels[r][t];
                if (!term.is_array() || term.size() != 2) parse_fail(w, "expected [coeff, [arrows...]]");
                Path p;
                for (const auto& a : term[1]) p.push_back(arrow(a, w));
                rel.terms.emplace_back(rational(term[0], w), std::move(p));
            }
            q.relations.push_back(std::move(rel));
        }
    }
    q.nilpotency = j.contains("nilpotency") ? count(j["nilpotency"], where + ".nilpotency") : 2;
    out.category = from_quiver(q);
    return out;
}

LinearCategory parse_algebra(const Json& j, const std::string& where) {
    const Json& basis = field(j, "basis", where);
    std::vector<std::string> labels;
    for (const auto& b : basis) labels.push_back(str(b, where + ".basis"));
    const std::size_t n = labels.size();
    std::vector<Vector> products(n * n, Vector(n));
    const Json& prods = field(j, "products", where);
    for (std::size_t t = 0; t < prods.size(); ++t) {
        std::string w = where + ".products[" + std::to_string(t) + "]";
        const Json& e = prods[t];
        if (!e.is_array() || e.size() != 3) parse_fail(w, "expected [i, j, coords]");
        std::size_t a = count(e[0], w), b = count(e[1], w);
        if (a >= n || b >= n) parse_fail(w, "basis index out of range");
        products[a * n + b] = vector_of(e[2], n, w);
    }
    Vector unit = vector_of(field(j, "unit", where), n, where + ".unit");
    std::string object = j.contains("object") ? str(j["object"], where + ".object") : "*";
    return from_algebra(labels, products, unit, object);
}

LinearCategory parse_structure(const Json& j, const std::string& where) {
    std::vector<std::string> objects;
    for (const auto& o : field(j, "objects", where)) objects.push_back(str(o, where + ".objects"));
    const std::size_t n = objects.size();
    auto index = [&](const Json& o, const std::string& w) {
        std::string id = str(o, w);
        for (std::size_t i = 0; i < n; ++i)
            if (objects[i] == id) return i;
        parse_fail(w, "unknown object '" + id + "'");
    };
    std::vector<std::vector<std::string>> labels(n * n);
    if (j.contains("homs"))
        for (std::size_t h = 0; h < j["homs"].size(); ++h) {
            const Json& e = j["homs"][h];
            std::string w = where + ".homs[" + std::to_string(h) + "]";
            std::size_t v = index(field(e, "source", w), w + ".source");
            std::size_t u = index(field(e, "target", w), w + ".target");
            for (const auto& l : field(e, "basis", w)) labels[v * n + u].push_back(str(l, w + ".basis"));
        }
    auto dim = [&](std::size_t v, std::size_t u) { return labels[v * n + u].size(); };
    std::vector<Matrix> comp(n * n * n);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u)
                comp[(w * n + v) * n + u] = Matrix(dim(v, u) * dim(w, v), dim(w, u));
    if (j.contains("comp"))
        for (std::size_t c = 0; c < j["comp"].size(); ++c) {
            const Json& e = j["comp"][c];
            std::string wh = where + ".comp[" + std::to_string(c) + "]";
            const Json& objs = field(e, "objects", wh);
            if (!objs.is_array() || objs.size() != 3) parse_fail(wh + ".objects", "expected [W, V, U]");
            std::size_t w = index(objs[0], wh), v = index(objs[1], wh), u = index(objs[2], wh);
            Matrix& m = comp[(w * n + v) * n + u];
            const Json& entries = field(e, "entries", wh);
            for (std::size_t t = 0; t < entries.size(); ++t) {
                std::string we = wh + ".entries[" + std::to_string(t) + "]";
                const Json& tr = entries[t];
                if (!tr.is_array() || tr.size() != 3) parse_fail(we, "expected [g_index, f_index, coords]");
                std::size_t g = count(tr[0], we), f = count(tr[1], we);
                if (g >= dim(v, u) || f >= dim(w, v)) parse_fail(we, "basis index out of range");
                Vector coords = vector_of(tr[2], dim(w, u), we);
                for (std::size_t k = 0; k < coords.size(); ++k) m(g * dim(w, v) + f, k) = coords[k];
            }
        }
    std::vector<Vector> ids;
    const Json& idj = field(j, "identities", where);
    for (std::size_t u = 0; u < n; ++u)
        ids.push_back(vector_of(field(idj, objects[u], where + ".identities"), dim(u, u),
                                where + ".identities." + objects[u]));
    return LinearCategory::from_structure(objects, labels, comp, ids);
}

Json structure_json(const LinearCategory& c) {
    const std::size_t n = c.size();
    Json j;
    j["objects"] = c.objects();
    Json homs = Json::array();
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            if (c.hom_dim(v, u)) homs.push_back({{"source", c.object(v)}, {"target", c.object(u)}, {"basis", c.labels(v, u)}});
    j["homs"] = homs;
    Json ids = Json::object();
    for (std::size_t u = 0; u < n; ++u) ids[c.object(u)] = to_json(c.identity(u));
    j["identities"] = ids;
    Json comp = Json::array();
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) {
                Json entries = Json::array();
                for (std::size_t g = 0; g < c.hom_dim(v, u); ++g)
                    for (std::size_t f = 0; f < c.hom_dim(w, v); ++f) {
                        Vector x = c.compose_basis(w, v, u, g, f);
                        if (!is_zero(x)) entries.push_back({g, f, to_json(x)});
                    }
                if (!entries.empty())
                    comp.push_back({{"objects", {c.object(w), c.object(v), c.object(u)}}, {"entries", entries}});
            }
    j["comp"] = comp;
    return j;
}

Json quiver_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertices;
    Json arrows = Json::array();
    for (const auto& a : q.arrows)
        arrows.push_back({{"name", a.name}, {"source", q.vertices[a.source]}, {"target", q.vertices[a.target]}});
    j["arrows"] = arrows;
    Json rels = Json::array();
    for (const auto& r : q.relations) {
        Json terms = Json::array();
        for (const auto& [coeff, path] : r.terms) {
            Json p = Json::array();
            for (auto a : path) p.push_back(q.arrows[a].name);
            terms.push_back({to_json(coeff), p});
        }
        rels.push_back(terms);
    }
    j["relations"] = rels;
    j["nilpotency"] = q.nilpotency;
    return j;
}

// ---- modules ----

std::vector<std::size_t> parse_dims(const LinearCategory& c, const Json& j, const std::string& where) {
    std::vector<std::size_t> dims(c.size(), 0);
    if (j.is_array()) {
        if (j.size() != c.size()) parse_fail(where, "expected one dimension per object");
        for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = count(j[i], where);
        return dims;
    }
    if (!j.is_object()) parse_fail(where, "expected an object of dimensions");
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto i = c.find(it.key());
        if (!i) parse_fail(where, "unknown object '" + it.key() + "'");
        dims[*i] = count(it.value(), where + "." + it.key());
    }
    return dims;
}

Module parse_module_body(const LinearCategory& c, const QuiverData* quiver, const Json& j, const std::string& where) {
    std::vector<std::size_t> dims = parse_dims(c, field(j, "dims", where), where + ".dims");
    const std::size_t n = c.size();
    if (j.contains("arrows")) {
        if (!quiver) parse_fail(where + ".arrows", "arrow matrices need a category given by a quiver");
        const Quiver& q = quiver->quiver;
        std::vector<Matrix> mats;
        for (const auto& a : q.arrows) {
            std::string w = where + ".arrows." + a.name;
            if (!j["arrows"].contains(a.name)) {
                mats.emplace_back(dims[a.source], dims[a.target]);
                continue;
            }
            mats.push_back(matrix_of(j["arrows"][a.name], dims[a.source], dims[a.target], w));
        }
        return module_from_arrows(*quiver, dims, mats);
    }
    std::vector<std::vector<Matrix>> action(n * n);
    std::vector<std::vector<bool>> seen(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) {
            action[v * n + u].assign(c.hom_dim(v, u), Matrix(dims[v], dims[u]));
            seen[v * n + u].assign(c.hom_dim(v, u), false);
        }
    if (j.contains("action"))
        for (std::size_t t = 0; t < j["action"].size(); ++t) {
            const Json& e = j["action"][t];
            std::string w = where + ".action[" + std::to_string(t) + "]";
            std::size_t v = object_index(c, field(e, "source", w), w + ".source");
            std::size_t u = object_index(c, field(e, "target", w), w + ".target");
            std::size_t k = count(field(e, "basis", w), w + ".basis");
            if (k >= c.hom_dim(v, u)) parse_fail(w + ".basis", "basis index out of range");
            action[v * n + u][k] = matrix_of(field(e, "matrix", w), dims[v], dims[u], w + ".matrix");
            seen[v * n + u][k] = true;
        }
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t k = 0; k < c.hom_dim(v, u); ++k)
                if (!seen[v * n + u][k] && dims[v] * dims[u] > 0)
                    parse_fail(where + ".action", "missing matrix for basis " + std::to_string(k) + " of Hom(" +
                                                      c.object(v) + ", " + c.object(u) + ")");
    return Module::from_action(c, dims, std::move(action));
}

Json module_body_json(const Module& x) {
    const LinearCategory& c = x.category();
    const std::size_t n = c.size();
    Json j;
    Json dims = Json::object();
    for (std::size_t u = 0; u < n; ++u) dims[c.object(u)] = x.dim(u);
    j["dims"] = dims;
    Json action = Json::array();
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            if (x.dim(v) * x.dim(u) > 0)
                for (std::size_t k = 0; k < c.hom_dim(v, u); ++k)
                    action.push_back({{"source", c.object(v)},
                                      {"target", c.object(u)},
                                      {"basis", k},
                                      {"matrix", to_json(x.act_basis(v, u, k))}});
    j["action"] = action;
    return j;
}

Morphism parse_morphism(const LinearCategory& c, const Json& j, const std::string& where) {
    Morphism m;
    m.source = object_index(c, field(j, "source", where), where + ".source");
    m.target = object_index(c, field(j, "target", where), where + ".target");
    m.coords = vector_of(field(j, "coords", where), c.hom_dim(m.source, m.target), where + ".coords");
    return m;
}

Json morphism_json(const LinearCategory& c, const Morphism& m) {
    return {{"source", c.object(m.source)}, {"target", c.object(m.target)}, {"coords", to_json(m.coords)}};
}

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& id, const char* what) {
    auto it = m.find(id);
    if (it == m.end()) fail(ErrorCode::InvalidArgument, std::string("unknown ") + what + " '" + id + "'");
    return it->second;
}

}  // namespace

const LinearCategory& Instance::category(const std::string& id) const { return lookup(categories, id, "category"); }
const NamedFunctor& Instance::functor(const std::string& id) const { return lookup(functors, id, "functor"); }
const NamedModule& Instance::module(const std::string& id) const { return lookup(modules, id, "module"); }
const NamedIdeal& Instance::ideal(const std::string& id) const { return lookup(ideals, id, "ideal"); }
const NamedBimodule& Instance::bimodule(const std::string& id) const { return lookup(bimodules, id, "bimodule"); }

TorsionData Instance::torsion(const std::string& ideal_id) const {
    const NamedIdeal& i = ideal(ideal_id);
    const LinearCategory& c = category(i.category);
    switch (i.kind) {
        case NamedIdeal::Kind::Whole: return whole_ideal(c);
        case NamedIdeal::Kind::Zero: return zero_ideal(c);
        case NamedIdeal::Kind::Generated: break;
    }
    return ideal_closure(c, i.generators);
}

Vector path_image(const Quiver& q, const LinearCategory& target, const std::vector<std::size_t>& object_map,
                  const std::vector<Vector>& arrow_images, std::size_t from, const Path& path) {
    std::size_t at = from;
    Vector acc = target.identity(object_map[from]);
    for (auto a : path) {
        const Arrow& arr = q.arrows[a];
        if (arr.source != at) fail(ErrorCode::NotComposable, "path_image: path does not compose");
        acc = target.compose(object_map[from], object_map[at], object_map[arr.target], arrow_images[a], acc);
        at = arr.target;
    }
    return acc;
}

LinearFunctor functor_from_arrows(const QuiverData& q, const LinearCategory& target, std::vector<std::size_t> object_map,
                                  const std::vector<Vector>& arrow_images) {
    const LinearCategory& c = q.category.category;
    const std::size_t n = c.size();
    if (object_map.size() != n || arrow_images.size() != q.quiver.arrows.size())
        fail(ErrorCode::DimensionMismatch, "functor_from_arrows: wrong number of images");
    for (std::size_t a = 0; a < arrow_images.size(); ++a) {
        const Arrow& arr = q.quiver.arrows[a];
        if (arrow_images[a].size() != target.hom_dim(object_map[arr.source], object_map[arr.target]))
            fail(ErrorCode::DimensionMismatch, "functor_from_arrows: image of " + arr.name + " has the wrong length");
    }
    std::vector<Matrix> maps(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u) {
            std::vector<Vector> cols;
            for (const Path& p : q.category.basis_paths[v * n + u])
                cols.push_back(path_image(q.quiver, target, object_map, arrow_images, v, p));
            maps[v * n + u] = Matrix::from_columns(cols, target.hom_dim(object_map[v], object_map[u]));
        }
    return LinearFunctor(c, target, std::move(object_map), std::move(maps));
}

Module module_from_arrows(const QuiverData& q, std::vector<std::size_t> dims, const std::vector<Matrix>& arrows) {
    const LinearCategory& c = q.category.category;
    const std::size_t n = c.size();
    if (dims.size() != n || arrows.size() != q.quiver.arrows.size())
        fail(ErrorCode::DimensionMismatch, "module_from_arrows: wrong number of dimensions or matrices");
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const Arrow& arr = q.quiver.arrows[a];
        if (arrows[a].rows() != dims[arr.source] || arrows[a].cols() != dims[arr.target])
            fail(ErrorCode::DimensionMismatch, "module_from_arrows: matrix of " + arr.name + " has the wrong shape");
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            for (const Path& p : q.category.basis_paths[v * n + u]) {
                // X(b∘a) = X(a) X(b).
                Matrix m = Matrix::identity(dims[v]);
                for (auto a : p) m = m * arrows[a];
                action[v * n + u].push_back(std::move(m));
            }
    return Module::from_action(c, std::move(dims), std::move(action));
}

Instance parse_instance(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + e.what());
    }
    if (!root.is_object()) parse_fail("document", "expected a JSON object");
    Instance inst;
    if (root.contains("name")) inst.name = str(root["name"], "name");

    if (root.contains("categories"))
        for (auto it = root["categories"].begin(); it != root["categories"].end(); ++it) {
            std::string w = "categories." + it.key();
            const Json& c = it.value();
            try {
                if (c.contains("quiver")) {
                    QuiverData q = parse_quiver(c["quiver"], w + ".quiver");
                    inst.categories[it.key()] = q.category.category;
                    inst.quivers[it.key()] = std::move(q);
                } else if (c.contains("algebra")) {
                    inst.categories[it.key()] = parse_algebra(c["algebra"], w + ".algebra");
                } else {
                    inst.categories[it.key()] = parse_structure(c, w);
                }
            } catch (const Error& e) {
                if (e.code() == ErrorCode::Parse) throw;
                fail(e.code(), w + ": " + e.what());
            }
        }
    auto category_ref = [&](const Json& j, const std::string& w) -> const LinearCategory& {
        std::string id = str(j, w);
        auto it = inst.categories.find(id);
        if (it == inst.categories.end()) parse_fail(w, "unknown category '" + id + "'");
        return it->second;
    };
    auto quiver_ref = [&](const std::string& id) -> const QuiverData* {
        auto it = inst.quivers.find(id);
        return it == inst.quivers.end() ? nullptr : &it->second;
    };

    if (root.contains("functors"))
        for (auto it = root["functors"].begin(); it != root["functors"].end(); ++it) {
            std::string w = "functors." + it.key();
            const Json& f = it.value();
            NamedFunctor nf;
            nf.source = str(field(f, "source", w), w + ".source");
            nf.target = str(field(f, "target", w), w + ".target");
            const LinearCategory& s = category_ref(f["source"], w + ".source");
            const LinearCategory& t = category_ref(f["target"], w + ".target");
            const std::size_t n = s.size();
            std::vector<std::size_t> objects(n);
            const Json& om = field(f, "objects", w);
            for (std::size_t u = 0; u < n; ++u)
                objects[u] = object_index(t, field(om, s.object(u), w + ".objects"), w + ".objects." + s.object(u));
            if (f.contains("arrows")) {
                const QuiverData* q = quiver_ref(nf.source);
                if (!q) parse_fail(w + ".arrows", "arrow images need a source given by a quiver");
                std::vector<Vector> images;
                for (const auto& a : q->quiver.arrows) {
                    std::size_t len = t.hom_dim(objects[a.source], objects[a.target]);
                    images.push_back(f["arrows"].contains(a.name)
                                         ? vector_of(f["arrows"][a.name], len, w + ".arrows." + a.name)
                                         : Vector(len));
                }
                nf.functor = functor_from_arrows(*q, t, objects, images);
            } else {
                std::vector<Matrix> maps(n * n);
                for (std::size_t v = 0; v < n; ++v)
                    for (std::size_t u = 0; u < n; ++u) maps[v * n + u] = Matrix(t.hom_dim(objects[v], objects[u]), s.hom_dim(v, u));
                if (f.contains("maps"))
                    for (std::size_t m = 0; m < f["maps"].size(); ++m) {
                        const Json& e = f["maps"][m];
                        std::string wm = w + ".maps[" + std::to_string(m) + "]";
                        std::size_t v = object_index(s, field(e, "source", wm), wm + ".source");
                        std::size_t u = object_index(s, field(e, "target", wm), wm + ".target");
                        maps[v * n + u] = matrix_of(field(e, "matrix", wm), t.hom_dim(objects[v], objects[u]),
                                                    s.hom_dim(v, u), wm + ".matrix");
                    }
                nf.functor = LinearFunctor(s, t, objects, std::move(maps));
            }
            inst.functors[it.key()] = std::move(nf);
        }

    if (root.contains("modules"))
        for (auto it = root["modules"].begin(); it != root["modules"].end(); ++it) {
            std::string w = "modules." + it.key();
            NamedModule nm;
            nm.category = str(field(it.value(), "category", w), w + ".category");
            const LinearCategory& c = category_ref(it.value()["category"], w + ".category");
            nm.module = parse_module_body(c, quiver_ref(nm.category), it.value(), w);
            inst.modules[it.key()] = std::move(nm);
        }

    if (root.contains("ideals"))
        for (auto it = root["ideals"].begin(); it != root["ideals"].end(); ++it) {
            std::string w = "ideals." + it.key();
            const Json& i = it.value();
            NamedIdeal ni;
            ni.category = str(field(i, "category", w), w + ".category");
            const LinearCategory& c = category_ref(i["category"], w + ".category");
            if (i.value("whole", false)) {
                ni.kind = NamedIdeal::Kind::Whole;
            } else if (i.value("zero", false)) {
                ni.kind = NamedIdeal::Kind::Zero;
            } else {
                const Json& gens = field(i, "generators", w);
                for (std::size_t g = 0; g < gens.size(); ++g)
                    ni.generators.push_back(parse_morphism(c, gens[g], w + ".generators[" + std::to_string(g) + "]"));
            }
            inst.ideals[it.key()] = std::move(ni);
        }

    if (root.contains("bimodules"))
        for (auto it = root["bimodules"].begin(); it != root["bimodules"].end(); ++it) {
            std::string w = "bimodules." + it.key();
            const Json& b = it.value();
            NamedBimodule nb;
            nb.left = str(field(b, "left", w), w + ".left");
            nb.right = str(field(b, "right", w), w + ".right");
            const LinearCategory& l = category_ref(b["left"], w + ".left");
            const LinearCategory& r = category_ref(b["right"], w + ".right");
            Bimodule& bm = nb.bimodule;
            bm.left = l;
            bm.right = r;
            const Json& values = field(b, "values", w);
            for (std::size_t g = 0; g < l.size(); ++g)
                bm.values.push_back(
                    parse_module_body(r, quiver_ref(nb.right), field(values, l.object(g), w + ".values"),
                                      w + ".values." + l.object(g)));
            const std::size_t n = l.size();
            bm.actions.resize(n * n);
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t g2 = 0; g2 < n; ++g2)
                    bm.actions[g * n + g2].assign(l.hom_dim(g, g2), ModuleMap::zero(bm.values[g], bm.values[g2]));
            if (b.contains("actions"))
                for (std::size_t a = 0; a < b["actions"].size(); ++a) {
                    const Json& e = b["actions"][a];
                    std::string wa = w + ".actions[" + std::to_string(a) + "]";
                    std::size_t g = object_index(l, field(e, "source", wa), wa + ".source");
                    std::size_t g2 = object_index(l, field(e, "target", wa), wa + ".target");
                    std::size_t k = count(field(e, "basis", wa), wa + ".basis");
                    if (k >= l.hom_dim(g, g2)) parse_fail(wa + ".basis", "basis index out of range");
                    const Json& comps = field(e, "components", wa);
                    std::vector<Matrix> ms;
                    for (std::size_t h = 0; h < r.size(); ++h)
                        ms.push_back(matrix_of(field(comps, r.object(h), wa + ".components"), bm.values[g2].dim(h),
                                               bm.values[g].dim(h), wa + ".components." + r.object(h)));
                    bm.actions[g * n + g2][k] = ModuleMap(bm.values[g], bm.values[g2], std::move(ms));
                }
            inst.bimodules[it.key()] = std::move(nb);
        }

    if (root.contains("expected"))
        for (std::size_t e = 0; e < root["expected"].size(); ++e) {
            const Json& x = root["expected"][e];
            std::string w = "expected[" + std::to_string(e) + "]";
            Expectation ex;
            ex.kind = str(field(x, "kind", w), w + ".kind");
            ex.subject = str(field(x, "subject", w), w + ".subject");
            if (x.contains("ideal")) ex.ideal = str(x["ideal"], w + ".ideal");
            if (x.contains("verdict")) {
                if (!x["verdict"].is_boolean()) parse_fail(w + ".verdict", "expected a boolean");
                ex.verdict = x["verdict"].get<bool>();
            }
            if (x.contains("error")) {
                auto code = code_from_name(str(x["error"], w + ".error"));
                if (!code) parse_fail(w + ".error", "unknown error code");
                ex.error = code;
            }
            if (ex.verdict.has_value() == ex.error.has_value())
                parse_fail(w, "give exactly one of 'verdict' and 'error'");
            inst.expected.push_back(std::move(ex));
        }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Parse, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::string serialize_instance(const Instance& inst, int indent) {
    Json root;
    if (!inst.name.empty()) root["name"] = inst.name;
    Json cats = Json::object();
    for (const auto& [id, c] : inst.categories) {
        auto q = inst.quivers.find(id);
        if (q != inst.quivers.end())
            cats[id] = {{"quiver", quiver_json(q->second.quiver)}};
        else
            cats[id] = structure_json(c);
    }
    root["categories"] = cats;

    Json funs = Json::object();
    for (const auto& [id, nf] : inst.functors) {
        const LinearFunctor& f = nf.functor;
        const LinearCategory& s = f.source();
        Json j;
        j["source"] = nf.source;
        j["target"] = nf.target;
        Json om = Json::object();
        for (std::size_t u = 0; u < s.size(); ++u) om[s.object(u)] = f.target().object(f.object(u));
        j["objects"] = om;
        Json maps = Json::array();
        for (std::size_t v = 0; v < s.size(); ++v)
            for (std::size_t u = 0; u < s.size(); ++u)
                if (s.hom_dim(v, u))
                    maps.push_back({{"source", s.object(v)}, {"target", s.object(u)}, {"matrix", to_json(f.hom_map(v, u))}});
        j["maps"] = maps;
        funs[id] = j;
    }
    root["functors"] = funs;

    Json mods = Json::object();
    for (const auto& [id, nm] : inst.modules) {
        Json j = module_body_json(nm.module);
        j["category"] = nm.category;
        mods[id] = j;
    }
    root["modules"] = mods;

    Json ideals = Json::object();
    for (const auto& [id, ni] : inst.ideals) {
        Json j;
        j["category"] = ni.category;
        if (ni.kind == NamedIdeal::Kind::Whole) {
            j["whole"] = true;
        } else if (ni.kind == NamedIdeal::Kind::Zero) {
            j["zero"] = true;
        } else {
            Json gens = Json::array();
            for (const auto& g : ni.generators) gens.push_back(morphism_json(inst.category(ni.category), g));
            j["generators"] = gens;
        }
        ideals[id] = j;
    }
    root["ideals"] = ideals;

    if (!inst.bimodules.empty()) {
        Json bms = Json::object();
        for (const auto& [id, nb] : inst.bimodules) {
            const Bimodule& b = nb.bimodule;
            Json j;
            j["left"] = nb.left;
            j["right"] = nb.right;
            Json values = Json::object();
            for (std::size_t g = 0; g < b.left.size(); ++g) values[b.left.object(g)] = module_body_json(b.values[g]);
            j["values"] = values;
            Json actions = Json::array();
            const std::size_t n = b.left.size();
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t g2 = 0; g2 < n; ++g2)
                    for (std::size_t k = 0; k < b.left.hom_dim(g, g2); ++k) {
                        Json comps = Json::object();
                        for (std::size_t h = 0; h < b.right.size(); ++h)
                            comps[b.right.object(h)] = to_json(b.act(g, g2, k).component(h));
                        actions.push_back({{"source", b.left.object(g)},
                                           {"target", b.left.object(g2)},
                                           {"basis", k},
                                           {"components", comps}});
                    }
            j["actions"] = actions;
            bms[id] = j;
        }
        root["bimodules"] = bms;
    }

    if (!inst.expected.empty()) {
        Json ex = Json::array();
        for (const auto& e : inst.expected) {
            Json j;
            j["kind"] = e.kind;
            j["subject"] = e.subject;
            if (!e.ideal.empty()) j["ideal"] = e.ideal;
            if (e.verdict) j["verdict"] = *e.verdict;
            if (e.error) j["error"] = code_name(*e.error);
            ex.push_back(j);
        }
        root["expected"] = ex;
    }
    return root.dump(indent);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
    return out;
}

std::string instance_hash(const Instance& inst) { return fnv1a_hex(serialize_instance(inst, -1)); }

}  // namespace laxepi

#include "yoneda/instance.hpp"

#include <fstream>
#include <sstream>

#include "yoneda/adjunction.hpp"

namespace yoneda {

namespace {

// Loader-level resource guards; generous compared to anything the engine can
// actually chew through, tight enough to reject absurd allocations up front.
constexpr int kMaxAlgebraDim = 64;
constexpr int kMaxModuleDim = 512;

bool valid_name(const std::string& s) {
    if (s.empty() || s.size() > 128) return false;
    for (char ch : s) {
        const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                        (ch >= '0' && ch <= '9') || ch == '_' || ch == '-' || ch == '.';
        if (!ok) return false;
    }
    return true;
}

template <class Fn>
auto in_entity(const std::string& entity, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        throw ValidationError(entity + ": " + e.what());
    }
}

// Throws with the entity path when a validation report failed; the witness pins
// the precise location (for associativity it names the offending triple).
void require_report(const AuditReport& rep, const std::string& entity) {
    for (const auto& c : rep.checks)
        if (c.verdict == Verdict::Fail)
            require_input(false, entity + ": axiom '" + c.anchor + "' fails at check '" + c.name +
                                     "', witness " + c.witness.dump());
}

const Json& member(const Json& j, const char* key, const std::string& entity) {
    require_input(j.is_object(), entity + ": expected a JSON object");
    auto it = j.find(key);
    require_input(it != j.end(), entity + ": missing key \"" + std::string(key) + "\"");
    return *it;
}

const Json* opt_member(const Json& j, const char* key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string string_member(const Json& j, const char* key, const std::string& entity) {
    const Json& v = member(j, key, entity);
    require_input(v.is_string(), entity + ": \"" + std::string(key) + "\" must be a string");
    return v.get<std::string>();
}

int int_member(const Json& j, const char* key, int max, const std::string& entity) {
    const Json& v = member(j, key, entity);
    require_input(v.is_number_integer(), entity + ": \"" + std::string(key) + "\" must be an integer");
    const long long x = v.get<long long>();
    require_input(x >= 0 && x <= max, entity + ": \"" + std::string(key) + "\" must be in [0, " +
                                          std::to_string(max) + "]");
    return static_cast<int>(x);
}

std::string fresh_name(const Json& j, const std::string& table,
                       const std::vector<std::string>& taken) {
    const std::string entity = table + " entry";
    const std::string name = string_member(j, "name", entity);
    require_input(valid_name(name), entity + ": name \"" + name +
                                        "\" must be nonempty [A-Za-z0-9_.-] (max 128 chars)");
    for (const auto& t : taken)
        require_input(t != name, table + " '" + name + "': duplicate name");
    return name;
}

Scalar scalar_from_json(const Field& k, const Json& j, const std::string& entity) {
    require_input(j.is_string(), entity + ": scalars are written as strings");
    return in_entity(entity, [&] { return k.parse(j.get<std::string>()); });
}

Vec vec_from_json(const Field& k, int len, const Json& j, const std::string& entity) {
    require_input(j.is_array() && static_cast<int>(j.size()) == len,
                  entity + ": expected an array of " + std::to_string(len) + " scalars");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(scalar_from_json(k, e, entity));
    return v;
}

Matrix matrix_from_json(const Field& k, int rows, int cols, const Json& j,
                        const std::string& entity) {
    require_input(j.is_array() && static_cast<int>(j.size()) == rows,
                  entity + ": expected a matrix with " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[r];
        require_input(row.is_array() && static_cast<int>(row.size()) == cols,
                      entity + ": row " + std::to_string(r) + " must have " + std::to_string(cols) +
                          " entries");
        for (int c = 0; c < cols; ++c) m(r, c) = scalar_from_json(k, row[c], entity);
    }
    return m;
}

Json vec_to_json(const Field& k, const Vec& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(k.to_string(s));
    return out;
}

Json matrix_to_json(const Field& k, const Matrix& m) {
    Json out = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(k.to_string(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

const NamedModule& need_module(const Instance& inst, const std::string& name,
                               const std::string& context) {
    const NamedModule* m = inst.find_module(name);
    require_input(m != nullptr, context + ": unknown module '" + name + "'");
    return *m;
}

const NamedIdeal& need_ideal(const Instance& inst, const std::string& name,
                             const std::string& context) {
    const NamedIdeal* i = inst.find_ideal(name);
    require_input(i != nullptr, context + ": unknown ideal '" + name + "'");
    return *i;
}

const NamedFamily& need_family(const Instance& inst, const std::string& name,
                               const std::string& context) {
    const NamedFamily* f = inst.find_family(name);
    require_input(f != nullptr, context + ": unknown family '" + name + "'");
    return *f;
}

std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : key) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

Json evaluate_fact(const Instance& inst, const std::string& key) {
    const std::string context = "expected fact '" + key + "'";
    const auto parts = split_key(key);
    const std::string& head = parts[0];
    auto arity = [&](size_t names) {
        require_input(parts.size() == names + 1,
                      context + ": selector '" + head + "' takes " + std::to_string(names) +
                          " name argument(s)");
    };

    if (head == "algebra_dim") {
        arity(0);
        return inst.algebra->dim;
    }
    if (head == "module_dim") {
        arity(1);
        return need_module(inst, parts[1], context).module->dim;
    }
    if (head == "ideal_dim") {
        arity(1);
        return need_ideal(inst, parts[1], context).ideal.dim();
    }
    if (head == "quotient_dim") {
        arity(1);
        return cyclic_module(need_ideal(inst, parts[1], context).ideal).module->dim;
    }
    if (head == "eigenring_dim") {
        arity(1);
        return eigenring(need_ideal(inst, parts[1], context).ideal).s->dim;
    }
    if (head == "normalizer_dim") {
        arity(1);
        return normalizer(need_ideal(inst, parts[1], context).ideal).dim();
    }
    if (head == "simplicity") {
        arity(1);
        return simplicity_name(
            is_simple(need_module(inst, parts[1], context).module, SimplicityBudget{}).kind);
    }
    if (head == "s_complement_dim") {
        arity(1);
        auto c = s_complement(need_ideal(inst, parts[1], context).ideal);
        return c ? Json(c->dim()) : Json();
    }
    if (head == "s_freeness_rank") {
        arity(1);
        auto w = s_freeness(need_ideal(inst, parts[1], context).ideal);
        return w ? Json(w->dim()) : Json();
    }
    if (head == "invariant_dim") {
        arity(2);
        return invariant_subspace(need_module(inst, parts[2], context).module,
                                  need_ideal(inst, parts[1], context).ideal)
            .dim();
    }
    if (head == "hom_dim") {
        arity(2);
        return hom_space(need_module(inst, parts[1], context).module,
                         need_module(inst, parts[2], context).module)
            .dim();
    }
    if (head == "counit_label") {
        arity(1);
        Counit c = counit(instance_subcategory(inst), need_module(inst, parts[1], context).module);
        return classification_label(c.cls);
    }
    if (head == "weight" || head == "weight_sum_dim") {
        arity(2);
        IdealFamily fam = flat_family(inst, need_family(inst, parts[1], context));
        const ModulePtr& v = need_module(inst, parts[2], context).module;
        if (head == "weight") return is_weight_module(fam, v);
        return weight_decomposition(fam, v).sum.dim();
    }
    if (head == "genweight" || head == "genweight_piece_dims") {
        arity(2);
        BlockFamily fam = block_family(inst, need_family(inst, parts[1], context));
        const ModulePtr& v = need_module(inst, parts[2], context).module;
        if (head == "genweight") return is_generalized_weight_module(fam, v);
        Json dims = Json::array();
        for (const auto& piece : generalized_weight_decomposition(fam, v).pieces)
            dims.push_back(piece.dim());
        return dims;
    }
    if (head == "power_block_dims") {
        arity(1);
        const LeftIdeal& i = need_ideal(inst, parts[1], context).ideal;
        Json dims = Json::array();
        for (const auto& p : power_block(inst.algebra, i.generators)) dims.push_back(p.dim());
        return dims;
    }
    require_input(false, context + ": unknown selector '" + head + "'");
    return Json();
}

}  // namespace

std::string field_spec_tag(const FieldSpec& fs) {
    if (fs.kind == FieldKind::Rationals) return "q";
    return "fp:" + std::to_string(fs.p);
}

FieldSpec parse_field_spec(const std::string& tag) {
    if (tag == "q") return FieldSpec::rationals();
    if (tag.rfind("fp:", 0) == 0) {
        const std::string digits = tag.substr(3);
        bool ok = !digits.empty() && digits.size() <= 9;
        for (char ch : digits) ok = ok && ch >= '0' && ch <= '9';
        require_input(ok, "field: bad characteristic in \"" + tag + "\"");
        return FieldSpec::prime_field(std::stoll(digits));
    }
    require_input(false, "field: expected \"q\" or \"fp:<p>\", got \"" + tag + "\"");
    return FieldSpec::rationals();
}

const NamedModule* Instance::find_module(const std::string& n) const {
    for (const auto& m : modules)
        if (m.name == n) return &m;
    return nullptr;
}

const NamedIdeal* Instance::find_ideal(const std::string& n) const {
    for (const auto& i : ideals)
        if (i.name == n) return &i;
    return nullptr;
}

const NamedFamily* Instance::find_family(const std::string& n) const {
    for (const auto& f : families)
        if (f.name == n) return &f;
    return nullptr;
}

const NamedFunctor* Instance::find_functor(const std::string& n) const {
    for (const auto& f : functors)
        if (f.name == n) return &f;
    return nullptr;
}

BPtr instance_subcategory(const Instance& inst) {
    require_input(inst.subcategory != nullptr,
                  "instance '" + inst.name + "': this operation needs at least one named ideal");
    return inst.subcategory;
}

IdealFamily flat_family(const Instance& inst, const NamedFamily& fam) {
    const std::string context = "family '" + fam.name + "'";
    require_input(!fam.is_block, context + ": expected a flat family, got a block family");
    IdealFamily out;
    out.algebra = inst.algebra;
    for (const auto& n : fam.ideals) out.ideals.push_back(need_ideal(inst, n, context).ideal);
    return out;
}

BlockFamily block_family(const Instance& inst, const NamedFamily& fam) {
    const std::string context = "family '" + fam.name + "'";
    require_input(fam.is_block, context + ": expected a block family, got a flat family");
    BlockFamily out;
    out.algebra = inst.algebra;
    for (const auto& blk : fam.blocks) {
        Block b;
        for (const auto& n : blk) b.push_back(need_ideal(inst, n, context).ideal);
        out.blocks.push_back(std::move(b));
    }
    return out;
}

Instance instance_from_json(const Json& j) {
    require_input(j.is_object(), "instance: expected a JSON object");
    require_input(member(j, "schema", "instance") == Json(kSchemaTag),
                  "instance: schema must be \"" + std::string(kSchemaTag) + "\"");
    require_input(member(j, "kind", "instance") == Json("instance"),
                  "instance: kind must be \"instance\"");

    Instance inst;
    inst.name = string_member(j, "name", "instance");
    require_input(valid_name(inst.name),
                  "instance: name must be nonempty [A-Za-z0-9_.-] (max 128 chars)");
    const FieldSpec fs = parse_field_spec(string_member(j, "field", "instance"));
    const Field k(fs);

    {
        const Json& alg = member(j, "algebra", "instance");
        const int dim = int_member(alg, "dim", kMaxAlgebraDim, "algebra");
        const Json& st = member(alg, "structure", "algebra");
        require_input(st.is_array() && static_cast<int>(st.size()) == dim,
                      "algebra: structure must be a dim x dim x dim array");
        std::vector<Scalar> structure;
        structure.reserve(static_cast<size_t>(dim) * dim * dim);
        for (int i = 0; i < dim; ++i) {
            const Json& plane = st[i];
            require_input(plane.is_array() && static_cast<int>(plane.size()) == dim,
                          "algebra: structure[" + std::to_string(i) + "] must have dim rows");
            for (int jj = 0; jj < dim; ++jj) {
                Vec row = vec_from_json(k, dim, plane[jj],
                                        "algebra structure[" + std::to_string(i) + "][" +
                                            std::to_string(jj) + "]");
                for (auto& s : row) structure.push_back(std::move(s));
            }
        }
        Vec unit = vec_from_json(k, dim, member(alg, "unit", "algebra"), "algebra unit");
        inst.algebra = in_entity(
            "algebra", [&] { return make_algebra(fs, dim, std::move(structure), std::move(unit)); });
        require_report(validate_algebra(*inst.algebra), "algebra");
    }

    std::vector<std::string> names;
    if (const Json* mods = opt_member(j, "modules")) {
        require_input(mods->is_array(), "instance: \"modules\" must be an array");
        for (const auto& mj : *mods) {
            const std::string name = fresh_name(mj, "module", names);
            const std::string entity = "module '" + name + "'";
            const int d = int_member(mj, "dim", kMaxModuleDim, entity);
            const Json& act = member(mj, "action", entity);
            require_input(act.is_array() && static_cast<int>(act.size()) == inst.algebra->dim,
                          entity + ": \"action\" must hold one matrix per algebra basis element");
            std::vector<Matrix> action;
            action.reserve(act.size());
            for (int i = 0; i < inst.algebra->dim; ++i)
                action.push_back(matrix_from_json(k, d, d, act[i],
                                                  entity + " action[" + std::to_string(i) + "]"));
            ModulePtr m = in_entity(
                entity, [&] { return make_module(inst.algebra, d, std::move(action)); });
            require_report(validate_module(*m), entity);
            inst.modules.push_back({name, std::move(m)});
            names.push_back(name);
        }
    }

    names.clear();
    if (const Json* ids = opt_member(j, "ideals")) {
        require_input(ids->is_array(), "instance: \"ideals\" must be an array");
        for (const auto& ij : *ids) {
            const std::string name = fresh_name(ij, "ideal", names);
            const std::string entity = "ideal '" + name + "'";
            const Json& gens = member(ij, "generators", entity);
            require_input(gens.is_array(), entity + ": \"generators\" must be an array of vectors");
            std::vector<Vec> generators;
            generators.reserve(gens.size());
            for (size_t g = 0; g < gens.size(); ++g)
                generators.push_back(vec_from_json(k, inst.algebra->dim, gens[g],
                                                   entity + " generator " + std::to_string(g)));
            LeftIdeal ideal = in_entity(
                entity, [&] { return left_ideal_closure(inst.algebra, std::move(generators)); });
            for (const auto& prev : inst.ideals)
                require_input(!ideals_equal(prev.ideal, ideal),
                              entity + ": equal to ideal '" + prev.name +
                                  "' as a subspace; ideal table entries must be distinct");
            inst.ideals.push_back({name, std::move(ideal)});
            names.push_back(name);
        }
    }

    if (!inst.ideals.empty()) {
        std::vector<LeftIdeal> table;
        for (const auto& i : inst.ideals) table.push_back(i.ideal);
        inst.subcategory = build_subcategory(inst.algebra, std::move(table));
    }

    names.clear();
    if (const Json* fams = opt_member(j, "families")) {
        require_input(fams->is_array(), "instance: \"families\" must be an array");
        for (const auto& fj : *fams) {
            const std::string name = fresh_name(fj, "family", names);
            const std::string entity = "family '" + name + "'";
            NamedFamily fam;
            fam.name = name;
            const Json* flat = opt_member(fj, "ideals");
            const Json* block = opt_member(fj, "blocks");
            require_input((flat != nullptr) != (block != nullptr),
                          entity + ": exactly one of \"ideals\" / \"blocks\" is required");
            if (flat) {
                require_input(flat->is_array() && !flat->empty(),
                              entity + ": \"ideals\" must be a nonempty array of ideal names");
                for (const auto& n : *flat) {
                    require_input(n.is_string(), entity + ": ideal references must be strings");
                    need_ideal(inst, n.get<std::string>(), entity);
                    fam.ideals.push_back(n.get<std::string>());
                }
            } else {
                fam.is_block = true;
                require_input(block->is_array() && !block->empty(),
                              entity + ": \"blocks\" must be a nonempty array of blocks");
                for (const auto& bj : *block) {
                    require_input(bj.is_array() && !bj.empty(),
                                  entity + ": each block must be a nonempty array of ideal names");
                    std::vector<std::string> blk;
                    for (const auto& n : bj) {
                        require_input(n.is_string(), entity + ": ideal references must be strings");
                        need_ideal(inst, n.get<std::string>(), entity);
                        blk.push_back(n.get<std::string>());
                    }
                    fam.blocks.push_back(std::move(blk));
                }
            }
            inst.families.push_back(std::move(fam));
            names.push_back(name);
        }
    }

    names.clear();
    if (const Json* funs = opt_member(j, "functors")) {
        require_input(funs->is_array(), "instance: \"functors\" must be an array");
        for (const auto& fj : *funs) {
            const std::string name = fresh_name(fj, "functor", names);
            const std::string entity = "functor '" + name + "'";
            require_input(inst.subcategory != nullptr,
                          entity + ": functor tables need at least one named ideal");
            const BPtr& b = inst.subcategory;
            const int m = b->size();
            const Json& dj = member(fj, "dims", entity);
            require_input(dj.is_array() && static_cast<int>(dj.size()) == m,
                          entity + ": \"dims\" must hold one dimension per ideal");
            std::vector<int> dims;
            for (const auto& dv : dj) {
                require_input(dv.is_number_integer(), entity + ": dimensions must be integers");
                const long long d = dv.get<long long>();
                require_input(d >= 0 && d <= kMaxModuleDim, entity + ": dimension out of range");
                dims.push_back(static_cast<int>(d));
            }
            const Json& mj = member(fj, "maps", entity);
            require_input(mj.is_array() && static_cast<int>(mj.size()) == m,
                          entity + ": \"maps\" must be an objects x objects table");
            std::vector<std::vector<std::vector<Matrix>>> maps(m);
            for (int s = 0; s < m; ++s) {
                const Json& row = mj[s];
                require_input(row.is_array() && static_cast<int>(row.size()) == m,
                              entity + ": \"maps\" must be an objects x objects table");
                maps[s].resize(m);
                for (int t = 0; t < m; ++t) {
                    const Json& cell = row[t];
                    const int h = b->homs[s][t].dim();
                    require_input(cell.is_array() && static_cast<int>(cell.size()) == h,
                                  entity + ": maps[" + std::to_string(s) + "][" + std::to_string(t) +
                                      "] must hold " + std::to_string(h) + " matrices");
                    for (int kk = 0; kk < h; ++kk)
                        maps[s][t].push_back(matrix_from_json(
                            k, dims[s], dims[t], cell[kk],
                            entity + " maps[" + std::to_string(s) + "][" + std::to_string(t) + "][" +
                                std::to_string(kk) + "]"));
                }
            }
            FunctorPtr f = in_entity(
                entity, [&] { return make_functor(b, std::move(dims), std::move(maps)); });
            require_report(validate_functor(*f), entity);
            inst.functors.push_back({name, std::move(f)});
            names.push_back(name);
        }
    }

    if (const Json* exp = opt_member(j, "expected")) {
        require_input(exp->is_array(), "instance: \"expected\" must be an array");
        for (const auto& ej : *exp) {
            const std::string entity = "expected entry " + std::to_string(inst.expected.size());
            ExpectedFact fact;
            fact.key = string_member(ej, "key", entity);
            require_input(!fact.key.empty(), entity + ": \"key\" must be nonempty");
            fact.value = member(ej, "value", entity);
            if (const Json* prov = opt_member(ej, "provenance")) {
                require_input(prov->is_string(), entity + ": \"provenance\" must be a string");
                fact.provenance = prov->get<std::string>();
            }
            inst.expected.push_back(std::move(fact));
        }
    }

    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require_input(static_cast<bool>(in), "load_instance: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = Json::parse(buf.str());
    } catch (const std::exception& e) {
        require_input(false, "load_instance: parse error in '" + path + "': " + e.what());
    }
    return in_entity("instance file '" + path + "'", [&] { return instance_from_json(j); });
}

Json instance_to_json(const Instance& inst) {
    const Field& k = inst.algebra->field();
    Json out;
    out["schema"] = kSchemaTag;
    out["kind"] = "instance";
    out["name"] = inst.name;
    out["field"] = field_spec_tag(inst.algebra->field_spec());

    Json alg;
    alg["dim"] = inst.algebra->dim;
    alg["unit"] = vec_to_json(k, inst.algebra->unit);
    Json st = Json::array();
    for (int i = 0; i < inst.algebra->dim; ++i) {
        Json plane = Json::array();
        for (int jj = 0; jj < inst.algebra->dim; ++jj) {
            Json row = Json::array();
            for (int l = 0; l < inst.algebra->dim; ++l)
                row.push_back(k.to_string(inst.algebra->c(i, jj, l)));
            plane.push_back(std::move(row));
        }
        st.push_back(std::move(plane));
    }
    alg["structure"] = std::move(st);
    out["algebra"] = std::move(alg);

    Json mods = Json::array();
    for (const auto& m : inst.modules) {
        Json mj;
        mj["name"] = m.name;
        mj["dim"] = m.module->dim;
        Json act = Json::array();
        for (const auto& mat : m.module->action) act.push_back(matrix_to_json(k, mat));
        mj["action"] = std::move(act);
        mods.push_back(std::move(mj));
    }
    out["modules"] = std::move(mods);

    Json ids = Json::array();
    for (const auto& i : inst.ideals) {
        Json ij;
        ij["name"] = i.name;
        Json gens = Json::array();
        for (const auto& g : i.ideal.generators) gens.push_back(vec_to_json(k, g));
        ij["generators"] = std::move(gens);
        ids.push_back(std::move(ij));
    }
    out["ideals"] = std::move(ids);

    Json fams = Json::array();
    for (const auto& f : inst.families) {
        Json fj;
        fj["name"] = f.name;
        if (f.is_block) {
            Json blocks = Json::array();
            for (const auto& blk : f.blocks) {
                Json bj = Json::array();
                for (const auto& n : blk) bj.push_back(n);
                blocks.push_back(std::move(bj));
            }
            fj["blocks"] = std::move(blocks);
        } else {
            Json names = Json::array();
            for (const auto& n : f.ideals) names.push_back(n);
            fj["ideals"] = std::move(names);
        }
        fams.push_back(std::move(fj));
    }
    out["families"] = std::move(fams);

    Json funs = Json::array();
    for (const auto& f : inst.functors) {
        Json fj;
        fj["name"] = f.name;
        fj["dims"] = f.functor->dims;
        Json maps = Json::array();
        const int m = static_cast<int>(f.functor->dims.size());
        for (int s = 0; s < m; ++s) {
            Json row = Json::array();
            for (int t = 0; t < m; ++t) {
                Json cell = Json::array();
                for (const auto& mat : f.functor->maps[s][t])
                    cell.push_back(matrix_to_json(k, mat));
                row.push_back(std::move(cell));
            }
            maps.push_back(std::move(row));
        }
        fj["maps"] = std::move(maps);
        funs.push_back(std::move(fj));
    }
    out["functors"] = std::move(funs);

    Json exp = Json::array();
    for (const auto& f : inst.expected) {
        Json ej;
        ej["key"] = f.key;
        ej["value"] = f.value;
        ej["provenance"] = f.provenance;
        exp.push_back(std::move(ej));
    }
    out["expected"] = std::move(exp);

    return out;
}

AuditReport check_expected_facts(const Instance& inst) {
    AuditReport rep;
    rep.instance = inst.name;
    rep.subject = "expected-facts";
    rep.fact("fact_count", static_cast<int>(inst.expected.size()));
    for (const auto& f : inst.expected) {
        const Json computed = evaluate_fact(inst, f.key);
        Json data{{"key", f.key},
                  {"expected", f.value},
                  {"computed", computed},
                  {"provenance", f.provenance}};
        rep.require(computed == f.value, "fact-" + f.key, "expected-fact-matches", data, data);
    }
    return rep;
}

}  // namespace yoneda

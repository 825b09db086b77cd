#include "bdcoh/io.hpp"

#include "bdcoh/error.hpp"

namespace bdcoh::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::MalformedInput, what); }

const json& need(const json& j, const char* key, const char* where)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string(where) + ": missing \"" + key + "\"");
    return j.at(key);
}

int64_t as_int(const json& v, const char* where)
{
    if (!v.is_number_integer())
        bad(std::string(where) + ": expected an integer, got " + v.dump());
    return v.get<int64_t>();
}

std::vector<int64_t> int_row(const json& v, const char* where)
{
    if (!v.is_array())
        bad(std::string(where) + ": expected an array, got " + v.dump());
    std::vector<int64_t> out;
    for (const auto& x : v)
        out.push_back(as_int(x, where));
    return out;
}

Element element(const json& v, const Carrier& c, const char* where)
{
    auto row = int_row(v, where);
    if (row.size() != c.dim())
        bad(std::string(where) + ": element " + v.dump() + " should have " + std::to_string(c.dim()) + " entries");
    return c.reduce(row);
}

json write_element(const Element& a)
{
    json out = json::array();
    for (uint64_t x : a)
        out.push_back(x);
    return out;
}

} // namespace

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

GroupPtr read_group(const json& j)
{
    if (j.is_object() && j.contains("cyclic")) {
        int64_t n = as_int(j.at("cyclic"), "group");
        if (n <= 0)
            bad("group: cyclic order must be positive");
        return FiniteGroup::cyclic(static_cast<size_t>(n));
    }
    if (j.is_object() && j.contains("product")) {
        const auto& parts = j.at("product");
        if (!parts.is_array() || parts.empty())
            bad("group: \"product\" needs a nonempty array of groups");
        GroupPtr g = read_group(parts.at(0));
        for (size_t i = 1; i < parts.size(); ++i)
            g = FiniteGroup::direct_product(*g, *read_group(parts.at(i)));
        return g;
    }
    const json& mult = need(j, "mult", "group");
    if (!mult.is_array())
        bad("group: \"mult\" must be an array of rows");
    std::vector<std::vector<int64_t>> table;
    for (const auto& row : mult)
        table.push_back(int_row(row, "group mult"));
    if (j.contains("order") && as_int(j.at("order"), "group order") != static_cast<int64_t>(table.size()))
        bad("group: \"order\" does not match the table");
    std::optional<int64_t> identity;
    if (j.contains("identity"))
        identity = as_int(j.at("identity"), "group identity");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array())
            bad("group: \"labels\" must be an array of strings");
        for (const auto& l : j.at("labels")) {
            if (!l.is_string())
                bad("group: labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return validate_group(table, identity, labels);
}

Elt read_element_key(const std::string& key, const FiniteGroup& group)
{
    if (auto e = group.find_label(key))
        return *e;
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
        unsigned long long v = std::stoull(key);
        if (v < group.order())
            return static_cast<Elt>(v);
    }
    fail(ErrorCode::UnknownElement, "unknown group element \"" + key + "\"");
}

IntMatrix read_matrix(const json& j)
{
    const json& m = (j.is_object() && j.contains("matrix")) ? j.at("matrix") : j;
    if (!m.is_array())
        bad("matrix: expected an array of rows, got " + m.dump());
    IntMatrix out;
    for (const auto& row : m)
        out.push_back(int_row(row, "matrix"));
    return out;
}

AdditiveMap read_map(const json& j, const Carrier& source, const Carrier& target)
{
    return AdditiveMap(source, target, read_matrix(j));
}

ModulePtr read_module(const json& j, const GroupPtr& group)
{
    if (!group)
        bad("module: no group given");
    std::vector<uint64_t> moduli;
    for (int64_t m : int_row(need(j, "moduli", "module"), "module moduli")) {
        if (m < 2)
            bad("module: moduli must be at least 2");
        moduli.push_back(static_cast<uint64_t>(m));
    }
    Carrier c(moduli);

    std::vector<AdditiveMap> action;
    bool given = j.contains("action") && !j.at("action").empty();
    if (given) {
        const json& act = j.at("action");
        if (!act.is_object())
            bad("module: \"action\" must map group elements to matrices");
        std::vector<std::optional<AdditiveMap>> maps(group->order());
        for (auto it = act.begin(); it != act.end(); ++it)
            maps[read_element_key(it.key(), *group)] = read_map(it.value(), c, c);
        for (Elt g = 0; g < group->order(); ++g) {
            if (!maps[g]) {
                if (g != group->identity())
                    bad("module: action of " + group->label(g) + " is missing");
                maps[g] = AdditiveMap::identity(c);
            }
            action.push_back(*maps[g]);
        }
    }
    GModule module = given ? GModule(group, c, std::move(action)) : GModule::trivial(group, c);

    if (!j.contains("mult"))
        return std::make_shared<GModule>(std::move(module));
    const json& mult = j.at("mult");
    if (!mult.is_array() || mult.size() != c.dim())
        bad("module: \"mult\" must be a dim x dim table of elements");
    std::vector<std::vector<Element>> products;
    for (const auto& row : mult) {
        if (!row.is_array() || row.size() != c.dim())
            bad("module: \"mult\" must be a dim x dim table of elements");
        std::vector<Element> r;
        for (const auto& v : row)
            r.push_back(element(v, c, "module mult"));
        products.push_back(std::move(r));
    }
    Element unit = element(need(j, "unit", "module"), c, "module unit");
    bool autos = j.value("automorphisms", false);
    return std::make_shared<GAlgebra>(std::move(module), std::move(products), std::move(unit), autos);
}

AlgebraPtr read_algebra(const json& j, const GroupPtr& group)
{
    auto m = std::dynamic_pointer_cast<const GAlgebra>(read_module(j, group));
    if (!m)
        bad("algebra: \"mult\" and \"unit\" are required");
    return m;
}

namespace {

GroupPtr group_for(const json& j, GroupPtr group, const char* where)
{
    if (group)
        return group;
    if (!j.is_object() || !j.contains("group"))
        bad(std::string(where) + ": no group given");
    return read_group(j.at("group"));
}

std::vector<Element> read_section(const json& j, const Carrier& A, const Carrier& B)
{
    if (!j.is_array())
        bad("s: expected an array of elements of B, one per element of A");
    std::vector<Element> s;
    for (const auto& v : j)
        s.push_back(element(v, B, "s"));
    (void)A;
    return s;
}

SubgroupMap read_retraction(const json& j, const AdditiveMap& pi, const Carrier& A)
{
    const Carrier& B = pi.source();
    const json& images = (j.is_object() && j.contains("matrix")) ? j.at("matrix") : j;
    if (!images.is_array())
        bad("r: expected the images of the kernel generators");
    std::vector<Element> imgs, gens;
    for (const auto& v : images)
        imgs.push_back(element(v, A, "r"));
    if (j.is_object() && j.contains("kernel_generators"))
        for (const auto& v : j.at("kernel_generators"))
            gens.push_back(element(v, B, "r kernel_generators"));
    Subgroup k = kernel(pi);
    size_t expected = gens.empty() ? k.generators().size() : gens.size();
    if (imgs.size() != expected)
        bad("r: " + std::to_string(imgs.size()) + " images given for " + std::to_string(expected) +
            " kernel generators");
    return retraction_on_kernel(pi, A, std::move(gens), std::move(imgs));
}

} // namespace

ShortExactSequence read_ses(const json& j, GroupPtr group)
{
    group = group_for(j, group, "ses");
    AlgebraPtr A = read_algebra(need(j, "A", "ses"), group);
    AlgebraPtr B = read_algebra(need(j, "B", "ses"), group);
    AdditiveMap iota = read_map(need(j, "iota", "ses"), A->carrier(), B->carrier());
    AdditiveMap pi = read_map(need(j, "pi", "ses"), B->carrier(), A->carrier());
    auto s = read_section(need(j, "s", "ses"), A->carrier(), B->carrier());
    SubgroupMap r = read_retraction(need(j, "r", "ses"), pi, A->carrier());
    return make_ses(A, B, std::move(iota), std::move(pi), std::move(s), std::move(r));
}

ThetaFamily read_family(const json& j, GroupPtr group)
{
    group = group_for(j, group, "family");
    AlgebraPtr A = read_algebra(need(j, "A", "family"), group);
    AlgebraPtr B = read_algebra(need(j, "B", "family"), group);
    AdditiveMap pi = read_map(need(j, "pi", "family"), B->carrier(), A->carrier());
    auto s = read_section(need(j, "s", "family"), A->carrier(), B->carrier());
    const json& mem = need(j, "members", "family");
    if (!mem.is_object())
        bad("family: \"members\" must map group elements to members");
    std::vector<std::optional<FamilyMember>> members(group->order());
    std::vector<bool> seen(group->order(), false);
    for (auto it = mem.begin(); it != mem.end(); ++it) {
        Elt x = read_element_key(it.key(), *group);
        seen[x] = true;
        const json& v = it.value();
        if (v.is_string() && v.get<std::string>() == "zero")
            continue;
        AdditiveMap iota = read_map(need(v, "iota", "family member"), A->carrier(), B->carrier());
        members[x] = FamilyMember{std::move(iota), read_retraction(need(v, "r", "family member"), pi, A->carrier())};
    }
    for (Elt x = 0; x < group->order(); ++x)
        if (!seen[x])
            bad("family: member " + group->label(x) + " is missing (use \"zero\" for the zero retraction)");
    return make_family(A, B, std::move(pi), std::move(s), std::move(members));
}

// ---------------------------------------------------------------------------

json write_group(const FiniteGroup& g)
{
    json mult = json::array();
    for (const auto& row : g.table())
        mult.push_back(row);
    return {{"order", g.order()}, {"mult", mult}, {"identity", g.identity()}, {"labels", g.labels()}};
}

json write_matrix(const IntMatrix& m)
{
    json out = json::array();
    for (const auto& row : m)
        out.push_back(row);
    return out;
}

json write_module(const GModule& m)
{
    const auto& G = *m.group();
    json out{{"moduli", m.carrier().moduli()}};
    if (!m.is_trivial()) {
        json act = json::object();
        for (Elt g = 0; g < G.order(); ++g)
            if (g != G.identity())
                act[G.label(g)] = write_matrix(m.action(g).matrix());
        out["action"] = act;
    }
    if (auto a = dynamic_cast<const GAlgebra*>(&m)) {
        json mult = json::array();
        for (const auto& row : a->structure_constants()) {
            json r = json::array();
            for (const auto& e : row)
                r.push_back(write_element(e));
            mult.push_back(r);
        }
        out["mult"] = mult;
        out["unit"] = write_element(a->unit());
        out["automorphisms"] = a->acts_by_automorphisms();
    }
    return out;
}

json write_retraction(const SubgroupMap& r)
{
    json imgs = json::array(), gens = json::array();
    for (const auto& e : r.images())
        imgs.push_back(write_element(e));
    for (const auto& e : r.generators())
        gens.push_back(write_element(e));
    return {{"matrix", imgs}, {"kernel_generators", gens}};
}

namespace {
json write_section(const std::vector<Element>& s)
{
    json out = json::array();
    for (const auto& e : s)
        out.push_back(write_element(e));
    return out;
}
} // namespace

json write_ses(const ShortExactSequence& ses)
{
    return {{"group", write_group(*ses.A->group())},
            {"A", write_module(*ses.A)},
            {"B", write_module(*ses.B)},
            {"iota", write_matrix(ses.iota.matrix())},
            {"pi", write_matrix(ses.pi.matrix())},
            {"s", write_section(ses.s)},
            {"r", write_retraction(ses.r)}};
}

json write_family(const ThetaFamily& f)
{
    json members = json::object();
    for (Elt x = 0; x < f.members.size(); ++x) {
        if (!f.members[x])
            members[f.group->label(x)] = "zero";
        else
            members[f.group->label(x)] = {{"iota", write_matrix(f.members[x]->iota.matrix())},
                                          {"r", write_retraction(f.members[x]->r)}};
    }
    return {{"group", write_group(*f.group)},
            {"A", write_module(*f.A)},
            {"B", write_module(*f.B)},
            {"pi", write_matrix(f.pi.matrix())},
            {"s", write_section(f.s)},
            {"members", members}};
}

json write_report(const Report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"informational", c.informational}};
        if (!c.witness.empty())
            e["witness"] = c.witness;
        if (!c.detail.empty())
            e["detail"] = c.detail;
        checks.push_back(e);
    }
    return {{"title", r.title}, {"passed", r.passed()}, {"checks", checks}, {"notes", r.notes}};
}

json report_results(const Report& r)
{
    json out = json::array();
    for (const auto& c : r.checks) {
        json e{{"check", c.name}, {"status", c.informational ? "info" : (c.passed ? "pass" : "fail")}};
        if (c.informational)
            e["holds"] = c.passed;
        if (!c.witness.empty())
            e["witness"] = c.witness;
        out.push_back(e);
    }
    return out;
}

json write_summary(const DegreeSummary& s)
{
    return {{"degree", s.degree},
            {"invariant_factors", s.invariant_factors},
            {"order", s.cohomology.str()},
            {"cochains", s.cochains.str()},
            {"cocycles", s.cocycles.str()},
            {"coboundaries", s.coboundaries.str()}};
}

namespace {

std::optional<std::vector<uint64_t>> opt_vec(const json& v, size_t n, const char* where)
{
    if (v.is_null())
        return std::nullopt;
    auto row = int_row(v, where);
    if (row.size() != n)
        bad(std::string(where) + ": vector of length " + std::to_string(row.size()) + ", expected " +
            std::to_string(n));
    std::vector<uint64_t> out;
    for (int64_t x : row) {
        if (x < 0)
            bad(std::string(where) + ": coordinates must be nonnegative");
        out.push_back(static_cast<uint64_t>(x));
    }
    return out;
}

std::vector<std::vector<std::optional<std::vector<uint64_t>>>> opt_table(const json& t, size_t n, const char* where)
{
    if (!t.is_array() || t.size() != n)
        bad(std::string(where) + ": expected an n x n table");
    std::vector<std::vector<std::optional<std::vector<uint64_t>>>> out;
    for (const auto& row : t) {
        if (!row.is_array() || row.size() != n)
            bad(std::string(where) + ": expected an n x n table");
        std::vector<std::optional<std::vector<uint64_t>>> r;
        for (const auto& v : row)
            r.push_back(opt_vec(v, n, where));
        out.push_back(std::move(r));
    }
    return out;
}

json opt_json(const std::optional<std::vector<uint64_t>>& v) { return v ? json(*v) : json(nullptr); }

} // namespace

GradedAlgebraInstance read_instance(const json& j)
{
    GradedAlgebraInstance inst;
    int64_t p = as_int(need(j, "modulus", "instance"), "instance modulus");
    if (p < 2)
        bad("instance: modulus must be at least 2");
    inst.modulus = static_cast<uint64_t>(p);
    inst.r = static_cast<int>(as_int(need(j, "r", "instance"), "instance r"));
    inst.cutoff = static_cast<int>(as_int(need(j, "cutoff", "instance"), "instance cutoff"));
    for (int64_t d : int_row(need(j, "degrees", "instance"), "instance degrees"))
        inst.degrees.push_back(static_cast<int>(d));
    size_t n = inst.degrees.size();
    if (j.contains("labels"))
        for (const auto& l : j.at("labels"))
            inst.labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    else
        for (size_t i = 0; i < n; ++i)
            inst.labels.push_back("e" + std::to_string(i));
    if (inst.labels.size() != n)
        bad("instance: one label per basis element");
    inst.product = opt_table(need(j, "product", "instance"), n, "instance product");
    inst.bracket = opt_table(need(j, "bracket", "instance"), n, "instance bracket");
    if (j.contains("op") && !j.at("op").is_null()) {
        const json& op = j.at("op");
        if (!op.is_array() || op.size() != n)
            bad("instance: \"op\" needs one entry per basis element");
        for (const auto& v : op)
            inst.op.push_back(opt_vec(v, n, "instance op"));
    }
    if (j.contains("unit"))
        inst.unit = opt_vec(j.at("unit"), n, "instance unit");
    return inst;
}

json write_instance(const GradedAlgebraInstance& inst)
{
    auto table = [](const auto& t) {
        json out = json::array();
        for (const auto& row : t) {
            json r = json::array();
            for (const auto& v : row)
                r.push_back(opt_json(v));
            out.push_back(r);
        }
        return out;
    };
    json op = json::array();
    for (const auto& v : inst.op)
        op.push_back(opt_json(v));
    json out{{"modulus", inst.modulus}, {"r", inst.r},          {"cutoff", inst.cutoff},
             {"degrees", inst.degrees}, {"labels", inst.labels}, {"product", table(inst.product)},
             {"bracket", table(inst.bracket)}};
    if (!inst.op.empty())
        out["op"] = op;
    if (inst.unit)
        out["unit"] = *inst.unit;
    return out;
}

} // namespace bdcoh::io

#include "bdcoh/bdcoh.h"

#include "bdcoh/bd.hpp"
#include "bdcoh/error.hpp"
#include "bdcoh/examples.hpp"
#include "bdcoh/io.hpp"
#include "bdcoh/products.hpp"

#include <cstring>
#include <new>

using namespace bdcoh;
using io::json;

struct bdcoh_group {
    GroupPtr g;
};
struct bdcoh_module {
    ModulePtr m;
};
struct bdcoh_cohomology {
    ContextPtr ctx;
};
struct bdcoh_ses {
    ShortExactSequence ses;
};
struct bdcoh_family {
    ThetaFamily family;
};
struct bdcoh_bd {
    std::shared_ptr<const BDAlgebra> bd;
};
struct bdcoh_report {
    Report report;
};

namespace {

thread_local std::string last_error;

bdcoh_status set_error(bdcoh_status st, const std::string& msg)
{
    last_error = msg;
    return st;
}

template <class F>
bdcoh_status guarded(F&& f)
{
    try {
        f();
        return BDCOH_OK;
    } catch (const Error& e) {
        return set_error(static_cast<bdcoh_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(BDCOH_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(BDCOH_INTERNAL, e.what());
    }
}

void need(const void* p, const char* what)
{
    if (!p)
        fail(ErrorCode::MalformedInput, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const json& j, char** out)
{
    need(out, "output pointer");
    *out = dup_string(j.dump());
}

void emit_report(Report r, bdcoh_report** out)
{
    need(out, "output pointer");
    *out = new bdcoh_report{std::move(r)};
}

json rows_json(const std::vector<std::vector<uint64_t>>& rows)
{
    json out = json::array();
    for (const auto& r : rows)
        out.push_back(r);
    return out;
}

} // namespace

extern "C" {

const char* bdcoh_version(void) { return "0.1.0"; }
const char* bdcoh_last_error(void) { return last_error.c_str(); }

const char* bdcoh_status_name(bdcoh_status status)
{
    if (status == BDCOH_OK)
        return "Ok";
    return error_code_name(static_cast<ErrorCode>(status));
}

void bdcoh_string_free(char* s) { std::free(s); }

bdcoh_status bdcoh_set_table_limit(uint64_t entries)
{
    return guarded([&] { set_table_limit(entries); });
}

uint64_t bdcoh_table_limit(void) { return table_limit(); }

// groups

bdcoh_status bdcoh_group_from_json(const char* text, bdcoh_group** out)
{
    return guarded([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = new bdcoh_group{io::read_group(io::parse(text))};
    });
}

bdcoh_status bdcoh_group_cyclic(size_t n, bdcoh_group** out)
{
    return guarded([&] {
        need(out, "output pointer");
        if (n == 0)
            fail(ErrorCode::MalformedInput, "cyclic group of order 0");
        *out = new bdcoh_group{FiniteGroup::cyclic(n)};
    });
}

bdcoh_status bdcoh_group_order(const bdcoh_group* g, size_t* out)
{
    return guarded([&] {
        need(g, "group");
        need(out, "output pointer");
        *out = g->g->order();
    });
}

bdcoh_status bdcoh_group_to_json(const bdcoh_group* g, char** out)
{
    return guarded([&] {
        need(g, "group");
        emit(io::write_group(*g->g), out);
    });
}

void bdcoh_group_free(bdcoh_group* g) { delete g; }

// modules

bdcoh_status bdcoh_module_from_json(const bdcoh_group* g, const char* text, bdcoh_module** out)
{
    return guarded([&] {
        need(g, "group");
        need(text, "json");
        need(out, "output pointer");
        *out = new bdcoh_module{io::read_module(io::parse(text), g->g)};
    });
}

bdcoh_status bdcoh_module_cyclic_ring(const bdcoh_group* g, uint64_t m, bdcoh_module** out)
{
    return guarded([&] {
        need(g, "group");
        need(out, "output pointer");
        *out = new bdcoh_module{std::make_shared<GAlgebra>(GAlgebra::cyclic_ring(g->g, m))};
    });
}

bdcoh_status bdcoh_module_is_algebra(const bdcoh_module* m, int* out)
{
    return guarded([&] {
        need(m, "module");
        need(out, "output pointer");
        *out = std::dynamic_pointer_cast<const GAlgebra>(m->m) ? 1 : 0;
    });
}

void bdcoh_module_free(bdcoh_module* m) { delete m; }

// cohomology

bdcoh_status bdcoh_cohomology_build(const bdcoh_module* m, size_t max_degree, bdcoh_cohomology** out)
{
    return guarded([&] {
        need(m, "module");
        need(out, "output pointer");
        *out = new bdcoh_cohomology{CohomologyContext::build(m->m, max_degree)};
    });
}

bdcoh_status bdcoh_cohomology_rank(const bdcoh_cohomology* c, size_t n, size_t* out)
{
    return guarded([&] {
        need(c, "cohomology");
        need(out, "output pointer");
        *out = c->ctx->rank(n);
    });
}

bdcoh_status bdcoh_cohomology_invariant_factors(const bdcoh_cohomology* c, size_t n, uint64_t* buf, size_t cap,
                                                size_t* len)
{
    return guarded([&] {
        need(c, "cohomology");
        need(len, "length pointer");
        const auto& f = c->ctx->invariant_factors(n);
        if (cap > 0)
            need(buf, "buffer");
        for (size_t i = 0; i < f.size() && i < cap; ++i)
            buf[i] = f[i];
        *len = f.size();
    });
}

bdcoh_status bdcoh_cohomology_summary_json(const bdcoh_cohomology* c, size_t n, int with_representatives, char** out)
{
    return guarded([&] {
        need(c, "cohomology");
        json j = io::write_summary(c->ctx->summary(n));
        if (with_representatives) {
            size_t dim = c->ctx->module()->carrier().dim();
            json reps = json::array();
            for (size_t t = 0; t < c->ctx->rank(n); ++t) {
                auto raw = c->ctx->basis_representative(n, t).raw();
                json values = json::array();
                for (size_t i = 0; i < raw.size(); i += dim)
                    values.push_back(std::vector<uint64_t>(raw.begin() + i, raw.begin() + i + dim));
                reps.push_back(values);
            }
            j["representatives"] = reps;
        }
        emit(j, out);
    });
}

bdcoh_status bdcoh_cup_table_json(const bdcoh_cohomology* c, size_t m, size_t n, char** out)
{
    return guarded([&] {
        need(c, "cohomology");
        algebra_of(c->ctx);
        json table = json::array();
        for (size_t i = 0; i < c->ctx->rank(m); ++i) {
            json row = json::array();
            for (size_t j = 0; j < c->ctx->rank(n); ++j)
                row.push_back(cup_class(c->ctx->basis_class(m, i), c->ctx->basis_class(n, j)).coordinates());
            table.push_back(row);
        }
        emit(json{{"m", m}, {"n", n}, {"factors", c->ctx->invariant_factors(m + n)}, {"table", table}}, out);
    });
}

void bdcoh_cohomology_free(bdcoh_cohomology* c) { delete c; }

// sequences

bdcoh_status bdcoh_ses_from_json(const char* text, const bdcoh_group* g, bdcoh_ses** out)
{
    return guarded([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = new bdcoh_ses{io::read_ses(io::parse(text), g ? g->g : nullptr)};
    });
}

bdcoh_status bdcoh_ses_bockstein(const bdcoh_group* g, uint64_t p, bdcoh_ses** out)
{
    return guarded([&] {
        need(g, "group");
        need(out, "output pointer");
        *out = new bdcoh_ses{bockstein_ses(g->g, p)};
    });
}

bdcoh_status bdcoh_ses_to_json(const bdcoh_ses* s, char** out)
{
    return guarded([&] {
        need(s, "sequence");
        emit(io::write_ses(s->ses), out);
    });
}

bdcoh_status bdcoh_ses_validate(const bdcoh_ses* s, bdcoh_report** out)
{
    return guarded([&] {
        need(s, "sequence");
        emit_report(validate_situation_star(s->ses), out);
    });
}

bdcoh_status bdcoh_ses_theta_json(const bdcoh_ses* s, size_t max_degree, char** out)
{
    return guarded([&] {
        need(s, "sequence");
        ContextPtr ctx = CohomologyContext::build(s->ses.A, max_degree + 1);
        json degrees = json::array();
        for (size_t n = 0; n <= max_degree; ++n) {
            std::vector<std::vector<uint64_t>> rows;
            for (size_t t = 0; t < ctx->rank(n); ++t)
                rows.push_back(theta_class(s->ses, ctx->basis_class(n, t)).coordinates());
            degrees.push_back({{"degree", n},
                               {"source_factors", ctx->invariant_factors(n)},
                               {"target_factors", ctx->invariant_factors(n + 1)},
                               {"matrix", rows_json(rows)}});
        }
        emit(json{{"degrees", degrees}}, out);
    });
}

bdcoh_status bdcoh_ses_identities(const bdcoh_ses* s, size_t max_degree, bdcoh_report** out)
{
    return guarded([&] {
        need(s, "sequence");
        ValidatedSES v(s->ses);
        if (!v.validated()) {
            const Check* c = v.report().first_failure();
            fail(ErrorCode::SituationNotValidated,
                 "sequence fails situation-star" + (c ? " (" + c->name + ": " + c->witness + ")" : std::string()));
        }
        ContextPtr ctx = CohomologyContext::build(s->ses.A, max_degree + 1);
        Report rep;
        rep.title = "theta identities (degree <= " + std::to_string(max_degree) + ")";
        IdentityCheck der;
        size_t pairs = 0;
        for (size_t m = 0; m <= max_degree && der.holds; ++m)
            for (size_t n = 0; m + n <= max_degree && der.holds; ++n)
                for (size_t i = 0; i < ctx->rank(m) && der.holds; ++i)
                    for (size_t j = 0; j < ctx->rank(n) && der.holds; ++j) {
                        der = check_derivation(v, ctx->basis_class(m, i), ctx->basis_class(n, j));
                        ++pairs;
                    }
        rep.add("derivation", der.holds, der.witness, "checked " + std::to_string(pairs) + " basis pairs");
        IdentityCheck diff = check_differential(v, ctx, max_degree);
        rep.add("differential", diff.holds, diff.witness, "theta o theta on H^n, n < " + std::to_string(max_degree));
        emit_report(std::move(rep), out);
    });
}

void bdcoh_ses_free(bdcoh_ses* s) { delete s; }

// families

bdcoh_status bdcoh_family_from_json(const char* text, const bdcoh_group* g, bdcoh_family** out)
{
    return guarded([&] {
        need(text, "json");
        need(out, "output pointer");
        *out = new bdcoh_family{io::read_family(io::parse(text), g ? g->g : nullptr)};
    });
}

bdcoh_status bdcoh_family_c3(bdcoh_family** out)
{
    return guarded([&] {
        need(out, "output pointer");
        *out = new bdcoh_family{build_c3_family()};
    });
}

bdcoh_status bdcoh_family_cp(uint64_t p, bdcoh_family** out)
{
    return guarded([&] {
        need(out, "output pointer");
        *out = new bdcoh_family{build_cp_bockstein_family(p)};
    });
}

bdcoh_status bdcoh_family_to_json(const bdcoh_family* f, char** out)
{
    return guarded([&] {
        need(f, "family");
        emit(io::write_family(f->family), out);
    });
}

bdcoh_status bdcoh_family_validate(const bdcoh_family* f, size_t cutoff, bdcoh_report** out)
{
    return guarded([&] {
        need(f, "family");
        emit_report(validate_situation_starstar(f->family, cutoff), out);
    });
}

void bdcoh_family_free(bdcoh_family* f) { delete f; }

// BD algebras

bdcoh_status bdcoh_bd_create(const bdcoh_family* f, size_t cutoff, bdcoh_bd** out)
{
    return guarded([&] {
        need(f, "family");
        need(out, "output pointer");
        *out = new bdcoh_bd{BDAlgebra::create(f->family, cutoff)};
    });
}

bdcoh_status bdcoh_bd_validation(const bdcoh_bd* bd, bdcoh_report** out)
{
    return guarded([&] {
        need(bd, "BD algebra");
        emit_report(bd->bd->validation(), out);
    });
}

bdcoh_status bdcoh_bd_verify_axioms(const bdcoh_bd* bd, size_t cutoff, bdcoh_report** out)
{
    return guarded([&] {
        need(bd, "BD algebra");
        emit_report(verify_bd_axioms(*bd->bd, cutoff), out);
    });
}

bdcoh_status bdcoh_bd_verify_axioms_ex(const bdcoh_bd* bd, size_t cutoff, size_t pair_cutoff, int force,
                                       bdcoh_report** out)
{
    return guarded([&] {
        need(bd, "BD algebra");
        size_t pairs = pair_cutoff == 0 ? BDAlgebra::kAutoPairCutoff : pair_cutoff;
        emit_report(verify_bd_axioms(*bd->bd, cutoff, force != 0, pairs), out);
    });
}

bdcoh_status bdcoh_bd_verify_pr(const bdcoh_bd* bd, size_t cutoff, int r, bdcoh_report** out)
{
    return guarded([&] {
        need(bd, "BD algebra");
        emit_report(verify_pr_axioms(export_instance(*bd->bd, cutoff, r)), out);
    });
}

bdcoh_status bdcoh_bd_delta_table_json(const bdcoh_bd* bd, size_t max_degree, char** out)
{
    return guarded([&] {
        need(bd, "BD algebra");
        json rows = json::array();
        for (const auto& row : report_delta_table(*bd->bd, max_degree))
            rows.push_back({{"g", bd->bd->group().label(row.g)},
                            {"degree", row.degree},
                            {"index", row.index},
                            {"image", row.image}});
        emit(json{{"rows", rows}}, out);
    });
}

void bdcoh_bd_free(bdcoh_bd* bd) { delete bd; }

bdcoh_status bdcoh_pr_verify_json(const char* text, bdcoh_report** out)
{
    return guarded([&] {
        need(text, "json");
        emit_report(verify_pr_axioms(io::read_instance(io::parse(text))), out);
    });
}

// reports

bdcoh_status bdcoh_report_passed(const bdcoh_report* r, int* out)
{
    return guarded([&] {
        need(r, "report");
        need(out, "output pointer");
        *out = r->report.passed() ? 1 : 0;
    });
}

bdcoh_status bdcoh_report_to_json(const bdcoh_report* r, char** out)
{
    return guarded([&] {
        need(r, "report");
        emit(io::write_report(r->report), out);
    });
}

void bdcoh_report_free(bdcoh_report* r) { delete r; }

} // extern "C"

// extern "C" surface over the C++ core. Exceptions never cross this
// boundary: each entry point maps them to an entcat_status and stores the
// message for entcat_last_error().

#include "entcat/entcat.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "entcat/catalysis.hpp"
#include "entcat/concentration.hpp"
#include "entcat/io.hpp"
#include "entcat/lp.hpp"
#include "entcat/majorization.hpp"
#include "entcat/spectrum.hpp"

struct entcat_spectrum {
    entcat::Spectrum value;
};

struct entcat_search_result {
    entcat::CatalystSearchResult value;
};

struct entcat_ecp {
    entcat::EcpDistribution value;
};

struct entcat_landscape {
    std::vector<entcat::LandscapeRow> rows;
};

namespace {

thread_local std::string g_last_error;

entcat_status to_status(entcat::ErrorCode code) {
    using entcat::ErrorCode;
    switch (code) {
        case ErrorCode::EmptyInput: return ENTCAT_ERR_EMPTY_INPUT;
        case ErrorCode::NegativeEntry: return ENTCAT_ERR_NEGATIVE_ENTRY;
        case ErrorCode::NotNormalized: return ENTCAT_ERR_NOT_NORMALIZED;
        case ErrorCode::NonFinite: return ENTCAT_ERR_NON_FINITE;
        case ErrorCode::OutOfRange: return ENTCAT_ERR_OUT_OF_RANGE;
        case ErrorCode::InvalidDimension: return ENTCAT_ERR_INVALID_DIMENSION;
        case ErrorCode::Inapplicable: return ENTCAT_ERR_INAPPLICABLE;
        case ErrorCode::InvalidParams: return ENTCAT_ERR_INVALID_PARAMS;
        case ErrorCode::ParseError: return ENTCAT_ERR_PARSE;
        case ErrorCode::NumericalFailure: return ENTCAT_ERR_NUMERICAL;
    }
    return ENTCAT_ERR_INTERNAL;
}

entcat_status fail(entcat_status s, std::string message) {
    g_last_error = std::move(message);
    return s;
}

template <class F>
entcat_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const entcat::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(ENTCAT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ENTCAT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ENTCAT_ERR_INTERNAL, "unknown exception");
    }
}

template <class... P>
bool any_null(const P*... ptrs) {
    return ((ptrs == nullptr) || ...);
}

entcat_status null_argument() { return fail(ENTCAT_ERR_NULL_ARGUMENT, "null argument"); }

entcat_status emit_spectrum(entcat::Spectrum s, entcat_spectrum** out) {
    *out = new entcat_spectrum{std::move(s)};
    return ENTCAT_OK;
}

entcat_status copy_out(const std::vector<double>& src, double* out, std::size_t capacity) {
    const std::size_t n = std::min(capacity, src.size());
    if (n > 0) std::memcpy(out, src.data(), n * sizeof(double));
    if (capacity < src.size()) return fail(ENTCAT_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    return ENTCAT_OK;
}

entcat::ExactSpectrum exact_from(const char* const* values, std::size_t count) {
    std::vector<std::string> text;
    text.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (values[i] == nullptr) {
            throw entcat::Error(entcat::ErrorCode::ParseError, "null coefficient string");
        }
        text.emplace_back(values[i]);
    }
    return entcat::make_exact_spectrum(text);
}

entcat_classification to_c(const entcat::PairClassification& c) {
    return entcat_classification{static_cast<entcat_verdict>(c.verdict),
                                 c.forward_violation.value_or(0),
                                 c.backward_violation.value_or(0)};
}

entcat::SearchOptions to_cpp(const entcat_search_options* o) {
    entcat::SearchOptions s;
    s.dim = o->dim;
    s.grid_step = o->grid_step;
    s.refine = o->refine != 0;
    s.apply_gates = o->apply_gates != 0;
    s.collect_feasible = o->collect_feasible != 0;
    s.parallel = o->parallel != 0;
    return s;
}

entcat_status write_text(const std::string& text, char* buf, std::size_t capacity,
                         std::size_t* needed) {
    if (needed) *needed = text.size() + 1;
    if (buf == nullptr || capacity < text.size() + 1) {
        return fail(ENTCAT_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return ENTCAT_OK;
}

}  // namespace

extern "C" {

const char* entcat_last_error(void) { return g_last_error.c_str(); }

const char* entcat_status_name(entcat_status status) {
    switch (status) {
        case ENTCAT_OK: return "OK";
        case ENTCAT_ERR_EMPTY_INPUT: return "EmptyInput";
        case ENTCAT_ERR_NEGATIVE_ENTRY: return "NegativeEntry";
        case ENTCAT_ERR_NOT_NORMALIZED: return "NotNormalized";
        case ENTCAT_ERR_NON_FINITE: return "NonFinite";
        case ENTCAT_ERR_OUT_OF_RANGE: return "OutOfRange";
        case ENTCAT_ERR_INVALID_DIMENSION: return "InvalidDimension";
        case ENTCAT_ERR_INAPPLICABLE: return "Inapplicable";
        case ENTCAT_ERR_INVALID_PARAMS: return "InvalidParams";
        case ENTCAT_ERR_PARSE: return "ParseError";
        case ENTCAT_ERR_NUMERICAL: return "NumericalFailure";
        case ENTCAT_ERR_NULL_ARGUMENT: return "NullArgument";
        case ENTCAT_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
        case ENTCAT_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

entcat_status entcat_spectrum_create(const double* values, size_t count, int normalize,
                                     entcat_spectrum** out) {
    if (out == nullptr || (values == nullptr && count > 0)) return null_argument();
    return guarded([&] {
        return emit_spectrum(
            entcat::make_spectrum(std::span<const double>(values, count), normalize != 0), out);
    });
}

entcat_status entcat_spectrum_parse_json(const char* text, int normalize, entcat_spectrum** out) {
    if (any_null(text, out)) return null_argument();
    return guarded([&] { return emit_spectrum(entcat::parse_spectrum_json(text, normalize != 0), out); });
}

entcat_status entcat_maximally_entangled(size_t p, entcat_spectrum** out) {
    if (out == nullptr) return null_argument();
    return guarded([&] { return emit_spectrum(entcat::maximally_entangled(p), out); });
}

entcat_status entcat_tensor_sorted(const entcat_spectrum* a, const entcat_spectrum* b,
                                   entcat_spectrum** out) {
    if (any_null(a, b, out)) return null_argument();
    return guarded([&] { return emit_spectrum(entcat::tensor_sorted(a->value, b->value), out); });
}

void entcat_spectrum_destroy(entcat_spectrum* s) { delete s; }

size_t entcat_spectrum_size(const entcat_spectrum* s) { return s ? s->value.size() : 0; }

entcat_status entcat_spectrum_coefficients(const entcat_spectrum* s, double* out, size_t capacity) {
    if (s == nullptr || (out == nullptr && capacity > 0)) return null_argument();
    return copy_out(s->value.coefficients(), out, capacity);
}

entcat_status entcat_entropy(const entcat_spectrum* s, double* nats) {
    if (any_null(s, nats)) return null_argument();
    *nats = entcat::entropy(s->value);
    return ENTCAT_OK;
}

entcat_status entcat_check_majorization(const entcat_spectrum* x, const entcat_spectrum* y,
                                        int* majorized) {
    if (any_null(x, y, majorized)) return null_argument();
    *majorized = entcat::check_majorization(x->value, y->value) ? 1 : 0;
    return ENTCAT_OK;
}

entcat_status entcat_classify_pair(const entcat_spectrum* x, const entcat_spectrum* y,
                                   entcat_classification* out) {
    if (any_null(x, y, out)) return null_argument();
    *out = to_c(entcat::classify_pair(x->value, y->value));
    return ENTCAT_OK;
}

entcat_status entcat_tail(const entcat_spectrum* x, size_t l, double* out) {
    if (any_null(x, out)) return null_argument();
    return guarded([&] {
        *out = entcat::tail(x->value, l);
        return ENTCAT_OK;
    });
}

entcat_status entcat_p_max(const entcat_spectrum* x, const entcat_spectrum* y, double* out) {
    if (any_null(x, y, out)) return null_argument();
    *out = entcat::p_max(x->value, y->value);
    return ENTCAT_OK;
}

const char* entcat_verdict_name(entcat_verdict v) {
    return entcat::to_string(static_cast<entcat::Verdict>(v));
}

entcat_status entcat_exact_check_majorization(const char* const* x, size_t nx, const char* const* y,
                                              size_t ny, int* majorized) {
    if (any_null(x, y, majorized)) return null_argument();
    return guarded([&] {
        *majorized = entcat::check_majorization(exact_from(x, nx), exact_from(y, ny)) ? 1 : 0;
        return ENTCAT_OK;
    });
}

entcat_status entcat_exact_classify_pair(const char* const* x, size_t nx, const char* const* y,
                                         size_t ny, entcat_classification* out) {
    if (any_null(x, y, out)) return null_argument();
    return guarded([&] {
        *out = to_c(entcat::classify_pair(exact_from(x, nx), exact_from(y, ny)));
        return ENTCAT_OK;
    });
}

entcat_status entcat_exact_p_max(const char* const* x, size_t nx, const char* const* y, size_t ny,
                                 char* buf, size_t capacity) {
    if (any_null(x, y, buf)) return null_argument();
    return guarded([&] {
        const auto p = entcat::p_max(exact_from(x, nx), exact_from(y, ny));
        return write_text(entcat::to_string(p), buf, capacity, nullptr);
    });
}

entcat_status entcat_json_literals(const char* text, char* buf, size_t capacity, size_t* needed) {
    if (text == nullptr) return null_argument();
    return guarded([&] {
        std::string joined;
        for (const auto& lit : entcat::parse_spectrum_json_literals(text)) {
            if (!joined.empty()) joined += '\n';
            joined += lit;
        }
        return write_text(joined, buf, capacity, needed);
    });
}

entcat_status entcat_gate_lemma1(const entcat_spectrum* catalyst, int* prune) {
    if (any_null(catalyst, prune)) return null_argument();
    *prune = entcat::gate_lemma1(catalyst->value) ? 1 : 0;
    return ENTCAT_OK;
}

entcat_status entcat_gate_lemma3(const entcat_spectrum* x, const entcat_spectrum* y, int* possible) {
    if (any_null(x, y, possible)) return null_argument();
    *possible = entcat::gate_lemma3(x->value, y->value) ? 1 : 0;
    return ENTCAT_OK;
}

entcat_status entcat_gate_incomparable_3x3(const entcat_spectrum* x, const entcat_spectrum* y,
                                           int* impossible) {
    if (any_null(x, y, impossible)) return null_argument();
    return guarded([&] {
        *impossible = entcat::gate_incomparable_3x3(x->value, y->value) ? 1 : 0;
        return ENTCAT_OK;
    });
}

entcat_status entcat_gate_lemma4(const entcat_spectrum* x, const entcat_spectrum* y, int* no_boost) {
    if (any_null(x, y, no_boost)) return null_argument();
    return guarded([&] {
        *no_boost = entcat::gate_lemma4(x->value, y->value) ? 1 : 0;
        return ENTCAT_OK;
    });
}

entcat_status entcat_check_interconvertible(const entcat_spectrum* x, const entcat_spectrum* y,
                                            int* result) {
    if (any_null(x, y, result)) return null_argument();
    *result = entcat::check_interconvertible_elqcc(x->value, y->value) ? 1 : 0;
    return ENTCAT_OK;
}

void entcat_search_options_default(entcat_search_options* opts) {
    if (opts == nullptr) return;
    const entcat::SearchOptions d;
    *opts = entcat_search_options{d.dim, d.grid_step, 0, 1, 0, 0};
}

entcat_status entcat_find_deterministic_catalyst(const entcat_spectrum* x, const entcat_spectrum* y,
                                                const entcat_search_options* opts,
                                                entcat_search_result** out) {
    if (any_null(x, y, opts, out)) return null_argument();
    return guarded([&] {
        *out = new entcat_search_result{
            entcat::find_deterministic_catalyst(x->value, y->value, to_cpp(opts))};
        return ENTCAT_OK;
    });
}

entcat_status entcat_find_boost_catalyst(const entcat_spectrum* x, const entcat_spectrum* y,
                                        const entcat_search_options* opts,
                                        entcat_search_result** out) {
    if (any_null(x, y, opts, out)) return null_argument();
    return guarded([&] {
        *out = new entcat_search_result{entcat::find_boost_catalyst(x->value, y->value, to_cpp(opts))};
        return ENTCAT_OK;
    });
}

void entcat_search_result_destroy(entcat_search_result* r) { delete r; }

int entcat_search_found(const entcat_search_result* r) { return r && r->value.found ? 1 : 0; }
int entcat_search_pruned(const entcat_search_result* r) { return r && r->value.pruned ? 1 : 0; }
double entcat_search_achieved(const entcat_search_result* r) {
    return r ? r->value.achieved_probability : 0.0;
}
double entcat_search_baseline(const entcat_search_result* r) {
    return r ? r->value.baseline_probability : 0.0;
}
size_t entcat_search_evaluations(const entcat_search_result* r) { return r ? r->value.evaluations : 0; }
double entcat_search_effective_step(const entcat_search_result* r) {
    return r ? r->value.effective_step : 0.0;
}

entcat_status entcat_search_catalyst(const entcat_search_result* r, entcat_spectrum** out) {
    if (any_null(r, out)) return null_argument();
    if (!r->value.catalyst) return fail(ENTCAT_ERR_INAPPLICABLE, "search produced no catalyst");
    return guarded([&] { return emit_spectrum(*r->value.catalyst, out); });
}

size_t entcat_search_gate_count(const entcat_search_result* r) {
    return r ? r->value.gate_report.size() : 0;
}

const char* entcat_search_gate(const entcat_search_result* r, size_t i) {
    if (r == nullptr || i >= r->value.gate_report.size()) return nullptr;
    return r->value.gate_report[i].c_str();
}

size_t entcat_search_feasible_count(const entcat_search_result* r) {
    return r ? r->value.feasible.size() : 0;
}

entcat_status entcat_search_feasible(const entcat_search_result* r, size_t i, entcat_spectrum** out) {
    if (any_null(r, out)) return null_argument();
    if (i >= r->value.feasible.size()) return fail(ENTCAT_ERR_OUT_OF_RANGE, "feasible index out of range");
    return guarded([&] { return emit_spectrum(r->value.feasible[i], out); });
}

entcat_status entcat_lp_solve(size_t n, size_t rows, const double* objective, const double* matrix,
                              const double* bounds, entcat_lp_status* status, double* value,
                              double* solution) {
    if (any_null(objective, status, value, solution) || (rows > 0 && any_null(matrix, bounds))) {
        return null_argument();
    }
    return guarded([&] {
        entcat::LinearProgram lp;
        lp.objective.assign(objective, objective + n);
        for (std::size_t i = 0; i < rows; ++i) {
            lp.constraint_matrix.emplace_back(matrix + i * n, matrix + (i + 1) * n);
            lp.constraint_bounds.push_back(bounds[i]);
        }
        const auto s = entcat::solve(lp);
        *status = s.status == entcat::LpStatus::Optimal ? ENTCAT_LP_OPTIMAL : ENTCAT_LP_INFEASIBLE;
        *value = s.optimal_value;
        for (std::size_t j = 0; j < n; ++j) solution[j] = j < s.solution.size() ? s.solution[j] : 0.0;
        return ENTCAT_OK;
    });
}

entcat_status entcat_optimal_uncatalysed(const entcat_spectrum* x, entcat_ecp** out) {
    if (any_null(x, out)) return null_argument();
    return guarded([&] {
        *out = new entcat_ecp{entcat::optimal_uncatalysed(x->value)};
        return ENTCAT_OK;
    });
}

entcat_status entcat_optimal_catalysed(const entcat_spectrum* x, const entcat_spectrum* catalyst,
                                       entcat_ecp** out) {
    if (any_null(x, catalyst, out)) return null_argument();
    return guarded([&] {
        *out = new entcat_ecp{entcat::optimal_catalysed(x->value, catalyst->value)};
        return ENTCAT_OK;
    });
}

void entcat_ecp_destroy(entcat_ecp* d) { delete d; }
size_t entcat_ecp_size(const entcat_ecp* d) { return d ? d->value.probabilities.size() : 0; }

entcat_status entcat_ecp_probabilities(const entcat_ecp* d, double* out, size_t capacity) {
    if (d == nullptr || (out == nullptr && capacity > 0)) return null_argument();
    return copy_out(d->value.probabilities, out, capacity);
}

double entcat_ecp_nats(const entcat_ecp* d) { return d ? d->value.expected_entanglement_nats : 0.0; }
double entcat_ecp_ebits(const entcat_ecp* d) { return d ? d->value.expected_entanglement_ebits : 0.0; }

entcat_status entcat_concentration_bounds(const entcat_spectrum* x, entcat_bounds* out) {
    if (any_null(x, out)) return null_argument();
    return guarded([&] {
        const auto b = entcat::bounds(x->value);
        *out = entcat_bounds{b.bound_b_nats, b.entropy_nats,
                             b.binding == entcat::BindingBound::B ? ENTCAT_BINDING_B
                                                                  : ENTCAT_BINDING_ENTROPY};
        return ENTCAT_OK;
    });
}

entcat_status entcat_landscape_compute(const entcat_spectrum* x, size_t steps, int parallel,
                                       entcat_landscape** out) {
    if (any_null(x, out)) return null_argument();
    return guarded([&] {
        *out = new entcat_landscape{entcat::landscape(x->value, steps, parallel != 0)};
        return ENTCAT_OK;
    });
}

void entcat_landscape_destroy(entcat_landscape* l) { delete l; }
size_t entcat_landscape_size(const entcat_landscape* l) { return l ? l->rows.size() : 0; }

entcat_status entcat_landscape_row_at(const entcat_landscape* l, size_t i, entcat_landscape_row* out) {
    if (any_null(l, out)) return null_argument();
    if (i >= l->rows.size()) return fail(ENTCAT_ERR_OUT_OF_RANGE, "landscape row out of range");
    const auto& r = l->rows[i];
    *out = entcat_landscape_row{r.beta1, r.beta2, r.nats, r.ebits};
    return ENTCAT_OK;
}

entcat_status entcat_landscape_csv(const entcat_landscape* l, char* buf, size_t capacity,
                                   size_t* needed) {
    if (l == nullptr) return null_argument();
    return guarded([&] { return write_text(entcat::landscape_csv(l->rows), buf, capacity, needed); });
}

}  // extern "C"

#include "entcat/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace entcat {

namespace {

using nlohmann::json;

[[noreturn]] void bad_format(const std::string& why) {
    throw Error(ErrorCode::ParseError, "spectrum file: " + why);
}

const json& coefficient_array(const json& doc) {
    if (doc.is_array()) return doc;
    if (doc.is_object()) {
        auto it = doc.find("coefficients");
        if (it == doc.end()) bad_format("object has no \"coefficients\" member");
        if (!it->is_array()) bad_format("\"coefficients\" is not an array");
        return *it;
    }
    bad_format("expected an array or an object");
}

// SAX handler recording the literal text of every number in the
// coefficient array, so decimals reach the exact mode unrounded.
class LiteralCollector : public nlohmann::json_sax<json> {
public:
    std::vector<std::string> literals;
    bool saw_coefficients_key = false;

    bool null() override { return fail("null"); }
    bool boolean(bool) override { return fail("boolean"); }
    bool number_integer(number_integer_t v) override { return add(std::to_string(v)); }
    bool number_unsigned(number_unsigned_t v) override { return add(std::to_string(v)); }
    bool number_float(number_float_t, const string_t& s) override { return add(s); }
    bool string(string_t&) override { return fail("string"); }
    bool binary(binary_t&) override { return fail("binary"); }
    bool start_object(std::size_t) override {
        if (depth_ != 0) return fail("nested object");
        ++depth_;
        return true;
    }
    bool key(string_t& k) override {
        if (k != "coefficients") return fail("unexpected key \"" + k + "\"");
        saw_coefficients_key = true;
        return true;
    }
    bool end_object() override {
        --depth_;
        return true;
    }
    bool start_array(std::size_t) override {
        if (array_open_) return fail("nested array");
        array_open_ = true;
        ++depth_;
        return true;
    }
    bool end_array() override {
        --depth_;
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
        error = ex.what();
        return false;
    }

    std::string error;

private:
    bool add(std::string s) {
        if (!array_open_) return fail("number outside the coefficient array");
        literals.push_back(std::move(s));
        return true;
    }
    bool fail(const std::string& what) {
        error = "unexpected " + what;
        return false;
    }

    int depth_ = 0;
    bool array_open_ = false;
};

}  // namespace

Spectrum parse_spectrum_json(std::string_view text, bool normalize) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        bad_format(e.what());
    }
    const json& arr = coefficient_array(doc);
    std::vector<double> values;
    values.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number()) bad_format("coefficient is not a number");
        values.push_back(v.get<double>());
    }
    return make_spectrum(values, normalize);
}

std::vector<std::string> parse_spectrum_json_literals(std::string_view text) {
    LiteralCollector sax;
    const bool ok = json::sax_parse(text.begin(), text.end(), &sax);
    if (!ok) bad_format(sax.error.empty() ? "malformed JSON" : sax.error);
    return sax.literals;
}

std::string spectrum_to_json(const Spectrum& s) {
    json doc;
    doc["coefficients"] = json::array();
    for (double v : s.coefficients()) doc["coefficients"].push_back(round_g9(v));
    return doc.dump();
}

std::string format_g9(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

double round_g9(double value) { return std::strtod(format_g9(value).c_str(), nullptr); }

std::string landscape_csv(const std::vector<LandscapeRow>& rows) {
    std::ostringstream out;
    out << "beta1,beta2,E_nats,E_ebits\n";
    for (const auto& r : rows) {
        out << format_g9(r.beta1) << ',' << format_g9(r.beta2) << ',' << format_g9(r.nats) << ','
            << format_g9(r.ebits) << '\n';
    }
    return out.str();
}

}  // namespace entcat

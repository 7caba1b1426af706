#include "serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace tqc::cli {

json rational_json(const BigRational& q) { return to_string(q); }

BigRational rational_from_json(const json& j)
{
    if (!j.is_string())
        throw std::invalid_argument("expected a rational string");
    return parse_rational(j.get<std::string>());
}

json laurent_json(const LaurentPoly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.graded_terms())
        terms.push_back({{"exp", e}, {"coeff", to_string(c)}});
    return {{"arity", p.arity()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const json& j)
{
    const int arity = j.at("arity").get<int>();
    std::vector<std::pair<std::vector<int>, BigRational>> terms;
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exp").get<std::vector<int>>();
        if (static_cast<int>(e.size()) != arity)
            throw std::invalid_argument("exponent length does not match arity");
        terms.emplace_back(std::move(e), rational_from_json(t.at("coeff")));
    }
    return from_terms(arity, terms);
}

json upoly_json(const UPoly& p)
{
    json out = json::array();
    for (const auto& c : p.coeffs())
        out.push_back(to_string(c));
    return out;
}

UPoly upoly_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected a coefficient array");
    std::vector<BigRational> c;
    for (const auto& x : j)
        c.push_back(x.is_number_integer() ? BigRational(x.get<long>()) : rational_from_json(x));
    return UPoly(std::move(c));
}

json rational_function_json(const RationalFunction& f)
{
    return {{"num", upoly_json(f.num())}, {"den", upoly_json(f.den())}};
}

RationalFunction rational_function_from_json(const json& j)
{
    if (j.is_string() || j.is_number_integer())
        return RationalFunction(j.is_string() ? rational_from_json(j) : BigRational(j.get<long>()));
    UPoly num = upoly_from_json(j.at("num"));
    UPoly den = j.contains("den") ? upoly_from_json(j.at("den")) : UPoly(1);
    if (den.is_zero())
        throw std::invalid_argument("zero denominator");
    return RationalFunction(num, den);
}

json int_list(const std::vector<int>& v) { return json(v); }

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void flatten(const json& j, const std::string& path, std::ostringstream& os)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array()) {
        if (j.empty())
            os << csv_field(path) << ",\n";
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << csv_field(path) << "," << csv_field(j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace

std::string to_csv(const json& doc)
{
    std::ostringstream os;
    os << "path,value\n";
    flatten(doc, "", os);
    return os.str();
}

std::string emit(const json& doc, Format fmt)
{
    if (fmt == Format::csv)
        return to_csv(doc);
    return doc.dump(2) + "\n";
}

} // namespace tqc::cli

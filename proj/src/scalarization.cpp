#include <moead/scalarization.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include <moead/core_types.hpp>
#include <moead/errors.hpp>

namespace moead
{

namespace
{

void check_exponent(double p)
{
    if (std::isnan(p) || p < 1.0) {
        throw parameter_error("scalarization exponent must satisfy p >= 1, got " + std::to_string(p));
    }
}

void check_dims(std::span<const double> f, std::span<const double> w, std::span<const double> z,
                const char *what)
{
    check_same_dimension(f.size(), w.size(), what);
    check_same_dimension(f.size(), z.size(), what);
}

void check_positive(std::span<const double> w, const char *what)
{
    for (double wi : w) {
        if (!(wi > 0.0)) {
            throw domain_error(std::string(what) + ": weight entries must be strictly positive (clamp first)");
        }
    }
}

double lp_unchecked(std::span<const double> f, std::span<const double> w, std::span<const double> z, double p)
{
    const std::size_t m = f.size();
    if (p == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            s += w[i] * std::fabs(f[i] - z[i]);
        }
        return s;
    }
    double top = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        top = std::max(top, w[i] * std::fabs(f[i] - z[i]));
    }
    if (top == 0.0 || !std::isfinite(top)) {
        return top;
    }
    double s = 0.0;
    if (p == 2.0) {
        for (std::size_t i = 0; i < m; ++i) {
            const double r = w[i] * std::fabs(f[i] - z[i]) / top;
            s += r * r;
        }
        return top * std::sqrt(s);
    }
    for (std::size_t i = 0; i < m; ++i) {
        s += std::pow(w[i] * std::fabs(f[i] - z[i]) / top, p);
    }
    return top * std::pow(s, 1.0 / p);
}

double tch_unchecked(std::span<const double> f, std::span<const double> w, std::span<const double> z)
{
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.size(); ++i) {
        best = std::max(best, w[i] * (f[i] - z[i]));
    }
    return best;
}

} // namespace

weight_vector clamp_weight(std::span<const double> w)
{
    weight_vector out(w.begin(), w.end());
    for (double &wi : out) {
        if (!(wi >= weight_floor)) {
            wi = weight_floor;
        }
    }
    const double total = std::accumulate(out.begin(), out.end(), 0.0);
    for (double &wi : out) {
        wi /= total;
    }
    return out;
}

double scalarize_lp(std::span<const double> f, std::span<const double> w, std::span<const double> z, double p)
{
    check_exponent(p);
    if (std::isinf(p)) {
        throw parameter_error("scalarize_lp takes a finite exponent; use scalarize_tch for p = inf");
    }
    check_dims(f, w, z, "scalarize_lp");
    return lp_unchecked(f, w, z, p);
}

double scalarize_tch(std::span<const double> f, std::span<const double> w, std::span<const double> z)
{
    check_dims(f, w, z, "scalarize_tch");
    return tch_unchecked(f, w, z);
}

double h_weight(std::span<const double> w)
{
    if (w.empty()) {
        throw dimension_error("h_weight: empty weight vector");
    }
    check_positive(w, "h_weight");
    double log_sum = 0.0;
    for (double wi : w) {
        log_sum += std::log(wi);
    }
    return std::exp(-log_sum / static_cast<double>(w.size()));
}

double scalarize_glp(std::span<const double> f, std::span<const double> w, std::span<const double> z, double p)
{
    check_exponent(p);
    check_dims(f, w, z, "scalarize_glp");
    const double h = h_weight(w);
    return (std::isinf(p) ? tch_unchecked(f, w, z) : lp_unchecked(f, w, z, p)) * h;
}

std::vector<double> direction_vector(std::span<const double> w)
{
    check_positive(w, "direction_vector");
    std::vector<double> lambda(w.size());
    std::transform(w.begin(), w.end(), lambda.begin(), [](double wi) { return 1.0 / wi; });
    return lambda;
}

scalarizer::scalarizer(scalarizer_family fam, double exponent) : family(fam), p(exponent)
{
    check_exponent(p);
}

double scalarizer::operator()(std::span<const double> f, std::span<const double> w, std::span<const double> z,
                              double h) const
{
    const double base = std::isinf(p) ? tch_unchecked(f, w, z) : lp_unchecked(f, w, z, p);
    return family == scalarizer_family::glp ? base * h : base;
}

std::string scalarizer::name() const
{
    return (family == scalarizer_family::glp ? "GL" : "L") + format_exponent(p);
}

double parse_exponent(const std::string &token)
{
    std::string t;
    for (char c : token) {
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (t == "inf" || t == "infinity" || t == "tch") {
        return infinite_p;
    }
    std::size_t used = 0;
    double p = 0.0;
    try {
        p = std::stod(t, &used);
    } catch (const std::exception &) {
        throw parameter_error("cannot parse exponent '" + token + "'");
    }
    if (used != t.size()) {
        throw parameter_error("cannot parse exponent '" + token + "'");
    }
    check_exponent(p);
    return p;
}

std::string format_exponent(double p)
{
    if (std::isinf(p)) {
        return "inf";
    }
    std::string s = std::to_string(p);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') {
        s.pop_back();
    }
    return s;
}

scalarizer_family parse_family(const std::string &token)
{
    std::string t;
    for (char c : token) {
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (t == "lp") {
        return scalarizer_family::lp;
    }
    if (t == "glp") {
        return scalarizer_family::glp;
    }
    throw config_error("unknown scalarizer family '" + token + "' (expected lp or glp)");
}

std::string to_string(scalarizer_family family)
{
    return family == scalarizer_family::glp ? "glp" : "lp";
}

} // namespace moead

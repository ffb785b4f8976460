#ifndef IWA_SERIALIZE_HPP
#define IWA_SERIALIZE_HPP

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "iwa/action_spec.hpp"
#include "iwa/errors.hpp"
#include "iwa/iw_elem.hpp"

namespace iwa {

// Text formats.  Header line:
//     iwa v1 p=<p> N=<N> D=<D> sig=<+/- string>
// Element line: space-joined terms "<coeff>*[e1,...,ed]" in ascending
// exponent order, coefficients printed as balanced representatives; the
// zero element prints as an empty line.  Matrix files add "matrix r=<r>"
// and r^2 lines "entry <i> <j> : <element>" (1-indexed, row-major).

inline std::string print_header(const ActionSpec& spec) {
    std::ostringstream os;
    os << "iwa v1 p=" << spec.p << " N=" << spec.N << " D=" << spec.D
       << " sig=" << spec.signature_string();
    return os.str();
}

namespace detail {

inline std::uint64_t parse_uint_field(const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0)
        throw parse_error("header: expected field " + key + "=..., got '" + tok + "'");
    const std::string v = tok.substr(key.size() + 1);
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("header: field " + key + " is not a number");
    return std::stoull(v);
}

} // namespace detail

inline ActionSpec parse_header(const std::string& line) {
    std::istringstream is(line);
    std::string magic, version, ptok, ntok, dtok, stok;
    is >> magic >> version >> ptok >> ntok >> dtok >> stok;
    if (magic != "iwa" || version != "v1")
        throw parse_error("header: expected 'iwa v1'");
    std::string extra;
    if (is >> extra)
        throw parse_error("header: trailing token '" + extra + "'");
    if (stok.rfind("sig=", 0) != 0)
        throw parse_error("header: expected field sig=...");
    try {
        return ActionSpec(detail::parse_uint_field(ptok, "p"),
                          static_cast<std::uint32_t>(detail::parse_uint_field(ntok, "N")),
                          static_cast<std::uint32_t>(detail::parse_uint_field(dtok, "D")),
                          stok.substr(4));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("header: ") + e.what());
    }
}

inline std::string print_elem(const IwElem& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        if (!first) os << ' ';
        first = false;
        os << PAdic(a.spec().p, a.spec().N, static_cast<std::int64_t>(c)).balanced() << "*[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ',';
            os << e[i];
        }
        os << ']';
    }
    return os.str();
}

inline IwElem parse_elem(const ActionSpec& spec, const std::string& line) {
    IwElem out(spec);
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        const std::size_t star = tok.find('*');
        if (star == std::string::npos || star + 1 >= tok.size())
            throw parse_error("element: term '" + tok + "' is not <coeff>*[...]");
        const std::string ctext = tok.substr(0, star);
        const std::string etext = tok.substr(star + 1);
        std::int64_t c;
        try {
            std::size_t used = 0;
            c = std::stoll(ctext, &used);
            if (used != ctext.size()) throw std::invalid_argument(ctext);
        } catch (const std::exception&) {
            throw parse_error("element: bad coefficient '" + ctext + "'");
        }
        if (etext.front() != '[' || etext.back() != ']')
            throw parse_error("element: bad exponent list '" + etext + "'");
        IwElem::Expo e;
        std::istringstream es(etext.substr(1, etext.size() - 2));
        std::string part;
        while (std::getline(es, part, ',')) {
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("element: bad exponent '" + part + "'");
            e.push_back(static_cast<std::uint32_t>(std::stoul(part)));
        }
        if (e.size() != spec.dims())
            throw parse_error("element: exponent arity != number of variables");
        if (IwElem::total(e) > spec.D)
            throw parse_error("element: total degree exceeds the cap D");
        out.add_term(e, c);
    }
    return out;
}

/** Reads "header line, then one element per line" (blank line = zero). */
inline std::pair<ActionSpec, std::vector<IwElem>> read_elements(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw parse_error("element file: missing header");
    ActionSpec spec = parse_header(line);
    std::vector<IwElem> elems;
    while (std::getline(in, line))
        elems.push_back(parse_elem(spec, line));
    return {std::move(spec), std::move(elems)};
}

} // namespace iwa

#endif

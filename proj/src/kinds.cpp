#include "secdom/kinds.hpp"

#include <cctype>
#include <string>

namespace secdom {

const char* param_key(ParamKind k) {
    switch (k) {
        case ParamKind::GammaPlus: return "gamma_plus";
        case ParamKind::GammaMinus: return "gamma_minus";
        case ParamKind::GammaS: return "gamma_s";
        case ParamKind::GammaTwin: return "gamma_twin";
        case ParamKind::GammaSo: return "gamma_so";
        case ParamKind::GammaOs: return "gamma_os";
        case ParamKind::GammaOso: return "gamma_oso";
        case ParamKind::GammaIso: return "gamma_iso";
    }
    return "?";
}

const char* param_symbol(ParamKind k) {
    switch (k) {
        case ParamKind::GammaPlus: return "gamma+";
        case ParamKind::GammaMinus: return "gamma-";
        case ParamKind::GammaS: return "gamma_s";
        case ParamKind::GammaTwin: return "gamma*";
        case ParamKind::GammaSo: return "gamma_so";
        case ParamKind::GammaOs: return "gamma_os";
        case ParamKind::GammaOso: return "gamma_oso";
        case ParamKind::GammaIso: return "gamma_iso";
    }
    return "?";
}

std::optional<ParamKind> param_from_string(std::string_view s) {
    std::string raw;
    for (char c : s) raw.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (raw == "gamma+" || raw == "+") return ParamKind::GammaPlus;
    if (raw == "gamma-" || raw == "-") return ParamKind::GammaMinus;
    if (raw == "gamma*" || raw == "*") return ParamKind::GammaTwin;
    std::string t;
    for (char c : raw)
        if (c != '_' && c != '-') t.push_back(c);
    if (t == "plus" || t == "gammaplus") return ParamKind::GammaPlus;
    if (t == "minus" || t == "gammaminus") return ParamKind::GammaMinus;
    if (t == "s" || t == "gammas") return ParamKind::GammaS;
    if (t == "twin" || t == "star" || t == "gammatwin") return ParamKind::GammaTwin;
    if (t == "so" || t == "gammaso") return ParamKind::GammaSo;
    if (t == "os" || t == "gammaos") return ParamKind::GammaOs;
    if (t == "oso" || t == "gammaoso") return ParamKind::GammaOso;
    if (t == "iso" || t == "gammaiso") return ParamKind::GammaIso;
    return std::nullopt;
}

const char* set_kind_key(SetKind k) {
    switch (k) {
        case SetKind::OutDominating: return "out-dominating";
        case SetKind::InDominating: return "in-dominating";
        case SetKind::UnderlyingDominating: return "dominating";
        case SetKind::TwinDominating: return "twin-dominating";
        case SetKind::Sds: return "sds";
        case SetKind::Sods: return "sods";
        case SetKind::Osds: return "osds";
        case SetKind::Osods: return "osods";
        case SetKind::Isods: return "isods";
    }
    return "?";
}

std::optional<SetKind> set_kind_from_string(std::string_view s) {
    std::string t;
    for (char c : s)
        if (c != '_' && c != '-') t.push_back(static_cast<char>(std::tolower(c)));
    if (t == "outdominating" || t == "outdom" || t == "out") return SetKind::OutDominating;
    if (t == "indominating" || t == "indom" || t == "in") return SetKind::InDominating;
    if (t == "dominating" || t == "underlying" || t == "underlyingdominating")
        return SetKind::UnderlyingDominating;
    if (t == "twindominating" || t == "twin") return SetKind::TwinDominating;
    if (t == "sds") return SetKind::Sds;
    if (t == "sods") return SetKind::Sods;
    if (t == "osds") return SetKind::Osds;
    if (t == "osods") return SetKind::Osods;
    if (t == "isods") return SetKind::Isods;
    return std::nullopt;
}

}  // namespace secdom

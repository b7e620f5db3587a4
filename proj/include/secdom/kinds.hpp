#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace secdom {

// The eight computable parameters.
enum class ParamKind {
    GammaPlus,   // minimum out-dominating set
    GammaMinus,  // minimum in-dominating set
    GammaS,      // secure domination of the underlying graph
    GammaTwin,   // minimum twin dominating set
    GammaSo,     // secure out-dominating (defender on either side, swap out-dominates)
    GammaOs,     // out-secure dominating (in-defender, swap dominates underlying)
    GammaOso,    // out-secure out-dominating (in-defender, swap out-dominates)
    GammaIso,    // in-secure out-dominating (out-defender, swap out-dominates)
};

inline constexpr std::array<ParamKind, 8> all_param_kinds{
    ParamKind::GammaPlus, ParamKind::GammaMinus, ParamKind::GammaS,  ParamKind::GammaTwin,
    ParamKind::GammaSo,   ParamKind::GammaOs,    ParamKind::GammaOso, ParamKind::GammaIso,
};

enum class SetKind {
    OutDominating,
    InDominating,
    UnderlyingDominating,
    TwinDominating,
    Sds,    // secure dominating in the underlying graph
    Sods,
    Osds,
    Osods,
    Isods,
};

const char* param_key(ParamKind k);      // "gamma_plus", ...
const char* param_symbol(ParamKind k);   // "gamma+", "gamma_oso", ... (human form)
std::optional<ParamKind> param_from_string(std::string_view s);

const char* set_kind_key(SetKind k);     // "out-dominating", "osods", ...
std::optional<SetKind> set_kind_from_string(std::string_view s);

inline bool is_secure_kind(SetKind k) {
    return k == SetKind::Sds || k == SetKind::Sods || k == SetKind::Osds ||
           k == SetKind::Osods || k == SetKind::Isods;
}

// Set family whose minimum each parameter asks for.
inline SetKind set_kind_for_param(ParamKind p) {
    switch (p) {
        case ParamKind::GammaPlus: return SetKind::OutDominating;
        case ParamKind::GammaMinus: return SetKind::InDominating;
        case ParamKind::GammaS: return SetKind::Sds;
        case ParamKind::GammaTwin: return SetKind::TwinDominating;
        case ParamKind::GammaSo: return SetKind::Sods;
        case ParamKind::GammaOs: return SetKind::Osds;
        case ParamKind::GammaOso: return SetKind::Osods;
        case ParamKind::GammaIso: return SetKind::Isods;
    }
    return SetKind::OutDominating;
}

// Plain domination condition underneath a secure kind (the swap must
// re-establish the same condition).
inline SetKind base_of(SetKind k) {
    switch (k) {
        case SetKind::Sds:
        case SetKind::Osds: return SetKind::UnderlyingDominating;
        case SetKind::Sods:
        case SetKind::Osods:
        case SetKind::Isods: return SetKind::OutDominating;
        default: return k;
    }
}

}  // namespace secdom

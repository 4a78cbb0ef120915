#include "nht/params.hpp"

#include <array>

namespace nht {

namespace {
constexpr std::array<const char*, 12> kNames = {
    "alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6",
    "kappa1", "kappa2", "kappa3", "kappa4", "kappa5", "kappa6",
};
}

std::string param_name(Param p) { return kNames[static_cast<int>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
    for (int i = 0; i < static_cast<int>(kNames.size()); ++i)
        if (name == kNames[i]) return static_cast<Param>(i);
    return std::nullopt;
}

ParamPoly ParamPoly::substitute(const std::map<Param, GaussianRational>& values) const {
    ParamPoly r;
    for (auto& [m, c] : terms_) {
        GaussianRational coeff = c;
        ParamMonomial rest;
        for (auto& [p, e] : m.exps) {
            auto it = values.find(p);
            if (it == values.end()) {
                rest.exps[p] = e;
            } else {
                for (int n = 0; n < e; ++n) coeff *= it->second;
            }
        }
        r.add_term(rest, coeff);
    }
    return r;
}

ParamPoly ParamPoly::rename(Param from, Param to, const Rational& scale) const {
    ParamPoly r;
    for (auto& [m, c] : terms_) {
        GaussianRational coeff = c;
        ParamMonomial mono = m;
        auto it = mono.exps.find(from);
        if (it != mono.exps.end()) {
            int e = it->second;
            mono.exps.erase(it);
            for (int n = 0; n < e; ++n) coeff *= GaussianRational(scale);
            if (e != 0) mono.exps[to] += e;
            if (mono.exps[to] == 0) mono.exps.erase(to);
        }
        r.add_term(mono, coeff);
    }
    return r;
}

}  // namespace nht

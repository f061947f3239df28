#include "discflow/serialize.hpp"

#include <cstdint>
#include <cstdio>

#include "discflow/errors.hpp"

namespace discflow {

using nlohmann::json;

json to_json(const Hamiltonian& H) {
    json j;
    switch (H.kind()) {
        case HamiltonianKind::RotationFamily:
            j["kind"] = "rotation_family";
            j["rho"] = H.rotation_rho();
            break;
        case HamiltonianKind::RadialPoly:
            j["kind"] = "radial_poly";
            j["coeffs"] = H.poly_coeffs();
            break;
        case HamiltonianKind::RadialStaircase:
            j["kind"] = "radial_staircase";
            j["lambda"] = H.staircase_lambda();
            j["eps"] = H.staircase_eps();
            j["bump_height"] = H.staircase_bump_height();
            if (H.staircase_twist() != 0) j["twist"] = H.staircase_twist();
            break;
        case HamiltonianKind::PerturbedRadial: {
            j["kind"] = "perturbed_radial";
            j["base"] = {{"kind", "radial_poly"}, {"coeffs", H.perturbed_base_coeffs()}};
            json terms = json::array();
            for (const auto& t : H.perturbed_terms()) {
                terms.push_back({{"amplitude", t.amplitude},
                                 {"time_harmonic", t.time_harmonic},
                                 {"angular_harmonic", t.angular_harmonic},
                                 {"phase", t.phase}});
            }
            j["terms"] = terms;
            break;
        }
        case HamiltonianKind::Mollified:
            j["kind"] = "mollified";
            j["base"] = to_json(H.mollified_base());
            j["n"] = H.mollified_n();
            j["refined"] = H.mollified_refined();
            break;
    }
    return j;
}

Hamiltonian hamiltonian_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw SerializationError("hamiltonian: expected an object with a 'kind' field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "rotation_family") {
            return Hamiltonian::rotation(j.at("rho").get<double>());
        }
        if (kind == "radial_poly") {
            return Hamiltonian::radial_poly(j.at("coeffs").get<std::vector<double>>());
        }
        if (kind == "radial_staircase") {
            return Hamiltonian::staircase(j.at("lambda").get<double>(),
                                          j.at("eps").get<double>(),
                                          j.at("bump_height").get<double>(),
                                          j.value("twist", 0));
        }
        if (kind == "perturbed_radial") {
            std::vector<FourierTerm> terms;
            for (const auto& t : j.at("terms")) {
                terms.push_back({t.at("amplitude").get<double>(),
                                 t.at("time_harmonic").get<int>(),
                                 t.at("angular_harmonic").get<int>(),
                                 t.value("phase", 0.0)});
            }
            return Hamiltonian::perturbed(
                j.at("base").at("coeffs").get<std::vector<double>>(), std::move(terms));
        }
        if (kind == "mollified") {
            return build_mollified(hamiltonian_from_json(j.at("base")),
                                   j.at("n").get<int>(), j.value("refined", false));
        }
    } catch (const json::exception& e) {
        throw SerializationError(std::string("hamiltonian: ") + e.what());
    }
    throw SerializationError("hamiltonian: unknown kind '" + kind + "'");
}

std::string family_hash(const Hamiltonian& H) {
    const std::string dump = to_json(H).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace discflow

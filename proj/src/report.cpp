#include <oddom/report.hpp>

namespace oddom::report {

json vertex_array(const VertexSet & s)
{
    return s.to_vector();
}

VertexSet read_vertex_array(const json & value, int universe, const char * field)
{
    if (! value.is_array())
        throw FormatError(std::string("\"") + field + "\" must be an array of vertex indices");
    Mask m = 0;
    for (const auto & item : value) {
        if (! item.is_number_integer())
            throw FormatError(std::string("\"") + field + "\" contains a non-integer entry");
        const auto v = item.get<long long>();
        if (v < 0 || v >= universe)
            throw FormatError(std::string("\"") + field + "\" has vertex " + std::to_string(v) +
                              " outside a graph of order " + std::to_string(universe));
        if ((m >> v) & 1U)
            throw FormatError(std::string("\"") + field + "\" lists vertex " + std::to_string(v) + " twice");
        m |= bit(static_cast<int>(v));
    }
    return VertexSet(universe, m);
}

json bounds_json(const Bounds & b)
{
    return json::array({b.lower, b.upper});
}

json extremal_json(const Graph & g, const ExtremalResult & r)
{
    json j;
    j["value"] = r.value;
    j["bounds"] = bounds_json(r.bounds);
    switch (r.quantity) {
    case Quantity::kappa:
        j["witness"] = vertex_array(r.witness);
        j["set"] = vertex_array(kappa_wod_set(g, r.witness));
        break;
    case Quantity::kappa_prime:
        j["witness"] = vertex_array(r.witness);
        j["set"] = vertex_array(kappa_prime_non_wod_set(g, r.witness));
        break;
    case Quantity::kappa_q:
        j["kappa"] = r.kappa;
        j["kappa_prime"] = r.kappa_prime;
        j["kappa_witness"] = vertex_array(r.witness);
        j["kappa_prime_witness"] = vertex_array(r.secondary_witness);
        break;
    }
    return j;
}

json certificate_json(const VertexSet & b, const WodCertificate & cert)
{
    return {
        {"kind", cert.kind == CertificateKind::wod ? "WOD" : "NON_WOD"},
        {"set", vertex_array(b)},
        {"witness", vertex_array(cert.witness)},
    };
}

CertificateDocument read_certificate(const json & doc, int n)
{
    if (! doc.is_object())
        throw FormatError("certificate must be a JSON object");
    for (const char * key : {"kind", "set", "witness"})
        if (! doc.contains(key))
            throw FormatError(std::string("certificate is missing \"") + key + "\"");
    const auto & kind = doc.at("kind");
    if (! kind.is_string())
        throw FormatError("\"kind\" must be a string");
    CertificateKind k;
    if (kind == "WOD")
        k = CertificateKind::wod;
    else if (kind == "NON_WOD")
        k = CertificateKind::non_wod;
    else
        throw FormatError("\"kind\" must be \"WOD\" or \"NON_WOD\", got \"" + kind.get<std::string>() + "\"");
    return {read_vertex_array(doc.at("set"), n, "set"), {k, read_vertex_array(doc.at("witness"), n, "witness")}};
}

json perfect_code_json(const std::optional<PerfectCode> & code)
{
    if (! code)
        return nullptr;
    return vertex_array(code->code);
}

json trial_json(const TrialReport & r, bool timing)
{
    json j = {
        {"trial", r.index},
        {"seed", r.seed},
        {"n", r.n},
        {"graph6", r.graph6},
        {"kappa", r.kappa},
        {"kappa_prime", r.kappa_prime},
        {"kappa_q", r.kappa_q},
        {"ratio", r.ratio},
        {"kappa_witness", vertex_array(r.kappa_witness)},
        {"kappa_prime_witness", vertex_array(r.kappa_prime_witness)},
    };
    if (timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

json summary_json(const TrialSummary & s)
{
    return {{"summary",
             {
                 {"count", s.count},
                 {"below_threshold", s.below_threshold},
                 {"threshold_ratio", s.threshold_ratio},
                 {"fraction_below", s.fraction_below},
                 {"min_ratio", s.min_ratio},
                 {"median_ratio", s.median_ratio},
                 {"max_ratio", s.max_ratio},
             }}};
}

std::string dump_line(const json & j)
{
    return j.dump();
}

} // namespace oddom::report

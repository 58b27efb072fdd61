#include "ttlab/cli/report.hpp"

#include <sstream>

#include "ttlab/codec.hpp"
#include "ttlab/construct.hpp"

namespace ttlab::cli {

namespace {

std::string decimal(const BigInt & v) { return v.str(); }

std::string rational_text(const BigRational & r)
{
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string ratio_text(const Ratio & r)
{
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json vertex_list(VertexMask m)
{
    Json out = Json::array();
    for (; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

std::string scalar_text(const Json & v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string csv_field(const std::string & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace

Json graph_result(const Digraph & g)
{
    Json r;
    r["graph"] = encode(g);
    r["n"] = g.order();
    r["f1"] = g.f1();
    r["f2"] = g.f2();
    return r;
}

Json check_result(const Digraph & g, const BlowupSpec & spec)
{
    Json r;
    r["graph"] = encode(g);
    auto levels = find_blowup(g, spec);
    r["free"] = ! levels.has_value();
    Json witness = Json::array();
    if (levels)
        for (VertexMask level : *levels)
            witness.push_back(vertex_list(level));
    r["witness_levels"] = witness;
    return r;
}

Json extremal_result(const ExtremalResult & e)
{
    int parts = e.spec.levels - 1;
    std::int64_t turan = turan_edges(e.n, parts);
    WeightedSize gap{e.best.f1, e.best.f2 - static_cast<int>(turan)};

    Json r;
    r["best_f1"] = e.best.f1;
    r["best_f2"] = e.best.f2;
    r["best"] = e.weight.format(e.best);
    r["best_approx"] = e.weight.approx(e.best);
    r["turan_value"] = e.weight.format(WeightedSize{0, static_cast<int>(turan)});
    r["gap"] = e.weight.format(gap);
    auto sign = e.weight.compare(e.best, WeightedSize{0, static_cast<int>(turan)});
    r["gap_sign"] = sign > 0 ? 1 : (sign < 0 ? -1 : 0);
    r["witness"] = encode(e.witness);
    r["witness_distance_to_dtr"] = edit_distance_to_dtr(e.witness, parts).distance;
    r["explored"] = std::to_string(e.explored);
    return r;
}

Json count_result(const BigInt & count, const std::string & what)
{
    Json r;
    r[what] = decimal(count);
    return r;
}

Json ratio_result(const CensusReport & c)
{
    Json r;
    r["free"] = decimal(c.free_count);
    r["partite"] = decimal(c.partite_count);
    r["ratio"] = rational_text(c.ratio);
    r["ratio_approx"] = static_cast<double>(c.ratio);
    r["partite_minus_free_sign"] = c.partite_count == c.free_count ? 0 : (c.partite_count > c.free_count ? 1 : -1);
    r["partite_not_free"] = decimal(c.partite_not_free);
    r["lower_bound"] = decimal(c.lower_bound);
    r["lower_bound_exponent"] = c.lower_bound_exponent;
    r["lower_bound_reading"] = "3^t_r(n) * 2^E, E = max arcs of a T_2^t-free oriented graph on floor(n/r) vertices";
    return r;
}

Json density_result(const ContainerExponent & c, bool with_shape)
{
    Json r;
    r["m"] = ratio_text(c.density.m);
    r["exponent"] = ratio_text(c.exponent);
    r["argmax_vertices"] = vertex_list(c.density.vertices);
    r["argmax"] = encode(c.density.argmax);
    if (with_shape) {
        r["bound_shape"] = c.bound_shape;
        r["bound"] = "c * n^(" + ratio_text(c.exponent) + ") * log2(n), c unknown";
    }
    return r;
}

Json edit_distance_result(const EditDistanceResult & e)
{
    Json r;
    r["graph"] = encode(e.graph);
    r["distance"] = e.distance;
    r["partition"] = e.partition.assign;
    return r;
}

std::string csv_header(const Json & record)
{
    std::string header = "command";
    for (const auto & [k, v] : record["params"].items())
        header += ",param_" + k;
    for (const auto & [k, v] : record["result"].items())
        header += "," + k;
    header += ",version,runtime_ms";
    return header;
}

std::string render(const Json & record, Format format)
{
    switch (format) {
    case Format::Json:
        return record.dump() + "\n";
    case Format::Csv: {
        std::string row = csv_field(record["command"].get<std::string>());
        for (const auto & [k, v] : record["params"].items())
            row += "," + csv_field(scalar_text(v));
        for (const auto & [k, v] : record["result"].items())
            row += "," + csv_field(scalar_text(v));
        row += "," + csv_field(record["version"].get<std::string>()) + "," + scalar_text(record["runtime_ms"]);
        return csv_header(record) + "\n" + row + "\n";
    }
    case Format::Text:
        break;
    }
    const Json & result = record["result"];
    std::string command = record["command"].get<std::string>();
    if (command.rfind("gen", 0) == 0)
        return result["graph"].get<std::string>() + "\n";
    std::ostringstream out;
    for (const auto & [k, v] : result.items())
        out << k << ": " << scalar_text(v) << "\n";
    return out.str();
}

} // namespace ttlab::cli

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <revex/io.hh>

#include <fstream>
#include <sstream>

using namespace revex;

namespace
{
    auto require(bool condition, const std::string & message) -> void
    {
        if (! condition)
            throw FormatError(message);
    }

    auto get_int(const Json & j, const std::string & what) -> int
    {
        require(j.is_number_integer(), what + " must be an integer");
        return j.get<int>();
    }

    auto get_formula(const Json & j, const std::string & what) -> Formula
    {
        require(j.is_string(), what + " must be a string");
        try {
            return parse_formula(j.get<std::string>());
        }
        catch (const SyntaxError & e) {
            throw FormatError(what + ": " + e.what());
        }
    }
}

auto revex::structure_to_json(const Structure & s) -> Json
{
    Json relations = Json::array();
    for (int k = 0 ; k < s.signature().size() ; ++k) {
        Json tuples = Json::array();
        for (auto & t : s.tuples(k))
            tuples.push_back(t);
        relations.push_back(std::move(tuples));
    }
    return Json{ { "domain", s.domain() }, { "relations", std::move(relations) }, { "signature", s.signature().arities() } };
}

auto revex::structure_from_json(const Json & j, const Signature * fallback) -> Structure
{
    require(j.is_object(), "a structure must be a JSON object");

    std::vector<int> arities;
    if (j.contains("signature")) {
        require(j["signature"].is_array(), "signature must be an array of arities");
        for (auto & a : j["signature"])
            arities.push_back(get_int(a, "arity"));
    }
    else {
        require(fallback != nullptr, "structure is missing its signature");
        arities = fallback->arities();
    }

    require(j.contains("domain"), "structure is missing its domain size");
    int domain = get_int(j["domain"], "domain");

    require(j.contains("relations") && j["relations"].is_array(), "structure needs a relations array");
    std::vector<std::vector<Tuple>> relations;
    for (auto & r : j["relations"]) {
        require(r.is_array(), "each relation must be an array of tuples");
        std::vector<Tuple> tuples;
        for (auto & t : r) {
            require(t.is_array(), "each tuple must be an array of integers");
            Tuple tuple;
            for (auto & x : t)
                tuple.push_back(get_int(x, "tuple entry"));
            tuples.push_back(std::move(tuple));
        }
        relations.push_back(std::move(tuples));
    }

    try {
        return Structure::from_tuples(Signature(arities), domain, relations);
    }
    catch (const PreconditionError & e) {
        throw FormatError(e.what());
    }
    catch (const MismatchError & e) {
        throw FormatError(e.what());
    }
}

auto revex::spec_to_json(const ClassSpec & spec) -> Json
{
    Json j = Json::object();
    j["signature"] = spec.signature.arities();

    Json builtins = Json::array();
    for (auto b : spec.builtins)
        builtins.push_back(to_string(b));
    j["builtins"] = builtins;

    Json axioms = Json::array();
    for (auto & a : spec.axioms)
        axioms.push_back(to_string(a));
    j["axioms"] = axioms;

    Json forbidden = Json::array();
    for (auto & f : spec.forbidden)
        forbidden.push_back(structure_to_json(f));
    j["forbidden"] = forbidden;

    if (spec.degree_max)
        j["degree_max"] = *spec.degree_max;

    if (! spec.local_bounds.empty()) {
        Json bounds = Json::object();
        for (auto & [m, b] : spec.local_bounds) {
            Json list = Json::array();
            for (auto & lb : b)
                list.push_back(Json::array({ lb.low, lb.high }));
            bounds[std::to_string(m)] = list;
        }
        j["local_bounds"] = bounds;
    }

    if (! spec.defbounds.empty()) {
        Json list = Json::array();
        for (auto & d : spec.defbounds)
            list.push_back(Json{ { "formula", to_string(d.formula) }, { "params", d.params }, { "block", d.block }, { "n", d.n } });
        j["defbounds"] = list;
    }

    return j;
}

auto revex::spec_from_json(const Json & j) -> ClassSpec
{
    require(j.is_object(), "a class specification must be a JSON object");
    for (auto & [key, value] : j.items())
        require(key == "signature" || key == "builtins" || key == "axioms" || key == "forbidden" || key == "degree_max"
                || key == "local_bounds" || key == "defbounds", "unknown class specification key '" + key + "'");

    ClassSpec spec;
    if (j.contains("signature")) {
        require(j["signature"].is_array(), "signature must be an array of arities");
        std::vector<int> arities;
        for (auto & a : j["signature"])
            arities.push_back(get_int(a, "arity"));
        try {
            spec.signature = Signature(arities);
        }
        catch (const PreconditionError & e) {
            throw FormatError(e.what());
        }
    }
    else if (j.contains("forbidden") && j["forbidden"].is_array() && ! j["forbidden"].empty()
            && j["forbidden"][0].is_object() && j["forbidden"][0].contains("signature"))
        spec.signature = structure_from_json(j["forbidden"][0]).signature();

    if (j.contains("builtins")) {
        require(j["builtins"].is_array(), "builtins must be an array of names");
        for (auto & b : j["builtins"]) {
            require(b.is_string(), "builtin names must be strings");
            try {
                spec.builtins.push_back(builtin_from_string(b.get<std::string>()));
            }
            catch (const PreconditionError & e) {
                throw FormatError(e.what());
            }
        }
    }

    if (j.contains("axioms")) {
        require(j["axioms"].is_array(), "axioms must be an array of formulas");
        for (auto & a : j["axioms"])
            spec.axioms.push_back(get_formula(a, "axiom"));
    }

    if (j.contains("forbidden")) {
        require(j["forbidden"].is_array(), "forbidden must be an array of structures");
        for (auto & f : j["forbidden"])
            spec.forbidden.push_back(structure_from_json(f, &spec.signature));
    }

    if (j.contains("degree_max"))
        spec.degree_max = get_int(j["degree_max"], "degree_max");

    if (j.contains("local_bounds")) {
        require(j["local_bounds"].is_object(), "local_bounds must map subset sizes to [k, l] lists");
        for (auto & [key, value] : j["local_bounds"].items()) {
            int m = 0;
            try {
                std::size_t used = 0;
                m = std::stoi(key, &used);
                require(used == key.size(), "");
            }
            catch (const std::exception &) {
                throw FormatError("local_bounds key '" + key + "' is not an integer");
            }
            require(value.is_array(), "local_bounds values must be arrays of [k, l]");
            std::vector<LocalBound> bounds;
            for (auto & kl : value) {
                require(kl.is_array() && kl.size() == 2, "each local bound must be a pair [k, l]");
                bounds.push_back(LocalBound{ get_int(kl[0], "k"), get_int(kl[1], "l") });
            }
            spec.local_bounds[m] = bounds;
        }
    }

    if (j.contains("defbounds")) {
        require(j["defbounds"].is_array(), "defbounds must be an array");
        for (auto & d : j["defbounds"]) {
            require(d.is_object() && d.contains("formula") && d.contains("params") && d.contains("block") && d.contains("n"),
                    "each defbound needs formula, params, block and n");
            spec.defbounds.push_back(DefBound{ get_formula(d["formula"], "defbound formula"),
                    get_int(d["params"], "params"), get_int(d["block"], "block"), get_int(d["n"], "n") });
        }
    }

    try {
        validate(spec);
    }
    catch (const PreconditionError & e) {
        throw FormatError(e.what());
    }
    catch (const MismatchError & e) {
        throw FormatError(e.what());
    }
    return spec;
}

auto revex::canonical_text(const Json & j) -> std::string
{
    return j.dump() + "\n";
}

auto revex::read_json_file(const std::string & path) -> Json
{
    std::ifstream in(path);
    if (! in)
        throw FormatError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    }
    catch (const Json::parse_error & e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

auto revex::read_structure_file(const std::string & path) -> Structure
{
    return structure_from_json(read_json_file(path));
}

auto revex::read_spec_file(const std::string & path) -> ClassSpec
{
    return spec_from_json(read_json_file(path));
}

auto revex::write_text_file(const std::string & path, const std::string & text) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw FormatError("cannot write '" + path + "'");
    out << text;
}

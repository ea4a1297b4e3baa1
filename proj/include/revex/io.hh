/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_REVEX_IO_HH
#define REVEX_GUARD_REVEX_IO_HH 1

#include <revex/extremal.hh>
#include <revex/structure.hh>

#include <json.hpp>

#include <string>

namespace revex
{
    using Json = nlohmann::json;

    /// {"domain": n, "relations": [[tuple, ...], ...], "signature": [arity, ...]}, tuples sorted.
    auto structure_to_json(const Structure & s) -> Json;

    /// The signature may be omitted when a fallback is given.
    auto structure_from_json(const Json & j, const Signature * fallback = nullptr) -> Structure;

    auto spec_to_json(const ClassSpec & spec) -> Json;
    auto spec_from_json(const Json & j) -> ClassSpec;

    /// Compact dump with sorted keys and a trailing newline.
    auto canonical_text(const Json & j) -> std::string;

    auto read_json_file(const std::string & path) -> Json;
    auto read_structure_file(const std::string & path) -> Structure;
    auto read_spec_file(const std::string & path) -> ClassSpec;

    auto write_text_file(const std::string & path, const std::string & text) -> void;
}

#endif

#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "topochrom/host.hpp"
#include "topochrom/minors.hpp"

namespace topochrom {

// Certificate JSON:
//
//   {"host": {"family": "kneser", "params": [25, 11]},
//    "kind": "odd_topological",
//    "branching": [v, ...],
//    "paths": {"0,1": [v, ...], ...}}
//
//   {"host": {...}, "kind": "odd_minor",
//    "trees": [{"vertices": [v, ...], "edges": [[v, v], ...]}, ...],
//    "coloring": {"<v as compact JSON>": 0 | 1, ...},
//    "connectors": {"0,1": [v, v], ...}}
//
// A vertex v is a sorted integer array for implicit hosts and an integer id
// otherwise. Hosts with a base carry it as "base": {...}; inline graphs as
// "edges": [[u, v], ...]. Keys are emitted in sorted order, so dumps are
// byte-stable.
using Certificate = std::variant<OddMinorCertificate, OddTopologicalCertificate>;

nlohmann::json host_to_json(const HostSpec& host);
HostSpec host_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const OddMinorCertificate& cert);
nlohmann::json certificate_to_json(const OddTopologicalCertificate& cert);

// Throws FormatError on malformed input.
Certificate certificate_from_json(const nlohmann::json& j);

std::string dump_certificate(const Certificate& cert);
Certificate read_certificate(std::istream& in);
// "-" reads stdin.
Certificate read_certificate_file(const std::string& path);

}  // namespace topochrom

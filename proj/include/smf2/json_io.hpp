#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "smf2/cycle.hpp"
#include "smf2/qexp.hpp"
#include "smf2/serre.hpp"

namespace smf2 {

using Json = nlohmann::json;

// q-expansion document:
// {"p": int, "N": int, "weight": [k1,k2], "max_trace": int,
//  "coeffs": [{"T": [a,b,c], "v": [int,...]}, ...]}
// Serialisation is canonical: sorted object keys, T-support sorted by
// (a, b, c), compact separators. Round-trips are byte-exact.
Json qexp_to_json(const QExpansion& f);
QExpansion qexp_from_json(const Json& j);

std::string dump_canonical(const Json& j);

Json cycle_to_json(const CycleResult& r);

// Local representation descriptors:
// {"type": "borel"|"siegel"|"klingen"|"klingen2"|"endoscopic"|"irreducible",
//  "p": int, "a": int, "b": int, "c": int, "ram": {...}, ...}
// "klingen" covers both branches: the split case is recognised from
// a - b = (p+1)/2, in which case the "t" flag encodes the component maximum.
using LocalRepDescriptor =
    std::variant<BorelDescriptor, SiegelDescriptor, KlingenGenericDescriptor,
                 KlingenSplitDescriptor, EndoscopicDescriptor, IrreducibleDescriptor>;

struct Klingen2Input {
    Int c;
    RamFlag ram;
};

// klingen2 decodes to the p = 2 Klingen inputs rather than a descriptor.
using DescriptorInput = std::variant<LocalRepDescriptor, Klingen2Input>;

DescriptorInput descriptor_from_json(const Json& j);
Json descriptor_to_json(const DescriptorInput& d);

std::string ram_flag_str(RamFlag f);
RamFlag ram_flag_parse(const std::string& s);

Json serre_weight_to_json(const SerreWeight& sw);

}  // namespace smf2

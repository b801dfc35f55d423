/**
 * hyperalg -- hyperdimensional computing library
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "hyperalg/serialize.hpp"

#include <json.hpp>

#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hyperalg/report.hpp"

namespace hyperalg {

namespace {

constexpr char MAGIC[4] = {'H', 'V', 'E', 'C'};
constexpr std::uint8_t FORMAT_VERSION = 1;

std::uint8_t space_tag(SpaceKind kind) { return static_cast<std::uint8_t>(kind); }

SpaceKind space_from_tag(std::uint8_t tag) {
    if (tag > static_cast<std::uint8_t>(SpaceKind::modular))
        throw std::runtime_error("packed hypervector: unknown space tag");
    return static_cast<SpaceKind>(tag);
}

void append_parameters(std::string& out, const SpaceSpec& space) {
    out += "{";
    bool first = true;
    auto field = [&](const char* name, const std::string& value) {
        if (!first) out += ",";
        first = false;
        out += "\"";
        out += name;
        out += "\":";
        out += value;
    };
    if (space.kind == SpaceKind::sparse_binary) field("density", format_double(space.density));
    if (space.kind == SpaceKind::block_sparse)
        field("block_size", std::to_string(space.block_size));
    if (space.kind == SpaceKind::modular) field("range", std::to_string(space.range));
    out += "}";
}

bool in_domain(const Hypervector& hv) {
    switch (hv.space().kind) {
        case SpaceKind::dense_binary:
        case SpaceKind::sparse_binary:
        case SpaceKind::block_sparse:
            for (double v : hv.reals())
                if (v != 0.0 && v != 1.0) return false;
            return true;
        case SpaceKind::bipolar:
            for (double v : hv.reals())
                if (v != 1.0 && v != -1.0) return false;
            return true;
        case SpaceKind::modular:
            for (double v : hv.reals())
                if (v != std::floor(v) || v < 0.0 ||
                    v >= static_cast<double>(hv.space().range))
                    return false;
            return true;
        case SpaceKind::real:
            return true;
        case SpaceKind::phasor:
            for (const auto& c : hv.phasors())
                if (std::abs(std::abs(c) - 1.0) > 1e-9) return false;
            return true;
    }
    return false;
}

template <typename T>
void put_le(std::string& out, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
}

void put_le_f64(std::string& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    put_le(out, bits);
}

std::uint64_t get_le_u64(const std::string& in, std::size_t& off) {
    if (off + 8 > in.size()) throw std::runtime_error("packed hypervector: truncated file");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[off + i])) << (8 * i);
    off += 8;
    return v;
}

double get_le_f64(const std::string& in, std::size_t& off) {
    const std::uint64_t bits = get_le_u64(in, off);
    double v;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
}

} // namespace

std::string hv_to_json(const Hypervector& hv) {
    std::string out = "{\"space\":\"" + to_string(hv.space().kind) + "\",";
    out += "\"dimension\":" + std::to_string(hv.dim()) + ",";
    out += "\"parameters\":";
    append_parameters(out, hv.space());
    out += ",\"components\":[";
    if (hv.is_phasor()) {
        for (std::size_t i = 0; i < hv.dim(); ++i) {
            if (i) out += ",";
            out += format_double(hv.angle(i));
        }
        out += "]";
        bool unit = true;
        for (const auto& c : hv.phasors())
            if (std::abs(std::abs(c) - 1.0) > 1e-9) {
                unit = false;
                break;
            }
        if (!unit) {
            out += ",\"magnitudes\":[";
            for (std::size_t i = 0; i < hv.dim(); ++i) {
                if (i) out += ",";
                out += format_double(std::abs(hv.phasors()[i]));
            }
            out += "]";
        }
    } else {
        for (std::size_t i = 0; i < hv.dim(); ++i) {
            if (i) out += ",";
            const double v = hv.reals()[i];
            if (v == std::floor(v) && std::abs(v) < 1e15)
                out += std::to_string(static_cast<long long>(v));
            else
                out += format_double(v);
        }
        out += "]";
    }
    out += "}";
    return out;
}

namespace {

SpaceSpec space_from_json(const nlohmann::json& j) {
    SpaceSpec space;
    space.kind = space_kind_from_string(j.at("space").get<std::string>());
    space.dim = j.at("dimension").get<std::size_t>();
    const auto& params = j.at("parameters");
    if (space.kind == SpaceKind::sparse_binary) space.density = params.at("density").get<double>();
    if (space.kind == SpaceKind::block_sparse)
        space.block_size = params.at("block_size").get<std::size_t>();
    if (space.kind == SpaceKind::modular) space.range = params.at("range").get<std::uint64_t>();
    space.validate();
    return space;
}

Hypervector hv_from_json_value(const nlohmann::json& j) {
    const SpaceSpec space = space_from_json(j);
    const auto& comps = j.at("components");
    if (comps.size() != space.dim)
        throw std::runtime_error("hypervector json: component count does not match dimension");
    if (space.kind == SpaceKind::phasor) {
        std::vector<std::complex<double>> z(space.dim);
        const bool has_mag = j.contains("magnitudes");
        for (std::size_t i = 0; i < space.dim; ++i) {
            const double mag = has_mag ? j["magnitudes"].at(i).get<double>() : 1.0;
            z[i] = std::polar(mag, comps.at(i).get<double>());
        }
        return Hypervector(space, std::move(z));
    }
    std::vector<double> v(space.dim);
    for (std::size_t i = 0; i < space.dim; ++i) v[i] = comps.at(i).get<double>();
    return Hypervector(space, std::move(v));
}

} // namespace

Hypervector hv_from_json(const std::string& json_text) {
    return hv_from_json_value(nlohmann::json::parse(json_text));
}

void hv_to_packed(const Hypervector& hv, const std::filesystem::path& path) {
    if (!in_domain(hv))
        throw std::invalid_argument(
            "packed format stores canonical vectors only; this one leaves its space domain");
    std::string out;
    out.append(MAGIC, 4);
    out.push_back(static_cast<char>(FORMAT_VERSION));
    out.push_back(static_cast<char>(space_tag(hv.space().kind)));
    out.push_back('\0');
    out.push_back('\0');
    put_le(out, static_cast<std::uint64_t>(hv.dim()));
    put_le_f64(out, hv.space().density);
    const std::uint64_t aux = hv.space().kind == SpaceKind::block_sparse
                                  ? hv.space().block_size
                                  : hv.space().range;
    put_le(out, aux);

    switch (hv.space().kind) {
        case SpaceKind::dense_binary:
        case SpaceKind::sparse_binary:
        case SpaceKind::block_sparse:
        case SpaceKind::bipolar: {
            std::uint8_t byte = 0;
            int nbits = 0;
            for (std::size_t i = 0; i < hv.dim(); ++i) {
                const bool on = hv.space().kind == SpaceKind::bipolar ? hv.reals()[i] > 0.0
                                                                      : hv.reals()[i] != 0.0;
                byte |= static_cast<std::uint8_t>(on) << nbits;
                if (++nbits == 8) {
                    out.push_back(static_cast<char>(byte));
                    byte = 0;
                    nbits = 0;
                }
            }
            if (nbits > 0) out.push_back(static_cast<char>(byte));
            break;
        }
        case SpaceKind::real:
            for (double v : hv.reals()) put_le_f64(out, v);
            break;
        case SpaceKind::phasor:
            for (std::size_t i = 0; i < hv.dim(); ++i) put_le_f64(out, hv.angle(i));
            break;
        case SpaceKind::modular:
            for (double v : hv.reals()) put_le(out, static_cast<std::uint64_t>(v));
            break;
    }
    atomic_write_file(path, out);
}

Hypervector hv_from_packed(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string data = ss.str();
    if (data.size() < 32 || std::memcmp(data.data(), MAGIC, 4) != 0)
        throw std::runtime_error("packed hypervector: bad magic");
    if (static_cast<std::uint8_t>(data[4]) != FORMAT_VERSION)
        throw std::runtime_error("packed hypervector: unsupported version");
    SpaceSpec space;
    space.kind = space_from_tag(static_cast<std::uint8_t>(data[5]));
    std::size_t off = 8;
    space.dim = get_le_u64(data, off);
    space.density = get_le_f64(data, off);
    const std::uint64_t aux = get_le_u64(data, off);
    if (space.kind == SpaceKind::block_sparse) space.block_size = aux;
    if (space.kind == SpaceKind::modular) space.range = aux;
    space.validate();

    switch (space.kind) {
        case SpaceKind::dense_binary:
        case SpaceKind::sparse_binary:
        case SpaceKind::block_sparse:
        case SpaceKind::bipolar: {
            std::vector<double> v(space.dim);
            for (std::size_t i = 0; i < space.dim; ++i) {
                const std::size_t byte = off + i / 8;
                if (byte >= data.size())
                    throw std::runtime_error("packed hypervector: truncated payload");
                const bool on = (static_cast<unsigned char>(data[byte]) >> (i % 8)) & 1u;
                v[i] = space.kind == SpaceKind::bipolar ? (on ? 1.0 : -1.0)
                                                        : (on ? 1.0 : 0.0);
            }
            return Hypervector(space, std::move(v));
        }
        case SpaceKind::real: {
            std::vector<double> v(space.dim);
            for (auto& x : v) x = get_le_f64(data, off);
            return Hypervector(space, std::move(v));
        }
        case SpaceKind::phasor: {
            std::vector<std::complex<double>> z(space.dim);
            for (auto& c : z) c = std::polar(1.0, get_le_f64(data, off));
            return Hypervector(space, std::move(z));
        }
        case SpaceKind::modular: {
            std::vector<double> v(space.dim);
            for (auto& x : v) x = static_cast<double>(get_le_u64(data, off));
            return Hypervector(space, std::move(v));
        }
    }
    throw std::logic_error("unreachable space kind");
}

std::string memory_to_json(const ItemMemory& memory, bool prefer_seed_manifest) {
    std::string out = "{\"space\":\"" + to_string(memory.space().kind) + "\",";
    out += "\"dimension\":" + std::to_string(memory.space().dim) + ",";
    out += "\"parameters\":";
    append_parameters(out, memory.space());
    if (prefer_seed_manifest && memory.provenance()) {
        const auto& prov = *memory.provenance();
        out += ",\"seed\":" + std::to_string(prov.seed);
        out += ",\"label_prefix\":" + json_quote(prov.label_prefix);
        out += ",\"ids\":[";
        for (std::size_t i = 0; i < prov.ids.size(); ++i) {
            if (i) out += ",";
            out += json_quote(prov.ids[i]);
        }
        out += "]}";
        return out;
    }
    out += ",\"entries\":[";
    for (std::size_t i = 0; i < memory.size(); ++i) {
        if (i) out += ",";
        out += "{\"id\":" + json_quote(memory.id_at(i)) +
               ",\"hypervector\":" + hv_to_json(memory.at(i)) + "}";
    }
    out += "]}";
    return out;
}

ItemMemory memory_from_json(const std::string& json_text, Metric metric) {
    const auto j = nlohmann::json::parse(json_text);
    const SpaceSpec space = space_from_json(j);
    if (j.contains("seed")) {
        SeedManifest manifest;
        manifest.seed = j.at("seed").get<std::uint64_t>();
        manifest.label_prefix = j.at("label_prefix").get<std::string>();
        for (const auto& id : j.at("ids")) manifest.ids.push_back(id.get<std::string>());
        return ItemMemory::materialize(space, metric, manifest);
    }
    ItemMemory memory(space, metric);
    for (const auto& entry : j.at("entries"))
        memory.add(entry.at("id").get<std::string>(),
                   hv_from_json_value(entry.at("hypervector")));
    return memory;
}

} // namespace hyperalg

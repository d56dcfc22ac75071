#include "gtnl/vrep.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

namespace gtnl {

void VRep::sort_and_dedupe()
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

BehaviorQ VRep::behavior(const Scenario& s, std::size_t i) const
{
    if (s.entries() != dim)
        throw std::invalid_argument("vrep dimension does not match scenario");
    return BehaviorQ(s, vertices.at(i));
}

namespace {

constexpr char kMagic[6] = {'G', 'T', 'N', 'L', 'V', '1'};

void put_u32(std::ostream& os, uint32_t v)
{
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<char*>(b), 4);
}

uint32_t get_u32(std::istream& is)
{
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

// magnitude bytes, least significant first
std::vector<unsigned char> export_magnitude(const Int& z)
{
    std::vector<unsigned char> bytes;
    Int v = boost::multiprecision::abs(z);
    while (v != 0) {
        bytes.push_back(static_cast<unsigned char>(static_cast<unsigned long>(v & 0xff)));
        v >>= 8;
    }
    return bytes;
}

Int import_magnitude(const unsigned char* data, std::size_t len)
{
    Int v = 0;
    for (std::size_t i = len; i-- > 0;) {
        v <<= 8;
        v += data[i];
    }
    return v;
}

void put_length(std::ostream& os, std::size_t len)
{
    if (len < 255) {
        os.put(static_cast<char>(len));
    } else {
        os.put(static_cast<char>(255));
        put_u32(os, static_cast<uint32_t>(len));
    }
}

std::size_t get_length(std::istream& is)
{
    const int b = is.get();
    if (b < 0)
        throw std::runtime_error("truncated vertex cache");
    if (b < 255)
        return static_cast<std::size_t>(b);
    return get_u32(is);
}

}  // namespace

void save_vrep_cache(const VRep& v, const std::string& path)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot open cache file for writing: " + path);
    os.write(kMagic, sizeof(kMagic));
    put_u32(os, static_cast<uint32_t>(v.dim));
    put_u32(os, static_cast<uint32_t>(v.vertices.size()));
    put_u32(os, static_cast<uint32_t>(v.provenance.size()));
    os.write(v.provenance.data(), static_cast<std::streamsize>(v.provenance.size()));
    for (const auto& vertex : v.vertices) {
        for (const auto& q : vertex) {
            const Int n = num(q);
            const Int d = den(q);
            os.put(n < 0 ? 1 : 0);
            auto nb = export_magnitude(n);
            put_length(os, nb.size());
            os.write(reinterpret_cast<char*>(nb.data()), static_cast<std::streamsize>(nb.size()));
            auto db = export_magnitude(d);
            put_length(os, db.size());
            os.write(reinterpret_cast<char*>(db.data()), static_cast<std::streamsize>(db.size()));
        }
    }
    if (!os)
        throw std::runtime_error("failed while writing cache: " + path);
}

VRep load_vrep_cache(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open cache file: " + path);
    char magic[6];
    is.read(magic, 6);
    if (!is || std::memcmp(magic, kMagic, 6) != 0)
        throw std::runtime_error("bad vertex cache magic: " + path);
    VRep v;
    v.dim = static_cast<int>(get_u32(is));
    const uint32_t count = get_u32(is);
    const uint32_t plen = get_u32(is);
    v.provenance.resize(plen);
    is.read(v.provenance.data(), plen);
    v.vertices.assign(count, std::vector<Rat>(v.dim));
    std::vector<unsigned char> buf;
    for (uint32_t i = 0; i < count; ++i)
        for (int j = 0; j < v.dim; ++j) {
            const int sign = is.get();
            std::size_t nlen = get_length(is);
            buf.resize(nlen);
            is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(nlen));
            Int n = import_magnitude(buf.data(), nlen);
            std::size_t dlen = get_length(is);
            buf.resize(dlen);
            is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(dlen));
            Int d = import_magnitude(buf.data(), dlen);
            if (!is)
                throw std::runtime_error("truncated vertex cache: " + path);
            if (d == 0)
                throw std::runtime_error("zero denominator in vertex cache: " + path);
            if (sign)
                n = -n;
            v.vertices[i][j] = Rat(n, d);
        }
    return v;
}

}  // namespace gtnl

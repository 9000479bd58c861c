#include "braidkex/wire.hpp"

#include <cstring>
#include <fstream>

#include "braidkex/errors.hpp"

namespace braidkex::wire {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint8_t u8() {
        need(1);
        return bytes_[pos_++];
    }
    std::uint16_t u16() {
        need(2);
        const std::uint16_t v = static_cast<std::uint16_t>((bytes_[pos_] << 8) | bytes_[pos_ + 1]);
        pos_ += 2;
        return v;
    }
    std::uint32_t u32() {
        need(4);
        const std::uint32_t v = (static_cast<std::uint32_t>(bytes_[pos_]) << 24) |
                                (static_cast<std::uint32_t>(bytes_[pos_ + 1]) << 16) |
                                (static_cast<std::uint32_t>(bytes_[pos_ + 2]) << 8) |
                                static_cast<std::uint32_t>(bytes_[pos_ + 3]);
        pos_ += 4;
        return v;
    }
    std::span<const std::uint8_t> take(std::size_t count) {
        need(count);
        auto s = bytes_.subspan(pos_, count);
        pos_ += count;
        return s;
    }
    std::size_t remaining() const { return bytes_.size() - pos_; }
    void expect_end(const char* what) const {
        if (remaining() != 0) throw WireError(std::string("trailing garbage after ") + what);
    }

private:
    void need(std::size_t count) const {
        if (bytes_.size() - pos_ < count) throw WireError("truncated input");
    }
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

void encode_braid_into(std::vector<std::uint8_t>& out, const CanonicalForm& f) {
    if (f.n < 2 || f.n > kMaxStrands) throw WireError("strand count not encodable");
    put_u16(out, static_cast<std::uint16_t>(f.n));
    put_u32(out, static_cast<std::uint32_t>(f.delta_power));
    put_u32(out, static_cast<std::uint32_t>(f.factors.size()));
    for (const Permutation& a : f.factors)
        out.insert(out.end(), a.image().begin(), a.image().end());
}

CanonicalForm decode_braid_from(Reader& r) {
    CanonicalForm f;
    f.n = r.u16();
    if (f.n < 2 || f.n > kMaxStrands) throw WireError("strand count out of range");
    f.delta_power = static_cast<std::int32_t>(r.u32());
    const std::uint32_t count = r.u32();
    // Bound the claimed factor count by the bytes actually present before
    // reserving anything.
    if (static_cast<std::uint64_t>(count) * static_cast<std::uint64_t>(f.n) > r.remaining())
        throw WireError("truncated input");
    f.factors.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        auto bytes = r.take(static_cast<std::size_t>(f.n));
        std::vector<std::uint8_t> table(bytes.begin(), bytes.end());
        try {
            f.factors.emplace_back(std::move(table));
        } catch (const DomainError&) {
            throw WireError("factor table is not a bijection");
        }
    }
    if (!is_valid_canonical(f)) throw WireError("decoded form violates canonical invariants");
    return f;
}

MessageKind kind_from_byte(std::uint8_t b) {
    switch (b) {
        case 0x01: return MessageKind::SubgroupA;
        case 0x02: return MessageKind::SubgroupB;
        case 0x03: return MessageKind::TransmissionA;
        case 0x04: return MessageKind::TransmissionB;
        case 0x05: return MessageKind::Params;
        default: throw WireError("unknown message kind");
    }
}

std::vector<std::uint8_t> encode_payload(const HandshakeMessage& msg) {
    std::vector<std::uint8_t> out;
    switch (msg.kind) {
        case MessageKind::Params: {
            const auto& p = std::get<ParamsPayload>(msg.payload);
            if (p.n < 2 || p.n > kMaxStrands) throw WireError("params n not encodable");
            if (p.l < 0) throw WireError("params l not encodable");
            put_u16(out, static_cast<std::uint16_t>(p.n));
            put_u32(out, static_cast<std::uint32_t>(p.l));
            encode_braid_into(out, p.w);
            break;
        }
        case MessageKind::SubgroupA:
        case MessageKind::SubgroupB: {
            const auto& p = std::get<SubgroupPayload>(msg.payload);
            if (p.gens.size() > 0xffff) throw WireError("too many subgroup generators");
            put_u16(out, static_cast<std::uint16_t>(p.gens.size()));
            for (const CanonicalForm& g : p.gens) encode_braid_into(out, g);
            break;
        }
        case MessageKind::TransmissionA:
        case MessageKind::TransmissionB: {
            const auto& p = std::get<TransmissionPayload>(msg.payload);
            encode_braid_into(out, p.braid);
            break;
        }
    }
    return out;
}

HandshakeMessage decode_payload(MessageKind kind, Reader& r) {
    HandshakeMessage msg;
    msg.kind = kind;
    switch (kind) {
        case MessageKind::Params: {
            ParamsPayload p;
            p.n = r.u16();
            const std::uint32_t l = r.u32();
            if (l > 0x7fffffffu) throw WireError("params l out of range");
            p.l = static_cast<int>(l);
            p.w = decode_braid_from(r);
            if (p.w.n != p.n) throw WireError("params base element strand-count mismatch");
            msg.payload = std::move(p);
            break;
        }
        case MessageKind::SubgroupA:
        case MessageKind::SubgroupB: {
            SubgroupPayload p;
            const std::uint16_t count = r.u16();
            p.gens.reserve(count);
            for (std::uint16_t i = 0; i < count; ++i) p.gens.push_back(decode_braid_from(r));
            msg.payload = std::move(p);
            break;
        }
        case MessageKind::TransmissionA:
        case MessageKind::TransmissionB: {
            TransmissionPayload p;
            p.braid = decode_braid_from(r);
            msg.payload = std::move(p);
            break;
        }
    }
    return msg;
}

// Decodes one frame starting at the reader's position.
HandshakeMessage decode_frame(Reader& r) {
    const auto magic = r.take(4);
    if (std::memcmp(magic.data(), kMagic, 4) != 0) throw WireError("bad magic");
    const std::uint8_t version = r.u8();
    if (version != kVersion) throw WireError("unsupported version");
    const MessageKind kind = kind_from_byte(r.u8());
    const std::uint32_t length = r.u32();
    Reader payload(r.take(length));
    HandshakeMessage msg = decode_payload(kind, payload);
    payload.expect_end("payload");
    return msg;
}

}  // namespace

std::vector<std::uint8_t> encode_braid(const CanonicalForm& f) {
    std::vector<std::uint8_t> out;
    encode_braid_into(out, f);
    return out;
}

CanonicalForm decode_braid(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    CanonicalForm f = decode_braid_from(r);
    r.expect_end("braid blob");
    return f;
}

std::vector<std::uint8_t> encode_message(const HandshakeMessage& msg) {
    std::vector<std::uint8_t> payload = encode_payload(msg);
    std::vector<std::uint8_t> out;
    out.reserve(payload.size() + 10);
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(msg.kind));
    put_u32(out, static_cast<std::uint32_t>(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

HandshakeMessage decode_message(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    HandshakeMessage msg = decode_frame(r);
    r.expect_end("frame");
    return msg;
}

std::vector<std::uint8_t> encode_transcript(const Transcript& transcript) {
    std::vector<std::uint8_t> out;
    for (const HandshakeMessage& msg : transcript) {
        const std::vector<std::uint8_t> frame = encode_message(msg);
        out.insert(out.end(), frame.begin(), frame.end());
    }
    return out;
}

Transcript decode_transcript(std::span<const std::uint8_t> bytes) {
    Transcript out;
    Reader r(bytes);
    while (r.remaining() > 0) out.push_back(decode_frame(r));
    return out;
}

void write_transcript(const std::filesystem::path& path, const Transcript& transcript) {
    const std::vector<std::uint8_t> bytes = encode_transcript(transcript);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw WireError("cannot open transcript file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw WireError("short write to transcript file: " + path.string());
}

Transcript read_transcript(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw WireError("cannot open transcript file: " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_transcript(bytes);
}

}  // namespace braidkex::wire

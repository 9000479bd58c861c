#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "braidkex/canonical_form.hpp"
#include "braidkex/keygen.hpp"

namespace braidkex {

// Public handshake parameters.  The base element w is derived from the public
// seed rather than being sent by either party, which keeps transcripts
// self-contained; each party additionally gets an independent seed stream.
struct ProtocolParams {
    int n = 0;
    int l = 0;
    BraidWord w = BraidWord::identity(2);
    std::uint64_t alice_seed = 0;
    std::uint64_t bob_seed = 0;
};

ProtocolParams make_params(int n, int l, std::uint64_t seed);

enum class MessageKind : std::uint8_t {
    SubgroupA = 0x01,
    SubgroupB = 0x02,
    TransmissionA = 0x03,
    TransmissionB = 0x04,
    Params = 0x05,
};

struct ParamsPayload {
    int n = 0;
    int l = 0;
    CanonicalForm w;
    bool operator==(const ParamsPayload&) const = default;
};

struct SubgroupPayload {
    std::vector<CanonicalForm> gens;
    bool operator==(const SubgroupPayload&) const = default;
};

struct TransmissionPayload {
    CanonicalForm braid;
    bool operator==(const TransmissionPayload&) const = default;
};

struct HandshakeMessage {
    MessageKind kind;
    std::variant<ParamsPayload, SubgroupPayload, TransmissionPayload> payload;
    bool operator==(const HandshakeMessage&) const = default;
};

using Transcript = std::vector<HandshakeMessage>;

enum class Role { Alice, Bob };
enum class Phase { Init, PublishedSubgroup, ReceivedSubgroup, SentTransmission, Complete };

// One participant.  Phases advance monotonically
// Init -> PublishedSubgroup -> ReceivedSubgroup -> SentTransmission -> Complete;
// any out-of-order call throws ProtocolError and leaves the state untouched.
//
// Alice's transmission is N(a1.w.a2) with a1 her private element and a2 drawn
// from Bob's published subgroup; Bob sends N(b1.w.b2) with b1 from Alice's
// subgroup and b2 his private element.
class Party {
public:
    Party(Role role, const ProtocolParams& params);

    HandshakeMessage publish_subgroup();
    void receive_subgroup(const HandshakeMessage& msg);
    HandshakeMessage send_transmission();
    void compute_shared_key(const HandshakeMessage& msg);

    Role role() const { return role_; }
    Phase phase() const { return phase_; }
    const CanonicalForm& shared_key() const;

    // Introspection for tests and experiments.
    const CommutingPair& pair() const;
    const BraidWord& second_key() const;
    const std::vector<BraidWord>& peer_gens() const;

private:
    // Number of peer-subgroup generators multiplied into a2/b1.
    static constexpr int kSecondKeyFactorBudget = 16;

    Role role_;
    Phase phase_ = Phase::Init;
    ProtocolParams params_;
    Rng rng_;
    std::optional<CommutingPair> pair_;
    std::vector<BraidWord> peer_gens_;
    std::optional<BraidWord> second_key_;
    std::optional<CanonicalForm> shared_key_;
};

// Session key: SHA-256 over a fixed label and the wire encoding of the
// canonical form, so equal forms yield equal keys byte for byte.
std::array<std::uint8_t, 32> derive_session_key(const CanonicalForm& k);

struct HandshakeResult {
    CanonicalForm key_a;
    CanonicalForm key_b;
    Transcript transcript;
};

// Drives both parties over an in-process channel in the fixed message order
// Params, SubgroupA, SubgroupB, TransmissionA, TransmissionB.
HandshakeResult run_handshake(int n, int l, std::uint64_t seed);

}  // namespace braidkex

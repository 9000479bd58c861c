#include "braidkex/protocol.hpp"

#include <openssl/evp.h>

#include "braidkex/errors.hpp"
#include "braidkex/wire.hpp"

namespace braidkex {

namespace {

constexpr std::uint64_t kStreamBase = 0;
constexpr std::uint64_t kStreamAlice = 1;
constexpr std::uint64_t kStreamBob = 2;

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Init: return "Init";
        case Phase::PublishedSubgroup: return "PublishedSubgroup";
        case Phase::ReceivedSubgroup: return "ReceivedSubgroup";
        case Phase::SentTransmission: return "SentTransmission";
        case Phase::Complete: return "Complete";
    }
    return "?";
}

void require_phase(Phase actual, Phase expected) {
    if (actual != expected)
        throw ProtocolError(std::string("wrong phase: expected ") + phase_name(expected) +
                            ", state is " + phase_name(actual));
}

}  // namespace

ProtocolParams make_params(int n, int l, std::uint64_t seed) {
    if (n < 4) throw DomainError("protocol needs n >= 4");
    if (n > kMaxStrands) throw DomainError("strand count must be in 2..255");
    if (l < 1) throw DomainError("l must be >= 1");
    Rng rng(split_seed(seed, kStreamBase));
    ProtocolParams params;
    params.n = n;
    params.l = l;
    params.w = random_word(n, l, rng);
    params.alice_seed = split_seed(seed, kStreamAlice);
    params.bob_seed = split_seed(seed, kStreamBob);
    return params;
}

Party::Party(Role role, const ProtocolParams& params)
    : role_(role),
      params_(params),
      rng_(role == Role::Alice ? params.alice_seed : params.bob_seed) {}

HandshakeMessage Party::publish_subgroup() {
    require_phase(phase_, Phase::Init);
    const SamplerConfig cfg = SamplerConfig::defaults(
        params_.n, params_.l, role_ == Role::Alice ? params_.alice_seed : params_.bob_seed);
    // Alice's private element lives on the lower strand block, Bob's on the
    // upper one, so a1 commutes with b1 and a2 with b2 across parties.
    pair_ = generate_commuting_pair(cfg, role_ == Role::Alice ? Side::LeftHalf : Side::RightHalf, rng_);
    HandshakeMessage msg;
    msg.kind = role_ == Role::Alice ? MessageKind::SubgroupA : MessageKind::SubgroupB;
    SubgroupPayload payload;
    payload.gens.reserve(pair_->subgroup_gens.size());
    for (const BraidWord& g : pair_->subgroup_gens) payload.gens.push_back(to_canonical(g));
    msg.payload = std::move(payload);
    phase_ = Phase::PublishedSubgroup;
    return msg;
}

void Party::receive_subgroup(const HandshakeMessage& msg) {
    require_phase(phase_, Phase::PublishedSubgroup);
    const MessageKind expected = role_ == Role::Alice ? MessageKind::SubgroupB : MessageKind::SubgroupA;
    if (msg.kind != expected) throw ProtocolError("wrong message kind: expected the peer subgroup");
    const auto& payload = std::get<SubgroupPayload>(msg.payload);
    if (payload.gens.empty()) throw ProtocolError("peer subgroup is empty");
    std::vector<BraidWord> gens;
    gens.reserve(payload.gens.size());
    for (const CanonicalForm& f : payload.gens) {
        if (f.n != params_.n) throw ProtocolError("peer generator strand-count mismatch");
        gens.push_back(canonical_to_word(f));
    }
    peer_gens_ = std::move(gens);
    phase_ = Phase::ReceivedSubgroup;
}

HandshakeMessage Party::send_transmission() {
    require_phase(phase_, Phase::ReceivedSubgroup);
    second_key_ = sample_subgroup_element(peer_gens_, kSecondKeyFactorBudget, rng_);
    // Alice sends N(a1.w.a2); Bob sends N(b1.w.b2).
    const BraidWord& left = role_ == Role::Alice ? pair_->private_elem : *second_key_;
    const BraidWord& right = role_ == Role::Alice ? *second_key_ : pair_->private_elem;
    HandshakeMessage msg;
    msg.kind = role_ == Role::Alice ? MessageKind::TransmissionA : MessageKind::TransmissionB;
    msg.payload = TransmissionPayload{to_canonical(multiply(multiply(left, params_.w), right))};
    phase_ = Phase::SentTransmission;
    return msg;
}

void Party::compute_shared_key(const HandshakeMessage& msg) {
    require_phase(phase_, Phase::SentTransmission);
    const MessageKind expected =
        role_ == Role::Alice ? MessageKind::TransmissionB : MessageKind::TransmissionA;
    if (msg.kind != expected) throw ProtocolError("wrong message kind: expected the peer transmission");
    const auto& payload = std::get<TransmissionPayload>(msg.payload);
    if (payload.braid.n != params_.n) throw ProtocolError("peer transmission strand-count mismatch");
    // K = left . P_peer . right, multiplied on normal forms.
    const BraidWord& left = role_ == Role::Alice ? pair_->private_elem : *second_key_;
    const BraidWord& right = role_ == Role::Alice ? *second_key_ : pair_->private_elem;
    shared_key_ = canonical_multiply(canonical_multiply(to_canonical(left), payload.braid),
                                     to_canonical(right));
    phase_ = Phase::Complete;
}

const CanonicalForm& Party::shared_key() const {
    if (phase_ != Phase::Complete) throw ProtocolError("shared key is defined only in Complete");
    return *shared_key_;
}

const CommutingPair& Party::pair() const {
    if (!pair_) throw ProtocolError("subgroup not yet published");
    return *pair_;
}

const BraidWord& Party::second_key() const {
    if (!second_key_) throw ProtocolError("transmission not yet sent");
    return *second_key_;
}

const std::vector<BraidWord>& Party::peer_gens() const {
    if (phase_ == Phase::Init || phase_ == Phase::PublishedSubgroup)
        throw ProtocolError("peer subgroup not yet received");
    return peer_gens_;
}

std::array<std::uint8_t, 32> derive_session_key(const CanonicalForm& k) {
    static constexpr char kLabel[] = "BKEXK1";
    std::vector<std::uint8_t> buf(kLabel, kLabel + sizeof(kLabel) - 1);
    const std::vector<std::uint8_t> encoded = wire::encode_braid(k);
    buf.insert(buf.end(), encoded.begin(), encoded.end());
    std::array<std::uint8_t, 32> out{};
    unsigned int out_len = 0;
    if (EVP_Digest(buf.data(), buf.size(), out.data(), &out_len, EVP_sha256(), nullptr) != 1 ||
        out_len != out.size())
        throw Error("SHA-256 failed");
    return out;
}

HandshakeResult run_handshake(int n, int l, std::uint64_t seed) {
    const ProtocolParams params = make_params(n, l, seed);
    Party alice(Role::Alice, params);
    Party bob(Role::Bob, params);

    HandshakeMessage params_msg{MessageKind::Params,
                                ParamsPayload{params.n, params.l, to_canonical(params.w)}};
    HandshakeMessage sub_a = alice.publish_subgroup();
    HandshakeMessage sub_b = bob.publish_subgroup();
    alice.receive_subgroup(sub_b);
    bob.receive_subgroup(sub_a);
    HandshakeMessage tx_a = alice.send_transmission();
    HandshakeMessage tx_b = bob.send_transmission();
    alice.compute_shared_key(tx_b);
    bob.compute_shared_key(tx_a);

    HandshakeResult result{alice.shared_key(), bob.shared_key(), {}};
    result.transcript = {std::move(params_msg), std::move(sub_a), std::move(sub_b),
                         std::move(tx_a), std::move(tx_b)};
    return result;
}

}  // namespace braidkex

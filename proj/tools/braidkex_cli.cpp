// Command-line front end: normal-form utility, handshake demo with transcript
// capture, attacks against captured transcripts, and the permutation-residue
// distinguisher experiment.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "braidkex/canonical_form.hpp"
#include "braidkex/cryptanalysis.hpp"
#include "braidkex/errors.hpp"
#include "braidkex/protocol.hpp"
#include "braidkex/wire.hpp"

namespace {

std::string hex(const std::array<std::uint8_t, 32>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

int cmd_nf(const std::string& word_text, int n) {
    const braidkex::BraidWord w = braidkex::parse_word(word_text, n);
    const braidkex::CanonicalForm f = braidkex::to_canonical(w);
    std::cout << "n=" << f.n << '\n';
    std::cout << "delta_power=" << f.delta_power << '\n';
    std::cout << "factor_count=" << f.factors.size() << '\n';
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        std::cout << "factor" << i << '=';
        for (int j = 0; j < f.n; ++j) {
            if (j) std::cout << ' ';
            std::cout << static_cast<int>(f.factors[i][j]);
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_handshake(int n, int l, std::uint64_t seed, const std::string& transcript_path) {
    const braidkex::HandshakeResult res = braidkex::run_handshake(n, l, seed);
    if (!transcript_path.empty()) braidkex::wire::write_transcript(transcript_path, res.transcript);
    std::cout << "alice_key=" << hex(braidkex::derive_session_key(res.key_a)) << '\n';
    std::cout << "bob_key=" << hex(braidkex::derive_session_key(res.key_b)) << '\n';
    std::cout << (res.key_a == res.key_b ? "MATCH" : "MISMATCH") << '\n';
    return 0;
}

// Passive-eavesdropper instance: attack Alice's transmission.  w and the
// right-hand subgroup B come from the transcript; the left-hand subgroup is
// concealed by the protocol, so the attacker falls back to the full
// generator set.
braidkex::DecompositionInstance instance_from_transcript(const braidkex::Transcript& transcript) {
    const braidkex::ParamsPayload* params = nullptr;
    const braidkex::SubgroupPayload* subgroup_b = nullptr;
    const braidkex::TransmissionPayload* tx_a = nullptr;
    for (const braidkex::HandshakeMessage& msg : transcript) {
        if (msg.kind == braidkex::MessageKind::Params)
            params = &std::get<braidkex::ParamsPayload>(msg.payload);
        else if (msg.kind == braidkex::MessageKind::SubgroupB)
            subgroup_b = &std::get<braidkex::SubgroupPayload>(msg.payload);
        else if (msg.kind == braidkex::MessageKind::TransmissionA)
            tx_a = &std::get<braidkex::TransmissionPayload>(msg.payload);
    }
    if (!params || !subgroup_b || !tx_a)
        throw braidkex::WireError("transcript lacks Params, SubgroupB, or TransmissionA");
    braidkex::DecompositionInstance inst{braidkex::canonical_to_word(params->w),
                                         braidkex::canonical_to_word(tx_a->braid),
                                         {},
                                         {}};
    for (int g = 1; g < params->n; ++g)
        inst.left_gens.push_back(braidkex::BraidWord(params->n, {g}));
    for (const braidkex::CanonicalForm& f : subgroup_b->gens)
        inst.right_gens.push_back(braidkex::canonical_to_word(f));
    return inst;
}

int cmd_attack(const std::string& kind, const std::string& transcript_path, int depth_left,
               int depth_right, int beam, int max_iters) {
    const braidkex::Transcript transcript = braidkex::wire::read_transcript(transcript_path);
    const braidkex::DecompositionInstance inst = instance_from_transcript(transcript);
    std::optional<braidkex::RecoveredPair> pair;
    if (kind == "brute") {
        pair = braidkex::brute_force_decompose(inst, depth_left, depth_right);
    } else {
        const braidkex::LengthAttackResult res = braidkex::length_attack(inst, beam, max_iters);
        std::cout << "iterations=" << res.iterations << '\n';
        pair = res.pair;
    }
    std::cout << "success=" << (pair ? 1 : 0) << '\n';
    if (pair) {
        std::cout << "left=" << braidkex::format_word(pair->left) << '\n';
        std::cout << "right=" << braidkex::format_word(pair->right) << '\n';
    }
    return 0;
}

int cmd_distinguish(int n, int l, int trials, std::uint64_t seed) {
    std::cout << braidkex::distinguisher_experiment(n, l, trials, seed).format();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Key establishment over braid groups, with normal-form tools and attacks"};
    app.require_subcommand(1);

    int n = 64;
    int l = 1024;
    std::uint64_t seed = 1;
    std::string word_text;
    std::string transcript_path;
    std::string attack_kind;
    int trials = 200;
    int beam = 32;
    int max_iters = 32;
    int depth_left = 2;
    int depth_right = 2;

    CLI::App* nf = app.add_subcommand("nf", "Print the left canonical form of a word");
    nf->add_option("word", word_text, "Generator word, e.g. \"1 2 -1\"");
    nf->add_option("--n", n, "Strand count");

    CLI::App* handshake = app.add_subcommand("handshake", "Run a full key establishment");
    handshake->add_option("--n", n, "Strand count");
    handshake->add_option("--l", l, "Private key length");
    handshake->add_option("--seed", seed, "Master seed");
    handshake->add_option("--transcript", transcript_path, "Write the message transcript here");

    CLI::App* attack = app.add_subcommand("attack", "Attack a captured transcript");
    attack->add_option("kind", attack_kind, "brute or length")
        ->required()
        ->check(CLI::IsMember({"brute", "length"}));
    attack->add_option("--transcript", transcript_path, "Transcript file")->required();
    attack->add_option("--depth-left", depth_left, "Brute force: max left factors");
    attack->add_option("--depth-right", depth_right, "Brute force: max right factors");
    attack->add_option("--beam", beam, "Length attack: beam width");
    attack->add_option("--max-iters", max_iters, "Length attack: iteration cap");
    attack->add_option("--seed", seed, "Unused placeholder for reproducibility scripting");

    CLI::App* distinguish = app.add_subcommand("distinguish", "Cycle-structure distinguisher experiment");
    distinguish->add_option("--n", n, "Strand count");
    distinguish->add_option("--l", l, "Private key length");
    distinguish->add_option("--trials", trials, "Number of handshakes");
    distinguish->add_option("--seed", seed, "Master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (nf->parsed()) return cmd_nf(word_text, n);
        if (handshake->parsed()) return cmd_handshake(n, l, seed, transcript_path);
        if (attack->parsed())
            return cmd_attack(attack_kind, transcript_path, depth_left, depth_right, beam, max_iters);
        if (distinguish->parsed()) return cmd_distinguish(n, l, trials, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

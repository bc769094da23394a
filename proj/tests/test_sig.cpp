#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rsdsig/sig.h"
#include "rsdsig/xof.h"
#include "test_util.h"

using namespace rsdsig;

namespace {

std::vector<uint8_t> msg_bytes() { return {'t', 'e', 's', 't', ' ', 'm', 's', 'g'}; }

ParamSet toy_params(unsigned big_n, unsigned tau, unsigned w_grind) {
  ParamSet ps = *find_params("ternary-1-fast");
  ps.id = "toy";
  ps.n = 4;
  ps.k = 2;
  ps.mu = 2;
  ps.eta = 1;
  ps.tau = tau;
  ps.big_n = big_n;
  ps.w_grind = w_grind;
  return ps;
}

}  // namespace

TEST_CASE("keygen derives a consistent key pair") {
  for (const char* id : {"cross-1-fast", "ternary-1-fast"}) {
    const ParamSet& ps = *find_params(id);
    SeededRng rng(std::vector<uint8_t>{0x01, uint8_t(id[0])});
    auto [sk, vk] = sig::keygen(ps, rng);
    CHECK(sk.vk == vk);
    CHECK(vk.matrix_seed.size() == ps.salt_bytes());
    CHECK(vk.s.size() == ps.n - ps.k);
    CHECK(sk.w.size() == ps.k);
    auto inst = sig::instance_from_vk(vk, ps);
    auto f = evaluate_modeling(sk.w, inst);
    CHECK(std::all_of(f.begin(), f.end(), [](uint16_t v) { return v == 0; }));
  }
}

TEST_CASE("keygen rejects voleith rows") {
  SeededRng rng(std::vector<uint8_t>{9});
  CHECK_THROWS_AS(sig::keygen(*find_params("cross-1-fast-v"), rng), std::runtime_error);
}

TEST_CASE("key encode/decode round trip and sizes") {
  struct Pin {
    const char* id;
    size_t pk, sk;
  };
  // pk = 2*lambda/8 + packed(n-k); sk = pk + packed(k)
  for (Pin pin : {Pin{"cross-1-fast", 77, 144}, Pin{"ternary-1-fast", 105, 148},
                  Pin{"cross-3-fast", 115, 212}, Pin{"ternary-3-fast", 154, 216},
                  Pin{"cross-5-fast", 153, 285}, Pin{"ternary-5-fast", 202, 283}}) {
    const ParamSet& ps = *find_params(pin.id);
    CHECK(sig::verify_key_bytes(ps) == pin.pk);
    CHECK(sig::signing_key_bytes(ps) == pin.sk);
    SeededRng rng(std::vector<uint8_t>{0x77, uint8_t(pin.pk)});
    auto [sk, vk] = sig::keygen(ps, rng);
    auto pk_bytes = sig::encode_verify_key(vk, ps);
    auto sk_bytes = sig::encode_signing_key(sk, ps);
    CHECK(pk_bytes.size() == pin.pk);
    CHECK(sk_bytes.size() == pin.sk);
    CHECK(sig::decode_verify_key(pk_bytes, ps) == vk);
    CHECK(sig::decode_signing_key(sk_bytes, ps) == sk);
    // signing key embeds the verify key as a prefix
    CHECK(std::equal(pk_bytes.begin(), pk_bytes.end(), sk_bytes.begin()));
  }
}

TEST_CASE("key decoding is strict") {
  const ParamSet& ps = *find_params("ternary-1-fast");
  SeededRng rng(std::vector<uint8_t>{0x31});
  auto [sk, vk] = sig::keygen(ps, rng);
  auto pk_bytes = sig::encode_verify_key(vk, ps);
  auto sk_bytes = sig::encode_signing_key(sk, ps);

  auto short_pk = pk_bytes;
  short_pk.pop_back();
  CHECK_THROWS_WITH_AS(sig::decode_verify_key(short_pk, ps),
                       "malformed encoding: verify key length", std::runtime_error);
  auto short_sk = sk_bytes;
  short_sk.pop_back();
  CHECK_THROWS_WITH_AS(sig::decode_signing_key(short_sk, ps),
                       "malformed encoding: signing key length", std::runtime_error);
  // non-canonical syndrome packing: set all residue bits high
  auto bad_pk = pk_bytes;
  for (size_t i = ps.salt_bytes(); i < bad_pk.size(); i++) bad_pk[i] = 0xff;
  CHECK_THROWS_AS(sig::decode_verify_key(bad_pk, ps), std::runtime_error);
  // witness that does not satisfy the instance
  auto bad_sk = sk_bytes;
  bad_sk.back() ^= 1;
  CHECK_THROWS_AS(sig::decode_signing_key(bad_sk, ps), std::runtime_error);
}

TEST_CASE("sign and verify at full parameters") {
  for (const char* id : {"cross-1-fast", "ternary-1-fast"}) {
    const ParamSet& ps = *find_params(id);
    SeededRng rng(std::vector<uint8_t>{0x02, uint8_t(id[0])});
    auto [sk, vk] = sig::keygen(ps, rng);
    auto msg = msg_bytes();
    auto s = sig::sign(sk, msg, ps, rng);
    CHECK(sig::verify(vk, msg, s, ps));
    // grinding bits of h2 are zero
    uint32_t low = uint32_t(s.h2[0]) | uint32_t(s.h2[1]) << 8;
    CHECK((low & ((1u << ps.w_grind) - 1)) == 0);
    // wrong message rejects
    auto other = msg;
    other[3] ^= 0x20;
    CHECK(!sig::verify(vk, other, s, ps));
    // wrong key rejects
    SeededRng rng2(std::vector<uint8_t>{0x03});
    auto [sk2, vk2] = sig::keygen(ps, rng2);
    CHECK(!sig::verify(vk2, msg, s, ps));
  }
}

TEST_CASE("serialized sizes are pinned") {
  struct Pin {
    const char* id;
    size_t bytes;
  };
  for (Pin pin : {Pin{"cross-1-fast", 8069}, Pin{"cross-1-short", 5795},
                  Pin{"ternary-1-fast", 3816}, Pin{"ternary-1-short", 3294}}) {
    const ParamSet& ps = *find_params(pin.id);
    CHECK(sig::signature_bytes(ps) == pin.bytes);
  }
}

TEST_CASE("serialization round trips and length-checks") {
  const ParamSet& ps = *find_params("ternary-1-fast");
  SeededRng rng(std::vector<uint8_t>{0x04});
  auto [sk, vk] = sig::keygen(ps, rng);
  auto msg = msg_bytes();
  for (int iter = 0; iter < 3; iter++) {
    auto s = sig::sign(sk, msg, ps, rng);
    auto bytes = sig::serialize(s, ps);
    CHECK(bytes.size() == sig::signature_bytes(ps));
    auto back = sig::deserialize(bytes, ps);
    CHECK(back == s);
    CHECK(sig::verify(vk, msg, back, ps));
  }
  auto s = sig::sign(sk, msg, ps, rng);
  auto bytes = sig::serialize(s, ps);
  auto trunc = bytes;
  trunc.pop_back();
  CHECK_THROWS_WITH_AS(sig::deserialize(trunc, ps), "malformed encoding: signature length",
                       std::runtime_error);
  auto extended = bytes;
  extended.push_back(0);
  CHECK_THROWS_AS(sig::deserialize(extended, ps), std::runtime_error);
  // a signature for one parameter set is malformed under another
  CHECK_THROWS_AS(sig::deserialize(bytes, *find_params("ternary-1-short")),
                  std::runtime_error);
  // nonzero padding in the final partial byte is rejected
  auto padded = bytes;
  padded.back() |= 0x80;
  bool rejected = false;
  try {
    auto back = sig::deserialize(padded, ps);
    rejected = !sig::verify(vk, msg, back, ps);
  } catch (const std::runtime_error&) {
    rejected = true;
  }
  CHECK(rejected);
}

TEST_CASE("targeted bit flips reject") {
  const ParamSet& ps = *find_params("ternary-1-fast");
  SeededRng rng(std::vector<uint8_t>{0x05});
  auto [sk, vk] = sig::keygen(ps, rng);
  auto msg = msg_bytes();
  auto bytes = sig::serialize(sig::sign(sk, msg, ps, rng), ps);
  // one position in each wire region: salt, aux, h2, ctr, openings, packs
  size_t fixed = ps.salt_bytes() + ps.seed_bytes() + ps.digest_bytes();
  std::vector<size_t> positions{0, ps.salt_bytes(), fixed - 1, fixed + 3, fixed + 8,
                                bytes.size() / 2, bytes.size() - 1};
  for (size_t pos : positions) {
    auto bad = bytes;
    bad[pos] ^= 0x01;
    bool rejected = false;
    try {
      auto s = sig::deserialize(bad, ps);
      rejected = !sig::verify(vk, msg, s, ps);
    } catch (const std::runtime_error&) {
      rejected = true;
    }
    CHECK(rejected);
  }
}

TEST_CASE("deterministic signing under a seeded rng") {
  const ParamSet& ps = *find_params("ternary-1-fast");
  auto msg = msg_bytes();
  auto run = [&] {
    SeededRng rng(std::vector<uint8_t>{0x06});
    auto [sk, vk] = sig::keygen(ps, rng);
    return sig::serialize(sig::sign(sk, msg, ps, rng), ps);
  };
  CHECK(run() == run());
}

TEST_CASE("distinct salts across signatures") {
  const ParamSet& ps = *find_params("ternary-1-fast");
  SeededRng rng(std::vector<uint8_t>{0x07});
  auto [sk, vk] = sig::keygen(ps, rng);
  auto msg = msg_bytes();
  auto s1 = sig::sign(sk, msg, ps, rng);
  auto s2 = sig::sign(sk, msg, ps, rng);
  CHECK(s1.salt != s2.salt);
  CHECK(sig::verify(vk, msg, s1, ps));
  CHECK(sig::verify(vk, msg, s2, ps));
}

TEST_CASE("grinding counter distribution") {
  // w = 4: ctr is geometric with mean ~16; the mean over 200 signatures
  // lands in [8, 32] except with negligible probability
  ParamSet ps = toy_params(8, 2, 4);
  SeededRng rng(std::vector<uint8_t>{0x08});
  auto [sk, vk] = sig::keygen(ps, rng);
  auto msg = msg_bytes();
  double sum = 0;
  for (int i = 0; i < 200; i++) {
    auto s = sig::sign(sk, msg, ps, rng);
    REQUIRE(sig::verify(vk, msg, s, ps));
    sum += s.ctr;
  }
  double mean = sum / 200;
  CHECK(mean >= 8.0);
  CHECK(mean <= 32.0);
}

TEST_CASE("verify rejects nonzero grinding bits") {
  ParamSet ps = toy_params(8, 2, 4);
  SeededRng rng(std::vector<uint8_t>{0x09});
  auto [sk, vk] = sig::keygen(ps, rng);
  auto msg = msg_bytes();
  auto s = sig::sign(sk, msg, ps, rng);
  REQUIRE(sig::verify(vk, msg, s, ps));
  auto bad = s;
  bad.ctr++;
  CHECK(!sig::verify(vk, msg, bad, ps));
}

TEST_CASE("signing with a short witness is rejected") {
  const ParamSet& ps = *find_params("ternary-1-fast");
  SeededRng rng(std::vector<uint8_t>{0x0a});
  auto [sk, vk] = sig::keygen(ps, rng);
  sk.w.pop_back();
  CHECK_THROWS_AS(sig::sign(sk, msg_bytes(), ps, rng), std::runtime_error);
}

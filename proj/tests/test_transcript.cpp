#include <doctest.h>

#include <set>

#include "flexproofs/encoding.hpp"
#include "flexproofs/error.hpp"
#include "flexproofs/transcript.hpp"

using namespace flexproofs;

TEST_CASE("identical absorb sequences give identical challenges") {
  Transcript a("test"), b("test");
  for (auto* t : {&a, &b}) {
    t->absorb_u64("n", 42);
    t->absorb_scalar("x", Fr(7));
    t->absorb_g1("p", BilinearCtx::get().g1());
  }
  const Fr ca = a.challenge_scalar("c");
  CHECK(ca == b.challenge_scalar("c"));
  CHECK_FALSE(ca.isZero());
  CHECK_FALSE(a.challenge_scalar("c") == ca);
}

TEST_CASE("distinct labels give distinct challenges") {
  std::set<std::string> seen;
  for (int i = 0; i < 10000; ++i) {
    Transcript t("test");
    const Fr c = t.challenge_scalar("label-" + std::to_string(i));
    CHECK_FALSE(c.isZero());
    seen.insert(c.getStr(16));
  }
  CHECK(seen.size() == 10000);
}

TEST_CASE("domain and framing separate messages") {
  Transcript a("one"), b("two");
  CHECK_FALSE(a.challenge_scalar("c") == b.challenge_scalar("c"));
  Transcript c("d"), d("d");
  c.absorb("ab", Bytes{1, 2});
  d.absorb("a", Bytes{'b', 1, 2});
  CHECK_FALSE(c.challenge_scalar("c") == d.challenge_scalar("c"));
}

TEST_CASE("any flipped absorbed bit changes the challenge") {
  Rng rng(1);
  Bytes msg(64);
  for (auto& x : msg) x = static_cast<std::uint8_t>(rng.next());
  Transcript base("fork");
  base.absorb("m", msg);
  const Fr honest = base.challenge_scalar("c");
  for (int trial = 0; trial < 100; ++trial) {
    Bytes m = msg;
    const auto bit = rng.next() % (m.size() * 8);
    m[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    Transcript t("fork");
    t.absorb("m", m);
    CHECK_FALSE(t.challenge_scalar("c") == honest);
  }
}

TEST_CASE("merkle tree") {
  SUBCASE("single leaf") {
    const Bytes leaf{1, 2, 3};
    const auto tree = MerkleTree::build({leaf});
    CHECK(tree.root() == MerkleTree::hash_leaf(leaf));
    CHECK(tree.path(0).empty());
    CHECK(MerkleTree::verify(tree.root(), 0, leaf, tree.path(0)));
  }
  SUBCASE("tampered leaf fails") {
    const std::vector<Bytes> leaves{{0}, {1}, {2}, {3}};
    const auto tree = MerkleTree::build(leaves);
    CHECK(MerkleTree::verify(tree.root(), 2, leaves[2], tree.path(2)));
    CHECK_FALSE(MerkleTree::verify(tree.root(), 2, Bytes{9}, tree.path(2)));
    CHECK_FALSE(MerkleTree::verify(tree.root(), 1, leaves[2], tree.path(2)));
  }
  SUBCASE("three leaves padded to four, root by hand") {
    const std::vector<Bytes> leaves{{10}, {20}, {30}};
    const auto tree = MerkleTree::build(leaves);
    const Digest h0 = MerkleTree::hash_leaf(leaves[0]);
    const Digest h1 = MerkleTree::hash_leaf(leaves[1]);
    const Digest h2 = MerkleTree::hash_leaf(leaves[2]);
    const Digest root = MerkleTree::hash_node(MerkleTree::hash_node(h0, h1),
                                              MerkleTree::hash_node(h2, MerkleTree::empty_leaf()));
    CHECK(tree.root() == root);
    for (std::size_t i = 0; i < 3; ++i) CHECK(MerkleTree::verify(root, i, leaves[i], tree.path(i)));
    CHECK_THROWS_AS(tree.path(4), Error);
  }
  SUBCASE("single-bit path corruption is rejected") {
    Rng rng(2);
    std::vector<Bytes> leaves;
    for (int i = 0; i < 16; ++i) leaves.push_back(to_bytes(rng.scalar()));
    const auto tree = MerkleTree::build(leaves);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t i = rng.next() % 16;
      auto path = tree.path(i);
      const auto bit = rng.next() % (path.size() * 256);
      path[bit / 256][(bit % 256) / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
      CHECK_FALSE(MerkleTree::verify(tree.root(), i, leaves[i], path));
    }
  }
}

TEST_CASE("sparse digest ignores representation") {
  ScalarVec dense(8, Fr(0));
  dense[3] = Fr(1);
  CHECK(sparse_vector_digest(dense) == unit_vector_digest(8, 3, Fr(1)));
  CHECK_FALSE(sparse_vector_digest(dense) == unit_vector_digest(8, 4, Fr(1)));
  CHECK_FALSE(sparse_vector_digest(dense) == unit_vector_digest(16, 3, Fr(1)));
}

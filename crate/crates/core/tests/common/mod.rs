#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thompson_core::{BinaryTree, Element, Rational, TreePair};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Grows a tree from a caret at leaf `s % open` per entry, where only
/// leaves above `max_depth` are open.
pub fn tree_from_splits(splits: &[usize], max_depth: usize) -> BinaryTree {
    let mut t = BinaryTree::leaf();
    for &s in splits {
        let depths = t.leaf_depths();
        let open: Vec<usize> = (0..depths.len()).filter(|&i| depths[i] < max_depth).collect();
        t = t.graft(open[s % open.len()], &BinaryTree::caret()).unwrap();
    }
    t
}

pub fn pair_from_splits(plus: &[usize], minus: &[usize], max_depth: usize) -> TreePair {
    TreePair::new(tree_from_splits(plus, max_depth), tree_from_splits(minus, max_depth)).unwrap()
}

/// A random reduced pair with at most `max_carets + 1` leaves.
pub fn random_element(r: &mut impl Rng, max_carets: usize, max_depth: usize) -> Element {
    let k = r.gen_range(0..=max_carets);
    let mut splits = || (0..k).map(|_| r.gen::<usize>()).collect::<Vec<_>>();
    let (p, m) = (splits(), splits());
    Element::from_pair(pair_from_splits(&p, &m, max_depth))
}

pub fn random_nontrivial(r: &mut impl Rng, max_carets: usize) -> Element {
    loop {
        let g = random_element(r, max_carets, 8);
        if !g.is_identity() {
            return g;
        }
    }
}

pub fn random_rational(r: &mut impl Rng, max_den: i64) -> Rational {
    let d = r.gen_range(1..=max_den);
    let n = r.gen_range(0..=d);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn pair_strategy(max_carets: usize) -> impl Strategy<Value = TreePair> {
    (0..=max_carets).prop_flat_map(|k| {
        (prop::collection::vec(any::<usize>(), k), prop::collection::vec(any::<usize>(), k))
            .prop_map(|(p, m)| pair_from_splits(&p, &m, 8))
    })
}

pub fn element_strategy(max_carets: usize) -> impl Strategy<Value = Element> {
    pair_strategy(max_carets).prop_map(Element::from_pair)
}

pub fn rational_strategy() -> impl Strategy<Value = Rational> {
    (1i64..=4096).prop_flat_map(|d| (0..=d, Just(d))).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

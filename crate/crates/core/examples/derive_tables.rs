//! Searches small reduced pairs for the wrapper and basic-element tables
//! and the library's sample knots. Prints the first match per entry in
//! enumeration order (fewest leaves first), then checks the run family
//! used between 7/16 and 9/16.
//!
//! `cargo run --release -p thompson-core --example derive_tables`

use thompson_core::enumerate::{find_pair_where, FingerprintQuery};
use thompson_core::stabilizer::run_element;
use thompson_core::trees::{BinaryWord, TreePair};
use thompson_core::InvariantFingerprint;

const CAP: usize = 64;

fn disjoint(u: &BinaryWord, v: &BinaryWord) -> bool {
    let (ul, uh) = u.interval();
    let (vl, vh) = v.interval();
    vh < ul || uh < vl
}

fn has_attach_branch(p: &TreePair, u: &BinaryWord) -> bool {
    p.branches().iter().any(|b| b.is_fixed() && disjoint(u, &b.source))
}

fn search(name: &str, max: usize, pre: impl Fn(&TreePair) -> bool + Sync, query: &FingerprintQuery) {
    for n in 1..=max {
        if let Some(row) = find_pair_where(n, CAP, &pre, |r| query.matches(&r.fingerprint)).unwrap() {
            println!("{name}\t{n}\t{}", row.pair);
            return;
        }
    }
    println!("{name}\tnone up to {max} leaves");
}

fn main() {
    let unknot = FingerprintQuery::exact(&InvariantFingerprint::unknot());
    let w00: BinaryWord = "00".parse().unwrap();
    search("W00", 9, |p| p.fixed_branch_index(&w00).is_some(), &unknot);
    // expected to fail: a fixed 01 branch always splits off an unknot
    let w01: BinaryWord = "01".parse().unwrap();
    search("W01", 8, |p| p.fixed_branch_index(&w01).is_some(), &unknot);
    for u in ["000", "00100", "00101", "0011", "0100", "0101", "0110"] {
        let u: BinaryWord = u.parse().unwrap();
        search(&format!("g{u}"), 9, |p| p.fixed_branch_index(&u).is_some() && has_attach_branch(p, &u), &unknot);
    }
    search("trefoil", 9, |_| true, &"components=1,det=3".parse().unwrap());
    search("det5", 9, |_| true, &"det=5".parse().unwrap());
    for j in 2..=24 {
        let g = run_element(j).expect("run element verifies");
        println!("run {j}\t{} leaves", g.leaf_count());
    }
}

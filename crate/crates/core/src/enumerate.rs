//! Exhaustive enumeration of reduced tree pairs and their link invariants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jones::{InvariantFingerprint, LaurentPoly, LinkDiagram};
use crate::trees::{BinaryTree, TreePair};

/// All full binary trees with `n` leaves, ordered by serialization.
pub fn trees(n: usize) -> Vec<BinaryTree> {
    if n == 0 {
        return Vec::new();
    }
    let mut memo: Vec<Vec<BinaryTree>> = vec![Vec::new(), vec![BinaryTree::leaf()]];
    for m in 2..=n {
        let mut all = Vec::new();
        for k in 1..m {
            for l in &memo[k] {
                for r in &memo[m - k] {
                    all.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        memo.push(all);
    }
    let mut out = memo.swap_remove(n);
    out.sort_by_cached_key(|t| t.to_string());
    out
}

/// All reduced pairs with `n` leaves: plus tree major, minus tree minor,
/// both in serialization order.
pub fn reduced_pairs(n: usize) -> Vec<TreePair> {
    pairs_of(&trees(n)).collect()
}

fn pairs_of(ts: &[BinaryTree]) -> impl ParallelIterator<Item = TreePair> + '_ {
    ts.par_iter().flat_map_iter(move |p| {
        ts.iter().filter_map(move |m| {
            let pair = TreePair::new(p.clone(), m.clone()).expect("equal leaf counts");
            pair.is_reduced().then_some(pair)
        })
    })
}

/// One enumeration row.
#[derive(Clone, Debug)]
pub struct Row {
    pub pair: TreePair,
    pub fingerprint: InvariantFingerprint,
}

impl Row {
    pub fn of(pair: TreePair, cap: usize) -> Result<Row> {
        let fingerprint = InvariantFingerprint::of(&LinkDiagram::from_pair(&pair, false), cap)?;
        Ok(Row { pair, fingerprint })
    }

    pub const CSV_HEADER: &'static str = "pair,components,determinant,col2,col3,col5,col7,kauffman_f";

    pub fn to_csv(&self) -> String {
        let f = &self.fingerprint;
        let cols: Vec<String> = f.colorings.iter().map(|(_, n)| n.to_string()).collect();
        format!("\"{}\",{},{},{},\"{}\"", self.pair, f.components, f.determinant, cols.join(","), f.kauffman_f)
    }
}

/// Rows for every reduced `n`-leaf pair, in enumeration order.
pub fn enumerate(n: usize, cap: usize) -> Result<Vec<Row>> {
    reduced_pairs(n).into_par_iter().map(|p| Row::of(p, cap)).collect()
}

/// The first pair in enumeration order whose fingerprint matches.
pub fn find(n: usize, query: &FingerprintQuery, cap: usize) -> Result<Option<Row>> {
    find_pair(n, cap, |row| query.matches(&row.fingerprint))
}

/// The first reduced `n`-leaf pair passing `pre` (a cheap structural
/// filter) whose row satisfies `accept`.
pub fn find_pair(n: usize, cap: usize, accept: impl Fn(&Row) -> bool + Sync) -> Result<Option<Row>> {
    find_pair_where(n, cap, |_| true, accept)
}

pub fn find_pair_where(
    n: usize,
    cap: usize,
    pre: impl Fn(&TreePair) -> bool + Sync,
    accept: impl Fn(&Row) -> bool + Sync,
) -> Result<Option<Row>> {
    let ts = trees(n);
    let found = pairs_of(&ts)
        .filter(|p| pre(p))
        .map(|p| Row::of(p, cap).map(|r| accept(&r).then_some(r)))
        .find_first(|r| !matches!(r, Ok(None)));
    found.transpose().map(Option::flatten)
}

/// A partial fingerprint: `components=1,determinant=3,col3=9,f=<poly>`.
/// Unspecified fields match anything; `unknot` is shorthand for the full
/// unknot fingerprint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FingerprintQuery {
    pub components: Option<usize>,
    pub determinant: Option<BigUint>,
    pub colorings: BTreeMap<u32, BigUint>,
    pub kauffman_f: Option<LaurentPoly>,
}

impl FingerprintQuery {
    pub fn exact(f: &InvariantFingerprint) -> Self {
        FingerprintQuery {
            components: Some(f.components),
            determinant: Some(f.determinant.clone()),
            colorings: f.colorings.iter().cloned().collect(),
            kauffman_f: Some(f.kauffman_f.clone()),
        }
    }

    pub fn matches(&self, f: &InvariantFingerprint) -> bool {
        self.components.is_none_or(|c| c == f.components)
            && self.determinant.as_ref().is_none_or(|d| *d == f.determinant)
            && self.colorings.iter().all(|(p, n)| f.coloring(*p) == Some(n))
            && self.kauffman_f.as_ref().is_none_or(|k| *k == f.kauffman_f)
    }
}

impl FromStr for FingerprintQuery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "unknot" {
            return Ok(Self::exact(&InvariantFingerprint::unknot()));
        }
        let mut q = FingerprintQuery::default();
        let mut pos = 0;
        for part in s.split(',') {
            let err = |m: String| Error::syntax("fingerprint query", pos, &m);
            let (key, value) = part.split_once('=').ok_or_else(|| err(format!("expected key=value, got {part:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let num = |v: &str| v.parse::<BigUint>().map_err(|_| err(format!("expected a non-negative integer, got {v:?}")));
            match key {
                "components" => q.components = Some(value.parse().map_err(|_| err(format!("bad component count {value:?}")))?),
                "determinant" | "det" => q.determinant = Some(num(value)?),
                "f" | "kauffman_f" => q.kauffman_f = Some(value.parse()?),
                _ => match key.strip_prefix("col").and_then(|p| p.parse::<u32>().ok()) {
                    Some(p) if crate::jones::invariants::FINGERPRINT_PRIMES.contains(&p) => {
                        q.colorings.insert(p, num(value)?);
                    }
                    _ => return Err(err(format!("unknown key {key:?}"))),
                },
            }
            pos += part.len() + 1;
        }
        Ok(q)
    }
}

impl fmt::Display for FingerprintQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(c) = self.components {
            parts.push(format!("components={c}"));
        }
        if let Some(d) = &self.determinant {
            parts.push(format!("determinant={d}"));
        }
        for (p, n) in &self.colorings {
            parts.push(format!("col{p}={n}"));
        }
        if let Some(k) = &self.kauffman_f {
            parts.push(format!("f={k}"));
        }
        f.write_str(&parts.join(","))
    }
}

//! Elements of `Stab(r)` with prescribed links.
//!
//! For every `r` in `(0, 1)` other than `1/2` there is a nontrivial unknot
//! element `f` fixing `r` together with a fixed branch `v -> v` whose
//! interval stays clear of `r`. Gluing any `g` into that branch gives an
//! element of `Stab(r)` whose link is `L(g)`.

use std::fmt;

use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::analysis::{fixes, rational, BinaryExpansion, PlMap, Point, Rational};
use crate::error::{Error, Result};
use crate::group::Element;
use crate::jones::fingerprint;
use crate::trees::{BinaryTree, BinaryWord, Branch, TreePair};

/// A basic element `g_u`: nontrivial, the identity on `[u]`, with an
/// unknot link, and a second fixed branch whose closed interval misses
/// the closed interval of `u`.
#[derive(Clone, Debug)]
pub struct BasicElementRecord {
    pub u: BinaryWord,
    pub element: Element,
    pub attach_branch: Branch,
}

// Smallest reduced pairs (fewest leaves, then serialization order) with
// the branch u -> u, an unknot fingerprint and a disjoint fixed branch.
// `derive_tables` reproduces them.
const BASIC: [(&str, &str); 7] = [
    ("000", "(((.,(.,.)),.),(.,.));(((.,.),.),((.,.),.))"),
    ("00100", "(((.,((.,(.,.)),.)),.),(.,.));(((.,((.,.),.)),.),((.,.),.))"),
    ("00101", "((((.,.),((.,.),(.,.))),.),(.,.));(((.,(((.,.),.),.)),.),((.,.),.))"),
    ("0011", "(((((.,(.,.)),.),(.,.)),(.,.)),.);(((((.,.),.),((.,.),.)),.),(.,.))"),
    ("0100", "((.,((.,(.,.)),.)),(.,(.,.)));((.,((.,.),.)),(.,((.,.),.)))"),
    ("0101", "((((.,(.,.)),.),((.,.),(.,.))),.);((((.,.),.),(((.,.),.),.)),(.,.))"),
    ("0110", RUN_2),
];

// Unknot elements with the fixed branches 0110 and 01110, both also fixing
// 0000 at leaf 0. `deepen` turns 01^j0 into 01^(j+2)0.
const RUN_2: &str = "((((.,(.,.)),.),(.,(.,(.,.)))),.);((((.,.),.),((.,.),(.,.))),(.,.))";
const RUN_3: &str = "((((.,(.,.)),.),(.,(.,(.,(.,.))))),.);((((.,.),.),(.,((.,.),(.,.)))),(.,.))";

fn closed_disjoint(a: &BinaryWord, b: &BinaryWord) -> bool {
    let (a0, a1) = a.interval();
    let (b0, b1) = b.interval();
    a1 < b0 || b1 < a0
}

fn record(u: BinaryWord, element: Element) -> Result<BasicElementRecord> {
    let attach_branch = element
        .branches()
        .into_iter()
        .find(|b| b.is_fixed() && closed_disjoint(&b.source, &u))
        .ok_or_else(|| Error::Internal(format!("g_{u} has no fixed branch clear of [{u}]")))?;
    Ok(BasicElementRecord { u, element, attach_branch })
}

/// Checks every contract of a table entry.
pub fn verify_record(rec: &BasicElementRecord, cap: usize) -> Result<()> {
    let fail = |m: &str| Err(Error::Internal(format!("g_{}: {m}", rec.u)));
    if rec.element.is_identity() {
        return fail("identity");
    }
    if rec.element.pair().fixed_branch_index(&rec.u).is_none() {
        return fail("no u -> u branch");
    }
    let b = &rec.attach_branch;
    if !b.is_fixed() || rec.element.branches().get(b.index) != Some(b) || !closed_disjoint(&b.source, &rec.u) {
        return fail("bad attach branch");
    }
    if !fingerprint(&rec.element, cap)?.is_unknot() {
        return fail("link is not the unknot");
    }
    Ok(())
}

static TABLE: Lazy<Vec<BasicElementRecord>> = Lazy::new(|| {
    let base: Vec<BasicElementRecord> = BASIC
        .iter()
        .map(|(u, pair)| {
            let element = Element::from_reduced(pair.parse().expect("table pair parses")).expect("table pair is reduced");
            record(u.parse().unwrap(), element).expect("table entry has an attach branch")
        })
        .collect();
    let mirrored: Vec<BasicElementRecord> = base
        .iter()
        .map(|r| record(r.u.complement(), r.element.flip()).expect("mirror has an attach branch"))
        .collect();
    let table: Vec<BasicElementRecord> = base.into_iter().chain(mirrored).collect();
    for r in &table {
        verify_record(r, usize::MAX).expect("basic element table entry");
    }
    table
});

/// The seven base entries in lookup order, then their seven mirrors.
pub fn basic_table() -> &'static [BasicElementRecord] {
    &TABLE
}

pub fn basic_element(u: &BinaryWord) -> Result<&'static BasicElementRecord> {
    TABLE.iter().find(|r| r.u == *u).ok_or_else(|| Error::UnknownBasicAddress(u.to_string()))
}

/// Applies `f` to the subtree at address `w`.
fn map_at(t: &BinaryTree, w: &[bool], f: &dyn Fn(&BinaryTree) -> BinaryTree) -> Option<BinaryTree> {
    let Some((&bit, rest)) = w.split_first() else {
        return Some(f(t));
    };
    match t {
        BinaryTree::Leaf => None,
        BinaryTree::Node(l, r) if bit => Some(BinaryTree::node((**l).clone(), map_at(r, rest, f)?)),
        BinaryTree::Node(l, r) => Some(BinaryTree::node(map_at(l, rest, f)?, (**r).clone())),
    }
}

/// Rewrites the subtree `S` at address 01: `(., ((.,.), S))` above and
/// `((.,.), (., S))` below. A fixed branch `01^j 0` becomes `01^(j+2) 0`
/// and everything under 00 is kept.
pub fn deepen(pair: &TreePair) -> Option<TreePair> {
    let at = [false, true];
    let plus = map_at(pair.plus(), &at, &|s| {
        BinaryTree::node(BinaryTree::leaf(), BinaryTree::node(BinaryTree::caret(), s.clone()))
    })?;
    let minus = map_at(pair.minus(), &at, &|s| {
        BinaryTree::node(BinaryTree::caret(), BinaryTree::node(BinaryTree::leaf(), s.clone()))
    })?;
    TreePair::new(plus, minus).ok()
}

fn run_word(j: usize) -> BinaryWord {
    format!("0{}0", "1".repeat(j)).parse().unwrap()
}

/// An unknot element with the fixed branches `01^j 0` and `0000` (at leaf 0),
/// for `j >= 2`. Verified before it is returned.
pub fn run_element(j: usize) -> Result<Element> {
    if j < 2 {
        return Err(Error::Internal(format!("run length {j} below 2")));
    }
    let (base, steps) = if j.is_multiple_of(2) { (RUN_2, (j - 2) / 2) } else { (RUN_3, (j - 3) / 2) };
    let mut pair: TreePair = base.parse().expect("run base parses");
    for _ in 0..steps {
        pair = deepen(&pair).ok_or_else(|| Error::Internal("run base lost its 01 subtree".into()))?;
    }
    let g = Element::from_reduced(pair)?;
    let ok = g.pair().fixed_branch_index(&run_word(j)).is_some()
        && g.pair().fixed_branch_index(&"0000".parse().unwrap()) == Some(0)
        && fingerprint(&g, usize::MAX)?.is_unknot();
    if !ok {
        return Err(Error::Internal(format!("run element for j = {j} failed verification")));
    }
    Ok(g)
}

/// How [`unknot_stabilizer`] found its element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    /// A basic element `g_u` with `r` in the closed interval of `u`.
    Basic(BinaryWord),
    /// `r` lies in `[01^j 0]`, between 7/16 and 1/2.
    Run(usize),
    /// The mirror of `Run(j)`, for `r` between 1/2 and 9/16.
    MirroredRun(usize),
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Basic(u) => write!(f, "basic element g{u}"),
            Construction::Run(j) => write!(f, "run element fixing [{}]", run_word(*j)),
            Construction::MirroredRun(j) => write!(f, "mirrored run element fixing [{}]", run_word(*j).complement()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct UnknotStabilizer {
    pub element: Element,
    /// A fixed branch whose interval does not contain `r` in its interior.
    pub attach_branch: Branch,
    pub construction: Construction,
}

fn table_entry(u: &BinaryWord) -> UnknotStabilizer {
    let rec = basic_element(u).expect("table word");
    UnknotStabilizer {
        element: rec.element.clone(),
        attach_branch: rec.attach_branch.clone(),
        construction: Construction::Basic(u.clone()),
    }
}

fn run(j: usize, mirrored: bool) -> Result<UnknotStabilizer> {
    let g = run_element(j)?;
    if !mirrored {
        let attach_branch = g.branches()[0].clone();
        return Ok(UnknotStabilizer { element: g, attach_branch, construction: Construction::Run(j) });
    }
    let element = g.flip();
    let attach_branch = element.branches().pop().expect("nonempty");
    Ok(UnknotStabilizer { element, attach_branch, construction: Construction::MirroredRun(j) })
}

/// Like [`unknot_stabilizer`], with the branch to attach at.
pub fn unknot_stabilizer_with_branch(point: &Point) -> Result<UnknotStabilizer> {
    let base = &TABLE[..7];
    let mirrored = &TABLE[7..];
    match point {
        Point::Exact(r) => {
            if *r <= Rational::zero() || *r >= Rational::one() {
                return Err(Error::RNotInRange(r.to_string()));
            }
            let half = rational(1, 2);
            if *r == half {
                return Err(Error::RIsHalf);
            }
            let contains = |rec: &&BasicElementRecord| {
                let (lo, hi) = rec.u.interval();
                lo <= *r && *r <= hi
            };
            let table = if *r < half { base } else { mirrored };
            if let Some(rec) = table.iter().find(contains) {
                return Ok(table_entry(&rec.u));
            }
            let (e, flip) = if *r < half {
                (BinaryExpansion::of_rational(r)?, false)
            } else {
                (BinaryExpansion::of_rational(&(Rational::one() - r))?, true)
            };
            // r = 0.0 1^j 0 ..., with j >= 3 since r > 7/16
            run(e.first_zero_after(1)? - 1, flip)
        }
        Point::Truncated(w) => {
            for rec in base.iter().chain(mirrored) {
                if rec.u.is_prefix_of(w) {
                    return Ok(table_entry(&rec.u));
                }
            }
            let insufficient = Error::InsufficientPrecision { digits: w.len() };
            let e = BinaryExpansion::Truncated(w.clone());
            let (e, flip) = match w.bits().first() {
                Some(false) => (e, false),
                Some(true) => (e.complement(), true),
                None => return Err(insufficient),
            };
            if e.prefix(4) != Some("0111".parse().unwrap()) {
                return Err(insufficient);
            }
            run(e.first_zero_after(4)? - 1, flip)
        }
    }
}

/// A nontrivial element fixing `r` whose link is the unknot.
pub fn unknot_stabilizer(point: &Point) -> Result<Element> {
    Ok(unknot_stabilizer_with_branch(point)?.element)
}

/// `fixes` for exact points; for truncated ones, whether `g` is the
/// identity on every point with those digits.
pub fn fixes_point(g: &Element, point: &Point) -> bool {
    match point {
        Point::Exact(r) => fixes(g, r),
        Point::Truncated(w) => {
            let (lo, hi) = w.interval();
            PlMap::from_element(g).is_identity_on(&lo, &hi)
        }
    }
}

/// An element of `Stab(r)` whose link has the fingerprint of `L(g)`.
///
/// `cap` bounds the crossings of `L(g)`; the result is allowed the extra
/// crossings contributed by the stabilizing element. All guarantees are
/// checked before returning.
pub fn alexander_element(point: &Point, g: &Element, cap: usize) -> Result<Element> {
    if let Point::Exact(r) = point {
        if r.is_zero() || r.is_one() {
            return Ok(g.clone());
        }
    }
    let f = unknot_stabilizer_with_branch(point)?;
    let h = f.element.attach(f.attach_branch.index, g)?;
    if !fixes_point(&h, point) {
        return Err(Error::Internal(format!("{h} does not fix {point}")));
    }
    if h.is_identity() {
        return Err(Error::Internal("constructed the identity".into()));
    }
    let want = fingerprint(g, cap)?;
    let extra = 2 * (f.element.leaf_count() - 1);
    let got = fingerprint(&h, cap.saturating_add(extra))?;
    if got != want {
        return Err(Error::Internal(format!("fingerprint of {h} differs from the target's")));
    }
    Ok(h)
}

/// The element with trees `(a+, b+)` and `(a-, b-)`. It fixes 1/2, and its
/// link is `L(a) # L(b)` with a split unknot.
pub fn stab_half_join(a: &Element, b: &Element) -> Element {
    let (ap, bp) = (a.pair(), b.pair());
    let plus = BinaryTree::node(ap.plus().clone(), bp.plus().clone());
    let minus = BinaryTree::node(ap.minus().clone(), bp.minus().clone());
    Element::from_pair(TreePair::new(plus, minus).expect("equal leaf counts"))
}

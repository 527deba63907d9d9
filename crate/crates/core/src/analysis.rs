//! Exact piecewise-linear semantics of elements of F.
//!
//! Everything here is exact rational arithmetic. An element acts on `[0, 1]`
//! by mapping the leaf intervals of its plus-tree affinely onto the leaf
//! intervals of its minus-tree. Products compose left to right:
//! `(a * b)(x) = b(a(x))`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::Element;
use crate::trees::{BinaryTree, BinaryWord, TreePair};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `Some(k)` when `q = 2^k` (for a positive integer `q`).
fn log2_exact(q: &BigInt) -> Option<i64> {
    if !q.is_positive() {
        return None;
    }
    let tz = q.trailing_zeros()?;
    (q >> tz as usize).is_one().then_some(tz as i64)
}

pub fn is_dyadic(x: &Rational) -> bool {
    log2_exact(x.denom()).is_some()
}

/// `Some(k)` when `x = 2^k` for some integer `k`.
pub fn log2_power(x: &Rational) -> Option<i64> {
    if !x.is_positive() {
        return None;
    }
    if x.numer().is_one() {
        log2_exact(x.denom()).map(|k| -k)
    } else if x.denom().is_one() {
        log2_exact(x.numer())
    } else {
        None
    }
}

/// Orientation-preserving PL homeomorphism of `[0, 1]` with dyadic
/// breakpoints and power-of-two slopes. Breakpoints are kept minimal:
/// consecutive segments always have different slopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlMap {
    breakpoints: Vec<(Rational, Rational)>,
}

impl PlMap {
    /// Validates and normalizes a breakpoint list.
    pub fn new(breakpoints: Vec<(Rational, Rational)>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidPlMap(m.to_string()));
        let (Some(first), Some(last)) = (breakpoints.first(), breakpoints.last()) else {
            return bad("no breakpoints");
        };
        if !first.0.is_zero() || !first.1.is_zero() || !last.0.is_one() || !last.1.is_one() {
            return bad("must map 0 to 0 and 1 to 1");
        }
        for (x, y) in &breakpoints {
            if !is_dyadic(x) || !is_dyadic(y) {
                return bad(&format!("breakpoint ({x}, {y}) is not dyadic"));
            }
        }
        for w in breakpoints.windows(2) {
            let (dx, dy) = (&w[1].0 - &w[0].0, &w[1].1 - &w[0].1);
            if !dx.is_positive() || !dy.is_positive() {
                return bad("breakpoints must increase strictly in both coordinates");
            }
            if log2_power(&(dy / dx)).is_none() {
                return bad(&format!("slope between x = {} and x = {} is not a power of 2", w[0].0, w[1].0));
            }
        }
        Ok(Self::normalized(breakpoints))
    }

    fn normalized(points: Vec<(Rational, Rational)>) -> Self {
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
        for p in points {
            if out.len() >= 2 {
                let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
                let s1 = (&b.1 - &a.1) / (&b.0 - &a.0);
                let s2 = (&p.1 - &b.1) / (&p.0 - &b.0);
                if s1 == s2 {
                    out.pop();
                }
            }
            if out.last().is_none_or(|q| q.0 != p.0) {
                out.push(p);
            }
        }
        PlMap { breakpoints: out }
    }

    pub fn identity() -> Self {
        PlMap { breakpoints: vec![(Rational::zero(), Rational::zero()), (Rational::one(), Rational::one())] }
    }

    pub fn from_element(g: &Element) -> Self {
        Self::from_pair(g.pair())
    }

    /// Leaf interval `i` of the plus-tree goes affinely onto leaf interval `i`
    /// of the minus-tree.
    pub fn from_pair(pair: &TreePair) -> Self {
        let starts = |t: &BinaryTree| t.leaf_words().iter().map(|w| w.interval().0).collect::<Vec<_>>();
        let mut points: Vec<_> = starts(pair.plus()).into_iter().zip(starts(pair.minus())).collect();
        points.push((Rational::one(), Rational::one()));
        Self::normalized(points)
    }

    /// Inverse of [`PlMap::from_element`]: the reduced pair of this map.
    pub fn to_element(&self) -> Element {
        let mut sources = Vec::new();
        let mut targets = Vec::new();
        self.subdivide(BinaryWord::empty(), &mut sources, &mut targets);
        let plus = BinaryTree::from_leaf_words(&sources).expect("standard dyadic partition");
        let minus = BinaryTree::from_leaf_words(&targets).expect("standard dyadic partition");
        Element::from_pair(TreePair::new(plus, minus).expect("equal leaf counts"))
    }

    /// Splits the standard dyadic interval of `word` until each piece lies in
    /// one linear segment and is mapped onto a standard dyadic interval.
    fn subdivide(&self, word: BinaryWord, sources: &mut Vec<BinaryWord>, targets: &mut Vec<BinaryWord>) {
        let (a, b) = word.interval();
        let seg = self.segment_index(&a);
        let within = b <= self.breakpoints[seg + 1].0;
        if within {
            let (fa, fb) = (self.evaluate(&a), self.evaluate(&b));
            if let Some(image) = standard_interval_word(&fa, &fb) {
                sources.push(word);
                targets.push(image);
                return;
            }
        }
        let mut left = word.clone();
        left.push(false);
        let mut right = word;
        right.push(true);
        self.subdivide(left, sources, targets);
        self.subdivide(right, sources, targets);
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    /// Index of the segment `[x_k, x_{k+1})` containing `x` (the last
    /// segment for `x = 1`).
    fn segment_index(&self, x: &Rational) -> usize {
        let n = self.breakpoints.len();
        let k = self.breakpoints.partition_point(|(bx, _)| bx <= x);
        k.saturating_sub(1).min(n - 2)
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let k = self.segment_index(x);
        let (x0, y0) = &self.breakpoints[k];
        let (x1, y1) = &self.breakpoints[k + 1];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    pub fn slopes(&self) -> Vec<Rational> {
        self.breakpoints
            .windows(2)
            .map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0))
            .collect()
    }

    /// `log2` of the slope at 0 and at 1.
    pub fn endpoint_log_slopes(&self) -> (i64, i64) {
        let s = self.slopes();
        let first = log2_power(&s[0]).expect("power of two");
        let last = log2_power(&s[s.len() - 1]).expect("power of two");
        (first, last)
    }

    pub fn inverse(&self) -> PlMap {
        PlMap { breakpoints: self.breakpoints.iter().map(|(x, y)| (y.clone(), x.clone())).collect() }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &PlMap) -> PlMap {
        let mut xs: Vec<Rational> = self.breakpoints.iter().map(|(x, _)| x.clone()).collect();
        let inv = self.inverse();
        xs.extend(other.breakpoints.iter().map(|(y, _)| inv.evaluate(y)));
        xs.sort();
        xs.dedup();
        let points = xs.into_iter().map(|x| {
            let y = other.evaluate(&self.evaluate(&x));
            (x, y)
        });
        Self::normalized(points.collect())
    }

    /// Whether the map is the identity on `[lo, hi]`.
    pub fn is_identity_on(&self, lo: &Rational, hi: &Rational) -> bool {
        self.evaluate(lo) == *lo
            && self.evaluate(hi) == *hi
            && self.breakpoints.iter().filter(|(x, _)| x > lo && x < hi).all(|(x, y)| x == y)
    }
}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.breakpoints.iter().map(|(x, y)| format!("({x},{y})")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The word of `[a, b]` if it is a standard dyadic interval `[k/2^e, (k+1)/2^e]`.
fn standard_interval_word(a: &Rational, b: &Rational) -> Option<BinaryWord> {
    let width = b - a;
    let e = -log2_power(&width)?;
    if e < 0 {
        return None;
    }
    let scaled = a * Rational::from_integer(BigInt::one() << e as usize);
    if !scaled.is_integer() {
        return None;
    }
    let k = scaled.to_integer();
    let bits = (0..e).rev().map(|i| k.bit(i as u64)).collect();
    Some(BinaryWord::from_bits(bits))
}

impl BinaryTree {
    /// The tree whose leaves are exactly `words` (left to right), if they
    /// form a complete prefix code in order.
    pub fn from_leaf_words(words: &[BinaryWord]) -> Option<BinaryTree> {
        fn build(words: &[BinaryWord], depth: usize) -> Option<BinaryTree> {
            match words {
                [] => None,
                [w] if w.len() == depth => Some(BinaryTree::Leaf),
                _ => {
                    if words.iter().any(|w| w.len() <= depth) {
                        return None;
                    }
                    let split = words.partition_point(|w| !w.bits()[depth]);
                    let (l, r) = words.split_at(split);
                    if !r.iter().all(|w| w.bits()[depth]) {
                        return None;
                    }
                    Some(BinaryTree::node(build(l, depth + 1)?, build(r, depth + 1)?))
                }
            }
        }
        build(words, 0)
    }
}

/// Whether `g` fixes `r`: exact evaluation, no rounding.
pub fn fixes(g: &Element, r: &Rational) -> bool {
    PlMap::from_element(g).evaluate(r) == *r
}

pub fn evaluate(g: &Element, x: &Rational) -> Rational {
    PlMap::from_element(g).evaluate(x)
}

/// Membership in the commutator subgroup: the identity near 0 and near 1.
pub fn is_in_commutator(g: &Element) -> bool {
    PlMap::from_element(g).endpoint_log_slopes() == (0, 0)
}

/// Membership in `K(a, b)`: `log2 g'(0)` divisible by `a`, `log2 g'(1)` by `b`.
pub fn is_in_rectangular(g: &Element, a: u32, b: u32) -> bool {
    assert!(a > 0 && b > 0, "rectangular subgroup parameters are positive");
    let (l0, l1) = PlMap::from_element(g).endpoint_log_slopes();
    l0 % a as i64 == 0 && l1 % b as i64 == 0
}

/// First `count` binary digits of `r` in `[0, 1)`, by exact doubling.
/// Dyadic rationals get the terminating expansion.
pub fn digits(r: &Rational, count: usize) -> BinaryWord {
    let mut x = r.clone();
    let mut bits = Vec::with_capacity(count);
    let one = Rational::one();
    for _ in 0..count {
        x *= Rational::from_integer(2.into());
        if x >= one {
            bits.push(true);
            x -= &one;
        } else {
            bits.push(false);
        }
    }
    BinaryWord::from_bits(bits)
}

/// A binary digit stream for a point of `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BinaryExpansion {
    /// `0.preperiod (period)^ω`, with a nonempty period. Dyadic points use
    /// the period `0`.
    Periodic { preperiod: BinaryWord, period: BinaryWord },
    /// Finitely many known digits of an otherwise unknown point.
    Truncated(BinaryWord),
}

impl BinaryExpansion {
    /// Eventually periodic expansion of `r` in `[0, 1)` by long division.
    pub fn of_rational(r: &Rational) -> Result<Self> {
        if r.is_negative() || *r >= Rational::one() {
            return Err(Error::RNotInRange(r.to_string()));
        }
        let den = r.denom().clone();
        let mut rem = r.numer().clone();
        let mut seen = std::collections::HashMap::new();
        let mut bits = Vec::new();
        loop {
            if let Some(&start) = seen.get(&rem) {
                let preperiod = BinaryWord::from_bits(bits[..start].to_vec());
                let period = BinaryWord::from_bits(bits[start..].to_vec());
                return Ok(BinaryExpansion::Periodic { preperiod, period });
            }
            seen.insert(rem.clone(), bits.len());
            rem <<= 1;
            if rem >= den {
                bits.push(true);
                rem -= &den;
            } else {
                bits.push(false);
            }
        }
    }

    /// Digit `i` (0-based, the `2^-(i+1)` place), or `None` past the known
    /// digits of a truncated expansion.
    pub fn digit(&self, i: usize) -> Option<bool> {
        match self {
            BinaryExpansion::Periodic { preperiod, period } => {
                let p = preperiod.bits();
                Some(if i < p.len() { p[i] } else { period.bits()[(i - p.len()) % period.len()] })
            }
            BinaryExpansion::Truncated(w) => w.bits().get(i).copied(),
        }
    }

    pub fn prefix(&self, count: usize) -> Option<BinaryWord> {
        (0..count).map(|i| self.digit(i)).collect::<Option<Vec<_>>>().map(BinaryWord::from_bits)
    }

    /// Index of the first `0` digit at or after `pos`.
    pub fn first_zero_after(&self, pos: usize) -> Result<usize> {
        // a periodic tail either shows a zero within one period or never does
        let limit = match self {
            BinaryExpansion::Periodic { preperiod, period } => pos.max(preperiod.len()) + period.len(),
            BinaryExpansion::Truncated(w) => w.len(),
        };
        (pos..limit)
            .find(|&i| self.digit(i) == Some(false))
            .ok_or(Error::InsufficientPrecision { digits: limit })
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            BinaryExpansion::Periodic { preperiod, period } => {
                let (pre, _) = preperiod.interval();
                let (per, _) = period.interval();
                // 0.p(q)^ω = p/2^m + q/(2^n - 1) / 2^m as fractions of their word values
                let scale = Rational::from_integer(BigInt::one() << preperiod.len());
                let cycle = Rational::from_integer(BigInt::one() << period.len());
                let tail = per * &cycle / (cycle - Rational::one());
                Some(pre + tail / scale)
            }
            BinaryExpansion::Truncated(_) => None,
        }
    }

    /// Digits with every bit complemented: the expansion of `1 - r`.
    pub fn complement(&self) -> BinaryExpansion {
        match self {
            BinaryExpansion::Periodic { preperiod, period } => BinaryExpansion::Periodic {
                preperiod: preperiod.complement(),
                period: period.complement(),
            },
            BinaryExpansion::Truncated(w) => BinaryExpansion::Truncated(w.complement()),
        }
    }

    /// Drops the first `k` digits.
    pub fn shift(&self, k: usize) -> BinaryExpansion {
        match self {
            BinaryExpansion::Periodic { preperiod, period } => {
                if k <= preperiod.len() {
                    BinaryExpansion::Periodic {
                        preperiod: BinaryWord::from_bits(preperiod.bits()[k..].to_vec()),
                        period: period.clone(),
                    }
                } else {
                    let rot = (k - preperiod.len()) % period.len();
                    let mut bits = period.bits()[rot..].to_vec();
                    bits.extend_from_slice(&period.bits()[..rot]);
                    BinaryExpansion::Periodic { preperiod: BinaryWord::empty(), period: BinaryWord::from_bits(bits) }
                }
            }
            BinaryExpansion::Truncated(w) => {
                BinaryExpansion::Truncated(BinaryWord::from_bits(w.bits().get(k..).unwrap_or(&[]).to_vec()))
            }
        }
    }
}

impl fmt::Display for BinaryExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |w: &BinaryWord| w.bits().iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        match self {
            BinaryExpansion::Periodic { preperiod, period } => {
                write!(f, "0.{}({})", bits(preperiod), bits(period))
            }
            BinaryExpansion::Truncated(w) => write!(f, "0.{}...", bits(w)),
        }
    }
}

/// A point of `[0, 1]`: an exact rational or finitely many binary digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Exact(Rational),
    Truncated(BinaryWord),
}

impl Point {
    pub fn expansion(&self) -> Result<BinaryExpansion> {
        match self {
            Point::Exact(r) => BinaryExpansion::of_rational(r),
            Point::Truncated(w) => Ok(BinaryExpansion::Truncated(w.clone())),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Point::Exact(r) => Some(r),
            Point::Truncated(_) => None,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Exact(r) => write!(f, "{r}"),
            Point::Truncated(w) => write!(f, "{}", BinaryExpansion::Truncated(w.clone())),
        }
    }
}

/// Accepts `p/q`, integers, `0.b…b` (exact, terminating), `0.b…b(period)`
/// and `0.b…b...` (truncated digits of an unknown point).
impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = |pos: usize, m: &str| Error::syntax("point", pos, m);
        if let Some(rest) = s.strip_prefix("0.") {
            let (body, truncated) = match rest.strip_suffix("...").or_else(|| rest.strip_suffix('…')) {
                Some(b) => (b, true),
                None => (rest, false),
            };
            let (pre, period) = match body.find('(') {
                Some(i) => {
                    let Some(inner) = body[i + 1..].strip_suffix(')') else {
                        return Err(err(2 + body.len(), "expected ')' closing the period"));
                    };
                    (&body[..i], Some(inner))
                }
                None => (body, None),
            };
            let word = |t: &str, at: usize| {
                t.parse::<BinaryWord>().map_err(|e| match e {
                    Error::Syntax { pos, msg, .. } => err(at + pos, &msg),
                    other => other,
                })
            };
            let pre_w = if pre.is_empty() { BinaryWord::empty() } else { word(pre, 2)? };
            if truncated {
                if period.is_some() {
                    return Err(err(2, "a truncated expansion has no period"));
                }
                return Ok(Point::Truncated(pre_w));
            }
            let period_w = match period {
                Some(p) if !p.is_empty() => word(p, 3 + pre.len())?,
                Some(_) => return Err(err(3 + pre.len(), "empty period")),
                None => "0".parse().unwrap(),
            };
            let e = BinaryExpansion::Periodic { preperiod: pre_w, period: period_w };
            return Ok(Point::Exact(e.to_rational().expect("periodic")));
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = num.parse().map_err(|_| err(0, "bad numerator"))?;
        let d: BigInt = den.parse().map_err(|_| err(num.len() + 1, "bad denominator"))?;
        if d.is_zero() {
            return Err(err(num.len() + 1, "zero denominator"));
        }
        Ok(Point::Exact(Rational::new(n, d)))
    }
}

/// Parses `p/q` (or an exact binary literal) to a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    match s.parse::<Point>()? {
        Point::Exact(r) => Ok(r),
        Point::Truncated(_) => Err(Error::syntax("rational", 0, "truncated expansion is not an exact rational")),
    }
}

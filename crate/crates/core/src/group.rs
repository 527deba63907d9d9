//! Thompson's group F as reduced tree pairs.
//!
//! An [`Element`] always holds the unique reduced representative of its
//! class, so equality of elements is structural equality of pairs.
//! Multiplication reads left to right: `a.multiply(&b)` applies `a` first.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::trees::{BinaryTree, BinaryWord, Branch, TreePair};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pair: TreePair,
}

impl Element {
    pub fn identity() -> Self {
        Element { pair: TreePair::trivial() }
    }

    /// The element represented by any (possibly unreduced) pair.
    pub fn from_pair(pair: TreePair) -> Self {
        Element { pair: pair.reduce() }
    }

    /// Wraps a pair that must already be reduced.
    pub fn from_reduced(pair: TreePair) -> Result<Self> {
        if !pair.is_reduced() {
            return Err(Error::Internal(format!("pair {pair} is not reduced")));
        }
        Ok(Element { pair })
    }

    pub fn pair(&self) -> &TreePair {
        &self.pair
    }

    pub fn leaf_count(&self) -> usize {
        self.pair.leaf_count()
    }

    pub fn is_identity(&self) -> bool {
        self.pair.leaf_count() == 1
    }

    pub fn branches(&self) -> Vec<Branch> {
        self.pair.branches()
    }

    /// `x_n`: the identity on `[0, 1 - 2^-n]`, a rescaled `x_0` above it.
    pub fn generator(n: usize) -> Self {
        let x0 = TreePair::new_unchecked(BinaryTree::left_comb(3), BinaryTree::right_comb(3));
        let host = BinaryTree::right_comb(n + 1);
        let plus = host.graft(n, x0.plus()).expect("last leaf");
        let minus = host.graft(n, x0.minus()).expect("last leaf");
        Element { pair: TreePair::new_unchecked(plus, minus) }
    }

    /// Product via the common refinement `C` of `self.minus` and `other.plus`.
    pub fn multiply(&self, other: &Element) -> Element {
        let (a_plus, a_minus) = (self.pair.plus(), self.pair.minus());
        let (b_plus, b_minus) = (other.pair.plus(), other.pair.minus());
        let common = a_minus.union(b_plus);
        let plus = a_plus.graft_all(&a_minus.refinement_pieces(&common));
        let minus = b_minus.graft_all(&b_plus.refinement_pieces(&common));
        Element::from_pair(TreePair::new_unchecked(plus, minus))
    }

    pub fn inverse(&self) -> Element {
        Element { pair: self.pair.swap() }
    }

    pub fn pow(&self, k: i64) -> Element {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Element::identity(), |acc, _| acc.multiply(&base))
    }

    pub fn conjugate_by(&self, h: &Element) -> Element {
        h.inverse().multiply(self).multiply(h)
    }

    /// Mirror image under `x -> 1 - x`: both trees reflected left to right.
    pub fn flip(&self) -> Element {
        Element { pair: self.pair.mirror() }
    }

    /// `self ∘_index other`: glues `other`'s trees into leaf `index`.
    ///
    /// Gluing two reduced pairs never produces a common caret, so the
    /// result is returned as is; a reducible result is reported as an
    /// internal error.
    pub fn attach(&self, index: usize, other: &Element) -> Result<Element> {
        let glued = self.pair.attach(index, &other.pair)?;
        if let Some(i) = glued.reducible_indices().first() {
            return Err(Error::Internal(format!(
                "attaching {other} at leaf {index} of {self} left a common caret at leaf {i}"
            )));
        }
        Ok(Element { pair: glued })
    }

    /// `A_w(self)`: a nontrivial element acting on the interval of `w` as
    /// an affine copy of `self`.
    ///
    /// For `w` in {00, 11} the link is `L(self)`. For {01, 10} it is
    /// `L(self)` with split unknots added (one for the identity, two
    /// otherwise); see [`wrapper`].
    pub fn wrap(&self, code: WrapCode) -> Element {
        let w = wrapper(code);
        Element::from_pair(w.skeleton.attach(w.leaf, &self.pair).expect("wrapper leaf is in range"))
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.multiply(rhs)
    }
}

impl Mul<&Element> for Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.multiply(rhs)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.pair.fmt(f)
    }
}

/// Parses a generator word like `x0^-1 x1 x0`; `id` and `1` denote the
/// identity. Each factor is `xN` with an optional `^k`, `^+k` or `^-k`.
pub fn parse_word(s: &str) -> Result<Element> {
    let err = |pos: usize, m: &str| Error::syntax("word", pos, m);
    let trimmed = s.trim();
    if trimmed == "id" || trimmed == "1" {
        return Ok(Element::identity());
    }
    let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let at = |i: usize| chars.get(i).map(|&(p, _)| p).unwrap_or(s.len());
    let number = |i: &mut usize| -> Option<u64> {
        let start = *i;
        while chars.get(*i).is_some_and(|(_, c)| c.is_ascii_digit()) {
            *i += 1;
        }
        let digits: String = chars[start..*i].iter().map(|&(_, c)| c).collect();
        digits.parse().ok()
    };
    if chars.is_empty() {
        return Err(err(0, "empty word"));
    }
    let mut i = 0;
    let mut result = Element::identity();
    while i < chars.len() {
        if chars[i].1 != 'x' {
            return Err(err(at(i), &format!("expected 'x', found {:?}", chars[i].1)));
        }
        i += 1;
        if chars.get(i).is_some_and(|&(_, c)| c == '_') {
            i += 1;
        }
        if chars.get(i).is_some_and(|&(_, c)| c == '-') {
            return Err(err(at(i), "negative generator index"));
        }
        let Some(n) = number(&mut i) else {
            return Err(err(at(i), "expected generator index"));
        };
        let mut exp: i64 = 1;
        if chars.get(i).is_some_and(|&(_, c)| c == '^') {
            i += 1;
            let sign = match chars.get(i).map(|&(_, c)| c) {
                Some('-') => {
                    i += 1;
                    -1
                }
                Some('+') => {
                    i += 1;
                    1
                }
                _ => 1,
            };
            let Some(k) = number(&mut i) else {
                return Err(err(at(i), "expected exponent"));
            };
            exp = sign * k as i64;
        }
        result = result.multiply(&Element::generator(n as usize).pow(exp));
    }
    Ok(result)
}

/// Accepts a pair (`T;T`, reduced on the way in) or a generator word.
impl FromStr for Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains(';') {
            Ok(Element::from_pair(s.parse()?))
        } else {
            parse_word(s)
        }
    }
}

/// The four wrapping operations, named by the address they wrap into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WrapCode {
    W00,
    W01,
    W10,
    W11,
}

impl WrapCode {
    pub const ALL: [WrapCode; 4] = [WrapCode::W00, WrapCode::W01, WrapCode::W10, WrapCode::W11];

    pub fn word(self) -> BinaryWord {
        let s = match self {
            WrapCode::W00 => "00",
            WrapCode::W01 => "01",
            WrapCode::W10 => "10",
            WrapCode::W11 => "11",
        };
        s.parse().unwrap()
    }

    pub fn flipped(self) -> WrapCode {
        match self {
            WrapCode::W00 => WrapCode::W11,
            WrapCode::W01 => WrapCode::W10,
            WrapCode::W10 => WrapCode::W01,
            WrapCode::W11 => WrapCode::W00,
        }
    }
}

impl fmt::Display for WrapCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.word())
    }
}

impl FromStr for WrapCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('A');
        WrapCode::ALL
            .into_iter()
            .find(|c| c.word().to_string() == s)
            .ok_or_else(|| Error::syntax("wrap code", 0, format!("unknown wrap code {s:?}")))
    }
}

/// A wrapping skeleton `W` with its designated leaf, carrying the branch
/// `w -> w`. `A_w(g)` is `W` with `g` glued into that leaf, then reduced.
#[derive(Clone, Debug)]
pub struct Wrapper {
    pub code: WrapCode,
    pub skeleton: TreePair,
    pub leaf: usize,
}

impl Wrapper {
    /// The wrapper as an element, i.e. `A_w(id)`.
    pub fn element(&self) -> Element {
        Element::from_pair(self.skeleton.clone())
    }
}

// The smallest reduced pair with the branch 00 -> 00 and an unknot link.
const WRAPPER_00: &str = "((.,(.,.)),.);((.,.),(.,.))";

// x1 with its leaf 0 split, so that 01 -> 01 is a leaf of both trees. No
// unknot wrapper for 01 exists at all: a pair with the branch 01 -> 01 has
// a plus and a minus root both split at the 0|1 boundary, and the outer
// edge together with that gap edge closes up into a split component. This
// skeleton gives two of them, so A_01(g) is L(g) with two split unknots.
const WRAPPER_01: &str = "((.,.),((.,.),.));((.,.),(.,(.,.)))";

static WRAPPERS: Lazy<[Wrapper; 4]> = Lazy::new(|| {
    let base = |code: WrapCode, src: &str| {
        let skeleton: TreePair = src.parse().expect("wrapper pair parses");
        let leaf = skeleton.fixed_branch_index(&code.word()).expect("wrapper carries w -> w");
        Wrapper { code, skeleton, leaf }
    };
    let w00 = base(WrapCode::W00, WRAPPER_00);
    let w01 = base(WrapCode::W01, WRAPPER_01);
    let mirror = |w: &Wrapper| Wrapper {
        code: w.code.flipped(),
        leaf: w.skeleton.leaf_count() - 1 - w.leaf,
        skeleton: w.skeleton.mirror(),
    };
    let w11 = mirror(&w00);
    let w10 = mirror(&w01);
    [w00, w01, w10, w11]
});

pub fn wrapper(code: WrapCode) -> &'static Wrapper {
    &WRAPPERS[code as usize]
}

//! Full binary trees, tree pairs and their leaf addressing.
//!
//! A leaf is addressed by the word of left (`0`) / right (`1`) turns taken
//! from the root. The leaf words of a tree, read left to right, are strictly
//! increasing in the order where a proper prefix never occurs (full trees
//! have no internal leaves) and so plain lexicographic order applies.
//!
//! Text grammar:
//!
//! ```text
//! tree := "." | "(" tree "," tree ")"
//! pair := tree ";" tree
//! ```
//!
//! Whitespace is ignored everywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::analysis::Rational;
use crate::error::{Error, Result};

/// A finite word over `{0, 1}`; the empty word addresses the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(Vec<bool>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BinaryWord(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BinaryWord(bits)
    }

    pub fn is_prefix_of(&self, other: &BinaryWord) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Complements every bit (the address of the mirrored leaf).
    pub fn complement(&self) -> BinaryWord {
        BinaryWord(self.0.iter().map(|b| !b).collect())
    }

    /// The dyadic interval `[a, a + 2^-len]` addressed by this word, with
    /// `a = sum w_i 2^-i`.
    pub fn interval(&self) -> (Rational, Rational) {
        let mut num = BigInt::zero();
        for &b in &self.0 {
            num <<= 1;
            if b {
                num += 1;
            }
        }
        let den = BigInt::one() << self.0.len();
        let start = Rational::new(num.clone(), den.clone());
        let end = Rational::new(num + 1, den);
        (start, end)
    }
}

/// The dyadic interval of a leaf word, as `[start, end]`.
pub fn leaf_interval(word: &BinaryWord) -> (Rational, Rational) {
    word.interval()
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" {
            return Ok(BinaryWord::empty());
        }
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::syntax("binary word", pos, format!("unexpected {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord)
    }
}

/// A full binary tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree::Leaf
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn caret() -> Self {
        BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf)
    }

    /// Left comb `(((.,.),.),...)` with `n` leaves.
    pub fn left_comb(n: usize) -> Self {
        assert!(n >= 1);
        (1..n).fold(BinaryTree::Leaf, |t, _| BinaryTree::node(t, BinaryTree::Leaf))
    }

    /// Right comb `(.,(.,(...)))` with `n` leaves.
    pub fn right_comb(n: usize) -> Self {
        assert!(n >= 1);
        (1..n).fold(BinaryTree::Leaf, |t, _| BinaryTree::node(BinaryTree::Leaf, t))
    }

    /// The smallest tree having `word` as a leaf.
    pub fn spine(word: &BinaryWord) -> Self {
        word.bits().iter().rev().fold(BinaryTree::Leaf, |t, &b| {
            if b {
                BinaryTree::node(BinaryTree::Leaf, t)
            } else {
                BinaryTree::node(t, BinaryTree::Leaf)
            }
        })
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn internal_count(&self) -> usize {
        self.leaf_count() - 1
    }

    pub fn depth(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Leaf addresses, left to right.
    pub fn leaf_words(&self) -> Vec<BinaryWord> {
        fn walk(t: &BinaryTree, prefix: &mut Vec<bool>, out: &mut Vec<BinaryWord>) {
            match t {
                BinaryTree::Leaf => out.push(BinaryWord(prefix.clone())),
                BinaryTree::Node(l, r) => {
                    prefix.push(false);
                    walk(l, prefix, out);
                    prefix.pop();
                    prefix.push(true);
                    walk(r, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::with_capacity(self.leaf_count());
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn leaf_depths(&self) -> Vec<usize> {
        fn walk(t: &BinaryTree, d: usize, out: &mut Vec<usize>) {
            match t {
                BinaryTree::Leaf => out.push(d),
                BinaryTree::Node(l, r) => {
                    walk(l, d + 1, out);
                    walk(r, d + 1, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// Index of the leaf with address `word`, if it is a leaf of this tree.
    pub fn leaf_index(&self, word: &BinaryWord) -> Option<usize> {
        let mut t = self;
        let mut offset = 0;
        for &b in word.bits() {
            match t {
                BinaryTree::Leaf => return None,
                BinaryTree::Node(l, r) => {
                    if b {
                        offset += l.leaf_count();
                        t = r;
                    } else {
                        t = l;
                    }
                }
            }
        }
        t.is_leaf().then_some(offset)
    }

    /// Left-right mirror image.
    pub fn mirror(&self) -> BinaryTree {
        match self {
            BinaryTree::Leaf => BinaryTree::Leaf,
            BinaryTree::Node(l, r) => BinaryTree::node(r.mirror(), l.mirror()),
        }
    }

    /// Indices `i` such that leaves `i` and `i + 1` hang from a common caret.
    pub fn caret_indices(&self) -> Vec<usize> {
        fn walk(t: &BinaryTree, offset: usize, out: &mut Vec<usize>) -> usize {
            match t {
                BinaryTree::Leaf => 1,
                BinaryTree::Node(l, r) => {
                    if l.is_leaf() && r.is_leaf() {
                        out.push(offset);
                        return 2;
                    }
                    let nl = walk(l, offset, out);
                    nl + walk(r, offset + nl, out)
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// Replaces leaf `index` by `subtree`.
    pub fn graft(&self, index: usize, subtree: &BinaryTree) -> Result<BinaryTree> {
        let n = self.leaf_count();
        if index >= n {
            return Err(Error::IndexOutOfRange { index, len: n });
        }
        Ok(self.graft_unchecked(index, subtree))
    }

    fn graft_unchecked(&self, index: usize, subtree: &BinaryTree) -> BinaryTree {
        match self {
            BinaryTree::Leaf => subtree.clone(),
            BinaryTree::Node(l, r) => {
                let nl = l.leaf_count();
                if index < nl {
                    BinaryTree::node(l.graft_unchecked(index, subtree), (**r).clone())
                } else {
                    BinaryTree::node((**l).clone(), r.graft_unchecked(index - nl, subtree))
                }
            }
        }
    }

    /// Replaces leaves left to right by the given subtrees.
    pub fn graft_all(&self, subtrees: &[BinaryTree]) -> BinaryTree {
        fn walk<'a>(t: &BinaryTree, it: &mut impl Iterator<Item = &'a BinaryTree>) -> BinaryTree {
            match t {
                BinaryTree::Leaf => it.next().expect("one subtree per leaf").clone(),
                BinaryTree::Node(l, r) => {
                    let l = walk(l, it);
                    BinaryTree::node(l, walk(r, it))
                }
            }
        }
        assert_eq!(subtrees.len(), self.leaf_count());
        walk(self, &mut subtrees.iter())
    }

    /// Collapses the caret holding leaves `index`, `index + 1` into a leaf.
    /// Returns `None` when those leaves are not siblings.
    pub fn remove_caret(&self, index: usize) -> Option<BinaryTree> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(l, r) => {
                if index == 0 && l.is_leaf() && r.is_leaf() {
                    return Some(BinaryTree::Leaf);
                }
                let nl = l.leaf_count();
                if index + 1 < nl {
                    Some(BinaryTree::node(l.remove_caret(index)?, (**r).clone()))
                } else if index >= nl {
                    Some(BinaryTree::node((**l).clone(), r.remove_caret(index - nl)?))
                } else {
                    None
                }
            }
        }
    }

    /// The coarsest common refinement: the union of both trees' carets.
    pub fn union(&self, other: &BinaryTree) -> BinaryTree {
        match (self, other) {
            (BinaryTree::Leaf, t) | (t, BinaryTree::Leaf) => t.clone(),
            (BinaryTree::Node(a, b), BinaryTree::Node(c, d)) => {
                BinaryTree::node(a.union(c), b.union(d))
            }
        }
    }

    /// For a refinement `fine` of `self`, the subtrees of `fine` hanging
    /// below each leaf of `self`, left to right.
    pub fn refinement_pieces(&self, fine: &BinaryTree) -> Vec<BinaryTree> {
        fn walk(coarse: &BinaryTree, fine: &BinaryTree, out: &mut Vec<BinaryTree>) {
            match (coarse, fine) {
                (BinaryTree::Leaf, f) => out.push(f.clone()),
                (BinaryTree::Node(a, b), BinaryTree::Node(c, d)) => {
                    walk(a, c, out);
                    walk(b, d, out);
                }
                (BinaryTree::Node(..), BinaryTree::Leaf) => {
                    panic!("refinement_pieces: argument does not refine the tree")
                }
            }
        }
        let mut out = Vec::with_capacity(self.leaf_count());
        walk(self, fine, &mut out);
        out
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

struct Parser<'a> {
    what: &'static str,
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(what: &'static str, src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { what, chars, pos: 0, src }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self.src.len())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(Error::syntax(self.what, self.offset(), format!("expected {want:?}, found {c:?}"))),
            None => Err(Error::syntax(self.what, self.offset(), format!("expected {want:?}, found end of input"))),
        }
    }

    fn tree(&mut self) -> Result<BinaryTree> {
        match self.peek() {
            Some('.') => {
                self.pos += 1;
                Ok(BinaryTree::Leaf)
            }
            Some('(') => {
                self.pos += 1;
                let l = self.tree()?;
                self.expect(',')?;
                let r = self.tree()?;
                self.expect(')')?;
                Ok(BinaryTree::node(l, r))
            }
            Some(c) => Err(Error::syntax(self.what, self.offset(), format!("expected '.' or '(', found {c:?}"))),
            None => Err(Error::syntax(self.what, self.offset(), "unexpected end of input")),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::syntax(self.what, self.offset(), format!("trailing input {c:?}"))),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new("tree", s);
        let t = p.tree()?;
        p.finish()?;
        Ok(t)
    }
}

/// One leaf correspondence `source -> target` of a tree pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Branch {
    pub source: BinaryWord,
    pub target: BinaryWord,
    pub index: usize,
}

impl Branch {
    /// `source == target`: the pair acts as the identity on this leaf's interval.
    pub fn is_fixed(&self) -> bool {
        self.source == self.target
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}", self.source, self.target)
    }
}

/// Two trees with equally many leaves; not necessarily reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreePair {
    plus: BinaryTree,
    minus: BinaryTree,
}

impl TreePair {
    pub fn new(plus: BinaryTree, minus: BinaryTree) -> Result<Self> {
        let (p, m) = (plus.leaf_count(), minus.leaf_count());
        if p != m {
            return Err(Error::LeafCountMismatch { plus: p, minus: m });
        }
        Ok(TreePair { plus, minus })
    }

    pub(crate) fn new_unchecked(plus: BinaryTree, minus: BinaryTree) -> Self {
        debug_assert_eq!(plus.leaf_count(), minus.leaf_count());
        TreePair { plus, minus }
    }

    pub fn trivial() -> Self {
        TreePair { plus: BinaryTree::Leaf, minus: BinaryTree::Leaf }
    }

    pub fn plus(&self) -> &BinaryTree {
        &self.plus
    }

    pub fn minus(&self) -> &BinaryTree {
        &self.minus
    }

    pub fn into_trees(self) -> (BinaryTree, BinaryTree) {
        (self.plus, self.minus)
    }

    pub fn leaf_count(&self) -> usize {
        self.plus.leaf_count()
    }

    pub fn swap(&self) -> TreePair {
        TreePair { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    pub fn mirror(&self) -> TreePair {
        TreePair { plus: self.plus.mirror(), minus: self.minus.mirror() }
    }

    pub fn branches(&self) -> Vec<Branch> {
        self.plus
            .leaf_words()
            .into_iter()
            .zip(self.minus.leaf_words())
            .enumerate()
            .map(|(index, (source, target))| Branch { source, target, index })
            .collect()
    }

    /// Index of the branch `word -> word`, if present.
    pub fn fixed_branch_index(&self, word: &BinaryWord) -> Option<usize> {
        let i = self.plus.leaf_index(word)?;
        (self.minus.leaf_index(word) == Some(i)).then_some(i)
    }

    pub fn insert_caret(&self, index: usize) -> Result<TreePair> {
        let caret = BinaryTree::caret();
        Ok(TreePair {
            plus: self.plus.graft(index, &caret)?,
            minus: self.minus.graft(index, &caret)?,
        })
    }

    /// Leaf indices `i` at which both trees have a caret on leaves `i, i+1`.
    pub fn reducible_indices(&self) -> Vec<usize> {
        let minus = self.minus.caret_indices();
        self.plus
            .caret_indices()
            .into_iter()
            .filter(|i| minus.binary_search(i).is_ok())
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.reducible_indices().is_empty()
    }

    /// Removes the common caret on leaves `index, index + 1`, if there is one.
    pub fn reduce_at(&self, index: usize) -> Option<TreePair> {
        let plus = self.plus.remove_caret(index)?;
        let minus = self.minus.remove_caret(index)?;
        Some(TreePair { plus, minus })
    }

    /// Removes common carets until none is left.
    pub fn reduce(&self) -> TreePair {
        let mut pair = self.clone();
        while let Some(&i) = pair.reducible_indices().first() {
            pair = pair.reduce_at(i).expect("reducible index");
        }
        pair
    }

    /// Glues `other` into leaf `index` of both trees.
    pub fn attach(&self, index: usize, other: &TreePair) -> Result<TreePair> {
        Ok(TreePair {
            plus: self.plus.graft(index, &other.plus)?,
            minus: self.minus.graft(index, &other.minus)?,
        })
    }
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.plus, self.minus)
    }
}

impl FromStr for TreePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new("tree pair", s);
        let plus = p.tree()?;
        p.expect(';')?;
        let minus = p.tree()?;
        p.finish()?;
        TreePair::new(plus, minus)
    }
}
